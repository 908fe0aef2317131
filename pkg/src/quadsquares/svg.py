"""Deterministic SVG figures of the input polygon and its constructions."""
from __future__ import annotations

from dataclasses import dataclass

from .quads import FAMILY_REPRESENTATIVES, Construction, Quadrilateral, interior_angles, pivot_center
from .squares import SQUARE_REPRESENTATIVES

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22",
)
WIDTH = 600.0
MARGIN = 0.10


@dataclass(frozen=True)
class FigureSpec:
    """Families to draw as ``(perm, n)`` pairs plus pivot points ``(i, j, n)``."""

    families: tuple
    pivots: tuple = ()
    title: str = ""
    strokes: tuple = PALETTE
    viewport: tuple | None = None  # (xmin, ymin, xmax, ymax); auto-fitted when None
    labels: bool = True


def default_figure(kind: str, ns, perm=None) -> FigureSpec:
    """Figure layouts for the four standard pictures.

    One ``n`` draws every distinct family with its pivots; several ``n`` draw
    one family across the range.
    """
    ns = list(ns)
    if len(ns) == 1:
        n = ns[0]
        if perm is not None:
            return FigureSpec(((tuple(perm), n),), ())
        if kind == "parallelogram":
            reps = SQUARE_REPRESENTATIVES
            pivots = ((1, 2, n), (1, 4, n))
        else:
            reps = FAMILY_REPRESENTATIVES
            pivots = ((1, 2, n), (1, 3, n), (1, 4, n))
        return FigureSpec(tuple((p, n) for p in reps), pivots)
    p = tuple(perm) if perm is not None else (1, 2, 3, 4)
    return FigureSpec(tuple((p, n) for n in ns), ())


def _fmt(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


def _polygon_tag(points, to_px, stroke, width, dash=None, label=None):
    pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (to_px(z) for z in points))
    extra = f' stroke-dasharray="{dash}"' if dash else ""
    title = f"<title>{label}</title>" if label else ""
    return (
        f'<polygon points="{pts}" fill="none" stroke="{stroke}" '
        f'stroke-width="{width}"{extra}>{title}</polygon>'
    )


def render_svg(q: Quadrilateral, spec: FigureSpec) -> str:
    angles = interior_angles(q)
    shapes = []
    cons = {}
    for perm, n in spec.families:
        con = cons.setdefault(n, Construction(q, n, angles=angles))
        shapes.append((perm, n, con.parallelogram(perm).points))
    pivots = []
    for i, j, n in spec.pivots:
        pivots.append((i, j, n, pivot_center(q, angles, i, j, n).point))

    if spec.viewport is not None:
        xmin, ymin, xmax, ymax = spec.viewport
    else:
        pts = list(q.vertices) + [z for *_, pts_ in shapes for z in pts_] + [p[3] for p in pivots]
        xmin = min(z.real for z in pts)
        xmax = max(z.real for z in pts)
        ymin = min(z.imag for z in pts)
        ymax = max(z.imag for z in pts)
        dx, dy = xmax - xmin or 1.0, ymax - ymin or 1.0
        xmin, xmax = xmin - MARGIN * dx, xmax + MARGIN * dx
        ymin, ymax = ymin - MARGIN * dy, ymax + MARGIN * dy
    k = WIDTH / (xmax - xmin)
    height = (ymax - ymin) * k

    def to_px(z):
        # y axis flipped so the picture keeps the mathematical orientation
        return (z.real - xmin) * k, (ymax - z.imag) * k

    font = max(10.0, WIDTH / 50)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(WIDTH)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(WIDTH)} {_fmt(height)}">',
    ]
    if spec.title:
        out.append(f"<title>{spec.title}</title>")
    out.append('<rect x="0" y="0" width="100%" height="100%" fill="white"/>')
    out.append('<g id="input">')
    out.append(_polygon_tag(q.vertices, to_px, "black", 2.0, label="P"))
    if spec.labels:
        for idx, z in enumerate(q.vertices, 1):
            x, y = to_px(z)
            out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="black"/>')
            out.append(
                f'<text x="{_fmt(x + 4)}" y="{_fmt(y - 4)}" font-size="{_fmt(font)}" '
                f'font-family="serif">a{idx}</text>'
            )
    out.append("</g>")
    out.append('<g id="constructions">')
    for idx, (perm, n, pts) in enumerate(shapes):
        stroke = spec.strokes[idx % len(spec.strokes)]
        name = "P_" + "".join(map(str, perm)) + f",{n}"
        out.append(_polygon_tag(pts, to_px, stroke, 1.5, label=name))
    out.append("</g>")
    if pivots:
        out.append('<g id="pivots">')
        for i, j, n, z in pivots:
            x, y = to_px(z)
            out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="none" stroke="black"/>')
            if spec.labels:
                out.append(
                    f'<text x="{_fmt(x + 4)}" y="{_fmt(y + font)}" font-size="{_fmt(font)}" '
                    f'font-family="serif">O{i}{j},{n}</text>'
                )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
