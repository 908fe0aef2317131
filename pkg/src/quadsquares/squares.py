"""Squares from parallelograms, and from any quadrilateral in two steps.

When the input quadrilateral is a parallelogram, the parallelogram
construction of :mod:`quadsquares.quads` yields squares for the eight
admissible index tuples ``(1,2,3,4)``, ``(1,4,3,2)`` and their cyclic
shifts. Applying the parallelogram construction to an arbitrary
quadrilateral and then the square construction to the result gives squares
from any quadrilateral.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    DegenerateIntermediate,
    DegenerateQuadrilateral,
    InsufficientPoints,
    InvalidOffsets,
    NotAdmissibleTuple,
    NotAParallelogram,
)
from .isometry import DEFAULT_TOL, rotation_about
from .quads import (
    AngleOffsets,
    Construction,
    InteriorAngles,
    LabeledParallelogram,
    PivotCenter,
    Quadrilateral,
    alpha,
    distinct_vertex_sets,
    interior_angles,
    same_vertex_set,
)
from .report import Check

ADMISSIBLE = (
    (1, 2, 3, 4),
    (2, 3, 4, 1),
    (3, 4, 1, 2),
    (4, 1, 2, 3),
    (1, 4, 3, 2),
    (4, 3, 2, 1),
    (3, 2, 1, 4),
    (2, 1, 4, 3),
)

SQUARE_REPRESENTATIVES = ((1, 2, 3, 4), (3, 2, 1, 4), (3, 4, 1, 2), (1, 4, 3, 2))

# (m1, m2, m3, m4) over modulus 2 that keep every admissible family square
SQUARE_OFFSETS = (
    (0, 0, 0, 0),
    (1, 1, 1, 1),
    (2, 2, 2, 2),
    (3, 3, 3, 3),
    (0, 2, 0, 2),
    (2, 0, 2, 0),
    (1, 3, 1, 3),
    (3, 1, 3, 1),
)

COMPOSITE_TOL = 1e-7


@dataclass(frozen=True)
class ParallelogramQuad:
    base: Quadrilateral
    center: complex
    angles: InteriorAngles
    residual: float

    @property
    def scale(self) -> float:
        return self.base.scale

    def __getitem__(self, i):
        return self.base[i]


def as_parallelogram(q: Quadrilateral, tol: float = DEFAULT_TOL) -> ParallelogramQuad:
    """Accept ``q`` as a parallelogram when ``|a1 - a2 + a3 - a4| <= tol * scale``.

    Also confirms the angle relations opposite angles equal and adjacent
    angles summing to pi, within the same tolerance.
    """
    residual = q.closure_residual
    if residual > tol * q.scale:
        raise NotAParallelogram(residual, tol * q.scale)
    angles = interior_angles(q)
    a = angles.angles
    # angle errors scale like residual / shortest side
    side = min(abs(q[i % 4 + 1] - q[i]) for i in (1, 2, 3, 4))
    angle_tol = max(tol, 10 * residual / side)
    relation = max(
        abs(a[0] - a[2]),
        abs(a[1] - a[3]),
        abs(alpha(angles, 1, 0) + alpha(angles, 2, 0) - math.pi / 2),
    )
    if relation > angle_tol:
        raise NotAParallelogram(relation, angle_tol)
    v = q.vertices
    return ParallelogramQuad(q, (v[0] + v[2]) / 2, angles, residual)


@lru_cache(maxsize=512)
def _construction(base, n, offsets, angles):
    return Construction(base, n, offsets, angles)


def _check_tuple(t):
    t = tuple(t)
    if t not in ADMISSIBLE:
        raise NotAdmissibleTuple(f"{t} is not one of the eight admissible tuples")
    return t


def check_square_offsets(offsets: AngleOffsets | None):
    if offsets is None:
        return
    if offsets.modulus != 2 or offsets.m not in SQUARE_OFFSETS:
        raise InvalidOffsets(f"offsets {offsets.m} (M={offsets.modulus}) do not preserve squares")


@dataclass(frozen=True)
class LabeledSquare(LabeledParallelogram):
    side: float = 0.0
    orientation: int = 1
    relation_residual: float = 0.0

    @property
    def side_spread(self) -> float:
        lengths = [abs(s) for s in self.sides()]
        return max(lengths) - min(lengths)

    @property
    def right_angle_error(self) -> float:
        """Largest deviation of an interior angle from pi/2, in radians."""
        s = self.sides()
        if min(abs(x) for x in s) == 0.0:
            return 0.0
        return max(
            abs(abs(cmath.phase(s[(k + 1) % 4] / s[k])) - math.pi / 2) for k in range(4)
        )

    def is_degenerate(self, scale: float, tol: float = DEFAULT_TOL) -> bool:
        return self.side <= tol * scale


def _make_square(p: LabeledParallelogram, perm) -> LabeledSquare:
    i, j, _, _ = perm
    b_ijkl, b_ijlk, _, b_jikl = (
        p.points if not p.reversed else (p.points[0], p.points[3], p.points[2], p.points[1])
    )
    # b_ijkl - b_ijlk = -exp(i(alpha_i + alpha_j)) (b_ijkl - b_jikl) for admissible
    # tuples, with the sign flipped for their (i, j, l, k) companions; for
    # alpha_i + alpha_j = (2n+1) pi/2 the factor is -(-1)^n i
    sign = -1 if perm in ADMISSIBLE else 1
    factor = sign * cmath.exp(1j * (p.alphas[i - 1] + p.alphas[j - 1]))
    relation = abs((b_ijkl - b_ijlk) - factor * (b_ijkl - b_jikl))
    lengths = [abs(s) for s in p.sides()]
    return LabeledSquare(
        p.points, p.perm, p.n, p.reversed, p.alphas, p.source, p.offsets,
        side=sum(lengths) / 4,
        orientation=1 if p.area >= 0 else -1,
        relation_residual=relation,
    )


def square(qp: ParallelogramQuad, t, n: int, offsets=None, reverse=False) -> LabeledSquare:
    t = _check_tuple(t)
    check_square_offsets(offsets)
    con = _construction(qp.base, n, offsets, qp.angles)
    return _make_square(con.parallelogram(t, reverse), t)


def mirror_square(qp: ParallelogramQuad, t, n: int, offsets=None) -> LabeledSquare:
    """The companion square ``P[ijlk, n]`` ordered ``[b_ijlk, b_ijkl, b_jikl, b_jilk]``."""
    i, j, k, l = _check_tuple(t)
    check_square_offsets(offsets)
    con = _construction(qp.base, n, offsets, qp.angles)
    return _make_square(con.parallelogram((i, j, l, k)), (i, j, l, k))


def all_squares(qp: ParallelogramQuad, n: int, offsets=None):
    """Every square of family ``n``: 8 tuples, each as P, P', P_ijlk and P_ijlk'."""
    check_square_offsets(offsets)
    con = _construction(qp.base, n, offsets, qp.angles)
    out = []
    for t in ADMISSIBLE:
        i, j, k, l = t
        for perm in (t, (i, j, l, k)):
            for rev in (False, True):
                out.append(_make_square(con.parallelogram(perm, rev), perm))
    return out


def four_distinct_squares(qp: ParallelogramQuad, n: int, offsets=None, check=True):
    """The four squares of family ``n`` with distinct vertex sets.

    With ``check``, all 32 squares are swept and a ``ValueError`` is raised
    unless they collapse onto exactly the four returned vertex sets.
    """
    check_square_offsets(offsets)
    con = _construction(qp.base, n, offsets, qp.angles)
    reps = [_make_square(con.parallelogram(t), t) for t in SQUARE_REPRESENTATIVES]
    if check:
        tol = DEFAULT_TOL * qp.scale
        every = [s.points for s in all_squares(qp, n, offsets)]
        groups = distinct_vertex_sets([r.points for r in reps] + every, tol)
        if len(groups) != len(distinct_vertex_sets([r.points for r in reps], tol)):
            raise ValueError("squares do not collapse onto four vertex sets")
    return reps


def pivot_center_simplified(qp: ParallelogramQuad, i: int, j: int, n: int) -> PivotCenter:
    """Pivot of edge ``(i, j)`` from the real-weight form valid for parallelograms."""
    a = alpha(qp.angles, i, n)
    sgn = -1 if n % 2 else 1
    mu_i = (1 - math.cos(a) + sgn * math.sin(a)) / 2
    mu_j = (1 + math.cos(a) - sgn * math.sin(a)) / 2
    return PivotCenter(mu_i * qp[i] + mu_j * qp[j], mu_i, mu_j, (i, j), n)


def square_congruence_rotation(qp: ParallelogramQuad, i: int, j: int, n: int):
    piv = pivot_center_simplified(qp, i, j, n)
    return rotation_about(piv.point, -(2 * n + 1) * math.pi / 2)


def central_symmetry_check(qp: ParallelogramQuad, t, n: int, tol: float = DEFAULT_TOL) -> Check:
    """Half turn about the parallelogram center applied to ``P[ijkl, n]``.

    The half turn sends ``b_ijkl`` to ``b_klij`` (midpoint identity) and the
    whole square onto ``P[klij, n]`` vertex by vertex; as a vertex set this is
    also ``P'[klij, n]``. A rotation keeps orientation, so the image never
    matches the reversed ordering vertex by vertex; that residual is reported
    as ``primed_vertexwise`` and is not part of the pass criterion.
    """
    i, j, k, l = _check_tuple(t)
    con = _construction(qp.base, n, None, qp.angles)
    half = rotation_about(qp.center, math.pi)
    image = [half(p) for p in con.parallelogram(t).points]
    same = con.parallelogram((k, l, i, j)).points
    primed = con.parallelogram((k, l, i, j), reverse=True).points
    vertexwise = max(abs(p - q) for p, q in zip(image, same))
    primed_vertexwise = max(abs(p - q) for p, q in zip(image, primed))
    as_set = 0.0 if same_vertex_set(image, primed, tol * qp.scale) else math.inf
    midpoint = abs((con.b[t] + con.b[(k, l, i, j)]) / 2 - (qp[i] + qp[k]) / 2)
    return Check(
        "central symmetry",
        max(vertexwise, midpoint, as_set),
        tol * qp.scale,
        {
            "vertexwise": vertexwise,
            "midpoint": midpoint,
            "primed_vertex_set": as_set,
            "primed_vertexwise": primed_vertexwise,
        },
    )


@dataclass(frozen=True)
class SquareCenter:
    point: complex
    tuple: tuple
    n: int

    @property
    def parity(self) -> str:
        return "odd" if self.n % 2 else "even"


def square_center(qp: ParallelogramQuad, t, n: int) -> SquareCenter:
    i, j, k, l = _check_tuple(t)
    con = _construction(qp.base, n, None, qp.angles)
    return SquareCenter((con.b[t] + con.b[(j, i, l, k)]) / 2, t, n)


def center_step(qp: ParallelogramQuad, t, n: int) -> complex:
    """Predicted displacement from the center of family ``n - 2`` to family ``n``."""
    i, j, _, _ = _check_tuple(t)
    a_prev = alpha(qp.angles, i, n - 1)
    sgn = -1 if n % 2 else 1
    coeff = math.sin(qp.angles[i]) * (math.cos(a_prev) + sgn * math.sin(a_prev))
    return 1j * coeff * (qp[j] - qp[i])


@dataclass(frozen=True)
class CenterLine:
    anchor: complex
    direction: complex
    parity: str
    edge: tuple
    residual: float
    degenerate: bool = False

    def perpendicular_error(self, a: complex, b: complex) -> float:
        """Angle (radians) by which the line misses being perpendicular to ``ab``."""
        d = (b - a) / abs(b - a)
        c = abs((self.direction * d.conjugate()).real)
        return math.asin(min(1.0, c))


def _fit_line(points, parity, edge, perp_hint, tol):
    pts = np.array([[p.real, p.imag] for p in points])
    centroid = pts.mean(axis=0)
    centered = pts - centroid
    spread = np.abs(centered).max()
    anchor = complex(*centroid)
    if spread <= tol:
        # all centers coincide; the theorem's direction is the only sensible one
        return CenterLine(anchor, perp_hint, parity, edge, float(spread), True)
    _, _, vt = np.linalg.svd(centered, full_matrices=False)
    u = complex(*vt[0])
    if (u * perp_hint.conjugate()).real < 0:
        u = -u
    normal = np.array([-u.imag, u.real])
    residual = float(np.abs(centered @ normal).max())
    return CenterLine(anchor, u, parity, edge, residual, False)


def center_lines(qp: ParallelogramQuad, t, n_range, tol: float = DEFAULT_TOL):
    """Principal-axis lines through the even-``n`` and odd-``n`` square centers."""
    t = _check_tuple(t)
    ns = sorted(set(n_range))
    evens = [n for n in ns if n % 2 == 0]
    odds = [n for n in ns if n % 2]
    if len(evens) < 2 or len(odds) < 2:
        raise InsufficientPoints("need at least two even and two odd values of n")
    i, j = t[0], t[1]
    d = qp[j] - qp[i]
    perp = 1j * d / abs(d)
    lines = []
    for parity, group in (("even", evens), ("odd", odds)):
        pts = [square_center(qp, t, n).point for n in group]
        lines.append(_fit_line(pts, parity, (i, j), perp, tol * qp.scale))
    return tuple(lines)


def diagonal_parallel_check(qp: ParallelogramQuad, t, n: int, tol: float = DEFAULT_TOL) -> Check:
    """Diagonal ``b_ijkl b_jilk`` is a real multiple of ``a_i - a_j``."""
    i, j, k, l = _check_tuple(t)
    con = _construction(qp.base, n, None, qp.angles)
    diag = con.b[t] - con.b[(j, i, l, k)]
    edge = qp[i] - qp[j]
    cross = abs((diag * edge.conjugate()).imag)
    coeff = diag / edge
    a = alpha(qp.angles, i, n)
    sgn = -1 if n % 2 else 1
    bracket = 1 - math.cos(a) - sgn * math.sin(a)
    return Check(
        "diagonal parallel",
        cross,
        tol * qp.scale ** 2,
        {
            "coefficient": coeff.real,
            "imag_residual": abs(coeff.imag),
            "bracket": bracket,
            "bracket_residual": abs(coeff.real - bracket),
        },
    )


def centers_parallelogram(qp: ParallelogramQuad, n: int, t=(1, 2, 3, 4)) -> LabeledParallelogram:
    """``[C_ijkl, C_kjil, C_klij, C_ilkj]`` for family ``n``; centered on the input's center."""
    i, j, k, l = _check_tuple(t)
    order = ((i, j, k, l), (k, j, i, l), (k, l, i, j), (i, l, k, j))
    pts = tuple(square_center(qp, o, n).point for o in order)
    return LabeledParallelogram(pts, t, n, False, (), qp.base.vertices)


@dataclass(frozen=True)
class CompositeResult:
    stage1: LabeledParallelogram
    intermediate: ParallelogramQuad
    squares: list
    primary: LabeledSquare
    vertex_order: str = "b_ijkl, b_ijlk, b_jilk, b_jikl"


def squares_from_any_quad(
    q: Quadrilateral,
    first_perm=(1, 2, 3, 4),
    first_n: int = 0,
    second_tuple=(1, 2, 3, 4),
    second_n: int = 0,
    tol: float = COMPOSITE_TOL,
) -> CompositeResult:
    """Apply the parallelogram construction, then the square construction.

    The stage-1 parallelogram's vertices are used in stored order as the new
    ``a_1..a_4``; negatively oriented intermediates are consumed as they are.
    """
    second_tuple = _check_tuple(second_tuple)
    stage1 = Construction(q, first_n).parallelogram(first_perm)
    if abs(stage1.area) <= DEFAULT_TOL * q.scale ** 2:
        raise DegenerateIntermediate(f"stage-1 parallelogram has area {stage1.area:.3e}")
    try:
        base = Quadrilateral(stage1.points)
        qp = as_parallelogram(base, tol)
    except (DegenerateQuadrilateral, NotAParallelogram) as exc:
        raise DegenerateIntermediate(str(exc)) from None
    squares = four_distinct_squares(qp, second_n, check=False)
    primary = square(qp, second_tuple, second_n)
    return CompositeResult(stage1, qp, squares, primary)
