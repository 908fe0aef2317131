"""Write the four standard figures as SVG files.

    python scripts/reproduce_figures.py [outdir]
"""
import pathlib
import sys

from quadsquares.quads import Quadrilateral
from quadsquares.svg import FigureSpec, default_figure, render_svg

QUAD = Quadrilateral([0, 1, 2 + 1j, 0.5 + 2j])
PARA = Quadrilateral([0, 1, 1.5 + 2j, 0.5 + 2j])

FIGURES = {
    "figure1_parallelograms.svg": (QUAD, default_figure("quad", [0])),
    "figure2_family_n0_5.svg": (QUAD, default_figure("quad", range(6))),
    "figure3_squares.svg": (PARA, default_figure("parallelogram", [0])),
    "figure4_squares_n0_5.svg": (PARA, default_figure("parallelogram", range(6))),
}


def main(outdir="figures"):
    out = pathlib.Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, (q, spec) in FIGURES.items():
        spec = FigureSpec(spec.families, spec.pivots, title=name[:-4])
        (out / name).write_text(render_svg(q, spec), encoding="utf-8")
        print(out / name)


if __name__ == "__main__":
    main(*sys.argv[1:])
