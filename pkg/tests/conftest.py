import cmath
import math

import pytest
from hypothesis import reject, strategies as st

from quadsquares.errors import DegenerateQuadrilateral
from quadsquares.quads import Quadrilateral

FIG1 = (0j, 1 + 0j, 2 + 1j, 0.5 + 2j)
FIG3 = (0j, 1 + 0j, 1.5 + 2j, 0.5 + 2j)

coord = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
points = st.builds(complex, coord, coord)
angles = st.floats(-20, 20, allow_nan=False, allow_infinity=False)


@st.composite
def quads(draw):
    verts = draw(st.lists(points, min_size=4, max_size=4))
    try:
        q = Quadrilateral(verts)
    except DegenerateQuadrilateral:
        reject()
    # keep away from near-degenerate shapes where angles lose all precision
    if abs(q.signed_area) < 1e-2 * q.scale ** 2:
        reject()
    return q


@st.composite
def parallelograms(draw):
    a1, a2, a3 = draw(st.lists(points, min_size=3, max_size=3))
    try:
        q = Quadrilateral([a1, a2, a3, a1 - a2 + a3])
    except DegenerateQuadrilateral:
        reject()
    if abs(q.signed_area) < 1e-2 * q.scale ** 2:
        reject()
    return q


@pytest.fixture
def fig1():
    return Quadrilateral(FIG1)


@pytest.fixture
def fig3():
    return Quadrilateral(FIG3)


def unit(angle):
    return cmath.exp(1j * angle)


def angle_close(a, b, tol=1e-9):
    return abs(math.remainder(a - b, 2 * math.pi)) <= tol
