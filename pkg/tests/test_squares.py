import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from quadsquares.errors import (
    DegenerateIntermediate,
    InsufficientPoints,
    InvalidOffsets,
    NotAdmissibleTuple,
    NotAParallelogram,
)
from quadsquares.quads import FAMILY_REPRESENTATIVES, AngleOffsets, Quadrilateral, distinct_vertex_sets, pivot_center
from quadsquares.squares import (
    ADMISSIBLE,
    SQUARE_OFFSETS,
    all_squares,
    as_parallelogram,
    center_lines,
    center_step,
    centers_parallelogram,
    central_symmetry_check,
    diagonal_parallel_check,
    four_distinct_squares,
    mirror_square,
    pivot_center_simplified,
    square,
    square_center,
    squares_from_any_quad,
)

from conftest import FIG1, FIG3, parallelograms, quads

TOL = 1e-9


@pytest.fixture
def qp3():
    return as_parallelogram(Quadrilateral(FIG3))


def is_square(sq, s, tol=TOL):
    return sq.side_spread <= tol * s and sq.right_angle_error <= tol


def test_fig3_accepted(qp3):
    assert qp3.center == pytest.approx(0.75 + 1j)


def test_fig1_rejected():
    with pytest.raises(NotAParallelogram) as exc:
        as_parallelogram(Quadrilateral(FIG1))
    # |a1 - a2 + a3 - a4| = |0 - 1 + (2+i) - (0.5+2i)| = |0.5 - i|
    assert exc.value.residual == pytest.approx(abs(0.5 - 1j))


def test_unit_square_center():
    assert as_parallelogram(Quadrilateral([0, 1, 1 + 1j, 1j])).center == pytest.approx(0.5 + 0.5j)


def test_fig3_square(qp3):
    sq = square(qp3, (1, 2, 3, 4), 0)
    assert is_square(sq, qp3.scale)
    assert sq.relation_residual <= TOL * qp3.scale
    assert not sq.is_degenerate(qp3.scale)


def test_non_admissible_tuple(qp3):
    with pytest.raises(NotAdmissibleTuple):
        square(qp3, (1, 3, 2, 4), 0)


def test_square_offsets(qp3):
    for m in SQUARE_OFFSETS:
        assert is_square(square(qp3, (1, 2, 3, 4), 0, AngleOffsets(m, 2)), qp3.scale)
    with pytest.raises(InvalidOffsets):
        square(qp3, (1, 2, 3, 4), 0, AngleOffsets((2, 1, 1, 0), 2))


def test_remark_offsets_are_exactly_the_conditions():
    from quadsquares.quads import offset_variants
    expected = {v.m for v in offset_variants(2)
                if v.m[0] == v.m[2] and v.m[1] == v.m[3] and (v.m[0] + v.m[1]) % 2 == 0}
    assert expected == set(SQUARE_OFFSETS)


def test_fig3_four_distinct(qp3):
    sqs = four_distinct_squares(qp3, 0)
    assert [s.perm for s in sqs] == [(1, 2, 3, 4), (3, 2, 1, 4), (3, 4, 1, 2), (1, 4, 3, 2)]
    assert len(all_squares(qp3, 0)) == 32
    assert len(distinct_vertex_sets([s.points for s in all_squares(qp3, 0)], TOL * qp3.scale)) == 4


def test_rectangle_squares():
    qp = as_parallelogram(Quadrilateral([0, 3, 3 + 1j, 1j]))
    for t in ADMISSIBLE:
        assert is_square(square(qp, t, 0), qp.scale)


def test_fig3_pivots(qp3):
    for j in (2, 4):
        piv = pivot_center_simplified(qp3, 1, j, 0)
        assert piv.line_distance(qp3[1], qp3[j]) < 1e-12
        assert piv.mu_i + piv.mu_j == pytest.approx(1.0, abs=1e-15)
        assert abs(piv.point - pivot_center(qp3.base, qp3.angles, 1, j, 0).point) <= 1e-12 * qp3.scale


def test_fig3_central_symmetry(qp3):
    c = central_symmetry_check(qp3, (1, 2, 3, 4), 0)
    assert c.passed
    # the literal reversed ordering is never a vertexwise image under a rotation
    assert c.detail["primed_vertexwise"] > 0.1 * qp3.scale


def test_square_center_midpoint(qp3):
    c = square_center(qp3, (1, 2, 3, 4), 0)
    sq = square(qp3, (1, 2, 3, 4), 0)
    assert abs(c.point - (sq.points[0] + sq.points[2]) / 2) <= 1e-12 * qp3.scale
    assert c.parity == "even" and square_center(qp3, (1, 2, 3, 4), 3).parity == "odd"


def test_fig4_even_centers_collinear(qp3):
    c0, c2, c4 = (square_center(qp3, (1, 2, 3, 4), n).point for n in (0, 2, 4))
    assert abs(((c2 - c0) * (c4 - c0).conjugate()).imag) <= TOL * qp3.scale ** 2


def test_fig3_center_lines(qp3):
    lines = center_lines(qp3, (1, 2, 3, 4), range(0, 6))
    assert [ln.parity for ln in lines] == ["even", "odd"]
    for ln in lines:
        assert ln.residual <= TOL * qp3.scale
        assert ln.perpendicular_error(qp3[1], qp3[2]) <= TOL
    with pytest.raises(InsufficientPoints):
        center_lines(qp3, (1, 2, 3, 4), range(0, 3))


def test_rectangle_center_lines_parallel_to_other_edges():
    qp = as_parallelogram(Quadrilateral([0, 3, 3 + 1j, 1j]))
    for ln in center_lines(qp, (1, 2, 3, 4), range(0, 6)):
        # a1 a2 is horizontal, so the other edge pair is vertical
        assert abs(ln.direction.real) <= TOL


def test_center_lines_extended(qp3):
    for ln in center_lines(qp3, (1, 2, 3, 4), range(-6, 7)):
        assert ln.residual <= TOL * qp3.scale


def test_fig3_diagonal(qp3):
    c = diagonal_parallel_check(qp3, (1, 2, 3, 4), 0)
    assert c.passed
    assert c.detail["imag_residual"] <= 1e-12
    assert c.detail["bracket_residual"] <= TOL


def test_fig3_centers_parallelogram(qp3):
    p = centers_parallelogram(qp3, 0)
    assert p.closure_residual <= TOL * qp3.scale
    assert abs(p.center - (0.75 + 1j)) <= TOL * qp3.scale


def test_rhombus_centers_parallelogram():
    w = cmath.exp(1j * math.pi / 3)
    qp = as_parallelogram(Quadrilateral([0, 1, 1 + w, w]))
    for n in range(-3, 4):
        assert centers_parallelogram(qp, n).closure_residual <= TOL * qp.scale


def test_composite_fig1():
    res = squares_from_any_quad(Quadrilateral(FIG1))
    t = res.intermediate.scale
    assert len(res.squares) == 4
    for sq in res.squares + [res.primary]:
        assert is_square(sq, t, 1e-7)


def test_composite_square_input():
    res = squares_from_any_quad(Quadrilateral([0, 1, 1 + 1j, 1j]))
    for sq in res.squares:
        assert is_square(sq, res.intermediate.scale, 1e-7)


@pytest.mark.parametrize("perm", FAMILY_REPRESENTATIVES)
def test_composite_every_first_stage(perm):
    res = squares_from_any_quad(Quadrilateral(FIG1), first_perm=perm)
    for sq in res.squares:
        assert is_square(sq, res.intermediate.scale, 1e-7)


def test_composite_degenerate_intermediate():
    # a square makes P_1324 collapse to a point
    with pytest.raises(DegenerateIntermediate):
        squares_from_any_quad(Quadrilateral([0, 1, 1 + 1j, 1j]), first_perm=(1, 3, 2, 4))


def test_off_parallelogram_is_not_square():
    q = Quadrilateral(FIG1)
    from quadsquares.quads import Construction
    p = Construction(q, 0).parallelogram((1, 2, 3, 4))
    sides = [abs(s) for s in p.sides()]
    assert max(sides) - min(sides) > TOL * q.scale


@settings(max_examples=30, deadline=None)
@given(parallelograms(), st.integers(-3, 3), st.sampled_from(ADMISSIBLE))
def test_theorem_two_properties(q, n, t):
    qp = as_parallelogram(q)
    s = qp.scale
    sq, msq = square(qp, t, n), mirror_square(qp, t, n)
    assert is_square(sq, s) and is_square(msq, s)
    assert sq.relation_residual <= TOL * s and msq.relation_residual <= TOL * s
    assert central_symmetry_check(qp, t, n).passed
    step = square_center(qp, t, n).point - square_center(qp, t, n - 2).point
    assert abs(step - center_step(qp, t, n)) <= TOL * s
    d = diagonal_parallel_check(qp, t, n)
    assert d.passed and d.detail["imag_residual"] <= 1e-12 and d.detail["bracket_residual"] <= TOL
    assert abs(pivot_center_simplified(qp, t[0], t[1], n).point
               - pivot_center(qp.base, qp.angles, t[0], t[1], n).point) <= 1e-12 * s
    cp = centers_parallelogram(qp, n, t)
    assert cp.closure_residual <= TOL * s and abs(cp.center - qp.center) <= TOL * s


@settings(max_examples=20, deadline=None)
@given(parallelograms())
def test_center_lines_property(q):
    qp = as_parallelogram(q)
    for ln in center_lines(qp, (1, 2, 3, 4), range(-3, 4)):
        assert ln.residual <= TOL * qp.scale
        assert ln.perpendicular_error(qp[1], qp[2]) <= TOL


@settings(max_examples=20, deadline=None)
@given(quads())
def test_composite_property(q):
    try:
        res = squares_from_any_quad(q)
    except DegenerateIntermediate:
        return
    for sq in res.squares + [res.primary]:
        assert is_square(sq, res.intermediate.scale, 1e-7)
