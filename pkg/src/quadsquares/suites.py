"""Invariant suites per polygon kind, returning scale-relative :class:`Check` records.

Lengths are divided by the polygon scale and areas by its square, so one
tolerance applies to every instance of a sweep.
"""
from __future__ import annotations

import cmath
import math

from .errors import GeometryError, NoUniqueFixedPoint, PivotUndefined
from .extensions import (
    PERTURBED_TERMS,
    Hexagon,
    Triangle,
    hexagon_product,
    hexagon_relation_residual,
    hexagon_rotations,
    morley_points,
)
from .isometry import DEFAULT_TOL, compose, compose_chain
from .quads import (
    FAMILY_REPRESENTATIVES,
    PERMUTATIONS,
    Construction,
    Quadrilateral,
    congruence_rotation,
    distinct_vertex_sets,
    interior_angles,
    offset_variants,
    pivot_center,
    pivot_weights_complex,
    signed_area,
    vertex_rotation,
)
from .report import Check
from .squares import (
    ADMISSIBLE,
    COMPOSITE_TOL,
    SQUARE_OFFSETS,
    SQUARE_REPRESENTATIVES,
    AngleOffsets,
    as_parallelogram,
    center_lines,
    center_step,
    centers_parallelogram,
    central_symmetry_check,
    diagonal_parallel_check,
    mirror_square,
    pivot_center_simplified,
    square,
    square_center,
    squares_from_any_quad,
)

NEGATIVE_CONTROL_THRESHOLD = 1e-3
NEGATIVE_CONTROL_RATE = 0.05
EXACT_TOL = 1e-12

PAIRS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


def _involution_residual(f, scale):
    ff = compose(f, f)
    return max(abs(ff.rotor - 1), abs(ff.offset) / scale)


def quad_suite(q: Quadrilateral, ns=range(-3, 4), perms=PERMUTATIONS, tol=DEFAULT_TOL):
    """Parallelogram-family identities for one quadrilateral."""
    s = q.scale
    angles = interior_angles(q)
    out = []

    def add(name, anchor, residual, tolerance=tol, **detail):
        out.append(Check(name, residual, tolerance, detail, anchor))

    for n in ns:
        con = Construction(q, n, angles=angles)
        mirror = Construction(q, -n - 1, angles=angles)
        al = con.alphas
        for perm in perms:
            i, j, k, l = perm
            p = con.parallelogram(perm)
            add("parallelogram closure", "b_ijkl - b_ijlk + b_jilk - b_jikl = 0", p.closure_residual / s)

            chain = compose_chain(*(vertex_rotation(q, angles, x, n) for x in perm))
            try:
                composed = chain.offset / (1 - chain.rotor)
                dual = abs(composed - con.b[perm]) / s
            except ZeroDivisionError:
                dual = math.inf
            add("b-point dual oracle", "closed form vs composed fixed point", dual)
            add("four-rotation involution", "four-rotation product is an involution", _involution_residual(chain, s))
            add(
                "b-point reflection symmetry",
                "b_ijkl,n = b_lkji,-n-1",
                abs(con.b[perm] - mirror.b[(l, k, j, i)]) / s,
            )
            e = [cmath.exp(1j * x) for x in al]
            z = q.vertices
            side1 = 0.5 * (1 - e[i - 1]) * (1 - e[j - 1]) * (z[j - 1] - z[i - 1])
            side2 = 0.5 * e[i - 1] * e[j - 1] * (1 - e[k - 1]) * (1 - e[l - 1]) * (z[l - 1] - z[k - 1])
            add(
                "side vector formulas",
                "side vectors from the closed form",
                max(
                    abs(con.b[(j, i, k, l)] - con.b[perm] - side1),
                    abs(con.b[(i, j, l, k)] - con.b[perm] - side2),
                ) / s,
            )
            try:
                rot = congruence_rotation(q, angles, i, j, n)
                target = con.parallelogram((k, l, j, i), reverse=True).points
                cong = max(abs(rot(a) - b) for a, b in zip(p.points, target)) / s
            except PivotUndefined:
                cong = math.inf
            add("congruence rotation", "R_ij,n P_ijkl,n = P'_klji,n", cong)

            area = signed_area(p)
            add(
                "area additivity",
                "A_ijkl = A_ikjl + A_ilkj",
                abs(
                    area.area
                    - con.parallelogram((i, k, j, l)).area
                    - con.parallelogram((i, l, k, j)).area
                ) / s ** 2,
            )
            add(
                "area family symmetry",
                "A_ijkl,n = A_ijlk,-n-1",
                abs(area.area - mirror.parallelogram((i, j, l, k)).area) / s ** 2,
            )
            add("area factorisation", "A = Im(I) Re(chord product) / 4", area.residual / s ** 2)
            expected = math.copysign(1, area.factor_im * area.chord_product_re)
            add(
                "orientation consistency",
                "sign of area equals sign of factorisation",
                0.0 if abs(area.area) <= tol * s * s or math.copysign(1, area.area) == expected else 1.0,
                0.5,
            )

        for i, j in PAIRS:
            try:
                piv = pivot_center(q, angles, i, j, n)
                twin = pivot_center(q, angles, i, j, -n - 1)
            except PivotUndefined:
                add("pivot collinear", "O_ij,n on line a_i a_j", math.inf)
                continue
            add("pivot collinear", "O_ij,n on line a_i a_j", piv.line_distance(q[i], q[j]) / s)
            add("pivot family symmetry", "O_ij,n = O_ij,-n-1", abs(piv.point - twin.point) / s)
            mu_i, mu_j = pivot_weights_complex(al[i - 1], al[j - 1])
            # cosine and exponential weights lose accuracy like eps / |1 - exp(i(ai + aj))|^2
            gap = abs(1 - cmath.exp(1j * (al[i - 1] + al[j - 1])))
            cond = max(1.0, (abs(piv.mu_i) + abs(piv.mu_j)) / gap ** 2)
            add(
                "pivot barycentric form",
                "O_ij,n = mu_i a_i + mu_j a_j, real weights",
                max(
                    abs(piv.point - (piv.mu_i * q[i] + piv.mu_j * q[j])) / s,
                    abs(mu_i - piv.mu_i),
                    abs(mu_j - piv.mu_j),
                    abs(piv.mu_i + piv.mu_j - 1),
                ) / cond,
                EXACT_TOL,
                condition=cond,
            )

        every = [con.parallelogram(p).points for p in PERMUTATIONS]
        reps = [con.parallelogram(p).points for p in FAMILY_REPRESENTATIVES]
        groups = distinct_vertex_sets(reps + every, tol * s)
        add(
            "six distinct vertex sets",
            "24 permutations collapse to six vertex sets",
            float(abs(len(groups) - 6)),
            0.5,
            distinct=len(groups),
        )

    worst = 0.0
    for variant in offset_variants(2):
        try:
            p = Construction(q, 0, variant, angles).parallelogram((1, 2, 3, 4))
            worst = max(worst, p.closure_residual / s)
        except NoUniqueFixedPoint:
            worst = math.inf
    add("offset variant closure", "64 offset variants for M = 2", worst, variants=64)

    try:
        res = squares_from_any_quad(q)
        t = res.intermediate.scale
        sq = res.squares + [res.primary]
        spread = max(x.side_spread for x in sq) / t
        right = max(x.right_angle_error for x in sq)
        rel = max(x.relation_residual for x in sq) / t
    except GeometryError:
        spread = right = rel = math.inf
    add("composite squares", "two-step squares from any quadrilateral", max(spread, right, rel),
        COMPOSITE_TOL)
    return out


def figure_orientations(q: Quadrilateral, n: int = 0):
    """Signed area of each of the six representative families."""
    con = Construction(q, n)
    return {
        "P_" + "".join(map(str, p)): con.parallelogram(p).area for p in FAMILY_REPRESENTATIVES
    }


def parallelogram_suite(q: Quadrilateral, ns=range(-3, 4), tol=DEFAULT_TOL, include_quad=True):
    """Square-family identities; a non-parallelogram input yields one failed check."""
    out = []
    residual = q.closure_residual / q.scale
    if residual > tol:
        out.append(Check("input is a parallelogram", residual, tol,
                         {"error": "NotAParallelogram"}, "closure a_1 - a_2 + a_3 - a_4 = 0"))
        return out
    qp = as_parallelogram(q, tol)
    s = qp.scale
    out.append(Check("input is a parallelogram", residual, tol, {}, "closure a_1 - a_2 + a_3 - a_4 = 0"))
    if include_quad:
        out.extend(quad_suite(q, ns, tol=tol))

    def add(name, anchor, residual, tolerance=tol, **detail):
        out.append(Check(name, residual, tolerance, detail, anchor))

    for n in ns:
        for t in ADMISSIBLE:
            i, j, k, l = t
            sq = square(qp, t, n)
            msq = mirror_square(qp, t, n)
            add("square side equality", "P_ijkl,n is a square", max(sq.side_spread, msq.side_spread) / s)
            add("square right angle", "P_ijkl,n is a square", max(sq.right_angle_error, msq.right_angle_error))
            add("square defining relation", "b_ijkl - b_ijlk = -(-1)^n i (b_ijkl - b_jikl)", sq.relation_residual / s)
            add("companion square relation", "P_ijlk,n is a square", msq.relation_residual / s)
            simple = pivot_center_simplified(qp, i, j, n)
            general = pivot_center(qp.base, qp.angles, i, j, n)
            add("pivot simplified form", "simplified pivot of a parallelogram", abs(simple.point - general.point) / s,
                EXACT_TOL)
            sym = central_symmetry_check(qp, t, n, tol)
            add("central symmetry", "half turn about C maps P_ijkl,n to P_klij,n", sym.residual / s)
            step = square_center(qp, t, n).point - square_center(qp, t, n - 2).point
            add("center step", "C_ijkl,n - C_ijkl,n-2", abs(step - center_step(qp, t, n)) / s)
            dia = diagonal_parallel_check(qp, t, n, tol)
            add("diagonal parallel", "diagonal b_ijkl b_jilk parallel to a_i a_j", dia.residual / s ** 2)
            add("diagonal coefficient real", "diagonal is a real multiple of a_i - a_j",
                dia.detail["imag_residual"], EXACT_TOL)
            add("diagonal coefficient bracket", "coefficient 1 - cos a - (-1)^n sin a",
                dia.detail["bracket_residual"])
            for m in SQUARE_OFFSETS:
                osq = square(qp, t, n, AngleOffsets(m, 2))
                add("offset squares", "eight square-preserving offsets",
                    max(osq.side_spread / s, osq.right_angle_error, osq.relation_residual / s))
        cp = centers_parallelogram(qp, n)
        add("centers parallelogram closure", "centers of P_n form a parallelogram", cp.closure_residual / s)
        add("centers parallelogram center", "center of P_n is C", abs(cp.center - qp.center) / s)
        reps = [square(qp, t, n).points for t in SQUARE_REPRESENTATIVES]
        every = []
        for t in ADMISSIBLE:
            for rev in (False, True):
                every.append(square(qp, t, n, reverse=rev).points)
            every.append(mirror_square(qp, t, n).points)
        groups = distinct_vertex_sets(reps + every, tol * s)
        add("four distinct vertex sets", "32 squares collapse to four vertex sets",
            float(abs(len(groups) - 4)), 0.5, distinct=len(groups))

    ns_list = list(ns)
    if sum(1 for n in ns_list if n % 2 == 0) >= 2 and sum(1 for n in ns_list if n % 2) >= 2:
        for t in SQUARE_REPRESENTATIVES:
            i, j = t[0], t[1]
            for line in center_lines(qp, t, ns_list, tol):
                add("center line collinearity", "centers lie on two lines by parity of n", line.residual / s)
                add("center line perpendicular", "center lines perpendicular to a_i a_j",
                    line.perpendicular_error(qp[i], qp[j]))
    return out


def triangle_suite(t: Triangle, tol=DEFAULT_TOL):
    m = morley_points(t)
    s = t.scale
    return [
        Check("morley identity", m.identity_residual / s, tol, {}, "fix(g1g2) + j fix(g2g3) + j^2 fix(g3g1) = 0"),
        Check("morley equilateral", m.side_spread / s, tol, {}, "Morley triangle equilateral"),
    ]


def hexagon_suite(h: Hexagon, ns=range(-2, 3), tol=DEFAULT_TOL):
    s = h.scale
    out = []
    for n in ns:
        out.append(Check("hexagon alternating sum", hexagon_relation_residual(h, n) / s, tol, {},
                         "six-term alternating sum vanishes"))
        rots = hexagon_rotations(h, n)
        f = hexagon_product(h, (1, 2, 3, 4, 5, 6), n, rots)
        out.append(Check("six-rotation involution", _involution_residual(f, s), tol, {},
                         "product of six rotations is an involution"))
    perturbed = hexagon_relation_residual(h, 0, PERTURBED_TERMS) / s
    out.append(Check(
        "negative control rate",
        0.0 if perturbed > NEGATIVE_CONTROL_THRESHOLD else 1.0,
        NEGATIVE_CONTROL_RATE,
        {},
        "permuted sum must not vanish (calibration, not a theorem)",
        "mean",
    ))
    return out
