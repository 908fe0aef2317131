"""Parallelograms from fixed points of products of vertex rotations.

For a simple quadrilateral with interior angles ``A_1..A_4`` and any integer
``n``, rotate about vertex ``i`` through ``(2n+1)/2 * A_i``. The product of
the four rotations in the order ``(i, j, k, l)`` has total angle
``(2n+1)*pi`` and therefore a unique fixed point ``b[ijkl, n]``. Grouping
these points as ``[b_ijkl, b_ijlk, b_jilk, b_jikl]`` always gives a
parallelogram.

Vertex and permutation indices are 1-based throughout the public API.
"""
from __future__ import annotations

import cmath
import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    DegeneratePolygon,
    DegenerateQuadrilateral,
    GeometryError,
    InvalidOffsets,
    NoUniqueFixedPoint,
    PivotUndefined,
)
from .isometry import (
    DEFAULT_TOL,
    DirectIsometry,
    as_point,
    compose_chain,
    locate_fixed_point,
    rotation_about,
)
from .polygon import interior_angles_of, scale_of, shoelace, validate_simple

PERMUTATIONS = tuple(itertools.permutations((1, 2, 3, 4)))

# one representative per distinct vertex set
FAMILY_REPRESENTATIVES = (
    (1, 2, 3, 4),
    (3, 4, 1, 2),
    (1, 3, 2, 4),
    (2, 4, 1, 3),
    (1, 4, 3, 2),
    (3, 2, 1, 4),
)


@dataclass(frozen=True)
class Quadrilateral:
    vertices: tuple

    def __post_init__(self):
        verts = tuple(as_point(p) for p in self.vertices)
        if len(verts) != 4:
            raise DegenerateQuadrilateral(f"expected 4 vertices, got {len(verts)}")
        try:
            validate_simple(verts)
        except DegeneratePolygon as exc:
            raise DegenerateQuadrilateral(str(exc)) from None
        object.__setattr__(self, "vertices", verts)

    def __getitem__(self, i: int) -> complex:
        """1-based vertex access."""
        return self.vertices[i - 1]

    @cached_property
    def scale(self) -> float:
        return scale_of(self.vertices)

    @property
    def signed_area(self) -> float:
        return shoelace(self.vertices)

    @property
    def closure_residual(self) -> float:
        a1, a2, a3, a4 = self.vertices
        return abs(a1 - a2 + a3 - a4)


@dataclass(frozen=True)
class InteriorAngles:
    angles: tuple
    ccw: bool = True

    def __getitem__(self, i: int) -> float:
        return self.angles[i - 1]

    def __iter__(self):
        return iter(self.angles)


def interior_angles(q: Quadrilateral) -> InteriorAngles:
    """Interior angles of ``q``; reflex vertices give values in (pi, 2*pi).

    Vertex labels are kept as given. ``ccw`` records the traversal direction
    of the input so callers can tell mirrored inputs apart.
    """
    angles, ccw = interior_angles_of(q.vertices)
    total = sum(angles)
    if abs(total - 2 * math.pi) > 1e-9:
        raise DegenerateQuadrilateral(f"interior angles sum to {total}, not 2*pi")
    return InteriorAngles(angles, ccw)


@dataclass(frozen=True)
class AngleOffsets:
    """Extra turns ``m_i * pi / M`` added to each vertex rotation.

    Indexed by vertex (``m[0]`` belongs to vertex 1). Valid offsets keep the
    total angle an odd multiple of pi, which requires ``sum(m) % (2M) == 0``.
    """

    m: tuple
    modulus: int = 2
    checked: bool = field(default=True, compare=False)

    def __post_init__(self):
        m = tuple(int(x) for x in self.m)
        object.__setattr__(self, "m", m)
        if len(m) != 4:
            raise InvalidOffsets(f"need 4 offsets, got {len(m)}")
        if self.modulus < 1:
            raise InvalidOffsets("modulus must be a positive integer")
        if self.checked and sum(m) % (2 * self.modulus):
            raise InvalidOffsets(
                f"offsets {m} sum to {sum(m)}, not a multiple of {2 * self.modulus}"
            )

    @classmethod
    def unchecked(cls, m, modulus=2):
        """Offsets without the sum condition, for probing degenerate products."""
        return cls(tuple(m), modulus, checked=False)

    def shift(self, i: int) -> float:
        return self.m[i - 1] * math.pi / self.modulus

    def multiset(self):
        return tuple(sorted(self.m, reverse=True))


def offset_variants(modulus: int):
    """All offsets ``0 <= m_i < 2M`` with ``sum(m) % 2M == 0``, lexicographic order."""
    if modulus < 1:
        raise InvalidOffsets("modulus must be >= 1")
    span = range(2 * modulus)
    return [
        AngleOffsets(m, modulus)
        for m in itertools.product(span, repeat=4)
        if sum(m) % (2 * modulus) == 0
    ]


def variant_histogram(variants):
    """Count of variants per multiset of offsets."""
    return Counter(v.multiset() for v in variants)


def _angles_for(q, angles):
    return interior_angles(q) if angles is None else angles


def alpha(angles: InteriorAngles, i: int, n: int) -> float:
    return (2 * n + 1) / 2 * angles[i]


def rotation_angles(angles: InteriorAngles, n: int, offsets: AngleOffsets | None = None):
    """The four rotation angles (vertex order), offsets included."""
    out = []
    for i in (1, 2, 3, 4):
        a = alpha(angles, i, n)
        if offsets is not None:
            a += offsets.shift(i)
        out.append(a)
    return tuple(out)


def vertex_rotation(q, angles, i, n, offsets=None) -> DirectIsometry:
    angles = _angles_for(q, angles)
    a = alpha(angles, i, n)
    if offsets is not None:
        a += offsets.shift(i)
    return rotation_about(q[i], a)


def _check_perm(perm):
    perm = tuple(perm)
    if sorted(perm) != [1, 2, 3, 4]:
        raise ValueError(f"{perm} is not a permutation of (1, 2, 3, 4)")
    return perm


def closed_form_b(vertices, alphas, perm) -> complex:
    """Fixed point of ``r_i r_j r_k r_l`` by the expanded product formula.

    ``vertices`` and ``alphas`` are indexed by vertex (0-based); ``perm`` is
    1-based. The denominator ``1 - exp(i*total)`` equals 2 whenever the total
    angle is an odd multiple of pi.
    """
    acc = 0j
    rot = 1 + 0j
    for p in perm:
        e = cmath.exp(1j * alphas[p - 1])
        acc += vertices[p - 1] * rot * (1 - e)
        rot *= e
    denom = 1 - rot
    if abs(denom) <= 1e-12:
        kind = "identity" if abs(acc) <= 1e-12 * scale_of(vertices) else "translation"
        raise NoUniqueFixedPoint(kind)
    return acc / denom


def composed_b(q, angles, perm, n, offsets=None) -> complex:
    """Fixed point of the explicitly composed chain of four vertex rotations."""
    angles = _angles_for(q, angles)
    chain = compose_chain(*(vertex_rotation(q, angles, p, n, offsets) for p in perm))
    return locate_fixed_point(chain, q.scale).point


def b_point(q, angles, perm, n, offsets=None, cross_check=False) -> complex:
    """Closed-form b-point for ``perm`` and family ``n``.

    With ``cross_check`` the composed-map fixed point is also computed and a
    disagreement above ``1e-9 * scale`` raises ``ArithmeticError``.
    """
    angles = _angles_for(q, angles)
    perm = _check_perm(perm)
    z = closed_form_b(q.vertices, rotation_angles(angles, n, offsets), perm)
    if cross_check:
        other = composed_b(q, angles, perm, n, offsets)
        if abs(z - other) > DEFAULT_TOL * q.scale:
            raise ArithmeticError(f"b-point paths disagree by {abs(z - other):.3e}")
    return z


def parallelogram_order(perm, reverse=False):
    """Permutations labelling the vertices of the parallelogram for ``perm``."""
    i, j, k, l = perm
    if reverse:
        return ((i, j, k, l), (j, i, k, l), (j, i, l, k), (i, j, l, k))
    return ((i, j, k, l), (i, j, l, k), (j, i, l, k), (j, i, k, l))


@dataclass(frozen=True)
class LabeledParallelogram:
    points: tuple
    perm: tuple
    n: int
    reversed: bool = False
    alphas: tuple = ()
    source: tuple = ()
    offsets: AngleOffsets | None = None

    @property
    def closure_residual(self) -> float:
        z1, z2, z3, z4 = self.points
        return abs(z1 - z2 + z3 - z4)

    @property
    def center(self) -> complex:
        return (self.points[0] + self.points[2]) / 2

    @property
    def area(self) -> float:
        z1, z2, _, z4 = self.points
        return ((z4 - z1) * (z2 - z1).conjugate()).imag

    def sides(self):
        z = self.points
        return tuple(z[(k + 1) % 4] - z[k] for k in range(4))


class Construction:
    """All 24 b-points of a quadrilateral for one family ``n``, computed once."""

    def __init__(self, q: Quadrilateral, n: int, offsets=None, angles=None):
        self.q = q
        self.n = n
        self.offsets = offsets
        self.angles = _angles_for(q, angles)
        self.alphas = rotation_angles(self.angles, n, offsets)

    @cached_property
    def b(self):
        return {p: closed_form_b(self.q.vertices, self.alphas, p) for p in PERMUTATIONS}

    def parallelogram(self, perm, reverse=False) -> LabeledParallelogram:
        perm = _check_perm(perm)
        pts = tuple(self.b[p] for p in parallelogram_order(perm, reverse))
        return LabeledParallelogram(
            pts, perm, self.n, reverse, self.alphas, self.q.vertices, self.offsets
        )


def parallelogram(q, angles, perm, n, offsets=None, reverse=False) -> LabeledParallelogram:
    perm = _check_perm(perm)
    angles = _angles_for(q, angles)
    alphas = rotation_angles(angles, n, offsets)
    pts = tuple(closed_form_b(q.vertices, alphas, p) for p in parallelogram_order(perm, reverse))
    return LabeledParallelogram(pts, perm, n, reverse, alphas, q.vertices, offsets)


def _close(p, q, tol):
    return abs(p - q) <= tol


def same_vertex_set(a, b, tol) -> bool:
    """Multiset equality of two point lists up to ``tol``."""
    if len(a) != len(b):
        return False
    remaining = list(b)
    for p in a:
        for idx, q in enumerate(remaining):
            if _close(p, q, tol):
                del remaining[idx]
                break
        else:
            return False
    return True


def distinct_vertex_sets(polys, tol):
    """Group point tuples by vertex set; returns one representative per group."""
    reps = []
    for poly in polys:
        if not any(same_vertex_set(poly, r, tol) for r in reps):
            reps.append(poly)
    return reps


def six_families(q, angles, n, offsets=None, check=True):
    """The six parallelograms with distinct vertex sets for family ``n``.

    With ``check`` the 24 permutations are swept and a ``GeometryError`` is
    raised if they do not collapse onto exactly these six vertex sets.
    """
    con = Construction(q, n, offsets, angles)
    fams = [con.parallelogram(p) for p in FAMILY_REPRESENTATIVES]
    if check:
        tol = DEFAULT_TOL * q.scale
        every = [con.parallelogram(p).points for p in PERMUTATIONS]
        reps = [f.points for f in fams]
        stray = [pts for pts in every if not any(same_vertex_set(pts, r, tol) for r in reps)]
        if stray:
            raise GeometryError(f"{len(stray)} parallelograms outside the six families")
    return fams


@dataclass(frozen=True)
class PivotCenter:
    point: complex
    mu_i: float
    mu_j: float
    edge: tuple
    n: int

    def line_distance(self, a: complex, b: complex) -> float:
        """Perpendicular distance of the pivot from the line through ``a`` and ``b``."""
        d = b - a
        return abs(((self.point - a) * d.conjugate()).imag) / abs(d)


def pivot_weights(ai: float, aj: float):
    """Real barycentric weights of the pivot from the cosine expressions."""
    denom = 2 * (1 - math.cos(ai + aj))
    mu_i = (1 - math.cos(ai) + math.cos(aj) - math.cos(ai + aj)) / denom
    mu_j = (1 - math.cos(aj) + math.cos(ai) - math.cos(ai + aj)) / denom
    return mu_i, mu_j


def pivot_weights_complex(ai: float, aj: float):
    """Same weights from the exponential expressions (complex, imaginary part ~0)."""
    ei, ej, eij = cmath.exp(1j * ai), cmath.exp(1j * aj), cmath.exp(1j * (ai + aj))
    denom = 2 * (1 - eij)
    return (1 - ei + ej - eij) / denom, (1 - ej + ei - eij) / denom


def pivot_direct(zi, zj, ai, aj) -> complex:
    ei, ej = cmath.exp(1j * ai), cmath.exp(1j * aj)
    return (zi * (1 - ei) * (1 + ej) + zj * (1 - ej) * (1 + ei)) / (2 * (1 - ei * ej))


def _pivot_angles(q, angles, i, j, n):
    angles = _angles_for(q, angles)
    ai, aj = alpha(angles, i, n), alpha(angles, j, n)
    if abs(1 - cmath.exp(1j * (ai + aj))) <= DEFAULT_TOL:
        raise PivotUndefined(f"rotation angles at vertices {i}, {j} sum to a multiple of 2*pi")
    return ai, aj


def pivot_center(q, angles, i, j, n) -> PivotCenter:
    ai, aj = _pivot_angles(q, angles, i, j, n)
    mu_i, mu_j = pivot_weights(ai, aj)
    return PivotCenter(pivot_direct(q[i], q[j], ai, aj), mu_i, mu_j, (i, j), n)


def congruence_rotation(q, angles, i, j, n) -> DirectIsometry:
    """Rotation through ``-(alpha_i + alpha_j)`` about the pivot of edge ``(i, j)``.

    It carries ``P[ijkl, n]`` vertexwise onto the reversed ``P[klji, n]``.
    """
    ai, aj = _pivot_angles(q, angles, i, j, n)
    return rotation_about(pivot_direct(q[i], q[j], ai, aj), -(ai + aj))


@dataclass(frozen=True)
class AreaDecomposition:
    area: float
    factor_im: float
    chord_product_re: float

    @property
    def residual(self) -> float:
        return abs(self.area - 0.25 * self.factor_im * self.chord_product_re)


def seven_sine_factor(ai, aj, ak) -> float:
    """Imaginary part of ``prod (1 - exp(-i*alpha))`` when the four angles sum to an odd multiple of pi."""
    return 2 * (
        math.sin(ai) + math.sin(aj) + math.sin(ak)
        - math.sin(ai + aj) - math.sin(ai + ak) - math.sin(aj + ak)
        + math.sin(ai + aj + ak)
    )


def signed_area(p: LabeledParallelogram) -> AreaDecomposition:
    """Signed area of ``p`` (positive when counter-clockwise) with its factorisation.

    The traversal sign of a reversed parallelogram is folded into
    ``chord_product_re``.
    """
    i, j, k, l = p.perm
    al = p.alphas
    z = p.source
    factor = seven_sine_factor(al[i - 1], al[j - 1], al[k - 1])
    chord = ((z[j - 1] - z[i - 1]) * (z[l - 1] - z[k - 1]).conjugate()).real
    if p.reversed:
        chord = -chord
    return AreaDecomposition(p.area, factor, chord)
