"""Morley's triangle via rotation fixed points, and the hexagon alternating sum."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DegeneratePolygon, DegenerateTriangle
from .isometry import as_point, compose_chain, locate_fixed_point, rotation_about
from .polygon import interior_angles_of, scale_of, shoelace, validate_simple

J = cmath.exp(2j * math.pi / 3)


@dataclass(frozen=True)
class Triangle:
    vertices: tuple

    def __post_init__(self):
        verts = tuple(as_point(p) for p in self.vertices)
        if len(verts) != 3:
            raise DegenerateTriangle(f"expected 3 vertices, got {len(verts)}")
        s = scale_of(verts)
        if s == 0 or abs(shoelace(verts)) < 1e-9 * s * s:
            raise DegenerateTriangle("triangle has (near) zero area")
        object.__setattr__(self, "vertices", verts)

    @property
    def scale(self) -> float:
        return scale_of(self.vertices)

    @property
    def ccw(self) -> bool:
        return shoelace(self.vertices) > 0

    @property
    def angles(self):
        return interior_angles_of(self.vertices)[0]


@dataclass(frozen=True)
class MorleyResult:
    points: tuple  # fix(g1 g2), fix(g2 g3), fix(g3 g1)
    j: complex

    @property
    def identity_residual(self) -> float:
        p, q, r = self.points
        return abs(p + self.j * q + self.j ** 2 * r)

    @property
    def side_spread(self) -> float:
        p, q, r = self.points
        sides = (abs(q - p), abs(r - q), abs(p - r))
        return max(sides) - min(sides)


def morley_points(t: Triangle) -> MorleyResult:
    """Fixed points of pairwise products of rotations through 2/3 of each angle.

    Rotations turn toward the interior, so a clockwise triangle uses negative
    angles and the conjugate cube root of unity.
    """
    sign = 1.0 if t.ccw else -1.0
    g = [rotation_about(a, sign * 2 * ang / 3) for a, ang in zip(t.vertices, t.angles)]
    pts = tuple(
        locate_fixed_point(compose_chain(g[k], g[(k + 1) % 3]), t.scale).point
        for k in range(3)
    )
    return MorleyResult(pts, J if t.ccw else J.conjugate())


@dataclass(frozen=True)
class Hexagon:
    vertices: tuple

    def __post_init__(self):
        verts = tuple(as_point(p) for p in self.vertices)
        if len(verts) != 6:
            raise DegeneratePolygon(f"expected 6 vertices, got {len(verts)}")
        validate_simple(verts)
        total = sum(interior_angles_of(verts)[0])
        if abs(total - 4 * math.pi) > 1e-9:
            raise DegeneratePolygon(f"interior angles sum to {total}, not 4*pi")
        object.__setattr__(self, "vertices", verts)

    @property
    def scale(self) -> float:
        return scale_of(self.vertices)

    @property
    def angles(self):
        return interior_angles_of(self.vertices)[0]


# signed terms of the alternating sum, 1-based orders
HEXAGON_TERMS = (
    ((1, 2, 3, 4, 5, 6), 1),
    ((1, 2, 3, 5, 6, 4), -1),
    ((2, 3, 1, 5, 6, 4), 1),
    ((2, 3, 1, 6, 4, 5), -1),
    ((3, 1, 2, 6, 4, 5), 1),
    ((3, 1, 2, 4, 5, 6), -1),
)

# second term with its first and fourth indices swapped; not an identity
PERTURBED_TERMS = (
    HEXAGON_TERMS[0],
    ((5, 2, 3, 1, 6, 4), -1),
) + HEXAGON_TERMS[2:]


def hexagon_rotations(h: Hexagon, n: int):
    return [rotation_about(a, (2 * n + 1) / 4 * ang) for a, ang in zip(h.vertices, h.angles)]


def hexagon_product(h: Hexagon, order, n: int, rotations=None):
    rots = rotations or hexagon_rotations(h, n)
    return compose_chain(*(rots[p - 1] for p in order))


def hexagon_b(h: Hexagon, order, n: int, rotations=None) -> complex:
    """Fixed point of the six-rotation product in ``order``."""
    return locate_fixed_point(hexagon_product(h, order, n, rotations), h.scale).point


def hexagon_relation_residual(h: Hexagon, n: int, terms=HEXAGON_TERMS) -> float:
    """Modulus of the signed sum of six-rotation fixed points over ``terms``."""
    rots = hexagon_rotations(h, n)
    return abs(sum(sign * hexagon_b(h, order, n, rots) for order, sign in terms))
