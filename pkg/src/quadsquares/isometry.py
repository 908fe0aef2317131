"""Orientation-preserving plane isometries.

Points are Python complex numbers. A direct isometry is the affine map
``z -> rotor * z + offset`` with ``|rotor| == 1``.

Composition order: ``compose(f, g)`` applies ``g`` first, then ``f``, so
``compose_chain(r1, r2, r3)`` is the product ``r1 r2 r3`` acting on a point
from the right (``r3`` is applied first).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import reduce

from .errors import NoUniqueFixedPoint

DEFAULT_TOL = 1e-9
# below this |rotor - 1| the fixed point is not computed at all
SINGULAR_TOL = 1e-12


def point(x: float, y: float) -> complex:
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError(f"non-finite coordinates ({x}, {y})")
    return complex(x, y)


def as_point(p) -> complex:
    """Coerce a complex number or an (x, y) pair to a complex point."""
    if isinstance(p, complex):
        z = p
    elif isinstance(p, (int, float)):
        z = complex(p)
    else:
        x, y = p
        z = complex(float(x), float(y))
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite point {p!r}")
    return z


@dataclass(frozen=True)
class DirectIsometry:
    rotor: complex
    offset: complex = 0j

    def __post_init__(self):
        r = complex(self.rotor)
        m = abs(r)
        if not math.isfinite(m) or m == 0.0:
            raise ValueError(f"rotor must be a nonzero finite complex, got {self.rotor!r}")
        object.__setattr__(self, "rotor", r / m)
        object.__setattr__(self, "offset", complex(self.offset))

    def __call__(self, z):
        return self.rotor * z + self.offset

    @property
    def angle(self) -> float:
        return cmath.phase(self.rotor)


IDENTITY = DirectIsometry(1.0, 0j)


def apply(f: DirectIsometry, z) -> complex:
    return f(as_point(z))


def rotation_about(center, angle: float) -> DirectIsometry:
    """Rotation through ``angle`` (radians, counter-clockwise) about ``center``."""
    c = as_point(center)
    rotor = cmath.exp(1j * angle)
    return DirectIsometry(rotor, c - rotor * c)


def translation(vector) -> DirectIsometry:
    return DirectIsometry(1.0, as_point(vector))


def compose(outer: DirectIsometry, inner: DirectIsometry) -> DirectIsometry:
    """Return ``outer o inner``: ``inner`` is applied first."""
    return DirectIsometry(outer.rotor * inner.rotor, outer.rotor * inner.offset + outer.offset)


def compose_chain(*maps: DirectIsometry) -> DirectIsometry:
    """Product ``maps[0] maps[1] ... maps[-1]``; the last map acts first."""
    if not maps:
        return IDENTITY
    return reduce(compose, maps)


def inverse(f: DirectIsometry) -> DirectIsometry:
    inv = f.rotor.conjugate()
    return DirectIsometry(inv, -inv * f.offset)


@dataclass(frozen=True)
class Identity:
    pass


@dataclass(frozen=True)
class Translation:
    vector: complex


@dataclass(frozen=True)
class Rotation:
    center: complex
    angle: float  # in (-pi, pi]


def classify(f: DirectIsometry, tol: float = DEFAULT_TOL, scale: float = 1.0):
    """Classify ``f`` as :class:`Identity`, :class:`Translation` or :class:`Rotation`.

    ``tol`` is absolute on ``|rotor - 1|`` and relative to ``scale`` on the offset.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if abs(f.rotor - 1) <= tol:
        if abs(f.offset) <= tol * scale:
            return Identity()
        return Translation(f.offset)
    return Rotation(f.offset / (1 - f.rotor), cmath.phase(f.rotor))


@dataclass(frozen=True)
class FixedPoint:
    point: complex
    ill_conditioned: bool


def locate_fixed_point(f: DirectIsometry, scale: float = 1.0) -> FixedPoint:
    """Fixed point of ``f`` with a conditioning flag.

    Raises :class:`NoUniqueFixedPoint` when ``|rotor - 1| <= 1e-12``; between
    that and ``1e-9`` the point is still returned but flagged.
    """
    gap = abs(1 - f.rotor)
    if gap <= SINGULAR_TOL:
        kind = "identity" if abs(f.offset) <= DEFAULT_TOL * scale else "translation"
        raise NoUniqueFixedPoint(kind)
    return FixedPoint(f.offset / (1 - f.rotor), gap <= DEFAULT_TOL)


def fixed_point(f: DirectIsometry) -> complex:
    return locate_fixed_point(f).point
