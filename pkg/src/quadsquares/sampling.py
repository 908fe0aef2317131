"""Seeded random polygons, rejection-sampled to validity."""
from __future__ import annotations

import random

from .errors import DegeneratePolygon, DegenerateQuadrilateral, DegenerateTriangle, SamplingExhausted
from .extensions import Hexagon, Triangle
from .quads import Quadrilateral

BOX = 10.0
MAX_TRIES = 1000


def _pt(rng):
    return complex(rng.uniform(-BOX, BOX), rng.uniform(-BOX, BOX))


def _retry(make, rng, errors):
    for _ in range(MAX_TRIES):
        try:
            return make(rng)
        except errors:
            continue
    raise SamplingExhausted(f"no valid sample after {MAX_TRIES} tries")


def random_quad(rng: random.Random) -> Quadrilateral:
    return _retry(lambda r: Quadrilateral([_pt(r) for _ in range(4)]), rng, DegenerateQuadrilateral)


def random_parallelogram(rng: random.Random) -> Quadrilateral:
    def make(r):
        a1, a2, a3 = _pt(r), _pt(r), _pt(r)
        return Quadrilateral([a1, a2, a3, a1 - a2 + a3])

    return _retry(make, rng, DegenerateQuadrilateral)


def random_triangle(rng: random.Random, min_angle: float = 0.05) -> Triangle:
    def make(r):
        t = Triangle([_pt(r) for _ in range(3)])
        if min(t.angles) < min_angle:
            raise DegenerateTriangle("angle below threshold")
        return t

    return _retry(make, rng, DegenerateTriangle)


def random_hexagon(rng: random.Random) -> Hexagon:
    return _retry(lambda r: Hexagon([_pt(r) for _ in range(6)]), rng, DegeneratePolygon)


def off_parallelogram(rng: random.Random, min_violation: float = 0.01) -> Quadrilateral:
    """Random quadrilateral whose closure residual is at least ``min_violation * scale``."""
    def make(r):
        q = random_quad(r)
        if q.closure_residual < min_violation * q.scale:
            raise DegenerateQuadrilateral("too close to a parallelogram")
        return q

    return _retry(make, rng, DegenerateQuadrilateral)


SAMPLERS = {
    "quad": random_quad,
    "parallelogram": random_parallelogram,
    "triangle": random_triangle,
    "hexagon": random_hexagon,
}


def samples(kind: str, count: int, seed: int):
    rng = random.Random(seed)
    make = SAMPLERS[kind]
    return [make(rng) for _ in range(count)]
