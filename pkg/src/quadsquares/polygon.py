"""Simple-polygon validation, orientation and interior angles."""
from __future__ import annotations

import cmath
import itertools
import math

from .errors import DegeneratePolygon

TURN_TOL = 1e-9
COINCIDENT_TOL = 1e-9


def scale_of(vertices) -> float:
    """Largest pairwise vertex distance; every residual tolerance is relative to it."""
    return max(abs(p - q) for p, q in itertools.combinations(vertices, 2))


def shoelace(vertices) -> float:
    """Signed area, positive for counter-clockwise traversal."""
    n = len(vertices)
    return 0.5 * sum(
        (vertices[k].conjugate() * vertices[(k + 1) % n]).imag for k in range(n)
    )


def cross(u: complex, v: complex) -> float:
    return u.real * v.imag - u.imag * v.real


def _orient(a, b, c) -> float:
    return cross(b - a, c - a)


def _sign(x: float, eps: float) -> int:
    if x > eps:
        return 1
    if x < -eps:
        return -1
    return 0


def _on_segment(a, b, p, eps) -> bool:
    return (
        min(a.real, b.real) - eps <= p.real <= max(a.real, b.real) + eps
        and min(a.imag, b.imag) - eps <= p.imag <= max(a.imag, b.imag) + eps
    )


def segments_intersect(a, b, c, d, eps: float = 0.0) -> bool:
    """Closed-segment intersection test for ``ab`` and ``cd``.

    ``eps`` is the area threshold under which an orientation counts as zero.
    """
    d1 = _sign(_orient(c, d, a), eps)
    d2 = _sign(_orient(c, d, b), eps)
    d3 = _sign(_orient(a, b, c), eps)
    d4 = _sign(_orient(a, b, d), eps)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    lin = math.sqrt(eps) if eps else 0.0
    if d1 == 0 and _on_segment(c, d, a, lin):
        return True
    if d2 == 0 and _on_segment(c, d, b, lin):
        return True
    if d3 == 0 and _on_segment(a, b, c, lin):
        return True
    if d4 == 0 and _on_segment(a, b, d, lin):
        return True
    return False


def validate_simple(vertices) -> None:
    """Raise :class:`DegeneratePolygon` unless the closed polygon is simple.

    Checks, in order: repeated vertices, zero turning angles at any vertex
    (collinear consecutive triple), and crossings between non-adjacent edges.
    """
    n = len(vertices)
    if n < 3:
        raise DegeneratePolygon(f"need at least 3 vertices, got {n}")
    s = scale_of(vertices)
    if not math.isfinite(s) or s <= 0:
        raise DegeneratePolygon("all vertices coincide")
    for (p, q) in itertools.combinations(range(n), 2):
        if abs(vertices[p] - vertices[q]) <= COINCIDENT_TOL * s:
            raise DegeneratePolygon(f"vertices {p + 1} and {q + 1} coincide")
    for turn in turning_angles(vertices):
        if abs(turn) <= TURN_TOL or abs(abs(turn) - math.pi) <= TURN_TOL:
            raise DegeneratePolygon("three consecutive vertices are collinear")
    eps = 1e-12 * s * s
    for p in range(n):
        for q in range(p + 2, n):
            if p == 0 and q == n - 1:
                continue
            a, b = vertices[p], vertices[(p + 1) % n]
            c, d = vertices[q], vertices[(q + 1) % n]
            if segments_intersect(a, b, c, d, eps):
                raise DegeneratePolygon(f"edges {p + 1} and {q + 1} cross")


def turning_angles(vertices):
    """Signed exterior turning angle at each vertex, in (-pi, pi]."""
    n = len(vertices)
    out = []
    for k in range(n):
        incoming = vertices[k] - vertices[k - 1]
        outgoing = vertices[(k + 1) % n] - vertices[k]
        out.append(cmath.phase(outgoing / incoming))
    return out


def interior_angles_of(vertices):
    """Interior angles in (0, 2*pi), independent of traversal direction.

    The turning angles are taken relative to counter-clockwise traversal, so
    reflex vertices give angles above pi. Vertex labels are never reordered.
    Returns ``(angles, ccw)``.
    """
    ccw = shoelace(vertices) > 0
    sign = 1.0 if ccw else -1.0
    return tuple(math.pi - sign * t for t in turning_angles(vertices)), ccw
