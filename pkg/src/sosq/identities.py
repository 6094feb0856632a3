"""Exact composition laws for sums of two and four squares.

A product of two sums of two squares is again a sum of two squares, and
likewise for four; the composed components are bilinear in the inputs.
Everything here is plain Python integer arithmetic, so the norm product
law holds with equality, never approximately.

The four-component law is used only for its norm property; no group
structure (associativity, inverses) is claimed or relied upon.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "IntPair",
    "IntQuad",
    "compose_two",
    "compose_four",
    "compose_two_raw",
    "compose_four_raw",
    "norm2",
    "norm4",
]


@dataclass(frozen=True)
class IntPair:
    """Integer pair (x, y); norm2 is x^2 + y^2, computed exactly."""

    x: int
    y: int

    def __post_init__(self) -> None:
        if not isinstance(self.x, int) or not isinstance(self.y, int):
            raise TypeError("IntPair components must be integers")


@dataclass(frozen=True)
class IntQuad:
    """Integer quadruple (x, y, z, w); norm4 is the exact sum of squares."""

    x: int
    y: int
    z: int
    w: int

    def __post_init__(self) -> None:
        for v in (self.x, self.y, self.z, self.w):
            if not isinstance(v, int):
                raise TypeError("IntQuad components must be integers")


def compose_two_raw(x1, y1, x2, y2):
    """Two-square composition on raw components; works for any numeric type."""
    return x1 * x2 + y1 * y2, x1 * y2 - y1 * x2


def compose_four_raw(x1, y1, z1, w1, x2, y2, z2, w2):
    """Four-square composition on raw components.

    The last three outputs are grouped into differences of mirrored products
    so that composing a tuple with itself yields exact floating-point zeros
    there; the grouping does not change the algebraic value.
    """
    return (
        x1 * x2 + y1 * y2 + z1 * z2 + w1 * w2,
        (x1 * y2 - y1 * x2) + (z1 * w2 - w1 * z2),
        (x1 * z2 - z1 * x2) + (w1 * y2 - y1 * w2),
        (x1 * w2 - w1 * x2) + (y1 * z2 - z1 * y2),
    )


def compose_two(p1: IntPair, p2: IntPair) -> IntPair:
    """Compose two pairs; norm2(result) == norm2(p1) * norm2(p2) exactly."""
    return IntPair(*compose_two_raw(p1.x, p1.y, p2.x, p2.y))


def compose_four(q1: IntQuad, q2: IntQuad) -> IntQuad:
    """Compose two quadruples; norm4(result) == norm4(q1) * norm4(q2) exactly."""
    return IntQuad(*compose_four_raw(q1.x, q1.y, q1.z, q1.w, q2.x, q2.y, q2.z, q2.w))


def norm2(p: IntPair) -> int:
    return p.x * p.x + p.y * p.y


def norm4(q: IntQuad) -> int:
    return q.x * q.x + q.y * q.y + q.z * q.z + q.w * q.w
