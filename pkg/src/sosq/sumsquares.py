"""Sum-of-squares representability and constructive decompositions.

A positive integer is a sum of two squares exactly when every prime factor
congruent to 3 mod 4 occurs to an even power, and every nonnegative integer
is a sum of four squares.  Decompositions are assembled constructively:
factorize n, represent each prime by bounded brute force, and fold the
parts together through the exact composition laws, so the squared-sum
identity holds with no rounding anywhere.

Trial division and per-prime search keep this honest at desk scale
(n up to ~1e8); the prime searches sit behind two helpers so a faster
method could be swapped in without touching the folding.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .identities import IntPair, IntQuad, compose_two, compose_four

__all__ = [
    "FoldCounters",
    "counters",
    "Factorization",
    "TwoSquareRep",
    "FourSquareRep",
    "is_prime",
    "factorize",
    "is_sum_of_two_squares",
    "two_square_brute_force",
    "two_square_decompose",
    "four_square_decompose",
]


@dataclass
class FoldCounters:
    """Counts composition folds; instrumentation for tests, not part of the API."""

    two: int = 0
    four: int = 0

    def reset(self) -> None:
        self.two = 0
        self.four = 0


counters = FoldCounters()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n in (2, 3):
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


@dataclass(frozen=True)
class Factorization:
    """Complete prime factorization of n >= 1, factors ascending."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def square_split(self) -> tuple[int, int]:
        """n = m*m * s with s squarefree; returns (m, s)."""
        m = s = 1
        for p, e in self.factors:
            m *= p ** (e // 2)
            if e % 2:
                s *= p
        return m, s


def factorize(n: int) -> Factorization:
    """Factor n >= 1 by trial division up to sqrt(n)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    factors = []
    rest = n
    for p in (2, 3):
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
    f = 5
    while f * f <= rest:
        for p in (f, f + 2):
            if rest % p == 0:
                e = 0
                while rest % p == 0:
                    rest //= p
                    e += 1
                factors.append((p, e))
        f += 6
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(n, tuple(factors))


def is_sum_of_two_squares(n: int) -> bool:
    """True iff every prime factor of n congruent to 3 mod 4 has even exponent.

    Equivalently: in the split n = m*m * s with s squarefree, no prime of s
    is 3 mod 4.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return all(
        e % 2 == 0 for p, e in factorize(n).factors if p % 4 == 3
    )


def two_square_brute_force(n: int) -> tuple[int, int] | None:
    """Direct search for a*a + b*b == n, independent of the factorization path.

    Returns components sorted descending, or None when no representation
    exists.  Used as the cross-check route; O(sqrt n).
    """
    if n < 0:
        return None
    for a in range(isqrt(n // 2) + 1):
        b2 = n - a * a
        b = isqrt(b2)
        if b * b == b2:
            return (b, a)
    return None


@dataclass(frozen=True)
class TwoSquareRep:
    """n = components[0]^2 + components[1]^2, components nonnegative descending."""

    n: int
    components: tuple[int, int]


@dataclass(frozen=True)
class FourSquareRep:
    """n as an exact sum of four squares, components nonnegative descending."""

    n: int
    components: tuple[int, int, int, int]


@lru_cache(maxsize=None)
def _prime_two_square(p: int) -> tuple[int, int]:
    # p = 2 or p = 1 mod 4; a representation always exists.
    for a in range(1, isqrt(p) + 1):
        b2 = p - a * a
        b = isqrt(b2)
        if b * b == b2:
            return (a, b)
    raise ArithmeticError(f"no two-square representation found for prime {p}")


@lru_cache(maxsize=None)
def _prime_four_square(n: int) -> tuple[int, int, int, int]:
    # Descending nested search for a >= b >= c >= d >= 0; always succeeds.
    for a in range(isqrt(n), -1, -1):
        r1 = n - a * a
        for b in range(min(a, isqrt(r1)), -1, -1):
            r2 = r1 - b * b
            for c in range(min(b, isqrt(r2)), -1, -1):
                r3 = r2 - c * c
                d = isqrt(r3)
                if d * d == r3 and d <= c:
                    return (a, b, c, d)
    raise ArithmeticError(f"no four-square representation found for {n}")


def _fold_two(parts: list[IntPair]) -> IntPair:
    if not parts:
        return IntPair(1, 0)
    acc = parts[0]
    for part in parts[1:]:
        acc = compose_two(acc, part)
        counters.two += 1
    return acc


def _fold_four(parts: list[IntQuad]) -> IntQuad:
    if not parts:
        return IntQuad(1, 0, 0, 0)
    acc = parts[0]
    for part in parts[1:]:
        acc = compose_four(acc, part)
        counters.four += 1
    return acc


def two_square_decompose(n: int) -> TwoSquareRep | None:
    """Exact two-square representation of n >= 1, or None if none exists.

    Primes 3 mod 4 (even exponents only) contribute p^(e/2) as a common
    multiplier; 2 and primes 1 mod 4 contribute brute-forced prime
    representations, one copy per exponent, folded through the two-square
    composition law.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    multiplier = 1
    parts: list[IntPair] = []
    for p, e in factorize(n).factors:
        if p % 4 == 3:
            if e % 2:
                return None
            multiplier *= p ** (e // 2)
        else:
            parts.extend([IntPair(*_prime_two_square(p))] * e)
    folded = _fold_two(parts)
    a, b = sorted((abs(folded.x) * multiplier, abs(folded.y) * multiplier), reverse=True)
    return TwoSquareRep(n, (a, b))


def four_square_decompose(n: int) -> FourSquareRep:
    """Exact four-square representation of any n >= 0.

    Each prime factor is brute-forced once and the copies are folded through
    the four-square composition law; components come back as absolute values
    sorted descending.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return FourSquareRep(0, (0, 0, 0, 0))
    parts: list[IntQuad] = []
    for p, e in factorize(n).factors:
        parts.extend([IntQuad(*_prime_four_square(p))] * e)
    folded = _fold_four(parts)
    comps = sorted(
        (abs(folded.x), abs(folded.y), abs(folded.z), abs(folded.w)), reverse=True
    )
    return FourSquareRep(n, tuple(comps))
