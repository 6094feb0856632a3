"""Stability checks for the square-composition functional equations.

Given nonnegative bound functions, the hypothesis checks measure how far a
sampled f strays from the equation relative to the pointwise cap

    |f(p1) f(p2) - f(p1 o p2)|  <=  min(bounds at the sample coordinates),

and the conclusion checks do the same for the diagonal consequence
|f(p)^2 - f(||p||^2 on the first axis)|.  A function satisfying the
hypothesis has a first-axis restriction that is either bounded or
multiplicative; classify_diagonal renders that verdict empirically, with
INCONCLUSIVE as the honest third answer (a finite sample sweep cannot
prove the dichotomy, only exhibit evidence).

f may return float, complex, or Fraction values; the checks never coerce,
so exact inputs stay exact.  Real-valued f is simply the complex case with
zero imaginary part.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from enum import Enum

from .exprs import parse_bound_expression
from .identities import compose_two_raw, compose_four_raw
from .sampling import UniformSampler
from .solutions import Arity, probe_ladder

__all__ = [
    "InvalidBoundError",
    "BoundSpec",
    "ExcessReport",
    "DiagonalVerdict",
    "DiagonalReport",
    "StabilityReport",
    "check_hypothesis_two",
    "check_conclusion_two",
    "check_hypothesis_four",
    "check_conclusion_four",
    "classify_diagonal",
    "run_stability_two",
    "run_stability_four",
    "DEFAULT_GROWTH_THRESHOLD",
    "DEFAULT_MULT_TOL",
]

DEFAULT_GROWTH_THRESHOLD = 1e6
DEFAULT_MULT_TOL = 1e-6

_BOUND_SLOTS = {Arity.TWO: 4, Arity.FOUR: 8}
# Slot order: (M1, M2, N1, N2) for two variables,
# (K1, K2, L1, L2, M1, M2, N1, N2) for four.


class InvalidBoundError(ValueError):
    """A bound function returned a negative value at a probe."""


@dataclass(frozen=True)
class BoundSpec:
    """Per-coordinate nonnegative bound functions of one real variable."""

    arity: Arity
    bounds: tuple[Callable[[float], float], ...]

    def __post_init__(self) -> None:
        want = _BOUND_SLOTS[self.arity]
        if len(self.bounds) != want:
            raise ValueError(
                f"arity {int(self.arity)} needs {want} bounds, got {len(self.bounds)}"
            )

    @classmethod
    def constant(cls, arity: Arity, value: float) -> "BoundSpec":
        if value < 0:
            raise InvalidBoundError(f"constant bound {value!r} is negative")
        fn = lambda x: value
        return cls(arity, (fn,) * _BOUND_SLOTS[arity])

    @classmethod
    def from_expressions(cls, arity: Arity, exprs: Sequence[str]) -> "BoundSpec":
        """Build from expression strings; a single string is used for all slots."""
        want = _BOUND_SLOTS[arity]
        if len(exprs) == 1:
            exprs = list(exprs) * want
        if len(exprs) != want:
            raise ValueError(
                f"arity {int(arity)} needs 1 or {want} expressions, got {len(exprs)}"
            )
        return cls(arity, tuple(parse_bound_expression(e) for e in exprs))


def _bound_at(fn: Callable[[float], float], t: float):
    value = fn(t)
    if value < 0:
        raise InvalidBoundError(f"bound value {value!r} < 0 at probe {t!r}")
    return value


@dataclass(frozen=True)
class ExcessReport:
    """Worst positive excess of the defect over the pointwise bound cap.

    max_excess is 0 when the inequality holds on every sample.  worst_point
    is the sample with the largest raw defect-minus-cap, recorded together
    with the defect and cap there.
    """

    max_excess: float
    worst_point: tuple[float, ...] | None
    defect_at_worst: float
    bound_at_worst: float
    sample_count: int
    seed: int
    tol: float
    passed: bool


def _run_excess_sweep(f, bounds: BoundSpec, sampler, tol, arity, compose, diagonal):
    slots = bounds.bounds
    n = len(slots)
    width = arity if diagonal else 2 * arity
    worst = None
    worst_excess = None
    worst_defect = 0.0
    worst_cap = 0.0
    for sample in sampler.tuples(width):
        if diagonal:
            pair = sample + sample
            # coordinate i feeds bound slots 2i and 2i+1
            caps = [
                _bound_at(slots[k], sample[k // 2]) for k in range(n)
            ]
        else:
            pair = sample
            # coordinate i of p1 feeds slot 2i, of p2 slot 2i+1
            caps = [
                _bound_at(slots[k], sample[(k // 2) + (k % 2) * arity])
                for k in range(n)
            ]
        lhs = f(*pair[:arity]) * f(*pair[arity:])
        rhs = f(*compose(*pair))
        defect = abs(lhs - rhs)
        cap = min(caps)
        excess = defect - cap
        if worst_excess is None or excess > worst_excess:
            worst_excess = excess
            worst = sample
            worst_defect = defect
            worst_cap = cap
    max_excess = max(0.0, float(worst_excess)) if worst_excess is not None else 0.0
    return ExcessReport(
        max_excess=max_excess,
        worst_point=worst,
        defect_at_worst=float(worst_defect),
        bound_at_worst=float(worst_cap),
        sample_count=sampler.count,
        seed=sampler.seed,
        tol=tol,
        passed=max_excess <= tol,
    )


def check_hypothesis_two(f, bounds: BoundSpec, sampler, tol: float = 0.0) -> ExcessReport:
    """Excess of |f(x1,y1) f(x2,y2) - f(composed pair)| over
    min(M1(x1), M2(x2), N1(y1), N2(y2)), swept over 4-tuples."""
    _require_arity(bounds, Arity.TWO)
    return _run_excess_sweep(f, bounds, sampler, tol, 2, compose_two_raw, False)


def check_conclusion_two(f, bounds: BoundSpec, sampler, tol: float = 0.0) -> ExcessReport:
    """Excess of |f(x,y)^2 - f(x^2+y^2, 0)| over min(M1(x), M2(x), N1(y), N2(y)).

    Computed by pairing each sample with itself, so on shared samples it
    agrees bit for bit with check_hypothesis_two restricted to the diagonal.
    """
    _require_arity(bounds, Arity.TWO)
    return _run_excess_sweep(f, bounds, sampler, tol, 2, compose_two_raw, True)


def check_hypothesis_four(f, bounds: BoundSpec, sampler, tol: float = 0.0) -> ExcessReport:
    """Eight-bound analog of check_hypothesis_two, swept over 8-tuples."""
    _require_arity(bounds, Arity.FOUR)
    return _run_excess_sweep(f, bounds, sampler, tol, 4, compose_four_raw, False)


def check_conclusion_four(f, bounds: BoundSpec, sampler, tol: float = 0.0) -> ExcessReport:
    """Excess of |f(x,y,z,w)^2 - f(x^2+y^2+z^2+w^2, 0, 0, 0)| over the
    eight-bound cap at the sample coordinates."""
    _require_arity(bounds, Arity.FOUR)
    return _run_excess_sweep(f, bounds, sampler, tol, 4, compose_four_raw, True)


def _require_arity(bounds: BoundSpec, arity: Arity) -> None:
    if bounds.arity is not arity:
        raise ValueError(f"bounds have arity {int(bounds.arity)}, expected {int(arity)}")


class DiagonalVerdict(Enum):
    BOUNDED = "BOUNDED"
    MULTIPLICATIVE = "MULTIPLICATIVE"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class DiagonalReport:
    """Empirical bounded-vs-multiplicative classification with its evidence."""

    verdict: DiagonalVerdict
    max_mult_residual: float
    worst_pair: tuple[float, float] | None
    sup_abs: float
    sup_at: float
    decades: float
    growth_threshold: float
    mult_tol: float


def classify_diagonal(
    m: Callable[[float], float],
    ladder: Sequence[float] | None = None,
    growth_threshold: float = DEFAULT_GROWTH_THRESHOLD,
    mult_tol: float = DEFAULT_MULT_TOL,
) -> DiagonalReport:
    """Classify a one-variable map as BOUNDED, MULTIPLICATIVE, or neither.

    MULTIPLICATIVE requires the relative product residual
    |m(s) m(t) - m(st)| / (1 + |m(st)|) to stay within mult_tol over all
    ladder pairs, with the ladder spanning at least three magnitude decades;
    it wins outright when both hold (the constant 1 is multiplicative, not
    merely bounded).  Otherwise BOUNDED requires sup |m| on the ladder to
    stay within growth_threshold, and anything else is INCONCLUSIVE.
    """
    ladder = tuple(ladder) if ladder is not None else probe_ladder()
    values = {t: m(t) for t in ladder}

    sup_abs = -1.0
    sup_at = 0.0
    for t, val in values.items():
        mag = abs(val)
        if mag > sup_abs:
            sup_abs = mag
            sup_at = t
    magnitudes = [abs(t) for t in ladder if t != 0.0]
    decades = (
        math.log10(max(magnitudes) / min(magnitudes)) if len(magnitudes) > 1 else 0.0
    )

    max_residual = 0.0
    worst_pair = None
    for s in ladder:
        for t in ladder:
            prod_value = m(s * t)
            residual = abs(values[s] * values[t] - prod_value) / (1.0 + abs(prod_value))
            if residual > max_residual:
                max_residual = residual
                worst_pair = (s, t)

    if max_residual <= mult_tol and decades >= 3.0:
        verdict = DiagonalVerdict.MULTIPLICATIVE
    elif sup_abs <= growth_threshold:
        verdict = DiagonalVerdict.BOUNDED
    else:
        verdict = DiagonalVerdict.INCONCLUSIVE
    return DiagonalReport(
        verdict=verdict,
        max_mult_residual=max_residual,
        worst_pair=worst_pair,
        sup_abs=sup_abs,
        sup_at=sup_at,
        decades=decades,
        growth_threshold=growth_threshold,
        mult_tol=mult_tol,
    )


@dataclass(frozen=True)
class StabilityReport:
    """Hypothesis excess, conclusion excess, and the diagonal verdict."""

    arity: int
    seed: int
    sample_count: int
    tol: float
    hypothesis_max_violation: float
    conclusion_max_violation: float
    diagonal_classification: str
    evidence: dict

    @property
    def passed(self) -> bool:
        return (
            self.hypothesis_max_violation <= self.tol
            and self.conclusion_max_violation <= self.tol
        )

    def to_dict(self) -> dict:
        return {
            "arity": self.arity,
            "seed": self.seed,
            "sample_count": self.sample_count,
            "tol": self.tol,
            "hypothesis_max_violation": self.hypothesis_max_violation,
            "conclusion_max_violation": self.conclusion_max_violation,
            "diagonal_classification": self.diagonal_classification,
            "evidence": self.evidence,
        }


def _assemble(arity, seed, samples, tol, hyp, con, diag) -> StabilityReport:
    evidence = {
        "hypothesis_worst_point": list(hyp.worst_point) if hyp.worst_point else None,
        "hypothesis_defect": hyp.defect_at_worst,
        "hypothesis_bound": hyp.bound_at_worst,
        "conclusion_worst_point": list(con.worst_point) if con.worst_point else None,
        "conclusion_defect": con.defect_at_worst,
        "conclusion_bound": con.bound_at_worst,
        "sup_abs": diag.sup_abs,
        "sup_at": diag.sup_at,
        "max_mult_residual": diag.max_mult_residual,
        "worst_pair": list(diag.worst_pair) if diag.worst_pair else None,
        "decades": diag.decades,
        "growth_threshold": diag.growth_threshold,
        "mult_tol": diag.mult_tol,
    }
    return StabilityReport(
        arity=arity,
        seed=seed,
        sample_count=samples,
        tol=tol,
        hypothesis_max_violation=hyp.max_excess,
        conclusion_max_violation=con.max_excess,
        diagonal_classification=diag.verdict.value,
        evidence=evidence,
    )


def run_stability_two(
    f,
    bounds: BoundSpec,
    *,
    seed: int = 42,
    samples: int = 10000,
    low: float = -10.0,
    high: float = 10.0,
    tol: float = 1e-9,
    growth_threshold: float = DEFAULT_GROWTH_THRESHOLD,
    mult_tol: float = DEFAULT_MULT_TOL,
) -> StabilityReport:
    """Hypothesis + conclusion sweeps plus the diagonal classification."""
    hyp = check_hypothesis_two(f, bounds, UniformSampler(seed, samples, low, high), tol)
    con = check_conclusion_two(f, bounds, UniformSampler(seed, samples, low, high), tol)
    diag = classify_diagonal(lambda t: f(t, 0.0), None, growth_threshold, mult_tol)
    return _assemble(2, seed, samples, tol, hyp, con, diag)


def run_stability_four(
    f,
    bounds: BoundSpec,
    *,
    seed: int = 42,
    samples: int = 10000,
    low: float = -10.0,
    high: float = 10.0,
    tol: float = 1e-9,
    growth_threshold: float = DEFAULT_GROWTH_THRESHOLD,
    mult_tol: float = DEFAULT_MULT_TOL,
) -> StabilityReport:
    """Four-variable analog of run_stability_two."""
    hyp = check_hypothesis_four(f, bounds, UniformSampler(seed, samples, low, high), tol)
    con = check_conclusion_four(f, bounds, UniformSampler(seed, samples, low, high), tol)
    diag = classify_diagonal(lambda t: f(t, 0.0, 0.0, 0.0), None, growth_threshold, mult_tol)
    return _assemble(4, seed, samples, tol, hyp, con, diag)
