"""Square-composition identities and the machinery built on them.

Modules:

* identities  -- exact two-/four-square composition laws (integer).
* systems     -- closed-form solvers for the induced nonlinear systems.
* solutions   -- candidate solutions of the functional equations:
                 synthesis, seeded verification, structure extraction.
* stability   -- approximate-equation excess checks and the empirical
                 bounded-vs-multiplicative classifier.
* sumsquares  -- representability and constructive 2-/4-square
                 decompositions of integers.
* cli         -- command-line front end with deterministic JSON reports.
"""

from .identities import (
    IntPair,
    IntQuad,
    compose_two,
    compose_four,
    norm2,
    norm4,
)
from .sampling import DiagonalSampler, FixedSampler, UniformSampler
from .solutions import (
    Arity,
    MultiplicativeFamily,
    SignumMap,
    SolutionModel,
    VerificationReport,
    builtin_families,
    evaluate,
    extract_structure_two,
    extract_structure_four,
    verify_equation_two,
    verify_equation_four,
)
from .stability import (
    BoundSpec,
    DiagonalVerdict,
    InvalidBoundError,
    StabilityReport,
    check_conclusion_two,
    check_conclusion_four,
    check_hypothesis_two,
    check_hypothesis_four,
    classify_diagonal,
    run_stability_two,
    run_stability_four,
)
from .systems import (
    CaseFour,
    CaseTwo,
    NonFiniteInputError,
    ResidualExceededError,
    SolveReport,
    solve_two,
    solve_four,
)
from .sumsquares import (
    Factorization,
    FourSquareRep,
    TwoSquareRep,
    factorize,
    four_square_decompose,
    is_prime,
    is_sum_of_two_squares,
    two_square_decompose,
)

__version__ = "1.0.0"
