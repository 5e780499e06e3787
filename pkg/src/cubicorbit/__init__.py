"""Exact closed-form solver for the cubic difference system
x' = a x^2 y + b x y^2, y' = c x^2 y + d x y^2."""

from .errors import (
    CaseMismatch,
    CubicOrbitError,
    DegenerateParameters,
    DigitBudgetExceeded,
    DivisionByZero,
    TrivialSolutionEncountered,
    UnknownWithinHorizon,
)
from .exact import (
    DEFAULT_DIGIT_BUDGET,
    FactoredValue,
    QuadScalar,
    antitrace_exponents,
    geometric_exponent,
    parse_rational,
    pow_rational,
    three_pow,
)
from .linearize import InitialPair, LinearState, antitrace_ratios, linear_orbit, ratio
from .matrix import CaseTag, Eigenpair, Mat2, SystemParams, classify, eigenvalues, power
from .solve import (
    OrbitTerm,
    TrivialReport,
    VerificationReport,
    cubic_coeff_solve,
    iterate_direct,
    reconstruct_general,
    solve,
    solve_antitrace,
    solve_distinct,
    solve_rank_deficient,
    solve_repeated,
    verify,
)
from .zerosets import (
    DEFAULT_HORIZON,
    Membership,
    ZeroSetVerdict,
    z0_member,
    z1_member,
    z2_member,
    z3_member,
    zero_set_member,
)

__version__ = "0.1.0"
