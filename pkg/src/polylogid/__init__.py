"""Exact polylogarithm identities and their use in explicit-formula prime sums."""

from .errors import (
    BadReduction,
    DivisionByZero,
    DomainError,
    DuplicateRecord,
    InvalidIndex,
    NoData,
    NotExpandable,
    NotOddPrime,
    NotPrime,
    ParseError,
    PolylogIdError,
    TooLarge,
)
from .exactmath import Polynomial, RationalFunction, TruncatedSeries, euler_derivative, rf_series
from .eulerian import eulerian_bruteforce, eulerian_number, polylog_closed, polylog_series
from .identity import (
    a_coeffs,
    b_coeffs,
    b_even_closed,
    c_const,
    combine_polylogs,
    proof_operator,
    rhs_closed,
    verify_identity,
)
from .satake import CoefficientTable, c_mr, prime_weight, satake_poly, satake_power_oracle
from .arithdata import EllipticCurve, FamilyData, elliptic_lambda, empirical_moment, legendre, load_family, sieve_primes
from .lowerorder import (
    MomentModel,
    empirical_lower_order,
    g_eval,
    lower_order_sum,
    rewritten_sum,
    sato_tate_model,
)

__version__ = "0.1.0"
