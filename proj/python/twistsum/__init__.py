"""Exact twisted power sums, generalized Euler polynomials and Euler-zeta values."""

from ._twistsum import (
    DomainError,
    SingularTwist,
    TwistsumError,
    bernoulli_numbers,
    brute_sum,
    closed_sum,
    gen_euler_poly,
    lemma2_check,
    run_cli,
    verify,
    zeta_accelerated,
)

__all__ = [
    "DomainError",
    "SingularTwist",
    "TwistsumError",
    "bernoulli_numbers",
    "brute_sum",
    "closed_sum",
    "gen_euler_poly",
    "lemma2_check",
    "run_cli",
    "verify",
    "zeta_accelerated",
]
