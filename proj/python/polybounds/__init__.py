"""Certified double-sided polynomial bounds for Wilker and Shafer-Fink type
inequalities, with exact rational / pi-Laurent coefficients and multiprecision
verification. Thin wrappers over the C++ core in ``_polybounds``.

Exact values travel as strings in the grammar ``a/b [* pi^e]`` joined by
`` + `` / `` - `` (e.g. ``"1 - 1/3*pi^1"``); purely rational ones convert
cleanly to :class:`fractions.Fraction`.
"""

from fractions import Fraction

from ._polybounds import (
    bernoulli as _bernoulli,
    bounds,
    eval_target,
    pi_eval,
    pi_sign,
    sf_d,
    sf_e as _sf_e,
    split_nonneg,
    table,
    taylor_head,
    verify,
    wilker_c as _wilker_c,
    wilker_gap_constant,
)

__all__ = [
    "bernoulli",
    "bounds",
    "eval_target",
    "pi_eval",
    "pi_sign",
    "sf_d",
    "sf_e",
    "split_nonneg",
    "table",
    "taylor_head",
    "verify",
    "wilker_c",
    "wilker_gap_constant",
]


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n (convention B_1 = -1/2), exact."""
    return Fraction(_bernoulli(n))


def wilker_c(k: int) -> Fraction:
    """Wilker coefficient c_k of x^(2k+1), exact (zero for k <= 2)."""
    return Fraction(_wilker_c(k))


def sf_e(m: int) -> Fraction:
    """Shafer-Fink denominator-form coefficient E(m), exact."""
    return Fraction(_sf_e(m))
