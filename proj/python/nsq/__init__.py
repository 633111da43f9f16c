"""Numerical semigroups, quotients by an integer, and their generating functions."""

from fractions import Fraction

from ._nsq import (
    NsqError,
    apery,
    ct_constant_term,
    ct_lemma_check,
    ct_normalize,
    ct_rgf,
    denumerant,
    denumerant_series,
    frobenius,
    gaps,
    members,
    minimal_generators,
    quotient_frobenius,
    quotient_generators,
    quotient_members,
    rgf_frobenius,
    rgf_generators,
    rgf_rational,
    rgf_series,
    table_generators,
    tp,
    verify_generators,
)


def series(num, den, n):
    """First n+1 coefficients of num/den, both given lowest degree first."""
    out = []
    for k in range(n + 1):
        acc = Fraction(num[k]) if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc / den[0])
    return out


__all__ = [name for name in dir() if not name.startswith("_") and name != "Fraction"]
