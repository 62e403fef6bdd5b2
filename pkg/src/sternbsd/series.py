"""Sparse formal Laurent polynomials in q with nonnegative integer coefficients.

Exponents are arbitrary signed integers because the short-BSD side of
the generating-function identity builds its partial products out of
factors 1 + q^(2^i) + q^(-2^i); the negative exponents all cancel in the
final sums, but the intermediates are genuinely Laurent.

``lhs_finite(M)`` is the truncated hyperbinary-side product

    q * prod_{n=0}^{M-1} (1 + q^(2^n) + q^(2*2^n)),

whose coefficient of q^n equals the number of hyperbinary
representations of n-1 for 1 <= n <= 2^M, and ``rhs_finite(M)`` is the
truncated short-BSD-side sum

    q + sum_{N=1}^{M} [prod_{i=0}^{N-2} (1 + q^(2^i) + q^(-2^i))] * (1 + q^(2^(N-1))) * q^(2^N),

whose coefficient of q^n equals the number of short BSD representations
of n on the same range.  The N-th summand accounts for the short
strings with leading term 2^N: the exponent chosen from the i-th factor
records the digit in the 2^i place, and the factor for the 2^(N-1)
place omits q^(-2^(N-1)) because a T directly below the leading 1 is
exactly what shortness forbids.  The two truncations are equal for
every M.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

__all__ = ["SparseSeries", "lhs_finite", "rhs_finite"]

TermSource = Union[Mapping[int, int], Iterable[tuple[int, int]]]


class SparseSeries:
    """Immutable exponent -> coefficient map; zero terms are never stored.

    Coefficients are counts and must be nonnegative; zeros supplied to
    the constructor are dropped, and duplicate exponents accumulate.
    Equality is exact equality of the term maps.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: TermSource = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exponent, coefficient in items:
            if coefficient < 0:
                raise ValueError(f"coefficients are counts, got {coefficient} at q^{exponent}")
            if coefficient:
                acc[exponent] = acc.get(exponent, 0) + coefficient
        self._terms = acc

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "SparseSeries":
        return cls(((exponent, coefficient),))

    def coefficient(self, exponent: int) -> int:
        """The stored coefficient of q^exponent, or 0 if absent."""
        return self._terms.get(exponent, 0)

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._terms.items())

    def support(self) -> list[int]:
        """Exponents with nonzero coefficient, ascending."""
        return sorted(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseSeries):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "SparseSeries") -> "SparseSeries":
        if not isinstance(other, SparseSeries):
            return NotImplemented
        acc = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            acc[exponent] = acc.get(exponent, 0) + coefficient
        return SparseSeries(acc)

    def __mul__(self, other: "SparseSeries") -> "SparseSeries":
        if not isinstance(other, SparseSeries):
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return SparseSeries(acc)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exponent, coefficient in self.terms():
            c = "" if coefficient == 1 and exponent != 0 else str(coefficient)
            if exponent == 0:
                q = ""
            elif exponent == 1:
                q = "q"
            else:
                q = f"q^{exponent}"
            parts.append(f"{c}{q}" if not (c and q) else f"{c}*{q}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SparseSeries({dict(self.terms())!r})"


_ONE = SparseSeries.monomial(0)
_Q = SparseSeries.monomial(1)


def lhs_finite(m: int) -> SparseSeries:
    """The hyperbinary-side product truncated after M factors, times q.

    Exponents reach 2^(M+1) - 1; M = 0 gives the bare q.
    """
    if m < 0:
        raise ValueError(f"truncation order must be >= 0, got {m}")
    product = _Q
    for n in range(m):
        step = 1 << n
        product = product * SparseSeries({0: 1, step: 1, 2 * step: 1})
    return product


def rhs_finite(m: int) -> SparseSeries:
    """The short-BSD-side sum truncated at N = M; equal to ``lhs_finite(m)``.

    The inner Laurent product over i <= N-2 grows with N, so it is
    extended incrementally across the summands.
    """
    if m < 0:
        raise ValueError(f"truncation order must be >= 0, got {m}")
    total = _Q
    inner = _ONE  # prod_{i=0}^{N-2} (1 + q^(2^i) + q^(-2^i))
    for n in range(1, m + 1):
        if n >= 2:
            step = 1 << (n - 2)
            inner = inner * SparseSeries({0: 1, step: 1, -step: 1})
        summand = inner * SparseSeries({0: 1, 1 << (n - 1): 1}) * SparseSeries.monomial(1 << n)
        total = total + summand
    return total
