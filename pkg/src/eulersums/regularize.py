"""Regularization of divergent leading-b words into polynomials in T.

Every word not ending in a decomposes uniquely as a polynomial in the single
letter b over the admissible words, with either the shuffle or the stuffle
product as multiplication.  Sending b to the formal variable T turns that
decomposition into a T-polynomial with admissible-word coefficients;
evaluating at T = 0 gives the regularized value.

The decomposition peels leading b's: if w = b v has m leading b letters, the
product of the single letter b with v contains w with coefficient exactly m
while every other term has fewer leading b's, so

    dec(w) = (T * dec(v) - dec(b o v - m*w)) / m

terminates by induction on the leading-b count.  The same recursion runs on
composite words with ("b", 1) as the peeled letter and the stuffle product.

The numeric side of the comparison between the two regularizations is the
exponential correction series A(u) = exp(sum_{n>=2} (-1)^n zeta(n) u^n / n)
and the T-polynomial automorphism it generates via e^{Tu} -> A(u) e^{Tu}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from . import products as P
from . import words as W
from .lincomb import LinComb, TPoly

SHUFFLE = "shuffle"
STUFFLE = "stuffle"

_B_LETTER = LinComb.word("b")
_B_COMPOSITE = LinComb.word(((W.BETA, 1),))


def _leading_b(w) -> int:
    if isinstance(w, str):
        n = 0
        while n < len(w) and w[n] == "b":
            n += 1
        return n
    n = 0
    while n < len(w) and w[n] == (W.BETA, 1):
        n += 1
    return n


def decompose(kind: str, x) -> TPoly:
    """Unique T-polynomial whose T -> b expansion under the kind's product is x.

    ``x`` may be a word or LinComb; letter representation for the shuffle
    kind, composite for the stuffle kind (converted as needed).  Words ending
    in a are outside the domain and raise.
    """
    if kind not in (SHUFFLE, STUFFLE):
        raise ValueError(f"unknown regularization kind {kind!r}")
    if isinstance(x, (str, tuple)):
        x = LinComb.word(x)
    x = x.to_letters() if kind == SHUFFLE else x.to_composite()
    out = TPoly()
    for w, c in x.terms.items():
        if isinstance(w, str) and w.endswith("a"):
            raise ValueError(f"word {w!r} ends in 'a' and cannot be regularized")
        out = out + _dec_word(kind, w).scale(c)
    return out


@lru_cache(maxsize=None)
def _dec_word(kind: str, w) -> TPoly:
    m = _leading_b(w)
    if m == 0:
        return TPoly.constant(LinComb.word(w))
    v = w[1:]
    if kind == SHUFFLE:
        q = P.shuffle(_B_LETTER, LinComb.word(v))
    else:
        q = P.stuffle(_B_COMPOSITE, LinComb.word(v))
    # q = m*w + terms with fewer leading b's
    rest = q - LinComb.word(w, m)
    poly = _dec_word(kind, v).shift(1) - decompose(kind, rest)
    return poly if m == 1 else poly.scale(Fraction(1, m))


def reg_at_zero(kind: str, x) -> LinComb:
    """Constant term of the decomposition: the regularized value at T = 0."""
    return decompose(kind, x).constant_term()


def substitute_b(kind: str, poly: TPoly) -> LinComb:
    """Send T back to b and expand with the kind's product (round-trip check)."""
    if kind == SHUFFLE:
        prod, b = P.shuffle, _B_LETTER
    else:
        prod, b = P.stuffle, _B_COMPOSITE
    out = LinComb()
    for k, coeff in poly.coeffs.items():
        term = coeff if kind == SHUFFLE else coeff.to_composite()
        for _ in range(k):
            term = prod(term, b)
        out = out + term
    return out


def poly_product(kind: str, p: TPoly, q: TPoly) -> TPoly:
    """T-polynomial product with coefficients multiplied by the kind's product."""
    prod = P.shuffle if kind == SHUFFLE else P.stuffle
    return p.mul(q, prod)


# -- numeric correction between the two regularizations -----------------------


@dataclass(frozen=True)
class CorrectionSeries:
    """Truncated power series A(u) with high-precision real coefficients.

    coeffs[0] = 1 and coeffs[1] = 0 always; coeffs[2] = zeta(2)/2.
    """

    coeffs: tuple

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1


def correction_series(zeta_values, order: int, dps: int = 50) -> CorrectionSeries:
    """Exponential of sum_{n=2..order} (-1)^n zeta(n) u^n / n, truncated.

    ``zeta_values`` maps n (2 <= n <= order) to a high-precision zeta(n);
    arithmetic runs at ``dps`` decimal digits.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    with mpmath.workdps(dps):
        log_coeffs = [mpmath.mpf(0)] * (order + 1)
        for n in range(2, order + 1):
            try:
                z = zeta_values[n]
            except (KeyError, IndexError):
                raise ValueError(f"zeta({n}) required up to order {order}") from None
            log_coeffs[n] = mpmath.mpf((-1) ** n) * z / n
        # exp of a series without constant term: A_k = (1/k) sum_j j*l_j*A_{k-j}
        out = [mpmath.mpf(1)] + [mpmath.mpf(0)] * order
        for k in range(1, order + 1):
            acc = mpmath.mpf(0)
            for j in range(2, k + 1):
                if log_coeffs[j]:
                    acc += j * log_coeffs[j] * out[k - j]
            out[k] = acc / k
        return CorrectionSeries(tuple(out))


def apply_correction(series: CorrectionSeries, poly, dps: int = 50) -> list:
    """Action of the automorphism e^{Tu} -> A(u) e^{Tu} on a real T-polynomial.

    Matching powers of u in the generating identity gives
    T^n -> sum_{k<=n} n!/(n-k)! * A_k * T^(n-k); ``poly`` is a list of
    coefficients by T-degree and the result has the same length.
    """
    n_max = len(poly) - 1
    if n_max > series.order:
        raise ValueError("series order too small for polynomial degree")
    with mpmath.workdps(dps):
        out = [mpmath.mpf(0)] * len(poly)
        for n, c in enumerate(poly):
            if c == 0:
                continue
            fact = mpmath.mpf(1)
            for k in range(n + 1):
                # fact = n!/(n-k)!
                out[n - k] += c * fact * series.coeffs[k]
                fact *= n - k
        return out
