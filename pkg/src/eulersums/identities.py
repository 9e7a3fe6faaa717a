"""Symbolic and numeric verification of the repeated-block identity family.

The central exact statement verified here: for every n >= 1, in the algebra
of admissible words,

    2^n (ac^2 ab^2)^(n//2) (ac^2)^(n%2)
        = (a^2(b+c))^n + sum_{i=0..2n} (-1)^(n-i) Delta_i((cd)^(*n)),

together with its two halves (the alternating cut-stuffle sum collapsing to
(-1)^n (a^2(b+c))^n and the alternating cut-shuffle sums collapsing to
(-2)^n times the block word, in both the c-leading and b-leading variants).

Numerically, the t -> t^2 substitution relation pins Z((a^2(b+c))^n) to
4^(-n) of the unsigned triple-block value, which the double-shuffle span
alone does not; combining both yields the depth-n evaluation
Z((a^2 b)^n) = 8^n Z((ac^2 ab^2)...).

The partial-sum limit of the identity family builds the recurrence polynomials a_n(t), their
closed double-sum form, and the product polynomials b_n(t), all with exact
rational coefficients truncated at a chosen t-degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from . import numeval as NE
from . import products as P
from .lincomb import LinComb, concat
from .words import to_composite, word_to_index


def block_word(n: int, lead: str = "c") -> str:
    """The single word for n repeated (bar-2, 1) blocks, or its b-leading twin.

    ``lead="c"`` gives (ac^2 ab^2)^(n//2) (ac^2)^(n%2), whose signed index is
    (-2, 1) repeated n times; ``lead="b"`` swaps b and c throughout.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if lead == "c":
        return "accabb" * (n // 2) + "acc" * (n % 2)
    if lead == "b":
        return "abbacc" * (n // 2) + "abb" * (n % 2)
    raise ValueError("lead must be 'b' or 'c'")


def middle_power(n: int) -> LinComb:
    """(a^2(b+c))^n as a letter LinComb of 2^n words."""
    out = LinComb.one()
    block = LinComb({"aab": 1, "aac": 1})
    for _ in range(n):
        out = concat(out, block)
    return out


@lru_cache(maxsize=None)
def _cut_sides(n: int, lead: str):
    seq = (lead, "d") * n
    return tuple(P.cut(i, seq) for i in range(2 * n + 1))


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    residual: LinComb
    terms: int

    def __bool__(self):
        return self.ok


def _result(residual: LinComb, terms: int) -> CheckResult:
    return CheckResult(not residual, residual, terms)


def check_stuffle_identity(n: int) -> CheckResult:
    """Alternating cut-stuffle sum minus (-1)^n (a^2(b+c))^n; zero when it holds."""
    total = LinComb()
    terms = 0
    for i, (left, right) in enumerate(_cut_sides(n, "c")):
        part = P.stuffle_letters(left, right)
        terms += len(part)
        total = total + part * ((-1) ** i)
    return _result(total - middle_power(n) * ((-1) ** n), terms)


def check_shuffle_identity(n: int, variant: str = "c-lead") -> CheckResult:
    """Alternating cut-shuffle sum minus (-2)^n times the block word."""
    lead = {"c-lead": "c", "b-lead": "b"}.get(variant)
    if lead is None:
        raise ValueError("variant must be 'c-lead' or 'b-lead'")
    total = LinComb()
    terms = 0
    for i, (left, right) in enumerate(_cut_sides(n, lead)):
        part = P.shuffle(left, right)
        terms += len(part)
        total = total + part * ((-1) ** i)
    target = LinComb.word(block_word(n, lead), (-2) ** n)
    return _result(total - target, terms)


def check_key_identity(n: int) -> CheckResult:
    """Direct check of the combined identity, independent of the two halves."""
    total = LinComb()
    terms = 0
    for i, (left, right) in enumerate(_cut_sides(n, "c")):
        diff = P.shuffle(left, right) - P.stuffle_letters(left, right)
        terms += len(diff)
        total = total + diff * ((-1) ** (n - i))
    residual = LinComb.word(block_word(n), 2 ** n) - middle_power(n) - total
    return _result(residual, terms)


def distribution_residual(n: int, ctx: NE.PrecisionContext = NE.DEFAULT_CONTEXT):
    """|Z((a^2 b)^n) - 4^n Z((a^2(b+c))^n)|, the t -> t^2 substitution check."""
    with mpmath.workdps(ctx.dps):
        lhs = NE.eval_word("aab" * n, ctx).value
        rhs = NE.eval_lincomb(middle_power(n), ctx).value
        return abs(lhs - mpmath.mpf(4) ** n * rhs)


def block_identity_residual(n: int, ctx: NE.PrecisionContext = NE.DEFAULT_CONTEXT):
    """|Z((a^2 b)^n) - 8^n Z(block_word(n))|."""
    with mpmath.workdps(ctx.dps):
        lhs = NE.eval_word("aab" * n, ctx).value
        rhs = NE.eval_word(block_word(n), ctx).value
        return abs(lhs - mpmath.mpf(8) ** n * rhs)


# -- partial-sum polynomial sequences -------------------------------------------------------

Poly = tuple[Fraction, ...]  # coefficients by t-degree, fixed length


def _trim(coeffs, t_degree: int) -> Poly:
    out = list(coeffs[:t_degree + 1])
    out += [Fraction(0)] * (t_degree + 1 - len(out))
    return tuple(out)


def recurrence_polys(n_max: int, t_degree: int) -> list[Poly]:
    """a_1..a_n by n(n+1)^2 a_{n+2} = n(2n+1) a_{n+1} + (n^3 + (-1)^(n+1) t) a_n.

    Exact rational coefficients, truncated at t_degree; a_1 = a_2 = 1.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    one = _trim((Fraction(1),), t_degree)
    seq = [one, one]
    for n in range(1, n_max - 1):
        a_n1, a_n = seq[-1], seq[-2]
        lead = [Fraction(n * (2 * n + 1)) * c for c in a_n1]
        cubic = [Fraction(n ** 3) * c for c in a_n]
        shifted = [Fraction(0)] + [Fraction((-1) ** (n + 1)) * c for c in a_n[:-1]]
        total = [(x + y + z) / (n * (n + 1) ** 2) for x, y, z in zip(lead, cubic, shifted)]
        seq.append(_trim(total, t_degree))
    return seq[:n_max]


def double_sum_polys(n_max: int, t_degree: int) -> list[Poly]:
    """The closed form 1 + sum_i t^i sum over 2i-chains below n, exactly.

    Chain sums run over n > l_1 > k_1 > ... > l_i > k_i >= 1 with weight
    (-1)^(l_1+...+l_i) / (l_1^2 k_1 ... l_i^2 k_i); computed by a prefix-sum
    recursion on the chain tail, one t-degree at a time.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    # G_i(m) = sum over chains m > l_1 > k_1 > ... > l_i > k_i >= 1, using
    #   G_i(m) = sum_{l<m} (-1)^l / l^2 * H_{i-1}(l),
    #   H_{i-1}(l) = sum_{k<l} G_{i-1}(k) / k,
    # both maintained as running prefix sums; G_0 = 1.
    max_i = t_degree
    g_prev = [Fraction(1)] * (n_max + 1)
    tables = [list(g_prev)]
    for _ in range(max_i):
        g_new = [Fraction(0)] * (n_max + 1)
        h = Fraction(0)    # H(l) for the current l
        acc = Fraction(0)  # sum over l' <= l of (-1)^l'/l'^2 * H(l')
        for l in range(1, n_max + 1):
            acc += Fraction((-1) ** l, l * l) * h
            if l + 1 <= n_max:
                g_new[l + 1] = acc
            h += g_prev[l] / l
        tables.append(g_new)
        g_prev = g_new
    out = []
    for n in range(1, n_max + 1):
        coeffs = [tables[i][n] for i in range(max_i + 1)]
        out.append(_trim(coeffs, t_degree))
    return out


def product_polys(n_max: int, t_degree: int) -> list[Poly]:
    """b_n(t) = prod_{i=1..n} (1 + t/(8 i^3)), truncated at t_degree."""
    out = []
    cur = _trim((Fraction(1),), t_degree)
    for i in range(1, n_max + 1):
        c = Fraction(1, 8 * i ** 3)
        nxt = list(cur)
        for k in range(t_degree, 0, -1):
            nxt[k] = cur[k] + c * cur[k - 1]
        cur = _trim(nxt, t_degree)
        out.append(cur)
    return out


def partial_sum_sequences(n_max: int, t_degree: int):
    """(a_n, closed-form a_n, b_n) truncated polynomial sequences, 1-based."""
    return (recurrence_polys(n_max, t_degree),
            double_sum_polys(n_max, t_degree),
            product_polys(n_max, t_degree))
