"""High-precision evaluation of admissible words, and a brute-force oracle.

The evaluator writes the value of a word as an iterated integral over [0, 1]
and splits the path at an interior point (1/2 by default):

    Z(w) = sum over splits w = u v of  I_[s,1](u) * I_[0,s](v).

The upper piece is pulled back through t -> 1-t, which reverses the word,
swaps a and b, sends c to the internal fourth letter e = dt/(2-t), and
contributes a sign (-1)^(number of c letters).  Every remaining piece is a
nested power series evaluated inside its disc of convergence, so truncating
at K terms leaves a geometric tail.  All series coefficients are bounded by 1
in absolute value (each integration step divides a partial sum of at most
j+1 coefficients by j+1), which gives the rigorous tail bound used below.

The oracle sums the defining nested series directly (numpy extended-precision
cumulative sums) and closes the outer tail with Hurwitz-zeta / Lerch tail
functionals applied to an asymptotic fit of the inner partial sums over the
top octave.  It shares no code with the evaluator above.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath
import numpy as np

from . import words as W


@dataclass(frozen=True)
class PrecisionContext:
    """Target decimal digits, guard digits, and optional series truncation."""

    digits: int = 30
    guard: int = 10
    trunc: int | None = None
    split: Fraction = Fraction(1, 2)

    def __post_init__(self):
        if self.digits < 15:
            raise ValueError("need at least 15 digits")
        if not isinstance(self.split, Fraction):
            object.__setattr__(self, "split", Fraction(self.split).limit_denominator(64))
        if not 0 < self.split < 1:
            raise ValueError("split point must lie in (0, 1)")

    @property
    def dps(self) -> int:
        return self.digits + self.guard

    def truncation(self, weight: int) -> int:
        """Least K with (K+1)^weight * r^K below the working tolerance."""
        if self.trunc is not None:
            return self.trunc
        r = max(self.split, 1 - self.split)
        rr = mpmath.mpf(r.numerator) / r.denominator
        target = mpmath.mpf(10) ** (-(self.digits + self.guard))
        k = 8
        while (k + 1) ** max(weight, 1) * rr ** k >= target:
            k += 8
        return k


@dataclass(frozen=True)
class EvalResult:
    value: mpmath.mpf
    bound: mpmath.mpf

    def __float__(self):
        return float(self.value)


DEFAULT_CONTEXT = PrecisionContext()

_DUAL = {"a": "b", "b": "a", "c": "e"}


def _dual(word: str) -> str:
    """Image of a word prefix under the t -> 1-t pullback (sign handled apart)."""
    return "".join(_DUAL[ch] for ch in reversed(word))


def _series_eval(word: str, x, K: int):
    """Iterated integral of a word over {a,b,c,e} from 0 to x, by power series.

    Letters are applied innermost (rightmost) first; the running series
    coefficients f[1..K] stay bounded by 1.  The final letter applied must
    not be 'a' when the word is nonempty, which callers guarantee.
    """
    one = mpmath.mpf(1)
    if not word:
        return one
    f = [mpmath.mpf(0)] * (K + 1)
    f[0] = one
    for ch in reversed(word):
        g = [mpmath.mpf(0)] * (K + 1)
        if ch == "a":
            for j in range(1, K + 1):
                if f[j]:
                    g[j] = f[j] / j
        elif ch == "b":
            s = mpmath.mpf(0)
            for j in range(K):
                s += f[j]
                g[j + 1] = s / (j + 1)
        elif ch == "c":
            s = mpmath.mpf(0)
            for j in range(K):
                s = f[j] - s
                g[j + 1] = -s / (j + 1)
        else:  # e = dt/(2-t)
            s = mpmath.mpf(0)
            for j in range(K):
                s = (f[j] + s) / 2
                g[j + 1] = s / (j + 1)
        f = g
    acc = mpmath.mpf(0)
    for j in range(K, -1, -1):
        acc = acc * x + f[j]
    return acc


@lru_cache(maxsize=100000)
def _eval_word_cached(word: str, ctx: PrecisionContext):
    with mpmath.workdps(ctx.dps):
        lam = mpmath.mpf(ctx.split.numerator) / ctx.split.denominator
        K = ctx.truncation(len(word))
        total = mpmath.mpf(0)
        for k in range(len(word) + 1):
            u, v = word[:k], word[k:]
            sign = -1 if u.count("c") % 2 else 1
            upper = _series_eval(_dual(u), 1 - lam, K)
            lower = _series_eval(v, lam, K)
            total += sign * upper * lower
        r = max(lam, 1 - lam)
        bound = (len(word) + 1) * 8 * r ** K / (1 - r) + mpmath.mpf(10) ** (-(ctx.digits + ctx.guard // 2))
        return total, +bound


def eval_word(word: str, ctx: PrecisionContext = DEFAULT_CONTEXT) -> EvalResult:
    """Value of an admissible word with a rigorous truncation bound."""
    if not W.is_admissible(word):
        raise ValueError(f"word {word!r} is not admissible")
    value, bound = _eval_word_cached(word, ctx)
    return EvalResult(value, bound)


def eval_index(index: W.SignedIndex, ctx: PrecisionContext = DEFAULT_CONTEXT) -> EvalResult:
    if not W.is_convergent(index):
        raise ValueError(f"index {index} is divergent")
    if not index:
        return EvalResult(mpmath.mpf(1), mpmath.mpf(0))
    return eval_word(W.flatten(W.index_to_word(index)), ctx)


def eval_lincomb(x, ctx: PrecisionContext = DEFAULT_CONTEXT) -> EvalResult:
    """Exact-rational weighted sum of word evaluations."""
    letters = x.to_letters()
    with mpmath.workdps(ctx.dps):
        total = mpmath.mpf(0)
        bound = mpmath.mpf(0)
        for w, c in letters.terms.items():
            r = eval_word(w, ctx)
            cf = mpmath.mpf(c.numerator) / c.denominator
            total += cf * r.value
            bound += abs(cf) * r.bound
        return EvalResult(total, bound)


def zeta_values(n_max: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> dict[int, mpmath.mpf]:
    """zeta(2..n_max) through the evaluator, for the correction series."""
    return {n: eval_word("a" * (n - 1) + "b", ctx).value for n in range(2, n_max + 1)}


# -- direct-series oracle ------------------------------------------------------

_LONG = np.longdouble


def _partial_sums(index: W.SignedIndex, N: int):
    """Nested partial sums up to k1 <= N plus the inner partial-sum array.

    Returns (S, inner) with S[M] the truncation of the full sum at k1 <= M
    and inner[k] the complete sum over the chains k > k2 > ... > k_l >= 1 of
    the trailing entries (identically 1 for depth one).
    """
    m = np.arange(1, N + 1, dtype=np.int64)
    mf = m.astype(_LONG)
    sign_m = np.where(m % 2 == 0, _LONG(1), _LONG(-1))
    inner = np.ones(N + 1, dtype=_LONG)
    for s in index[:0:-1]:  # innermost entry first, down to the second
        term = mf ** _LONG(-abs(s))
        if s < 0:
            term = term * sign_m
        term = term * inner[1:]
        csum = np.cumsum(term)
        nxt = np.empty(N + 1, dtype=_LONG)
        nxt[0] = 0
        nxt[1] = 0
        nxt[2:] = csum[:-1]  # sum over m <= k-1
        inner = nxt
    f = mf ** _LONG(-abs(index[0]))
    if index[0] < 0:
        f = f * sign_m
    f = f * inner[1:]
    S = np.concatenate(([_LONG(0)], np.cumsum(f)))
    return S, inner


def _log_power_tails(s, a_max: int, M: int):
    """sum_{m>M} log(m)^a / m^s for a = 0..a_max, via Hurwitz-zeta derivatives."""
    return [(-1) ** a * mpmath.zeta(mpmath.mpf(s), M + 1, a) for a in range(a_max + 1)]


def _tail_functionals(s: float, a_max: int, N: int, alternating: bool):
    """T[a] = sum_{m>N} (+-1)^m log(m)^a / m^s for a = 0..a_max.

    The alternating case uses twice the even-m part minus the full tail,
    with even m = 2j pulling log(2j) = log 2 + log j apart binomially.  The
    two Hurwitz-zeta pieces have cancelling poles at s = 1, where the
    combination is evaluated just off the pole at elevated precision.
    Requires N even, which the caller's power-of-two default guarantees.
    """
    if alternating and N % 2:
        raise ValueError("alternating tails need an even truncation point")
    dps = 30
    s_eval = mpmath.mpf(s)
    if alternating and s == 1:
        # the a-th s-derivative carries an order-(a+1) pole, so the working
        # precision must absorb eps^-(a+1) before the cancellation
        dps = 40 + 25 * (a_max + 2)
        with mpmath.workdps(dps):
            s_eval = 1 + mpmath.mpf(10) ** -25
    with mpmath.workdps(dps):
        plain = _log_power_tails(s_eval, a_max, N)
        if not alternating:
            return [float(v) for v in plain]
        half = _log_power_tails(s_eval, a_max, N // 2)
        ln2 = mpmath.log(2)
        out = []
        for a in range(a_max + 1):
            even = mpmath.mpf(2) ** (-s_eval) * mpmath.fsum(
                mpmath.binomial(a, r) * ln2 ** (a - r) * half[r] for r in range(a + 1))
            out.append(float(2 * even - plain[a]))
        return out


def oracle_eval(index: W.SignedIndex, N: int = 1 << 22) -> float:
    """Direct truncated summation of the defining nested series.

    Independent of the iterated-integral evaluator: numpy partial sums up to
    k1 <= N, then the outer tail closed by fitting the inner partial sums to
    an asymptotic model in log(m), 1/m and parity over the top octave and
    integrating that model against exact Hurwitz/Lerch tail sums.  Accurate
    to well below 1e-8 for convergent indices of small weight.
    """
    if not W.is_convergent(index):
        raise ValueError(f"index {index} is divergent")
    if not index:
        return 1.0
    if len(index) == 1:
        with mpmath.workdps(30):
            s = abs(index[0])
            return float(mpmath.zeta(s) if index[0] > 0 else -mpmath.altzeta(s))
    S, inner = _partial_sums(index, N)

    # model the inner partial sum over the top two octaves; an odd stride
    # keeps both parities represented, which the parity columns below need
    lo = N // 4
    stride = max(1, (N - lo) // 300000)
    if stride % 2 == 0:
        stride += 1
    m = np.arange(lo, N + 1, stride, dtype=np.int64)
    y = inner[lo::stride].astype(np.float64)
    mf = m.astype(np.float64)
    L = np.log(mf)
    depth_logs = len(index)  # log powers strictly below the depth
    cols = []
    shapes = []  # (extra 1/m exponent, log power, parity flag)
    for a in range(depth_logs):
        cols.append(L ** a)
        shapes.append((0, a, False))
    for a in range(depth_logs):
        cols.append(L ** a / mf)
        shapes.append((1, a, False))
    for a in range(2):
        cols.append(L ** a / mf ** 2)
        shapes.append((2, a, False))
    if any(s < 0 for s in index[1:]):
        sign = np.where(m % 2 == 0, 1.0, -1.0)
        for a in range(depth_logs):
            cols.append(sign * L ** a / mf)
            shapes.append((1, a, True))
        for a in range(2):
            cols.append(sign * L ** a / mf ** 2)
            shapes.append((2, a, True))
    A = np.stack(cols, axis=1)
    scale = np.abs(A).max(axis=0)
    coef, *_ = np.linalg.lstsq(A / scale, y, rcond=None)
    coef = coef / scale

    s1 = abs(index[0])
    alt_outer = index[0] < 0
    tail = 0.0
    a_max = max(a for _, a, _ in shapes)
    funcs = {}
    for delta in {d for d, _, _ in shapes}:
        for parity in {p for _, _, p in shapes}:
            alternating = alt_outer != parity  # (+-1)^m * (+-1)^m folds together
            funcs[(delta, parity)] = _tail_functionals(s1 + delta, a_max, N, alternating)
    for c, (delta, a, parity) in zip(coef, shapes):
        tail += float(c) * funcs[(delta, parity)][a]
    return float(S[N]) + tail
