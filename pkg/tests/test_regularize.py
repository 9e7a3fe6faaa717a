import itertools
import random
from fractions import Fraction

import mpmath
import pytest

from eulersums import numeval as NE
from eulersums import products as P
from eulersums import regularize as R
from eulersums import words as W
from eulersums.lincomb import LinComb, TPoly


def test_decompose_shuffle_example():
    assert R.decompose(R.SHUFFLE, "bc") == TPoly({1: LinComb.word("c"),
                                                  0: LinComb.word("cb", -1)})


def test_decompose_stuffle_example():
    got = R.decompose(R.STUFFLE, (("b", 1), ("g", 1)))
    want = TPoly({1: LinComb.word((("g", 1),)),
                  0: LinComb({(("g", 1), ("g", 1)): -1, (("g", 2),): -1})})
    assert got == want


def test_decompose_fixes_admissible_words():
    for w in ("acc", "ab", "c"):
        assert R.decompose(R.SHUFFLE, w) == TPoly.constant(LinComb.word(w))
        cw = W.to_composite(w)
        assert R.decompose(R.STUFFLE, cw) == TPoly.constant(LinComb.word(cw))


def test_decompose_rejects_trailing_a():
    with pytest.raises(ValueError):
        R.decompose(R.SHUFFLE, LinComb.word("ba"))


def test_pure_b_powers():
    # the plain word b^m decomposes to T^m/m! under the shuffle product
    assert R.decompose(R.SHUFFLE, "bbb") == TPoly({3: LinComb.one() * Fraction(1, 6)})


def test_round_trip_weight_le4():
    for n in range(1, 5):
        for t in itertools.product("abc", repeat=n):
            w = "".join(t)
            if w.endswith("a"):
                continue
            poly = R.decompose(R.SHUFFLE, w)
            assert R.substitute_b(R.SHUFFLE, poly) == LinComb.word(w), w
            cw = W.to_composite(w)
            poly2 = R.decompose(R.STUFFLE, cw)
            assert R.substitute_b(R.STUFFLE, poly2) == LinComb.word(cw), w


def test_decompose_is_algebra_map_sampled():
    rng = random.Random(11)
    words = [w for n in (1, 2) for t in itertools.product("abc", repeat=n)
             if not (w := "".join(t)).endswith("a")]
    for _ in range(25):
        u, v = rng.choice(words), rng.choice(words)
        lhs = R.decompose(R.SHUFFLE, P.shuffle(u, v))
        rhs = R.poly_product(R.SHUFFLE, R.decompose(R.SHUFFLE, u), R.decompose(R.SHUFFLE, v))
        assert lhs == rhs, (u, v)
        cu, cv = W.to_composite(u), W.to_composite(v)
        lhs2 = R.decompose(R.STUFFLE, P.stuffle(cu, cv))
        rhs2 = R.poly_product(R.STUFFLE, R.decompose(R.STUFFLE, cu), R.decompose(R.STUFFLE, cv))
        assert lhs2 == rhs2, (u, v)


def test_reg_at_zero():
    assert R.reg_at_zero(R.SHUFFLE, "bc") == LinComb.word("cb", -1)
    assert R.reg_at_zero(R.SHUFFLE, "acc") == LinComb.word("acc")


def test_shuffle_reg_of_mixed_product_vanishes_numerically(ctx30):
    # the regularized b (st) w combinations must evaluate to zero,
    # for every admissible w of weight up to four
    b = W.to_composite("b")
    for n in range(1, 5):
        for w in W.enumerate_admissible(n):
            combo = R.reg_at_zero(R.SHUFFLE, P.stuffle(b, W.to_composite(w)))
            val = NE.eval_lincomb(combo.to_letters(), ctx30)
            assert abs(val.value) < mpmath.mpf(10) ** -20, (w, val.value)


def test_correction_series_values(ctx30):
    zetas = NE.zeta_values(6, ctx30)
    series = R.correction_series(zetas, 6)
    with mpmath.workdps(ctx30.dps):
        assert series.coeffs[0] == 1
        assert series.coeffs[1] == 0
        assert abs(series.coeffs[2] - zetas[2] / 2) < mpmath.mpf(10) ** -25
        assert abs(series.coeffs[3] + zetas[3] / 3) < mpmath.mpf(10) ** -25


def test_correction_series_matches_factorwise_product(ctx30):
    # independent route: multiply the truncated exponentials of each term
    order = 6
    zetas = NE.zeta_values(order, ctx30)
    series = R.correction_series(zetas, order)
    with mpmath.workdps(ctx30.dps):
        prod = [mpmath.mpf(1)] + [mpmath.mpf(0)] * order
        for n in range(2, order + 1):
            ln = mpmath.mpf((-1) ** n) * zetas[n] / n
            factor = [mpmath.mpf(0)] * (order + 1)
            term = mpmath.mpf(1)
            k = 0
            while n * k <= order:
                factor[n * k] = term
                k += 1
                term = term * ln / k
            prod = [sum(prod[i] * factor[j - i] for i in range(j + 1)) for j in range(order + 1)]
        for a, b in zip(series.coeffs, prod):
            assert abs(a - b) < mpmath.mpf(10) ** -25


def test_apply_correction_small_degrees(ctx30):
    series = R.correction_series(NE.zeta_values(4, ctx30), 4)
    with mpmath.workdps(ctx30.dps):
        one = [mpmath.mpf(1)]
        assert R.apply_correction(series, one) == [mpmath.mpf(1)]
        t = [mpmath.mpf(0), mpmath.mpf(1)]
        out = R.apply_correction(series, t)
        assert out[1] == 1 and abs(out[0]) < mpmath.mpf(10) ** -25
        t2 = [mpmath.mpf(0), mpmath.mpf(0), mpmath.mpf(1)]
        out2 = R.apply_correction(series, t2)
        assert abs(out2[0] - 2 * series.coeffs[2]) < mpmath.mpf(10) ** -25


def test_regularization_consistency_weight2(ctx30):
    """Constant terms of both regularizations agree after the correction map.

    For the weight-2 word bc this is the relation
    Z(cb) = Z(cc) + Z(ac), checked numerically.
    """
    with mpmath.workdps(ctx30.dps):
        def numeric_poly(poly):
            deg = poly.degree()
            return [NE.eval_lincomb(poly.coeffs.get(k, LinComb()).to_letters(), ctx30).value
                    for k in range(deg + 1)]

        p_sh = numeric_poly(R.decompose(R.SHUFFLE, "bc"))
        p_st = numeric_poly(R.decompose(R.STUFFLE, W.to_composite("bc")))
        series = R.correction_series(NE.zeta_values(4, ctx30), 4)
        corrected = R.apply_correction(series, p_st)
        assert abs(p_sh[0] - corrected[0]) < mpmath.mpf(10) ** -20
        # the same statement as an exact identity between atoms
        lhs = NE.eval_word("cb", ctx30).value
        rhs = NE.eval_word("cc", ctx30).value + NE.eval_word("ac", ctx30).value
        assert abs(lhs - rhs) < mpmath.mpf(10) ** -20
