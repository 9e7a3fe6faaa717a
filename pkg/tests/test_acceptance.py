"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines and timings.  Tolerances are fixed here, not configurable.
"""

import functools
import itertools
import random
import time
from fractions import Fraction

import mpmath
import pytest

from eulersums import fixtures
from eulersums import identities as I
from eulersums import numeval as NE
from eulersums import products as P
from eulersums import regularize as R
from eulersums import relations as REL
from eulersums import words as W
from eulersums.lincomb import LinComb


def criterion(num, label):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            t0 = time.monotonic()
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"\n[criterion {num:2}] {label}: FAIL ({time.monotonic() - t0:.1f}s)")
                raise
            print(f"\n[criterion {num:2}] {label}: PASS ({time.monotonic() - t0:.1f}s)")
        return run
    return wrap


def table_row(table, key):
    return table.row_for_index(W.parse_index(key))


def fracs(vec):
    return tuple(Fraction(v) for v in vec)


@criterion(1, "golden tables, weights 2-4, exact")
def test_criterion_01_golden_tables(tables):
    t0 = time.monotonic()
    for n, rows_expected in ((2, 2), (3, 9), (4, 30)):
        fix = fixtures.table_fixture(n)
        table = tables[n]
        assert len(fix["rows"]) == rows_expected
        got_basis = [W.format_index(W.word_to_index(W.to_composite(b))) for b in table.basis]
        assert got_basis == fix["basis"]
        for key, vec in fix["rows"].items():
            assert table_row(table, key) == fracs(vec), (n, key)
    assert time.monotonic() - t0 < 60


@criterion(2, "weight 5: rational row, integral table rows")
def test_criterion_02_weight5(relations_weight5):
    t0 = time.monotonic()
    zlobin = REL.solve(relations_weight5, REL.zlobin_basis(5))
    fix_z = fixtures.table_fixture(5, "zlobin")
    got = table_row(zlobin, "3,1,1")
    assert got == fracs(fix_z["rows"]["3,1,1"])
    by_basis = dict(zip(fix_z["basis"], got))
    assert by_basis["-2,1,1,1"] == Fraction(-448, 39)
    assert by_basis["-2,2,1"] == Fraction(-112, 39)
    assert by_basis["-2,1,2"] == Fraction(-48, 13)

    integral = REL.solve(relations_weight5, REL.table_basis(5))
    fix = fixtures.table_fixture(5)
    assert len(fix["rows"]) >= 5 and "5" in fix["rows"]
    for key, vec in fix["rows"].items():
        assert table_row(integral, key) == fracs(vec), key
    assert REL.integrality_report(integral) == []
    assert time.monotonic() - t0 < 1800


@criterion(3, "corank profile 2,3,5,8 and weight-3 gap")
def test_criterion_03_coranks():
    expected = {2: 2, 3: 3, 4: 5, 5: 8}
    for n, corank in expected.items():
        fds_only, with_eds = REL.rank_profile(n)
        assert with_eds == corank, (n, with_eds)
        if n == 3:
            assert fds_only > 3


@criterion(4, "symbolic identity suite, n = 1..5")
def test_criterion_04_symbolic_suite():
    t0 = time.monotonic()
    for n in range(1, 6):
        assert I.check_stuffle_identity(n).ok, ("stuffle", n)
        assert I.check_shuffle_identity(n, "c-lead").ok, ("shuffle c", n)
        assert I.check_shuffle_identity(n, "b-lead").ok, ("shuffle b", n)
        assert I.check_key_identity(n).ok, ("key", n)
    # the one-block cases collapse to their closed forms
    seq = ("c", "d")
    total = LinComb()
    for i in range(3):
        left, right = P.cut(i, seq)
        total = total + P.stuffle_letters(left, right) * ((-1) ** i)
    assert total == LinComb({"aab": -1, "aac": -1})
    total = LinComb()
    for i in range(3):
        left, right = P.cut(i, seq)
        total = total + P.shuffle(left, right) * ((-1) ** i)
    assert total == LinComb({"acc": -2})
    total = LinComb()
    for i in range(3):
        left, right = P.cut(i, ("b", "d"))
        total = total + P.shuffle(left, right) * ((-1) ** i)
    assert total == LinComb({"abb": -2})
    assert time.monotonic() - t0 < 600


@criterion(5, "main identity numerics, n = 1..3 at 40 digits")
def test_criterion_05_main_numerics(ctx40):
    with mpmath.workdps(ctx40.dps):
        tol = mpmath.mpf(10) ** -25
        for n in (1, 2, 3):
            assert I.block_identity_residual(n, ctx40) < tol, n
            assert I.distribution_residual(n, ctx40) < tol, n


@criterion(6, "numeric certification of every relation")
def test_criterion_06_relation_certification(relations_by_weight, relations_weight5, ctx30):
    with mpmath.workdps(ctx30.dps):
        tol = mpmath.mpf(10) ** -20
        for n in (2, 3, 4):
            for rel in relations_by_weight[n]:
                res = NE.eval_lincomb(rel.combo, ctx30)
                assert abs(res.value) < tol, (n, rel.provenance, res.value)
        sample = random.Random(271828).sample(relations_weight5, 50)
        for rel in sample:
            res = NE.eval_lincomb(rel.combo, ctx30)
            assert abs(res.value) < tol, (5, rel.provenance, res.value)


@criterion(7, "homomorphism on 100 random admissible pairs")
def test_criterion_07_homomorphism(ctx30):
    rng = random.Random(314159)
    pool = [(w, n) for n in range(1, 6) for w in W.enumerate_admissible(n)]
    pairs = []
    while len(pairs) < 100:
        (u, nu), (v, nv) = rng.choice(pool), rng.choice(pool)
        if nu + nv <= 6:
            pairs.append((u, v))
    with mpmath.workdps(ctx30.dps):
        tol = mpmath.mpf(10) ** -25
        for u, v in pairs:
            zu = NE.eval_word(u, ctx30).value
            zv = NE.eval_word(v, ctx30).value
            sh = NE.eval_lincomb(P.shuffle(u, v), ctx30).value
            st = NE.eval_lincomb(P.stuffle(W.to_composite(u), W.to_composite(v)), ctx30).value
            assert abs(zu * zv - sh) < tol, ("shuffle", u, v)
            assert abs(zu * zv - st) < tol, ("stuffle", u, v)


@criterion(8, "regularization round trips and correction consistency")
def test_criterion_08_regularization(ctx30):
    for n in range(1, 6):
        for t in itertools.product("abc", repeat=n):
            w = "".join(t)
            if w.endswith("a"):
                continue
            poly = R.decompose(R.SHUFFLE, w)
            assert R.substitute_b(R.SHUFFLE, poly) == LinComb.word(w), w
            cw = W.to_composite(w)
            poly2 = R.decompose(R.STUFFLE, cw)
            assert R.substitute_b(R.STUFFLE, poly2) == LinComb.word(cw), w
    with mpmath.workdps(ctx30.dps):
        series = R.correction_series(NE.zeta_values(4, ctx30), 4)

        def numeric(poly):
            return [NE.eval_lincomb(poly.coeffs.get(k, LinComb()).to_letters(), ctx30).value
                    for k in range(poly.degree() + 1)]

        p_sh = numeric(R.decompose(R.SHUFFLE, "bc"))
        p_st = numeric(R.decompose(R.STUFFLE, W.to_composite("bc")))
        corrected = R.apply_correction(series, p_st)
        assert abs(p_sh[0] - corrected[0]) < mpmath.mpf(10) ** -20


@criterion(9, "partial-sum polynomials agree; limits reached")
def test_criterion_09_partial_sums(ctx30):
    a, a_closed, _ = I.partial_sum_sequences(30, 3)
    assert a == a_closed
    a400 = I.recurrence_polys(400, 1)[-1][1]
    b400 = I.product_polys(400, 1)[-1][1]
    with mpmath.workdps(ctx30.dps):
        z21 = NE.eval_index((-2, 1), ctx30).value
        z3_over_8 = NE.eval_index((3,), ctx30).value / 8
        assert abs(mpmath.mpf(a400.numerator) / a400.denominator - z21) < 1e-3
        assert abs(mpmath.mpf(b400.numerator) / b400.denominator - z3_over_8) < 1e-3


@criterion(10, "evaluator vs closed forms and series oracle")
def test_criterion_10_evaluator(ctx30):
    with mpmath.workdps(50):
        tol = mpmath.mpf(10) ** -25
        closed = [
            ("ab", mpmath.pi ** 2 / 6),
            ("c", -mpmath.log(2)),
            ("cc", mpmath.log(2) ** 2 / 2),
            ("aab", mpmath.zeta(3)),
        ]
        for word, want in closed:
            assert abs(NE.eval_word(word, ctx30).value - want) < tol, word
    for n in range(1, 5):
        for word in W.enumerate_admissible(n):
            index = W.word_to_index(W.to_composite(word))
            got = NE.oracle_eval(index)
            want = float(NE.eval_index(index, ctx30).value)
            assert abs(got - want) < 1e-8, (index, got, want)
