import itertools
from fractions import Fraction as F
from math import gcd

import pytest

from circleinv.errors import ZeroFunction
from circleinv.exact import Polynomial, RationalFunction, reduce
from circleinv.gorenstein import (
    GorensteinReport,
    K1_DIVISIBILITY,
    N2_POLYNOMIAL,
    a_invariant,
    a_invariant_closed_form,
    a_invariant_schur_form,
    analyze,
    integer_obstruction,
    k1_sufficient,
    stanley_test,
)
from circleinv.hilbert import hilbert_series
from circleinv.weights import canonical_key, validate

ONE = Polynomial.one()

COUNTEREXAMPLES = [
    (-1, -2, 4, 8),
    (-1, -2, 5, 6),
    (-1, -3, 1, 27),
    (-1, -3, 2, 9),
    (-1, -3, 3, 9),
    (-1, -3, 4, 6),
    (-1, -3, 12, 23),
    (-1, -4, 2, 2),
]


def from_view(num, view):
    return RationalFunction.from_factored(num, view)


class TestAInvariant:
    def test_examples(self):
        assert a_invariant(from_view(ONE, {5: 1})) == -5
        assert a_invariant(from_view(ONE, {2: 1, 4: 1})) == -6
        assert a_invariant(hilbert_series(validate((-1, -2, 1, 14)))) == -10

    def test_zero_function(self):
        with pytest.raises(ZeroFunction):
            a_invariant(RationalFunction.zero())


class TestStanley:
    def test_examples(self):
        assert stanley_test(from_view(ONE, {2: 1, 4: 1}), 2)
        assert not stanley_test(hilbert_series(validate((-1, -2, 1, 14))), 3)
        assert stanley_test(from_view(ONE, {5: 1}), 1)

    def test_palindromic_numerator(self):
        f = from_view(Polynomial({0: 1, 1: 1, 2: 1}), {2: 1, 3: 1})
        assert stanley_test(f, 2)
        g = from_view(Polynomial({0: 1, 1: 2}), {2: 1, 3: 1})
        assert not stanley_test(g, 2)


class TestClosedFormAInvariant:
    def test_examples(self):
        assert a_invariant_closed_form(validate((-2, 3))) == -5
        assert a_invariant_closed_form(validate((-1, 2, 3))) == -7
        assert a_invariant_closed_form(validate((-3, 1, 3))) == -6

    def test_rederivation_of_schur_form(self):
        # the reduced-vector partial Schur terms must sit at top exponent
        # n-3; agreement with -2*gamma1/gamma0 - (n-1) across a family pins
        # that reading down
        values = [w for w in range(-6, 7) if w]
        seen = set()
        checked = 0
        for n in (2, 3, 4):
            for combo in itertools.combinations_with_replacement(values, n):
                if not any(w < 0 for w in combo) or not any(w > 0 for w in combo):
                    continue
                v = validate(combo)
                key = canonical_key(v)
                if key in seen or checked > 300:
                    continue
                seen.add(key)
                assert a_invariant_schur_form(v) == a_invariant_closed_form(v), combo
                checked += 1
        assert checked >= 300

    def test_three_weight_closed_form(self):
        # n=3 closed form ((a3-a1)gcd(a1,a2) + (a2-a1)gcd(a1,a3))/a1
        for a1, a2, a3 in [(-1, 2, 3), (-3, 1, 3), (-5, 2, 3), (-2, 1, 7)]:
            v = validate((a1, a2, a3))
            expect = F((a3 - a1) * gcd(a1, a2) + (a2 - a1) * gcd(a1, a3), a1)
            assert a_invariant_closed_form(v) == expect


class TestIntegerObstruction:
    def test_inconclusive_case(self):
        ratio, passes = integer_obstruction(validate((-1, -2, 1, 14)))
        assert ratio == 3 and passes

    def test_large_vector_fast(self):
        ratio, passes = integer_obstruction(validate((-501, 500, 503)))
        assert ratio == F(1003, 501) and not passes

    def test_trivial(self):
        ratio, passes = integer_obstruction(validate((-1, 1)))
        assert ratio == 1 and passes


class TestK1Sufficient:
    def test_examples(self):
        assert k1_sufficient(validate((-1, 2, 3)))
        assert not k1_sufficient(validate((-3, 1, 3)))
        assert not k1_sufficient(validate((-1, -2, 1, 14)))

    def test_soundness_small_family(self):
        # every k=1 vector with a1 | sum of positives passes Stanley with
        # degree (sum a)/a1 - n
        checked = 0
        for a1 in range(-9, 0):
            for m in (1, 2):
                for pos in itertools.combinations_with_replacement(range(1, 10), m):
                    raw = (a1,) + pos
                    v = validate(raw)
                    if v.k != 1 or not k1_sufficient(v):
                        continue
                    f = hilbert_series(v)
                    assert stanley_test(f, v.n - 1), raw
                    assert f.degree == sum(v.weights) // v.negatives[0] - v.n, raw
                    checked += 1
        assert checked > 40


class TestAnalyze:
    def test_four_weight_integer_ratio_counterexample(self):
        report = analyze(validate((-1, -2, 1, 14)), full=True)
        assert report.classification == "NotGorenstein"
        assert report.ratio_2g1_g0 == 3 and report.ratio_is_integer
        assert not report.stanley_holds
        assert report.degree == -10

    def test_closing_example(self):
        report = analyze(validate((-3, 1, 3)), full=True)
        assert report.classification == "Gorenstein"
        assert report.degree == -6
        assert report.hilbert == from_view(ONE, {2: 1, 4: 1})

    def test_integer_but_not_gorenstein(self):
        report = analyze(validate((-1, -2, 4, 8)), full=True)
        assert report.ratio_is_integer and not report.stanley_holds

    def test_counterexample_list(self):
        for raw in COUNTEREXAMPLES:
            report = analyze(validate(raw), full=True)
            assert report.ratio_is_integer, raw
            assert not report.stanley_holds, raw

    def test_short_circuits(self):
        r = analyze(validate((-2, 3)))
        assert N2_POLYNOMIAL in r.sufficient_condition_hits
        assert r.stanley_holds and r.degree == -5 and r.hilbert is not None

        r = analyze(validate((-1, 2, 3)))
        assert K1_DIVISIBILITY in r.sufficient_condition_hits
        assert r.stanley_holds and r.degree == -7 and r.hilbert is None

        r = analyze(validate((-501, 500, 503)))
        assert not r.stanley_holds and r.hilbert is None and r.degree is None

    def test_k1_on_negated_orientation(self):
        r = analyze(validate((1, -2, -3)))
        assert K1_DIVISIBILITY in r.sufficient_condition_hits
        assert r.stanley_holds

    def test_full_agrees_with_short_circuit(self):
        for raw in [(-2, 3), (-1, 2, 3), (1, -2, -3)]:
            quick = analyze(validate(raw))
            full = analyze(validate(raw), full=True)
            assert quick.classification == full.classification
            if quick.degree is not None:
                assert quick.degree == full.degree

    def test_zero_weights(self):
        r = analyze(validate((-2, 3, 0)), full=True)
        assert r.dimension == 2
        assert r.degree == -6  # extra (1-t) factor shifts the degree
        assert r.stanley_holds

    def test_report_invariants(self):
        with pytest.raises(Exception):
            GorensteinReport(
                weights=(-1, 1),
                zero_count=0,
                faithful_scale=1,
                dimension=1,
                degenerate=False,
                gamma0=F(1, 2),
                gamma1=F(1, 4),
                ratio_2g1_g0=F(1),
                ratio_is_integer=True,
                stanley_holds=True,
                classification="NotGorenstein",
            )

    def test_gorenstein_consistency_family(self):
        # whenever Stanley holds: the ratio is an integer and matches
        # -degree - dim exactly
        values = [w for w in range(-4, 5) if w]
        seen = set()
        for n in (2, 3, 4):
            for combo in itertools.combinations_with_replacement(values, n):
                if not any(w < 0 for w in combo) or not any(w > 0 for w in combo):
                    continue
                v = validate(combo)
                key = canonical_key(v)
                if key in seen:
                    continue
                seen.add(key)
                report = analyze(v, full=True)
                if report.stanley_holds:
                    assert report.ratio_is_integer
                    assert report.ratio_2g1_g0 == -report.degree - report.dimension


class TestCor77:
    def test_every_two_weight_vector_is_polynomial(self):
        for a1 in range(-6, 0):
            for a2 in range(1, 7):
                v = validate((a1, a2))
                g = gcd(a1, a2)
                span = a2 // g - a1 // g
                assert hilbert_series(v) == from_view(ONE, {span: 1})
                report = analyze(v, full=True)
                assert report.stanley_holds
                assert report.degree == -span
