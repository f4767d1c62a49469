"""Schneider expansion tests: table fixtures, stationarity absorption,
matrix laws, exact head-length certificates, and the generator round trip."""

import math
import random
from fractions import Fraction

import pytest

from padic_cf.exactarith import QuadraticElement, int_vp, mod_inverse, qf_pow, vp
from padic_cf.schneider import (
    SchneiderMatrix,
    generate_constant_head,
    head_analysis,
    schneider_convergents,
    schneider_evaluate,
    schneider_expand,
)


def raw_step(y_prev, y_cur, p):
    """Independent re-derivation of one expansion step for absorption tests."""
    digit = (y_prev * mod_inverse(y_cur, p)) % p
    delta = y_prev - digit * y_cur
    alpha = int_vp(delta, p)
    return digit, alpha, delta // p**alpha


def coprime_pairs(seed, count, span=120):
    rng = random.Random(seed)
    made = 0
    while made < count:
        a = rng.randint(-span, span)
        b = rng.randint(1, span)
        if a != 0 and math.gcd(abs(a), b) == 1:
            made += 1
            yield a, b


class TestExpandFixtures:
    def test_2_5_table(self):
        exp = schneider_expand(2, 5, 3)
        assert exp.head == [(1, 1)] * 4
        assert exp.y_trace == [-1, 2, -1, 1]
        assert exp.stationary_from == 4
        assert not exp.finite_end
        assert exp.tail_value == -1

    def test_1259_701_table(self):
        exp = schneider_expand(1259, 701, 3)
        assert exp.head == [(1, 2)] * 6
        assert exp.y_trace == [62, 71, -1, 8, -1, 1]
        assert exp.stationary_from == 6

    def test_3044_673_table(self):
        exp = schneider_expand(3044, 673, 5)
        assert exp.head == [(3, 2)] * 4
        assert exp.y_trace == [41, 22, -1, 1]
        assert exp.stationary_from == 4

    def test_finite_end(self):
        exp = schneider_expand(7, 2, 3)
        assert exp.finite_end and exp.stationary_from is None
        assert exp.head == [(2, 1)]
        assert exp.tail_value == 2
        assert schneider_evaluate(exp.head, exp.tail_value, 3) == Fraction(7, 2)

        exp = schneider_expand(2, 1, 3)  # small integer: immediate division
        assert exp.finite_end and exp.head == []
        assert exp.tail_value == 2

    def test_minus_one_is_purely_stationary(self):
        exp = schneider_expand(-1, 1, 5)
        assert exp.stationary_from == 0
        assert exp.head == []
        assert exp.tail_value == -1

    def test_preconditions(self):
        with pytest.raises(ValueError, match="coprime to p"):
            schneider_expand(3, 5, 3)
        with pytest.raises(ValueError, match="coprime to p"):
            schneider_expand(5, 3, 3)
        with pytest.raises(ValueError, match="coprime"):
            schneider_expand(4, 8, 3)
        with pytest.raises(ValueError, match="nonzero"):
            schneider_expand(0, 1, 3)
        with pytest.raises(ValueError, match="positive"):
            schneider_expand(2, -5, 3)

    def test_max_steps(self):
        with pytest.raises(ArithmeticError, match="stationarity not reached"):
            schneider_expand(1259, 701, 3, max_steps=2)


class TestEvaluate:
    def test_fixtures(self):
        assert schneider_evaluate([(1, 1)] * 4, -1, 3) == Fraction(2, 5)
        assert schneider_evaluate([], Fraction(9, 4), 3) == Fraction(9, 4)
        assert schneider_evaluate([(3, 2)] * 4, -1, 5) == Fraction(3044, 673)
        assert schneider_evaluate([(1, 2)] * 6, -1, 3) == Fraction(1259, 701)

    def test_zero_tail_rejected(self):
        with pytest.raises(ZeroDivisionError):
            schneider_evaluate([(1, 1)], 0, 3)


class TestConvergents:
    def test_first_matrix_fixture(self):
        exp = schneider_expand(2, 5, 3)
        matrix, value = schneider_convergents(exp)[0]
        assert matrix == SchneiderMatrix(1, 3, 1, 0)
        assert value == 1

    def test_determinant_law_fixture(self):
        exp = schneider_expand(2, 5, 3)
        matrix, value = schneider_convergents(exp)[1]
        assert matrix.det() == 9  # (-1)**2 * 3**(1+1)
        assert vp(Fraction(2, 5) - value, 3) == 2

    def test_laws_on_random_inputs(self):
        for p in (3, 5, 7):
            for a, b in coprime_pairs(67 + p, 60):
                if a % p == 0 or b % p == 0:
                    continue
                exp = schneider_expand(a, b, p)
                if not exp.steps:
                    continue
                r = Fraction(a, b)
                total = 0
                for m, (matrix, value) in enumerate(schneider_convergents(exp)):
                    total += exp.steps[m].alpha
                    assert matrix.det() == (-1) ** (m + 1) * p**total
                    assert vp(r - value, p) == total


class TestReconstructionAndAbsorption:
    def test_reconstruction(self):
        for p in (3, 5, 7):
            for a, b in coprime_pairs(71 + p, 80):
                if a % p == 0 or b % p == 0:
                    continue
                exp = schneider_expand(a, b, p)
                assert exp.stationary_from is not None or exp.finite_end
                value = schneider_evaluate(exp.head, exp.tail_value, p)
                assert value == Fraction(a, b)

    def test_coprimality_chain(self):
        for p in (3, 5):
            for a, b in coprime_pairs(73 + p, 60):
                if a % p == 0 or b % p == 0:
                    continue
                exp = schneider_expand(a, b, p)
                ys = [a, b] + exp.y_trace
                for m in range(len(ys) - 1):
                    assert math.gcd(ys[m], ys[m + 1]) == 1
                for y in exp.y_trace:
                    assert y % p != 0

    def test_absorbing_tail(self):
        fixtures = [(2, 5, 3), (1259, 701, 3), (3044, 673, 5), (-1, 1, 7)]
        for a, b, p in fixtures:
            exp = schneider_expand(a, b, p)
            assert exp.stationary_from is not None
            ys = [a, b] + exp.y_trace
            y_prev, y_cur = ys[-2], ys[-1]
            assert (y_prev, y_cur) in ((1, -1), (-1, 1))
            for _ in range(10):
                digit, alpha, y_next = raw_step(y_prev, y_cur, p)
                assert (digit, alpha) == (p - 1, 1)
                assert y_next == -y_cur  # tail y values alternate +-1
                y_prev, y_cur = y_cur, y_next

    def test_digit_ranges(self):
        for p in (3, 5, 7):
            for a, b in coprime_pairs(79 + p, 40):
                if a % p == 0 or b % p == 0:
                    continue
                exp = schneider_expand(a, b, p)
                for m, (digit, alpha) in enumerate(exp.head):
                    assert 1 <= digit <= p - 1
                    assert alpha >= 1


class TestHeadAnalysis:
    def test_2_5_fixture(self):
        report = head_analysis(2, 5, 1, 1, 3)
        assert abs(report.t1_float - (-1.303)) < 1e-3
        assert abs(report.t2_float - 2.303) < 1e-3
        assert abs(report.theta_float - (-5.523)) < 1e-3
        assert report.theta == QuadraticElement(Fraction(-77, 27), Fraction(-20, 27), 13)
        assert report.exact_exponent == 3
        assert report.head_len == 4
        assert report.exact_identity
        assert qf_pow(report.t2 / report.t1, 3) == report.theta

    def test_1259_701_fixture_with_errata(self):
        report = head_analysis(1259, 701, 1, 2, 3)
        assert report.exact_exponent == 5
        assert report.head_len == 6
        assert report.exact_identity
        # the characteristic roots belong to T**2 - T - 9, not T**2 - T - 3
        residual = report.t1 * report.t1 - report.t1 - 9
        assert residual == QuadraticElement(0)
        assert abs(report.theta_float - (-73.736)) > 1

    def test_3044_673_fixture_with_errata(self):
        report = head_analysis(3044, 673, 3, 2, 5)
        assert report.exact_exponent == 3
        assert report.head_len == 4
        assert report.exact_identity
        assert abs(report.theta_float - 11.211) > 1

    def test_root_identities(self):
        report = head_analysis(2, 5, 1, 1, 3)
        for root in (report.t1, report.t2):
            assert root * root - 1 * root - 3 == QuadraticElement(0)

    def test_preconditions(self):
        with pytest.raises(ValueError, match="stationary pair"):
            head_analysis(2, 5, 2, 1, 3)
        with pytest.raises(ValueError, match="theta|head"):
            head_analysis(-2, 1, 1, 1, 3)  # single-quotient head: |theta| = 1

    def test_non_constant_head_input(self):
        # 7/2 has head (2,1) once then terminates; no exact identity for (1,2)
        report = head_analysis(7, 2, 1, 2, 3)
        assert not report.exact_identity
        assert report.exact_exponent is None
        assert report.head_len >= 1


class TestGenerator:
    def test_fixtures(self):
        m = SchneiderMatrix(1, 0, 0, 1)
        for _ in range(4):
            m = m.times_step(1, 1, 3)
        assert m == SchneiderMatrix(19, 21, 7, 12)
        assert generate_constant_head(1, 1, 3, 3) == (2, 5)
        assert generate_constant_head(1, 1, 0, 3) == (-2, 1)
        assert generate_constant_head(1, 2, 5, 3) == (1259, 701)
        assert generate_constant_head(3, 2, 3, 5) == (3044, 673)

    def test_zero_head_value(self):
        a, b = generate_constant_head(1, 1, 0, 3)
        assert Fraction(a, b) == 1 + Fraction(3, -1)

    def test_round_trip_small(self):
        for p in (3, 5):
            for digit in range(1, p):
                for alpha in (1, 2):
                    if (digit, alpha) == (p - 1, 1):
                        continue
                    for k in range(5):
                        a, b = generate_constant_head(digit, alpha, k, p)
                        exp = schneider_expand(a, b, p)
                        assert exp.head == [(digit, alpha)] * (k + 1)
                        assert exp.stationary_from == k + 1

    def test_round_trip_through_head_analysis(self):
        for p in (3, 5):
            for digit in range(1, p):
                for alpha in (1, 2):
                    if (digit, alpha) == (p - 1, 1):
                        continue
                    for k in range(1, 5):
                        a, b = generate_constant_head(digit, alpha, k, p)
                        report = head_analysis(a, b, digit, alpha, p)
                        assert report.exact_identity
                        assert report.head_len == k + 1

    def test_stationary_pair_rejected(self):
        with pytest.raises(ValueError, match="stationary pair"):
            generate_constant_head(2, 1, 4, 3)
