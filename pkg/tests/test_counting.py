import math

import pytest

from canex.counting import (StamTable, bell, catalan, count_canonical,
                            lambert_root, log10_count_estimate, stam_table)
from canex.reference import all_growth_strings, all_shapes

FIRST_COUNTS = [1, 2, 10, 75, 728, 8526, 115764, 1776060, 30240210]


def catalan_by_recurrence(n):
    values = [1]
    for k in range(n):
        values.append(sum(values[i] * values[k - i] for i in range(k + 1)))
    return values[n]


def bisect_root(target, lo=0.0, hi=50.0):
    for _ in range(200):
        mid = (lo + hi) / 2
        if mid * math.exp(mid) < target:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


class TestCatalan:
    def test_small_values(self):
        assert [catalan(i) for i in range(6)] == [1, 1, 2, 5, 14, 42]

    def test_against_recurrence(self):
        for n in (2, 5, 9, 12):
            assert catalan(n) == catalan_by_recurrence(n)

    def test_nine(self):
        assert catalan(9) == 4862
        assert len(all_shapes(10)) == 4862

    def test_zero(self):
        assert catalan(0) == 1

    def test_negative(self):
        with pytest.raises(ValueError):
            catalan(-1)


def bell_by_independent_triangle(n):
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


class TestBell:
    def test_small_values(self):
        assert [bell(i) for i in range(9)] == [1, 1, 2, 5, 15, 52, 203, 877, 4140]

    def test_three_by_enumeration(self):
        assert bell(3) == len(all_growth_strings(3)) == 5

    def test_ten(self):
        assert bell(10) == 115975 == bell_by_independent_triangle(10)

    def test_matches_growth_string_enumeration(self):
        for n in range(1, 9):
            assert bell(n) == len(all_growth_strings(n))

    def test_large_value_is_exact(self):
        assert bell(100) % 10 == bell_by_independent_triangle(100) % 10
        assert bell(100) == bell_by_independent_triangle(100)


class TestCountCanonical:
    def test_first_values(self):
        assert [count_canonical(n) for n in range(1, 10)] == FIRST_COUNTS

    def test_factorization_at_four(self):
        assert count_canonical(4) == 75 == catalan(3) * bell(4) == 5 * 15

    def test_hundred_leading_digits(self):
        # The exact product is ~1.08e172; cross-checked in log space without
        # big-integer arithmetic.
        exact = count_canonical(100)
        assert f"{exact:.2e}" == "1.08e+172"
        via_logs = (math.lgamma(199) - math.lgamma(100) - math.lgamma(101)) / math.log(10)
        assert abs(math.log10(exact) - (via_logs + math.log10(bell(100)))) < 1e-6

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            count_canonical(0)


class TestLambertRoot:
    def test_omega_constant(self):
        oracle = bisect_root(1.0)
        assert abs(oracle - 0.567143) < 1e-6
        assert abs(lambert_root(0) - oracle) < 1e-9

    def test_hundred(self):
        oracle = bisect_root(101.0)
        assert abs(lambert_root(100) - oracle) < 1e-9
        assert abs(lambert_root(100) - 3.3933136) < 1e-6

    def test_residual_contract(self):
        for n in (10, 100, 1000):
            r = lambert_root(n)
            assert abs(r * math.exp(r) - (n + 1)) <= 1e-10 * (n + 1)

    def test_residual_logarithmic_sweep(self):
        n = 1
        while n <= 10 ** 6:
            r = lambert_root(n)
            assert abs(r * math.exp(r) - (n + 1)) <= 1e-10 * (n + 1)
            n *= 3


class TestLog10Estimate:
    def test_matches_exact_at_hundred(self):
        assert abs(log10_count_estimate(100) - math.log10(count_canonical(100))) < 0.01

    def test_four_hundred(self):
        # log10(1.51e880); the exact count agrees to 0.01.
        assert abs(log10_count_estimate(400) - 880.18) < 0.01

    def test_error_shrinks_with_n(self):
        def log10_exact(n):
            x = count_canonical(n)
            shift = max(0, x.bit_length() - 600)
            return math.log10(x >> shift) + shift * math.log10(2)

        errors = [abs(log10_count_estimate(n) - log10_exact(n))
                  for n in (50, 100, 200, 400)]
        assert errors == sorted(errors, reverse=True)
        assert errors[-1] < 0.002

    def test_needs_two_leaves(self):
        with pytest.raises(ValueError):
            log10_count_estimate(1)


class TestStamTable:
    def test_single_element_first_probability(self):
        table = stam_table(1)
        assert abs(table.probs[0] - math.exp(-1)) < 1e-15

    def test_masses_sum_to_one(self):
        # The class-count probabilities sum to 1 analytically; the float table
        # reproduces that within 1e-9 even though it is truncated at 1e-12.
        for n in (1, 2, 5, 10, 100, 1000):
            table = stam_table(n)
            assert abs(sum(table.probs) - 1.0) < 1e-9

    def test_cumulative_monotone_and_complete(self):
        for n in (1, 4, 10, 100, 1000):
            table = stam_table(n)
            assert all(b >= a for a, b in zip(table.cumulative, table.cumulative[1:]))
            assert 1 - 1e-12 <= table.cumulative[-1] <= 1 + 1e-12

    def test_class_count_inversion(self):
        table = stam_table(10)
        assert table.class_count(0.0) == 1
        assert table.class_count(table.cumulative[0]) == 2
        assert table.class_count(0.9999999999999999) == table.m_max
        probable = max(range(table.m_max), key=lambda i: table.probs[i]) + 1
        assert 1 <= probable <= table.m_max

    def test_probabilities_in_unit_interval(self):
        table = stam_table(100)
        assert all(0.0 <= p <= 1.0 for p in table.probs)

    def test_memoized(self):
        assert stam_table(7) is stam_table(7)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            stam_table(0)

    def test_frozen(self):
        table = stam_table(3)
        with pytest.raises(Exception):
            table.n = 5  # type: ignore[misc]
        assert isinstance(table, StamTable)
