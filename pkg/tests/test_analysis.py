import math

import pytest

from tsqsort.analysis import (harmonic, predict_comparisons,
                              predict_swaps_classic, predict_swaps_tsq_approx,
                              predict_swaps_tsq_exact, recurrence_oracle)


def test_comparisons_frozen_values():
    assert predict_comparisons(2) == pytest.approx(-2.9186, abs=1e-3)
    assert predict_comparisons(1000) == pytest.approx(10969.9, abs=0.1)


def test_comparisons_continuous_identity():
    # at n = e the log cancels: 2e - 2.8456e (continuity check on the form)
    n = math.e
    assert 2 * n * math.log(n) - 2.8456 * n == pytest.approx(
        2 * math.e - 2.8456 * math.e)


def test_swaps_classic_frozen_values():
    assert predict_swaps_classic(1000) == pytest.approx(1699.56, abs=0.05)
    assert predict_swaps_classic(2) < 0  # asymptotic artifact at tiny n


def test_tsq_exact_initial_condition():
    assert predict_swaps_tsq_exact(2) == pytest.approx(0.5, abs=1e-12)
    assert recurrence_oracle(2) == 0.5


def test_tsq_exact_n3():
    assert predict_swaps_tsq_exact(3) == pytest.approx(0.96296, abs=1e-5)
    assert recurrence_oracle(3) == pytest.approx((4 / 3) * (2 / 9 + 0.5))


def test_tsq_approx_frozen_values():
    assert predict_swaps_tsq_approx(1000) == pytest.approx(1495.5, abs=0.1)
    assert predict_swaps_tsq_approx(10**5) == pytest.approx(251787, abs=1.0)


def test_exact_vs_approx_at_1000():
    exact = predict_swaps_tsq_exact(1000)
    approx = predict_swaps_tsq_approx(1000)
    assert exact == pytest.approx(1498.27, abs=0.1)
    assert abs(exact - approx) / exact < 0.005


def test_relative_gap_shrinks():
    gaps = []
    for n in (100, 1000, 10000, 100000):
        e = predict_swaps_tsq_exact(n)
        a = predict_swaps_tsq_approx(n)
        gaps.append(abs(e - a) / e)
    assert all(x > y for x, y in zip(gaps, gaps[1:]))


def test_recurrence_matches_closed_form_sweep():
    s = 0.5
    for n in range(3, 10001):
        s = (1.0 + 1.0 / n) * (2.0 / 9.0 + s)
        closed = predict_swaps_tsq_exact(n)
        assert abs(s - closed) <= 1e-9 * abs(closed), n


def test_stage_swap_identity():
    # (n/9 + 5/9n) + 1/3 == (1/3) * [2 (n/6 + 5/6n) + 1]
    for n in (2, 3, 10, 1000, 10**6):
        lhs = n / 9 + 5 / (9 * n) + 1 / 3
        rhs = (2 * (n / 6 + 5 / (6 * n)) + 1) / 3
        assert lhs == pytest.approx(rhs, rel=1e-12)


def test_crossover_region_with_printed_constants():
    # With the rounded printed coefficients the strict flip lands at
    # n = 152; below that the classical form is smaller or within
    # rounding of the copy-based form.
    flip = None
    for n in range(2, 2000):
        if predict_swaps_tsq_approx(n) < predict_swaps_classic(n):
            flip = n
            break
    assert flip == 152
    for n in range(152, 10**6, 9973):
        assert predict_swaps_tsq_approx(n) < predict_swaps_classic(n)
    for n in range(2, 140):
        assert not predict_swaps_tsq_approx(n) < predict_swaps_classic(n)


def test_harmonic_switchover_consistency():
    exact = sum(1 / k for k in range(1, 10**6 + 1))
    assert harmonic(10**6) == pytest.approx(exact, rel=1e-12)
    # asymptotic branch stays continuous across the switch
    assert harmonic(10**6 + 1) == pytest.approx(exact + 1 / (10**6 + 1),
                                                rel=1e-9)


def test_domain_errors():
    for fn in (predict_comparisons, predict_swaps_classic,
               predict_swaps_tsq_exact, predict_swaps_tsq_approx,
               recurrence_oracle):
        with pytest.raises(ValueError):
            fn(1)
