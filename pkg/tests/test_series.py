from fractions import Fraction

import pytest

from kmcatalan import counting
from kmcatalan.series import (
    TruncatedPowerSeries,
    km_branch_series,
    km_tree_series,
    km_tree_series_lagrange,
    series_matches_counts,
    verify_k2_ode,
)


def S(*coeffs):
    return TruncatedPowerSeries(coeffs)


def test_reciprocal_geometric():
    one_plus_z = S(1, 1, 0, 0, 0, 0)
    assert one_plus_z.reciprocal().coeffs == (1, -1, 1, -1, 1, -1)
    with pytest.raises(ZeroDivisionError):
        S(0, 1).reciprocal()


def test_derivative_antiderivative_round_trip():
    s = S(3, Fraction(1, 2), -4, 7)
    back = s.antiderivative().derivative()
    assert back.order == s.order
    assert back == s
    d = s.derivative()
    assert d.order == s.order - 1
    assert d.coeffs == (Fraction(1, 2), -8, 21)


def test_shift_down_and_times_z():
    assert S(0, 1, 1).shift_down().coeffs == (1, 1)
    with pytest.raises(ValueError):
        S(1, 1).shift_down()
    assert S(1, 2).times_z().coeffs == (0, 1, 2)


def test_arithmetic_truncates_to_min_order():
    a = S(1, 2, 3)
    b = S(1, 1, 1, 1, 1)
    assert (a + b).order == 2
    assert (a * b).coeffs == (1, 3, 6)
    assert (a - 1).coeffs == (0, 2, 3)
    assert (2 * a).coeffs == (2, 4, 6)


def test_pow():
    geom = S(*([1] * 6))
    assert (geom ** 0).coeffs == (1, 0, 0, 0, 0, 0)
    assert (geom ** 2).coeffs == (1, 2, 3, 4, 5, 6)


def test_agrees_with_window():
    a = S(1, 2, 3, 4)
    b = S(1, 2, 3, 99)
    assert a.agrees_with(b, through=2)
    assert not a.agrees_with(b)
    with pytest.raises(ValueError):
        a.agrees_with(b, through=5)


def test_tree_series_constant_term():
    for k, m in [(1, 1), (2, 3), (3, 2)]:
        assert km_tree_series(k, m, 5)[0] == 1


def test_tree_series_known_coefficients():
    assert km_tree_series(3, 2, 5)[3] == 190
    catalan_side = km_tree_series(1, 2, 10)
    assert [catalan_side[n] for n in range(11)] == \
        [counting.catalan(n) for n in range(11)]
    all_ones = km_tree_series(1, 1, 6)
    assert all_ones.coeffs == (1, 1, 1, 1, 1, 1, 1)


def test_tree_series_matches_counts_grid():
    for k in (1, 2, 3):
        for m in (1, 2, 3):
            assert series_matches_counts(k, m, 20), (k, m)


def test_fixed_point_stabilizes_coefficientwise():
    order = 10
    k, m = 2, 2
    current = TruncatedPowerSeries.constant(1, order)
    history = [current]
    for _ in range(order + 1):
        current = (1 + (current ** m).times_z().truncate(order)) ** k
        history.append(current)
    for j in range(order + 1):
        settled = history[j].coeffs[: j + 1]
        for later in history[j:]:
            assert later.coeffs[: j + 1] == settled


def test_lagrange_route_agrees():
    assert km_branch_series(2, 3, 8)[1] == 1
    assert km_branch_series(3, 1, 8)[1] == 1
    for k, m in [(2, 3), (1, 1), (3, 2)]:
        assert km_tree_series(k, m, 15) == km_tree_series_lagrange(k, m, 15)


def test_k2_ode():
    assert verify_k2_ode(1, 12)  # collapses to the Catalan identity
    for k in (1, 2, 3, 4):
        assert verify_k2_ode(k, 20), k


def test_series_validation():
    with pytest.raises(ValueError):
        km_tree_series(0, 1, 5)
    with pytest.raises(TypeError):
        TruncatedPowerSeries([1.5])
    with pytest.raises(IndexError):
        S(1, 2)[5]
