from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from invseq.enumeration import CATALAN_TRIPLE, baxter_closed_form, distribution, gen_avoiders
from invseq.series import (
    F_tilde, LaurentPoly, MultiPoly, TruncatedSeries, ValuationError, baxter_F, dist_ogf_series,
    kernel, kernel_root, kernel_root_Y, main_rhs,
)
from invseq.series.identities import _within_bounds, baxter_lr_counts
from invseq.stats import lma_set, rma_set

ORDER = 6
fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)
series = st.lists(fractions, min_size=1, max_size=ORDER + 1).map(lambda cs: TruncatedSeries(cs, ORDER))
laurent = st.dictionaries(st.integers(-3, 3), st.integers(-4, 4), max_size=4).map(LaurentPoly)


def unit_series():
    return st.tuples(fractions.filter(bool), st.lists(fractions, max_size=ORDER)).map(
        lambda p: TruncatedSeries([p[0], *p[1]], ORDER))


def test_series_examples():
    one = TruncatedSeries.constant(1, 8)
    assert one.sqrt() == one
    s = TruncatedSeries([1, -4], 8)
    root = s.sqrt()
    assert root * root == s
    # sqrt(1 - 4t) = 1 - 2t - 2t^2 - 4t^3 - ...
    assert [root[n] for n in range(4)] == [1, -2, -2, -4]
    geometric = one / TruncatedSeries([1, -1], 8)
    assert all(c == 1 for c in geometric.coeffs)
    assert geometric * TruncatedSeries([1, -1], 8) == one


def test_series_errors():
    with pytest.raises(ValueError):
        TruncatedSeries([2, 1], 4).sqrt()
    with pytest.raises(ValuationError):
        TruncatedSeries([1, 1], 4) / TruncatedSeries([0, 1], 4)
    with pytest.raises(ZeroDivisionError):
        TruncatedSeries([1], 4) / TruncatedSeries([], 4)
    with pytest.raises(IndexError):
        TruncatedSeries([1], 4)[5]


def test_division_by_shifted_divisor():
    a = TruncatedSeries([0, 0, 3, 1], 6)
    b = TruncatedSeries([0, 1, 1], 6)
    q = a / b
    assert q.order == 5
    assert (q * b.shift(1)).agrees(a.shift(1))


@given(series, series, series)
def test_multiplication_is_associative_and_commutative(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(series, unit_series())
def test_quotient_times_divisor(a, b):
    assert (a / b) * b == a


@given(st.lists(fractions, max_size=ORDER))
def test_sqrt_squares_back(tail):
    s = TruncatedSeries([1, *tail], ORDER)
    assert s.sqrt() * s.sqrt() == s


@settings(max_examples=50)
@given(laurent, laurent.filter(bool))
def test_laurent_exact_division(a, b):
    assert (a * b).exact_div(b) == a


@given(laurent)
def test_laurent_parts(a):
    assert a.positive_part() + a.negative_part() + a.constant_term() == a
    assert a.reflect().reflect() == a
    assert all(e >= 1 for e in a.positive_part().terms)


def test_laurent_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        (LaurentPoly.const(1) + LaurentPoly.monomial(2)).exact_div(LaurentPoly.const(1) + LaurentPoly.monomial(1))


def test_kernel_symmetry():
    K = kernel()
    assert K == K.swap("x", "y")
    assert K != MultiPoly.var("x", ("t", "x", "y"))


def test_kernel_roots():
    Y = kernel_root_Y(6)
    assert not Y[0]
    assert _within_bounds(Y)
    # t^1: from K(x, Y) = 0, Y = t(1+x) + O(t^2)
    assert Y[1] == LaurentPoly({0: 1, 1: 1})
    with pytest.raises(ValuationError):
        kernel_root(6, sign=+1)


def test_dist_series_low_terms():
    P = dist_ogf_series(4)
    assert P[1] == LaurentPoly.const(1)
    brute = distribution(gen_avoiders(3, CATALAN_TRIPLE), ["dist"]).marginal(0)
    assert brute == {1: 4, 2: 1}
    assert P[3] == LaurentPoly(brute)


def test_baxter_series_low_terms():
    F, F1, Fd = baxter_F(8)
    assert F[1] == MultiPoly(("u", "v"), {(1, 1): 1})
    for n in range(1, 9):
        total = sum(F[n].terms.values())
        assert total == baxter_closed_form(n)


def test_f_tilde_and_right_side():
    Ft = F_tilde(6)
    assert Ft[1] == LaurentPoly({1: 1, 2: 2, 3: 1})
    assert Ft[1].positive_part() == Ft[1]
    rhs = main_rhs(6)
    for n in range(7):
        assert rhs[n].constant_term() == 0
        assert all(e >= 1 and c > 0 for e, c in Ft[n].terms.items())
    assert _within_bounds(rhs)


def test_lma_rma_counts_low_terms():
    counts = baxter_lr_counts(3)
    assert counts[1] == Counter({(1, 1): 1})
    assert (len(lma_set((1, 2))), len(rma_set((1, 2)))) == (2, 1)
    assert counts[2] == Counter({(2, 1): 1, (1, 2): 1})
    assert sum(counts[3].values()) == baxter_closed_form(3) == 6
