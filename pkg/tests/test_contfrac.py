from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quadrep.contfrac import (
    bezout_from_trace,
    expand,
    find_mu,
    find_nu,
    is_palindromic,
    lemma_bound_check,
)


def brute_cf(a, b):
    """Quotients of a/b by repeated floor-and-invert on exact fractions."""
    x = Fraction(a, b)
    out = []
    while True:
        q = x.numerator // x.denominator
        out.append(q)
        if x == q:
            return out
        x = 1 / (x - q)


def test_expand_367_over_1187():
    e = expand(367, 1187)
    assert e.quotients == (0, 3, 4, 3, 1, 2, 1, 5)
    assert bezout_from_trace(e) == (207, 64)


def test_expand_two_thirds():
    e = expand(2, 3)
    assert list(e.quotients) == brute_cf(2, 3) == [0, 1, 2]
    assert [e.B(j) for j in range(e.k + 1)] == [1, 1, 3]
    assert e.remainders == (2, 3, 2, 1, 0)


def test_expand_seven_thirteenths():
    e = expand(7, 13)
    assert list(e.quotients) == brute_cf(7, 13) == [0, 1, 1, 6]
    assert [e.B(j) for j in range(e.k + 1)] == [1, 1, 2, 13]
    assert e.remainders == (7, 13, 7, 6, 1, 0)


def test_sentinels_and_index_bounds():
    e = expand(7, 13)
    assert (e.A(-2), e.B(-2), e.A(-1), e.B(-1)) == (0, 1, 1, 0)
    assert (e.r(-1), e.r(0), e.r(e.k + 1)) == (7, 13, 0)
    with pytest.raises(IndexError):
        e.A(e.k + 1)
    with pytest.raises(IndexError):
        e.r(-2)


def test_expand_rejects_small_denominator():
    with pytest.raises(ValueError):
        expand(1, 1)


@given(st.integers(0, 10**9), st.integers(2, 10**9))
def test_expand_agrees_with_fraction_arithmetic(a, b):
    e = expand(a, b)
    assert list(e.quotients) == brute_cf(a, b)
    for j in range(e.k + 1):
        # convergents are the truncations
        assert Fraction(e.A(j), e.B(j)) == _value(e.quotients[: j + 1])


def _value(qs):
    x = Fraction(qs[-1])
    for q in reversed(qs[:-1]):
        x = q + 1 / x
    return x


@pytest.mark.parametrize(
    "w, m, t_nu, t_next",
    [(231183, 435629, 1385, 228), (386057, 435629, 1450, 123), (2, 3, 2, 1)],
)
def test_find_nu(w, m, t_nu, t_next):
    e = expand(w, m)
    nu = find_nu(e, m)
    assert (e.r(nu), e.r(nu + 1)) == (t_nu, t_next)
    # exactly one index satisfies the stopping rule
    hits = [j for j in range(e.k + 1) if e.r(j + 1) ** 2 <= m < e.r(j) ** 2]
    assert hits == [nu]


def test_find_nu_small():
    assert find_nu(expand(2, 3), 3) == 1


@pytest.mark.parametrize("w, m, mu", [(8, 13, 3), (3, 5, 2), (1, 2, 0)])
def test_find_mu(w, m, mu):
    e = expand(w, m)
    assert find_mu(e, m) == mu
    hits = [j for j in range(e.k) if e.B(j) ** 2 <= m < e.B(j + 1) ** 2]
    assert hits == [mu]


def test_lemma_examples():
    assert lemma_bound_check(7, 13, 1, 2, 2)
    assert abs(7 * 2 - 13 * 1) == 1 < expand(7, 13).r(2) == 6
    for lam in range(-1, expand(7, 13).k + 1):
        assert lemma_bound_check(7, 13, 0, 0, lam)
    with pytest.raises(IndexError):
        lemma_bound_check(7, 13, 1, 2, 10)


@given(
    st.integers(0, 10**4),
    st.integers(2, 10**4),
    st.integers(-(10**3), 10**3),
    st.integers(-(10**3), 10**3),
    st.data(),
)
def test_lemma_random(a, b, P, Q, data):
    k = expand(a, b).k
    lam = data.draw(st.integers(-1, k))
    assert lemma_bound_check(a, b, P, Q, lam)
    # P next to aQ/b makes the premise bite whenever it can
    near = (a * Q) // b
    assert lemma_bound_check(a, b, near, Q, lam)
    assert lemma_bound_check(a, b, near + 1, Q, lam)


@pytest.mark.parametrize(
    "a, b, quotients, pal",
    [(13, 5, (2, 1, 1, 2), True), (29, 12, (2, 2, 2, 2), True), (7, 13, (0, 1, 1, 6), False)],
)
def test_is_palindromic(a, b, quotients, pal):
    e = expand(a, b)
    assert e.quotients == quotients
    assert is_palindromic(e) is pal


def test_palindrome_ignores_leading_zero():
    # 5/13 = [0; 2, 1, 1, 2]
    assert expand(5, 13).quotients == (0, 2, 1, 1, 2)
    assert is_palindromic(expand(5, 13))


def test_bezout_from_trace_property():
    for b in range(2, 200):
        for a in range(0, 2 * b):
            e = expand(a, b)
            s, t = bezout_from_trace(e)
            assert s * a - t * b == e.gcd
