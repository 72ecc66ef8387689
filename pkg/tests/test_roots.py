from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from primroot.primes import factorize, primes_up_to
from primroot.roots import below_power, floor_power, is_e_free, is_primitive_root, least_primitive_root
from primroot.verify import multiplicative_order


def test_least_root_examples():
    assert least_primitive_root(2) == 1
    assert least_primitive_root(3) == 2
    assert least_primitive_root(7) == 3
    assert least_primitive_root(2311) == 3


def test_one_is_not_a_root_above_two():
    for p in primes_up_to(200)[1:]:
        assert not is_primitive_root(1, p)


def test_is_primitive_root_matches_order_oracle():
    for p in primes_up_to(400):
        f = factorize(p - 1)
        for g in range(1, p):
            assert is_primitive_root(g, p, f) == (multiplicative_order(g, p) == p - 1)


def test_least_root_is_least():
    for p in primes_up_to(3000):
        g = least_primitive_root(p)
        assert g < p or p == 2
        orders = [multiplicative_order(x, p) for x in range(1, g + 1)]
        assert orders[-1] == p - 1
        assert all(o != p - 1 for o in orders[:-1]) or p == 2


def test_is_primitive_root_rejects_bad_input():
    with pytest.raises(ValueError):
        is_primitive_root(2, 7, factorize(5))
    with pytest.raises(ValueError):
        is_primitive_root(7, 7)
    with pytest.raises(ValueError):
        is_primitive_root(0, 7)


def test_e_free_examples():
    assert not is_e_free(2, 2, 7)  # 3**2 = 2 mod 7
    assert is_e_free(3, 2, 7)
    assert is_e_free(5, 1, 7)


def test_e_free_rejects_bad_input():
    with pytest.raises(ValueError):
        is_e_free(2, 4, 7)
    with pytest.raises(ValueError):
        is_e_free(14, 2, 7)


def test_e_free_against_power_residue_search():
    # n is e-free iff no d > 1 dividing e has y**d = n solvable
    for p in primes_up_to(120)[1:]:
        for e in factorize(p - 1).divisors():
            ds = [d for d in factorize(e).divisors() if d > 1]
            powers = {d: {pow(y, d, p) for y in range(1, p)} for d in ds}
            for n in range(1, p):
                assert is_e_free(n, e, p) == all(n not in powers[d] for d in ds)


def test_full_e_free_is_primitive_root():
    for p in primes_up_to(2000):
        f = factorize(p - 1)
        for n in range(1, p):
            assert is_e_free(n, p - 1, p, f) == is_primitive_root(n, p, f)


def test_below_power_tie_and_examples():
    assert not below_power(2, 3, 0.6309)  # 3**0.6309 is just under 2
    assert below_power(3, 2311, 0.68)
    assert not below_power(4, 16, 0.5)  # equality is not strict
    assert below_power(3, 16, 0.5)
    assert floor_power(2311, 0.68) == 193
    assert floor_power(16, 0.5) == 4


@given(st.integers(min_value=1, max_value=10**6), st.integers(min_value=2, max_value=10**9),
       st.sampled_from([0.55, 0.6, 0.6309, 0.65, 0.68, 0.69, 0.7, 0.75, 0.8]))
def test_below_power_matches_exact_arithmetic(g, p, alpha):
    frac = Fraction(repr(alpha))
    assert below_power(g, p, alpha) == (g**frac.denominator < p**frac.numerator)


@given(st.integers(min_value=2, max_value=10**12), st.sampled_from([0.5, 0.6309, 0.68, 0.75]))
def test_floor_power_brackets(p, alpha):
    b = floor_power(p, alpha)
    frac = Fraction(repr(alpha))
    assert b**frac.denominator <= p**frac.numerator < (b + 1) ** frac.denominator
