import math

import pytest
from hypothesis import given, settings, strategies as st

from primroot.errors import CapacityError, IncompleteFactorizationError
from primroot.primes import (
    DETERMINISTIC_LIMIT,
    PrimeFactorization,
    euler_phi,
    factorize,
    first_primes,
    is_prime,
    moebius,
    next_prime,
    nth_prime,
    omega,
    primality_is_proven,
    primes_up_to,
    primorial,
    smallest_prime_factors,
)


def trial_is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def test_primes_up_to_small_cases():
    assert primes_up_to(0) == []
    assert primes_up_to(1) == []
    assert primes_up_to(10) == [2, 3, 5, 7]
    assert len(primes_up_to(100)) == 25


def test_primes_up_to_matches_trial_division():
    assert primes_up_to(3000) == [n for n in range(3001) if trial_is_prime(n)]


def test_primes_up_to_rejects_above_ceiling():
    with pytest.raises(CapacityError):
        primes_up_to(10**9 + 1)


def test_smallest_prime_factors():
    spf = smallest_prime_factors(1000)
    for n in range(2, 1001):
        q = int(spf[n])
        assert n % q == 0 and trial_is_prime(q)
        assert all(n % d for d in range(2, q))


def test_primorial_values():
    assert primorial(1) == 2
    assert primorial(5) == 2310
    assert primorial(23) == 267064515689275851355624017992790


def test_primorial_ratio_is_next_prime():
    ps = first_primes(501)
    for k in range(1, 501):
        assert primorial(k + 1) == primorial(k) * ps[k]
    assert nth_prime(501) == ps[-1]


def test_primorial_rejects_zero():
    with pytest.raises(ValueError):
        primorial(0)


def test_is_prime_small_against_trial_division():
    for n in range(0, 5000):
        assert is_prime(n) == trial_is_prime(n), n


def test_is_prime_near_cutoff_sample():
    p = next_prime(2_500_000_000_000_000)
    assert trial_is_prime(p)
    assert not any(is_prime(n) for n in range(2_500_000_000_000_000, p))


def test_is_prime_known_strong_pseudoprimes():
    # composites that fool several fixed bases
    for n in (2047, 3215031751, 3825123056546413051, 318665857834031151167461):
        assert not is_prime(n)


def test_is_prime_large_known_primes():
    assert is_prime(2**89 - 1)
    assert is_prime(2**127 - 1)
    assert not is_prime((2**89 - 1) * (2**61 - 1))
    assert primality_is_proven(2**81 - 1)
    assert not primality_is_proven(2**127 - 1)
    assert DETERMINISTIC_LIMIT > 3.3e24


def test_factorize_examples():
    assert factorize(1).factors == ()
    assert factorize(360).as_dict() == {2: 3, 3: 2, 5: 1}
    assert factorize(2310).as_dict() == {2: 1, 3: 1, 5: 1, 7: 1, 11: 1}


def test_factorize_large_semiprime_with_rho():
    p, q = 1_000_000_007, 998_244_353
    assert factorize(p * q * 4).as_dict() == {2: 2, q: 1, p: 1}


def test_factorize_is_deterministic_for_seed():
    n = (2**61 - 1) * 1_000_000_007 * 3**4
    assert factorize(n, seed=5) == factorize(n, seed=5)


def test_factorize_reports_unsplittable_cofactor():
    # both factors above the trial-division limit, and rho starved of steps
    p, q = next_prime(2**40), next_prime(2**41)
    with pytest.raises(IncompleteFactorizationError) as info:
        factorize(p * q, rho_iterations=64)
    assert info.value.cofactor == p * q


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=10**15))
def test_factorize_product_invariant(n):
    f = factorize(n)
    assert math.prod(p**e for p, e in f.factors) == n
    assert [p for p, _ in f.factors] == sorted({p for p, _ in f.factors})
    assert all(trial_is_prime(p) for p, _ in f.factors if p < 10**6)


def test_factorization_validation():
    with pytest.raises(ValueError):
        PrimeFactorization(12, ((3, 1), (2, 2)))
    with pytest.raises(ValueError):
        PrimeFactorization(8, ((4, 1), (2, 1)))
    with pytest.raises(ValueError):
        PrimeFactorization(10, ((2, 1), (3, 1)))


def test_multiplicative_function_examples():
    f = factorize
    assert euler_phi(f(1)) == 1
    assert euler_phi(f(12)) == 4
    assert moebius(f(1)) == 1
    assert moebius(f(6)) == 1
    assert moebius(f(12)) == 0
    assert omega(f(1)) == 0
    assert omega(f(30)) == 3
    assert omega(f(primorial(23))) == 23


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=1, max_value=10**4))
def test_phi_matches_gcd_count(n):
    assert euler_phi(factorize(n)) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_divisor_sum_identities():
    for n in range(1, 10**4 + 1):
        divs = [factorize(d) for d in factorize(n).divisors()]
        assert sum(euler_phi(d) for d in divs) == n
        assert sum(moebius(d) for d in divs) == (1 if n == 1 else 0)


def test_squarefree_divisors_carry_moebius():
    f = factorize(360)
    pairs = dict(f.squarefree_divisors())
    assert pairs == {1: 1, 2: -1, 3: -1, 5: -1, 6: 1, 10: 1, 15: 1, 30: -1}
