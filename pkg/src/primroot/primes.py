"""Primes, primality, factorization and the classical multiplicative functions."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

import numpy as np
from gmpy2 import mpz

from .errors import CapacityError, IncompleteFactorizationError

ENUMERATION_CEILING = 10**9
TRIAL_DIVISION_LIMIT = 10**7

# Strong-pseudoprime test with the first 13 prime bases is exact below this bound.
DETERMINISTIC_LIMIT = 3317044064679887385961981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_PROBABILISTIC_ROUNDS = 64
RHO_ITERATIONS = 1 << 22


def primes_up_to(limit: int) -> list[int]:
    """All primes ``<= limit`` in ascending order (sieve of Eratosthenes)."""
    if limit < 0:
        raise ValueError("limit must be non-negative")
    if limit > ENUMERATION_CEILING:
        raise CapacityError(f"limit {limit} exceeds enumeration ceiling {ENUMERATION_CEILING}")
    return sieve(limit).tolist()


def sieve(limit: int) -> np.ndarray:
    """Primes ``<= limit`` as an int64 array."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if flags[p]:
            flags[p * p :: 2 * p] = False
    return np.flatnonzero(flags).astype(np.int64)


def smallest_prime_factors(limit: int) -> np.ndarray:
    """``spf[n]`` is the least prime dividing ``n`` for ``2 <= n <= limit``."""
    if limit > ENUMERATION_CEILING:
        raise CapacityError(f"limit {limit} exceeds enumeration ceiling {ENUMERATION_CEILING}")
    spf = np.zeros(limit + 1, dtype=np.int32)
    for p in sieve(math.isqrt(limit)).tolist():
        block = spf[p * p :: p]
        block[block == 0] = p
    spf[spf == 0] = np.arange(limit + 1, dtype=np.int32)[spf == 0]
    return spf


@lru_cache(maxsize=8)
def _first_primes(count: int) -> tuple[int, ...]:
    # p_k < k (ln k + ln ln k) for k >= 6
    bound = 15 if count < 6 else int(count * (math.log(count) + math.log(math.log(count)))) + 1
    return tuple(primes_up_to(bound)[:count])


def first_primes(count: int) -> list[int]:
    """The first ``count`` primes."""
    if count < 0:
        raise ValueError("count must be non-negative")
    return list(_first_primes(count))


def nth_prime(k: int) -> int:
    """The ``k``-th prime, 1-indexed."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return _first_primes(k)[-1]


def primorial(k: int) -> int:
    """Product of the first ``k`` primes."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return math.prod(_first_primes(k))


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than ``n``."""
    c = max(n + 1, 2)
    while not is_prime(c):
        c += 1
    return c


def _strong_probable_prime(n: int, a: int, d: int, r: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality via strong-pseudoprime tests.

    Exact for ``n < DETERMINISTIC_LIMIT``. Above that, 64 extra rounds with
    bases drawn from a generator seeded by ``n`` bound the error by 4**-64;
    see :func:`primality_is_proven`.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    n = mpz(n)
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    if not all(_strong_probable_prime(n, a, d, r) for a in _MR_BASES):
        return False
    if n < DETERMINISTIC_LIMIT:
        return True
    rng = random.Random(int(n))
    return all(
        _strong_probable_prime(n, rng.randrange(2, int(n) - 1), d, r)
        for _ in range(_PROBABILISTIC_ROUNDS)
    )


def primality_is_proven(n: int) -> bool:
    """True when :func:`is_prime` runs in its deterministic range for ``n``."""
    return n < DETERMINISTIC_LIMIT


@dataclass(frozen=True)
class PrimeFactorization:
    """Exact factored form ``value = prod(p**e for p, e in factors)``."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("value must be >= 1")
        object.__setattr__(self, "factors", tuple((int(p), int(e)) for p, e in self.factors))
        last = 1
        acc = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"factors must have increasing primes and positive exponents: {self.factors}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            acc *= p**e
            last = p
        if acc != self.value:
            raise ValueError(f"factors multiply to {acc}, not {self.value}")

    @classmethod
    def from_dict(cls, exponents: dict[int, int]) -> PrimeFactorization:
        items = tuple(sorted(exponents.items()))
        return cls(math.prod(p**e for p, e in items), items)

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def divisors(self) -> Iterator[int]:
        """All positive divisors, in no particular order."""
        powers = [[p**i for i in range(e + 1)] for p, e in self.factors]
        for combo in product(*powers):
            yield math.prod(combo)

    def squarefree_divisors(self) -> Iterator[tuple[int, int]]:
        """Pairs ``(d, mu(d))`` over the squarefree divisors ``d``."""
        ps = self.primes
        for mask in range(1 << len(ps)):
            d, sign = 1, 1
            for i, p in enumerate(ps):
                if mask >> i & 1:
                    d *= p
                    sign = -sign
            yield d, sign


def _pollard_brent(n: int, rng: random.Random, max_iter: int = 1 << 22) -> int | None:
    if n % 2 == 0:
        return 2
    y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
    g = r = q = 1
    x = ys = y
    spent = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
        spent += r
        if spent > max_iter:
            return None
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g if g != n else None


_SMALL_PRIMES = primes_up_to(1 << 12)


def factorize(
    n: int, seed: int = 0, hint: tuple[int, ...] = (), rho_iterations: int = RHO_ITERATIONS
) -> PrimeFactorization:
    """Complete prime factorization of ``n >= 1``.

    Primes in ``hint`` and then small primes are stripped by trial division,
    composite cofactors are split by Brent's rho with a generator seeded from
    ``seed``, and any cofactor rho cannot split gets trial division up to
    ``TRIAL_DIVISION_LIMIT``. Each rho attempt gives up after
    ``rho_iterations`` steps. If a composite still remains,
    :class:`IncompleteFactorizationError` is raised.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    exps: dict[int, int] = {}
    m = n
    for p in hint:
        while m % p == 0:
            exps[p] = exps.get(p, 0) + 1
            m //= p
    for p in _SMALL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            exps[p] = exps.get(p, 0) + 1
            m //= p
    rng = random.Random(seed)
    stack = [m] if m > 1 else []
    while stack:
        c = stack.pop()
        if is_prime(c):
            exps[c] = exps.get(c, 0) + 1
            continue
        root = math.isqrt(c)
        if root * root == c:
            stack += [root, root]
            continue
        for _ in range(8):
            d = _pollard_brent(c, rng, rho_iterations)
            if d is not None and 1 < d < c:
                stack += [d, c // d]
                break
        else:
            d = _trial_split(c)
            if d is None:
                raise IncompleteFactorizationError(n, c)
            stack += [d, c // d]
    return PrimeFactorization.from_dict(exps)


def _trial_split(c: int) -> int | None:
    limit = min(TRIAL_DIVISION_LIMIT, math.isqrt(c))
    for p in sieve(limit).tolist():
        if c % p == 0:
            return p
    return None


def euler_phi(f: PrimeFactorization) -> int:
    """Euler's totient of ``f.value``."""
    result = 1
    for p, e in f.factors:
        result *= (p - 1) * p ** (e - 1)
    return result


def moebius(f: PrimeFactorization) -> int:
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def omega(f: PrimeFactorization) -> int:
    """Number of distinct prime divisors."""
    return len(f.factors)
