"""Primitive roots and e-free residues modulo a prime."""

from __future__ import annotations

from fractions import Fraction
import math

from gmpy2 import mpz

from .primes import PrimeFactorization, factorize


def _check_factors_p_minus_1(p: int, f: PrimeFactorization) -> None:
    if f.value != p - 1:
        raise ValueError(f"factorization of {f.value} does not factor p - 1 = {p - 1}")


def is_primitive_root(g: int, p: int, f: PrimeFactorization | None = None) -> bool:
    """True iff ``g`` generates the unit group modulo the prime ``p``.

    ``f`` is the factorization of ``p - 1``; it is computed when omitted.
    """
    if f is None:
        f = factorize(p - 1)
    else:
        _check_factors_p_minus_1(p, f)
    if not 1 <= g < p:
        raise ValueError(f"need 1 <= g < p, got g={g}, p={p}")
    m = mpz(p)
    return all(pow(mpz(g), (p - 1) // q, m) != 1 for q in f.primes)


def least_primitive_root(p: int, f: PrimeFactorization | None = None) -> int:
    if p == 2:
        return 1
    if f is None:
        f = factorize(p - 1)
    else:
        _check_factors_p_minus_1(p, f)
    m = mpz(p)
    exponents = [mpz((p - 1) // q) for q in f.primes]
    g = 2
    while any(pow(mpz(g), k, m) == 1 for k in exponents):
        g += 1
    return g


def is_e_free(n: int, e: int, p: int, f: PrimeFactorization | None = None) -> bool:
    """True iff ``n`` is not a ``d``-th power residue mod ``p`` for any ``d > 1`` dividing ``e``.

    Equivalent to ``n**((p-1)/q) != 1 (mod p)`` for every prime ``q | e``.
    ``f`` may carry the factorization of ``e``.
    """
    if e < 1 or (p - 1) % e:
        raise ValueError(f"e={e} does not divide p - 1 = {p - 1}")
    if n % p == 0:
        raise ValueError(f"p={p} divides n={n}")
    if f is None:
        f = factorize(e)
    elif f.value != e:
        raise ValueError(f"factorization of {f.value} does not factor e = {e}")
    return all(pow(n, (p - 1) // q, p) != 1 for q in f.primes)


def below_power(g: int, p: int, alpha: float) -> bool:
    """Exact test of ``g < p**alpha``.

    ``alpha`` is read as the decimal it prints as, so 0.68 means 68/100.
    Floating logs decide unless they are within 1e-9 of a tie, in which case
    the comparison ``g**den < p**num`` is done in integers.
    """
    if g < 1:
        return True
    lhs, rhs = math.log(g), alpha * math.log(p)
    if abs(lhs - rhs) > 1e-9 * max(1.0, abs(rhs)):
        return lhs < rhs
    frac = Fraction(repr(alpha))
    return g**frac.denominator < p**frac.numerator


def floor_power(p: int, alpha: float) -> int:
    """``floor(p**alpha)`` computed exactly for decimal ``alpha``."""
    guess = int(math.exp(alpha * math.log(p)))
    frac = Fraction(repr(alpha))
    num, den = frac.numerator, frac.denominator
    target = p**num
    b = max(guess - 2, 0)
    while (b + 1) ** den <= target:
        b += 1
    while b > 0 and b**den > target:
        b -= 1
    return b
