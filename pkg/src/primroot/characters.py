"""Small-modulus Dirichlet characters and the primitive-root / e-free indicators.

These evaluate the indicator sums by explicit character summation. They serve
as oracles for the predicates in :mod:`primroot.roots` and are capped at
``p <= 10**4``.

A character of order ``d`` modulo ``p`` is stored as the integer ``t`` with
``gcd(t, d) == 1``; it sends ``x`` to ``exp(2*pi*i * t*dlog[x] / d)``. Values
stay as integer root-of-unity indices modulo ``d`` until the final sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError
from .primes import euler_phi, factorize, is_prime
from .roots import least_primitive_root

MAX_MODULUS = 10**4
INDICATOR_TOLERANCE = 1e-9


@dataclass(frozen=True)
class CharacterTable:
    """Discrete logarithms base the least primitive root of ``p``.

    ``dlog[x]`` is the index of ``x`` for ``1 <= x < p``; ``dlog[0]`` is -1.
    """

    p: int
    g: int
    dlog: np.ndarray = field(repr=False)

    def index(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise ValueError(f"p={self.p} divides x")
        return int(self.dlog[x])

    def order_d_characters(self, d: int) -> list[int]:
        """Labels ``t`` of the ``phi(d)`` characters of exact order ``d``."""
        if (self.p - 1) % d:
            raise ValueError(f"d={d} does not divide p - 1")
        return [t for t in range(d) if math.gcd(t, d) == 1]

    def root_index(self, t: int, d: int, x: int) -> int:
        """Character ``(t, d)`` at ``x`` as an exponent of ``exp(2*pi*i/d)``."""
        return t * self.index(x) % d

    def character_value(self, t: int, d: int, x: int) -> complex:
        return np.exp(2j * np.pi * self.root_index(t, d, x) / d)

    def character_sum(self, d: int, x: int) -> complex:
        """Sum of all order-``d`` characters at ``x``."""
        k = self.index(x) % d
        ts = np.array(self.order_d_characters(d))
        return complex(np.exp(2j * np.pi * (ts * k % d) / d).sum())


def build_character_table(p: int) -> CharacterTable:
    if p > MAX_MODULUS:
        raise CapacityError(f"p={p} exceeds character-table cap {MAX_MODULUS}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    g = least_primitive_root(p)
    dlog = np.full(p, -1, dtype=np.int64)
    x = 1
    for k in range(p - 1):
        dlog[x] = k
        x = x * g % p
    return CharacterTable(p, g, dlog)


def _order_sums(table: CharacterTable, d: int, xs: np.ndarray) -> np.ndarray:
    """Sum over order-``d`` characters, evaluated at every entry of ``xs``."""
    ts = np.array(table.order_d_characters(d), dtype=np.int64)
    idx = (table.dlog[xs][:, None] % d) * ts[None, :] % d
    return np.exp(2j * np.pi * idx / d).sum(axis=1)


def _indicator(table: CharacterTable, e: int, xs: np.ndarray) -> np.ndarray:
    fe = factorize(e)
    total = np.zeros(len(xs), dtype=complex)
    for d, mu in fe.squarefree_divisors():
        total += mu / euler_phi(factorize(d)) * _order_sums(table, d, xs)
    return euler_phi(fe) / e * total


def _check_units(p: int, xs: np.ndarray) -> None:
    if np.any(xs % p == 0):
        raise ValueError(f"p={p} divides an argument")


def primitive_root_indicator_all(p: int, table: CharacterTable | None = None) -> np.ndarray:
    """Indicator value (real part) at every ``x`` in ``1..p-1``, vectorised."""
    table = table or build_character_table(p)
    xs = np.arange(1, p, dtype=np.int64)
    return _indicator(table, p - 1, xs).real


def primitive_root_indicator(x: int, p: int, table: CharacterTable | None = None) -> float:
    """Character-sum indicator that ``x`` is a primitive root mod ``p``.

    Only squarefree ``d`` contribute since ``mu(d) = 0`` otherwise.
    """
    table = table or build_character_table(p)
    xs = np.array([x], dtype=np.int64)
    _check_units(p, xs)
    return float(_indicator(table, p - 1, xs % p)[0].real)


def efree_indicator(n: int, e: int, p: int, table: CharacterTable | None = None) -> float:
    """Character-sum indicator that ``n`` is e-free mod ``p``."""
    if e < 1 or (p - 1) % e:
        raise ValueError(f"e={e} does not divide p - 1 = {p - 1}")
    table = table or build_character_table(p)
    xs = np.array([n], dtype=np.int64)
    _check_units(p, xs)
    return float(_indicator(table, e, xs % p)[0].real)


def efree_indicator_all(e: int, p: int, table: CharacterTable | None = None) -> np.ndarray:
    if e < 1 or (p - 1) % e:
        raise ValueError(f"e={e} does not divide p - 1 = {p - 1}")
    table = table or build_character_table(p)
    return _indicator(table, e, np.arange(1, p, dtype=np.int64)).real


def round_indicator(value: float, tol: float = INDICATOR_TOLERANCE) -> bool:
    """Round an indicator value to a boolean, insisting it is within ``tol`` of 0 or 1."""
    if abs(value - 1) < tol:
        return True
    if abs(value) < tol:
        return False
    raise ArithmeticError(f"indicator value {value!r} is not within {tol} of 0 or 1")
