"""The e-free sieve for primitive roots below ``p**alpha``.

With ``n = omega(p-1)`` and sieving primes ``p_1..p_s`` dividing ``p-1`` but
not the even divisor ``e``, set

    delta = 1 - sum(1/p_i),     Delta = (s-1)/delta + 2.

A primitive root below ``p**alpha`` exists when

    p**(alpha - 1/2) / log(p) > c * (2**(n-s) * Delta - 1).

``n`` is read as omega(p-1) throughout. The sieving primes are always the
``s`` largest prime divisors; ``e`` takes the full prime-power part of the
rest and so is even.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bounds import log_excess_threshold
from .config import BoundConfig
from .errors import DomainError, InfeasibleSieveError, NoThresholdError
from .logreal import LogReal
from .primes import first_primes, primorial
from .screen import (
    LN2,
    ExceptionClass,
    ExceptionTable,
    Mode,
    _summarise,
    global_robin_threshold,
    log_two_pow_minus_one,
    reference_constant,
    smallest_primorial_above,
)

EXACT_DELTA_LIMIT = 10**6


@dataclass(frozen=True)
class SieveContext:
    n: int
    s: int
    sieving_primes: tuple[int, ...]
    delta: float
    capital_delta: float


def _delta(primes: tuple[int, ...]) -> tuple[float, bool]:
    """``1 - sum(1/q)`` and whether it is strictly positive (exact when primes are small)."""
    if primes and max(primes) <= EXACT_DELTA_LIMIT:
        d = 1 - sum((Fraction(1, q) for q in primes), Fraction(0))
        return float(d), d > 0
    d = 1 - math.fsum(1 / q for q in primes)
    return d, d > 0


def make_sieve_context(prime_divisors: list[int], s: int) -> SieveContext:
    """Context sieving on the ``s`` largest entries of ``prime_divisors``."""
    divs = sorted(set(prime_divisors))
    n = len(divs)
    if not 1 <= s <= n:
        raise DomainError(f"need 1 <= s <= n={n}, got s={s}")
    sieving = tuple(divs[n - s :])
    delta, positive = _delta(sieving)
    if not positive:
        raise InfeasibleSieveError(f"delta <= 0 for sieving primes {sieving}")
    return SieveContext(n, s, sieving, delta, (s - 1) / delta + 2)


def log_sieve_rhs(ctx: SieveContext, c: float) -> float:
    """``log(c * (2**(n-s) * Delta - 1))``."""
    log_main = (ctx.n - ctx.s) * LN2 + math.log(ctx.capital_delta)
    return math.log(c) + log_main + math.log1p(-math.exp(-log_main))


def sieve_rhs(ctx: SieveContext, c: float) -> float:
    return math.exp(log_sieve_rhs(ctx, c))


def optimal_sieve_context(prime_divisors: list[int], c: float = 1.0) -> SieveContext:
    """Best ``s`` in ``1..n-1`` (2 is never a sieving prime); ties go to smaller ``s``.

    Scaling ``c`` does not move the minimiser; it is accepted for symmetry
    with :func:`sieve_rhs`.
    """
    divs = sorted(set(prime_divisors))
    if not divs or divs[0] != 2:
        raise DomainError("prime divisor list must contain 2")
    n = len(divs)
    best: SieveContext | None = None
    best_val = math.inf
    # walk s upward, extending the suffix sum of reciprocals
    exact = divs[-1] <= EXACT_DELTA_LIMIT
    acc_exact = Fraction(0)
    acc = 0.0
    for s in range(1, n):
        q = divs[n - s]
        if exact:
            acc_exact += Fraction(1, q)
            if acc_exact >= 1:
                break
            delta = float(1 - acc_exact)
        else:
            acc += 1 / q
            delta = 1 - acc
            if delta <= 0:
                break
        ctx = SieveContext(n, s, tuple(divs[n - s :]), delta, (s - 1) / delta + 2)
        val = log_sieve_rhs(ctx, c)
        if val < best_val:
            best, best_val = ctx, val
    if best is None:
        raise InfeasibleSieveError(f"no feasible sieve for divisors {divs[:5]}... (n={n})")
    return best


def sieve_holds(alpha: float, log_p: float, ctx: SieveContext, c: float, margin: float = 1e-9) -> bool:
    if alpha <= 0.5:
        raise DomainError("need alpha > 1/2")
    return (alpha - 0.5) * log_p - math.log(log_p) - log_sieve_rhs(ctx, c) > margin


def divisor_set_threshold(
    alpha: float, prime_divisors: list[int], cfg: BoundConfig, c: float | None = None
) -> tuple[LogReal, SieveContext | None]:
    """Sieve threshold for primes whose ``p-1`` has exactly these prime divisors.

    With a single divisor (``p-1`` a power of 2) no sieve is possible and the
    plain factor ``2**1 - 1`` is used; the context is then None.
    """
    if alpha <= 0.5:
        raise NoThresholdError(f"alpha={alpha} <= 1/2")
    c = reference_constant(cfg) if c is None else c
    divs = sorted(set(prime_divisors))
    if len(divs) == 1:
        log_rhs = math.log(c) + log_two_pow_minus_one(1)
        ctx = None
    else:
        ctx = optimal_sieve_context(divs, c)
        log_rhs = log_sieve_rhs(ctx, c)
    return LogReal(log_excess_threshold(alpha - 0.5, log_rhs, cfg.safety_margin)), ctx


def sieve_threshold(alpha: float, omega: int, cfg: BoundConfig, c: float | None = None) -> LogReal:
    """Threshold ``p_u`` for class ``omega`` in its worst case, ``p-1`` divisible by the first ``omega`` primes."""
    if omega < 1:
        raise DomainError("omega must be >= 1")
    return divisor_set_threshold(alpha, first_primes(omega), cfg, c)[0]


def sieve_exception_table(alpha_list: list[float], cfg: BoundConfig) -> ExceptionTable:
    """Classes left after the sieve, with the primes ``[lo, hi]`` still to check.

    A class survives iff ``max(primorial(omega) + 1, cutoff) < p_u``. Classes
    are scanned up to the no-sieve Robin cap, above which none can survive.
    """
    c = reference_constant(cfg)
    rows, classes = [], []
    for alpha in alpha_list:
        if not 0.5 < alpha < 1:
            raise DomainError(f"alpha={alpha} outside (0.5, 1)")
        cap = smallest_primorial_above(global_robin_threshold(alpha, cfg)[0]) - 1
        per_alpha = []
        for w in range(1, cap + 1):
            p_u = sieve_threshold(alpha, w, cfg, c)
            p_min = primorial(w) + 1
            lo = max(p_min, cfg.verified_cutoff)
            exc = math.log(lo) < p_u.log_value
            interval = (lo, p_u.ceil_int()) if exc else None
            per_alpha.append(ExceptionClass(alpha, w, p_min, p_u, exc, Mode.CUTOFF, interval))
        rows.append(_summarise(alpha, per_alpha, Mode.CUTOFF, omega_cap=cap))
        classes.extend(per_alpha)
    return ExceptionTable(rows, classes)

