"""Screening of omega(p-1) classes with the Polya-Vinogradov bound alone.

A prime ``p`` has a primitive root below ``p**alpha`` once

    p**alpha - (2**w - 1) * c * sqrt(p) * log(p) > 0,     w = omega(p - 1).

Per class ``w`` this gives a threshold; substituting Robin's bound for ``w``
gives one threshold ``p*`` for all classes at once. Classes whose smallest
member ``primorial(w) + 1`` lies below their threshold survive as exceptions.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .bounds import LOG3, log_excess_threshold, pv_constant, robin_omega_bound
from .config import BoundConfig
from .errors import DomainError, IterationError, NoThresholdError
from .logreal import LogReal
from .primes import primorial

LN2 = math.log(2)


class Mode(str, enum.Enum):
    RAW = "raw"
    CUTOFF = "cutoff"


@dataclass(frozen=True)
class ExceptionClass:
    """One omega(p-1) class at one exponent ``alpha``.

    ``interval`` is set by the sieve tables: the range ``[lo, hi]`` of primes
    still to be checked, or None when the class is clear.
    """

    alpha: float
    omega: int
    p_min: int
    p_threshold: LogReal
    is_exception: bool
    mode: Mode
    interval: tuple[int, int] | None = None


@dataclass(frozen=True)
class TableRow:
    """Summary ``[omega_lower, omega_upper]`` of the exception classes for one alpha.

    Both bounds are None when no class survives. ``omega_cap`` and ``p_star``
    are only filled by the Robin-based screen: ``p_star`` is the global
    threshold and ``omega_cap`` the largest class that can contain a prime
    below it. ``p_bound`` is the largest surviving class threshold, i.e. the
    bound holds for every ``p`` above it.
    """

    alpha: float
    omega_lower: int | None
    omega_upper: int | None
    mode: Mode
    omega_cap: int | None = None
    p_star: LogReal | None = None
    robin_omega: float | None = None
    p_bound: LogReal | None = None


@dataclass(frozen=True)
class ExceptionTable:
    rows: list[TableRow]
    classes: list[ExceptionClass]

    def row(self, alpha: float) -> TableRow:
        return next(r for r in self.rows if r.alpha == alpha)

    def classes_for(self, alpha: float) -> list[ExceptionClass]:
        return [c for c in self.classes if c.alpha == alpha]


def log_two_pow_minus_one(w: float) -> float:
    """``log(2**w - 1)`` for ``w > 0`` without overflow."""
    if w <= 0:
        raise DomainError("need w > 0")
    return w * LN2 + math.log1p(-(2.0 ** -w))


def reference_constant(cfg: BoundConfig) -> float:
    """``c(p0)``; valid for every ``p > p0`` because ``c`` decreases."""
    return pv_constant(LogReal.from_value(cfg.pv_reference_prime))


def nosieve_holds(alpha: float, log_p: float, omega: float, c: float, margin: float = 1e-9) -> bool:
    """Whether the no-sieve inequality holds at ``p = exp(log_p)``, with a conservative margin."""
    if omega == 0:
        return True
    rhs = log_two_pow_minus_one(omega) + math.log(c) + log_p / 2 + math.log(log_p)
    return alpha * log_p - rhs > margin


def per_omega_threshold(alpha: float, omega: float, cfg: BoundConfig, c: float | None = None) -> LogReal:
    """Smallest ``p`` above which the no-sieve inequality holds for class ``omega``.

    ``omega`` may be fractional (Robin's bound is). ``c`` defaults to ``c(p0)``.
    """
    if alpha <= 0.5:
        raise NoThresholdError(f"alpha={alpha} <= 1/2: the right side always wins eventually")
    if omega == 0:
        return LogReal(LOG3)
    c = reference_constant(cfg) if c is None else c
    log_rhs = log_two_pow_minus_one(omega) + math.log(c)
    return LogReal(log_excess_threshold(alpha - 0.5, log_rhs, cfg.safety_margin))


def global_robin_threshold(
    alpha: float, cfg: BoundConfig, tol: float = 1e-3, max_iter: int = 200
) -> tuple[LogReal, float]:
    """Threshold ``p*`` for the inequality with ``omega`` replaced by Robin's bound at ``p``.

    Fixed-point iteration: start from the class-20 threshold, then alternate
    Robin's bound at the current ``p`` with the per-class threshold for it.
    Returns ``(p*, robin_bound_at_p*)``.
    """
    c = reference_constant(cfg)
    L = per_omega_threshold(alpha, 20, cfg, c).log_value
    trace = [L]
    for _ in range(max_iter):
        w = robin_omega_bound(L, cfg)
        L_new = per_omega_threshold(alpha, w, cfg, c).log_value
        trace.append(L_new)
        if abs(L_new - L) < tol:
            # one more Robin update at the final point keeps the pair consistent
            return LogReal(L_new), robin_omega_bound(L_new, cfg)
        L = L_new
    raise IterationError(f"Robin fixed point did not converge for alpha={alpha}", trace)


def smallest_primorial_above(p: LogReal) -> int:
    """Least ``k`` with ``primorial(k) > p``."""
    k = 1
    while math.log(primorial(k)) <= p.log_value:
        k += 1
    return k


def _is_exception(p_min: int, threshold: LogReal, mode: Mode, cutoff: int) -> bool:
    lo = p_min if mode is Mode.RAW else max(p_min, cutoff)
    return math.log(lo) < threshold.log_value


def _summarise(alpha: float, classes: list[ExceptionClass], mode: Mode, **extra) -> TableRow:
    exc = [k for k in classes if k.is_exception]
    if not exc:
        return TableRow(alpha, None, None, mode, **extra)
    return TableRow(
        alpha,
        min(k.omega for k in exc),
        max(k.omega for k in exc),
        mode,
        p_bound=max(k.p_threshold for k in exc),
        **extra,
    )


def omega_exception_table(alpha_list: list[float], cfg: BoundConfig, mode: Mode | str = Mode.RAW) -> ExceptionTable:
    """Exception classes of omega(p-1) from the no-sieve screen.

    For each alpha: ``p*`` from the Robin fixed point, ``omega_cap`` = (least
    ``k`` with ``primorial(k) > p*``) - 1, and per-class status for every
    ``1 <= omega <= omega_cap``.
    """
    mode = Mode(mode)
    c = reference_constant(cfg)
    rows, classes = [], []
    for alpha in alpha_list:
        if not 0.5 < alpha < 1:
            raise DomainError(f"alpha={alpha} outside (0.5, 1)")
        p_star, w_star = global_robin_threshold(alpha, cfg)
        cap = smallest_primorial_above(p_star) - 1
        per_alpha = []
        for w in range(1, cap + 1):
            thr = per_omega_threshold(alpha, w, cfg, c)
            p_min = primorial(w) + 1
            per_alpha.append(
                ExceptionClass(alpha, w, p_min, thr, _is_exception(p_min, thr, mode, cfg.verified_cutoff), mode)
            )
        rows.append(_summarise(alpha, per_alpha, mode, omega_cap=cap, p_star=p_star, robin_omega=w_star))
        classes.extend(per_alpha)
    return ExceptionTable(rows, classes)
