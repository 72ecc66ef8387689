"""Polya-Vinogradov and Burgess character-sum majorants, Robin's omega bound.

Everything is evaluated on ``log p`` so that primes near 1e1300 are handled.
"""

from __future__ import annotations

import math
from typing import Callable

from .config import BoundConfig
from .errors import ConfigError, DomainError
from .logreal import LogReal

LOG3 = math.log(3)


def pv_constant(p: LogReal) -> float:
    """Optimised Polya-Vinogradov constant ``c(p)``; decreases slowly towards 1/(2 pi)."""
    L = p.log_value
    if L < LOG3 - 1e-15:
        raise DomainError("pv_constant needs p >= 3")
    inv_sqrt = math.exp(-L / 2)
    # (10.15 + sqrt p)/(1 + sqrt p) = 1 + 9.15/(1 + sqrt p), written to avoid overflow
    ratio = 1 + 9.15 * inv_sqrt / (1 + inv_sqrt)
    return 1 / (2 * math.pi) + (0.4325 + ratio + inv_sqrt) / (math.pi * L)


def pv_bound(p: LogReal, c: float) -> LogReal:
    """``c * sqrt(p) * log(p)``."""
    L = p.log_value
    if L <= 0 or c <= 0:
        raise DomainError("pv_bound needs p > 1 and c > 0")
    return LogReal(math.log(c) + L / 2 + math.log(L))


def burgess_exponent(r: int) -> float:
    """Exponent of ``p`` in the Burgess bound, ``(r+1)/(4 r^2)``."""
    return (r + 1) / (4 * r * r)


def burgess_bound(H: LogReal, p: LogReal, r: int, cfg: BoundConfig) -> LogReal:
    """``C(r) H^(1-1/r) p^((r+1)/(4r^2)) (log p)^(1/(2r))``."""
    if r < 2:
        raise DomainError("Burgess r must be >= 2")
    C = cfg.burgess(r)
    L = p.log_value
    if L <= 0:
        raise DomainError("burgess_bound needs p > 1")
    if H.log_value > L * (1 + 1e-15):
        raise DomainError("burgess_bound needs H <= p")
    return LogReal(
        math.log(C)
        + (1 - 1 / r) * H.log_value
        + burgess_exponent(r) * L
        + math.log(L) / (2 * r)
    )


def best_burgess_r(alpha: float, p: LogReal, cfg: BoundConfig) -> int:
    """The tabulated ``r`` giving the smallest Burgess bound at ``H = p**alpha``; ties go to smaller r."""
    if not 0 < alpha < 1:
        raise DomainError("alpha must lie in (0, 1)")
    if not cfg.burgess_constants:
        raise ConfigError("empty Burgess constant table")
    H = p**alpha
    return min(sorted(cfg.burgess_constants), key=lambda r: burgess_bound(H, p, r, cfg).log_value)


def bisect_threshold(holds: Callable[[float], bool], lo: float, hi: float, rel_tol: float = 1e-12) -> float:
    """Shrink ``[lo, hi]`` with ``holds(lo)`` false and ``holds(hi)`` true; return the true end."""
    while hi - lo > rel_tol * max(1.0, abs(hi)):
        mid = 0.5 * (lo + hi)
        if holds(mid):
            hi = mid
        else:
            lo = mid
    return hi


def eventual_threshold(holds: Callable[[float], bool], start: float, floor: float = LOG3) -> float:
    """Smallest ``L >= floor`` past which ``holds`` stays true.

    ``holds`` must be monotone (false then true) on ``[start, inf)``; the
    stretch ``[floor, start]`` is checked on a grid.
    """
    start = max(start, floor)
    if holds(start):
        grid = [floor + (start - floor) * k / 256 for k in range(257)]
        failing = [x for x in grid if not holds(x)]
        if not failing:
            return floor
        lo = max(failing)
        return bisect_threshold(holds, lo, min(x for x in grid if x > lo))
    hi = 2 * start
    while not holds(hi):
        hi *= 2
        if hi > 1e300:
            raise DomainError("no threshold found")
    return bisect_threshold(holds, start, hi)


def log_excess_threshold(slope: float, log_rhs: float, margin: float) -> float:
    """Threshold in ``L = log p`` for ``slope*L - log L - log_rhs > margin``.

    The left side is convex in ``L`` with its minimum at ``1/slope``, so the
    inequality holds for all ``L`` above the larger root.
    """
    if slope <= 0:
        raise DomainError("slope must be positive")
    return eventual_threshold(
        lambda L: slope * L - math.log(L) - log_rhs > margin, 1 / slope
    )


def crossover_p(alpha: float, cfg: BoundConfig, c: float | None = None) -> LogReal | None:
    """Smallest ``p`` beyond which the r=2 Burgess bound at ``H = p**alpha`` is <= Polya-Vinogradov.

    ``c`` fixes the Polya-Vinogradov constant; by default ``c(p)`` is used at
    each ``p``. Returns None when Burgess is eventually larger, which happens
    exactly when ``alpha > 5/8``.
    """
    if not 0 < alpha < 1:
        raise DomainError("alpha must lie in (0, 1)")
    if alpha / 2 + burgess_exponent(2) - 0.5 > 0:
        return None
    margin = cfg.safety_margin

    def holds(L: float) -> bool:
        p = LogReal(L)
        cc = pv_constant(p) if c is None else c
        return burgess_bound(p**alpha, p, 2, cfg).log_value - pv_bound(p, cc).log_value <= -margin

    # beyond L = 4 the log-ratio is strictly decreasing
    return LogReal(eventual_threshold(holds, 4.0))


def robin_omega_bound(log_n: float, cfg: BoundConfig) -> float:
    """Robin's explicit upper bound for the number of distinct prime factors of ``n``."""
    if log_n <= 1 or math.log(log_n) <= 1:
        raise DomainError("robin_omega_bound needs log log n > 1")
    ll = math.log(log_n)
    return log_n / ll * (1 + 1 / ll + cfg.robin_constant / ll**2)
