"""Desk-scale checks: exhaustive least-primitive-root scans and indicator oracles."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .characters import (
    build_character_table,
    efree_indicator_all,
    primitive_root_indicator_all,
    round_indicator,
)
from .primes import factorize, primes_up_to, sieve, smallest_prime_factors
from .roots import below_power, is_e_free, is_primitive_root


def least_roots(limit: int) -> Iterator[tuple[int, int]]:
    """``(p, g(p))`` for every prime ``p < limit``, factoring ``p - 1`` from a smallest-factor table."""
    if limit <= 2:
        return
    spf = smallest_prime_factors(limit)
    for p in sieve(limit - 1).tolist():
        if p == 2:
            yield 2, 1
            continue
        n, qs = p - 1, []
        while n > 1:
            q = int(spf[n])
            qs.append(q)
            while n % q == 0:
                n //= q
        exps = [(p - 1) // q for q in qs]
        g = 2
        while any(pow(g, e, p) == 1 for e in exps):
            g += 1
        yield p, g


def desk_violations(alpha: float, limit: int) -> list[tuple[int, int]]:
    """Primes ``p < limit`` with ``g(p) >= p**alpha``, as ``(p, g(p))`` pairs."""
    return [(p, g) for p, g in least_roots(limit) if not below_power(g, p, alpha)]


def multiplicative_order(x: int, p: int) -> int:
    """Order of ``x`` modulo ``p`` by repeated multiplication."""
    x %= p
    if x == 0:
        raise ValueError("x must be a unit")
    k, y = 1, x
    while y != 1:
        y = y * x % p
        k += 1
    return k


@dataclass
class OracleReport:
    primes_checked: int = 0
    indicator_checks: int = 0
    efree_checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_primitive_indicator(pmax: int, report: OracleReport | None = None) -> OracleReport:
    """Primitive-root indicator against ``order(x) == p - 1`` for every prime ``p < pmax``.

    Also checks that ``(p-1)``-free residues are exactly the primitive roots.
    """
    report = OracleReport() if report is None else report
    for p in primes_up_to(pmax - 1):
        report.primes_checked += 1
        values = primitive_root_indicator_all(p)
        f = factorize(p - 1)
        for x in range(1, p):
            try:
                ind = round_indicator(values[x - 1])
            except ArithmeticError as exc:
                report.failures.append(f"p={p} x={x}: {exc}")
                continue
            order_pred = multiplicative_order(x, p) == p - 1
            if ind != order_pred:
                report.failures.append(f"p={p} x={x}: indicator {ind} but order predicate {order_pred}")
            if is_e_free(x, p - 1, p, f) != is_primitive_root(x, p, f):
                report.failures.append(f"p={p} x={x}: (p-1)-free disagrees with primitive root")
            report.indicator_checks += 1
    return report


def check_efree_indicator(pmax: int, report: OracleReport | None = None) -> OracleReport:
    """e-free indicator against :func:`is_e_free` for primes ``p < pmax`` and even ``e | p - 1``."""
    report = OracleReport() if report is None else report
    for p in primes_up_to(pmax - 1):
        if p == 2:
            continue
        table = build_character_table(p)
        f = factorize(p - 1)
        for e in sorted(f.divisors()):
            if e % 2:
                continue
            fe = factorize(e)
            values = efree_indicator_all(e, p, table)
            for n in range(1, p):
                try:
                    ind = round_indicator(values[n - 1])
                except ArithmeticError as exc:
                    report.failures.append(f"p={p} e={e} n={n}: {exc}")
                    continue
                if ind != is_e_free(n, e, p, fe):
                    report.failures.append(f"p={p} e={e} n={n}: e-free indicator disagrees")
                report.efree_checks += 1
    return report


def run_oracles(pmax: int = 2000, efree_pmax: int = 500) -> OracleReport:
    """Both indicator checks: primitive roots below ``pmax``, e-free below ``efree_pmax``."""
    report = check_primitive_indicator(pmax)
    return check_efree_indicator(efree_pmax, report)
