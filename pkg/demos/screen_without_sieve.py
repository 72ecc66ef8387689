"""Which omega(p-1) classes can hold a prime with no primitive root below p**alpha?

Only the Polya-Vinogradov bound is used here. Robin's bound on omega gives a
single threshold p*, and classes whose smallest member lies below their own
threshold are kept.

Run: python demos/screen_without_sieve.py
"""

from primroot.config import BoundConfig
from primroot.screen import omega_exception_table

cfg = BoundConfig()
for mode in ("raw", "cutoff"):
    table = omega_exception_table([0.8, 0.75, 0.7, 0.65, 0.6309], cfg, mode)
    print(f"mode={mode}")
    for row in table.rows:
        print(f"  alpha={row.alpha}: p* = {row.p_star}, Robin omega {row.robin_omega:.1f}, "
              f"largest feasible class {row.omega_cap}, exceptions [{row.omega_lower}, {row.omega_upper}]")
