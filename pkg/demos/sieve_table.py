"""Exception classes after the e-free sieve, with the prime ranges left to check.

Run: python demos/sieve_table.py
"""

from primroot.config import BoundConfig
from primroot.sieve import optimal_sieve_context, sieve_exception_table
from primroot.primes import first_primes

cfg = BoundConfig()
ctx = optimal_sieve_context(first_primes(13), 1.0)
print(f"first 13 primes: sieve on {ctx.sieving_primes}, delta {ctx.delta:.5f}, Delta {ctx.capital_delta:.4f}")

table = sieve_exception_table([0.69, 0.68, 0.65, 0.6309], cfg)
for row in table.rows:
    print(f"alpha={row.alpha}: classes [{row.omega_lower}, {row.omega_upper}]")
    for k in table.classes_for(row.alpha):
        if k.is_exception:
            lo, hi = k.interval
            print(f"    omega={k.omega}: check {lo:.3e} <= p <= {hi:.3e}")
