"""Exhaustive check of g(p) < p**alpha for small primes.

Run: python demos/desk_scan.py
"""

from primroot.verify import desk_violations, least_roots

limit = 10**6
worst = max(least_roots(limit), key=lambda pg: pg[1])
print(f"largest least primitive root below {limit}: g({worst[0]}) = {worst[1]}")
for alpha in (0.68, 0.6309, 0.55):
    bad = desk_violations(alpha, limit)
    print(f"alpha={alpha}: {len(bad)} primes below {limit} violate the bound, first few {bad[:5]}")
