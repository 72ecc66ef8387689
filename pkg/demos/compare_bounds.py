"""Polya-Vinogradov against Burgess (r = 2) for sums of length H = p**alpha.

The Burgess bound grows like p**(alpha/2 + 3/16) and Polya-Vinogradov like
p**(1/2), so Burgess only wins eventually when alpha < 5/8.

Run: python demos/compare_bounds.py
"""

from primroot.bounds import best_burgess_r, burgess_bound, crossover_p, pv_bound, pv_constant
from primroot.config import BoundConfig
from primroot.logreal import LogReal

cfg = BoundConfig()
c2 = cfg.burgess_constants[2]
print(f"C(2) = {c2.value} ({c2.provenance})")

for alpha in (0.55, 0.6, 0.62, 0.63, 0.7):
    x = crossover_p(alpha, cfg)
    if x is None:
        print(f"alpha={alpha}: Polya-Vinogradov stays smaller for all large p")
    else:
        print(f"alpha={alpha}: Burgess below Polya-Vinogradov for p > {x}")

p = LogReal.from_log10(30)
for alpha in (0.6, 0.7):
    H = p**alpha
    print(f"p=1e30, H=p^{alpha}: PV {pv_bound(p, pv_constant(p))}, "
          f"Burgess {burgess_bound(H, p, 2, cfg)}, best r {best_burgess_r(alpha, p, cfg)}")
