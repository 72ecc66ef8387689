"""Least primitive roots, e-free residues, and the character-sum indicator.

Run: python demos/least_roots.py
"""

from primroot.characters import build_character_table, efree_indicator, primitive_root_indicator
from primroot.primes import factorize, primorial
from primroot.roots import is_e_free, least_primitive_root

p = primorial(5) + 1  # 2311, with p - 1 = 2*3*5*7*11
f = factorize(p - 1)
print(f"p = {p}, p - 1 = {f.as_dict()}")
g = least_primitive_root(p, f)
print(f"least primitive root g(p) = {g}, and p**0.68 = {p ** 0.68:.2f}")

# The indicator built from characters agrees with the direct test.
table = build_character_table(p)
for x in range(1, 8):
    print(f"  x={x}: indicator {primitive_root_indicator(x, p, table):+.12f}  "
          f"(p-1)-free {is_e_free(x, p - 1, p, f)}")

# e-free for a smaller even e: 2 is a square mod 7, 3 is not.
for n in (2, 3):
    print(f"n={n}, e=2, p=7: e-free {is_e_free(n, 2, 7)}, indicator {efree_indicator(n, 2, 7):.12f}")
