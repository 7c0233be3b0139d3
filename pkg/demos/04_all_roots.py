"""
All roots by descent and deflation
==================================

Each root is found by repeated steps from the origin, polished on the
original polynomial, and divided out.  Durand-Kerner serves as an
independent check.
"""

from argand import Polynomial, durand_kerner, find_all_roots, pair_root_sets
from argand.sampling import make_rng, random_monic

p = Polynomial.from_roots([1, -1, 2j, -2j, (0.5, 0.5)])
result = find_all_roots(p)
for root, res, steps in zip(result.roots, result.residuals, result.steps_per_root):
    print(f"{str(root):>28}  |y| = {res:.1e}  steps = {steps}")

_, gap = pair_root_sets(list(result.roots), durand_kerner(p))
print("largest distance to Durand-Kerner:", gap)

# A random monic polynomial with coefficients in the disk of radius 2.
rng = make_rng(7)
q = random_monic(rng, 10)
_, gap = pair_root_sets(list(find_all_roots(q).roots), durand_kerner(q))
print("degree 10 random polynomial, distance:", gap)
