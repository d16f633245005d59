"""Fillings through a cable space multiply distances by n^2.

Filling T+ of the (m, n) cable space along a slope at distance 1 from the
fibre gives a solid torus; we follow the meridian to T- and then through
the two gluings used for the large-distance finite filling pairs.
"""
from csfill.cable import (CableSpace, distance_scaling, feasible_multiplicity_triples,
                          fill_plus, icosahedral_cable, klein_cable)

cs = CableSpace(1, 2)
print(f"cable space (1,2): phi+ = {cs.phi_plus}, phi- = {cs.phi_minus}")
for k in range(-2, 4):
    alpha, mer = fill_plus(cs, k)
    print(f"  k = {k:>2}: fill along {alpha} -> meridian {mer} on T-")
a1, a3 = fill_plus(cs, 1)[0], fill_plus(cs, 3)[0]
print("distance 2 on T+ becomes", distance_scaling(cs, a1, a3)[1], "on T-")

print("\nFinite/large pairs on a D^2(2,3,5) Seifert piece")
for k in (2, 5, 9):
    e = icosahedral_cable(k, 1, 2)
    print(f"  k = {k}: Delta(r1, r2) = {e.delta_r1_r2}; M(r2) finite: {e.r2_finite};"
          f" M(r1) has a vertical torus: {e.r1_vertical_torus}")

print("\nCable on the twisted I-bundle over the Klein bottle")
for k in (-3, 0, 1, 4):
    e = klein_cable(k)
    print(f"  k = {k:>2}: Delta = {e.delta_r1_r2}, M(r2) finite: {e.r2_finite}")

print("\n(n, Delta, Delta_phi) with n >= 2 and n * Delta * Delta_phi in {1, 3}:",
      feasible_multiplicity_triples())
