"""Boundary slopes of the pretzel knots K_m of type (-1/3, 1/(2m+1), 5/18).

The slope of a candidate surface is the difference of twist numbers of its
edge-path system and that of a Seifert surface.
"""
from csfill.pretzel import (boundary_slope, candidate_system, pretzel_family, seifert_system,
                            tau)

m = 10
cand, ref = candidate_system(m), seifert_system(m)
print(f"K_{m}:")
for i, path in enumerate(cand.paths, start=1):
    steps = ", ".join(f"{'+' if s.sign > 0 else '-'}{s.weight} <{s.start}>-><{s.end}>"
                      for s in path) or "constant"
    print(f"  gamma_{i}: {steps}")
print(f"  tau(S) = {tau(cand)}, tau(S0) = {tau(ref)}, slope = {boundary_slope(cand, ref)}")

print("\nThe family K_{4n+6}")
for n in [3, 4, 5, 10, 25, 50, -3, -4]:
    r = pretzel_family(n)
    note = "" if r.edge_path_checked else "  (closed form only)"
    print(f"  n = {n:>3}: K_{r.m:<4} slope {str(r.slope):>10}   |H_1| = {r.h1_order}{note}")
