"""Seifert fibred spaces: geometry of the base, H_1, and curve existence."""
from csfill.seifert import (Geometry, SeifertData, chi_orb, classify_orbifold, h1,
                            irreducible_curve_exists, is_haken, orbifold_census,
                            presentation, virtually_irreducible_curve_exists)

spaces = {
    "Poincare sphere": SeifertData.build(True, 0, -1, [(2, 1), (3, 1), (5, 1)]),
    "S1-bundle over T2, e=6": SeifertData.build(True, 1, 6, ()),
    "S2(2,2,2,2), gamma=-2": SeifertData.build(True, 0, -2, [(2, 1)] * 4),
    "S2(2,3,7,7)": SeifertData.build(True, 0, -1, [(2, 1), (3, 1), (7, 1), (7, 1)]),
    "RP3 # RP3": SeifertData.build(False, 1, 0, ()),
}

for name, sd in spaces.items():
    print(f"{name}")
    print(f"  base {sd.base}, chi = {chi_orb(sd.base)}, {classify_orbifold(sd.base).value}")
    print(f"  pi_1 = {presentation(sd)}")
    print(f"  H_1 = {h1(sd)}")
    print(f"  Haken: {is_haken(sd)}")
    print(f"  curve with an irreducible character: {irreducible_curve_exists(sd)}")
    print(f"  virtually irreducible curve: {virtually_irreducible_curve_exists(sd)}")

census = orbifold_census()
flat = [str(o) for o in census if classify_orbifold(o) is Geometry.PARABOLIC]
print(f"\n{len(census)} closed orbifolds in the census; Euclidean ones: {', '.join(flat)}")
