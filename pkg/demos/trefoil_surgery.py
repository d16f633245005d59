"""Which Dehn fillings of the trefoil exterior have finite fundamental group?

Moser's rule classifies every slope m/n by its distance e = |m - 6n| from
the fibre slope 6/1.  Afterwards we check the slopes against the band
seminorm {(1, -6)} and the finite-filling bounds.
"""
from collections import Counter

from csfill.catalog import TREFOIL_BAND, trefoil_claims
from csfill.filling_bounds import audit_rows, slope_grid, torus_knot_surgery

print("Integral surgeries on the (3,2) torus knot")
for m in range(-2, 14):
    r = (m, 1)
    print(f"  {m:>3}/1   e = {abs(m - 6):>2}   {torus_knot_surgery(3, 2, r)}")

kinds = Counter()
for r in slope_grid(100, 10):
    c = torus_knot_surgery(3, 2, r)
    kinds[type(c).__name__] += 1
print("\nOver |m| <= 100, 0 <= n <= 10:", dict(kinds))

print("\nAudit against ||.|| = |m - 6n| with s = 1")
for row in audit_rows(TREFOIL_BAND, trefoil_claims()):
    mark = "sharp" if row.attained else ""
    print(f"  {str(row.slope):>5}  {row.type}-type  Delta = {row.distance}"
          f"  bound {row.distance_bound}  {mark}")
