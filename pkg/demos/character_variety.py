"""Characters of Z/p * Z/q: components, reducible points, and the map g_1.

On the curve component C(j, k) the representations are
x -> diag(lambda, 1/lambda), y -> [[a, 1], [a(tau - a) - 1, tau - a]].
"""
import cmath

from csfill.charvar import (ComponentIndex, Word, char_equal, component_counts,
                            g1_critical_point, g1_critical_point_exact, is_dihedral,
                            is_reducible, reducible_parameters, rho_a, word_eval)

for p, q in [(2, 3), (3, 5), (4, 6)]:
    total, curves = component_counts(p, q)
    print(f"Z/{p} * Z/{q}: {total} components, {curves} of them curves")

c = ComponentIndex(3, 5, 1, 2)
print(f"\nC(1,2) for Z/3 * Z/5: lambda = {c.lam:.4f}, tau = {c.tau:.4f}")
vals, n = reducible_parameters(c)
print(f"reducible at a = {vals[0]:.4f}, {vals[1]:.4f} ({n} characters)")
for a in [vals[0], 0.5 + 0.5j, 2.0]:
    rep = rho_a(c, a)
    print(f"  a = {a:.3f}: reducible {is_reducible(rep)}, dihedral {is_dihedral(rep)},"
          f" tr(xy) = {word_eval(rep, Word.parse('xy')).trace():.4f}")

print("\nfibres of a -> character")
for comp in [ComponentIndex(3, 5, 1, 2), ComponentIndex(4, 5, 2, 1)]:
    a = 0.3 + 0.8j
    same = char_equal(rho_a(comp, a), rho_a(comp, comp.tau - a))
    print(f"  p={comp.p}, j={comp.j}: rho_a ~ rho_(tau-a)? {same}")

print("\ncritical point of g_1 = tr(xy)^2")
print(f"  finite differences: {g1_critical_point(c):.8f}")
print(f"  closed form:        {g1_critical_point_exact(c):.8f}")
print(f"  |lambda| = {abs(c.lam):.1f}, arg = {cmath.phase(c.lam):.4f}")
