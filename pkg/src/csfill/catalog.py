"""
Runnable presets reproducing the numbers of the worked examples.

Each preset returns a JSON-serialisable dict.
"""
from __future__ import annotations

from fractions import Fraction

from . import filling_bounds as bounds, cable, charvar, pretzel
from .lattice import slope_of
from .seminorm import CullerShalenSeminorm, classify, minimal_value

TREFOIL_BAND = CullerShalenSeminorm.from_pairs([(1, -6)])
TREFOIL_FIBRE = slope_of(6, 1)


def trefoil_claims(n_dihedral=1):
    """The ten integral finite/cyclic slopes 1..11 (not 6) on the trefoil.

    s(X_0) = 1 and no finite/cyclic slope is a boundary slope, so the
    multiplicity hypothesis holds.  The D-type bound is sharp at distance 2
    only if X_0 carries at least one dihedral character, hence
    n_dihedral = 1.
    """
    claims = []
    for m in range(1, 12):
        if m == 6:
            continue
        r = slope_of(m, 1)
        c = bounds.torus_knot_surgery(3, 2, r)
        t = bounds.FiniteType.C if isinstance(c, bounds.Cyclic) else c.type
        ctx = bounds.BoundContext(1, n_dihedral=n_dihedral,
                                  certificate=bounds.Certificate.NOT_BOUNDARY_SLOPE)
        claims.append((r, t, ctx))
    return claims


def free_product_components(p=2, q=3):
    """Components and curves of X(Z/p * Z/q), reducible parameters, critical points of g_1."""
    total, curves = charvar.component_counts(p, q)
    comps = []
    for c in charvar.components(p, q):
        row = {"j": c.j, "k": c.k, "curve": c.is_curve}
        if c.is_curve:
            vals, nchar = charvar.reducible_parameters(c)
            row["reducible_parameters"] = [[v.real, v.imag] for v in vals]
            row["reducible_characters"] = nchar
            crit = charvar.g1_critical_point_exact(c)
            row["g1_critical_point"] = [crit.real, crit.imag]
        comps.append(row)
    return {"p": p, "q": q, "components": total, "curves": curves,
            "by_component": comps}


def trefoil_audit():
    """Norm and distance audit of the trefoil finite/cyclic slopes against the band (1, -6)."""
    kind = classify(TREFOIL_BAND)
    rows = bounds.audit_rows(TREFOIL_BAND, trefoil_claims())
    return {
        "seminorm": TREFOIL_BAND.to_json(),
        "classification": str(kind),
        "s": minimal_value(TREFOIL_BAND),
        "rows": [{"slope": str(r.slope), "type": str(r.type), "norm": r.norm,
                  "distance": r.distance, "distance_bound": str(r.distance_bound),
                  "ok": r.ok, "attained": r.attained} for r in rows],
        "violations": sum(not r.ok for r in rows),
    }


def trefoil_reducible():
    """The reducible filling 6/1 on the trefoil and its lens-space summands."""
    r = slope_of(6, 1)
    c = bounds.torus_knot_surgery(3, 2, r)
    return {"knot": "trefoil (3,2)", "slope": str(r), "class": str(c),
            "lens_orders": sorted((c.p, c.q)),
            "summands": ["L(3,1)", "L(2,1)"],
            "slope_2": str(bounds.torus_knot_surgery(3, 2, slope_of(2, 1))),
            "D16xZ3_triangle_type": str(bounds.triangle_type(2, 2, 4))}


def icosahedral_cable_report(k=5, m=1, n=2):
    """Cable on a D^2(2,3,5) Seifert space: finite filling at large distance."""
    e = cable.icosahedral_cable(k, m, n)
    return {"k": k, "m": m, "n": n, "r1": list(e.r1), "r2": list(e.r2),
            "r1_image": list(e.r1_image), "delta_r1_r2": e.delta_r1_r2,
            "delta_r1_image_fibre": e.delta_r1_image_fibre,
            "r2_finite": e.r2_finite, "r1_vertical_torus": e.r1_vertical_torus}


def klein_cable_report(k=1):
    """Cable on the twisted I-bundle over the Klein bottle: distance 2k+1 pair."""
    e = cable.klein_cable(k)
    return {"k": k, "r1": list(e.r1), "r2": list(e.r2),
            "delta_r1_r2": e.delta_r1_r2, "delta_r1_phi_plus": e.delta_r1_phi_plus,
            "delta_r2_image_fibre": e.delta_r2_image_fibre,
            "r2_finite": e.r2_finite, "other_fibre_image": list(e.other_fibre_image)}


def pretzel_template_slope(m=10):
    """Boundary slope of the candidate surface in the (-1/3, 1/(2m+1), 5/18) pretzel."""
    cand, ref = pretzel.candidate_system(m), pretzel.seifert_system(m)
    return {"m": m, "tau_S": str(pretzel.tau(cand)), "tau_S0": str(pretzel.tau(ref)),
            "boundary_slope": str(pretzel.boundary_slope(cand, ref)),
            "closed_form": str(Fraction(4, m - 6) - 2 + 4 * m)}


def pretzel_family_table(n_min=3, n_max=10):
    """Boundary slopes (16n^2+22n+1)/n of K_{4n+6} with |H_1| of the filling."""
    rows = []
    for n in range(n_min, n_max + 1):
        res = pretzel.pretzel_family(n)
        rows.append({"n": n, "m": res.m, "slope": str(res.slope), "h1": res.h1_order})
    return {"rows": rows}


CATALOG = {
    "3.2": free_product_components,
    "6.6": trefoil_audit,
    "7.8": trefoil_reducible,
    "9.11": icosahedral_cable_report,
    "9.12": klein_cable_report,
    "10.2": pretzel_template_slope,
    "thm1.8": pretzel_family_table,
}


def list_examples():
    return {key: (fn.__doc__ or fn.__name__).strip().splitlines()[0]
            for key, fn in CATALOG.items()}
