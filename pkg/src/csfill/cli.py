"""
Command-line interface: ``csfill <subcommand> ...``.

Exit codes: 0 success, 2 malformed input (schema), 3 precondition violated.
Documents go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import filling_bounds as bounds, cable, catalog, charvar, pretzel, seifert
from .exceptions import PreconditionError, SchemaError
from .lattice import distance, h1_filling_order, parse_slope
from .seminorm import (CullerShalenSeminorm, Indefinite, Norm, classify, evaluate,
                       fundamental_ball, minimal_value, vertex_slopes)
from .svg import ball_svg

EXIT_OK, EXIT_SCHEMA, EXIT_PRECONDITION = 0, 2, 3


@dataclass
class Output:
    doc: dict
    text: str
    rows: list | None = None
    svg: str | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise SchemaError(message)


def _load_json(inline, path, what):
    if inline is None and path is None:
        raise SchemaError(f"{what}: give inline JSON or --input FILE")
    try:
        if path is not None:
            with open(path) as fh:
                return json.load(fh)
        return json.loads(inline)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{what}: invalid JSON ({exc})") from exc
    except OSError as exc:
        raise SchemaError(f"{what}: cannot read {path}: {exc}") from exc


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, float) and x == float("inf"):
        return "inf"
    return x


# subcommand handlers

def cmd_slope(args):
    slopes = [parse_slope(s) for s in args.slopes]
    doc = {"slopes": [s.to_json() for s in slopes],
           "h1_orders": [_jsonable(h1_filling_order(s)) for s in slopes]}
    lines = [f"{s}  |H1(M(r))| = {h}" for s, h in zip(slopes, doc["h1_orders"])]
    if len(slopes) == 2:
        doc["distance"] = distance(*slopes)
        lines.append(f"distance = {doc['distance']}")
    rows = [{"slope": str(s), "h1_order": h} for s, h in zip(slopes, doc["h1_orders"])]
    return Output(doc, "\n".join(lines), rows)


def cmd_seminorm(args):
    sn = CullerShalenSeminorm.from_json(
        _load_json(args.functionals, args.input, "seminorm"))
    kind = classify(sn)
    s = minimal_value(sn)
    doc = dict(sn.to_json())
    doc["classification"] = "norm" if isinstance(kind, Norm) else \
        "indefinite" if isinstance(kind, Indefinite) else "zero"
    if isinstance(kind, Indefinite):
        doc["kernel"] = kind.kernel.to_json()
    doc["s"] = s
    ball = fundamental_ball(sn)
    doc["ball"] = ball.to_json()
    lines = [f"{kind}, s={s}"]
    rows = None
    if args.eval:
        rows = []
        for text in args.eval:
            r = parse_slope(text)
            val = evaluate(sn, r)
            rows.append({"slope": str(r), "norm": val})
            lines.append(f"||{r}|| = {val}")
        doc["evaluations"] = rows
    if args.vertices or (not args.classify and isinstance(kind, Norm)):
        if isinstance(kind, Norm):
            vs = vertex_slopes(sn)
            doc["vertex_slopes"] = [v.to_json() for v in vs]
            lines.append("vertex slopes: " + ", ".join(map(str, vs)))
        elif args.vertices:
            raise PreconditionError("vertex slopes need a norm (not indefinite or zero)")
    if args.ball and not args.classify:
        lines.append(f"ball: {json.dumps(ball.to_json())}")
    svg = ball_svg(ball, args.viewport)
    return Output(doc, "\n".join(lines), rows, svg)


def _torus_grid(args):
    p, q = args.p, args.q
    m_max, n_max = args.grid
    rows = []
    for r in bounds.slope_grid(m_max, n_max):
        c = bounds.torus_knot_surgery(p, q, r)
        rows.append({"m": r.p, "n": r.q, "slope": str(r), "e": abs(r.p - p * q * r.q),
                     "class": str(c), "finite_or_cyclic": c.finite_or_cyclic})
    if args.finite_only:
        rows = [row for row in rows if row["finite_or_cyclic"]]
    doc = {"knot": [p, q], "grid": [m_max, n_max], "rows": rows}
    width = max((len(row["slope"]) for row in rows), default=5)
    lines = [f"{'slope':>{width}}  {'e':>4}  f/c  class"]
    lines += [f"{row['slope']:>{width}}  {row['e']:>4}  {'yes' if row['finite_or_cyclic'] else 'no ':3}"
              f"  {row['class']}" for row in rows]
    return Output(doc, "\n".join(lines), rows)


def _bound_table(args):
    vi = frozenset(args.vi or ())
    ctx = bounds.BoundContext(args.s, n_dihedral=args.n_dihedral, virtually_irreducible=vi)
    rows = []
    for t in bounds.FiniteType:
        nb = bounds.norm_bound(t, ctx)
        rows.append({"type": t.name, "norm_bound": nb.value, "exact": nb.exact,
                     "distance_bound": str(bounds.distance_bound(t, ctx)),
                     "distance_bound_int": bounds.distance_bound_int(t, ctx)})
    doc = {"s": args.s, "n_dihedral": args.n_dihedral, "virtually_irreducible": sorted(vi),
           "rows": rows}
    lines = ["type  ||.||     Delta"]
    lines += [f"{r['type']:<4}  {('= ' if r['exact'] else '<= ') + str(r['norm_bound']):<8}"
              f"  <= {r['distance_bound']}" for r in rows]
    return Output(doc, "\n".join(lines), rows)


def _trefoil_audit(args):
    doc = catalog.trefoil_audit()
    lines = [f"{r['slope']:>5} {r['type']}  ||r||={r['norm']}  Delta={r['distance']}"
             f" <= {r['distance_bound']}  {'ok' if r['ok'] else 'VIOLATION'}"
             f"{'  (attained)' if r['attained'] else ''}" for r in doc["rows"]]
    lines.append(f"violations: {doc['violations']}")
    return Output(doc, "\n".join(lines), doc["rows"])


def cmd_bounds(args):
    return {"torus-knot": _torus_grid, "table": _bound_table,
            "audit": _trefoil_audit}[args.bounds_cmd](args)


def cmd_charvar(args):
    p, q = args.p, args.q
    if not 2 <= p <= q:
        raise PreconditionError(f"need 2 <= p <= q, got p={p}, q={q}")
    total, curves = charvar.component_counts(p, q)
    rng = random.Random(args.seed)
    tol = args.tolerance
    rows = []
    for c in charvar.components(p, q):
        if not c.is_curve:
            continue
        vals, nchar = charvar.reducible_parameters(c)
        crit = charvar.g1_critical_point_exact(c)
        # seeded sample: reducible exactly at the two parameters
        mismatches = 0
        for _ in range(args.samples):
            a = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
            near = min(abs(a - v) for v in vals) < tol
            if charvar.is_reducible(charvar.rho_a(c, a), tol) != near:
                mismatches += 1
        rows.append({"j": c.j, "k": c.k, "folded": c.folded,
                     "reducible_at": [[v.real, v.imag] for v in vals],
                     "reducible_characters": nchar,
                     "g1_critical_point": [crit.real, crit.imag],
                     "sample_mismatches": mismatches})
    doc = {"p": p, "q": q, "components": total, "curves": curves, "seed": args.seed,
           "curve_components": rows}
    lines = [f"X(Z/{p} * Z/{q}): {total} components, {curves} curves"]
    for r in rows:
        cp = complex(*r["g1_critical_point"])
        lines.append(f"  (j={r['j']}, k={r['k']}){' folded' if r['folded'] else ''}:"
                     f" {r['reducible_characters']} reducible character(s),"
                     f" g1 critical at {cp:.6g}, sample mismatches {r['sample_mismatches']}")
    return Output(doc, "\n".join(lines), rows)


def _decision(d):
    return {"verdict": d.verdict.value, "reason": d.reason}


def cmd_seifert(args):
    if args.census:
        rows = []
        for o in seifert.orbifold_census(args.max_genus, args.max_cones, args.max_order):
            geom = seifert.classify_orbifold(o)
            row = {"orbifold": str(o), "chi": str(seifert.chi_orb(o)), "geometry": geom.value}
            if geom is seifert.Geometry.HYPERBOLIC:
                row["teichmuller_dim"] = seifert.teichmuller_dim(o)
            rows.append(row)
        if args.geometry:
            rows = [r for r in rows if r["geometry"] == args.geometry]
        doc = {"rows": rows}
        return Output(doc, "\n".join(f"{r['orbifold']:<24} chi={r['chi']:<8} {r['geometry']}"
                                     for r in rows), rows)
    sd = seifert.SeifertData.from_json(_load_json(args.data, args.input, "seifert"))
    group = seifert.h1(sd)
    pres = seifert.presentation(sd)
    geom = seifert.classify_orbifold(sd.base)
    doc = dict(sd.to_json())
    doc.update({
        "orbifold": str(sd.base),
        "chi": str(seifert.chi_orb(sd.base)),
        "geometry": geom.value,
        "h1": {"rank": group.rank, "torsion": list(group.torsion), "text": str(group)},
        "presentation": str(pres),
        "haken": _decision(seifert.is_haken(sd)),
        "irreducible_curve": _decision(seifert.irreducible_curve_exists(sd)),
        "virtually_irreducible_curve": _decision(seifert.virtually_irreducible_curve_exists(sd)),
    })
    if geom is seifert.Geometry.HYPERBOLIC:
        doc["teichmuller_dim"] = seifert.teichmuller_dim(sd.base)
    lines = [f"base {doc['orbifold']}  chi={doc['chi']} ({geom.value})",
             f"pi1 = {pres}", f"H1 = {group}"]
    for key in ("haken", "irreducible_curve", "virtually_irreducible_curve"):
        lines.append(f"{key}: {doc[key]['verdict']} ({doc[key]['reason']})")
    return Output(doc, "\n".join(lines))


def cmd_cable(args):
    if args.feasible:
        triples = sorted(cable.feasible_multiplicity_triples())
        doc = {"feasible": [list(t) for t in triples]}
        return Output(doc, "feasible (n, Delta, Delta_phi): " + ", ".join(map(str, triples)),
                      [dict(zip(("n", "delta", "delta_phi"), t)) for t in triples])
    cs = cable.CableSpace(args.m, args.n)
    rows = []
    for k in args.k:
        alpha, mer = cable.fill_plus(cs, k)
        rows.append({"k": k, "alpha": list(alpha), "meridian": list(mer),
                     "distance_to_phi_minus": distance(mer, cs.phi_minus)})
    doc = {"m": args.m, "n": args.n, "phi_plus": list(cs.phi_plus),
           "phi_minus": list(cs.phi_minus), "fillings": rows}
    lines = [f"C({args.m},{args.n}): phi+ = {cs.phi_plus}, phi- = {cs.phi_minus}"]
    lines += [f"  k={r['k']}: alpha(r) = {tuple(r['alpha'])} -> meridian {tuple(r['meridian'])},"
              f" Delta(., phi-) = {r['distance_to_phi_minus']}" for r in rows]
    if len(args.k) >= 2:
        a1 = cable.fill_plus(cs, args.k[0])[0]
        a2 = cable.fill_plus(cs, args.k[1])[0]
        inner, outer = cable.distance_scaling(cs, a1, a2)
        doc["scaling"] = {"inner": inner, "outer": outer}
        lines.append(f"distance {inner} on T+ becomes {outer} on T-")
    return Output(doc, "\n".join(lines), rows)


def cmd_pretzel(args):
    if args.paths or args.input:
        doc_in = _load_json(args.paths, args.input, "pretzel")
        if not isinstance(doc_in, dict) or "candidate" not in doc_in or "seifert" not in doc_in:
            raise SchemaError('expected {"candidate": {...}, "seifert": {...}}')
        cand = pretzel.EdgePathSystem.from_json(doc_in["candidate"])
        ref = pretzel.EdgePathSystem.from_json(doc_in["seifert"])
    elif args.n is not None:
        res = pretzel.pretzel_family(args.n)
        doc = {"n": res.n, "m": res.m, "slope": str(res.slope), "h1_order": res.h1_order,
               "edge_path_checked": res.edge_path_checked}
        return Output(doc, f"K_{res.m}: slope {res.slope}, |H1| = {res.h1_order}"
                           f"{'' if res.edge_path_checked else ' (closed form only)'}", [doc])
    else:
        m = args.m if args.m is not None else 10
        cand, ref = pretzel.candidate_system(m), pretzel.seifert_system(m)
    t_s, t_0 = pretzel.tau(cand), pretzel.tau(ref)
    doc = {"candidate": cand.to_json(), "seifert": ref.to_json(),
           "tau_candidate": str(t_s), "tau_seifert": str(t_0),
           "boundary_slope": str(t_s - t_0)}
    return Output(doc, f"tau(S) = {t_s}, tau(S0) = {t_0}, boundary slope = {t_s - t_0}")


def cmd_examples(args):
    if not args.key:
        cat = catalog.list_examples()
        return Output({"examples": cat}, "\n".join(f"{k:<7} {v}" for k, v in cat.items()),
                      [{"key": k, "description": v} for k, v in cat.items()])
    if args.key not in catalog.CATALOG:
        raise SchemaError(f"unknown example {args.key!r}; known: {', '.join(catalog.CATALOG)}")
    kwargs = {}
    if args.key == "9.11":
        kwargs = {k: v for k, v in (("k", args.k), ("m", args.m), ("n", args.n)) if v is not None}
    elif args.key == "9.12" and args.k is not None:
        kwargs = {"k": args.k}
    elif args.key == "10.2" and args.m is not None:
        kwargs = {"m": args.m}
    elif args.key == "3.2":
        kwargs = {k: v for k, v in (("p", args.p), ("q", args.q)) if v is not None}
    doc = catalog.CATALOG[args.key](**kwargs)
    doc = {"example": args.key, **doc}
    text = _example_text(args.key, doc)
    rows = doc.get("rows")
    return Output(doc, text, rows)


def _example_text(key, doc):
    if key == "9.11":
        return (f"cable ({doc['m']},{doc['n']}), k={doc['k']}: r1 = {tuple(doc['r1'])},"
                f" r2 = {tuple(doc['r2'])}\n"
                f"Delta(r1, r2) = {doc['delta_r1_r2']}\n"
                f"M(r2) finite: {doc['r2_finite']}; M(r1) has a vertical torus:"
                f" {doc['r1_vertical_torus']}")
    if key == "9.12":
        return (f"k={doc['k']}: Delta(r1, r2) = {doc['delta_r1_r2']},"
                f" M(r2) finite: {doc['r2_finite']},"
                f" other fibre -> {tuple(doc['other_fibre_image'])}")
    if key == "7.8":
        return (f"slope {doc['slope']} on the trefoil -> {' # '.join(doc['summands'])}"
                f" (lens orders {doc['lens_orders']}); slope 2/1 -> {doc['slope_2']}")
    if key == "thm1.8":
        return "\n".join(f"n={r['n']:>3}  slope {r['slope']:>10}  |H1| = {r['h1']}"
                         for r in doc["rows"])
    if key == "6.6":
        lines = [f"{doc['classification']}, s={doc['s']}"]
        lines += [f"{r['slope']:>5} {r['type']} Delta={r['distance']} <= {r['distance_bound']}"
                  f"{'  (attained)' if r['attained'] else ''}" for r in doc["rows"]]
        lines.append(f"violations: {doc['violations']}")
        return "\n".join(lines)
    return json.dumps(doc, indent=2)


# argument parsing

def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv", "svg"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--viewport", type=int, default=10)
    common.add_argument("--tolerance", type=float, default=charvar.LOCUS_TOL)

    parser = _Parser(prog="csfill", description=__doc__.strip().splitlines()[0],
                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("slope", parents=[common], help="canonical slopes, distance, |H1|")
    p.add_argument("slopes", nargs="+", help="m/n, m, or [m,n]")
    p.set_defaults(func=cmd_slope)

    p = sub.add_parser("seminorm", parents=[common], help="classify a seminorm, draw its ball")
    p.add_argument("--functionals", help='inline JSON: [{"c1":..,"c2":..}] or {"functionals":[..]}')
    p.add_argument("--input", help="JSON file with the same schema")
    p.add_argument("--classify", action="store_true")
    p.add_argument("--ball", action="store_true")
    p.add_argument("--vertices", action="store_true")
    p.add_argument("--eval", nargs="+", metavar="SLOPE")
    p.set_defaults(func=cmd_seminorm)

    p = sub.add_parser("bounds", parents=[common], help="finite-filling bounds and surgery tables")
    bsub = p.add_subparsers(dest="bounds_cmd", required=True, parser_class=_Parser)
    t = bsub.add_parser("torus-knot", parents=[common])
    t.add_argument("p", type=int)
    t.add_argument("q", type=int)
    t.add_argument("--grid", type=int, nargs=2, default=(12, 1), metavar=("M", "N"))
    t.add_argument("--finite-only", action="store_true")
    t = bsub.add_parser("table", parents=[common])
    t.add_argument("--s", type=int, required=True)
    t.add_argument("--n-dihedral", type=int, default=0)
    t.add_argument("--vi", type=int, nargs="*", help="q values in VI(M)")
    bsub.add_parser("audit", parents=[common])
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("charvar", parents=[common], help="characters of Z/p * Z/q")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--samples", type=int, default=50)
    p.set_defaults(func=cmd_charvar)

    p = sub.add_parser("seifert", parents=[common], help="Seifert invariants, H1, decisions")
    p.add_argument("--data", help='inline JSON {"base":{...},"gamma":..,"fibers":[[a,b],..]}')
    p.add_argument("--input")
    p.add_argument("--census", action="store_true")
    p.add_argument("--geometry", choices=[g.value for g in seifert.Geometry])
    p.add_argument("--max-genus", type=int, default=2)
    p.add_argument("--max-cones", type=int, default=4)
    p.add_argument("--max-order", type=int, default=12)
    p.set_defaults(func=cmd_seifert)

    p = sub.add_parser("cable", parents=[common], help="cable-space fillings")
    p.add_argument("m", type=int, nargs="?", default=1)
    p.add_argument("n", type=int, nargs="?", default=2)
    p.add_argument("--k", type=int, nargs="+", default=[0, 1])
    p.add_argument("--feasible", action="store_true")
    p.set_defaults(func=cmd_cable)

    p = sub.add_parser("pretzel", parents=[common], help="pretzel boundary slopes")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--paths", help='inline JSON {"candidate": {...}, "seifert": {...}}')
    p.add_argument("--input")
    p.set_defaults(func=cmd_pretzel)

    p = sub.add_parser("examples", parents=[common], help="run a built-in worked example")
    p.add_argument("key", nargs="?")
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.set_defaults(func=cmd_examples)
    return parser


def _flat_rows(doc):
    return [{"key": k, "value": json.dumps(v) if isinstance(v, (dict, list)) else v}
            for k, v in doc.items()]


def render(out: Output, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_jsonable(out.doc), indent=2)
    if fmt == "svg":
        if out.svg is None:
            raise SchemaError("--format svg is only available for seminorm")
        return out.svg
    if fmt == "csv":
        rows = out.rows if out.rows else _flat_rows(out.doc)
        buf = io.StringIO()
        keys = list(dict.fromkeys(k for r in rows for k in r))
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v
                        for k, v in r.items()})
        return buf.getvalue().rstrip("\n")
    return out.text


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        out = args.func(args)
        doc = render(out, args.format)
    except SchemaError as exc:
        print(f"csfill: schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except PreconditionError as exc:
        print(f"csfill: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    print(doc)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
