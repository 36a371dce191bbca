"""Command-line interface: one subcommand per subsystem.

All output is deterministic for fixed flags and seeds: JSON uses sorted
keys and canonical generator order, DOT and CSV iterate sorted
structures.  Exit code is nonzero when a verification fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import borel, embeddings, groebner, h33, tangent, treespace, verify
from .gridcore import MonomialIdeal, k_polynomial, multidegree_of_ideal


def _json_default(obj):
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, frozenset):
        return sorted(obj)
    raise TypeError("cannot serialize %r" % type(obj))


def emit_json(data, stream=None):
    json.dump(data, stream or sys.stdout, sort_keys=True, indent=2,
              default=_json_default)
    (stream or sys.stdout).write("\n")


def ideal_json(ideal: MonomialIdeal) -> dict:
    return ideal.to_json()


def tree_dot(tree: treespace.Tree) -> str:
    lines = ["digraph tree {"]
    for k, (t, h) in enumerate(tree.edges):
        lines.append('  v%d -> v%d [label="%d"];' % (t, h, k + 1))
    lines.append("}")
    return "\n".join(lines)


def emit(obj, fmt: str) -> str:
    """Deterministic serialization of the core objects.

    Ideals and K-polynomials emit JSON, trees emit DOT digraphs or JSON,
    class tables emit CSV with header class,tangent,planar,symm,orbit.
    """
    if isinstance(obj, MonomialIdeal):
        if fmt == "json":
            return json.dumps(obj.to_json(), sort_keys=True, indent=2)
        if fmt == "text":
            return ", ".join(g.to_str(obj.d) for g in obj.gens) or "0"
    elif hasattr(obj, "terms") and hasattr(obj, "specialize"):  # KPolynomial
        if fmt == "json":
            return json.dumps(obj.to_json(), sort_keys=True, indent=2)
        if fmt == "text":
            return repr(obj)
    elif isinstance(obj, treespace.Tree):
        if fmt == "dot":
            return tree_dot(obj)
        if fmt == "json":
            return json.dumps({"edges": [list(e) for e in obj.edges]},
                              sort_keys=True)
    elif isinstance(obj, treespace.MovesGraph):
        if fmt == "dot":
            return moves_graph_dot(obj)
    elif isinstance(obj, h33.Table1Report):
        if fmt == "csv":
            rows = ["class,tangent,planar,symm,orbit"]
            for k, r in enumerate(obj.rows, start=1):
                rows.append("%d,%d,%s,%d,%d" % (k, r.tangent,
                                                "y" if r.planar else "n",
                                                r.stabilizer_order,
                                                r.orbit_size))
            return "\n".join(rows)
    raise ValueError("unsupported format %r for %s" % (fmt, type(obj).__name__))


def moves_graph_dot(graph: treespace.MovesGraph) -> str:
    keys = sorted(graph.nodes)
    pos = {k: i for i, k in enumerate(keys)}
    lines = ["graph moves {"]
    for k in keys:
        ideal = treespace.tree_to_ideal(graph.nodes[k])
        label = ", ".join(g.to_str(2) for g in ideal.gens)
        lines.append('  t%d [label="%s"];' % (pos[k], label))
    for e in sorted(graph.edges, key=lambda e: tuple(sorted(pos[k] for k in e))):
        a, b = sorted(pos[k] for k in e)
        kinds = ",".join(sorted({tag[0] for tag in graph.edges[e]}))
        lines.append('  t%d -- t%d [label="%s"];' % (a, b, kinds))
    lines.append("}")
    return "\n".join(lines)


def cmd_borel(args):
    z = borel.build_z(args.d, args.n)
    if args.json:
        data = {
            "ideal": ideal_json(z),
            "u_set": [list(u) for u in borel.u_set(args.d, args.n)],
            "h_polynomial": list(borel.h_closed_form(args.d, args.n)),
            "multidegree": multidegree_of_ideal(z).to_json(),
        }
        if args.shelling:
            data["shelling"] = [
                {"u": list(s.u), "facet": sorted(s.facet), "eta": sorted(s.eta)}
                for s in borel.shelling(args.d, args.n)]
        emit_json(data)
        return 0
    print("distinguished ideal on the %dx%d grid:" % (args.d, args.n))
    print("  " + ", ".join(g.to_str(args.d) for g in z.gens))
    print("h-polynomial coefficients: %s" % (list(borel.h_closed_form(args.d, args.n)),))
    print("K-polynomial terms: %d" % len(k_polynomial(z).terms))
    if args.shelling:
        for s in borel.shelling(args.d, args.n):
            print("  u=%s facet=%s eta=%s"
                  % (list(s.u), sorted(s.facet), sorted(s.eta)))
    return 0


def cmd_trees(args):
    trees = treespace.enumerate_trees(args.n)
    if args.graph:
        graph = treespace.moves_graph(args.n)
        if args.graph == "dot":
            print(moves_graph_dot(graph))
        else:
            keys = sorted(graph.nodes)
            pos = {k: i for i, k in enumerate(keys)}
            data = {
                "n": args.n,
                "node_count": len(keys),
                "nodes": [ideal_json(treespace.tree_to_ideal(graph.nodes[k]))
                          for k in keys],
                "edges": [
                    {"ends": sorted(pos[k] for k in e),
                     "moves": sorted(",".join(map(str, t)) for t in tags)}
                    for e, tags in sorted(
                        graph.edges.items(),
                        key=lambda kv: tuple(sorted(pos[k] for k in kv[0])))],
            }
            emit_json(data)
        return 0
    if args.ideals:
        emit_json({"count": len(trees),
                   "ideals": [ideal_json(treespace.tree_to_ideal(t))
                              for t in trees]})
        return 0
    print("%d trees with %d labeled directed edges" % (len(trees), args.n))
    return 0


def cmd_h33(args):
    census = h33.enumerate_h33()
    print("monomial ideals found: %d" % len(census))
    if not (args.classes or args.table1 or args.reps):
        return 0
    classes = h33.symmetry_classes(census)
    if args.classes and not args.table1:
        print("symmetry classes: %d" % len(classes))
        for c in classes:
            print("  orbit=%d stabilizer=%d" % (c.orbit_size, c.stabilizer_order))
    if args.table1:
        report = h33.table1_report(classes)
        text = emit(report, "csv")
        if args.csv:
            with open(args.csv, "w") as fh:
                fh.write(text + "\n")
            print("wrote %s" % args.csv)
        else:
            print(text)
        print("matches published census: %s" % report.matches_published)
        if not report.matches_published:
            return 1
    if args.reps:
        ok = True
        for chk in h33.component_rep_checks(bound=args.bound):
            print("%s: %s (%d degrees)" % (chk.name,
                                           "ok" if chk.ok else "FAIL",
                                           chk.degrees_checked))
            ok = ok and chk.ok
        if not ok:
            return 1
    return 0


def cmd_tangent(args):
    if args.basis:
        if args.basis != "chain":
            print("only the chain basis is available", file=sys.stderr)
            return 2
        maps = tangent.chain_basis(args.d, args.n)
        data = []
        for hom in maps:
            entry = []
            for g, img in sorted(hom.images.items()):
                entry.append({
                    "generator": [[i, j, e] for (i, j), e in g.exps],
                    "image": [{"monomial": [[i, j, e] for (i, j), e in m.exps],
                               "coeff": c} for m, c in sorted(img.items())],
                })
            data.append(entry)
        emit_json({"d": args.d, "n": args.n, "count": len(maps), "maps": data})
        return 0
    with open(args.ideal) as fh:
        ideal = MonomialIdeal.from_json(json.load(fh))
    print(tangent.tangent_dimension(ideal))
    return 0


def _weights_from_monomial_diagonal(mats, d, n):
    """Recover (weights, constant matrices) from diagonal-monomial-times-
    constant matrices over z; raises ValueError for other shapes."""
    weights = [[0] * n for _ in range(d)]
    consts = []
    for j, mat in enumerate(mats):
        cmat = [[Fraction(0)] * d for _ in range(d)]
        for i in range(d):
            exps = set()
            for k in range(d):
                poly = mat[i][k]
                if poly.is_zero():
                    continue
                if len(poly.terms) != 1:
                    raise ValueError("entry (%d,%d) of matrix %d is not a "
                                     "z-monomial" % (i + 1, k + 1, j + 1))
                (m, c), = poly.terms.items()
                if any(m[:-1]):
                    raise ValueError("matrix entries must involve z only")
                exps.add(m[-1])
                cmat[i][k] = c
            if len(exps) > 1:
                raise ValueError("row %d of matrix %d mixes z-powers"
                                 % (i + 1, j + 1))
            weights[i][j] = exps.pop() if exps else 0
        consts.append(cmat)
    # the fiber of diag(z^v) A is the initial ideal for weights M_j - v_ij
    for j in range(n):
        mj = max(weights[i][j] for i in range(d))
        for i in range(d):
            weights[i][j] = mj - weights[i][j]
    return weights, consts


def cmd_deligne(args):
    with open(args.matrices) as fh:
        data = json.load(fh)
    mats_raw = data["matrices"] if isinstance(data, dict) else data
    n = len(mats_raw)
    d = len(mats_raw[0])
    mats = groebner.load_matrices_json(mats_raw, d, n)
    if args.route == "weight":
        weights, consts = _weights_from_monomial_diagonal(mats, d, n)
        ideal = groebner.weight_initial_route(weights, consts, d, n)
        emit_json({"route": "weight", "ideal": ideal_json(ideal),
                   "squarefree": ideal.is_squarefree()})
        return 0
    fiber = groebner.special_fiber(mats, d, n)
    out = {"route": "sat",
           "generators": [g.pretty() for g in fiber]}
    try:
        ideal = groebner.fiber_monomial_ideal(fiber, d, n)
        out["ideal"] = ideal_json(ideal)
        out["squarefree"] = ideal.is_squarefree()
    except ValueError:
        out["squarefree"] = False
        out["monomial"] = False
    emit_json(out)
    return 0


def cmd_gin(args):
    report = groebner.gin_sample(args.d, args.n, args.trials, args.seed)
    emit_json({
        "d": args.d, "n": args.n, "seed": args.seed,
        "all_ok": report.all_ok,
        "trials": [{"kind": t.kind, "squarefree": t.squarefree,
                    "series_ok": t.series_ok, "equals_z": t.equals_z,
                    "redraws": t.redraws} for t in report.trials],
    })
    return 0 if report.all_ok else 1


def cmd_collineations(args):
    from random import Random
    rng = Random(args.seed)
    out = []
    for k in range(args.sample):
        U = groebner.random_invertible(3, rng)
        V = groebner.random_invertible(3, rng)
        vals = embeddings.plucker_param(U, V)
        counts = embeddings.plucker_classification_counts(vals)
        cm = embeddings.collineation_matrices(embeddings.uv_coeff_matrix(U, V))
        out.append({"sample": k, "counts": list(counts),
                    "ranks": [cm.rank_first, cm.rank_second]})
    ok = all(o["counts"] == [6, 12, 66] and max(o["ranks"]) <= 8 for o in out)
    emit_json({"seed": args.seed, "samples": out, "all_ok": ok})
    return 0 if ok else 1


def cmd_lafforgue(args):
    with open(args.matrices) as fh:
        data = json.load(fh)
    mats_raw = data["matrices"] if isinstance(data, dict) else data
    mats = [[[Fraction(x) if not isinstance(x, str) else Fraction(x)
              for x in row] for row in mat] for mat in mats_raw]
    coords = embeddings.lafforgue_coordinates(mats)
    emit_json({"types": [{"type": list(t), "minors": vec}
                         for t, vec in sorted(coords.items())]})
    return 0


def cmd_verify_all(args):
    only = set(args.only) if args.only else None
    return verify.verify_all(only=only)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="hilbdiag",
        description="Exact toolkit for degenerations of diagonal embeddings: "
                    "distinguished monomial ideals, tree spaces, tangent "
                    "spaces, censuses and special fibers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("borel", help="the distinguished Borel-fixed ideal, "
                                     "its shelling and h-polynomial")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--shelling", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_borel)

    p = sub.add_parser("trees", help="trees with labeled directed edges and "
                                     "their ideals and moves graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--graph", choices=("dot", "json"))
    p.add_argument("--ideals", action="store_true")
    p.set_defaults(fn=cmd_trees)

    p = sub.add_parser("h33", help="census of the 3x3 monomial ideals, "
                                   "symmetry classes and representatives")
    p.add_argument("--classes", action="store_true")
    p.add_argument("--table1", action="store_true")
    p.add_argument("--reps", action="store_true")
    p.add_argument("--bound", type=int, default=4)
    p.add_argument("--csv")
    p.set_defaults(fn=cmd_h33)

    p = sub.add_parser("tangent", help="tangent space dimension at a monomial "
                                       "ideal, or the explicit chain basis")
    p.add_argument("--ideal", help="JSON file with the ideal")
    p.add_argument("--basis", help="emit a named basis (chain)")
    p.add_argument("--d", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(fn=cmd_tangent)

    p = sub.add_parser("deligne", help="special fiber of a one-parameter "
                                       "family, by saturation or weights")
    p.add_argument("--matrices", required=True)
    p.add_argument("--route", choices=("sat", "weight"), default="sat")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_deligne)

    p = sub.add_parser("gin", help="seeded initial-ideal sampling of "
                                   "transformed minor ideals")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_gin)

    p = sub.add_parser("collineations", help="Plucker classification and "
                                             "rank tests for quadric nets")
    p.add_argument("--sample", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_collineations)

    p = sub.add_parser("lafforgue", help="scaled-minor coordinates of a "
                                         "matrix tuple")
    p.add_argument("--matrices", required=True)
    p.set_defaults(fn=cmd_lafforgue)

    p = sub.add_parser("verify-all", help="run the full acceptance suite")
    p.add_argument("--only", nargs="*", help="subset of check names")
    p.set_defaults(fn=cmd_verify_all)

    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
