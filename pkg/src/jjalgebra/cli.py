"""Command-line front end.

Verbs: catalog, verify, cohomology, classify, versal, forms, doubleext,
graph.  Output is deterministic (no timestamps, rationals printed
exactly), so identical invocations are byte-identical.  Exit codes:
0 success, 1 domain failure (a verification that ran and failed),
2 usage error (unknown names, malformed input).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import refdata, serialize
from .algebra import is_leibniz, verify_jj
from .bilinear import (PSEUDO_EUCLIDEAN, SYMPLECTIC, compatible_form_space,
                       double_extension, find_nondegenerate,
                       SpecialAdmissiblePair, structure_survey, verify_form)
from .catalog import catalog, catalog_names, normalize_name
from .cochains import format_cochain
from .cohomology import h2, h2_table
from .deformations import (FormalDeformation1, classify_infinitesimal,
                           jump_graph, verify_jump)
from .polys import format_poly
from .serialize import (algebra_from_json, algebra_to_json, cochain_from_json,
                        cochain_to_json, form_from_json, form_to_json,
                        matrix_from_json, matrix_to_json, rational_from_str)
from .versal import second_order_extension, versal_multiplication_table


class UsageError(Exception):
    pass


def _load_algebra(args):
    if getattr(args, "algebra_file", None):
        try:
            with open(args.algebra_file) as fh:
                return algebra_from_json(json.load(fh))
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"cannot read algebra file: {exc}")
    if getattr(args, "name", None):
        try:
            return catalog(args.name)
        except KeyError as exc:
            raise UsageError(str(exc.args[0]))
    raise UsageError("an algebra name or --algebra-file is required")


def _parse_dims(spec):
    try:
        dims = sorted({int(d) for d in spec.split(",")})
    except ValueError:
        raise UsageError(f"bad dimension list: {spec!r}")
    for d in dims:
        if d not in (2, 3, 4, 5):
            raise UsageError(f"catalog covers dimensions 2-5, not {d}")
    return dims


def _emit_json(doc):
    print(json.dumps(doc, indent=2))


def cmd_catalog(args):
    if args.name:
        alg = _load_algebra(args)
        if args.format == "json":
            _emit_json(algebra_to_json(alg))
        else:
            print(f"{alg.name}  (dim {alg.dim})")
            for (i, j), coeffs in alg.products:
                terms = " + ".join(
                    (f"{serialize.rational_to_str(c)}*e{k+1}" if c != 1 else f"e{k+1}")
                    for k, c in enumerate(coeffs) if c)
                print(f"  e{i}*e{j} = {terms}")
            if not alg.products:
                print("  zero multiplication")
        return 0
    names = []
    for d in _parse_dims(args.dims):
        names.extend(catalog_names(d))
    if args.format == "json":
        _emit_json([algebra_to_json(catalog(n)) for n in names])
    else:
        for n in names:
            alg = catalog(n)
            print(f"{n:12s} dim {alg.dim}  products {len(alg.products)}")
    return 0


def cmd_verify(args):
    alg = _load_algebra(args)
    if args.jump:
        return _verify_jump(args, alg)
    if args.isometric_to:
        return _verify_isometry(args, alg)
    bad = verify_jj(alg)
    if bad:
        print(f"JJ: FAIL (Jacobi violations at {bad})")
        return 1
    leib = "ok" if is_leibniz(alg) else "FAIL"
    print(f"JJ: ok; Leibniz: {leib}")
    return 0


def _load_witness(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read witness file: {exc}")


def _verify_jump(args, alg):
    if not args.witness:
        raise UsageError("--jump needs --witness FILE")
    try:
        target = catalog(args.jump)
    except KeyError as exc:
        raise UsageError(str(exc.args[0]))
    doc = _load_witness(args.witness)
    try:
        d = FormalDeformation1(alg, tuple(cochain_from_json(t)
                                          for t in doc["terms"]))
        t0 = rational_from_str(doc["t0"])
        p = matrix_from_json(doc["matrix"])
    except (KeyError, ValueError) as exc:
        raise UsageError(f"malformed witness: {exc}")
    ok = verify_jump(d, t0, p, target)
    print(f"jump {alg.name} -> {target.name} at t={doc['t0']}: "
          f"{'verified' if ok else 'FAILED'}")
    return 0 if ok else 1


def _verify_isometry(args, alg):
    if not args.witness:
        raise UsageError("--isometric-to needs --witness FILE")
    try:
        other = catalog(args.isometric_to)
    except KeyError as exc:
        raise UsageError(str(exc.args[0]))
    doc = _load_witness(args.witness)
    try:
        p = matrix_from_json(doc["matrix"])
        f = form_from_json(doc["source_form"])
        g = form_from_json(doc["target_form"])
    except (KeyError, ValueError) as exc:
        raise UsageError(f"malformed witness: {exc}")
    from .bilinear import i_isometry_check

    ok = i_isometry_check(p, (alg, f), (other, g))
    print(f"i-isometry {alg.name} -> {other.name}: "
          f"{'verified' if ok else 'FAILED'}")
    return 0 if ok else 1


def cmd_cohomology(args):
    if args.table or not args.name:
        names = []
        for d in _parse_dims(args.dims):
            names.extend(catalog_names(d))
        rows = h2_table(names)
        if args.format == "json":
            _emit_json([{"algebra": n, "dim": catalog(n).dim, "dim_h2": v}
                        for n, v in rows])
        elif args.format == "csv":
            print("algebra,dim,dim_h2")
            for n, v in rows:
                print(f"{n},{catalog(n).dim},{v}")
        else:
            print(f"{'algebra':12s} {'dim':>3s} {'dim H^2':>7s}")
            for n, v in rows:
                print(f"{n:12s} {catalog(n).dim:3d} {v:7d}")
        return 0
    alg = _load_algebra(args)
    summary = h2(alg)
    if args.format == "json":
        _emit_json({
            "algebra": alg.name,
            "dim_z2": summary.dim_z2,
            "dim_b2": summary.dim_b2,
            "dim_h2": summary.dim_h2,
            "representatives": [cochain_to_json(r) for r in summary.representatives],
        })
    else:
        print(f"{alg.name}: dim Z^2 = {summary.dim_z2}, dim B^2 = {summary.dim_b2}, "
              f"dim H^2 = {summary.dim_h2}")
        for r in summary.representatives:
            print(f"  {format_cochain(r)}")
    return 0


def cmd_classify(args):
    alg = _load_algebra(args)
    if args.cocycle_file:
        try:
            with open(args.cocycle_file) as fh:
                cocycles = [cochain_from_json(json.load(fh))]
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"cannot read cochain file: {exc}")
    else:
        key = normalize_name(args.name) if args.name else None
        if key not in refdata.REPRESENTATIVE_COCYCLES:
            cocycles = h2(alg).representatives
        else:
            cocycles = refdata.REPRESENTATIVE_COCYCLES[key]
    rows = []
    for phi in cocycles:
        cls = classify_infinitesimal(alg, phi)
        rows.append((phi, cls))
    if args.format == "json":
        _emit_json([{
            "cocycle": cochain_to_json(phi),
            "kind": cls.kind,
            "extendible": cls.extendible,
            "witness": cochain_to_json(cls.witness) if cls.witness else None,
        } for phi, cls in rows])
    else:
        for phi, cls in rows:
            extra = ""
            if cls.witness is not None:
                extra = f"  (order-2 witness {format_cochain(cls.witness)})"
            print(f"{format_cochain(phi)}: {cls.kind}{extra}")
    return 0


def cmd_versal(args):
    alg = _load_algebra(args)
    key = normalize_name(args.name) if args.name else None
    first_order = refdata.REPRESENTATIVE_COCYCLES.get(key)
    m = second_order_extension(alg, first_order=first_order)
    table = versal_multiplication_table(m)
    if args.format == "json":
        _emit_json({
            "algebra": alg.name,
            "n_params": m.n_params,
            "relations": [str(q) for q in m.relations],
            "corrections": {f"{i},{j}": cochain_to_json(chi)
                            for (i, j), chi in sorted(m.corrections.items())},
            "table": {f"{a},{b}": [str(p) for p in polys]
                      for (a, b), polys in sorted(table.items())},
        })
    else:
        print(f"{alg.name}: versal deformation of order 2, "
              f"{m.n_params} parameters")
        print("relations:" if m.relations else "relations: none")
        for q in m.relations:
            print(f"  {q} = 0")
        if m.corrections:
            print("corrections:")
            for (i, j), chi in sorted(m.corrections.items()):
                print(f"  phi_{i}{j} = {format_cochain(chi)}")
        print("products:")
        for (a, b), polys in sorted(table.items()):
            entries = [f"({p})*e{k+1}" for k, p in enumerate(polys)
                       if not p.is_zero()]
            print(f"  (e{a} e{b})_v = " + (" + ".join(entries) if entries else "0"))
    return 0


def cmd_forms(args):
    kind = SYMPLECTIC if args.kind == "symplectic" else PSEUDO_EUCLIDEAN
    if args.check:
        alg = _load_algebra(args)
        try:
            with open(args.check) as fh:
                form = form_from_json(json.load(fh))
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"cannot read form file: {exc}")
        ok = verify_form(alg, form)
        print(f"form on {alg.name}: {'ok' if ok else 'FAIL'}")
        return 0 if ok else 1
    if args.name:
        names = [normalize_name(args.name)]
    else:
        names = []
        for d in _parse_dims(args.dims):
            names.extend(catalog_names(d))
    rows = structure_survey(names, kind)
    if args.format == "json":
        _emit_json([{"algebra": n, "exists": ok,
                     "witness": form_to_json(w) if w else None}
                    for n, ok, w in rows])
    elif args.format == "csv":
        print("algebra,exists")
        for n, ok, _ in rows:
            print(f"{n},{'yes' if ok else 'no'}")
    else:
        for n, ok, w in rows:
            if ok:
                print(f"{n:12s} yes  {matrix_to_json(w.matrix)}")
            else:
                print(f"{n:12s} no   (generic determinant vanishes identically)")
    return 0


def cmd_doubleext(args):
    try:
        with open(args.input) as fh:
            doc = json.load(fh)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read input file: {exc}")
    try:
        if "algebra" in doc:
            alg = algebra_from_json(doc["algebra"])
        else:
            alg = catalog(doc["name"])
        omega = form_from_json({"kind": SYMPLECTIC, "matrix": doc["omega"]})
        pair = SpecialAdmissiblePair.of(
            matrix_from_json(doc["D"], cols=alg.dim),
            [rational_from_str(c) for c in doc["A0"]])
    except (KeyError, ValueError) as exc:
        raise UsageError(f"malformed input: {exc}")
    if not verify_form(alg, omega):
        print("input form is not symplectic for this algebra")
        return 1
    try:
        ext, form = double_extension(alg, omega, pair)
    except ValueError as exc:
        print(f"double extension rejected: {exc}")
        return 1
    if args.format == "json":
        _emit_json({"algebra": algebra_to_json(ext), "form": form_to_json(form)})
    else:
        print(f"double extension: dim {ext.dim}, JJ ok, symplectic form ok")
        for (i, j), coeffs in ext.products:
            terms = " + ".join(f"{serialize.rational_to_str(c)}*e{k+1}"
                               for k, c in enumerate(coeffs) if c)
            print(f"  e{i}*e{j} = {terms}")
    return 0


def cmd_graph(args):
    if args.dim not in (3, 4, 5):
        raise UsageError("jump graphs exist for dimensions 3, 4 and 5")
    edges = jump_graph(args.dim)
    if args.format == "json":
        _emit_json([{"source": s, "target": t, "status": st}
                    for s, t, st in edges])
    else:
        print(f"digraph jump_deformations_dim{args.dim} {{")
        for n in catalog_names(args.dim):
            print(f'  "{n}";')
        for s, t, st in edges:
            print(f'  "{s}" -> "{t}" [status={st}];')
        print("}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="jj",
        description="Exact computations with the catalog of Jacobi-Jordan "
                    "algebras of dimension at most 5.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p, name=True, fmt=("text", "json")):
        if name:
            p.add_argument("name", nargs="?", help="algebra name, e.g. J_1_3 or 'J_{1,3}'")
            p.add_argument("--algebra-file", help="JSON algebra file instead of a name")
        p.add_argument("--format", choices=fmt, default=fmt[0])

    p = sub.add_parser("catalog", help="list catalog algebras or show one")
    add_common(p)
    p.add_argument("--dims", default="2,3,4,5")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="axioms, Leibniz, jump and isometry witnesses")
    add_common(p)
    p.add_argument("--jump", metavar="TARGET",
                   help="verify a jump witness against TARGET")
    p.add_argument("--isometric-to", metavar="TARGET")
    p.add_argument("--witness", help="witness JSON file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cohomology", help="dim H^2 tables and representatives")
    add_common(p, fmt=("text", "json", "csv"))
    p.add_argument("--table", action="store_true")
    p.add_argument("--dims", default="2,3,4,5")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("classify", help="extendibility of infinitesimal deformations")
    add_common(p)
    p.add_argument("--cocycle-file", help="classify one cochain from JSON")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("versal", help="second-order versal deformation data")
    add_common(p)
    p.set_defaults(func=cmd_versal)

    p = sub.add_parser("forms", help="symplectic / pseudo-euclidean structure survey")
    add_common(p, fmt=("text", "json", "csv"))
    p.add_argument("--kind", choices=("symplectic", "pseudo"), required=True)
    p.add_argument("--dims", default="2,3,4,5")
    p.add_argument("--check", metavar="FORM_JSON",
                   help="verify one form against the algebra")
    p.set_defaults(func=cmd_forms)

    p = sub.add_parser("doubleext", help="build and verify a double extension")
    p.add_argument("--input", required=True,
                   help='JSON {"name"|"algebra", "omega", "D", "A0"}')
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_doubleext)

    p = sub.add_parser("graph", help="jump-deformation graph (DOT or JSON)")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_graph)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
