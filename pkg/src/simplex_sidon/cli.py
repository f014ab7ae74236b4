"""simplex-sidon: B_h sets, h-bases and lattice arrangements of discrete simplices.

Exit codes: 0 success / positive verdict, 1 negative verdict, 2 usage or
data error, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog
from .bounds import bounds_report
from .constructions import construct_bh, construct_tiling, regenerate_stored
from .correspondence import (basis_to_covering, bh_to_packing, covering_to_basis,
                             discretize_lattice, packing_to_bh, smallest_packing_h)
from .errors import BudgetExceeded, CardinalityOverflow, NotFound, SimplexSidonError, WitnessError
from .groups import AbelianGroup
from .linalg import IntMatrix, Lattice, hnf, snf
from .render import render_svg
from .search import search_phi, search_psi, search_tiling
from .shapes import ShapeSpec
from .verifiers import classify_arrangement, is_bh_set, is_generalized_basis, is_h_basis

log = logging.getLogger("simplex_sidon")

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR, EXIT_BUDGET = 0, 1, 2, 3


def _load(path):
    with open(path) as f:
        return json.load(f)


def load_lattice(path) -> Lattice:
    obj = _load(path)
    basis = obj.get("basis", obj.get("matrix"))
    if basis is None:
        raise ValueError(f"{path}: expected a 'basis' key")
    lat = hnf(basis)
    if "n" in obj and obj["n"] != lat.n:
        raise ValueError(f"{path}: declared n={obj['n']} but basis is {lat.n}x{lat.n}")
    return lat


def load_group_and_set(group_path, set_path):
    obj = _load(set_path)
    group = None
    if group_path:
        group = AbelianGroup.from_json(_load(group_path))
    if "group" in obj:
        declared = AbelianGroup.from_json(obj["group"])
        if group is not None and declared != group:
            raise ValueError(f"{set_path}: group {declared} differs from --group {group}")
        group = declared
    if group is None:
        raise ValueError("no group given (use --group or a 'group' key in the set file)")
    return group, [tuple(e) for e in obj["elements"]]


def set_json(group, elems) -> dict:
    return {"group": group.to_json(), "elements": [list(e) for e in elems]}


def _emit(obj, out=None):
    text = json.dumps(obj)
    if out:
        Path(out).write_text(text + "\n")
    print(text)


def _save_cert(cert, args):
    if getattr(args, "catalog", None):
        catalog.append_certificate(args.catalog, cert)
    _emit(cert.to_json(), getattr(args, "out", None))
    return EXIT_OK if cert.verified else EXIT_ERROR


# ---------------------------------------------------------------- commands

def cmd_snf(args):
    res = snf(IntMatrix(_matrix(args.matrix)))
    _emit({"d": list(res.d), "U": res.U.tolist(), "V": res.V.tolist()}, args.out)
    return EXIT_OK


def cmd_hnf(args):
    _emit(hnf(_matrix(args.matrix)).to_json(), args.out)
    return EXIT_OK


def _matrix(path):
    obj = _load(path)
    return obj["matrix"] if "matrix" in obj else obj["basis"]


def cmd_verify(args):
    if args.what == "arrangement":
        if not (args.shape and args.lattice):
            raise ValueError("verify arrangement needs --shape and --lattice")
        v = classify_arrangement(ShapeSpec.parse(args.shape), load_lattice(args.lattice))
        _emit(v.to_json())
        return EXIT_OK if v.outcome == "tiling" else EXIT_NEGATIVE
    group, elems = load_group_and_set(args.group, args.set)
    if args.what == "bh":
        v = is_bh_set(group, elems, _need(args, "h"))
    elif args.what == "basis":
        v = is_h_basis(group, elems, _need(args, "h"))
    else:
        v = is_generalized_basis(group, elems, _need(args, "r"), _need(args, "t"))
    _emit(v.to_json())
    return EXIT_OK if v.ok else EXIT_NEGATIVE


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise ValueError(f"--{name} is required here")
    return value


def cmd_convert(args):
    h = args.h
    if args.direction in ("bh-to-lattice", "basis-to-lattice"):
        group, elems = load_group_and_set(args.group, args.set)
        fn = bh_to_packing if args.direction == "bh-to-lattice" else basis_to_covering
        lattice, verdict = fn(group, elems, h)
        _emit({"lattice": lattice.to_json(), "verdict": verdict.to_json()}, args.out)
        return EXIT_OK
    lattice = load_lattice(_need(args, "lattice"))
    fn = packing_to_bh if args.direction == "lattice-to-bh" else covering_to_basis
    group, elems, verdict = fn(lattice, h)
    _emit({**set_json(group, elems), "verdict": verdict.to_json()}, args.out)
    return EXIT_OK if verdict.ok else EXIT_NEGATIVE


def cmd_discretize(args):
    obj = _load(args.basis)
    basis = [[Fraction(v) for v in row] for row in obj.get("basis", obj.get("matrix"))]
    eps = Fraction(args.eps)
    if args.h_max:
        found = smallest_packing_h(basis, eps, args.h_max)
        if found is None:
            _emit({"found": False, "h_max": args.h_max})
            return EXIT_NEGATIVE
        h, lattice, verdict = found
        _emit({"found": True, "h": h, "lattice": lattice.to_json(), "verdict": verdict.to_json()})
        return EXIT_OK
    lattice, verdict = discretize_lattice(basis, _need(args, "h"), eps)
    _emit({"lattice": lattice.to_json(), "verdict": verdict.to_json()}, args.out)
    return EXIT_OK if verdict.packing else EXIT_NEGATIVE


def cmd_search(args):
    if args.what == "tiling":
        try:
            cert = search_tiling(ShapeSpec.parse(_need(args, "shape")), args.budget, args.workers)
        except NotFound as exc:
            _emit({"found": False, "shape": args.shape, "checked": exc.checked,
                   "note": str(exc)})
            return EXIT_NEGATIVE
        return _save_cert(cert, args)
    h, n = _need(args, "h"), _need(args, "n")
    if args.what == "phi":
        cert = search_phi(h, n, args.cyclic, args.budget, args.workers)
    else:
        cert = search_psi(h, n, args.budget, args.workers)
    return _save_cert(cert, args)


def cmd_construct(args):
    if args.what == "bh":
        cert = construct_bh(_need(args, "n"), _need(args, "h"), args.workers)
    else:
        cert = construct_tiling(_need(args, "n"), _need(args, "r"), _need(args, "t"),
                                args.workers)
    return _save_cert(cert, args)


def cmd_bounds(args):
    table = bounds_report(args.h, args.n)
    if args.format == "json":
        print(json.dumps(table.to_json(), indent=2))
    else:
        print(table.format_table())
    return EXIT_OK


def parse_window(text):
    lo, _, hi = text.partition(":")
    return int(lo), int(hi)


def cmd_render(args):
    svg = render_svg(ShapeSpec.parse(args.shape), load_lattice(args.lattice),
                     parse_window(args.window))
    if args.out:
        Path(args.out).write_text(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def cmd_catalog(args):
    if args.action == "list":
        path = args.catalog or catalog.stored_path()
        for cert in catalog.load_catalog(path):
            status = "ok" if cert.verified else "FAILED"
            print(f"{cert.kind:<10} h={cert.h:<3} n={cert.n:<2} value={cert.value:<6} "
                  f"group={cert.group} [{status}]")
        return EXIT_OK
    certs = regenerate_stored()
    fresh = [c.to_json() for c in certs]
    shipped = [catalog.strip_timestamp(r) for r in catalog.load_records(catalog.stored_path())]
    if fresh != shipped:
        print(f"catalog regen: MISMATCH between shipped ({len(shipped)} records) and "
              f"regenerated ({len(fresh)} records) certificates", file=sys.stderr)
        for a, b in zip(shipped, fresh):
            if a != b:
                print(f"  shipped:     {json.dumps(a)}\n  regenerated: {json.dumps(b)}",
                      file=sys.stderr)
        if not args.write:
            return EXIT_ERROR
    if args.write:
        path = catalog.stored_path()
        path.write_text("")
        for cert in certs:
            catalog.append_certificate(path, cert)
    print(f"catalog regen: {len(fresh)} certificates reproduced")
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="simplex-sidon", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, *names):
        opts = {
            "group": dict(help="group file {'factors': [...]}"),
            "set": dict(help="set file {'group': ..., 'elements': [...]}"),
            "lattice": dict(help="lattice file {'n': ..., 'basis': [...]}"),
            "shape": dict(help="shape spec, e.g. simplex:n=2,h=4"),
            "h": dict(type=int), "n": dict(type=int), "r": dict(type=int), "t": dict(type=int),
            "budget": dict(type=int, default=None, help="max point reductions"),
            "catalog": dict(help="JSONL catalog to append certificates to"),
            "workers": dict(type=int, default=1),
        }
        for name in names:
            sp.add_argument(f"--{name}", **opts[name])
        sp.add_argument("-o", "--out", help="also write the result to this file")

    sp = sub.add_parser("snf", help="Smith normal form of a square integer matrix")
    sp.add_argument("--matrix", required=True)
    common(sp)
    sp.set_defaults(func=cmd_snf)

    sp = sub.add_parser("hnf", help="canonical Hermite normal form of a lattice basis")
    sp.add_argument("--matrix", required=True)
    common(sp)
    sp.set_defaults(func=cmd_hnf)

    sp = sub.add_parser("verify", help="check a set or an arrangement")
    sp.add_argument("what", choices=["bh", "basis", "genbasis", "arrangement"])
    common(sp, "group", "set", "lattice", "shape", "h", "r", "t")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("convert", help="translate between sets and lattices")
    sp.add_argument("direction", choices=["bh-to-lattice", "lattice-to-bh",
                                          "basis-to-lattice", "lattice-to-basis"])
    common(sp, "group", "set", "lattice")
    sp.add_argument("--h", type=int, required=True)
    sp.set_defaults(func=cmd_convert)

    sp = sub.add_parser("discretize", help="round a rational lattice basis to (1/h)Z^n")
    sp.add_argument("--basis", required=True, help="file {'basis': [['7/4', 0], ...]}")
    sp.add_argument("--eps", required=True, help="shrink factor, e.g. 1/3")
    sp.add_argument("--h-max", type=int, help="report the smallest packing h <= H_MAX instead")
    common(sp, "h")
    sp.set_defaults(func=cmd_discretize)

    sp = sub.add_parser("search", help="exhaustive search for phi, psi or a tiling")
    sp.add_argument("what", choices=["phi", "psi", "tiling"])
    sp.add_argument("--cyclic", action="store_true", help="restrict phi to cyclic groups")
    common(sp, "h", "n", "shape", "budget", "catalog", "workers")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("construct", help="closed-form or stored certificates")
    sp.add_argument("what", choices=["bh", "tiling"])
    common(sp, "h", "n", "r", "t", "catalog", "workers")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("bounds", help="evaluate the known bounds on phi and psi")
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--format", choices=["table", "json"], default="table")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("render", help="SVG picture of a 2-D arrangement")
    sp.add_argument("--window", default="-8:8", help="LO:HI, the box [LO, HI]^2")
    common(sp, "shape", "lattice")
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("catalog", help="list or regenerate certificate catalogs")
    sp.add_argument("action", choices=["list", "regen"])
    sp.add_argument("--catalog", help="catalog file (default: the shipped certificates)")
    sp.add_argument("--write", action="store_true", help="regen: overwrite the shipped file")
    sp.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (BudgetExceeded, CardinalityOverflow) as exc:
        watermark = getattr(exc, "watermark", None)
        print(f"budget exceeded: {exc}" + (f" (scanned through det {watermark})"
                                            if watermark is not None else ""), file=sys.stderr)
        return EXIT_BUDGET
    except WitnessError as exc:
        if exc.verdict is not None:
            print(json.dumps(exc.verdict.to_json()))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (SimplexSidonError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
