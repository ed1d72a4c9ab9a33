"""Command-line interface.

Verdicts go to stdout as single-line JSON, diagnostics to stderr.  Exit
code 0 means the property holds or the construction was emitted, 1 means
the property fails, 2 means a usage or input error, so shell pipelines can
chain checks.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import constructions, lattice, nets, planar, search
from .core import System, is_reduced
from .planar import Certificate, PlanarSet

_SYSTEM_CHECKS = ("semirigid", "reduced", "m3", "orthogonal", "3net")
_POINT_CHECKS = ("monogenic", "center", "certificate")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from None


def _load_system(path: str) -> System:
    text = _read_input(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: line {exc.lineno}: {exc.msg}") from None
    try:
        return System.from_json_dict(data)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None


def _load_points(path: str) -> PlanarSet:
    text = _read_input(path)
    stripped = text.lstrip()
    try:
        if stripped.startswith("{"):
            try:
                data = json.loads(text)
            except json.JSONDecodeError as exc:
                raise ValueError(f"line {exc.lineno}: {exc.msg}") from None
            return planar.points_from_json_dict(data)
        return planar.parse_points(text)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None


def _load_latin(path: str) -> nets.PartialLatinSquare:
    text = _read_input(path)
    try:
        return nets.parse_latin(text)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None


def _emit(obj) -> None:
    print(json.dumps(obj))


# ---------------------------------------------------------------- construct


def _cmd_construct(args) -> int:
    family = args.family
    params = args.params
    counts = {
        "zadori": 1,
        "tn": 1,
        "tn2": 1,
        "tn2p": 1,
        "simplex": 2,
        "pierce": 1,
        "product": 2,
        "u": 0,
    }
    if len(params) != counts[family]:
        raise ValueError(
            f"construct {family} takes {counts[family]} integer parameter(s)"
        )
    if family == "zadori":
        _emit(constructions.zadori(params[0]).to_json_dict())
    elif family == "simplex":
        _emit(constructions.simplex_system(params[0], params[1]).to_json_dict())
    elif family == "pierce":
        _emit(constructions.pierce_system(params[0]).to_json_dict())
    elif family == "product":
        _emit(constructions.product_system(params[0], params[1]).to_json_dict())
    else:
        maker = {
            "tn": constructions.tn,
            "tn2": constructions.tn2,
            "tn2p": constructions.tn2p,
            "u": constructions.u_example,
        }[family]
        points = maker(*params)
        _print_points(points, args.format)
    return 0


def _print_points(points: PlanarSet, fmt: str) -> None:
    if fmt == "json":
        _emit(planar.points_to_json_dict(points))
    else:
        sys.stdout.write(planar.format_points(points))


# -------------------------------------------------------------------- check


def _run_check(prop: str, path: str) -> tuple[dict, bool]:
    if prop in _SYSTEM_CHECKS:
        m = _load_system(path)
        if prop == "semirigid":
            report = search.is_semirigid(m)
            verdict: dict = {"semirigid": report.semirigid}
            if report.witness is not None:
                verdict["witness"] = list(report.witness.images)
            return verdict, report.semirigid
        if prop == "reduced":
            ok = is_reduced(m)
            return {"reduced": ok}, ok
        if prop == "m3":
            ok = lattice.is_m3(m)
            return {"m3": ok}, ok
        if prop == "orthogonal":
            ok = all(
                nets.orthogonal(m.relations[i], m.relations[j])
                for i in range(m.arity)
                for j in range(i + 1, m.arity)
            )
            return {"orthogonal": ok}, ok
        ok = nets.is_3net(m)
        return {"3net": ok}, ok
    points = _load_points(path)
    if prop == "monogenic":
        gen = planar.is_monogenic(points)
        verdict = {"monogenic": gen is not None}
        if gen is not None:
            verdict["generator"] = [list(p) for p in gen]
        return verdict, gen is not None
    if prop == "center":
        center = planar.symmetry_center(points)
        return {
            "center": center is not None,
            "center_doubled": list(center) if center is not None else None,
        }, center is not None
    result = planar.semirigidity_certificate(points)
    verdict = {
        "certificate": result.verdict.value,
        "generator": [list(p) for p in result.generator] if result.generator else None,
        "center_doubled": list(result.doubled_center)
        if result.doubled_center
        else None,
    }
    return verdict, result.verdict is Certificate.CERTIFIED_SEMIRIGID


def _check_star(args) -> tuple[dict, bool]:
    return _run_check(*args)


def _cmd_check(args) -> int:
    tasks = [(args.property, path) for path in args.input]
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_check_star, tasks))
    else:
        results = [_run_check(*t) for t in tasks]
    all_hold = True
    for verdict, holds in results:
        _emit(verdict)
        all_hold = all_hold and holds
    return 0 if all_hold else 1


# -------------------------------------------------------------------- endos


def _cmd_endos(args) -> int:
    m = _load_system(args.input)
    if args.mode == "count":
        count, capped = search.count_endomorphisms(m, args.cap)
        _emit({"count": count, "capped": capped})
    else:
        result = search.endomorphisms(m, args.cap)
        _emit(
            {
                "n": m.n,
                "arity": m.arity,
                "count": len(result),
                "capped": result.capped,
                "maps": [list(f.images) for f in result],
            }
        )
    return 0


# ------------------------------------------------------------------- planar


def _cmd_planar(args) -> int:
    if args.action == "induce":
        points = _load_points(args.input)
        _emit(planar.induced_system(points).to_json_dict())
        return 0
    if args.action == "closure":
        if args.subset is None:
            raise ValueError("closure needs --subset with the generating points")
        carrier = _load_points(args.input)
        subset = _load_points(args.subset)
        result = planar.closure(carrier, subset.points)
        _print_points(result, args.format)
        return 0
    if args.action == "normalize":
        points = _load_points(args.input)
        _print_points(planar.normalize(points), args.format)
        return 0
    m = _load_system(args.input)
    result = planar.embed_search(m, grid=args.grid, fixed_order=args.fixed_order)
    grid = args.grid if args.grid is not None else m.n
    if result is None:
        _emit({"embedded": False, "grid": grid})
        return 1
    _emit(
        {
            "embedded": True,
            "grid": grid,
            "points": [list(p) for p in result.points],
            "relation_order": list(result.relation_order),
        }
    )
    return 0


# ---------------------------------------------------------------------- net


def _cmd_net(args) -> int:
    if args.action == "to-latin":
        m = _load_system(args.input)
        square, placed = nets.to_partial_latin(m)
        if args.format == "json":
            _emit(
                {
                    "order": square.order,
                    "cells": [list(row) for row in square.cells],
                    "element_cells": [list(rc) for rc in placed],
                }
            )
        else:
            sys.stdout.write(nets.format_latin(square))
        return 0
    if args.action == "extend":
        square = _load_latin(args.input)
        sys.stdout.write(nets.format_latin(nets.evans_extend(square)))
        return 0
    m = _load_system(args.input)
    net, embedding = nets.embed_into_3net(m)
    side = net.relations[1].num_classes
    _emit(
        {
            "order": side,
            "net": net.to_json_dict(),
            "embedding": list(embedding.images),
        }
    )
    return 0


# ------------------------------------------------------------------- census


def _cmd_census(args) -> int:
    triples = lattice.semirigid_triples(args.n, jobs=args.jobs)
    if args.up_to_iso:
        canon = sorted(
            {lattice.canonical_triple(t, args.permute_relations) for t in triples}
        )
        out: dict = {"n": args.n, "semirigid_classes": len(canon)}
        if args.representatives:
            out["representatives"] = [
                {"n": args.n, "relations": [list(r) for r in t]} for t in canon
            ]
    else:
        out = {"n": args.n, "semirigid_triples": len(triples)}
        if args.representatives:
            canon = sorted(
                {lattice.canonical_triple(t, args.permute_relations) for t in triples}
            )
            out["representatives"] = [
                {"n": args.n, "relations": [list(r) for r in t]} for t in canon
            ]
    _emit(out)
    return 0


# ---------------------------------------------------------------------- iso


def _cmd_iso(args) -> int:
    a = _load_system(args.file_a)
    b = _load_system(args.file_b)
    result = lattice.are_isomorphic(
        a, b, allow_relation_permutation=args.permute_relations
    )
    if result is None:
        _emit({"isomorphic": False})
        return 1
    _emit(
        {
            "isomorphic": True,
            "mapping": list(result.mapping.images),
            "relation_permutation": list(result.relation_permutation),
        }
    )
    return 0


# ------------------------------------------------------------------- parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semirigid",
        description="Construct, analyze and certify systems of equivalence relations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a named construction")
    p.add_argument(
        "family",
        choices=["zadori", "tn", "tn2", "tn2p", "simplex", "pierce", "product", "u"],
    )
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("check", help="test a property of a file")
    p.add_argument("property", choices=list(_SYSTEM_CHECKS + _POINT_CHECKS))
    p.add_argument("-i", "--input", action="append", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("endos", help="enumerate or count endomorphisms")
    p.add_argument("mode", choices=["list", "count"])
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=_cmd_endos)

    p = sub.add_parser("planar", help="three-direction point-set operations")
    p.add_argument("action", choices=["induce", "closure", "normalize", "embed"])
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-x", "--subset", default=None, help="generating points (closure)")
    p.add_argument("--grid", type=int, default=None, help="embedding grid bound")
    p.add_argument("--fixed-order", action="store_true")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=_cmd_planar)

    p = sub.add_parser("net", help="latin squares and 3-net embedding")
    p.add_argument("action", choices=["to-latin", "extend", "embed"])
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=_cmd_net)

    p = sub.add_parser("census", help="count semirigid triples on n elements")
    p.add_argument("n", type=int)
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--permute-relations", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--representatives", action="store_true")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("iso", help="search for an isomorphism between two systems")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--permute-relations", action="store_true")
    p.set_defaults(func=_cmd_iso)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
