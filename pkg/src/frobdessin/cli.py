"""Command-line interface.

Exit codes: 0 ok, 1 fixture mismatch, 2 usage or invalid parameters,
3 internal verification failure, 4 search budget exhausted, 5 size guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .autgrp import (
    VertexMap,
    check_automorphism,
    check_prime_case_conditions,
    frobenius_group_report,
    subgroup_feasibility,
)
from .dessin import DEFAULT_MAX_EDGES, build_dessin, dessin_report
from .diffset import DifferenceSet, frobenius_orbits, frobenius_shift_family
from .errors import (
    BudgetExhausted,
    DessinError,
    FNotDividingQ,
    InvalidParameters,
    NotAnAutomorphism,
    NotFrobeniusFixed,
    OrbitShapeError,
    SizeGuardError,
)
from .export import to_dot, to_svg
from .ordering import (
    DEFAULT_BUDGET,
    OrderedDifferenceSet,
    find_compatible_ordering,
    is_frobenius_compatible,
    is_wada_compatible,
)
from .reproduce import example_fixtures, exit_code, table_fixtures
from .singer import SpaceParams, generate_singer_set, space_params

EXIT_OK, EXIT_FIXTURE, EXIT_USAGE, EXIT_INTERNAL, EXIT_BUDGET, EXIT_SIZE = range(6)


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"frobdessin {__version__}")
        for line in text_lines:
            print(line)


def _space(args) -> SpaceParams:
    if args.m is None or args.p is None:
        raise UsageError("-m and -p are required")
    return space_params(args.m, args.p, args.e)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_space(args) -> int:
    P = _space(args)
    verdict = check_prime_case_conditions(P)
    subgroups = subgroup_feasibility(P)
    lines = [
        f"{P.label}: l={P.ell} q={P.q} lambda={P.lam} f={P.f}",
        f"nice-case: {_yes(verdict.nice)}",
    ]
    for key, val in verdict.to_dict().items():
        if key != "nice":
            lines.append(f"  {key}: {_yes(val)}")
    for v in subgroups:
        extra = f", {v.orbit_count} orbits of length {v.g}" if v.accepted else ""
        lines.append(
            f"  subgroup order {v.g} (s={v.s}, t={v.t}): g|q {_yes(v.divides_q)}, "
            f"gcd(t-1,l)=1 {_yes(v.gcd_ok)} -> {'accepted' if v.accepted else 'rejected'}{extra}"
        )
    payload = {
        "params": P.to_dict(),
        "prime_case": verdict.to_dict(),
        "subgroups": [v.to_dict() for v in subgroups],
    }
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_diffset(args) -> int:
    P = _space(args)
    D = generate_singer_set(P)
    payload = {"params": P.to_dict(), "set": D.to_dict()}
    lines = [f"{P.label}: ({P.ell},{P.q},{D.lam}) difference set", "D = " + " ".join(map(str, D.elements))]
    if args.orbits:
        orbits = frobenius_orbits(D, P.p, P.f)
        payload["orbits"] = orbits.to_dict()
        lines.append(f"orbits under x -> {P.p}x:")
        lines += ["  {" + ", ".join(map(str, o)) + "}" for o in orbits.orbits]
    if args.shifts:
        family = frobenius_shift_family(D, P.p, P.f)
        payload["shifts"] = [S.to_dict() for S in family]
        lines.append(f"Frobenius-fixed shifts: {len(family)}")
        lines += ["  " + " ".join(map(str, S.elements)) for S in family]
    _emit(args, payload, lines)
    return EXIT_OK


def _load_json(path: str) -> dict:
    return json.loads(Path(path).read_text())


def _resolve_ordering(args, P: SpaceParams | None, D: DifferenceSet) -> OrderedDifferenceSet:
    strategy = args.ordering
    if strategy == "sorted":
        return OrderedDifferenceSet(D, D.elements)
    if strategy == "frobenius" and P is None:
        raise UsageError("--ordering frobenius needs -m/-p")
    if strategy in ("frobenius", "auto") and P is not None:
        try:
            found = find_compatible_ordering(D, P.p, P.f, require_frobenius=True, budget=args.budget)
        except (OrbitShapeError, BudgetExhausted):
            if strategy == "frobenius":
                raise
            found = None
        if found is not None or strategy == "frobenius":
            if found is None:
                raise UsageError("no Frobenius and Wada compatible ordering exists")
            return found
    try:
        found = find_compatible_ordering(D, 1, 1, require_frobenius=False, budget=args.budget)
    except BudgetExhausted:
        if strategy == "wada":
            raise
        found = None
    if found is None:
        if strategy == "wada":
            raise UsageError("no Wada compatible ordering exists")
        return OrderedDifferenceSet(D, D.elements)
    return found


def _ordered_input(args) -> tuple[SpaceParams | None, OrderedDifferenceSet]:
    if args.order:
        O = OrderedDifferenceSet.from_dict(_load_json(args.order))
        if args.set:
            D = DifferenceSet.from_dict(_load_json(args.set))
            if D != O.base:
                raise UsageError("--order is not an ordering of --set")
        P = _space(args) if args.m is not None else None
        return P, O
    if args.set:
        D = DifferenceSet.from_dict(_load_json(args.set))
        P = _space(args) if args.m is not None else None
        return P, _resolve_ordering(args, P, D)
    P = _space(args)
    return P, _resolve_ordering(args, P, generate_singer_set(P))


def cmd_order(args) -> int:
    P = _space(args)
    D = generate_singer_set(P)
    O = find_compatible_ordering(D, P.p, P.f, require_frobenius=args.frobenius, budget=args.budget)
    if O is None:
        _emit(args, {"found": False, "params": P.to_dict()}, [f"{P.label}: NOT-FOUND (search space exhausted)"])
        return EXIT_OK
    report = is_wada_compatible(O, P.ell)
    try:
        report = report.merge(is_frobenius_compatible(O, P.p, P.f))
    except (NotFrobeniusFixed, FNotDividingQ):
        pass
    lines = [f"{P.label}: " + " ".join(map(str, O.order)), f"wada: {_yes(report.wada)}"]
    if report.frobenius is not None:
        lines.append(f"frobenius: {_yes(report.frobenius)}" + (f" (j={report.j}, k={report.k})" if report.frobenius else ""))
    _emit(args, {"found": True, "ordering": O.to_dict(), "report": report.to_dict()}, lines)
    return EXIT_OK


def _build(args, O: OrderedDifferenceSet):
    return build_dessin(O, max_edges=args.max_edges, force_large=args.force_large)


def cmd_dessin(args) -> int:
    P, O = _ordered_input(args)
    d = _build(args, O)
    report = dessin_report(d)
    report["ordering"] = O.to_dict()
    if args.dot:
        Path(args.dot).write_text(to_dot(d, colour_edges=True))
    if args.svg:
        Path(args.svg).write_text(to_svg(d))
    sizes = sorted(set(c["valency"] for c in report["cells"]))
    lines = [
        f"l={d.ell} q={d.q} vertices={d.n_vertices} edges={d.n_edges} cells={d.n_cells}",
        f"cell valencies: {sizes}",
        f"signature: ({', '.join(map(str, report['signature']))})",
        f"euler characteristic: {report['euler_characteristic']}  genus: {report['genus']}",
        f"uniform: {_yes(report['uniform'])}  wada: {_yes(report['wada'])}",
    ]
    _emit(args, report, lines)
    return EXIT_OK


def _parse_map(text: str) -> VertexMap:
    try:
        t, s = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--map expects t,s (got {text!r})") from None
    return VertexMap.affine(t, s)


def cmd_aut(args) -> int:
    if not args.map and not args.group:
        raise UsageError("give --map t,s and/or --group")
    P, O = _ordered_input(args)
    d = _build(args, O)
    payload: dict = {"ordering": O.to_dict()}
    lines = []
    if args.map:
        rep = check_automorphism(d, _parse_map(args.map))
        payload["map"] = rep.to_dict()
        lines.append(f"x -> {rep.map.t}x + {rep.map.s}: {'automorphism' if rep.is_automorphism else 'not an automorphism'}")
        if rep.is_automorphism:
            lines.append(f"  fixed vertices {list(rep.fixed_vertices)}, fixed edges {rep.fixed_edges}, cell orbits {rep.cell_orbits}")
        else:
            lines.append(f"  {rep.reason} at dart {rep.counterexample}")
    if args.group:
        if P is None:
            raise UsageError("--group needs -m/-p")
        try:
            g = frobenius_group_report(d, P.p, P.f)
        except NotAnAutomorphism as exc:
            payload["group"] = {"valid": False, "reason": str(exc)}
            lines.append(f"Frobenius group: {exc}")
        else:
            payload["group"] = g.to_dict()
            lines.append(
                f"Frobenius group of order {P.f}: free on edges {_yes(g.free_on_edges)}, "
                f"cell orbits {list(g.cell_orbits)}, cell shift {g.cell_shift}, m = {g.m}"
            )
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    if not (args.examples or args.table2):
        raise UsageError("choose --examples and/or --table2")
    results = []
    if args.examples:
        results += example_fixtures()
    if args.table2:
        results += table_fixtures(force_large=args.force_large, budget=args.budget)
    width = max(len(r.name) for r in results)
    lines = [f"{r.status.upper():13s} {r.name:{width}s}  {r.detail}".rstrip() for r in results]
    code = exit_code(results)
    lines.append(f"{sum(r.status == 'pass' for r in results)}/{len(results)} passed")
    _emit(args, {"results": [r.to_dict() for r in results], "exit": code}, lines)
    return code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    space = argparse.ArgumentParser(add_help=False)
    space.add_argument("-m", type=int, help="projective dimension (>= 2)")
    space.add_argument("-p", type=int, help="characteristic")
    space.add_argument("-e", type=int, default=1, help="n = p**e (default 1)")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node limit")

    build = argparse.ArgumentParser(add_help=False)
    build.add_argument("--set", help="JSON difference set {modulus, elements}")
    build.add_argument("--order", help="JSON ordering {modulus, order}")
    build.add_argument("--ordering", choices=("auto", "sorted", "wada", "frobenius"), default="auto")
    build.add_argument("--force-large", action="store_true")
    build.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)

    parser = argparse.ArgumentParser(prog="frobdessin", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"frobdessin {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("space", parents=[common, space], help="parameters and group conditions")
    p.set_defaults(func=cmd_space)

    p = sub.add_parser("diffset", parents=[common, space], help="Singer difference set")
    p.add_argument("--orbits", action="store_true")
    p.add_argument("--shifts", action="store_true")
    p.set_defaults(func=cmd_diffset)

    p = sub.add_parser("order", parents=[common, space, search], help="search a compatible ordering")
    p.add_argument("--frobenius", action="store_true", help="require a Frobenius block ordering")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("dessin", parents=[common, space, search, build], help="build and analyse the dessin")
    p.add_argument("--dot", help="write the incidence graph as DOT")
    p.add_argument("--svg", help="write a schematic SVG of the cells at vertex 0")
    p.set_defaults(func=cmd_dessin)

    p = sub.add_parser("aut", parents=[common, space, search, build], help="certify automorphisms")
    p.add_argument("--map", help="affine map t,s meaning x -> t*x + s")
    p.add_argument("--group", action="store_true", help="report the whole Frobenius group")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("reproduce", parents=[common, search], help="run the fixture suite")
    p.add_argument("--examples", action="store_true")
    p.add_argument("--table2", action="store_true")
    p.add_argument("--force-large", action="store_true")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "budget", 1) < 1:
        print("error: --budget must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, InvalidParameters, OrbitShapeError, FNotDividingQ, NotFrobeniusFixed,
            FileNotFoundError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExhausted as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except DessinError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
