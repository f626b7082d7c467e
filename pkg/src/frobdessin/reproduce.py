"""Fixture suite for the reference examples and parameter table."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import catalog as cat
from .autgrp import (
    VertexMap,
    check_automorphism,
    check_prime_case_conditions,
    frobenius_group_report,
    subgroup_feasibility,
)
from .dessin import DEFAULT_MAX_EDGES, build_dessin, is_wada, signature_and_genus
from .diffset import (
    DifferenceSet,
    equivalent,
    fixed_vertices,
    frobenius_orbits,
    frobenius_shift_family,
    is_frobenius_fixed,
    verify_difference_set,
)
from .errors import BudgetExhausted, NotFrobeniusFixed
from .ordering import (
    DEFAULT_BUDGET,
    OrderedDifferenceSet,
    find_compatible_ordering,
    is_frobenius_compatible,
    is_wada_compatible,
)
from .singer import generate_singer_set, space_params

PASS, FAIL, INCONCLUSIVE, GATED = "pass", "fail", "inconclusive", "gated"


@dataclass(frozen=True)
class FixtureResult:
    name: str
    status: str
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


def _run(name: str, fn: Callable[[], tuple[bool, str]]) -> FixtureResult:
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed fixture, not a crashed suite
        return FixtureResult(name, FAIL, f"{type(exc).__name__}: {exc}")
    return FixtureResult(name, PASS if ok else FAIL, detail)


def _orbit_sets(orbits) -> set[frozenset[int]]:
    return {frozenset(o) for o in orbits}


def example_fixtures() -> list[FixtureResult]:
    D5 = OrderedDifferenceSet.from_sequence(cat.D5_MOD31, 31)
    D5s = OrderedDifferenceSet.from_sequence(cat.D5_MOD31_SHIFTED, 31)
    D5o = OrderedDifferenceSet.from_sequence(cat.D5_MOD31_SORTED, 31)
    D4 = DifferenceSet.from_elements(cat.D4_MOD40, 40)
    D121 = OrderedDifferenceSet.from_sequence(cat.D5_MOD121, 121)
    out = []

    def params(mpe, expect):
        def fn():
            P = space_params(*mpe)
            got = (P.ell, P.q, P.f)
            return got == expect, f"(l, q, f) = {got}"
        return fn

    out.append(_run("space P^4(F_2)", params((4, 2, 1), (31, 15, 5))))
    out.append(_run("space P^3(F_3)", params((3, 3, 1), (40, 13, 4))))
    out.append(_run("space P^2(F_5)", params((2, 5, 1), (31, 6, 3))))

    for name, elems, v, lam in (
        ("D5 mod 31", cat.D5_MOD31, 31, 7),
        ("D4 mod 40", cat.D4_MOD40, 40, 4),
        ("D4+20 mod 40", cat.D4_MOD40_PLUS20, 40, 4),
        ("D5 mod 121", cat.D5_MOD121, 121, 13),
    ):
        out.append(_run(f"lambda {name}", lambda e=elems, v=v, lam=lam: (
            verify_difference_set(e, v) == lam, f"lambda = {verify_difference_set(e, v)}")))

    for name, D, p in (("D5 mod 31", D5.base, 2), ("D4 mod 40", D4, 3),
                       ("D4+20 mod 40", D4.shift(20), 3), ("D5 mod 121", D121.base, 3)):
        out.append(_run(f"{name} fixed by {p}", lambda D=D, p=p: (is_frobenius_fixed(D, p), "")))

    def shifted_not_fixed():
        try:
            frobenius_orbits(D5s.base, 2, 5)
        except NotFrobeniusFixed as exc:
            return True, str(exc)
        return False, "D5 - 1 reported as fixed"

    out.append(_run("D5 - 1 not fixed by 2", shifted_not_fixed))
    out.append(_run("D5 - 1 in order", lambda: (
        D5.transform(1, -1).order == cat.D5_MOD31_SHIFTED, "")))
    out.append(_run("D4 + 20", lambda: (
        D4.shift(20).elements == tuple(sorted(cat.D4_MOD40_PLUS20)), "")))

    out.append(_run("orbits of D5 under 2", lambda: (
        _orbit_sets(frobenius_orbits(D5.base, 2, 5).orbits) == _orbit_sets(cat.D5_MOD31_ORBITS), "")))
    out.append(_run("orbits of D4 under 3", lambda: (
        _orbit_sets(frobenius_orbits(D4, 3, 4).orbits) == _orbit_sets(cat.D4_MOD40_ORBITS), "")))
    out.append(_run("fixed vertices (31, 2)", lambda: (fixed_vertices(31, 2) == (0,), "")))
    out.append(_run("fixed vertices (40, 3)", lambda: (fixed_vertices(40, 3) == cat.D4_MOD40_FIXED, "")))
    out.append(_run("shift family P^4(F_2)", lambda: (
        frobenius_shift_family(D5.base, 2, 5) == [D5.base], "")))
    out.append(_run("shift family P^3(F_3)", lambda: (
        set(frobenius_shift_family(D4, 3, 4)) == {D4, D4.shift(20)}, "")))

    for name, mpe, ref in (("D5 mod 31", (4, 2, 1), D5.base), ("D4 mod 40", (3, 3, 1), D4),
                           ("D5 mod 121", (4, 3, 1), D121.base)):
        def gen(mpe=mpe, ref=ref):
            w = equivalent(generate_singer_set(space_params(*mpe)), ref)
            return w is not None, f"witness (t, s) = {w}"
        out.append(_run(f"Singer set equivalent to {name}", gen))

    out.append(_run("D5 order Frobenius compatible", lambda: (
        (lambda r: (r.frobenius and r.j == 1 and r.k == 3, str(r.to_dict())))(is_frobenius_compatible(D5, 2, 5)))))
    out.append(_run("sorted D5 not Frobenius compatible", lambda: (
        is_frobenius_compatible(D5o, 2, 5).frobenius is False, "")))
    out.append(_run("D5 mod 121 Wada and Frobenius compatible", lambda: (
        bool(is_wada_compatible(D121, 121).wada and is_frobenius_compatible(D121, 3, 5).frobenius), "")))

    def main_dessin():
        d = build_dessin(D5)
        sig, genus = signature_and_genus(d)
        ok = (d.n_cells == 15 and set(d.cell_sizes.tolist()) == {62}
              and sig.as_tuple() == (15, 15, 31) and genus == 195
              and d.euler_characteristic == -388 and is_wada(d).ok)
        return ok, f"cells={d.n_cells} signature={sig.as_tuple()} genus={genus}"

    out.append(_run("dessin D: 15 cells, (15,15,31), genus 195, Wada", main_dessin))

    def automorphisms():
        verdicts = {}
        for name, O in (("D", D5), ("D'", D5s), ("D''", D5o)):
            d = build_dessin(O)
            verdicts[name] = (check_automorphism(d, VertexMap.affine(2)).is_automorphism,
                              check_automorphism(d, VertexMap.affine(1, 1)).is_automorphism)
        expect = {"D": (True, True), "D'": (False, True), "D''": (False, True)}
        return verdicts == expect, str(verdicts)

    out.append(_run("x->2x on D only; x->x+1 on all", automorphisms))

    def group_report():
        r = frobenius_group_report(build_dessin(D5), 2, 5)
        ok = r.free_on_edges and r.fixed_vertices_match and sorted(r.cell_orbits) == [5, 5, 5]
        ok = ok and r.powers[1].fixed_vertices == (0,)
        return ok, f"cell orbits {list(r.cell_orbits)}, m = {r.m}"

    out.append(_run("Frobenius group on D", group_report))
    out.append(_run("P^4(F_2) prime-case conditions", lambda: (
        check_prime_case_conditions(space_params(4, 2)).nice, "")))

    def subgroups():
        details = []
        ok = True
        for mpe, expect in cat.SUBGROUP_EXAMPLES.items():
            got = {v.g: v.orbit_count for v in subgroup_feasibility(space_params(*mpe))}
            for g, count in expect.items():
                ok &= got[g] == count
            details.append(f"{mpe}: {got}")
        return ok, "; ".join(details)

    out.append(_run("subgroup feasibility P^4(F_4), P^6(F_4)", subgroups))
    return out


def table_fixtures(force_large: bool = False, budget: int = DEFAULT_BUDGET) -> list[FixtureResult]:
    out = []
    for mpe, (q, ell, f) in cat.PRIME_CASE_ROWS.items():
        P = space_params(*mpe)
        label = P.label
        out.append(_run(f"{label} parameters", lambda P=P, exp=(q, ell, f): (
            (P.q, P.ell, P.f) == exp, f"(q, l, f) = {(P.q, P.ell, P.f)}")))
        out.append(_run(f"{label} prime-case conditions", lambda P=P: (
            check_prime_case_conditions(P).nice, "")))
        try:
            D = generate_singer_set(P)
        except Exception as exc:
            out.append(FixtureResult(f"{label} Singer set", FAIL, f"{type(exc).__name__}: {exc}"))
            continue
        out.append(_run(f"{label} Singer orbits", lambda D=D, P=P: (
            0 not in D and set(frobenius_orbits(D, P.p, P.f).lengths) == {P.f}, "")))

        name = f"{label} Frobenius+Wada ordering"
        try:
            O = find_compatible_ordering(D, P.p, P.f, require_frobenius=True, budget=budget)
        except BudgetExhausted as exc:
            status = INCONCLUSIVE if mpe in cat.OPEN_SEARCH_ROWS else FAIL
            out.append(FixtureResult(name, status, str(exc)))
            continue
        if O is None:
            status = INCONCLUSIVE if mpe in cat.OPEN_SEARCH_ROWS else FAIL
            out.append(FixtureResult(name, status, "no such ordering"))
            continue
        ok = bool(is_wada_compatible(O, P.ell).wada and is_frobenius_compatible(O, P.p, P.f).frobenius)
        out.append(FixtureResult(name, PASS if ok else FAIL, "found"))

        dname = f"{label} dessin ({q},{q},{ell})"
        if P.q * P.ell > DEFAULT_MAX_EDGES and not force_large:
            out.append(FixtureResult(dname, GATED, f"{P.q * P.ell} edges; needs --force-large"))
            continue

        def dessin_check(O=O, P=P):
            d = build_dessin(O, force_large=True)
            sig, _ = signature_and_genus(d)
            r = frobenius_group_report(d, P.p, P.f)
            ok = (sig.as_tuple() == (P.q, P.q, P.ell) and is_wada(d).ok and r.free_on_edges
                  and list(r.cell_orbits) == [P.f] * (P.q // P.f))
            return ok, f"signature {sig.as_tuple()}, cell orbits {len(r.cell_orbits)}x{P.f}"

        out.append(_run(dname, dessin_check))
    return out


def exit_code(results: list[FixtureResult]) -> int:
    return 1 if any(r.status == FAIL for r in results) else 0
