"""Automorphism certification for dessins and the group-order conditions.

A vertex map acts identically on white and black indices. It is accepted as
an (orientation-preserving) automorphism when it sends edges to edges and the
induced dart map commutes with the rotation; commuting with the edge
involution then holds by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np
from sympy import divisors, isprime

from .dessin import Dessin
from .diffset import fixed_vertices
from .errors import NotAnAutomorphism
from .singer import SpaceParams

__all__ = [
    "VertexMap",
    "AutReport",
    "FrobeniusGroupReport",
    "PrimeCaseVerdict",
    "SubgroupVerdict",
    "dart_image",
    "commutes",
    "check_automorphism",
    "frobenius_group_report",
    "check_prime_case_conditions",
    "subgroup_feasibility",
    "permutation_cycles",
]


@dataclass(frozen=True)
class VertexMap:
    """Either ``x -> t*x + s mod ell`` or an explicit permutation of Z/ell."""

    t: int | None = None
    s: int | None = None
    perm: tuple[int, ...] | None = None

    @classmethod
    def affine(cls, t: int, s: int = 0) -> VertexMap:
        return cls(t=int(t), s=int(s))

    @classmethod
    def explicit(cls, perm) -> VertexMap:
        return cls(perm=tuple(int(x) for x in perm))

    identity = None  # set below

    @property
    def is_affine(self) -> bool:
        return self.perm is None

    def array(self, ell: int) -> np.ndarray:
        if self.perm is not None:
            if len(self.perm) != ell:
                raise ValueError(f"permutation has length {len(self.perm)}, expected {ell}")
            return np.asarray(self.perm, dtype=np.int64) % ell
        return (self.t * np.arange(ell, dtype=np.int64) + self.s) % ell

    def is_bijective(self, ell: int) -> bool:
        if self.perm is None:
            return gcd(self.t, ell) == 1
        return np.unique(self.array(ell)).size == ell

    def compose(self, other: VertexMap, ell: int) -> VertexMap:
        """``self o other``."""
        if self.is_affine and other.is_affine:
            return VertexMap.affine(self.t * other.t % ell, (self.t * other.s + self.s) % ell)
        return VertexMap.explicit(self.array(ell)[other.array(ell)])

    def power(self, u: int, ell: int) -> VertexMap:
        out = VertexMap.affine(1, 0)
        for _ in range(u):
            out = self.compose(out, ell)
        return out

    def to_dict(self) -> dict:
        if self.is_affine:
            return {"t": self.t, "s": self.s}
        return {"perm": list(self.perm)}

    @classmethod
    def from_dict(cls, data: dict) -> VertexMap:
        if "perm" in data:
            return cls.explicit(data["perm"])
        return cls.affine(data["t"], data.get("s", 0))


VertexMap.identity = VertexMap.affine(1, 0)


def permutation_cycles(perm) -> list[list[int]]:
    """Cycles of a permutation of ``range(n)``, each starting at its minimum."""
    perm = list(perm)
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        cycles.append(cyc)
    return cycles


@dataclass(frozen=True)
class AutReport:
    """Verdict for one vertex map on one dessin.

    ``counterexample`` is a dart ``(colour, vertex, position)`` whose image
    breaks incidence or the rotation. The remaining fields are filled only
    for automorphisms: ``fixed_vertices`` are the residues fixed by the map
    (the same for both colours), ``fixed_edges`` counts edges mapped to
    themselves and ``cell_action[c]`` is the image of cell ``c``.
    """

    map: VertexMap
    is_automorphism: bool
    counterexample: tuple[int, int, int] | None = None
    reason: str | None = None
    fixed_vertices: tuple[int, ...] = ()
    fixed_edges: int | None = None
    cell_action: tuple[int, ...] | None = None

    @property
    def cell_orbits(self) -> list[int]:
        if self.cell_action is None:
            return []
        return [len(c) for c in permutation_cycles(self.cell_action)]

    def to_dict(self) -> dict:
        return {
            "map": self.map.to_dict(),
            "valid": self.is_automorphism,
            "counterexample": None if self.counterexample is None else list(self.counterexample),
            "reason": self.reason,
            "fixed_vertices": list(self.fixed_vertices),
            "fixed_edges": self.fixed_edges,
            "cell_orbits": self.cell_orbits,
        }


def dart_image(d: Dessin, vmap: np.ndarray) -> tuple[np.ndarray | None, int | None]:
    """Dart map induced by a vertex map, or ``(None, bad_dart)``.

    The white dart ``(w, i)`` goes to the white dart at ``vmap[w]`` whose
    element equals ``vmap[w + d_i] - vmap[w]``; its partner goes to the
    partner of that image.
    """
    ell, q = d.ell, d.q
    n_half = ell * q
    pos_of = np.full(ell, -1, dtype=np.int64)
    pos_of[d.elements] = np.arange(q)
    w = d.dart_vertex[:n_half]
    b = (w + d.elements[d.dart_position[:n_half]]) % ell
    ip = pos_of[(vmap[b] - vmap[w]) % ell]
    bad = np.flatnonzero(ip < 0)
    if bad.size:
        return None, int(bad[0])
    image = np.empty(d.n_darts, dtype=np.int64)
    image[:n_half] = vmap[w] * q + ip
    image[d.involution[:n_half]] = n_half + vmap[b] * q + ip
    return image, None


def commutes(rotation: np.ndarray, involution: np.ndarray, image: np.ndarray) -> int | None:
    """First dart where ``image`` fails to commute with the map, else None."""
    for perm in (rotation, involution):
        bad = np.flatnonzero(image[perm] != perm[image])
        if bad.size:
            return int(bad[0])
    return None


def check_automorphism(d: Dessin, phi: VertexMap) -> AutReport:
    ell = d.ell
    if not phi.is_bijective(ell):
        return AutReport(phi, False, reason="vertex map is not a bijection")
    vmap = phi.array(ell)
    image, bad = dart_image(d, vmap)
    if image is None:
        return AutReport(phi, False, d.dart(bad), "edge not mapped to an edge")
    bad = commutes(d.rotation, d.involution, image)
    if bad is not None:
        return AutReport(phi, False, d.dart(bad), "does not commute with the rotation")
    n_half = ell * d.q
    fixed_edges = int(np.count_nonzero(image[:n_half] == np.arange(n_half)))
    fixed = tuple(int(x) for x in np.flatnonzero(vmap == np.arange(ell)))
    cell_action = tuple(int(x) for x in d.dart_cell[image[d.cell_starts]])
    return AutReport(phi, True, fixed_vertices=fixed, fixed_edges=fixed_edges, cell_action=cell_action)


@dataclass(frozen=True)
class FrobeniusGroupReport:
    """Summary of the powers ``x -> p**u x`` for ``u = 0 .. f-1``.

    ``cell_shift`` is the offset ``delta`` with ``sigma(C_c) = C_{c+delta}``
    for the cells ``C_c`` met at the white vertex 0 in rotation order, and
    ``m = delta / k`` when ``k = q/f`` divides it; both are ``None`` when the
    observed action does not fit that form.
    """

    p: int
    f: int
    powers: tuple[AutReport, ...]
    free_on_edges: bool
    fixed_vertices_match: bool
    cell_orbits: tuple[int, ...]
    k: int | None
    cell_shift: int | None
    m: int | None

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "f": self.f,
            "free_on_edges": self.free_on_edges,
            "fixed_vertices_match": self.fixed_vertices_match,
            "cell_orbits": list(self.cell_orbits),
            "k": self.k,
            "cell_shift": self.cell_shift,
            "m": self.m,
            "powers": [r.to_dict() for r in self.powers],
        }


def frobenius_group_report(d: Dessin, p: int, f: int) -> FrobeniusGroupReport:
    ell, q = d.ell, d.q
    sigma = check_automorphism(d, VertexMap.affine(p % ell, 0))
    if not sigma.is_automorphism:
        raise NotAnAutomorphism(f"x -> {p}x is not an automorphism: {sigma.reason}")
    powers = []
    match = True
    for u in range(f):
        t = pow(p, u, ell)
        rep = check_automorphism(d, VertexMap.affine(t, 0))
        if not rep.is_automorphism:  # pragma: no cover - powers of an automorphism
            raise AssertionError(f"power {u} of an automorphism failed: {rep.reason}")
        match &= rep.fixed_vertices == fixed_vertices(ell, t)
        powers.append(rep)
    free = all(r.fixed_edges == 0 for r in powers[1:])

    k = q // f if q % f == 0 else None
    shift = m = None
    around = d.cells_around_white(0)
    if len(set(around)) == q:
        where = {cell: c for c, cell in enumerate(around)}
        delta = (where.get(sigma.cell_action[around[0]], -1)) % q
        if all(sigma.cell_action[around[c]] == around[(c + delta) % q] for c in range(q)):
            shift = delta
            if k and delta % k == 0:
                m = delta // k
    return FrobeniusGroupReport(
        p, f, tuple(powers), free, match, tuple(sigma.cell_orbits), k, shift, m
    )


@dataclass(frozen=True)
class PrimeCaseVerdict:
    """Each hypothesis for the prime-order Frobenius case, separately."""

    f_prime: bool
    p_ne_m_plus_1: bool
    p_not_1_mod_m_plus_1: bool
    f_divides_q: bool
    gcd_p_minus_1_ell_is_1: bool

    @property
    def nice(self) -> bool:
        return all(
            (self.f_prime, self.p_ne_m_plus_1, self.p_not_1_mod_m_plus_1,
             self.f_divides_q, self.gcd_p_minus_1_ell_is_1)
        )

    def to_dict(self) -> dict:
        return {
            "f_prime": self.f_prime,
            "p_ne_m_plus_1": self.p_ne_m_plus_1,
            "p_not_1_mod_m_plus_1": self.p_not_1_mod_m_plus_1,
            "f_divides_q": self.f_divides_q,
            "gcd_p_minus_1_ell_is_1": self.gcd_p_minus_1_ell_is_1,
            "nice": self.nice,
        }


def check_prime_case_conditions(params: SpaceParams) -> PrimeCaseVerdict:
    m1 = params.m + 1
    return PrimeCaseVerdict(
        f_prime=isprime(params.f),
        p_ne_m_plus_1=params.p != m1,
        p_not_1_mod_m_plus_1=params.p % m1 != 1,
        f_divides_q=params.q % params.f == 0,
        gcd_p_minus_1_ell_is_1=gcd(params.p - 1, params.ell) == 1,
    )


@dataclass(frozen=True)
class SubgroupVerdict:
    """Feasibility of the subgroup of order ``g`` generated by ``sigma**s``.

    ``t = p**s mod ell`` is how the subgroup acts on indices. The trivial
    subgroup is always accepted.
    """

    g: int
    s: int
    t: int
    divides_q: bool
    gcd_ok: bool
    accepted: bool
    orbit_count: int | None

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def subgroup_feasibility(params: SpaceParams) -> list[SubgroupVerdict]:
    out = []
    for g in sorted(divisors(params.f), reverse=True):
        s = params.f // g
        t = pow(params.p, s, params.ell)
        divides = params.q % g == 0
        gcd_ok = gcd(t - 1, params.ell) == 1
        accepted = g == 1 or (divides and gcd_ok)
        out.append(SubgroupVerdict(g, s, t, divides, gcd_ok, accepted, params.q // g if accepted else None))
    return out
