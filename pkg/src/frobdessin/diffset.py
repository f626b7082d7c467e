"""Cyclic difference sets: verification, equivalence and multiplier orbits."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator

import numpy as np

from .errors import NotADifferenceSet, NotFrobeniusFixed

__all__ = [
    "DifferenceSet",
    "OrbitDecomposition",
    "verify_difference_set",
    "difference_counts",
    "transform",
    "equivalent",
    "is_frobenius_fixed",
    "frobenius_orbits",
    "fixed_vertices",
    "frobenius_shift_family",
]

_CHUNK = 1 << 22


def difference_counts(elements: Iterable[int], v: int) -> np.ndarray:
    """Tally of ``d_i - d_j mod v`` over all ordered pairs ``i != j``.

    Index 0 of the result is always zero. Large sets are tallied in row
    blocks so memory stays bounded.
    """
    e = np.asarray(list(elements), dtype=np.int64) % v
    counts = np.zeros(v, dtype=np.int64)
    rows = max(1, _CHUNK // max(1, e.size))
    for start in range(0, e.size, rows):
        block = (e[start:start + rows, None] - e[None, :]) % v
        counts += np.bincount(block.ravel(), minlength=v)
    counts[0] -= e.size
    return counts


def verify_difference_set(elements: Iterable[int], v: int) -> int:
    """Return ``lambda`` if ``elements`` is a ``(v, k, lambda)`` difference set.

    Brute force: every one of the ``k(k-1)`` ordered differences is tallied
    and the counts over the ``v - 1`` nonzero residues must be uniform.
    Raises :class:`NotADifferenceSet` naming the first deviant residue.
    """
    if v < 2:
        raise ValueError(f"modulus must be >= 2, got {v}")
    elems = [int(x) for x in elements]
    if len(set(x % v for x in elems)) != len(elems):
        raise ValueError("elements are not distinct residues")
    k = len(elems)
    counts = difference_counts(elems, v)
    expected, rem = divmod(k * (k - 1), v - 1)
    target = expected if rem == 0 else None
    reference = expected if rem == 0 else int(counts[1])
    bad = np.flatnonzero(counts[1:] != reference)
    if bad.size:
        alpha = int(bad[0]) + 1
        raise NotADifferenceSet(alpha, int(counts[alpha]), target)
    return expected


@dataclass(frozen=True)
class DifferenceSet:
    """A cyclic difference set; ``elements`` are kept sorted ascending."""

    modulus: int
    elements: tuple[int, ...]
    lam: int

    def __post_init__(self):
        elems = tuple(sorted(int(x) % self.modulus for x in self.elements))
        if len(set(elems)) != len(elems):
            raise ValueError("elements are not distinct residues")
        object.__setattr__(self, "elements", elems)

    @classmethod
    def from_elements(cls, elements: Iterable[int], v: int) -> DifferenceSet:
        elems = [int(x) % v for x in elements]
        return cls(v, tuple(elems), verify_difference_set(elems, v))

    @property
    def k(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return isinstance(x, (int, np.integer)) and int(x) % self.modulus in self._set

    @property
    def _set(self) -> frozenset[int]:
        # cached on first use; frozen dataclass so go through object.__setattr__
        try:
            return self.__dict__["_cached_set"]
        except KeyError:
            s = frozenset(self.elements)
            object.__setattr__(self, "_cached_set", s)
            return s

    def shift(self, s: int) -> DifferenceSet:
        return transform(self, 1, s)

    def scale(self, t: int) -> DifferenceSet:
        return transform(self, t, 0)

    def to_dict(self) -> dict:
        return {"modulus": self.modulus, "elements": list(self.elements), "lambda": self.lam}

    @classmethod
    def from_dict(cls, data: dict) -> DifferenceSet:
        D = cls.from_elements(data["elements"], int(data["modulus"]))
        if "lambda" in data and int(data["lambda"]) != D.lam:
            raise ValueError(f"stated lambda {data['lambda']} does not match {D.lam}")
        return D


def transform(D: DifferenceSet, t: int, s: int) -> DifferenceSet:
    """``t*D + s mod v``; ``t`` must be a unit."""
    v = D.modulus
    if gcd(t, v) != 1:
        raise ValueError(f"{t} is not a unit modulo {v}")
    return DifferenceSet(v, tuple((t * d + s) % v for d in D.elements), D.lam)


def equivalent(D1: DifferenceSet, D2: DifferenceSet) -> tuple[int, int] | None:
    """A witness ``(t, s)`` with ``t*D1 + s == D2``, or ``None``.

    Scans every unit ``t`` in increasing order. For a given ``t`` only shifts
    sending some element of ``t*D1`` onto ``min(D2)`` can work, so those are
    the candidates tried; the smallest valid ``s`` is returned.
    """
    if D1.modulus != D2.modulus or len(D1) != len(D2):
        return None
    v = D1.modulus
    if not len(D1):
        return (1, 0)
    target = D2._set
    anchor = D2.elements[0]
    e1 = np.asarray(D1.elements, dtype=np.int64)
    for t in range(1, v):
        if gcd(t, v) != 1:
            continue
        scaled = (t * e1) % v
        for s in sorted({int((anchor - x) % v) for x in scaled}):
            if frozenset(((scaled + s) % v).tolist()) == target:
                return (t, s)
    return None


def is_frobenius_fixed(D: DifferenceSet, p: int) -> bool:
    v = D.modulus
    return all((p * d) % v in D._set for d in D.elements)


@dataclass(frozen=True)
class OrbitDecomposition:
    """Orbits of ``x -> multiplier * x mod modulus`` on a closed residue set.

    Orbits are sorted by their smallest element and each one is listed in
    orbit order starting from that element.
    """

    multiplier: int
    modulus: int
    orbits: tuple[tuple[int, ...], ...]
    f: int | None = None

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(o) for o in self.orbits)

    @property
    def consistent_with_f(self) -> bool:
        """Whether every orbit length divides the stated group order."""
        return self.f is None or all(self.f % n == 0 for n in self.lengths)

    def to_dict(self) -> dict:
        return {
            "multiplier": self.multiplier,
            "modulus": self.modulus,
            "f": self.f,
            "orbits": [list(o) for o in self.orbits],
        }

    @classmethod
    def from_dict(cls, data: dict) -> OrbitDecomposition:
        f = data.get("f")
        return cls(
            int(data["multiplier"]),
            int(data["modulus"]),
            tuple(tuple(int(x) for x in o) for o in data["orbits"]),
            None if f is None else int(f),
        )


def frobenius_orbits(D: DifferenceSet, p: int, f: int | None = None) -> OrbitDecomposition:
    """Split ``D`` into orbits of multiplication by ``p``.

    Raises :class:`NotFrobeniusFixed` (with the first offending element) if
    ``D`` is not closed under the map.
    """
    v = D.modulus
    if gcd(p, v) != 1:
        raise ValueError(f"multiplier {p} is not a unit modulo {v}")
    members = D._set
    for d in D.elements:
        if (p * d) % v not in members:
            raise NotFrobeniusFixed(d, (p * d) % v, p, v)
    seen: set[int] = set()
    orbits = []
    for d in D.elements:
        if d in seen:
            continue
        orbit = [d]
        x = (p * d) % v
        while x != d:
            orbit.append(x)
            x = (p * x) % v
        seen.update(orbit)
        orbits.append(tuple(orbit))
    return OrbitDecomposition(p, v, tuple(orbits), f)


def fixed_vertices(ell: int, p: int) -> tuple[int, ...]:
    """Residues ``w`` with ``p*w == w mod ell``; there are ``gcd(p-1, ell)``."""
    step = ell // gcd(p - 1, ell)
    return tuple(range(0, ell, step))


def frobenius_shift_family(D: DifferenceSet, p: int, f: int | None = None) -> list[DifferenceSet]:
    """All shifts ``D + s`` that stay fixed under ``p``, one per fixed vertex."""
    if not is_frobenius_fixed(D, p):
        frobenius_orbits(D, p, f)  # raises with a witness
    family = []
    for s in fixed_vertices(D.modulus, p):
        shifted = D.shift(s)
        if not is_frobenius_fixed(shifted, p):
            raise AssertionError(f"shift by fixed vertex {s} is not Frobenius-fixed")
        family.append(shifted)
    return family
