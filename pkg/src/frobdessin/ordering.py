"""Cyclic orderings of difference sets: Wada and Frobenius compatibility.

An ordering fixes the local incidence pattern of the dessin built from a
difference set. *Wada compatible* means every cyclically consecutive
difference is prime to ``ell``; *Frobenius compatible* means the ordering
splits into ``f`` blocks of ``k = q/f`` elements with block ``h`` equal to
``p**(h*j)`` times the first block, for one ``j`` prime to ``f``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .diffset import DifferenceSet, frobenius_orbits, is_frobenius_fixed
from .errors import (
    BudgetExhausted,
    FNotDividingQ,
    NotFrobeniusFixed,
    OrbitShapeError,
)

DEFAULT_BUDGET = 10**7

__all__ = [
    "DEFAULT_BUDGET",
    "OrderedDifferenceSet",
    "CompatibilityReport",
    "is_wada_compatible",
    "is_frobenius_compatible",
    "find_compatible_ordering",
    "units_mod",
]


def units_mod(f: int) -> list[int]:
    """Representatives of (Z/fZ)^* in increasing order; ``[0]`` when f = 1."""
    if f == 1:
        return [0]
    return [j for j in range(1, f) if gcd(j, f) == 1]


@dataclass(frozen=True)
class OrderedDifferenceSet:
    """A difference set together with a cyclic ordering of its elements.

    ``order`` is stored as given. Two orderings that differ by a cyclic
    rotation compare equal; :meth:`canonical` rotates the smallest element
    to the front.
    """

    base: DifferenceSet
    order: tuple[int, ...]

    def __post_init__(self):
        order = tuple(int(x) % self.base.modulus for x in self.order)
        if sorted(order) != list(self.base.elements):
            raise ValueError("ordering is not a permutation of the difference set")
        object.__setattr__(self, "order", order)

    @classmethod
    def from_sequence(cls, seq: Iterable[int], v: int) -> OrderedDifferenceSet:
        seq = [int(x) % v for x in seq]
        return cls(DifferenceSet.from_elements(seq, v), tuple(seq))

    @property
    def modulus(self) -> int:
        return self.base.modulus

    @property
    def q(self) -> int:
        return len(self.order)

    def canonical(self) -> tuple[int, ...]:
        i = self.order.index(min(self.order))
        return self.order[i:] + self.order[:i]

    def rotate(self, r: int) -> OrderedDifferenceSet:
        r %= max(1, self.q)
        return OrderedDifferenceSet(self.base, self.order[r:] + self.order[:r])

    def transform(self, t: int, s: int) -> OrderedDifferenceSet:
        """Apply ``x -> t*x + s`` elementwise, keeping the ordering."""
        from .diffset import transform

        v = self.modulus
        return OrderedDifferenceSet(transform(self.base, t, s), tuple((t * x + s) % v for x in self.order))

    def __eq__(self, other):
        if not isinstance(other, OrderedDifferenceSet):
            return NotImplemented
        return self.modulus == other.modulus and self.canonical() == other.canonical()

    def __hash__(self):
        return hash((self.modulus, self.canonical()))

    def to_dict(self) -> dict:
        return {"modulus": self.modulus, "order": list(self.order)}

    @classmethod
    def from_dict(cls, data: dict) -> OrderedDifferenceSet:
        return cls.from_sequence(data["order"], int(data["modulus"]))


@dataclass(frozen=True)
class CompatibilityReport:
    """Outcome of the compatibility checks.

    ``offending`` lists ``(d_i, d_next, gcd)`` for consecutive pairs whose
    difference shares a factor with ``ell``. ``frobenius`` is ``None`` when
    that check was not run; ``j`` and ``k`` are set when it passed, with
    ``rotation`` the offset at which the block form starts.
    """

    wada: bool | None = None
    offending: tuple[tuple[int, int, int], ...] = ()
    frobenius: bool | None = None
    j: int | None = None
    k: int | None = None
    rotation: int | None = None

    def to_dict(self) -> dict:
        return {
            "wada": self.wada,
            "offending": [list(t) for t in self.offending],
            "frobenius": self.frobenius,
            "j": self.j,
            "k": self.k,
            "rotation": self.rotation,
        }

    @classmethod
    def from_dict(cls, data: dict) -> CompatibilityReport:
        return cls(
            wada=data.get("wada"),
            offending=tuple(tuple(int(x) for x in t) for t in data.get("offending", ())),
            frobenius=data.get("frobenius"),
            j=data.get("j"),
            k=data.get("k"),
            rotation=data.get("rotation"),
        )

    def merge(self, other: CompatibilityReport) -> CompatibilityReport:
        """Combine a Wada report with a Frobenius report."""
        wada = self if self.wada is not None else other
        frob = other if other.frobenius is not None else self
        return CompatibilityReport(wada.wada, wada.offending, frob.frobenius, frob.j, frob.k, frob.rotation)


def is_wada_compatible(O: OrderedDifferenceSet | Sequence[int], ell: int) -> CompatibilityReport:
    order = O.order if isinstance(O, OrderedDifferenceSet) else tuple(O)
    offending = []
    for i, a in enumerate(order):
        b = order[(i + 1) % len(order)]
        g = gcd(a - b, ell)
        if g != 1:
            offending.append((a, b, g))
    return CompatibilityReport(wada=not offending, offending=tuple(offending))


def is_frobenius_compatible(O: OrderedDifferenceSet, p: int, f: int) -> CompatibilityReport:
    """Look for a rotation of ``O`` in block form for some unit ``j`` mod ``f``.

    A valid rotation stays valid after rotating by a whole block, so only the
    first ``k`` offsets need testing.
    """
    v = O.modulus
    q = O.q
    if not is_frobenius_fixed(O.base, p):
        frobenius_orbits(O.base, p, f)  # raises NotFrobeniusFixed with a witness
        raise NotFrobeniusFixed(-1, -1, p, v)  # pragma: no cover
    if f < 1 or q % f:
        raise FNotDividingQ(f"group order {f} does not divide q = {q}")
    k = q // f
    order = O.order
    for r in range(max(1, k)):
        rot = order[r:] + order[:r]
        first = rot[:k]
        for j in units_mod(f):
            mult = pow(p, j, v)
            ok = True
            scale = 1
            for h in range(f):
                block = rot[h * k:(h + 1) * k]
                if any(block[i] != scale * first[i] % v for i in range(k)):
                    ok = False
                    break
                scale = scale * mult % v
            if ok:
                return CompatibilityReport(frobenius=True, j=j, k=k, rotation=r)
    return CompatibilityReport(frobenius=False, k=k)


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self):
        self.used += 1
        if self.used > self.limit:
            raise BudgetExhausted(self.limit)


def find_compatible_ordering(
    D: DifferenceSet,
    p: int,
    f: int,
    ell: int | None = None,
    *,
    require_frobenius: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> OrderedDifferenceSet | None:
    """Exact backtracking search for a Wada compatible cyclic ordering.

    With ``require_frobenius`` the search runs over Frobenius block orderings
    only: the first block takes one representative from each ``p``-orbit, and
    only the ``k - 1`` differences inside the block plus the closing
    difference ``d_k - p**j * d_1`` are checked. All other consecutive
    differences are ``p``-power multiples of those and ``gcd(p, ell) = 1``.
    The orbit of the smallest element leads with that element as its
    representative, which loses nothing up to cyclic rotation.

    Candidates are tried in ascending numeric order, so the returned ordering
    is deterministic. Returns ``None`` when the search space is exhausted
    without success and raises :class:`BudgetExhausted` when ``budget``
    nodes are spent first.
    """
    ell = D.modulus if ell is None else ell
    if budget < 1:
        raise ValueError("budget must be >= 1")
    counter = _Budget(budget)
    if require_frobenius:
        return _search_frobenius(D, p, f, ell, counter)
    return _search_plain(D, ell, counter)


def _search_plain(D: DifferenceSet, ell: int, counter: _Budget) -> OrderedDifferenceSet | None:
    elems = list(D.elements)
    q = len(elems)
    if q <= 1:
        return OrderedDifferenceSet(D, tuple(elems))
    first = elems[0]
    used = [False] * q
    used[0] = True
    path = [first]
    # stack of next candidate index to try at each depth
    cursor = [1]
    while cursor:
        depth = len(path)
        if depth == q:
            if gcd(path[-1] - first, ell) == 1:
                return OrderedDifferenceSet(D, tuple(path))
            cursor.pop()
            used[elems.index(path.pop())] = False
            continue
        start = cursor[-1]
        prev = path[-1]
        nxt = None
        for idx in range(start, q):
            if not used[idx] and gcd(elems[idx] - prev, ell) == 1:
                nxt = idx
                break
        if nxt is None:
            cursor.pop()
            if len(path) > 1:
                used[elems.index(path.pop())] = False
            else:
                path.pop()
            continue
        counter.tick()
        cursor[-1] = nxt + 1
        used[nxt] = True
        path.append(elems[nxt])
        cursor.append(1)
    return None


def _search_frobenius(D: DifferenceSet, p: int, f: int, ell: int, counter: _Budget) -> OrderedDifferenceSet | None:
    decomposition = frobenius_orbits(D, p, f)
    orbits = decomposition.orbits
    if any(len(o) != f for o in orbits):
        raise OrbitShapeError(
            f"orbit lengths {sorted(set(decomposition.lengths))} are not all equal to f = {f}"
        )
    k = len(orbits)
    units = units_mod(f)
    closing = [pow(p, j, ell) for j in units]
    choices = [sorted(o) for o in orbits[1:]]
    first = orbits[0][0]

    path = [first]
    used = [False] * len(choices)
    # each frame: (orbit index cursor, element cursor)
    frames: list[list[int]] = [[0, 0]]

    def finish(block: list[int]) -> OrderedDifferenceSet | None:
        for j, mult in zip(units, closing):
            if gcd(block[-1] - mult * block[0], ell) == 1:
                step = pow(p, j, ell)
                order = []
                scale = 1
                for _ in range(f):
                    order.extend(scale * d % ell for d in block)
                    scale = scale * step % ell
                return OrderedDifferenceSet(D, tuple(order))
        return None

    while frames:
        if len(path) == k:
            found = finish(path)
            if found is not None:
                return found
            frames.pop()
            _undo(path, used, choices)
            continue
        frame = frames[-1]
        prev = path[-1]
        placed = False
        while frame[0] < len(choices):
            oi = frame[0]
            if used[oi]:
                frame[0] += 1
                frame[1] = 0
                continue
            cands = choices[oi]
            while frame[1] < len(cands):
                x = cands[frame[1]]
                frame[1] += 1
                if gcd(x - prev, ell) == 1:
                    counter.tick()
                    used[oi] = True
                    path.append(x)
                    frames.append([0, 0])
                    placed = True
                    break
            if placed:
                break
            frame[0] += 1
            frame[1] = 0
        if not placed:
            frames.pop()
            if frames:
                _undo(path, used, choices)
    return None


def _undo(path: list[int], used: list[bool], choices: list[list[int]]) -> None:
    x = path.pop()
    for oi, cands in enumerate(choices):
        if used[oi] and x in cands:
            used[oi] = False
            return
