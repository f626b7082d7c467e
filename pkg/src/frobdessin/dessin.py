"""Oriented bipartite maps (dessins) built from ordered difference sets.

Darts
-----
There are ``2*q*ell`` darts. The white dart ``(w, i)`` is the end at
hyperplane ``w`` of the edge to point ``w + d_i``; the black dart ``(b, i)``
is the end at point ``b`` of the edge to hyperplane ``b - d_i``. Dart ids are
``(colour*ell + vertex)*q + i`` with white = 0, black = 1, so every white id
is smaller than every black id.

Orientation
-----------
The edge involution pairs white ``(w, i)`` with black ``(w + d_i, i)``.
Around black vertices the darts follow the ordering (``i -> i+1``); around
white vertices, read in the same global orientation, they follow it backwards
(``i -> i-1``). The face permutation is ``rotation o involution``, so a cell
entered along white ``(w, i)`` continues with black ``(w + d_i, i + 1)``,
then white ``(w + d_i - d_{i+1}, i)``, and so on: white indices advance by
``d_i - d_{i+1}`` per double step and the cell has ``2*ell/gcd(d_i - d_{i+1},
ell)`` darts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd, lcm

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .diffset import verify_difference_set
from .errors import SizeGuardError
from .ordering import OrderedDifferenceSet

DEFAULT_MAX_EDGES = 1_500_000

WHITE, BLACK = 0, 1

__all__ = [
    "DEFAULT_MAX_EDGES",
    "WHITE",
    "BLACK",
    "Cell",
    "Dessin",
    "SignatureTriple",
    "WadaVerdict",
    "build_dessin",
    "walk_cells",
    "is_wada",
    "signature_and_genus",
    "dessin_report",
]


def _orbit_min_labels(perm: np.ndarray, max_len: int) -> np.ndarray:
    """Smallest element of each cycle of ``perm``, by pointer doubling."""
    label = np.arange(perm.size, dtype=np.int64)
    jump = perm.copy()
    span = 1
    while span < max_len:
        label = np.minimum(label, label[jump])
        jump = jump[jump]
        span *= 2
    return label


def _ranks_from_label(perm: np.ndarray, label: np.ndarray, max_len: int) -> np.ndarray:
    """Steps from each cycle's smallest element forward to each element."""
    inverse = np.empty_like(perm)
    inverse[perm] = np.arange(perm.size, dtype=perm.dtype)
    at_root = label == np.arange(perm.size)
    nxt = np.where(at_root, np.arange(perm.size), inverse)
    dist = np.where(at_root, 0, 1).astype(np.int64)
    span = 1
    while span < max_len:
        dist = dist + dist[nxt]
        nxt = nxt[nxt]
        span *= 2
    return dist


@dataclass(frozen=True)
class Cell:
    """One face of the dessin.

    ``start`` is the smallest dart id on the boundary (always a white dart);
    ``position`` is the ordering index of its white darts and
    ``entering_pair`` the corresponding ``(d_i, d_{i+1})``.
    """

    index: int
    start: int
    position: int
    entering_pair: tuple[int, int]
    valency: int


@dataclass(frozen=True)
class SignatureTriple:
    white_lcm: int
    black_lcm: int
    half_face_lcm: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.white_lcm, self.black_lcm, self.half_face_lcm)


@dataclass(frozen=True)
class WadaVerdict:
    """``ok`` plus, on failure, a cell and the vertex that breaks the property.

    ``reason`` is ``"missing"`` when the cell boundary omits ``vertex`` and
    ``"repeated"`` when it meets ``vertex`` more than once.
    """

    ok: bool
    cell: int | None = None
    colour: int | None = None
    vertex: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


class Dessin:
    """Dart-based oriented map of the incidence graph of an ordered set.

    Built by :func:`build_dessin`; read-only afterwards. Cells are found on
    construction via pointer doubling on the face permutation; the ordered
    dart cycles are only materialised on demand.
    """

    def __init__(self, order: OrderedDifferenceSet):
        self.order = order
        self.ell = ell = order.modulus
        self.q = q = order.q
        d = np.asarray(order.order, dtype=np.int64)
        self.elements = d
        n_half = ell * q
        self.n_darts = 2 * n_half

        verts = np.repeat(np.arange(ell, dtype=np.int64), q)
        pos = np.tile(np.arange(q, dtype=np.int64), ell)
        self.dart_vertex = np.concatenate([verts, verts])
        self.dart_position = np.concatenate([pos, pos])
        self.dart_colour = np.repeat(np.array([WHITE, BLACK], dtype=np.int8), n_half)

        black_of_white = (verts + d[pos]) % ell
        involution = np.empty(self.n_darts, dtype=np.int64)
        involution[:n_half] = n_half + black_of_white * q + pos
        involution[n_half + black_of_white * q + pos] = np.arange(n_half)
        self.involution = involution

        rotation = np.empty(self.n_darts, dtype=np.int64)
        rotation[:n_half] = verts * q + (pos - 1) % q
        rotation[n_half:] = n_half + verts * q + (pos + 1) % q
        self.rotation = rotation

        self.face = rotation[involution]
        self.cell_label = _orbit_min_labels(self.face, 2 * ell)
        starts, self.dart_cell, sizes = np.unique(
            self.cell_label, return_inverse=True, return_counts=True
        )
        self.cell_starts = starts
        self.cell_sizes = sizes

    @property
    def n_vertices(self) -> int:
        return 2 * self.ell

    @property
    def n_edges(self) -> int:
        return self.q * self.ell

    @property
    def n_cells(self) -> int:
        return int(self.cell_starts.size)

    @property
    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_cells

    @property
    def genus(self) -> int:
        chi = self.euler_characteristic
        if chi % 2 or chi > 2:
            raise AssertionError(f"impossible Euler characteristic {chi}")
        return (2 - chi) // 2

    def dart_id(self, colour: int, vertex: int, position: int) -> int:
        return ((colour * self.ell + vertex % self.ell) * self.q + position % self.q)

    def dart(self, dart_id: int) -> tuple[int, int, int]:
        """``(colour, vertex, position)`` of a dart id."""
        cv, i = divmod(int(dart_id), self.q)
        colour, v = divmod(cv, self.ell)
        return colour, v, i

    @cached_property
    def cells(self) -> list[Cell]:
        out = []
        d = self.order.order
        for c, (start, size) in enumerate(zip(self.cell_starts.tolist(), self.cell_sizes.tolist())):
            i = start % self.q
            out.append(Cell(c, start, i, (d[i], d[(i + 1) % self.q]), size))
        return out

    @cached_property
    def _cycle_order(self) -> np.ndarray:
        rank = _ranks_from_label(self.face, self.cell_label, 2 * self.ell)
        return np.lexsort((rank, self.dart_cell))

    def cell_darts(self, c: int) -> np.ndarray:
        """Dart ids on the boundary of cell ``c`` in face-permutation order."""
        offsets = np.concatenate([[0], np.cumsum(self.cell_sizes)])
        return self._cycle_order[offsets[c]:offsets[c + 1]]

    def cell_cycles(self) -> list[np.ndarray]:
        offsets = np.concatenate([[0], np.cumsum(self.cell_sizes)])
        order = self._cycle_order
        return [order[offsets[c]:offsets[c + 1]] for c in range(self.n_cells)]

    def vertex_valencies(self, colour: int) -> np.ndarray:
        mask = self.dart_colour == colour
        return np.bincount(self.dart_vertex[mask], minlength=self.ell)

    def is_connected(self) -> bool:
        n_half = self.ell * self.q
        white = self.dart_vertex[:n_half]
        black = self.dart_vertex[self.involution[:n_half]] + self.ell
        graph = coo_matrix(
            (np.ones(n_half, dtype=np.int8), (white, black)),
            shape=(2 * self.ell, 2 * self.ell),
        )
        n, _ = connected_components(graph, directed=False)
        return n == 1

    def cells_around_white(self, w: int = 0) -> list[int]:
        """Cell index of each dart at white vertex ``w``, by position."""
        ids = (w % self.ell) * self.q + np.arange(self.q)
        return self.dart_cell[ids].tolist()


def build_dessin(
    order: OrderedDifferenceSet,
    ell: int | None = None,
    *,
    max_edges: int = DEFAULT_MAX_EDGES,
    force_large: bool = False,
) -> Dessin:
    """Build the dessin of an ordered ``(ell, q, lambda)`` difference set."""
    if ell is not None and ell != order.modulus:
        raise ValueError(f"ordering lives modulo {order.modulus}, not {ell}")
    if order.q < 2:
        raise ValueError("need at least two elements per vertex")
    verify_difference_set(order.order, order.modulus)
    if order.q * order.modulus > max_edges and not force_large:
        raise SizeGuardError(
            f"{order.q * order.modulus} edges exceeds the guard of {max_edges}; pass force_large"
        )
    return Dessin(order)


def walk_cells(d: Dessin) -> list[Cell]:
    return d.cells


def is_wada(d: Dessin) -> WadaVerdict:
    """Every cell must meet each white and each black index exactly once."""
    ell = d.ell
    short = np.flatnonzero(d.cell_sizes < 2 * ell)
    if short.size:
        # a cell with fewer than 2*ell darts cannot meet every index; name one
        c = int(short[0])
        mask = (d.dart_cell == c) & (d.dart_colour == WHITE)
        present = np.zeros(ell, dtype=bool)
        present[d.dart_vertex[mask]] = True
        return WadaVerdict(False, c, WHITE, int(np.flatnonzero(~present)[0]), "missing")
    for colour in (WHITE, BLACK):
        mask = d.dart_colour == colour
        keys = d.dart_cell[mask] * ell + d.dart_vertex[mask]
        counts = np.bincount(keys, minlength=d.n_cells * ell).reshape(d.n_cells, ell)
        bad = np.argwhere(counts != 1)
        if bad.size:
            c, v = (int(x) for x in bad[0])
            return WadaVerdict(False, c, colour, v, "missing" if counts[c, v] == 0 else "repeated")
    return WadaVerdict(True)


def signature_and_genus(d: Dessin) -> tuple[SignatureTriple, int]:
    white = lcm(*d.vertex_valencies(WHITE).tolist())
    black = lcm(*d.vertex_valencies(BLACK).tolist())
    face = lcm(*set(d.cell_sizes.tolist()))
    if face % 2:
        raise AssertionError("odd face valency")
    return SignatureTriple(white, black, face // 2), d.genus


def is_uniform(d: Dessin) -> bool:
    return (
        len(set(d.vertex_valencies(WHITE).tolist())) == 1
        and len(set(d.vertex_valencies(BLACK).tolist())) == 1
        and len(set(d.cell_sizes.tolist())) == 1
    )


def expected_valency(ell: int, a: int, b: int) -> int:
    """Closed-form valency of the cell entered along the pair ``(a, b)``."""
    return 2 * ell // gcd(a - b, ell)


def dessin_report(d: Dessin) -> dict:
    sig, genus = signature_and_genus(d)
    return {
        "l": d.ell,
        "q": d.q,
        "cells": [{"valency": c.valency, "entering_pair": list(c.entering_pair)} for c in d.cells],
        "signature": list(sig.as_tuple()),
        "genus": genus,
        "euler_characteristic": d.euler_characteristic,
        "uniform": is_uniform(d),
        "wada": is_wada(d).ok,
    }
