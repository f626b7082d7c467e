"""
Cells, signature and genus
==========================

Each white vertex w meets the black vertices w + d_i in the order of the
ordering. Tracing the faces gives cells of valency 2 ell / gcd(d_i - d_{i+1}, ell).
"""

from collections import Counter

from frobdessin import catalog as cat
from frobdessin import OrderedDifferenceSet, build_dessin, is_wada, signature_and_genus
from frobdessin.dessin import expected_valency
from frobdessin.export import to_svg

d = build_dessin(OrderedDifferenceSet.from_sequence(cat.D5_MOD31, 31))
sig, genus = signature_and_genus(d)
print("vertices", d.n_vertices, "edges", d.n_edges, "cells", d.n_cells)
print("signature", sig.as_tuple(), "chi", d.euler_characteristic, "genus", genus)
print("wada:", is_wada(d).ok)

# one cell boundary, as (colour, vertex) pairs
first = [d.dart(x)[:2] for x in d.cell_darts(0)[:8]]
print("cell 0 starts", first)

# an ordering with a shared factor produces a short cell and loses the property
order = list(cat.D4_MOD40)
order.remove(25)
order.insert(order.index(23) + 1, 25)
bad = build_dessin(OrderedDifferenceSet.from_sequence(order, 40))
print(Counter(c.valency for c in bad.cells))
print("formula for (23, 25):", expected_valency(40, 23, 25), " verdict:", is_wada(bad))

with open("dessin_P4F2.svg", "w") as fh:
    fh.write(to_svg(d))
