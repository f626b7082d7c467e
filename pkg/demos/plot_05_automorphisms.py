"""
Which vertex maps are automorphisms
===================================

Translations always are. Multiplication by p is one exactly when the
ordering has the Frobenius block form.
"""

from frobdessin import catalog as cat
from frobdessin import OrderedDifferenceSet, VertexMap, build_dessin, check_automorphism, frobenius_group_report

cases = {
    "D": cat.D5_MOD31,
    "D - 1": cat.D5_MOD31_SHIFTED,
    "sorted": cat.D5_MOD31_SORTED,
}
for name, seq in cases.items():
    d = build_dessin(OrderedDifferenceSet.from_sequence(seq, 31))
    sigma = check_automorphism(d, VertexMap.affine(2))
    gamma = check_automorphism(d, VertexMap.affine(1, 1))
    print(f"{name:7s} x->2x {sigma.is_automorphism!s:5s} ({sigma.reason})  x->x+1 {gamma.is_automorphism}")

# the whole cyclic group generated by x -> 2x on D
d = build_dessin(OrderedDifferenceSet.from_sequence(cat.D5_MOD31, 31))
r = frobenius_group_report(d, 2, 5)
print("fixed edges per power:", [p.fixed_edges for p in r.powers])
print("cell orbits:", list(r.cell_orbits), " cell shift:", r.cell_shift, " m:", r.m)
