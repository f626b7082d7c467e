"""
Frobenius orbits and fixed shifts
=================================

Multiplication by p acts on the residues of a Frobenius difference set.
For P^3(F_3) the orbits have mixed lengths and two translates stay fixed.
"""

from frobdessin import catalog as cat
from frobdessin import DifferenceSet, NotFrobeniusFixed, fixed_vertices, frobenius_orbits
from frobdessin.diffset import frobenius_shift_family

D4 = DifferenceSet.from_elements(cat.D4_MOD40, 40)
for orbit in frobenius_orbits(D4, 3, 4).orbits:
    print("orbit", orbit)

# x -> 3x fixes exactly the residues 0 and 20 mod 40
print("fixed residues:", fixed_vertices(40, 3))
for S in frobenius_shift_family(D4, 3, 4):
    print("fixed translate:", S.elements)

# P^4(F_2): three orbits of length five, and a shifted copy breaks the symmetry
D5 = DifferenceSet.from_elements(cat.D5_MOD31, 31)
print([len(o) for o in frobenius_orbits(D5, 2, 5).orbits])
try:
    frobenius_orbits(D5.shift(-1), 2, 5)
except NotFrobeniusFixed as exc:
    print("D5 - 1:", exc)
