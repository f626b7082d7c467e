"""
A field, its trace and a Singer difference set
==============================================

Points of P^4(F_2) are the nonzero elements of GF(2^5); a hyperplane is
the kernel of the trace. Numbering points by discrete logarithm turns the
hyperplane into 15 residues mod 31.
"""

import numpy as np

from frobdessin import build_field, generate_singer_set, space_params

F = build_field(2, 5)
print("modulus coefficients (low to high):", F.modulus)
print("primitive element g has index", F.index(F.g))

# powers of g in index form; the exp table is one pass over the group
print("g^0 .. g^9 ->", F.exp_table[:10].tolist())

# trace of every power of g, straight from the vectorised table
traces = F.trace_of_powers(np.arange(31), 1)[:, 0]
print("exponents with zero trace:", np.flatnonzero(traces == 0).tolist())

# the same set, verified as a (31, 15, 7) difference set
P = space_params(4, 2)
D = generate_singer_set(P, F)
print(P.label, "ell =", P.ell, "q =", P.q, "lambda =", D.lam)
print("D =", D.elements)

# multiplication by p permutes D: the trace commutes with Frobenius
print("2*D == D:", sorted(2 * x % 31 for x in D) == list(D.elements))
