"""
Compatible orderings
====================

A cyclic ordering is Wada compatible when consecutive differences are
units mod ell. A Frobenius compatible ordering is built from one block of
orbit representatives followed by its images under x -> p^j x.
"""

from frobdessin import catalog as cat
from frobdessin import (
    OrderedDifferenceSet,
    find_compatible_ordering,
    generate_singer_set,
    is_frobenius_compatible,
    is_wada_compatible,
    space_params,
)

D = OrderedDifferenceSet.from_sequence(cat.D5_MOD31, 31)
print("block form:", is_frobenius_compatible(D, 2, 5).to_dict())
sorted_D = OrderedDifferenceSet.from_sequence(cat.D5_MOD31_SORTED, 31)
print("sorted:", is_frobenius_compatible(sorted_D, 2, 5).frobenius)

# ell = 121 is composite, so the search has something to avoid
P = space_params(4, 3)
O = find_compatible_ordering(generate_singer_set(P), P.p, P.f, require_frobenius=True)
print(P.label, O.order[:8], "...")
print("wada:", is_wada_compatible(O, P.ell).wada, " frobenius:", is_frobenius_compatible(O, P.p, P.f).frobenius)

# the largest row of the table is also quick once the search is block-restricted
P = space_params(10, 2)
O = find_compatible_ordering(generate_singer_set(P), P.p, P.f, require_frobenius=True)
print(P.label, "k =", P.q // P.f, "first block starts", O.order[:6])
