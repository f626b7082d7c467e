"""
The parameter table, row by row
===============================

For each space whose Frobenius group has prime order and acts freely on
edges: parameters, a compatible ordering, and the dessin when it is small
enough to build by default.
"""

import time

from frobdessin import catalog as cat
from frobdessin import (
    SizeGuardError,
    build_dessin,
    check_prime_case_conditions,
    find_compatible_ordering,
    frobenius_group_report,
    generate_singer_set,
    signature_and_genus,
    space_params,
    subgroup_feasibility,
)

for mpe in cat.PRIME_CASE_ROWS:
    P = space_params(*mpe)
    start = time.perf_counter()
    O = find_compatible_ordering(generate_singer_set(P), P.p, P.f, require_frobenius=True)
    line = f"{P.label:10s} q={P.q:5d} l={P.ell:6d} f={P.f:2d} nice={check_prime_case_conditions(P).nice}"
    try:
        d = build_dessin(O)
    except SizeGuardError:
        print(line, " dessin gated")
        continue
    sig, genus = signature_and_genus(d)
    orbits = frobenius_group_report(d, P.p, P.f).cell_orbits
    print(line, sig.as_tuple(), f"genus {genus}", f"{len(orbits)} cell orbits",
          f"{time.perf_counter() - start:.2f}s")

# subgroups of the Frobenius group when f is composite
for mpe in cat.SUBGROUP_EXAMPLES:
    P = space_params(*mpe)
    print(P.label, [(v.g, v.accepted, v.orbit_count) for v in subgroup_feasibility(P)])
