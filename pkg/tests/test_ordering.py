import itertools
import random
import time
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from frobdessin import catalog as cat
from frobdessin.diffset import DifferenceSet, frobenius_orbits
from frobdessin.errors import BudgetExhausted, FNotDividingQ, NotFrobeniusFixed, OrbitShapeError
from frobdessin.ordering import (
    CompatibilityReport,
    OrderedDifferenceSet,
    find_compatible_ordering,
    is_frobenius_compatible,
    is_wada_compatible,
    units_mod,
)
from frobdessin.singer import space_params

from conftest import SPACES, singer

D5 = OrderedDifferenceSet.from_sequence(cat.D5_MOD31, 31)
D5_SORTED = OrderedDifferenceSet.from_sequence(cat.D5_MOD31_SORTED, 31)
D121 = OrderedDifferenceSet.from_sequence(cat.D5_MOD121, 121)


def brute_wada(order, ell):
    return all(gcd(order[i] - order[(i + 1) % len(order)], ell) == 1 for i in range(len(order)))


def brute_block_form(order, p, f, ell):
    """Any rotation equal to (a, p^j a, p^2j a, ...) for a unit j mod f."""
    q = len(order)
    k = q // f
    for r in range(q):
        rot = order[r:] + order[:r]
        for j in range(f):
            if f > 1 and gcd(j, f) != 1:
                continue
            mult = pow(p, j, ell)
            if all(rot[i + k] == mult * rot[i] % ell for i in range(q - k)):
                return True
    return False


def test_units():
    assert units_mod(1) == [0]
    assert units_mod(5) == [1, 2, 3, 4]
    assert units_mod(6) == [1, 5]


def test_canonical_rotation():
    O = D5.rotate(4)
    assert O == D5 and hash(O) == hash(D5)
    assert O.canonical()[0] == 1
    assert O.order != D5.order


def test_not_a_permutation():
    with pytest.raises(ValueError):
        OrderedDifferenceSet(D5.base, (1, 3, 15))


def test_wada_examples():
    assert is_wada_compatible(D5, 31).wada
    assert is_wada_compatible(D121, 121).wada
    order = list(cat.D4_MOD40)
    order.remove(25)
    order.insert(order.index(23) + 1, 25)
    rep = is_wada_compatible(order, 40)
    assert not rep.wada
    assert (23, 25, 2) in rep.offending


def test_frobenius_examples():
    rep = is_frobenius_compatible(D5, 2, 5)
    assert (rep.frobenius, rep.j, rep.k) == (True, 1, 3)
    assert is_frobenius_compatible(D5_SORTED, 2, 5).frobenius is False
    assert is_frobenius_compatible(D121, 3, 5).frobenius


def test_trivial_group_accepts_everything():
    rng = random.Random(0)
    order = list(cat.D5_MOD31)
    for _ in range(20):
        rng.shuffle(order)
        rep = is_frobenius_compatible(OrderedDifferenceSet.from_sequence(order, 31), 2, 1)
        assert rep.frobenius and rep.j == 0


def test_frobenius_errors():
    with pytest.raises(NotFrobeniusFixed):
        is_frobenius_compatible(D5.transform(1, -1), 2, 5)
    D4 = OrderedDifferenceSet.from_sequence(cat.D4_MOD40, 40)
    with pytest.raises(FNotDividingQ):
        is_frobenius_compatible(D4, 3, 4)
    with pytest.raises(OrbitShapeError):
        find_compatible_ordering(D4.base, 3, 4, require_frobenius=True)


@pytest.mark.parametrize("mpe", [(4, 2, 1), (2, 5, 1), (4, 3, 1)])
def test_search_finds_checked_ordering(mpe):
    P = space_params(*mpe)
    start = time.perf_counter()
    O = find_compatible_ordering(singer(mpe), P.p, P.f, require_frobenius=True)
    assert time.perf_counter() - start < 10
    assert O is not None
    assert is_wada_compatible(O, P.ell).wada
    assert is_frobenius_compatible(O, P.p, P.f).frobenius
    assert brute_wada(O.order, P.ell)
    assert brute_block_form(list(O.order), P.p, P.f, P.ell)


def test_search_reference_set_121():
    O = find_compatible_ordering(D121.base, 3, 5, require_frobenius=True)
    assert is_wada_compatible(O, 121).wada and is_frobenius_compatible(O, 3, 5).frobenius


def test_plain_search_prime_modulus_takes_first_permutation():
    O = find_compatible_ordering(D5.base, 2, 5)
    assert O.order == D5.base.elements


def test_search_deterministic():
    a = find_compatible_ordering(singer((4, 3, 1)), 3, 5, require_frobenius=True)
    b = find_compatible_ordering(singer((4, 3, 1)), 3, 5, require_frobenius=True)
    assert a.order == b.order


def test_budget():
    D = singer((4, 3, 1))
    with pytest.raises(BudgetExhausted):
        find_compatible_ordering(D, 3, 5, require_frobenius=True, budget=1)
    with pytest.raises(ValueError):
        find_compatible_ordering(D, 3, 5, budget=0)


def _small_sets():
    yield singer((2, 2, 1)), 2, 3
    yield singer((2, 3, 1)), 3, 3
    yield singer((3, 2, 1)), 2, 4
    yield singer((2, 2, 2)), 2, 6
    yield singer((2, 5, 1)), 5, 3
    # every difference is even, so no ordering qualifies
    yield DifferenceSet(6, (0, 2, 4), 0), 5, 1


@pytest.mark.parametrize("idx", range(6))
def test_plain_search_agrees_with_enumeration(idx):
    D, p, f = list(_small_sets())[idx]
    ell = D.modulus
    elems = list(D.elements)
    exists = any(brute_wada([elems[0], *rest], ell) for rest in itertools.permutations(elems[1:]))
    found = find_compatible_ordering(D, p, f)
    assert (found is not None) == exists
    if found is not None:
        assert brute_wada(found.order, ell)


def test_odd_size_even_modulus_has_no_wada_ordering():
    # 13 elements cannot alternate in parity around a cycle mod 40
    D4 = DifferenceSet.from_elements(cat.D4_MOD40, 40)
    assert find_compatible_ordering(D4, 3, 4) is None


def test_plain_search_exhausts_without_solution():
    # every difference of {0, 2, 4} mod 6 is even
    D = DifferenceSet(6, (0, 2, 4), 0)
    assert find_compatible_ordering(D, 5, 1) is None


@pytest.mark.parametrize("mpe", [(2, 2, 1), (2, 5, 1), (4, 2, 1)])
def test_frobenius_search_agrees_with_enumeration(mpe):
    P = space_params(*mpe)
    D = singer(mpe)
    orbits = frobenius_orbits(D, P.p, P.f).orbits
    exists = False
    # enumerate first blocks directly: one element per orbit, all orders
    for perm in itertools.permutations(range(len(orbits))):
        for reps in itertools.product(*(orbits[i] for i in perm)):
            for j in units_mod(P.f):
                mult = pow(P.p, j, P.ell)
                order, scale = [], 1
                for _ in range(P.f):
                    order += [scale * x % P.ell for x in reps]
                    scale = scale * mult % P.ell
                if brute_wada(order, P.ell):
                    exists = True
                    break
            if exists:
                break
        if exists:
            break
    assert (find_compatible_ordering(D, P.p, P.f, require_frobenius=True) is not None) == exists


def test_large_frobenius_search_finds_ordering():
    O = find_compatible_ordering(singer((6, 3, 1)), 3, 7, require_frobenius=True)
    assert is_wada_compatible(O, 1093).wada and is_frobenius_compatible(O, 3, 7).frobenius


@given(st.integers(0, 200), st.randoms(use_true_random=False))
@settings(max_examples=100, deadline=None)
def test_checkers_rotation_invariant(r, rnd):
    for O, p, f in ((D5, 2, 5), (D121, 3, 5), (D5_SORTED, 2, 5)):
        R = O.rotate(r)
        assert is_wada_compatible(R, O.modulus).wada == is_wada_compatible(O, O.modulus).wada
        assert is_frobenius_compatible(R, p, f).frobenius == is_frobenius_compatible(O, p, f).frobenius
    order = list(cat.D5_MOD121)
    rnd.shuffle(order)
    S = OrderedDifferenceSet.from_sequence(order, 121)
    assert is_wada_compatible(S.rotate(r), 121).wada == is_wada_compatible(S, 121).wada
    assert is_wada_compatible(S, 121).wada == brute_wada(order, 121)
    assert is_frobenius_compatible(S, 3, 5).frobenius == brute_block_form(order, 3, 5, 121)


def test_roundtrips():
    assert OrderedDifferenceSet.from_dict(D5.to_dict()).order == D5.order
    rep = is_wada_compatible(D5, 31).merge(is_frobenius_compatible(D5, 2, 5))
    assert CompatibilityReport.from_dict(rep.to_dict()) == rep
    assert rep.wada and rep.frobenius and rep.j == 1
