import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from frobdessin.errors import FieldTooLarge, InvalidParameters
from frobdessin.gf import build_field, is_irreducible

SMALL = [(2, 1), (2, 5), (3, 4), (5, 3), (2, 8), (7, 2), (3, 6)]


def naive_mul(a, b, modulus, p):
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    d = len(modulus) - 1
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k]
        if c:
            for j in range(d + 1):
                prod[k - d + j] = (prod[k - d + j] - c * modulus[j]) % p
    return tuple((prod + [0] * d)[:d])


def trial_division_irreducible(modulus, p):
    """Brute force: no monic factor of degree 1 .. d//2 divides the modulus."""
    d = len(modulus) - 1
    for k in range(1, d // 2 + 1):
        for low in itertools.product(range(p), repeat=k):
            f = list(low) + [1]
            a = list(modulus)
            for i in range(len(a) - 1, k - 1, -1):
                c = a[i]
                if c:
                    for j in range(k + 1):
                        a[i - k + j] = (a[i - k + j] - c * f[j]) % p
            if not any(a[:k]):
                return False
    return True


@pytest.fixture(scope="module", params=SMALL, ids=lambda s: "GF(%d^%d)" % s)
def ctx(request):
    return build_field(*request.param)


def test_prime_field_trivial_group():
    F = build_field(2, 1)
    assert F.order == 2 and F.group_order == 1
    assert F.g == F.one
    assert F.log(F.one) == 0


@pytest.mark.parametrize("p,d,n", [(2, 5, 31), (3, 4, 80)])
def test_generator_order_by_power_iteration(p, d, n):
    F = build_field(p, d)
    seen = []
    x = F.one
    while True:
        x = F.mul(x, F.g)
        seen.append(F.index(x))
        if x == F.one:
            break
    assert len(seen) == n == len(set(seen))


def test_modulus_irreducible_by_trial_division(ctx):
    assert trial_division_irreducible(ctx.modulus, ctx.p)


def test_rabin_agrees_with_trial_division():
    for p, d in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)]:
        for low in itertools.product(range(p), repeat=d):
            f = list(low) + [1]
            assert is_irreducible(f, p) == trial_division_irreducible(f, p), f


def test_modulus_is_lexicographically_first_with_primitive_x():
    F = build_field(2, 5)
    assert tuple(F.modulus) == (1, 0, 1, 0, 0, 1)
    assert F.g == F.element((0, 1, 0, 0, 0))


@pytest.mark.parametrize("p,d", [(2, 4), (2, 6), (3, 3), (5, 2)])
def test_modulus_choice_against_enumeration(p, d):
    F = build_field(p, d)
    for high_first in itertools.product(range(p), repeat=d):
        f = list(reversed(high_first)) + [1]
        if not trial_division_irreducible(f, p):
            continue
        # order of x by power iteration
        x, k = (0, 1) + (0,) * (d - 2), 1
        while x != (1,) + (0,) * (d - 1):
            x = naive_mul(x, (0, 1) + (0,) * (d - 2), f, p)
            k += 1
        if k == p ** d - 1:
            assert tuple(F.modulus) == tuple(f)
            return
    pytest.fail("no primitive modulus found")


def test_log_table_inverts_exp(ctx):
    for x in range(1, ctx.order):
        a = ctx.element(x)
        assert ctx.exp(ctx.log(a)) == a


def test_log_of_zero_raises(ctx):
    with pytest.raises(ValueError):
        ctx.log(ctx.zero)


def test_identities(ctx):
    rng = random.Random(1)
    for _ in range(50):
        a = ctx.element(rng.randrange(ctx.order))
        assert ctx.mul(a, ctx.one) == a
        assert ctx.add(a, ctx.zero) == a
        assert ctx.add(a, ctx.neg(a)) == ctx.zero


def test_lagrange(ctx):
    assert ctx.pow(ctx.g, ctx.order - 1) == ctx.one
    x = ctx.one
    for _ in range(ctx.order - 1):
        x = ctx.mul(x, ctx.g)
    assert x == ctx.one


def test_field_axioms_randomised(ctx):
    rng = random.Random(7)
    for _ in range(1000):
        a, b, c = (ctx.element(rng.randrange(ctx.order)) for _ in range(3))
        assert ctx.mul(a, b) == ctx.mul(b, a)
        assert ctx.add(a, b) == ctx.add(b, a)
        assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
        assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))


def test_mul_matches_naive_product(ctx):
    rng = random.Random(3)
    for _ in range(200):
        a, b = (ctx.element(rng.randrange(ctx.order)) for _ in range(2))
        assert ctx.mul(a, b).coeffs == naive_mul(a.coeffs, b.coeffs, ctx.modulus, ctx.p)


def test_inverse(ctx):
    for x in range(1, min(ctx.order, 300)):
        a = ctx.element(x)
        assert ctx.mul(a, ctx.inverse(a)) == ctx.one


def test_frobenius_identities(ctx):
    if ctx.d == 1:
        pytest.skip("prime field has only the identity")
    rng = random.Random(5)
    for _ in range(100):
        a = ctx.element(rng.randrange(ctx.order))
        assert ctx.frobenius(a, 0) == a
        assert ctx.frobenius(ctx.frobenius(a, 1), ctx.d - 1) == a
        assert ctx.frobenius(a, 1) == ctx.pow(a, ctx.p)


def test_frobenius_is_field_automorphism(ctx):
    rng = random.Random(11)
    for _ in range(300):
        a, b = (ctx.element(rng.randrange(ctx.order)) for _ in range(2))
        for u in range(ctx.d):
            s = lambda x: ctx.frobenius(x, u)
            assert s(ctx.add(a, b)) == ctx.add(s(a), s(b))
            assert s(ctx.mul(a, b)) == ctx.mul(s(a), s(b))


def test_frobenius_doubles_log_in_gf32():
    F = build_field(2, 5)
    assert F.frobenius(F.g, 1) == F.pow(F.g, 2)
    for k in range(31):
        assert F.log(F.frobenius(F.exp(k), 1)) == 2 * k % 31


def test_frobenius_power_out_of_range():
    F = build_field(2, 5)
    with pytest.raises(ValueError):
        F.frobenius(F.g, 5)


def test_trace_of_zero(ctx):
    assert ctx.trace(ctx.zero, 1) == ctx.zero


@pytest.mark.parametrize("p,d,e,zeros", [(2, 5, 1, 15), (3, 4, 1, 13)])
def test_trace_zero_count(p, d, e, zeros):
    F = build_field(p, d)
    n = p ** e
    ell = (F.order - 1) // (n - 1)
    # exhaustive: count nonzero elements with zero trace, then per coset of GF(n)*
    count = sum(1 for b in range(F.order - 1) if F.trace(F.exp(b), e) == F.zero)
    assert count == zeros * (n - 1)
    assert sum(1 for b in range(ell) if F.trace(F.exp(b), e) == F.zero) == zeros


@pytest.mark.parametrize("p,d,e", [(2, 4, 2), (2, 6, 2), (2, 6, 3), (3, 4, 2), (2, 12, 4), (2, 13, 1)])
def test_trace_is_subfield_linear_and_equivariant(p, d, e):
    F = build_field(p, d)
    n = p ** e
    sub = [F.zero] + [F.exp(k * (F.order - 1) // (n - 1)) for k in range(n - 1)]
    rng = random.Random(d)
    for x in range(F.order):
        a = F.element(x)
        t = F.trace(a, e)
        assert t in sub
        assert F.trace(F.frobenius(a, 1), e) == F.frobenius(t, 1)
        if x % 97 == 0:
            b = F.element(rng.randrange(F.order))
            c = sub[rng.randrange(n)]
            lhs = F.trace(F.add(F.mul(c, a), b), e)
            assert lhs == F.add(F.mul(c, t), F.trace(b, e))


def test_vectorised_trace_matches_scalar(ctx):
    if ctx.d == 1:
        return
    exps = np.arange(min(ctx.order - 1, 500))
    table = ctx.trace_of_powers(exps, 1)
    for b in exps[::7]:
        assert ctx.trace(ctx.exp(int(b)), 1).coeffs == tuple(int(x) for x in table[b])


def test_deterministic():
    a, b = build_field(3, 5), build_field(3, 5)
    assert a.modulus == b.modulus and a.g == b.g
    assert np.array_equal(a.exp_table, b.exp_table)


@given(st.integers(0, 242), st.integers(0, 242))
@settings(max_examples=200, deadline=None)
def test_index_roundtrip_and_addition(x, y):
    F = build_field(3, 5)
    a, b = F.element(x), F.element(y)
    assert F.index(a) == x
    assert F.sub(F.add(a, b), b) == a


@pytest.mark.parametrize("p,d", [(4, 2), (1, 3), (2, 0), (0, 1)])
def test_invalid(p, d):
    with pytest.raises(InvalidParameters):
        build_field(p, d)


def test_size_guard():
    with pytest.raises(FieldTooLarge):
        build_field(2, 30)
