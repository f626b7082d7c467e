"""Parameters of P^m(F_n) and Singer difference sets from the trace form."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import gcd

import numpy as np
from sympy import isprime

from .diffset import DifferenceSet, is_frobenius_fixed, verify_difference_set
from .errors import DessinError, InvalidParameters
from .gf import DEFAULT_MAX_ELEMENTS, FieldCtx, build_field

__all__ = ["SpaceParams", "space_params", "generate_singer_set"]


@dataclass(frozen=True)
class SpaceParams:
    """Counting data for one projective space P^m(F_n), n = p^e.

    ``ell`` points (and hyperplanes), ``q`` points per hyperplane, ``lam`` the
    difference-set multiplicity and ``f = e(m+1)`` the order of the Frobenius
    group acting on indices by multiplication with ``p``.
    """

    m: int
    p: int
    e: int
    n: int
    ell: int
    q: int
    lam: int
    f: int

    @property
    def label(self) -> str:
        return f"P^{self.m}(F_{self.n})"

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> SpaceParams:
        return cls(**{k: int(data[k]) for k in ("m", "p", "e", "n", "ell", "q", "lam", "f")})


def space_params(m: int, p: int, e: int = 1) -> SpaceParams:
    if not isprime(p):
        raise InvalidParameters(f"{p} is not prime")
    if m < 2:
        raise InvalidParameters(f"projective dimension must be >= 2, got {m}")
    if e < 1:
        raise InvalidParameters(f"exponent must be >= 1, got {e}")
    n = p**e
    ell, r = divmod(n ** (m + 1) - 1, n - 1)
    assert r == 0
    q, r = divmod(n**m - 1, n - 1)
    assert r == 0
    lam, r = divmod(q * (q - 1), ell - 1)
    assert r == 0, "point-hyperplane counting identity failed"
    assert gcd(ell, p) == 1
    return SpaceParams(m=m, p=p, e=e, n=n, ell=ell, q=q, lam=lam, f=e * (m + 1))


def generate_singer_set(
    params: SpaceParams,
    ctx: FieldCtx | None = None,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> DifferenceSet:
    """Indices of the points on the trace-zero hyperplane.

    ``D = {b mod ell : Tr(g**b) = 0}`` with the trace taken from
    GF(n^(m+1)) down to GF(n). Because ``g**ell`` lies in GF(n)* and the
    trace is GF(n)-linear, scanning ``0 <= b < ell`` already sees every
    coset once.

    The result is verified as an ``(ell, q, lam)`` difference set and as
    closed under multiplication by ``p``; a failure there is an internal bug
    and raises :class:`~frobdessin.errors.DessinError`.
    """
    if ctx is None:
        ctx = build_field(params.p, params.e * (params.m + 1), max_elements=max_elements)
    elif (ctx.p, ctx.d) != (params.p, params.e * (params.m + 1)):
        raise InvalidParameters("field context does not match the space")

    traces = ctx.trace_of_powers(np.arange(params.ell), params.e)
    elements = np.flatnonzero(~traces.any(axis=1))
    if elements.size != params.q:
        raise DessinError(f"trace-zero hyperplane has {elements.size} points, expected {params.q}")
    lam = verify_difference_set(elements, params.ell)
    if lam != params.lam:
        raise DessinError(f"generated set has lambda={lam}, expected {params.lam}")
    D = DifferenceSet(params.ell, tuple(int(x) for x in elements), lam)
    if not is_frobenius_fixed(D, params.p):
        raise DessinError("trace-zero set is not fixed by the Frobenius multiplier")
    return D
