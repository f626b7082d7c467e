"""Exact arithmetic in GF(p^d) with a pinned primitive element.

Elements are dense coefficient vectors in the power basis of a monic
irreducible modulus. Every field carries a complete discrete-log table over
its primitive element ``g``, computed in a single pass over the powers of
``g``. Elements are also addressed by an integer *index*
``sum(c_i * p**i)``, which is how the numpy tables are keyed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from sympy import factorint, isprime

from .errors import FieldTooLarge, InvalidParameters

DEFAULT_MAX_ELEMENTS = 1 << 26

__all__ = [
    "DEFAULT_MAX_ELEMENTS",
    "FieldCtx",
    "FieldElement",
    "build_field",
    "is_irreducible",
]


# polynomial helpers; coefficient lists run from low to high degree


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = [x % p for x in a]
    b = _trim([x % p for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            c = c * inv % p
            for j in range(db + 1):
                a[k - db + j] = (a[k - db + j] - c * b[j]) % p
    return _trim(a[:db])


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    while b:
        a, b = b, _poly_rem(a, b, p)
    return a


def _mulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> list[int]:
    d = len(modulus) - 1
    prod = [0] * (2 * d - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
    # modulus is monic: x^d = -(m_0 + ... + m_{d-1} x^{d-1})
    for k in range(2 * d - 2, d - 1, -1):
        c = prod[k] % p
        if c:
            for j in range(d):
                prod[k - d + j] -= c * modulus[j]
    return [x % p for x in prod[:d]]


def _powmod(a: Sequence[int], k: int, modulus: Sequence[int], p: int) -> list[int]:
    d = len(modulus) - 1
    result = [1] + [0] * (d - 1)
    base = list(a)
    while k:
        if k & 1:
            result = _mulmod(result, base, modulus, p)
        k >>= 1
        if k:
            base = _mulmod(base, base, modulus, p)
    return result


def _x_mod(modulus: Sequence[int], p: int) -> list[int]:
    """The residue class of ``x`` as a length-d vector."""
    d = len(modulus) - 1
    if d == 1:
        return [(-modulus[0]) % p]
    return [0, 1] + [0] * (d - 2)


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    d = len(modulus) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    if modulus[0] % p == 0:
        return False
    x = _x_mod(modulus, p)
    if _powmod(x, p**d, modulus, p) != x:
        return False
    for r in factorint(d):
        h = _powmod(x, p ** (d // r), modulus, p)
        h[1] = (h[1] - 1) % p
        if len(_poly_gcd(h, modulus, p)) != 1:
            return False
    return True


def _has_order(a: Sequence[int], order: int, modulus: Sequence[int], p: int) -> bool:
    """True iff ``a`` (nonzero) has multiplicative order exactly ``order``."""
    if not any(a):
        return False
    one = [1] + [0] * (len(modulus) - 2)
    if _powmod(a, order, modulus, p) != one:
        return False
    return all(_powmod(a, order // r, modulus, p) != one for r in factorint(order))


def _digits(index: int, p: int, d: int) -> tuple[int, ...]:
    out = []
    for _ in range(d):
        index, c = divmod(index, p)
        out.append(c)
    return tuple(out)


@dataclass(frozen=True)
class FieldElement:
    """Coordinates of an element in the power basis of the field modulus."""

    coeffs: tuple[int, ...]

    def __bool__(self) -> bool:
        return any(self.coeffs)


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """Arithmetic context for GF(p^d).

    Attributes
    ----------
    p, d:
        Characteristic and extension degree.
    modulus:
        Monic irreducible modulus, coefficients from low to high degree
        (length ``d + 1``, last entry 1).
    g:
        The distinguished primitive element.
    exp_table:
        ``exp_table[k]`` is the index of ``g**k`` for ``0 <= k < p**d - 1``.
    log_table:
        ``log_table[index]`` is the discrete log of the element with that
        index; entry 0 (the zero element) holds -1.
    """

    p: int
    d: int
    modulus: tuple[int, ...]
    g: FieldElement
    exp_table: np.ndarray = field(repr=False)
    log_table: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        """Number of elements, ``p**d``."""
        return self.p**self.d

    @property
    def group_order(self) -> int:
        return self.p**self.d - 1

    @property
    def zero(self) -> FieldElement:
        return FieldElement((0,) * self.d)

    @property
    def one(self) -> FieldElement:
        return FieldElement((1,) + (0,) * (self.d - 1))

    def element(self, value: int | Iterable[int]) -> FieldElement:
        """Build an element from its integer index or a coefficient sequence."""
        if isinstance(value, (int, np.integer)):
            if not 0 <= value < self.order:
                raise ValueError(f"index {value} outside GF({self.p}^{self.d})")
            return FieldElement(_digits(int(value), self.p, self.d))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) != self.d:
            raise ValueError(f"expected {self.d} coefficients, got {len(coeffs)}")
        return FieldElement(coeffs)

    def index(self, a: FieldElement) -> int:
        out = 0
        for c in reversed(a.coeffs):
            out = out * self.p + c
        return out

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p = self.p
        return FieldElement(tuple((x + y) % p for x, y in zip(a.coeffs, b.coeffs)))

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p = self.p
        return FieldElement(tuple((x - y) % p for x, y in zip(a.coeffs, b.coeffs)))

    def neg(self, a: FieldElement) -> FieldElement:
        return FieldElement(tuple(-x % self.p for x in a.coeffs))

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return FieldElement(tuple(_mulmod(a.coeffs, b.coeffs, self.modulus, self.p)))

    def pow(self, a: FieldElement, k: int) -> FieldElement:
        """Square-and-multiply; negative exponents invert first."""
        if k < 0:
            a, k = self.inverse(a), -k
        return FieldElement(tuple(_powmod(a.coeffs, k, self.modulus, self.p)))

    def inverse(self, a: FieldElement) -> FieldElement:
        if not a:
            raise ZeroDivisionError("zero has no inverse")
        return self.exp((-self.log(a)) % self.group_order)

    def log(self, a: FieldElement) -> int:
        k = int(self.log_table[self.index(a)])
        if k < 0:
            raise ValueError("discrete log of zero")
        return k

    def exp(self, k: int) -> FieldElement:
        return self.element(int(self.exp_table[k % self.group_order]))

    def frobenius(self, a: FieldElement, u: int = 1) -> FieldElement:
        """``a ** (p ** u)``."""
        if not 0 <= u < self.d:
            raise ValueError(f"Frobenius power {u} outside [0, {self.d})")
        return self.pow(a, self.p**u)

    def trace(self, a: FieldElement, e: int) -> FieldElement:
        """Trace from GF(p^d) down to the subfield GF(p^e)."""
        if e < 1 or self.d % e:
            raise ValueError(f"{e} does not divide the degree {self.d}")
        total = self.zero
        term = a
        for i in range(self.d // e):
            total = self.add(total, term)
            if i + 1 < self.d // e:
                term = self.pow(term, self.p**e)
        return total

    trace_to_subfield = trace

    def decode(self, indices: np.ndarray) -> np.ndarray:
        """Coefficient rows (shape ``(len, d)``) for an array of indices."""
        powers = self.p ** np.arange(self.d, dtype=np.int64)
        return (np.asarray(indices, dtype=np.int64)[:, None] // powers) % self.p

    def trace_of_powers(self, exponents: np.ndarray, e: int) -> np.ndarray:
        """Coefficient rows of ``Tr(g**b)`` to GF(p^e) for every ``b`` given.

        Uses the exp table: the conjugates of ``g**b`` are ``g**(b * n**i)``.
        """
        if e < 1 or self.d % e:
            raise ValueError(f"{e} does not divide the degree {self.d}")
        n = self.p**e
        N = self.group_order
        b = np.asarray(exponents, dtype=np.int64) % N
        acc = np.zeros((b.size, self.d), dtype=np.int64)
        step = 1
        for _ in range(self.d // e):
            acc += self.decode(self.exp_table[(b * step) % N])
            step = step * n % N
        return acc % self.p


def _candidate_moduli(p: int, d: int):
    # tails ordered with the x^(d-1) coefficient most significant
    for tail in range(p**d):
        yield _digits(tail, p, d) + (1,)


def build_field(p: int, d: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> FieldCtx:
    """Construct GF(p^d) deterministically.

    The modulus is the lexicographically smallest monic irreducible of degree
    ``d`` in which ``x`` is primitive; ``g`` is then the class of ``x``. If no
    such modulus exists, the smallest irreducible is kept and the first
    primitive element in index order is used instead.
    """
    if not isinstance(p, (int, np.integer)) or not isprime(int(p)):
        raise InvalidParameters(f"{p} is not prime")
    if d < 1:
        raise InvalidParameters(f"extension degree must be >= 1, got {d}")
    p, d = int(p), int(d)
    if p**d > max_elements:
        raise FieldTooLarge(f"GF({p}^{d}) has {p**d} elements, limit is {max_elements}")

    N = p**d - 1
    modulus = g = None
    first_irreducible = None
    for cand in _candidate_moduli(p, d):
        if not is_irreducible(cand, p):
            continue
        if first_irreducible is None:
            first_irreducible = cand
        x = _x_mod(cand, p)
        if _has_order(x, N, cand, p):
            modulus, g = cand, tuple(x)
            break
    if modulus is None:  # pragma: no cover - primitive polynomials always exist
        modulus = first_irreducible
        for idx in range(1, p**d):
            a = _digits(idx, p, d)
            if _has_order(a, N, modulus, p):
                g = a
                break

    exp_table, log_table = _discrete_log_tables(p, d, modulus, g)
    return FieldCtx(p, d, tuple(modulus), FieldElement(tuple(g)), exp_table, log_table)


def _discrete_log_tables(p, d, modulus, g):
    N = p**d - 1
    dtype = np.int32 if p**d < 2**31 else np.int64
    exp_table = np.empty(N, dtype=dtype)
    log_table = np.full(p**d, -1, dtype=dtype)
    weights = [p**i for i in range(d)]
    shift = d > 1 and list(g) == _x_mod(modulus, p)

    cur = [1] + [0] * (d - 1)
    for k in range(N):
        idx = sum(c * w for c, w in zip(cur, weights))
        if log_table[idx] >= 0:
            raise AssertionError("generator is not primitive")
        exp_table[k] = idx
        log_table[idx] = k
        if shift:
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(c - top * m) % p for c, m in zip(cur, modulus)]
        else:
            cur = _mulmod(cur, g, modulus, p)
    if cur != [1] + [0] * (d - 1):
        raise AssertionError("powers of the generator did not close up")
    return exp_table, log_table
