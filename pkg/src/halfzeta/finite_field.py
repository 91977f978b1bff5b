"""Finite fields F_{p^k} in a single canonical representation.

An element is encoded by the integer ``sum c_i p^i`` of its coordinates
``c_i`` in the power basis of ``F_p[x]/(m)``, ``m`` the canonical modulus.
``FieldElement`` does arithmetic by polynomial reduction; ``FieldTables``
holds discrete-log tables for vectorised evaluation over a whole field.
Both routes exist on purpose and are cross-checked in the tests.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

DEFAULT_ENUM_BOUND = 10 ** 7


class EnumerationBoundExceeded(ValueError):
    pass


def enumeration_bound() -> int:
    raw = os.environ.get("HALFZETA_ENUM_BOUND")
    return int(raw) if raw else DEFAULT_ENUM_BOUND


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# polynomials over F_p as ascending int lists -------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    _trim(a)
    dm = len(m) - 1
    inv = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for j, b in enumerate(m):
            a[shift + j] = (a[shift + j] - c * b) % p
        _trim(a)
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base: list[int], e: int, m: Sequence[int], p: int) -> list[int]:
    out, b = [1], _pmod(base, m, p)
    while e:
        if e & 1:
            out = _pmod(_pmul(out, b, p), m, p)
        b = _pmod(_pmul(b, b, p), m, p)
        e >>= 1
    return out


def is_irreducible(m: Sequence[int], p: int) -> bool:
    """Ben-Or test for a monic polynomial over F_p (ascending coefficients)."""
    k = len(m) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    if m[0] % p == 0:
        return False
    xp = [0, 1]
    for _ in range(k // 2):
        xp = _ppowmod(xp, p, m, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(list(m), _trim(diff), p)) > 1:
            return False
    return True


def _digits(code: int, p: int, k: int) -> tuple[int, ...]:
    out = []
    for _ in range(k):
        code, r = divmod(code, p)
        out.append(r)
    return tuple(out)


def _encode(coords: Sequence[int], p: int) -> int:
    code = 0
    for c in reversed(coords):
        code = code * p + c
    return code


@dataclass(frozen=True)
class FieldDesc:
    p: int
    k: int
    modulus: tuple[int, ...]  # ascending, monic, length k + 1

    @property
    def order(self) -> int:
        return self.p ** self.k

    def __repr__(self):
        return "FieldDesc(p=%d, k=%d, modulus=%s)" % (self.p, self.k, list(self.modulus))

    def element(self, value) -> "FieldElement":
        """Element from a code, a coordinate sequence, or an existing element."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            if not 0 <= value < self.order:
                raise ValueError("code %d outside [0, %d)" % (value, self.order))
            return FieldElement(self, _digits(value, self.p, self.k))
        coords = [int(c) % self.p for c in value]
        if len(coords) > self.k:
            raise ValueError("coordinate vector longer than the extension degree")
        coords += [0] * (self.k - len(coords))
        return FieldElement(self, tuple(coords))

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.k)

    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.k - 1))

    def gen(self) -> "FieldElement":
        """The class of ``x`` (the power-basis generator, not necessarily primitive)."""
        return self.element([0, 1]) if self.k > 1 else self.element([-self.modulus[0]])


@lru_cache(maxsize=None)
def make_field(p: int, k: int) -> FieldDesc:
    """F_{p^k} with the smallest monic irreducible modulus of degree ``k``.

    Candidates ``x^k + sum c_i x^i`` are ordered by the integer
    ``sum c_i p^i``, i.e. lexicographically on ``(c_{k-1}, ..., c_0)``.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError("extension degree must be >= 1")
    if not is_prime(p):
        raise ValueError("%d is not prime" % p)
    for code in range(p ** k):
        m = list(_digits(code, p, k)) + [1]
        if is_irreducible(m, p):
            return FieldDesc(p, k, tuple(m))
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True)
class FieldElement:
    field: FieldDesc
    coords: tuple[int, ...]

    @property
    def code(self) -> int:
        return _encode(self.coords, self.field.p)

    def __repr__(self):
        return "FieldElement(%s in F_%d^%d)" % (list(self.coords), self.field.p, self.field.k)

    def _other(self, other) -> "FieldElement":
        if isinstance(other, int):
            return self.field.element([other])
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise ValueError("operands lie in different fields")
        return other

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = self._other(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coords))

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        other = self._other(other)
        f = self.field
        r = _pmod(_pmul(list(self.coords), list(other.coords), f.p), f.modulus, f.p)
        return f.element(r)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out, b = self.field.one(), self
        while e:
            if e & 1:
                out = out * b
            b = b * b
            e >>= 1
        return out

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        return self * self._other(other).inverse()

    def frobenius(self) -> "FieldElement":
        return self ** self.field.p

    def multiplicative_order(self) -> int:
        if self.is_zero():
            raise ValueError("zero has no multiplicative order")
        n = self.field.order - 1
        order = n
        for r in prime_factors(n):
            while order % r == 0 and (self ** (order // r)) == self.field.one():
                order //= r
        return order


def field_ops(a: FieldElement, b: FieldElement) -> dict[str, FieldElement]:
    """The arithmetic family on one pair: add, sub, mul, and (when b != 0) div."""
    out = {"add": a + b, "sub": a - b, "mul": a * b}
    if not b.is_zero():
        out["div"] = a / b
    return out


def enumerate_field(field: FieldDesc, bound: int | None = None) -> Iterator[FieldElement]:
    """All elements, in increasing code order."""
    bound = enumeration_bound() if bound is None else bound
    if field.order > bound:
        raise EnumerationBoundExceeded(
            "field of order %d exceeds enumeration bound %d" % (field.order, bound))
    for code in range(field.order):
        yield field.element(code)


@lru_cache(maxsize=None)
def primitive_element(field: FieldDesc) -> FieldElement:
    """Smallest-code generator of the multiplicative group."""
    n = field.order - 1
    rs = prime_factors(n)
    one = field.one()
    for code in range(1, field.order):
        g = field.element(code)
        if all(g ** (n // r) != one for r in rs):
            return g
    raise AssertionError("no primitive element")  # pragma: no cover


@lru_cache(maxsize=None)
def embedding_image(src: FieldDesc, dst: FieldDesc) -> FieldElement:
    """Image of the power-basis generator of ``src`` inside ``dst``.

    The smallest-code root of ``src.modulus`` among the elements of the
    unique subfield of order ``src.order``.
    """
    if src.p != dst.p:
        raise ValueError("fields of different characteristic")
    if dst.k % src.k:
        raise ValueError("F_%d^%d does not embed in F_%d^%d" % (src.p, src.k, dst.p, dst.k))
    tabs = field_tables(dst)
    step = (dst.order - 1) // (src.order - 1)
    codes = [0] + [int(tabs.exp[j * step]) for j in range(src.order - 1)]
    for code in sorted(codes):
        x = dst.element(code)
        acc = dst.zero()
        for c in reversed(src.modulus):
            acc = acc * x + c
        if acc.is_zero():
            return x
    raise AssertionError("modulus has no root in the extension")  # pragma: no cover


def embed(x: FieldElement, target: FieldDesc) -> FieldElement:
    """Ring embedding F_{p^a} -> F_{p^b} determined by ``embedding_image``."""
    if x.field == target:
        return x
    r = embedding_image(x.field, target)
    acc = target.zero()
    for c in reversed(x.coords):
        acc = acc * r + c
    return acc


# vectorised discrete-log arithmetic -------------------------------------------

class FieldTables:
    """Discrete-log representation of a whole field.

    An element is held as its log to the base ``primitive_element``; the
    value ``zero_log = q - 1`` stands for 0.  Addition goes through the
    Zech table ``zech[n] = log(1 + g^n)``.
    """

    def __init__(self, field: FieldDesc):
        bound = enumeration_bound()
        if field.order > bound:
            raise EnumerationBoundExceeded(
                "field of order %d exceeds enumeration bound %d" % (field.order, bound))
        self.field = field
        p, k, q = field.p, field.k, field.order
        self.q = q
        self.zero_log = q - 1
        g = primitive_element(field)
        self.generator = g
        # multiplication-by-g matrix acting on coordinate column vectors
        cols = [(g * field.element([0] * j + [1])).coords for j in range(k)]
        mul_g = np.array(cols, dtype=np.int64).T
        n = q - 1
        block = max(1, int(n ** 0.5))
        first = np.zeros((block, k), dtype=np.int64)
        v = np.zeros(k, dtype=np.int64)
        v[0] = 1
        for i in range(block):
            first[i] = v
            v = mul_g @ v % p
        jump = np.eye(k, dtype=np.int64)
        for _ in range(block):
            jump = mul_g @ jump % p
        chunks, cur = [], first
        total = 0
        while total < n:
            chunks.append(cur)
            total += block
            cur = cur @ jump.T % p
        coords = np.concatenate(chunks)[:n]
        weights = p ** np.arange(k, dtype=np.int64)
        self.exp = coords @ weights
        self.log = np.full(q, self.zero_log, dtype=np.int64)
        self.log[self.exp] = np.arange(n, dtype=np.int64)
        plus_one = self.exp - coords[:, 0] + (coords[:, 0] + 1) % p
        self.zech = self.log[plus_one]
        self.weights = weights

    # scalar helpers
    def log_of(self, x: FieldElement | int) -> int:
        code = x.code if isinstance(x, FieldElement) else x
        return int(self.log[code])

    def all_logs(self) -> np.ndarray:
        """Every element, as logs, in increasing code order."""
        return self.log.copy()

    def mul(self, a, b):
        z = self.zero_log
        out = (a + b) % (self.q - 1)
        return np.where((a == z) | (b == z), z, out)

    def pow(self, a, e: int):
        z = self.zero_log
        if e == 0:
            return np.zeros_like(a)
        return np.where(a == z, z, (a * e) % (self.q - 1))

    def add(self, a, b):
        z = self.zero_log
        n = self.q - 1
        d = (b - a) % n
        zz = self.zech[d]
        s = np.where(zz == z, z, (a + zz) % n)
        s = np.where(a == z, b, s)
        return np.where(b == z, a, s)

    def neg(self, a):
        if self.field.p == 2:
            return a
        z = self.zero_log
        return np.where(a == z, z, (a + (self.q - 1) // 2) % (self.q - 1))

    def codes(self, a):
        z = self.zero_log
        return np.where(a == z, 0, self.exp[np.where(a == z, 0, a)])

    def quadratic_character(self, a):
        """Legendre symbol on logs: 0 at zero, +1 on even logs, -1 on odd."""
        if self.field.p == 2:
            raise ValueError("quadratic character needs odd characteristic")
        z = self.zero_log
        return np.where(a == z, 0, np.where(a % 2 == 0, 1, -1))

    def absolute_trace(self, a):
        """Trace to the prime field, on logs."""
        f = self.field
        basis = []
        for i in range(f.k):
            x = f.element([0] * i + [1])
            t, y = f.zero(), x
            for _ in range(f.k):
                t = t + y
                y = y ** f.p
            basis.append(t.coords[0])
        codes = self.codes(a)
        tr = np.zeros_like(codes)
        for i in range(f.k):
            tr = tr + ((codes // f.p ** i) % f.p) * basis[i]
        return tr % f.p


@lru_cache(maxsize=16)
def field_tables(field: FieldDesc) -> FieldTables:
    return FieldTables(field)


def poly_eval_logs(tabs: FieldTables, coeff_logs: Sequence[int], x_logs: np.ndarray) -> np.ndarray:
    """Horner evaluation of a polynomial (coefficients as logs) at many points."""
    z = tabs.zero_log
    acc = np.full(x_logs.shape, z, dtype=np.int64)
    for c in reversed(coeff_logs):
        acc = tabs.add(tabs.mul(acc, x_logs), np.full(x_logs.shape, c, dtype=np.int64))
    return acc


# polynomials over F_q as lists of FieldElement ----------------------------------

def fq_trim(a: list[FieldElement]) -> list[FieldElement]:
    a = list(a)
    while a and a[-1].is_zero():
        a.pop()
    return a


def fq_derivative(a: Sequence[FieldElement]) -> list[FieldElement]:
    return fq_trim([c * i for i, c in enumerate(a)][1:])


def fq_mod(a: Sequence[FieldElement], m: Sequence[FieldElement]) -> list[FieldElement]:
    a, m = fq_trim(a), fq_trim(m)
    if not m:
        raise ZeroDivisionError("polynomial modulus is zero")
    inv = m[-1].inverse()
    while len(a) >= len(m):
        c = a[-1] * inv
        shift = len(a) - len(m)
        for j, b in enumerate(m):
            a[shift + j] = a[shift + j] - c * b
        a = fq_trim(a)
    return a


def fq_gcd(a: Sequence[FieldElement], b: Sequence[FieldElement]) -> list[FieldElement]:
    a, b = fq_trim(a), fq_trim(b)
    while b:
        a, b = b, fq_mod(a, b)
    if a:
        inv = a[-1].inverse()
        a = [c * inv for c in a]
    return a
