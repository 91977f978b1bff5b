"""Exact univariate polynomial algebra over Q.

Polynomials are dense, immutable and stored with ascending coefficients
(index = degree).  Two variable conventions coexist in the package:

* zeta numerators ``1 + a_1 t + ... + a_d t^d`` whose *inverse* roots are the
  Frobenius eigenvalues, and
* monic characteristic polynomials ``x^d + ...`` whose roots are the
  eigenvalues.

``Poly.reversal`` converts between the two; nothing converts implicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

ZERO_DEGREE = -1  # degree of the zero polynomial


class NonExactDivision(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""


class InconsistentPowerSums(ValueError):
    """Power sums that do not come from an integral polynomial."""


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, str):
        return Fraction(c)
    return Fraction(c)


def ord_p(x, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    x = _frac(x)
    if x == 0:
        raise ValueError("ord_p(0) is infinite")
    v = 0
    n, d = x.numerator, x.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


class Poly:
    """Immutable dense polynomial with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # constructors -----------------------------------------------------
    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def one(cls) -> "Poly":
        return cls([1])

    @classmethod
    def linear_factor(cls, alpha) -> "Poly":
        """``1 - alpha*t``: a single inverse root."""
        return cls([1, -_frac(alpha)])

    @classmethod
    def from_inverse_roots(cls, roots: Iterable) -> "Poly":
        out = cls.one()
        for r in roots:
            out = out * cls.linear_factor(r)
        return out

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        """Monic ``prod (x - r)``."""
        out = cls.one()
        for r in roots:
            out = out * cls([-_frac(r), 1])
        return out

    # basic protocol ---------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Poly(%s)" % ([str(c) for c in self.coeffs],)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("polynomial has non-integral coefficients")
        return [c.numerator for c in self.coeffs]

    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Poly.one(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[: len(other.coeffs) - 1])

    def __floordiv__(self, other):
        return self.divmod(_as_poly(other))[0]

    def __mod__(self, other):
        return self.divmod(_as_poly(other))[1]

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, complex) else 0j
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "Poly":
        return self * (1 / self.lead())

    def reversal(self, degree: int | None = None) -> "Poly":
        """``t^d p(1/t)`` with ``d`` defaulting to the degree."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        cs = list(self.coeffs) + [Fraction(0)] * (d + 1 - len(self.coeffs))
        return Poly(reversed(cs))

    def scale_var(self, c) -> "Poly":
        """``p(c*t)``."""
        c = _frac(c)
        out, pw = [], Fraction(1)
        for a in self.coeffs:
            out.append(a * pw)
            pw *= c
        return Poly(out)

    def normalized(self) -> "Poly":
        """Scale so the constant term is 1 (inverse-root form)."""
        c0 = self[0]
        if c0 == 0:
            raise ValueError("constant term is zero; no inverse-root form")
        return self * (1 / c0)


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly([x])
    raise TypeError("cannot coerce %r to Poly" % (x,))


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_divexact(a: Poly, b: Poly) -> Poly:
    """Quotient ``a / b``; raises ``NonExactDivision`` on a remainder."""
    q, r = a.divmod(b)
    if not r.is_zero():
        raise NonExactDivision("%r is not divisible by %r" % (a, b))
    return q


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q (zero only when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def root_multiplicity(a: Poly, r) -> int:
    """Largest ``k`` with ``(t - r)^k`` dividing ``a``."""
    if a.is_zero():
        raise ValueError("root multiplicity is undefined for the zero polynomial")
    r = _frac(r)
    k = 0
    lin = Poly([-r, 1])
    while a.degree >= 1 and a(r) == 0:
        a = poly_divexact(a, lin)
        k += 1
    return k


def inverse_root_multiplicity(a: Poly, alpha) -> int:
    """Multiplicity of the factor ``1 - alpha*t`` in ``a``."""
    alpha = _frac(alpha)
    if alpha == 0:
        raise ValueError("inverse root must be nonzero")
    return root_multiplicity(a, 1 / alpha)


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: ``f = c * prod a_i^i`` with squarefree coprime ``a_i``.

    Returns ``[(a_i, i)]`` for the non-constant ``a_i``, each monic.
    """
    if f.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    out = []
    df = f.derivative()
    a0 = poly_gcd(f, df)
    if a0.is_zero():
        return out
    b = poly_divexact(f, a0)
    c = poly_divexact(df, a0)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a.monic(), i))
        b = poly_divexact(b, a)
        c = poly_divexact(d, a)
        d = c - b.derivative()
        i += 1
    return out


def squarefree_common_multiplicities(f: Poly, g: Poly) -> list[tuple[Poly, int, int]]:
    """Group the common roots of ``f`` and ``g`` by their pair of multiplicities.

    Every entry ``(h, i, j)`` has ``h`` squarefree and monic; each root of
    ``h`` is a root of ``f`` of multiplicity exactly ``i`` and of ``g`` of
    multiplicity exactly ``j``.  No factorisation over Z is attempted.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("inputs must be nonzero polynomials")
    out = []
    for fi, i in squarefree_decomposition(f):
        for gj, j in squarefree_decomposition(g):
            h = poly_gcd(fi, gj)
            if h.degree > 0:
                out.append((h, i, j))
    out.sort(key=lambda e: (-e[1], e[2], e[0].coeffs))
    return out


# Newton identities -------------------------------------------------------

def power_sums(f: Poly, n: int) -> list[Fraction]:
    """``[p_1, ..., p_n]``: power sums of the inverse roots of ``f``.

    ``f`` is read in inverse-root form, ``f(0) * prod (1 - w t)``.
    """
    c = f.normalized()
    m = c.degree
    out: list[Fraction] = []
    for k in range(1, n + 1):
        s = -k * c[k] if k <= m else Fraction(0)
        for j in range(1, min(k - 1, m) + 1):
            s -= c[j] * out[k - j - 1]
        out.append(s)
    return out


def poly_from_power_sums(s: Sequence, degree: int) -> Poly:
    """Inverse-root polynomial of the given degree with power sums ``s``."""
    if len(s) < degree:
        raise ValueError("need %d power sums, got %d" % (degree, len(s)))
    c = [Fraction(1)]
    for k in range(1, degree + 1):
        acc = _frac(s[k - 1])
        for j in range(1, k):
            acc += c[j] * _frac(s[k - j - 1])
        c.append(-acc / k)
    return Poly(c)


def newton_coeffs_from_power_sums(s: Sequence[int], degree: int, q: int, weight: int = 1) -> Poly:
    """Integral inverse-root polynomial from its first half of power sums.

    The top half is completed with ``a_{d-i} = q^{w(d-2i)/2} a_i``, the
    functional equation of a weight-``w`` Weil polynomial of degree ``d``.
    """
    if degree < 0:
        raise ValueError("negative degree")
    if degree == 0:
        return Poly.one()
    half = (degree + 1) // 2
    if len(s) < half:
        raise ValueError("need %d power sums, got %d" % (half, len(s)))
    c = [Fraction(1)]
    for k in range(1, half + 1 if degree % 2 == 0 else half):
        acc = _frac(s[k - 1])
        for j in range(1, k):
            acc += c[j] * _frac(s[k - j - 1])
        ck = -acc / k
        if ck.denominator != 1:
            raise InconsistentPowerSums(
                "coefficient a_%d = %s is not an integer" % (k, ck))
        c.append(ck)
    top = [Fraction(0)] * (degree + 1)
    top[: len(c)] = c
    for i in range(len(c)):
        j = degree - i
        if j < len(c):
            continue
        e2 = weight * (degree - 2 * i)
        if e2 % 2:
            raise ValueError("functional equation needs an integral power of q")
        top[j] = c[i] * Fraction(q) ** (e2 // 2)
    return Poly(top)


# Root-set constructions ---------------------------------------------------

def _require_unit_constant(f: Poly, name: str):
    if f.is_zero() or f[0] != 1:
        raise ValueError("%s must be in inverse-root form 1 + c_1 t + ..." % name)


def tensor_roots(f: Poly, g: Poly) -> Poly:
    """Polynomial whose inverse roots are all products ``a*b``.

    Power sums are multiplicative under the product of root sets,
    ``p_k(ab) = p_k(a) p_k(b)``, so the result is rebuilt exactly from
    those via Newton's identities.
    """
    _require_unit_constant(f, "f")
    _require_unit_constant(g, "g")
    n = f.degree * g.degree
    if n == 0:
        return Poly.one()
    pf, pg = power_sums(f, n), power_sums(g, n)
    return poly_from_power_sums([a * b for a, b in zip(pf, pg)], n)


def _elementary_from_power_sums(p: Sequence[Fraction], k: int) -> Fraction:
    e = [Fraction(1)]
    for m in range(1, k + 1):
        acc = Fraction(0)
        for i in range(1, m + 1):
            term = e[m - i] * p[i - 1]
            acc += term if i % 2 else -term
        e.append(acc / m)
    return e[k]


def exterior_power(f: Poly, k: int) -> Poly:
    """Polynomial whose inverse roots are the k-fold products of distinct roots."""
    _require_unit_constant(f, "f")
    m = f.degree
    if not 0 <= k <= m:
        raise ValueError("exterior power index %d outside [0, %d]" % (k, m))
    if k == 0:
        return Poly.linear_factor(1)
    n = comb(m, k)
    pf = power_sums(f, k * n)
    sums = []
    for r in range(1, n + 1):
        sums.append(_elementary_from_power_sums([pf[j * r - 1] for j in range(1, k + 1)], k))
    return poly_from_power_sums(sums, n)


# Newton polygons -------------------------------------------------------------

@dataclass(frozen=True)
class NewtonPolygon:
    vertices: tuple[tuple[int, Fraction], ...]
    slopes: tuple[tuple[Fraction, int], ...]  # (slope, multiplicity), increasing

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.slopes)

    def slope_list(self) -> list[Fraction]:
        return [s for s, m in self.slopes for _ in range(m)]


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(f: Poly, p: int, f_exp: int = 1) -> NewtonPolygon:
    """Lower convex hull of ``(i, ord_p a_i)``; slopes in ``ord_q`` units.

    ``q = p^(2*f_exp)``; slopes are the ``ord_q`` of the inverse roots.
    """
    if f.is_zero():
        raise ValueError("Newton polygon of the zero polynomial")
    pts = [(i, Fraction(ord_p(c, p))) for i, c in enumerate(f.coeffs) if c != 0]
    hull: list[tuple[int, Fraction]] = []
    for pt in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    scale = 2 * f_exp
    merged: dict[Fraction, int] = {}
    for (i0, v0), (i1, v1) in zip(hull, hull[1:]):
        s = (v1 - v0) / (i1 - i0) / scale
        merged[s] = merged.get(s, 0) + (i1 - i0)
    return NewtonPolygon(tuple(hull), tuple(sorted(merged.items())))


# Rational functions -----------------------------------------------------------

class RationalFunction:
    """Reduced quotient of polynomials, normalised so ``den(0) = 1`` when possible."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        den = Poly.one() if den is None else den
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = Poly(), Poly.one()
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = poly_divexact(num, g), poly_divexact(den, g)
            c = den[0] if den[0] != 0 else den.lead()
            num, den = num * (1 / c), den * (1 / c)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return "RationalFunction(%r, %r)" % (self.num, self.den)

    def __mul__(self, other):
        if isinstance(other, Poly):
            other = RationalFunction(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if isinstance(other, Poly):
            other = RationalFunction(other)
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __pow__(self, k: int):
        if k >= 0:
            return RationalFunction(self.num ** k, self.den ** k)
        return RationalFunction(self.den ** -k, self.num ** -k)

    def scale_var(self, c) -> "RationalFunction":
        return RationalFunction(self.num.scale_var(c), self.den.scale_var(c))

    def order_at(self, r) -> int:
        """Order of vanishing at ``t = r`` (negative for a pole)."""
        if self.num.is_zero():
            raise ValueError("order of the zero function is infinite")
        return root_multiplicity(self.num, r) - root_multiplicity(self.den, r)

    def __call__(self, x) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("pole at t = %s" % (x,))
        return self.num(x) / d
