"""Zeta functions Z(X, t) = prod P_i(t)^((-1)^(i+1)) assembled from point counts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .curves import CurveModel, count_points
from .exact_arith import (
    InconsistentPowerSums,
    Poly,
    RationalFunction,
    newton_coeffs_from_power_sums,
    poly_divexact,
    poly_gcd,
    power_sums,
)

RH_TOLERANCE = 1e-9


class CertificationError(ValueError):
    """The assembled zeta function violates a Weil-conjecture constraint."""


def _square_root_exponent(p: int, q: int) -> int:
    e, n = 0, q
    while n % p == 0:
        n //= p
        e += 1
    if n != 1 or e % 2 or e == 0:
        raise ValueError("q must be p^{2f}")
    return e // 2


@dataclass(frozen=True)
class ZetaFunction:
    p: int
    f: int
    dim: int
    polys: tuple[Poly, ...]  # P_0, ..., P_{2 dim}
    genus: int = 0
    counts: tuple[tuple[int, int], ...] = ()

    @property
    def q(self) -> int:
        return self.p ** (2 * self.f)

    @property
    def sqrt_q(self) -> int:
        return self.p ** self.f

    @property
    def p1(self) -> Poly:
        return self.polys[1]

    def sign(self, i: int) -> int:
        return 1 if i % 2 else -1

    def as_rational_function(self) -> RationalFunction:
        num, den = Poly.one(), Poly.one()
        for i, P in enumerate(self.polys):
            if self.sign(i) > 0:
                num = num * P
            else:
                den = den * P
        return RationalFunction(num, den)

    def frobenius_charpoly(self) -> Poly:
        """Monic characteristic polynomial of Frobenius on the Jacobian."""
        return self.p1.reversal(2 * self.genus)

    def predicted_count(self, n: int) -> int:
        """``N_n`` from the inverse roots of every ``P_i``."""
        total = Fraction(0)
        for i, P in enumerate(self.polys):
            if P.degree > 0:
                total += (-1) ** i * power_sums(P, n)[-1]
        if total.denominator != 1:
            raise CertificationError("non-integral predicted count")
        return int(total)


def curve_zeta(p: int, f: int, p1: Poly, genus: int | None = None, counts=()) -> ZetaFunction:
    q = p ** (2 * f)
    g = p1.degree // 2 if genus is None else genus
    return ZetaFunction(p, f, 1, (Poly([1, -1]), p1, Poly([1, -q])), g, tuple(counts))


def spec_fq_zeta(p: int, f: int) -> ZetaFunction:
    """Z(Spec F_q, t) = 1/(1 - t)."""
    return ZetaFunction(p, f, 0, (Poly([1, -1]),), 0)


def p1_zeta(p: int, f: int) -> ZetaFunction:
    return curve_zeta(p, f, Poly.one(), 0)


@lru_cache(maxsize=4096)
def _cached_count(c: CurveModel, n: int) -> int:
    return count_points(c, n)


def point_counts(c: CurveModel, upto: int) -> dict[int, int]:
    return {n: _cached_count(c, n) for n in range(1, upto + 1)}


def zeta_from_counts(c: CurveModel, table: dict[int, int], *, certify: bool = True) -> ZetaFunction:
    """Zeta function of a curve from ``N_1..N_g`` via Newton's identities.

    With ``certify`` the table must also hold ``N_{g+1}``; the result is
    passed through ``certify_zeta`` before being returned.
    """
    g, q = c.genus, c.q
    need = g + 1 if certify else g
    missing = [n for n in range(1, need + 1) if n not in table]
    if missing:
        raise ValueError("point counts missing for n = %s" % missing)
    s = [q ** n + 1 - table[n] for n in range(1, g + 1)]
    try:
        p1 = newton_coeffs_from_power_sums(s, 2 * g, q, 1)
    except InconsistentPowerSums as exc:
        raise CertificationError("singular or genus-mismatched model: %s" % exc) from exc
    used = tuple(sorted((n, table[n]) for n in range(1, need + 1)))
    z = curve_zeta(c.p, c.f, p1, g, used)
    if certify:
        report = certify_zeta(z, table[g + 1])
        if not report["ok"]:
            raise CertificationError("singular or genus-mismatched model: %s" % report["failures"])
    return z


def zeta_of_curve(c: CurveModel, *, certify: bool = True) -> ZetaFunction:
    return zeta_from_counts(c, point_counts(c, c.genus + (1 if certify else 0)), certify=certify)


def functional_equation_holds(z: ZetaFunction) -> bool:
    P, g, q = z.p1, z.genus, z.q
    if P[0] != 1 or P.degree > 2 * g:
        return False
    return all(P[2 * g - i] == Fraction(q) ** (g - i) * P[i] for i in range(2 * g + 1))


def rh_moduli(P: Poly) -> list[float]:
    """Absolute values of the inverse roots (from the squarefree part, numerically)."""
    if P.degree <= 0:
        return []
    sq = poly_divexact(P, poly_gcd(P, P.derivative())) if P.degree > 1 else P
    monic = sq.normalized().reversal()  # roots are the inverse roots of P
    roots = np.roots([float(c) for c in reversed(monic.coeffs)])
    return [float(abs(r)) for r in roots]


def certify_zeta(z: ZetaFunction, extra_count: int | None) -> dict:
    """Functional equation, the next point count, and the RH modulus check."""
    failures = []
    fe = functional_equation_holds(z)
    if not fe:
        failures.append("functional equation")
    predicted = None
    if extra_count is not None:
        n = z.genus + 1
        predicted = z.predicted_count(n)
        if predicted != extra_count:
            failures.append("N_%d predicted %d, measured %d" % (n, predicted, extra_count))
    target = float(z.q) ** 0.5
    moduli = rh_moduli(z.p1)
    worst = max((abs(m - target) / target for m in moduli), default=0.0)
    if worst > RH_TOLERANCE:
        failures.append("RH modulus deviation %.3g" % worst)
    return {"ok": not failures, "failures": failures, "functional_equation": fe,
            "predicted_next": predicted, "measured_next": extra_count,
            "rh_max_rel_dev": worst}


def zeta_eval(z: ZetaFunction, t) -> Fraction:
    t = Fraction(t)
    out = Fraction(1)
    for i, P in enumerate(z.polys):
        v = P(t)
        if z.sign(i) > 0:
            out *= v
        else:
            if v == 0:
                raise ZeroDivisionError("zeta function has a pole at t = %s" % t)
            out /= v
    return out
