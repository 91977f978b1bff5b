"""Slope profiles, ordinarity, and the p-adic size of q^chi / c_X^2."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import newton_polygon, ord_p
from .special_values import c_of, stripped_polys
from .zeta import ZetaFunction


@dataclass(frozen=True)
class SlopeProfile:
    slopes: tuple[tuple[tuple[Fraction, int], ...], ...]  # per i: ((slope, mult), ...)
    g: tuple[int, ...]

    @property
    def g_sum(self) -> int:
        return sum((-1) ** i * gi for i, gi in enumerate(self.g))

    def weight_one(self) -> list[Fraction]:
        return [s for s, m in self.slopes[1] for _ in range(m)] if len(self.slopes) > 1 else []

    def to_json(self) -> dict:
        return {
            "slopes": [[["%d/%d" % (s.numerator, s.denominator), m] for s, m in row] for row in self.slopes],
            "g": list(self.g),
        }


def _g(slopes) -> int:
    total = sum(((1 - s) * m for s, m in slopes if s < 1), Fraction(0))
    if total.denominator != 1:
        raise ArithmeticError("non-integral g_i = %s" % total)
    return int(total)


def slope_profile(z: ZetaFunction) -> SlopeProfile:
    rows, gs = [], []
    for P in z.polys:
        slopes = newton_polygon(P, z.p, z.f).slopes if P.degree > 0 else ()
        rows.append(tuple(slopes))
        gs.append(_g(slopes))
    return SlopeProfile(tuple(rows), tuple(gs))


def is_ordinary(z: ZetaFunction) -> bool:
    if z.dim == 0:
        return True
    return all(s in (0, 1) for s in slope_profile(z).weight_one())


@dataclass(frozen=True)
class PadicReport:
    ord_c2: int
    z_direct: int
    z_slopes: int
    z_slopes_literal: int
    g_sum: int
    chi: int
    b_assumption_flag: bool
    unit_checks: tuple[dict, ...]

    @property
    def equal(self) -> bool:
        return self.z_direct == self.z_slopes

    def to_json(self) -> dict:
        return {
            "ord_c2": self.ord_c2,
            "z_direct": self.z_direct,
            "z_slopes": self.z_slopes,
            "z_slopes_literal": self.z_slopes_literal,
            "g_sum": self.g_sum,
            "chi": self.chi,
            "equal": self.equal,
            "b_assumption_flag": self.b_assumption_flag,
            "unit_checks": list(self.unit_checks),
        }


def _unit_check(P, p: int, f: int, value: Fraction) -> dict:
    """Valuation of P~(p^-f) against what its slopes force.

    Inverse roots of slope lambda < 1/2 contribute (2 lambda - 1) f; slopes
    above 1/2 give units.  Slope exactly 1/2 only bounds the valuation below.
    """
    actual = ord_p(value, p)
    if P.degree <= 0:
        return {"actual": actual, "predicted": 0, "ok": actual == 0}
    slopes = newton_polygon(P, p, f).slopes
    predicted = sum(((2 * s - 1) * f * m for s, m in slopes if s < Fraction(1, 2)), Fraction(0))
    has_half = any(s == Fraction(1, 2) for s, _ in slopes)
    ok = actual >= predicted if has_half else actual == predicted
    return {"actual": actual, "predicted": int(predicted), "ok": bool(ok)}


def padic_value_check(z: ZetaFunction, *, chi_shift: int = 0) -> PadicReport:
    """Exponent e with z = p^e computed two ways.

    direct:  z = |q^chi / c^2|_p.
    slopes:  z = |q^(sum (-1)^i g_i)|_p * |prod_i P~_i(p^-f)^((-1)^i)|_p^2.
    The literal variant squares the q-power as well; it is reported as a
    diagnostic only.  ``chi_shift`` misstates chi (soundness probes).
    """
    chi = (1 - z.genus if z.dim == 1 else 1) + chi_shift
    c = c_of(z)
    ord_c2 = 2 * ord_p(c, z.p)
    z_direct = -(2 * z.f * chi - ord_c2)
    prof = slope_profile(z)
    t = Fraction(1, z.sqrt_q)
    prod_ord, units = 0, []
    for i, P in enumerate(stripped_polys(z)):
        v = P(t)
        units.append(_unit_check(P, z.p, z.f, v))
        prod_ord += (-1) ** i * ord_p(v, z.p)
    q_ord = 2 * z.f * prof.g_sum
    z_slopes = -(q_ord + 2 * prod_ord)
    z_literal = -2 * (q_ord + prod_ord)
    return PadicReport(ord_c2, z_direct, z_slopes, z_literal, prof.g_sum, chi, True, tuple(units))
