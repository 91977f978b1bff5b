"""Order of vanishing and special value of Z(X, t) at t = p^-f (s = 1/2)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import (
    Poly,
    RationalFunction,
    inverse_root_multiplicity,
    poly_divexact,
)
from .zeta import ZetaFunction, zeta_eval


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class SpecialValueReport:
    rho: int
    c: Fraction
    c_squared: Fraction
    chi_O: int
    E_order: int
    ordinary: bool
    sha_prediction: int | None = None

    def to_json(self) -> dict:
        out = {
            "rho": self.rho,
            "c": frac_str(self.c),
            "c2": frac_str(self.c_squared),
            "chi_O": self.chi_O,
            "E_order": self.E_order,
            "ordinary": self.ordinary,
        }
        if self.sha_prediction is not None:
            out["m"] = self.sha_prediction
            out["m2"] = self.sha_prediction ** 2
        return out


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return "%d/%d" % (x.numerator, x.denominator)


def _check_square(z: ZetaFunction):
    if z.f < 1:
        raise PreconditionError("q must be p^{2f}")


def E_order(p: int, f: int) -> int:
    """[E(F_q)] for the type-(c) curve: both eigenvalues are p^f."""
    return (p ** f - 1) ** 2


def multiplicities_at_half(z: ZetaFunction) -> list[int]:
    """Multiplicity of ``1 - p^f t`` in each ``P_i``."""
    return [inverse_root_multiplicity(P, z.sqrt_q) for P in z.polys]


def rho_of(z: ZetaFunction) -> int:
    """Order of the zero of Z(X, t) at t = p^-f."""
    _check_square(z)
    return sum(z.sign(i) * m for i, m in enumerate(multiplicities_at_half(z)))


def stripped_polys(z: ZetaFunction) -> list[Poly]:
    """Each ``P_i`` with every factor ``1 - p^f t`` divided out."""
    lin = Poly.linear_factor(z.sqrt_q)
    return [poly_divexact(P, lin ** m) for P, m in zip(z.polys, multiplicities_at_half(z))]


def c_of(z: ZetaFunction) -> Fraction:
    """lim_{t -> p^-f} (1 - p^f t)^(-rho) Z(X, t), exactly."""
    _check_square(z)
    t = Fraction(1, z.sqrt_q)
    out = Fraction(1)
    for i, P in enumerate(stripped_polys(z)):
        v = P(t)
        out = out * v if z.sign(i) > 0 else out / v
    return out


def c_squared_via_rational_function(z: ZetaFunction) -> Fraction:
    """Second route to c^2: reduce ``(1 - p^f t)^(-rho) Z`` as one fraction, then evaluate."""
    rho = rho_of(z)
    lin = RationalFunction(Poly.linear_factor(z.sqrt_q))
    h = z.as_rational_function() * (lin ** -rho)
    return h(Fraction(1, z.sqrt_q)) ** 2


def chi_O(z: ZetaFunction) -> int:
    return 1 - z.genus


def is_ordinary_curve(z: ZetaFunction) -> bool:
    from .padic import is_ordinary

    return is_ordinary(z)


def check_ordinary_elliptic(z: ZetaFunction, n1: int | None = None) -> tuple[bool, dict]:
    """|c_X| = |1 - [X(F_q)] / [E(F_q)]| for an ordinary elliptic curve."""
    if z.genus != 1:
        raise PreconditionError("ordinary elliptic identity needs genus 1")
    trace = -z.p1[1]
    if trace % z.p == 0:
        raise PreconditionError("curve is supersingular (p divides the trace)")
    if n1 is None:
        n1 = z.q + 1 - int(trace)
    c = c_of(z)
    rhs = 1 - Fraction(n1, E_order(z.p, z.f))
    return abs(c) == abs(rhs), {"c": frac_str(c), "rhs": frac_str(rhs), "N1": n1}


def sha_prediction(z: ZetaFunction) -> int:
    """m with [Ext^1(J, E)] = m^2, from c_X = +-p^((1-g)f) m / [E(F_q)]."""
    if not is_ordinary_curve(z):
        raise PreconditionError("Sha prediction needs an ordinary curve")
    m = abs(c_of(z)) * E_order(z.p, z.f) * Fraction(z.p) ** ((z.genus - 1) * z.f)
    if m.denominator != 1 or m <= 0:
        raise ArithmeticError("m = %s is not a positive integer" % m)
    return int(m)


def sha_oracle(z: ZetaFunction) -> int:
    """|f_J(p^f)| / p^(g f), from the monic Frobenius polynomial alone."""
    fJ = z.frobenius_charpoly()
    v = abs(fJ(z.sqrt_q)) / Fraction(z.sqrt_q) ** z.genus
    if v.denominator != 1:
        raise ArithmeticError("f_J(p^f) / p^(gf) = %s is not an integer" % v)
    return int(v)


def special_value_report(z: ZetaFunction) -> SpecialValueReport:
    rho = rho_of(z)
    c = c_of(z)
    if z.dim == 0:
        return SpecialValueReport(rho, c, c * c, 1, E_order(z.p, z.f), True)
    ordinary = is_ordinary_curve(z)
    m = sha_prediction(z) if ordinary else None
    return SpecialValueReport(rho, c, c * c, chi_O(z), E_order(z.p, z.f), ordinary, m)


def spec_fq_half_values(p: int, f: int) -> dict:
    """Values of zeta(Spec F_q, s) at s = +-1/2 for q = p^(2f)."""
    from .zeta import spec_fq_zeta

    z = spec_fq_zeta(p, f)
    r = p ** f
    at_half = zeta_eval(z, Fraction(1, r))
    at_minus_half = zeta_eval(z, Fraction(r))
    return {
        "q": z.q,
        "E_order": E_order(p, f),
        "zeta_half_sq": at_half ** 2,
        "zeta_minus_half_inv_sq": 1 / at_minus_half ** 2,
    }


def bsd_limit_check(z: ZetaFunction, *, e_motive=None) -> tuple[bool, dict]:
    """L(E/K, u) for the constant curve E over K = F_q(X) at u = 1/q.

    Checks (a) L(E/K, u) = Z(X, p^f u)^2, (b) its order at u = 1/q equals
    2 rho_X and the Tate rank of Hom(J, E), (c) the leading coefficient in
    ``(1 - q u)`` equals c_X^2.  ``e_motive`` overrides the coefficient
    motive of E (soundness probes).
    """
    from .motives import l_function, motive_of_zeta, sheaf_E, tensor
    from .tate_rank import FrobCharPoly, hom_rank

    coeff = sheaf_E(z.q) if e_motive is None else e_motive
    L = l_function(tensor(motive_of_zeta(z), coeff)).as_rational_function()
    direct = z.as_rational_function().scale_var(z.sqrt_q) ** 2
    same = L == direct
    u0 = Fraction(1, z.q)
    order = L.order_at(u0) if not L.num.is_zero() else None
    rho_x = rho_of(z)
    tate = hom_rank(FrobCharPoly.of_E(z.q, z.p, z.f), FrobCharPoly.of_zeta(z)) if z.dim == 1 else 2 * rho_x
    witness = {"L_equals_Z_sq": same, "order": order, "two_rho": 2 * rho_x, "hom_rank": tate}
    ok = same and order == 2 * rho_x == tate
    if order is not None and order >= 0:
        lin = RationalFunction(Poly.linear_factor(z.q))
        limit = (L * lin ** -order)(u0)
        c2 = c_of(z) ** 2
        witness["limit"] = frac_str(limit)
        witness["c2"] = frac_str(c2)
        ok = ok and limit == c2
    else:
        ok = False
    return ok, witness
