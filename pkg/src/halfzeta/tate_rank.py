"""Tate's rank r(f_A, f_B), elliptic type classification, and rank bookkeeping."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .curves import CurveModel, InvalidCurve, count_points, hyperelliptic, validate_curve
from .exact_arith import Poly, squarefree_common_multiplicities
from .finite_field import embed, make_field
from .zeta import ZetaFunction


@dataclass(frozen=True)
class FrobCharPoly:
    """Monic characteristic polynomial of Frobenius on an abelian variety over F_q."""

    monic: Poly
    q: int

    def __post_init__(self):
        if self.monic.is_zero() or self.monic.lead() != 1:
            raise ValueError("Frobenius characteristic polynomial must be monic")
        if self.monic.degree % 2:
            raise ValueError("Frobenius characteristic polynomial must have even degree")

    @classmethod
    def of_zeta(cls, z: ZetaFunction) -> "FrobCharPoly":
        return cls(z.frobenius_charpoly(), z.q)

    @classmethod
    def of_E(cls, q: int, p: int, f: int) -> "FrobCharPoly":
        return cls(Poly([-(p ** f), 1]) ** 2, q)


def hom_rank(fA: FrobCharPoly, fB: FrobCharPoly) -> int:
    """rank Hom_{F_q}(A, B) = sum over common roots of the product of multiplicities."""
    if fA.q != fB.q:
        raise ValueError("Frobenius polynomials over different fields (q=%d, q=%d)" % (fA.q, fB.q))
    if fA.monic.degree == 0 or fB.monic.degree == 0:
        return 0
    return sum(h.degree * i * j for h, i, j in squarefree_common_multiplicities(fA.monic, fB.monic))


def verify_lemma_ord(z: ZetaFunction, *, e_poly: Poly | None = None) -> tuple[bool, dict]:
    """``rank Hom(E, Pic X)`` via gcds against ``2 * rho`` via synthetic division.

    ``e_poly`` replaces the characteristic polynomial of E; it exists for
    soundness probes only.
    """
    from .special_values import rho_of

    e = FrobCharPoly(e_poly, z.q) if e_poly is not None else FrobCharPoly.of_E(z.q, z.p, z.f)
    rank = hom_rank(e, FrobCharPoly.of_zeta(z))
    rho = rho_of(z)
    return rank == 2 * rho, {"hom_rank": rank, "two_rho": 2 * rho}


class SupersingularType(enum.Enum):
    ORDINARY = "ordinary"
    TYPE_A = "type_a"
    TYPE_B = "type_b"
    TYPE_C = "type_c"
    OTHER = "mixed/other"


def classify_elliptic(trace: int, p: int, f: int) -> SupersingularType:
    r = p ** f
    if abs(trace) > 2 * r:
        raise ValueError("trace %d violates the Weil bound |a| <= %d" % (trace, 2 * r))
    if trace == 2 * r:
        return SupersingularType.TYPE_C
    if trace == -2 * r:
        return SupersingularType.TYPE_B
    if trace == 0:
        return SupersingularType.TYPE_A
    if trace % p:
        return SupersingularType.ORDINARY
    return SupersingularType.OTHER


def elliptic_models(p: int, f: int) -> Iterator[CurveModel]:
    """Every Weierstrass model of the standard family over F_{p^(2f)}, canonical order.

    p >= 5: ``y^2 = x^3 + a x + b``; p = 3: ``y^2 = x^3 + a x^2 + b x + c``;
    p = 2: ``y^2 + a3 y = x^3 + a4 x + a6`` (a3 != 0) then
    ``y^2 + x y = x^3 + a2 x^2 + a6`` (a6 != 0); both families are smooth
    under those conditions.  Singular odd-p models are skipped.
    """
    Q = p ** (2 * f)
    if p >= 5:
        cands = (hyperelliptic(p, f, [b, a, 0, 1], 1) for a in range(Q) for b in range(Q))
    elif p == 3:
        cands = (hyperelliptic(p, f, [c, b, a, 1], 1)
                 for a in range(Q) for b in range(Q) for c in range(Q))
    else:
        fam1 = (hyperelliptic(p, f, [a6, a4, 0, 1], 1, [a3])
                for a3 in range(1, Q) for a4 in range(Q) for a6 in range(Q))
        fam2 = (hyperelliptic(p, f, [a6, 0, a2, 1], 1, [0, 1])
                for a2 in range(Q) for a6 in range(1, Q))
        cands = (c for fam in (fam1, fam2) for c in fam)
    for c in cands:
        try:
            yield validate_curve(c)
        except InvalidCurve:
            continue


def elliptic_trace(c: CurveModel) -> int:
    return c.q + 1 - count_points(c, 1)


def find_type_c_curve(p: int, f: int = 1) -> CurveModel:
    """First model over F_{p^2} (canonical order) with Frobenius eigenvalues (p, p),
    written over F_{p^(2f)}; its point count there is ``(p^f - 1)^2``."""
    for c in elliptic_models(p, 1):
        if elliptic_trace(c) == 2 * p:
            break
    else:
        raise LookupError("no type-(c) model found over F_%d" % (p * p))
    if f != 1:
        src, dst = make_field(p, 2), make_field(p, 2 * f)
        lift = lambda codes: [embed(src.element(v), dst).code for v in codes]
        c = hyperelliptic(p, f, lift(c.f_coeffs), 1, lift(c.h_coeffs))
    c = validate_curve(c)
    n1 = count_points(c, 1)
    if n1 != (p ** f - 1) ** 2:
        raise AssertionError("type-(c) model has %d points, expected %d" % (n1, (p ** f - 1) ** 2))
    return CurveModel(c.p, c.f, c.kind, 1, c.f_coeffs, c.h_coeffs, name="E")


def weil_etale_ranks(z: ZetaFunction, *, perturb: int = 0) -> tuple[list[int], dict]:
    """Predicted ranks of H^i_W(X, E): ``(2 rho, 2 rho, 0, ...)``, cross-checked.

    Returns the ranks for ``i = 0 .. 1 + 2 dim`` and a witness with both
    Euler characteristics and the ``hom_rank`` value.
    """
    from .special_values import rho_of

    rho = rho_of(z)
    ranks = [2 * rho, 2 * rho + perturb] + [0] * (2 * z.dim)
    alt = sum((-1) ** i * r for i, r in enumerate(ranks))
    secondary = sum((-1) ** i * i * r for i, r in enumerate(ranks))
    witness = {"ranks": ranks, "alternating": alt, "secondary": secondary, "two_rho": 2 * rho}
    if z.dim == 1:
        witness["hom_rank"] = hom_rank(FrobCharPoly.of_E(z.q, z.p, z.f), FrobCharPoly.of_zeta(z))
    ok = alt == 0 and secondary == -2 * rho and witness.get("hom_rank", 2 * rho) == ranks[0]
    if not ok:
        raise ValueError("inconsistent Weil-etale ranks: %s" % witness)
    return ranks, witness
