"""Graded Frobenius-eigenvalue data and their L-functions in u = q^-s.

A ``WeilMotive`` stores, for each key ``(degree, weight)``, a polynomial
with constant term 1 whose inverse roots are the Frobenius eigenvalues of
that weight.  The L-function is ``prod P_(d,w)(u) ** (-1) ** (d + 1)``.
Cohomology of a variety sits at ``degree = weight``.  The two E-derived
coefficient objects (``sheaf_E`` and ``dual_h1_E``) sit in degree 0, so
tensoring with them keeps each part on its own side of the fraction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

import numpy as np

from .exact_arith import Poly, RationalFunction, exterior_power as poly_exterior_power, tensor_roots
from .zeta import ZetaFunction, _square_root_exponent

Key = tuple[int, int]


def _clean(parts: Mapping[Key, Poly]) -> dict[Key, Poly]:
    out = {}
    for k, P in parts.items():
        if P[0] != 1:
            raise ValueError("part %s must have constant term 1" % (k,))
        if P.degree > 0:
            out[k] = P
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class WeilMotive:
    q: int
    parts: dict = field(default_factory=dict)  # (degree, weight) -> Poly

    def __post_init__(self):
        object.__setattr__(self, "parts", _clean(self.parts))

    def __eq__(self, other):
        return isinstance(other, WeilMotive) and self.q == other.q and self.parts == other.parts

    def __hash__(self):
        return hash((self.q, tuple(self.parts.items())))

    @property
    def rank(self) -> int:
        return sum(P.degree for P in self.parts.values())

    def by_weight(self) -> dict[int, Poly]:
        """Eigenvalue polynomial per weight, ignoring degree."""
        out: dict[int, Poly] = {}
        for (_, w), P in self.parts.items():
            out[w] = out.get(w, Poly.one()) * P
        return dict(sorted(out.items()))

    def weight_deviation(self) -> float:
        """Largest relative deviation of |eigenvalue| from q^(w/2)."""
        worst = 0.0
        for (_, w), P in self.parts.items():
            monic = P.reversal()
            roots = np.roots([float(c) for c in reversed(monic.coeffs)])
            target = float(self.q) ** (w / 2)
            for r in roots:
                worst = max(worst, abs(abs(r) - target) / target)
        return worst


@dataclass(frozen=True)
class LFunction:
    num: Poly
    den: Poly

    @classmethod
    def of(cls, rf: RationalFunction) -> "LFunction":
        return cls(rf.num, rf.den)

    def as_rational_function(self) -> RationalFunction:
        return RationalFunction(self.num, self.den)

    def __call__(self, u) -> Fraction:
        return self.as_rational_function()(u)

    def coefficients(self) -> dict:
        return {"num": [str(c) for c in self.num.coeffs], "den": [str(c) for c in self.den.coeffs]}


def _sqrt_q(q: int) -> int:
    p = next(d for d in range(2, q + 1) if q % d == 0) if q > 1 else 0
    if p == 0:
        raise ValueError("q must be p^{2f}")
    return p ** _square_root_exponent(p, q)


def unit_motive(q: int) -> WeilMotive:
    return WeilMotive(q, {(0, 0): Poly([1, -1])})


def motive_of_E(q: int) -> WeilMotive:
    """h^1 of the type-(c) curve: eigenvalue p^f twice."""
    return WeilMotive(q, {(1, 1): Poly.linear_factor(_sqrt_q(q)) ** 2})


def sheaf_E(q: int) -> WeilMotive:
    """h^1(E) as a coefficient object (degree 0, weight 1)."""
    return WeilMotive(q, {(0, 1): Poly.linear_factor(_sqrt_q(q)) ** 2})


def dual_h1_E(q: int) -> WeilMotive:
    """E^vee = h_1(E) as a coefficient object: eigenvalue p^-f twice, weight -1."""
    return WeilMotive(q, {(0, -1): Poly.linear_factor(Fraction(1, _sqrt_q(q))) ** 2})


def motive_of_zeta(z: ZetaFunction) -> WeilMotive:
    return WeilMotive(z.q, {(i, i): P for i, P in enumerate(z.polys)})


def _check_same_q(M: WeilMotive, N: WeilMotive):
    if M.q != N.q:
        raise ValueError("motives over different fields (q=%d, q=%d)" % (M.q, N.q))


def direct_sum(M: WeilMotive, N: WeilMotive) -> WeilMotive:
    _check_same_q(M, N)
    parts = dict(M.parts)
    for k, P in N.parts.items():
        parts[k] = parts.get(k, Poly.one()) * P
    return WeilMotive(M.q, parts)


def tensor(M: WeilMotive, N: WeilMotive) -> WeilMotive:
    _check_same_q(M, N)
    parts: dict[Key, Poly] = {}
    for (d1, w1), P in M.parts.items():
        for (d2, w2), Q in N.parts.items():
            k = (d1 + d2, w1 + w2)
            parts[k] = parts.get(k, Poly.one()) * tensor_roots(P, Q)
    return WeilMotive(M.q, parts)


def twist(M: WeilMotive, n: int) -> WeilMotive:
    """M(n): eigenvalues times q^-n, weights shifted by -2n."""
    c = Fraction(M.q) ** -n
    return WeilMotive(M.q, {(d, w - 2 * n): P.scale_var(c) for (d, w), P in M.parts.items()})


def exterior_power(M: WeilMotive, k: int) -> WeilMotive:
    """Lambda^k of a single-part motive (degree and weight scale by k)."""
    if len(M.parts) != 1:
        raise ValueError("exterior power is defined here for single-part motives only")
    if k < 1:
        raise ValueError("exterior power index must be >= 1")
    ((d, w), P), = M.parts.items()
    if k > P.degree:
        return WeilMotive(M.q, {})
    return WeilMotive(M.q, {(k * d, k * w): poly_exterior_power(P, k)})


def l_function(M: WeilMotive) -> LFunction:
    num, den = Poly.one(), Poly.one()
    for (d, _), P in M.parts.items():
        if d % 2:
            num = num * P
        else:
            den = den * P
    return LFunction.of(RationalFunction(num, den))


def check_half_shift_identity(M: WeilMotive, *, dual: WeilMotive | None = None) -> tuple[bool, dict]:
    """L(M, s + 1/2)^2 = L(M (x) E^vee, s), realized as u -> u / p^f.

    ``dual`` replaces E^vee (soundness probes).
    """
    r = _sqrt_q(M.q)
    lhs = l_function(M).as_rational_function().scale_var(Fraction(1, r)) ** 2
    rhs = l_function(tensor(M, dual_h1_E(M.q) if dual is None else dual)).as_rational_function()
    ok = lhs == rhs
    witness = {} if ok else {"lhs": LFunction.of(lhs).coefficients(), "rhs": LFunction.of(rhs).coefficients()}
    return ok, witness


def random_motive(rng: random.Random, pool: Sequence[ZetaFunction], max_rank: int = 24,
                  log: list | None = None) -> WeilMotive:
    """A motive built from curve numerators in ``pool`` by tensor, sum, exterior power and twist.

    Operations that would push the rank past ``max_rank`` are skipped.  The
    names of the operations applied are appended to ``log`` when given.
    """
    log = [] if log is None else log
    if not pool:
        raise ValueError("empty curve pool")
    q = pool[0].q

    def atom() -> WeilMotive:
        z = rng.choice(pool)
        if rng.random() < 0.3:
            return motive_of_zeta(z)
        return WeilMotive(q, {(1, 1): z.p1}) if z.p1.degree else unit_motive(q)

    M = atom()
    for _ in range(rng.randint(0, 2)):
        op = rng.choice(("tensor", "sum", "ext", "twist"))
        if op == "tensor":
            N = atom()
            if M.rank * N.rank <= max_rank:
                M = tensor(M, N)
                log.append(op)
        elif op == "sum":
            N = atom()
            if M.rank + N.rank <= max_rank:
                M = direct_sum(M, N)
                log.append(op)
        elif op == "ext" and len(M.parts) == 1:
            deg = M.rank
            if 2 <= deg <= 6:
                k = rng.randint(2, deg)
                if comb(deg, k) <= max_rank:
                    M = exterior_power(M, k)
                    log.append(op)
        elif op == "twist":
            M = twist(M, rng.randint(-1, 1))
            log.append(op)
    return M


def _parse_key(k) -> Key:
    if isinstance(k, int):
        return (k, k)
    s = str(k)
    if "," in s:
        d, w = s.split(",")
        return (int(d), int(w))
    return (int(s), int(s))


def motive_from_dict(data: Mapping) -> WeilMotive:
    """Parse ``{"q": 9, "parts": {"1": ["1", "-1/3"], "0,-1": [...]}}``.

    A bare weight key ``"w"`` means degree = weight.
    """
    try:
        q = int(data["q"])
        _sqrt_q(q)
        parts = {_parse_key(k): Poly([Fraction(str(c)) for c in v]) for k, v in data["parts"].items()}
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValueError("invalid motive literal: %s" % exc) from exc
    return WeilMotive(q, parts)


def motive_to_dict(M: WeilMotive) -> dict:
    parts = {}
    for (d, w), P in M.parts.items():
        key = str(w) if d == w else "%d,%d" % (d, w)
        parts[key] = ["%d/%d" % (c.numerator, c.denominator) for c in P.coeffs]
    return {"q": M.q, "parts": parts}
