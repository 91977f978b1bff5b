"""Reference objects and seeded random curve corpora."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .curves import CurveModel, InvalidCurve, hyperelliptic, validate_curve
from .exact_arith import Poly
from .tate_rank import elliptic_models, elliptic_trace, find_type_c_curve
from .zeta import CertificationError, ZetaFunction, curve_zeta, p1_zeta, zeta_of_curve

GENERATOR = "python-random.Random (MT19937)"


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    zeta: ZetaFunction
    curve: CurveModel | None = None


def anchors(p: int = 3, f: int = 1) -> list[CorpusEntry]:
    """P^1, the type-(c) curve E, one ordinary and one type-(b) elliptic curve."""
    r = p ** f
    out = [CorpusEntry("P1", p1_zeta(p, f))]
    E = find_type_c_curve(p, f) if f == 1 or p ** (2 * f) <= 625 else None
    out.append(CorpusEntry("E", zeta_of_curve(E) if E else curve_zeta(p, f, Poly.linear_factor(r) ** 2), E))
    ordinary = next((a for a in range(1, 2 * r + 1) if a % p), None)
    if ordinary is not None:
        out.append(CorpusEntry("ordinary_a%d" % ordinary,
                               curve_zeta(p, f, Poly([1, -ordinary, r * r]))))
    out.append(CorpusEntry("type_b", curve_zeta(p, f, Poly.linear_factor(-r) ** 2)))
    return out


def random_curve(rng: random.Random, p: int, f: int, genus: int) -> CurveModel:
    """Uniform coefficients until the model passes the structural checks."""
    Q = p ** (2 * f)
    while True:
        if p == 2:
            fc = [rng.randrange(Q) for _ in range(2 * genus + 1)] + [rng.randrange(1, Q)]
            c = hyperelliptic(p, f, fc, genus, [1])
        else:
            deg = 2 * genus + rng.randint(1, 2)
            fc = [rng.randrange(Q) for _ in range(deg)] + [rng.randrange(1, Q)]
            c = hyperelliptic(p, f, fc, genus)
        try:
            return validate_curve(c)
        except InvalidCurve:
            continue


def random_certified(rng: random.Random, p: int, f: int, genus: int) -> CorpusEntry:
    while True:
        c = random_curve(rng, p, f, genus)
        try:
            z = zeta_of_curve(c)
        except CertificationError:
            continue
        label = "q%d_g%d_%s" % (c.q, genus, "_".join(map(str, c.f_coeffs)))
        return CorpusEntry(label, z, c)


def random_corpus(seed: int, count: int, p: int, f: int, genera=(2, 3)) -> list[CorpusEntry]:
    rng = random.Random(seed)
    return [random_certified(rng, p, f, genera[i % len(genera)]) for i in range(count)]


def default_corpus(seed: int = 0, per_field: int = 4) -> list[CorpusEntry]:
    """Anchors over F_4, F_9, F_25 plus seeded random curves of genus 1..3 on each."""
    out: list[CorpusEntry] = []
    for p in (2, 3, 5):
        out += [CorpusEntry("%s_q%d" % (e.name, p * p), e.zeta, e.curve) for e in anchors(p, 1)]
        out += random_corpus(seed + p, per_field, p, 1, (1, 2, 3))
    return out


def elliptic_scan(p: int, f: int = 1) -> Iterator[tuple[CurveModel, int]]:
    """Every model from ``elliptic_models`` with its trace."""
    for c in elliptic_models(p, f):
        yield c, elliptic_trace(c)


def elliptic_zeta(p: int, f: int, trace: int) -> ZetaFunction:
    return curve_zeta(p, f, Poly([1, -trace, p ** (2 * f)]), 1)
