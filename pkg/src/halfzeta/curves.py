"""Curve models over F_q, q = p^(2f), and their point counts over F_{q^n}."""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .finite_field import (
    EnumerationBoundExceeded,
    FieldDesc,
    FieldElement,
    embed,
    enumeration_bound,
    field_tables,
    fq_derivative,
    fq_gcd,
    fq_trim,
    make_field,
    poly_eval_logs,
)


class InvalidCurve(ValueError):
    pass


@dataclass(frozen=True)
class CurveModel:
    """``y^2 + h(x) y = f(x)`` or a plane curve ``F(X, Y, Z) = 0``.

    Coefficients are element codes of the canonical F_{p^(2f)}.  For plane
    curves ``F_coeffs`` maps exponent triples ``(a, b, c)`` of
    ``X^a Y^b Z^c`` to codes.
    """

    p: int
    f: int
    kind: str
    genus: int
    f_coeffs: tuple[int, ...] = ()
    h_coeffs: tuple[int, ...] = ()
    F_coeffs: tuple[tuple[tuple[int, int, int], int], ...] = ()
    name: str = field(default="", compare=False)

    @property
    def q(self) -> int:
        return self.p ** (2 * self.f)

    @property
    def sqrt_q(self) -> int:
        return self.p ** self.f

    @property
    def base_field(self) -> FieldDesc:
        return make_field(self.p, 2 * self.f)

    def elements(self, codes: Sequence[int]) -> list[FieldElement]:
        F = self.base_field
        return fq_trim([F.element(c) for c in codes])

    def describe(self) -> str:
        if self.kind == "hyperelliptic":
            h = "h=%s " % list(self.h_coeffs) if any(self.h_coeffs) else ""
            return "y^2+h*y=f %sf=%s" % (h, list(self.f_coeffs))
        return "F=%s" % {"%d,%d,%d" % m: c for m, c in self.F_coeffs}


def hyperelliptic(p: int, f: int, f_coeffs: Sequence[int], genus: int,
                  h_coeffs: Sequence[int] = (), name: str = "") -> CurveModel:
    return CurveModel(p, f, "hyperelliptic", genus, tuple(f_coeffs), tuple(h_coeffs), name=name)


def plane(p: int, f: int, F_coeffs: dict, genus: int | None = None, name: str = "") -> CurveModel:
    items = tuple(sorted((tuple(m), c) for m, c in F_coeffs.items() if c))
    if genus is None:
        d = sum(items[0][0]) if items else 0
        genus = (d - 1) * (d - 2) // 2
    return CurveModel(p, f, "plane", genus, F_coeffs=items, name=name)


def _degree(codes: Sequence[int]) -> int:
    d = -1
    for i, c in enumerate(codes):
        if c:
            d = i
    return d


def validate_curve(c: CurveModel) -> CurveModel:
    """Structural checks; smoothness of plane models is certified later."""
    if c.f < 1:
        raise InvalidCurve("q must be p^{2f} with f >= 1")
    F = c.base_field
    for code in list(c.f_coeffs) + list(c.h_coeffs) + [v for _, v in c.F_coeffs]:
        if not 0 <= code < F.order:
            raise InvalidCurve("coefficient code %d outside F_%d" % (code, F.order))
    if c.genus < 0:
        raise InvalidCurve("negative genus")
    if c.kind == "hyperelliptic":
        df, dh = _degree(c.f_coeffs), _degree(c.h_coeffs)
        g = c.genus
        if c.p == 2:
            if dh < 0:
                raise InvalidCurve("p = 2 hyperelliptic model needs h != 0")
            if dh > g + 1 or max(2 * dh, df) not in (2 * g + 1, 2 * g + 2):
                raise InvalidCurve("degrees of f and h do not match genus %d" % g)
        else:
            if dh >= 0:
                raise InvalidCurve("odd characteristic requires h = 0")
            if df not in (2 * g + 1, 2 * g + 2):
                raise InvalidCurve("deg f = %d does not match genus %d" % (df, g))
            fe = c.elements(c.f_coeffs)
            if len(fq_gcd(fe, fq_derivative(fe))) > 1:
                raise InvalidCurve("f is not squarefree")
    elif c.kind == "plane":
        if not c.F_coeffs:
            raise InvalidCurve("plane curve has no terms")
        degs = {sum(m) for m, _ in c.F_coeffs}
        if len(degs) != 1:
            raise InvalidCurve("plane polynomial is not homogeneous")
        d = degs.pop()
        if any(min(m) < 0 or len(m) != 3 for m, _ in c.F_coeffs):
            raise InvalidCurve("bad monomial exponents")
        expect = (d - 1) * (d - 2) // 2
        if c.genus != expect:
            raise InvalidCurve("smooth plane curve of degree %d must have genus %d, not %d"
                               % (d, expect, c.genus))
    else:
        raise InvalidCurve("unknown curve kind %r" % c.kind)
    return c


# counting -------------------------------------------------------------------

def _ext_field(c: CurveModel, n: int) -> FieldDesc:
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    size = c.q ** n
    bound = enumeration_bound()
    if size > bound:
        raise EnumerationBoundExceeded(
            "F_{q^%d} has %d elements, above the enumeration bound %d" % (n, size, bound))
    return make_field(c.p, 2 * c.f * n)


def _embedded_logs(c: CurveModel, codes: Sequence[int], dst: FieldDesc) -> list[int]:
    tabs = field_tables(dst)
    src = c.base_field
    return [tabs.log_of(embed(src.element(code), dst)) for code in codes]


def _slices(n: int, workers: int) -> list[tuple[int, int]]:
    workers = max(1, workers)
    step = -(-n // workers)
    return [(i, min(n, i + step)) for i in range(0, n, step)]


def _parallel_sum(fn, n: int, workers: int) -> int:
    parts = _slices(n, workers)
    if len(parts) <= 1:
        return sum(fn(a, b) for a, b in parts)
    with ThreadPoolExecutor(max_workers=len(parts)) as ex:
        return sum(ex.map(lambda ab: fn(*ab), parts))


def _as_solutions(tabs, a_logs: np.ndarray, b_logs: np.ndarray | None) -> np.ndarray:
    """Number of ``Y`` with ``Y^2 + b Y = a``, elementwise."""
    if tabs.field.p != 2:
        # b is always zero in odd characteristic models
        return 1 + tabs.quadratic_character(a_logs)
    z = tabs.zero_log
    b0 = b_logs == z
    safe_b = np.where(b0, 0, b_logs)
    ratio = tabs.mul(a_logs, tabs.pow(safe_b, -2 % (tabs.q - 1)))
    tr = tabs.absolute_trace(ratio)
    return np.where(b0, 1, np.where(tr == 0, 2, 0))


def _hyperelliptic_infinity(c: CurveModel, tabs, dst) -> int:
    g = c.genus
    top_f = c.f_coeffs[2 * g + 2] if len(c.f_coeffs) > 2 * g + 2 else 0
    top_h = c.h_coeffs[g + 1] if len(c.h_coeffs) > g + 1 else 0
    a = np.array(_embedded_logs(c, [top_f], dst))
    b = np.array(_embedded_logs(c, [top_h], dst))
    return int(_as_solutions(tabs, a, b)[0])


def _count_hyperelliptic_character(c: CurveModel, n: int, workers: int) -> int:
    dst = _ext_field(c, n)
    tabs = field_tables(dst)
    xs = tabs.all_logs()
    fl = _embedded_logs(c, c.f_coeffs, dst)
    hl = _embedded_logs(c, c.h_coeffs, dst) if any(c.h_coeffs) else None

    def part(a, b):
        x = xs[a:b]
        fv = poly_eval_logs(tabs, fl, x)
        hv = poly_eval_logs(tabs, hl, x) if hl is not None else None
        return int(_as_solutions(tabs, fv, hv).sum())

    return _parallel_sum(part, tabs.q, workers) + _hyperelliptic_infinity(c, tabs, dst)


def _count_hyperelliptic_enumerate(c: CurveModel, n: int, workers: int) -> int:
    """Count pairs ``(x, y)`` one by one (vectorised over ``y``)."""
    dst = _ext_field(c, n)
    tabs = field_tables(dst)
    ys = tabs.all_logs()
    y2 = tabs.mul(ys, ys)
    fl = _embedded_logs(c, c.f_coeffs, dst)
    hl = _embedded_logs(c, c.h_coeffs, dst)
    xs = tabs.all_logs()
    fv_all = poly_eval_logs(tabs, fl, xs)
    hv_all = poly_eval_logs(tabs, hl, xs) if hl else np.full(xs.shape, tabs.zero_log)

    def on_curve(a_log, b_log):
        lhs = tabs.add(y2, tabs.mul(ys, np.full(ys.shape, b_log)))
        return int(np.count_nonzero(lhs == a_log))

    def part(a, b):
        return sum(on_curve(fv_all[i], hv_all[i]) for i in range(a, b))

    g = c.genus
    top_f = c.f_coeffs[2 * g + 2] if len(c.f_coeffs) > 2 * g + 2 else 0
    top_h = c.h_coeffs[g + 1] if len(c.h_coeffs) > g + 1 else 0
    (fa,), (hb,) = _embedded_logs(c, [top_f], dst), _embedded_logs(c, [top_h], dst)
    return _parallel_sum(part, tabs.q, workers) + on_curve(fa, hb)


def _count_plane(c: CurveModel, n: int, workers: int) -> int:
    dst = _ext_field(c, n)
    tabs = field_tables(dst)
    z = tabs.zero_log
    d = sum(c.F_coeffs[0][0])
    coeffs = dict(zip([m for m, _ in c.F_coeffs], _embedded_logs(c, [v for _, v in c.F_coeffs], dst)))
    xs = tabs.all_logs()
    Q = tabs.q

    def y_coefficients(x: np.ndarray, zval: int) -> list[np.ndarray]:
        # coefficient of y^b as a function of x, with Z fixed to zval (1 or 0)
        out = []
        for b in range(d + 1):
            acc = np.full(x.shape, z, dtype=np.int64)
            for (ea, eb, ec), cl in coeffs.items():
                if eb != b or (zval == 0 and ec > 0):
                    continue
                term = tabs.mul(tabs.pow(x, ea), np.full(x.shape, cl))
                acc = tabs.add(acc, term)
            out.append(acc)
        return out

    ys = tabs.all_logs()

    def affine_part(a, b):
        total = 0
        rows = max(1, min(b - a, 2_000_000 // Q))
        for s in range(a, b, rows):
            x = xs[s:min(b, s + rows)]
            cb = [v[:, None] for v in y_coefficients(x, 1)]
            Y = ys[None, :]
            acc = np.broadcast_to(cb[d], (len(x), Q))
            for j in range(d - 1, -1, -1):
                acc = tabs.add(tabs.mul(acc, Y), cb[j])
            total += int(np.count_nonzero(acc == z))
        return total

    affine = _parallel_sum(affine_part, Q, workers)
    # Z = 0, Y = 1: F(x, 1, 0)
    line = y_coefficients(xs, 0)
    acc = np.full(xs.shape, z, dtype=np.int64)
    for v in line:
        acc = tabs.add(acc, v)
    at_line = int(np.count_nonzero(acc == z))
    # (1 : 0 : 0)
    corner = 0 if coeffs.get((d, 0, 0), z) != z else 1
    return affine + at_line + corner


def count_points(c: CurveModel, n: int, *, method: str = "auto", workers: int = 1) -> int:
    """Number of F_{q^n}-points on the smooth projective model.

    ``method`` selects the hyperelliptic route: ``"character"`` sums
    quadratic characters (or Artin-Schreier traces when p = 2),
    ``"enumerate"`` tests every pair ``(x, y)``.
    """
    if c.kind == "plane":
        return _count_plane(c, n, workers)
    if method in ("auto", "character"):
        return _count_hyperelliptic_character(c, n, workers)
    if method == "enumerate":
        return _count_hyperelliptic_enumerate(c, n, workers)
    raise ValueError("unknown counting method %r" % method)


def count_table(c: CurveModel, upto: int, *, workers: int = 1) -> dict[int, int]:
    if upto < 1:
        raise ValueError("count_table needs upto >= 1")
    return {n: count_points(c, n, workers=workers) for n in range(1, upto + 1)}


# JSON ingestion ----------------------------------------------------------------

def _coeff_code(v, F: FieldDesc) -> int:
    if isinstance(v, bool):
        raise InvalidCurve("boolean is not a coefficient")
    if isinstance(v, int):
        return F.element([v]).code
    if isinstance(v, list) and all(isinstance(x, int) for x in v):
        if len(v) > F.k:
            raise InvalidCurve("coefficient vector longer than 2f")
        return F.element(v).code
    raise InvalidCurve("bad coefficient %r" % (v,))


def curve_from_dict(d: dict) -> CurveModel:
    try:
        p, f = int(d["p"]), int(d["f"])
        kind = d["kind"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidCurve("curve JSON needs integer p, f and a kind") from exc
    if "q" in d and d["q"] != p ** (2 * f) or f < 1:
        raise InvalidCurve("q must be p^{2f}")
    try:
        F = make_field(p, 2 * f)
    except ValueError as exc:
        raise InvalidCurve(str(exc)) from exc
    genus = d.get("genus")
    if kind == "hyperelliptic":
        if genus is None:
            raise InvalidCurve("hyperelliptic curve needs a genus")
        fc = [_coeff_code(v, F) for v in d.get("f_coeffs", [])]
        hc = [_coeff_code(v, F) for v in d.get("h_coeffs", [])]
        c = hyperelliptic(p, f, fc, int(genus), hc, name=d.get("name", ""))
    elif kind == "plane":
        terms = {}
        for key, v in d.get("F_coeffs", {}).items():
            try:
                mono = tuple(int(x) for x in key.split(","))
            except ValueError as exc:
                raise InvalidCurve("monomial key %r is not 'a,b,c'" % key) from exc
            terms[mono] = _coeff_code(v, F)
        c = plane(p, f, terms, None if genus is None else int(genus), name=d.get("name", ""))
    else:
        raise InvalidCurve("unknown curve kind %r" % kind)
    return validate_curve(c)


def curve_to_dict(c: CurveModel) -> dict:
    F = c.base_field
    vec = lambda code: list(F.element(code).coords)
    out = {"p": c.p, "f": c.f, "kind": c.kind, "genus": c.genus}
    if c.kind == "hyperelliptic":
        out["f_coeffs"] = [vec(v) for v in c.f_coeffs]
        out["h_coeffs"] = [vec(v) for v in c.h_coeffs]
    else:
        out["F_coeffs"] = {"%d,%d,%d" % m: vec(v) for m, v in c.F_coeffs}
    if c.name:
        out["name"] = c.name
    return out


def load_curve(path: str | Path) -> CurveModel:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidCurve("invalid JSON: %s" % exc) from exc
    if not isinstance(data, dict):
        raise InvalidCurve("curve JSON must be an object")
    return curve_from_dict(data)
