from fractions import Fraction

import pytest

from halfzeta.corpus import default_corpus, elliptic_zeta
from halfzeta.exact_arith import Poly
from halfzeta.special_values import (
    PreconditionError,
    bsd_limit_check,
    c_of,
    c_squared_via_rational_function,
    check_ordinary_elliptic,
    rho_of,
    spec_fq_half_values,
    sha_oracle,
    sha_prediction,
    special_value_report,
)
from halfzeta.padic import is_ordinary
from halfzeta.zeta import ZetaFunction, curve_zeta, p1_zeta


def E(p, f=1):
    return curve_zeta(p, f, Poly.linear_factor(p ** f) ** 2)


def test_rho_examples():
    assert rho_of(E(2)) == 2
    assert rho_of(elliptic_zeta(3, 1, 1)) == 0
    assert rho_of(p1_zeta(3, 1)) == 0


def test_rho_needs_square_q():
    z = ZetaFunction(3, 0, 1, (Poly([1, -1]), Poly.one(), Poly([1, -1])), 0)
    with pytest.raises(PreconditionError, match=r"q must be p\^\{2f\}"):
        rho_of(z)


def test_c_examples():
    assert c_of(p1_zeta(3, 1)) == Fraction(-3, 4)
    assert c_of(p1_zeta(3, 1)) ** 2 == Fraction(9, 16)
    assert c_of(E(3)) == Fraction(-3, 4)
    v = spec_fq_half_values(3, 1)
    assert v["zeta_half_sq"] == Fraction(9, 4)


def test_ordinary_elliptic_examples():
    z = elliptic_zeta(3, 1, 1)
    assert c_of(z) == Fraction(-5, 4)
    assert check_ordinary_elliptic(z)[0]
    z = elliptic_zeta(3, 1, -1)
    assert c_of(z) == Fraction(-7, 4)
    ok, w = check_ordinary_elliptic(z, 11)
    assert ok and w["rhs"] == "-7/4"
    with pytest.raises(PreconditionError):
        check_ordinary_elliptic(elliptic_zeta(3, 1, -6))
    with pytest.raises(PreconditionError):
        check_ordinary_elliptic(p1_zeta(3, 1))


def test_sha_examples():
    assert sha_prediction(elliptic_zeta(3, 1, 1)) == 5
    assert sha_prediction(p1_zeta(3, 1)) == 1
    with pytest.raises(PreconditionError):
        sha_prediction(E(3))


def test_report():
    rep = special_value_report(elliptic_zeta(3, 1, 1))
    assert rep.to_json() == {"rho": 0, "c": "-5/4", "c2": "25/16", "chi_O": 0, "E_order": 4,
                             "ordinary": True, "m": 5, "m2": 25}
    rep = special_value_report(E(3))
    assert rep.sha_prediction is None and rep.rho == 2 and rep.c_squared == rep.c ** 2


def test_spec_fq_half_all_small_fields():
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97):
        f = 1
        while p ** f <= 100:
            r, q = p ** f, p ** (2 * f)
            v = spec_fq_half_values(p, f)
            assert v["E_order"] == (r - 1) ** 2
            assert v["zeta_half_sq"] == Fraction(q, (1 - r) ** 2)
            assert v["zeta_minus_half_inv_sq"] == (r - 1) ** 2
            f += 1


def test_bsd_examples():
    ok, w = bsd_limit_check(E(3))
    assert ok and w["order"] == 4 and w["limit"] == "9/16"
    ok, w = bsd_limit_check(elliptic_zeta(3, 1, 1))
    assert ok and w["order"] == 0 and w["limit"] == "25/16"


@pytest.fixture(scope="module")
def corpus():
    return default_corpus(2, 4)


def test_corpus_properties(corpus):
    for e in corpus:
        z = e.zeta
        rho = rho_of(z)
        assert rho % 2 == 0
        assert c_of(z) ** 2 == c_squared_via_rational_function(z)
        assert bsd_limit_check(z)[0]
        if is_ordinary(z):
            m = sha_prediction(z)
            assert m == sha_oracle(z)
            # c^2 [E(F_q)]^2 q^(g-1) is a perfect square
            val = c_of(z) ** 2 * (z.sqrt_q - 1) ** 4 * Fraction(z.q) ** (z.genus - 1)
            assert val == m * m
