from fractions import Fraction

import pytest

from halfzeta.corpus import default_corpus, elliptic_zeta
from halfzeta.exact_arith import Poly
from halfzeta.padic import is_ordinary, padic_value_check, slope_profile
from halfzeta.special_values import rho_of
from halfzeta.zeta import curve_zeta, p1_zeta

HALF = Fraction(1, 2)


def E9():
    return curve_zeta(3, 1, Poly([1, -3]) ** 2)


def test_slope_profile_examples():
    prof = slope_profile(elliptic_zeta(3, 1, 1))
    assert prof.weight_one() == [0, 1]
    assert prof.g == (1, 1, 0)
    prof = slope_profile(E9())
    assert prof.weight_one() == [HALF, HALF] and prof.g[1] == 1
    prof = slope_profile(p1_zeta(3, 1))
    assert prof.weight_one() == [] and prof.g == (1, 0, 0)


def test_is_ordinary_examples():
    z = elliptic_zeta(3, 1, 1)
    assert is_ordinary(z) and rho_of(z) == 0
    assert not is_ordinary(E9())
    b = elliptic_zeta(3, 1, -6)
    assert not is_ordinary(b) and rho_of(b) == 0


# hand-computed regression fixtures: (zeta, exponent of z, g-sum, chi)
FIXTURES = {
    "ordinary_a1": (lambda: elliptic_zeta(3, 1, 1), 0, 0, 0),
    "E": (E9, 2, 0, 0),
    "P1": (lambda: p1_zeta(3, 1), 0, 1, 1),
}


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_padic_fixtures(name):
    make, exponent, gsum, chi = FIXTURES[name]
    rep = padic_value_check(make())
    assert rep.z_direct == exponent
    assert rep.z_slopes == exponent
    assert rep.g_sum == gsum and rep.chi == chi
    assert rep.equal and rep.b_assumption_flag
    assert all(u["ok"] for u in rep.unit_checks)


def test_literal_reading_differs_off_genus_one():
    rep = padic_value_check(p1_zeta(3, 1))
    assert rep.z_slopes_literal == -2 != rep.z_direct


def test_probe_breaks_equality():
    assert not padic_value_check(E9(), chi_shift=1).equal


@pytest.fixture(scope="module")
def corpus():
    return default_corpus(3, 5)


def test_corpus_invariants(corpus):
    for e in corpus:
        z = e.zeta
        prof = slope_profile(z)
        w1 = prof.weight_one()
        assert sorted(w1) == sorted(1 - s for s in w1)
        assert all(0 <= s <= 1 for s in w1)
        assert prof.g[1] == z.genus
        if is_ordinary(z):
            assert rho_of(z) == 0
        rep = padic_value_check(z)
        assert rep.equal, (e.name, rep.to_json())
