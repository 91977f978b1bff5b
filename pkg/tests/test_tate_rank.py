import pytest
from hypothesis import given, strategies as st

from halfzeta.corpus import default_corpus, elliptic_scan
from halfzeta.curves import count_points
from halfzeta.exact_arith import Poly
from halfzeta.tate_rank import (
    FrobCharPoly,
    SupersingularType,
    classify_elliptic,
    find_type_c_curve,
    hom_rank,
    verify_lemma_ord,
    weil_etale_ranks,
)
from halfzeta.zeta import curve_zeta, p1_zeta

T = SupersingularType


def fcp(roots=(), extra=Poly.one(), q=9):
    return FrobCharPoly(Poly.from_roots(roots) * extra, q)


def test_hom_rank_examples():
    e = fcp([3, 3])
    assert hom_rank(e, e) == 4
    assert hom_rank(e, FrobCharPoly(Poly([9, -1, 1]), 9)) == 0
    assert hom_rank(e, fcp([3, 3], Poly([9, -1, 1]))) == 4
    with pytest.raises(ValueError):
        hom_rank(e, fcp([2, 2], q=4))


def test_frobcharpoly_invariants():
    with pytest.raises(ValueError):
        FrobCharPoly(Poly([1, 2]) * Poly([1, 1]), 9)  # not monic
    with pytest.raises(ValueError):
        FrobCharPoly(Poly([-3, 1]), 9)  # odd degree


roots_st = st.lists(st.integers(-3, 3), min_size=0, max_size=4)


def _even(rs):
    return rs + rs[:1] if len(rs) % 2 else rs


@given(roots_st, roots_st, roots_st)
def test_hom_rank_symmetric_and_additive(a, b, c):
    fa, fb, fc = (fcp(_even(r)) for r in (a, b, c))
    assert hom_rank(fa, fb) == hom_rank(fb, fa)
    fbc = FrobCharPoly(fb.monic * fc.monic, 9)
    assert hom_rank(fa, fbc) == hom_rank(fa, fb) + hom_rank(fa, fc)


@given(roots_st.filter(bool))
def test_hom_rank_self_at_least_degree(rs):
    f = fcp(_even(rs))
    squarefree = len(set(_even(rs))) == len(_even(rs))
    assert hom_rank(f, f) >= f.monic.degree
    assert (hom_rank(f, f) == f.monic.degree) == squarefree


def test_verify_lemma_ord_examples():
    E = curve_zeta(3, 1, Poly([1, -3]) ** 2)
    assert verify_lemma_ord(E) == (True, {"hom_rank": 4, "two_rho": 4})
    assert verify_lemma_ord(curve_zeta(3, 1, Poly([1, -1, 9])))[0]
    split = curve_zeta(3, 1, Poly([1, -3]) ** 2 * Poly([1, -1, 9]))
    ok, w = verify_lemma_ord(split)
    assert ok and w["two_rho"] == 4 and w["hom_rank"] == 4


def test_classify_examples():
    assert classify_elliptic(4, 2, 1) is T.TYPE_C
    assert classify_elliptic(-6, 3, 1) is T.TYPE_B
    assert classify_elliptic(1, 3, 1) is T.ORDINARY
    assert classify_elliptic(0, 3, 1) is T.TYPE_A
    assert classify_elliptic(3, 3, 1) is T.OTHER
    with pytest.raises(ValueError):
        classify_elliptic(7, 3, 1)


@pytest.mark.parametrize("p,points", [(2, 1), (3, 4), (5, 16)])
def test_find_type_c_examples(p, points):
    c = find_type_c_curve(p)
    assert count_points(c, 1, method="enumerate") == points
    assert c.base_field.order == p * p


def test_find_type_c_over_larger_field():
    c = find_type_c_curve(3, 2)
    assert c.q == 81 and count_points(c, 1) == 64


def test_find_type_c_is_deterministic():
    assert find_type_c_curve(5) == find_type_c_curve(5)


def test_weil_etale_examples():
    ranks, w = weil_etale_ranks(curve_zeta(2, 1, Poly([1, -2]) ** 2))
    assert ranks == [4, 4, 0, 0] and w["secondary"] == -4
    assert weil_etale_ranks(curve_zeta(3, 1, Poly([1, -1, 9])))[0] == [0, 0, 0, 0]
    with pytest.raises(ValueError):
        weil_etale_ranks(p1_zeta(3, 1), perturb=1)


def test_corpus_lemma_ord_and_divisibility():
    for e in default_corpus(1, 3):
        ok, w = verify_lemma_ord(e.zeta)
        assert ok
        assert w["hom_rank"] % 4 == 0
        ranks, w = weil_etale_ranks(e.zeta)
        assert w["alternating"] == 0


def test_scan_traces_partition():
    counts = {}
    for c, t in elliptic_scan(3):
        counts[t] = counts.get(t, 0) + 1
    assert set(counts) <= set(range(-6, 7))
    assert counts[6] > 0 and counts[-6] > 0
