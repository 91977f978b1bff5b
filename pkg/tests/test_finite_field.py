import itertools

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from halfzeta.finite_field import (
    EnumerationBoundExceeded,
    embed,
    enumerate_field,
    field_ops,
    field_tables,
    is_irreducible,
    make_field,
    primitive_element,
)

SMALL_FIELDS = [(p, k) for p in (2, 3, 5, 7) for k in range(1, 7) if p ** k <= 81]


def _sympy_irreducible(m, p):
    x = sympy.Symbol("x")
    return sympy.Poly(list(reversed(m)), x, modulus=p).is_irreducible


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_irreducibility_matches_oracle(p, k):
    for coeffs in itertools.product(range(p), repeat=k):
        m = list(coeffs) + [1]
        assert is_irreducible(m, p) == _sympy_irreducible(m, p), m


def test_make_field_examples():
    F9 = make_field(3, 2)
    assert F9.order == 9 and _sympy_irreducible(list(F9.modulus), 3)
    assert F9.modulus == (1, 0, 1)  # x^2 + 1 is the smallest
    F2 = make_field(2, 1)
    assert F2.modulus == (0, 1)
    with pytest.raises(ValueError):
        make_field(4, 1)
    with pytest.raises(ValueError):
        make_field(3, 0)


def test_make_field_is_lexicographically_smallest():
    for p, k in [(2, 4), (3, 3), (5, 2)]:
        F = make_field(p, k)
        code = sum(c * p ** i for i, c in enumerate(F.modulus[:-1]))
        for smaller in range(code):
            m = [(smaller // p ** i) % p for i in range(k)] + [1]
            assert not is_irreducible(m, p)
        assert make_field(p, k) is F


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, k):
    F = make_field(p, k)
    els = list(enumerate_field(F))
    zero, one = F.zero(), F.one()
    for a in els:
        assert a + zero == a
        assert a ** (p ** k) == a
        if a:
            assert a * a.inverse() == one
    for a, b in itertools.product(els, repeat=2):
        ops = field_ops(a, b)
        assert ops["add"] == b + a and ops["mul"] == b * a
        assert ops["sub"] + b == a
        if b:
            assert ops["div"] * b == a


@settings(max_examples=200)
@given(st.sampled_from(SMALL_FIELDS), st.data())
def test_associative_distributive(pk, data):
    F = make_field(*pk)
    codes = st.integers(0, F.order - 1)
    a, b, c = (F.element(data.draw(codes)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    # Frobenius is a ring homomorphism
    assert (a + b).frobenius() == a.frobenius() + b.frobenius()
    assert (a * b).frobenius() == a.frobenius() * b.frobenius()


def test_zero_inverse_and_mixed_fields():
    F = make_field(3, 2)
    with pytest.raises(ZeroDivisionError):
        F.zero().inverse()
    with pytest.raises(ValueError):
        F.one() + make_field(5, 1).one()
    with pytest.raises(ValueError):
        F.element(9)


def test_enumeration():
    assert len(list(enumerate_field(make_field(2, 2)))) == 4
    F9 = make_field(3, 2)
    els = list(enumerate_field(F9))
    assert len(els) == 9
    g = primitive_element(F9)
    assert g.multiplicative_order() == 8
    assert {(g ** i).code for i in range(8)} == {e.code for e in els if e}
    with pytest.raises(EnumerationBoundExceeded):
        next(enumerate_field(make_field(2, 24)))


def test_enumeration_bound_env(monkeypatch):
    monkeypatch.setenv("HALFZETA_ENUM_BOUND", "10")
    with pytest.raises(EnumerationBoundExceeded):
        next(enumerate_field(make_field(3, 3)))


def test_embedding():
    F9, F81 = make_field(3, 2), make_field(3, 4)
    assert embed(F9.one(), F81) == F81.one()
    g = primitive_element(F9)
    assert embed(g, F81).multiplicative_order() == g.multiplicative_order() == 8
    for a, b in itertools.product(enumerate_field(F9), repeat=2):
        assert embed(a * b, F81) == embed(a, F81) * embed(b, F81)
        assert embed(a + b, F81) == embed(a, F81) + embed(b, F81)
    with pytest.raises(ValueError):
        embed(F9.one(), make_field(3, 3))
    with pytest.raises(ValueError):
        embed(F9.one(), make_field(2, 4))


@pytest.mark.parametrize("p,k", [(2, 4), (3, 4), (5, 2), (7, 2)])
def test_log_tables_match_elementwise_arithmetic(p, k):
    F = make_field(p, k)
    T = field_tables(F)
    logs = T.all_logs()
    A, B = np.meshgrid(logs, logs, indexing="ij")
    add_codes = T.codes(T.add(A, B))
    mul_codes = T.codes(T.mul(A, B))
    for i, j in itertools.product(range(F.order), repeat=2):
        a, b = F.element(i), F.element(j)
        assert add_codes[i, j] == (a + b).code
        assert mul_codes[i, j] == (a * b).code


@pytest.mark.parametrize("q", [3, 9, 25, 27, 49, 81])
def test_square_root_counts(q):
    p = next(d for d in (3, 5, 7) if q % d == 0)
    k = round(np.log(q) / np.log(p))
    F = make_field(p, k)
    T = field_tables(F)
    squares = {}
    for y in enumerate_field(F):
        squares[(y * y).code] = squares.get((y * y).code, 0) + 1
    chi = T.quadratic_character(T.all_logs())
    total = 0
    for code in range(F.order):
        n = 1 + int(chi[code])
        assert squares.get(code, 0) == n
        total += n
    assert total == q
