from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from repring.cyclo import Cyc, conductor_degree, cyclotomic_poly
from repring.errors import NotPLocal
from repring.gf import gf_field
from repring.lift import BrauerLift


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    # degree is Euler phi
    assert conductor_degree(9) == 6
    assert conductor_degree(15) == 8


def test_zeta_relations():
    z = Cyc.zeta(3)
    assert z ** 3 == 1
    assert z ** 2 + z + 1 == 0
    assert Cyc.zeta(2) == -1
    assert Cyc.zeta(4) ** 2 == -1
    # sum over all m-th roots vanishes for m > 1
    for m in (2, 3, 4, 5, 6, 8):
        total = sum((Cyc.zeta(m, k) for k in range(m)), Cyc.from_rational(0))
        assert total == 0


def test_promotion_consistency():
    # zeta_3 = zeta_6^2
    assert Cyc.zeta(3) == Cyc.zeta(6, 2)
    assert Cyc.zeta(2) == Cyc.zeta(6, 3)
    a = Cyc.zeta(3) + Cyc.zeta(4)
    assert a.m == 12
    assert a - Cyc.zeta(4) == Cyc.zeta(3)


def test_rational_detection():
    z = Cyc.zeta(5)
    s = z + z ** 2 + z ** 3 + z ** 4
    assert s.as_rational() == Fraction(-1)
    assert (z * z.inverse()).as_rational() == 1
    assert Cyc.zeta(3).as_rational() is None


def test_scalar_mix():
    v = Fraction(1, 2) * Cyc.zeta(8) + 3
    v = v - 3
    v = v * 2
    assert v == Cyc.zeta(8)


def test_inverse_and_division():
    for m in (1, 3, 4, 5, 8, 12):
        v = Cyc.zeta(m) + 2
        w = v.inverse()
        assert v * w == 1
        assert (1 / v) == w
    with pytest.raises(ZeroDivisionError):
        Cyc.from_rational(0).inverse()


def test_json_roundtrip():
    v = Fraction(2, 3) * Cyc.zeta(12, 5) - Fraction(1, 7)
    obj = v.to_json()
    assert obj["conductor"] == 12
    assert Cyc.from_json(obj) == v


small_conductors = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12])
small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=6)


@settings(max_examples=60, deadline=None)
@given(small_conductors, st.data())
def test_cyc_ring_axioms(m, data):
    deg = conductor_degree(m)
    vec = st.lists(small_fractions, min_size=deg, max_size=deg)
    a = Cyc(m, data.draw(vec))
    b = Cyc(m, data.draw(vec))
    c = Cyc(m, data.draw(vec))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert a + (-a) == 0
    if not a.is_zero:
        assert a * a.inverse() == 1


# --- the lift between field roots of unity and cyclotomic roots


def test_lift_table_gf4():
    F = gf_field(2, 2)
    L = BrauerLift(F, 3)
    assert L.root == F.primitive
    assert L.lift(1) == 1
    assert L.lift(L.root) == Cyc.zeta(3)
    # omega + omega^2 = 1 in F_4 mirrors zeta + zeta^2 = -1 = 1 mod 2
    s = Cyc.zeta(3) + Cyc.zeta(3, 2)
    assert L.reduce(s) == 1


def test_lift_multiplicative():
    F = gf_field(3, 2)
    L = BrauerLift(F, 8)
    for j in range(8):
        for k in range(8):
            a, b = L.root_codes[j], L.root_codes[k]
            assert L.lift(F.mul(a, b)) == L.lift(a) * L.lift(b)


def test_reduce_rationals():
    F3 = gf_field(3, 1)
    L = BrauerLift(F3, 1)
    assert L.reduce_rational(Fraction(1, 2)) == 2
    assert L.reduce_rational(7) == 1
    with pytest.raises(NotPLocal):
        L.reduce_rational(Fraction(1, 3))


def test_reduce_is_ring_hom():
    F = gf_field(2, 2)
    L = BrauerLift(F, 3)
    vals = [Cyc.zeta(3), Cyc.zeta(3, 2) + 1, Cyc.from_rational(Fraction(1, 3)),
            Cyc.zeta(3) * Fraction(5, 7)]
    for u in vals:
        for v in vals:
            assert L.reduce(u + v) == F.add(L.reduce(u), L.reduce(v))
            assert L.reduce(u * v) == F.mul(L.reduce(u), L.reduce(v))


def test_reduce_rejects_non_local():
    F = gf_field(2, 2)
    L = BrauerLift(F, 3)
    with pytest.raises(NotPLocal):
        L.reduce(Cyc.from_rational(Fraction(3, 2)))
