from fractions import Fraction

import pytest

from repring.brauer import (
    brauer_data,
    cartan_via_endomorphisms,
    induce_class_function,
    splitting_field,
)
from repring.cyclo import Cyc
from repring.errors import (
    NonIntegralDecomposition,
    NonSplitCharPoly,
    NotSubgroup,
)
from repring.gf import gf_field
from repring.groups import (
    alternating_group,
    cyclic_group,
    dihedral_group,
    direct_product,
    quaternion_group,
    symmetric_group,
)


def rational_rows(rows):
    return [[v.as_rational() for v in row] for row in rows]


def test_splitting_fields():
    cases = [
        (symmetric_group(3), 2, (2, 2), 3),
        (symmetric_group(3), 3, (3, 1), 2),
        (symmetric_group(4), 2, (2, 2), 3),
        (symmetric_group(4), 3, (3, 2), 4),
        (cyclic_group(7), 2, (2, 3), 7),
        (cyclic_group(5), 5, (5, 1), 1),
        (symmetric_group(3), 5, (5, 2), 6),
    ]
    for G, p, (ep, ed), em in cases:
        F, lift, m = splitting_field(G, p)
        assert (F.p, F.d) == (ep, ed)
        assert m == em
        assert lift.root_codes[0] == 1


def test_s3_mod2_tables():
    bd = brauer_data(symmetric_group(3), 2)
    assert [s.dim for s in bd.simples] == [1, 2]
    assert rational_rows(bd.phi) == [[1, 1], [2, -1]]
    assert rational_rows(bd.Phi) == [[2, 2], [2, -1]]
    assert bd.cartan == ((2, 0), (0, 1))
    assert bd.elementary_divisors() == (1, 2)
    assert sorted(bd.centralizer_p_parts()) == [1, 2]


def test_s3_mod3_tables():
    bd = brauer_data(symmetric_group(3), 3)
    assert rational_rows(bd.phi) == [[1, 1], [1, -1]]
    assert rational_rows(bd.Phi) == [[3, 1], [3, -1]]
    assert bd.cartan == ((2, 1), (1, 2))
    assert bd.elementary_divisors() == (1, 3)


def test_s4_mod2_tables():
    bd = brauer_data(symmetric_group(4), 2)
    assert [s.dim for s in bd.simples] == [1, 2]
    assert rational_rows(bd.phi) == [[1, 1], [2, -1]]
    assert rational_rows(bd.Phi) == [[8, 2], [8, -1]]
    assert bd.cartan == ((4, 2), (2, 3))
    assert bd.elementary_divisors() == (1, 8)
    assert sorted(bd.centralizer_p_parts()) == [1, 8]


def test_s4_mod3_tables():
    bd = brauer_data(symmetric_group(4), 3)
    assert [s.dim for s in bd.simples] == [1, 1, 3, 3]
    # classes in column order: 1, (12)(34), (12), (1234)
    assert rational_rows(bd.phi) == [[1, 1, 1, 1],
                                     [1, 1, -1, -1],
                                     [3, -1, 1, -1],
                                     [3, -1, -1, 1]]
    assert bd.cartan == ((2, 1, 0, 0), (1, 2, 0, 0),
                         (0, 0, 1, 0), (0, 0, 0, 1))
    assert bd.elementary_divisors() == (1, 1, 1, 3)
    assert bd.projective_dims == (3, 3, 3, 3)


def test_a4_mod2_tables():
    bd = brauer_data(alternating_group(4), 2)
    assert [s.dim for s in bd.simples] == [1, 1, 1]
    z = Cyc.zeta(3)
    assert list(bd.phi[1]) == [Cyc.coerce(1), z, z * z]
    assert list(bd.phi[2]) == [Cyc.coerce(1), z * z, z]
    assert bd.cartan == ((2, 1, 1), (1, 2, 1), (1, 1, 2))
    assert bd.elementary_divisors() == (1, 1, 4)


def test_a4_mod3_tables():
    bd = brauer_data(alternating_group(4), 3)
    assert rational_rows(bd.phi) == [[1, 1], [3, -1]]
    assert bd.cartan == ((3, 0), (0, 1))
    assert bd.elementary_divisors() == (1, 3)


def test_product_and_cyclic_tables():
    bd = brauer_data(direct_product(symmetric_group(3), cyclic_group(2)), 2)
    assert bd.cartan == ((4, 0), (0, 2))
    assert bd.elementary_divisors() == (2, 4)
    bd = brauer_data(cyclic_group(6), 2)
    assert bd.cartan == ((2, 0, 0), (0, 2, 0), (0, 0, 2))
    bd = brauer_data(cyclic_group(6), 3)
    assert bd.cartan == ((3, 0), (0, 3))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_cyclic_p_cartan_is_p(p):
    bd = brauer_data(cyclic_group(p), p)
    assert bd.cartan == ((p,),)
    assert bd.elementary_divisors() == (p,)


CORPUS = [
    (symmetric_group(3), 2), (symmetric_group(3), 3),
    (symmetric_group(4), 2), (symmetric_group(4), 3),
    (alternating_group(4), 2), (alternating_group(4), 3),
    (dihedral_group(8), 2), (quaternion_group(), 2),
    (cyclic_group(6), 2), (cyclic_group(6), 3),
    (cyclic_group(5), 2), (cyclic_group(4), 2),
    (direct_product(symmetric_group(3), cyclic_group(2)), 2),
    (direct_product(cyclic_group(3), cyclic_group(3)), 3),
]


@pytest.mark.parametrize("G,p", CORPUS,
                         ids=[f"{g.name}-p{p}" for g, p in CORPUS])
def test_structural_invariants(G, p):
    bd = brauer_data(G, p)
    n = len(bd.simples)
    assert n == len(G.p_regular_classes(p))
    # trivial module sorts first
    assert bd.simples[0].dim == 1
    assert all(v == 1 for v in bd.phi[0])
    # identity column carries the dimensions
    assert [row[0].as_rational() for row in bd.phi] == \
        [s.dim for s in bd.simples]
    for s in bd.simples:
        assert s.multiplicity_in_regular == s.dim
    # Cartan symmetric, SNF matches centralizer p-parts as multisets
    assert bd.cartan == tuple(tuple(bd.cartan[j][i] for j in range(n))
                              for i in range(n))
    assert sorted(bd.elementary_divisors()) == \
        sorted(bd.centralizer_p_parts())
    assert sum(pd * s.dim for pd, s in
               zip(bd.projective_dims, bd.simples)) == G.order


@pytest.mark.parametrize("G,p", [(cyclic_group(5), 2),
                                 (cyclic_group(7), 3),
                                 (symmetric_group(3), 5)])
def test_coprime_order_semisimple(G, p):
    # p does not divide |G|: projectives are simple, Cartan is identity
    bd = brauer_data(G, p)
    n = len(bd.simples)
    assert bd.cartan == tuple(tuple(1 if i == j else 0 for j in range(n))
                              for i in range(n))
    assert bd.Phi == bd.phi


def test_phi_reduces_to_trace():
    bd = brauer_data(symmetric_group(4), 2)
    F = bd.F
    for s in bd.simples:
        for k, x in enumerate(bd.class_reps):
            mat = s.module.element_matrix(bd.G, x)
            tr = 0
            for i in range(s.dim):
                tr = F.add(tr, mat[i][i])
            assert bd.lift.reduce(s.phi[k]) == tr


def test_endomorphism_route_matches_pairing_route():
    for G, p in [(symmetric_group(3), 2), (symmetric_group(3), 3),
                 (symmetric_group(4), 2), (symmetric_group(4), 3),
                 (alternating_group(4), 2), (alternating_group(4), 3),
                 (quaternion_group(), 2), (cyclic_group(6), 2)]:
        bd = brauer_data(G, p)
        assert cartan_via_endomorphisms(bd) == bd.cartan


def test_decompose_tensor_square():
    bd = brauer_data(symmetric_group(4), 2)
    row = [bd.phi[1][i] * bd.phi[1][i] for i in range(2)]
    assert bd.decompose(row) == [2, 1]


def test_decompose_rejects_non_integral():
    bd = brauer_data(symmetric_group(3), 2)
    with pytest.raises(NonIntegralDecomposition):
        bd.decompose([Cyc.coerce(1), Cyc.coerce(0)])
    loose = bd.decompose([Cyc.coerce(1), Cyc.coerce(0)],
                         require_integral=False)
    assert [v.as_rational() for v in loose] == \
        [Fraction(1, 3), Fraction(1, 3)]


def test_decompose_roundtrips_projectives():
    bd = brauer_data(symmetric_group(4), 3)
    for t, row in enumerate(bd.Phi):
        coeffs = bd.decompose(row)
        assert coeffs == list(bd.cartan[t])


def test_induced_character_of_cyclic_line():
    S3 = symmetric_group(3)
    C3 = S3.generated_subgroup([(1, 2, 0)])
    z = Cyc.zeta(3)
    vals = {(0, 1, 2): Cyc.coerce(1), (1, 2, 0): z, (2, 0, 1): z * z}
    ind = induce_class_function(S3, C3, vals)
    assert [v.as_rational() for v in ind] == [2, 0, -1]


def test_induce_requires_subgroup():
    with pytest.raises(NotSubgroup):
        induce_class_function(symmetric_group(4),
                              symmetric_group(3),
                              {e: Cyc.coerce(1)
                               for e in symmetric_group(3).elements})


def test_nonsplit_charpoly_raises():
    from repring.brauer import _phi_value
    from repring.lift import BrauerLift
    F = gf_field(2, 1)
    lift = BrauerLift(F, 1)
    with pytest.raises(NonSplitCharPoly):
        _phi_value(lift, F, [[0, 1], [1, 1]])


def test_brauer_data_memoized():
    a = brauer_data(symmetric_group(3), 2)
    b = brauer_data(symmetric_group(3), 2)
    assert a is b
    c = brauer_data(symmetric_group(3), 2, seed=99)
    assert c is not a
    assert c.cartan == a.cartan
