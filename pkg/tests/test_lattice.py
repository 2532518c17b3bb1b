import itertools

import pytest

from hallforge import suites
from hallforge.derived import Graded, corrupt_shift, discover_tilt
from hallforge.elem import add_into, scale, sub
from hallforge.lattice import (
    FAlgebra, LatticeAlgebra, LatticeConfig, distant_exponent, f_differential_expansion,
    f_gamma_product_check, lattice_tilt_hom, split_factorization_check,
)

from conftest import get_table, names


@pytest.fixture(scope="module")
def L(a2):
    return LatticeAlgebra(a2)


def test_k_group(L):
    assert L.mul(L.K((1, 0)), L.K((2, -1))) == L.K((3, -1))
    assert L.mul(L.K((1, 0)), L.K((-1, 0))) == L.one()


def test_adjacent_example(L, a2):
    S1, = names(a2, "S1")
    got = L.mul(L.z(1, S1), L.z(0, S1))
    want = dict(L.mul(L.z(0, S1), L.z(1, S1)))
    add_into(want, L.K((-1, 0)))
    assert got == want


def test_distant_example(L, a2):
    S1, S2 = names(a2, "S1", "S2")
    assert distant_exponent(3, 0) == 2
    got = L.mul(L.z(3, S1), L.z(0, S2))
    assert got == scale(L.mul(L.z(0, S2), L.z(3, S1)), a2.ground.vpow(-2))


def test_same_site_is_ringel_product(L, a2):
    S1, S2 = names(a2, "S1", "S2")
    got = L.mul(L.z(0, S1), L.z(0, S2))
    assert got == {(((0, a2.direct_sum(S1, S2)),), (0, 0)): a2.ground.one}


def test_z_monomial_examples(L, a2):
    S1, S2 = names(a2, "S1", "S2")
    for a in a2.objects_upto():
        assert L.z_monomial(Graded({0: a})) == L.z(0, a)
    assert L.z_monomial(Graded({})) == L.one()
    z = L.z_monomial(Graded({-1: S2, 0: S1}))
    assert len(z) == 1
    (sites, _), c = next(iter(z.items()))
    assert sites == ((-1, S2), (0, S1))
    # <S2,S2>^-1 [S1,S2]^-1 and one K_{S2}^-1 moved past Z0[S1]
    assert c == a2.ground.vpow(-3)


def test_shift_sigma(L, a2):
    S1, = names(a2, "S1")
    x = L.mul(L.z(0, S1), L.K((1, 1)))
    assert L.shift_sigma(x, 0) == x
    assert L.shift_sigma(x, 1) == L.mul(L.z(1, S1), L.K((-1, -1)))
    assert {k[1] for k in L.shift_sigma(x, 2)} == {k[1] for k in x}


def test_confluence_small_window():
    t = get_table("A2", 2, (2, 2))
    for rep in suites.lattice_confluence(t, range(-2, 3), total=1):
        assert rep.ok and rep.checked > 0, (rep.name, rep.failures[:3])


def test_printed_sign_fails_confluence():
    t = get_table("A2", 2, (2, 2))
    overlap, _ = suites.lattice_confluence(t, range(-1, 2), total=2, config=LatticeConfig(adjacent_parity=0))
    assert overlap.failures


def test_schedule_and_assoc_small():
    t = get_table("A2", 3, (1, 1))
    for rep in suites.lattice_associativity(t, range(-1, 2), total=2) + suites.shift_suite(t, range(-1, 2)):
        assert rep.ok and rep.checked > 0, (rep.name, rep.failures[:3])


def test_splice_a3():
    for rep in suites.splice_suite(get_table("A3", 2, (1, 1, 1))):
        assert rep.ok and rep.checked > 0


# ---- F(A) ------------------------------------------------------------------------

def test_f_examples(a2):
    F = FAlgebra(a2)
    S1, S2 = names(a2, "S1", "S2")
    assert F.mul(F.x(3, S1), F.x(0, S2)) == F.mul(F.x(0, S2), F.x(3, S1))
    got = F.mul(F.x(1, S1), F.x(0, S1))
    want = dict(F.mul(F.x(0, S1), F.x(1, S1)))
    add_into(want, F.one())
    assert got == want
    A = F.monomial(Graded({0: S1, 2: S2}))
    assert F.mul(A, F.one()) == A


def test_f_expansion_examples(a2):
    F = FAlgebra(a2)
    S1, = names(a2, "S1")
    for a in a2.objects_upto():
        X = Graded({0: a})
        assert f_differential_expansion(F, X) == F.monomial(X)
    X = Graded({0: S1, 1: S1})
    want = dict(F.monomial(X))
    add_into(want, F.one())
    assert f_differential_expansion(F, X) == want
    assert F.reversed_word(X) == want


def test_f_gamma_single_degree_is_hall(a2):
    F = FAlgebra(a2)
    for a, b in itertools.product(a2.objects_upto(total=1), repeat=2):
        rep = f_gamma_product_check(F, Graded({0: a}), Graded({0: b}), 2**16)
        assert rep.ok
        prod = F.mul(F.x(0, a), F.x(0, b))
        assert {k[0][1] if k else 0: c for k, c in prod.items()} == \
            {c: a2.ground.coeff(g) for c, g in a2.hall_products(a, b).items()}


# ---- derived invariance ------------------------------------------------------------

@pytest.fixture(scope="module")
def tilts(a2, a2op_big):
    return discover_tilt(a2, a2op_big, (0, 1))


def test_lattice_tilt_small_window(tilts):
    for F in tilts:
        rep = lattice_tilt_hom(F, range(0, 2))
        assert rep.ok and rep.checked > 0, rep.failures[:3]
        assert split_factorization_check(F).ok


def test_lattice_tilt_negative(tilts):
    F = corrupt_shift(tilts[0])
    assert not lattice_tilt_hom(F, range(0, 2)).ok


def test_identity_tilt(a2):
    from hallforge.derived import TiltTable

    F = TiltTable(a2, a2, {x: (x, 0) for x in a2.indecomposables})
    assert lattice_tilt_hom(F, range(-1, 1), objs=a2.objects_upto(total=1, nonzero=True)).ok
