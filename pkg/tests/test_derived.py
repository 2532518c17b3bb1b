import itertools

import pytest

from hallforge.derived import (
    Graded, TiltTable, apply_tilt, complex_cohomology, corrupt_shift, corrupt_tilt, discover_tilt,
    gamma_graded, graded_aut_count, graded_dim, graded_hom_dim, hom_ext_patterns_ok,
    iter_differentials, tilt_k0, triangle_g2, triangle_g2_direct, verify_tilt_heis,
)
from hallforge.quiver import BudgetExceeded, k0_add

from conftest import get_table, names


@pytest.fixture(scope="module")
def tilts(a2, a2op_big):
    return discover_tilt(a2, a2op_big, (0, 1))


def test_graded_basics(a2):
    S1, S2 = names(a2, "S1", "S2")
    X = Graded({-1: S2, 0: S1, 3: 0})
    assert X.degrees() == [-1, 0]
    assert X.shift(1) == Graded({-2: S2, -1: S1})
    assert not Graded({})
    assert graded_dim(a2, X) == (1, -1)


def test_graded_hom_dim(a2):
    S1, S2 = names(a2, "S1", "S2")
    objs = a2.objects_upto()
    for a, b in itertools.product(objs, repeat=2):
        A, B = Graded({0: a}), Graded({0: b})
        assert graded_hom_dim(a2, A, B, 0) == a2.hom_dim(a, b)
        assert graded_hom_dim(a2, A, B, 1) == a2.ext1_dim(a, b)
        assert graded_hom_dim(a2, A, B, 2) == 0
    X = Graded({-1: S2, 0: S1})
    assert graded_hom_dim(a2, X, X, 0) == 3


def test_graded_aut(a2):
    S1, S2 = names(a2, "S1", "S2")
    assert graded_aut_count(a2, Graded({})) == 1
    assert graded_aut_count(a2, Graded({-1: S2, 0: S1})) == 2
    q = a2.ground.q
    for m, n in itertools.product(a2.objects_upto(), repeat=2):
        assert graded_aut_count(a2, Graded({0: m})) == a2.aut_count(m)
        block = a2.aut_count(m) * a2.aut_count(n) * q ** a2.ext1_dim(n, m)
        assert graded_aut_count(a2, Graded({-1: m, 0: n})) == block


def test_triangle_g2(a2_any):
    t = a2_any
    S1, S2 = names(t, "S1", "S2")
    q = t.ground.q
    if q == 2:
        assert triangle_g2(t, S1, S2, S2, S1) == 2
        assert triangle_g2(t, S1, S1, 0, 0) == 1
    objs = t.objects_upto(total=2)
    for a, b in itertools.product(objs, repeat=2):
        if t.hom_dim(b, a) == 0:
            assert triangle_g2(t, a, b, b, a) == q ** t.ext1_dim(a, b)
        for (m, n) in t.gamma_terms(a, b):
            assert triangle_g2(t, a, b, m, n) == t.ground.coeff(triangle_g2_direct(t, a, b, m, n))


def test_gamma_graded_single_degree(a2):
    S1, S2, P = names(a2, "S1", "S2", "P")
    assert gamma_graded(a2, Graded({0: S2}), Graded({0: S1}), Graded({0: P})) == 1
    objs = a2.objects_upto()
    for a, b in itertools.product(objs, repeat=2):
        d = k0_add(a2.dim(a), a2.dim(b))
        if not a2.in_bound(d):
            continue
        for c in a2.by_dim[d]:
            assert gamma_graded(a2, Graded({0: a}), Graded({0: b}), Graded({0: c})) == a2.hall_g(a, b, c)


def test_gamma_graded_zero_first(a2):
    objs = a2.objects_upto(total=2)
    for b, c in itertools.product(objs, repeat=2):
        want = 1 if b == c else 0
        assert gamma_graded(a2, Graded({}), Graded({0: b}), Graded({0: c})) == want


def test_gamma_graded_matches_gamma4(a2_any):
    t = a2_any
    objs = t.objects_upto(total=2)
    for a, b in itertools.product(objs, repeat=2):
        for m in t.objects_upto(dim_cap=t.dim(b)):
            for n in t.objects_upto(dim_cap=t.dim(a)):
                got = gamma_graded(t, Graded({0: a}), Graded({-1: b}), Graded({-1: m, 0: n}))
                assert t.ground.coeff(got) == t.gamma4(a, b, m, n)


def test_gamma_graded_budget(a2):
    P2 = a2.lookup("P^2")
    with pytest.raises(BudgetExceeded):
        gamma_graded(a2, Graded({0: P2}), Graded({0: P2, 1: P2}), Graded({0: P2}), budget=4)


def test_differentials_and_cohomology(a2):
    S1, = names(a2, "S1")
    X = Graded({0: S1, 1: S1})
    ds = list(iter_differentials(a2, X))
    assert len(ds) == a2.ground.q
    Hs = sorted((complex_cohomology(a2, X, d) for d in ds), key=lambda H: len(H.items))
    assert Hs[0] == Graded({}) and Hs[-1] == X


def test_discover_identity_and_empty(a2):
    found = discover_tilt(a2, a2, [0])
    ident = {x: (x, 0) for x in a2.indecomposables}
    assert any(F.mapping == ident for F in found)
    assert discover_tilt(a2, a2, []) == []
    F = TiltTable(a2, a2, ident)
    for a in a2.objects_upto():
        assert apply_tilt(F, a) == Graded({0: a})
    assert verify_tilt_heis(F).ok


def test_discovered_tilts(tilts, a2):
    assert tilts
    one_shift = [F for F in tilts if sorted(F.shifts().values()) == [0, 0, 1]]
    assert len(one_shift) == 1
    for F in tilts:
        assert hom_ext_patterns_ok(F)
        rep = verify_tilt_heis(F)
        assert rep.ok, rep.failures[:3]


def test_tilt_k0_sign(tilts, a2):
    F = next(F for F in tilts if sorted(F.shifts().values()) == [0, 0, 1])
    for x, (y, s) in F.mapping.items():
        want = tuple((-1) ** s * v for v in F.target.dim(y))
        assert tilt_k0(F, a2.dim(x)) == want


def test_negative_controls(tilts):
    for F in tilts:
        assert not verify_tilt_heis(corrupt_tilt(F)).ok
        assert not verify_tilt_heis(corrupt_shift(F)).ok


def test_tilt_json_roundtrip(tilts, a2, a2op_big):
    for F in tilts:
        G = TiltTable.from_json(F.to_json(), a2, a2op_big)
        assert G.mapping == F.mapping


def test_tilt_table_validation(a2):
    S1, S2 = names(a2, "S1", "S2")
    with pytest.raises(ValueError):
        TiltTable(a2, a2, {S1: (S1, 0)})
    m = {x: (S1, 0) for x in a2.indecomposables}
    with pytest.raises(ValueError):
        TiltTable(a2, a2, m)
