import itertools
import json
from fractions import Fraction

import pytest

from hallforge import ff
from hallforge.coeff import GroundParams
from hallforge.quiver import (
    BudgetExceeded, CategoryTable, ConfigError, InvalidQuiver, OutOfTable, Quiver, Rep,
    build_table, k0_add, table_from_config,
)

from conftest import get_table, names

A2 = Quiver.from_labels(["1", "2"], [["1", "2"]])
KRONECKER = Quiver.from_labels(["1", "2"], [["1", "2"], ["1", "2"]])


def test_a2_classes_small_bound():
    for q in (2, 3):
        t = build_table(A2, q, (1, 1), names={"P": [1, 1]})
        assert sorted(t.name(c) for c in t.objects_upto()) == sorted(["0", "S1", "S2", "P", "S2+S1"])


def test_zero_bound():
    t = build_table(A2, 2, (0, 0))
    assert len(t) == 1 and t.name(0) == "0"


def test_invalid_quivers():
    with pytest.raises(InvalidQuiver):
        Quiver.from_labels(["1", "2"], [["1", "2"], ["2", "1"]])
    with pytest.raises(InvalidQuiver):
        Quiver.from_labels(["1"], [["1", "1"]])
    with pytest.raises(InvalidQuiver):
        Quiver.from_labels(["1", "2"], [["1", "3"]])
    with pytest.raises(InvalidQuiver):
        Quiver.from_labels(["1", "1"], [])


def test_config_errors():
    with pytest.raises(ConfigError):
        table_from_config("no-such-config")
    with pytest.raises(ConfigError):
        table_from_config({"vertices": ["1"], "arrows": [], "bound": [1, 1]})
    with pytest.raises(ConfigError):
        table_from_config({"vertices": ["1", "2"], "arrows": [["1", "2"]], "names": {"X": [1, 1, 1]}})
    with pytest.raises(ConfigError):
        table_from_config({"vertices": ["1", "2"], "arrows": [["2", "1"], ["1", "2"]]})


def test_budget():
    with pytest.raises(BudgetExceeded):
        build_table(A2, 2, (2, 2), budget=10)


def test_classify_examples(a2):
    S1, S2, P = names(a2, "S1", "S2", "P")
    assert a2.classify(Rep((1, 1), (((0,),),))) == a2.direct_sum(S1, S2)
    assert a2.classify(Rep((1, 1), (((1,),),))) == P
    assert a2.classify(Rep((0, 0), ((),))) == 0
    with pytest.raises(OutOfTable):
        a2.classify(Rep((3, 0), (((), (), ()),)))


def test_hom_ext_examples(a2):
    S1, S2, P = names(a2, "S1", "S2", "P")
    assert a2.hom_dim(P, S1) == 1
    assert a2.hom_dim(S1, P) == 0
    assert a2.ext1_dim(S1, S2) == 1
    assert a2.ext1_dim(S2, S1) == 0
    for x in a2.objects_upto():
        assert a2.hom_dim(x, 0) == 0 and a2.ext1_dim(0, x) == 0


def test_aut_examples(a2, a2_q3):
    assert a2.aut_count(0) == 1
    assert a2.aut_count(a2.lookup("S1")) == 1
    assert a2_q3.aut_count(a2_q3.lookup("S2+S1")) == 4


def test_euler_examples(a2):
    g = a2.ground
    e1, e2 = (1, 0), (0, 1)
    assert a2.euler((0, 0), e2) == g.one
    assert a2.euler(e1, e2) == g.coeff(0, Fraction(1, 2))
    assert a2.sym(e1, e2) == g.vpow(-1)


def test_hall_examples(a2):
    S1, S2, P = names(a2, "S1", "S2", "P")
    assert a2.hall_g(S2, S1, P) == 1
    assert a2.hall_g(S1, S2, P) == 0
    assert a2.hall_g(S1, S1, a2.lookup("S1^2")) == 3
    for b in a2.objects_upto():
        for c in a2.objects_upto():
            assert a2.hall_g(0, b, c) == (1 if b == c else 0)


def test_gamma_examples(a2, a2_q3):
    S1, S2 = names(a2, "S1", "S2")
    assert a2.gamma4(S1, S1, 0, 0) == 1
    t = a2_q3
    s1 = t.lookup("S1")
    assert t.gamma4(s1, s1, 0, 0) == t.ground.coeff(Fraction(1, 2))
    # Hom(B, A) = 0 forces phi = 0
    assert a2.gamma4(S1, S2, S2, S1) == 1


def test_subobject_examples(a2):
    S1, S2, P = names(a2, "S1", "S2", "P")
    assert a2.subobjects(0) == [(0, 0, 1)]
    assert sorted(a2.subobjects(P)) == sorted([(0, P, 1), (S2, S1, 1), (P, 0, 1)])
    subs = a2.subobjects(a2.direct_sum(S1, S2))
    assert (S1, S2, 1) in subs and (S2, S1, 1) in subs


def test_direct_sum_decompose(a2):
    S1, S2, P = names(a2, "S1", "S2", "P")
    assert a2.direct_sum(S1, S2) != P
    for a, b in itertools.product(a2.objects_upto(), repeat=2):
        if a2.in_bound(k0_add(a2.dim(a), a2.dim(b))):
            assert a2.direct_sum(a, 0) == a
            assert a2.decompose(a2.direct_sum(a, b)) == tuple(sorted(a2.decompose(a) + a2.decompose(b)))
    with pytest.raises(OutOfTable):
        a2.direct_sum(a2.lookup("P^2"), S1)


@pytest.mark.parametrize("key", [("A2", 2, (2, 2)), ("A2", 3, (2, 2)), ("A3", 2, (1, 1, 1))])
def test_mass_formula(key):
    # sum over classes of dim d of |GL_d| / |Aut C| counts all representations
    t = get_table(*key)
    q = t.ground.q
    for d, cs in t.by_dim.items():
        gl = 1
        for x in d:
            gl *= ff.gl_order(q, x)
        nvars = sum(d[s] * d[t2] for s, t2 in t.quiver.arrows)
        assert sum(Fraction(gl, t.aut_count(c)) for c in cs) == q**nvars


def test_exhaustive_build_agrees():
    fast = build_table(A2, 2, (2, 2), names={"P": [1, 1]})
    slow = build_table(A2, 2, (2, 2), names={"P": [1, 1]}, exhaustive=True)
    assert [c.name for c in fast.classes] == [c.name for c in slow.classes]


def test_kronecker_dim11():
    # one indecomposable per point of P^1(F_q)
    for q in (2, 3):
        t = build_table(KRONECKER, q, (1, 1))
        assert len([x for x in t.indecomposables if t.dim(x) == (1, 1)]) == q + 1


def test_aut_structural_matches_enumeration(a2_any):
    t = a2_any
    for c in t.objects_upto():
        assert t.aut_count_structural(c) == t.aut_count_enumerated(c)


def test_hall_sum_rule(a2):
    # Riedtmann: sum_C g_AB^C |Aut A||Aut B| / |Aut C| = |Ext^1(B,A)| / |Hom(B,A)|
    q = a2.ground.q
    for a, b in itertools.product(a2.objects_upto(), repeat=2):
        d = k0_add(a2.dim(a), a2.dim(b))
        if not a2.in_bound(d):
            continue
        s = sum(Fraction(a2.hall_g(a, b, c) * a2.aut_count(a) * a2.aut_count(b), a2.aut_count(c))
                for c in a2.by_dim[d])
        assert s == Fraction(q ** a2.ext1_dim(b, a), q ** a2.hom_dim(b, a))


def test_json_roundtrip(a2):
    data = json.loads(json.dumps(a2.to_json()))
    t = CategoryTable.from_json(data)
    assert [c.name for c in t.classes] == [c.name for c in a2.classes]
    assert t.cache_key() == a2.cache_key()
    data["key"] = "deadbeef"
    with pytest.raises(ValueError):
        CategoryTable.from_json(data)


def test_cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("HALLFORGE_CACHE_DIR", str(tmp_path))
    t1 = table_from_config("A2", q=2, bound=(1, 1))
    assert list(tmp_path.iterdir())
    t2 = table_from_config("A2", q=2, bound=(1, 1))
    assert [c.name for c in t1.classes] == [c.name for c in t2.classes]


def test_ground_shared():
    assert get_table("A2", 2, (2, 2)).ground is GroundParams(2)
