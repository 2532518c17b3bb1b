import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from hallforge import ff

QS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49]


@pytest.mark.parametrize("q", QS)
def test_field_axioms_exhaustive(q):
    F = ff.GF(q)
    add, mul = F.add, F.mul
    els = range(q)
    for a in els:
        assert add[a][0] == a and mul[a][1] == a
        assert any(add[a][b] == 0 for b in els)
        if a:
            assert sum(1 for b in els if mul[a][b] == 1) == 1
    if q <= 9:
        for a, b, c in itertools.product(els, repeat=3):
            assert mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]]
            assert mul[mul[a][b]][c] == mul[a][mul[b][c]]


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25])
def test_multiplicative_group_cyclic(q):
    # Conway polynomials are primitive: x (encoded as p) generates F_q^*
    F = ff.GF(q)
    x, seen, cur = F.p, set(), 1
    for _ in range(q - 1):
        cur = F.mul[cur][x]
        seen.add(cur)
    assert len(seen) == q - 1


def test_untabulated_field():
    with pytest.raises(ValueError):
        ff.GF(6)


@pytest.mark.parametrize("q,n", [(2, 1), (2, 2), (3, 2), (2, 3)])
def test_gl_order_matches_enumeration(q, n):
    F = ff.GF(q)
    count = sum(1 for A in ff.all_matrices(q, n, n) if ff.is_invertible(F, A))
    assert count == ff.gl_order(q, n)


def gaussian_binomial(q, n, k):
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@pytest.mark.parametrize("q,n", [(2, 3), (3, 3), (2, 4), (4, 2)])
def test_subspace_counts(q, n):
    for k in range(n + 1):
        subs = list(ff.subspaces(q, n, k))
        assert len(subs) == gaussian_binomial(q, n, k)
        assert len(set(s[0] for s in subs)) == len(subs)


@st.composite
def matrices(draw, q=3):
    r = draw(st.integers(1, 4))
    c = draw(st.integers(1, 4))
    return tuple(tuple(draw(st.integers(0, q - 1)) for _ in range(c)) for _ in range(r)), c


@settings(max_examples=60)
@given(matrices())
def test_rank_nullity(mc):
    A, c = mc
    F = ff.GF(3)
    ns = ff.nullspace(F, A, c)
    assert ff.rank(F, A) + len(ns) == c
    for x in ns:
        assert all(v == 0 for v in ff.matvec(F, A, x))


def test_matmul_identity_and_empty():
    F = ff.GF(5)
    A = ((1, 2), (3, 4), (0, 1))
    assert ff.matmul(F, A, ff.identity(2)) == A
    assert ff.matmul(F, ff.identity(3), A) == A
    # 0 x 2 times 2 x 3 is the empty matrix
    assert ff.matmul(F, (), A[:2], inner=2) == ()
    assert math.prod(ff.gl_order(2, n) for n in (0,)) == 1
