"""Brute-force counts used as independent oracles for the table's formulas.

Nothing here goes through the linear-algebra shortcuts of ``quiver``: homs
and automorphisms are counted by trying every tuple of matrices, and
extension groups via Riedtmann's formula over subobject counts.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import ff
from .heis import CheckReport
from .quiver import CategoryTable, Rep, k0_add


def _mm(F, A, B, r: int, n: int, c: int) -> tuple:
    """``r x n`` times ``n x c`` with explicit shapes (empty dims allowed)."""
    add, mul = F.add, F.mul
    out = []
    for i in range(r):
        row = []
        for j in range(c):
            s = 0
            for k in range(n):
                s = add[s][mul[A[i][k]][B[k][j]]]
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def _intertwines(F, quiver, M: Rep, N: Rep, f) -> bool:
    for (s, t), a, b in zip(quiver.arrows, M.mats, N.mats):
        # f_t a == b f_s  (a: M_s -> M_t, b: N_s -> N_t)
        lhs = _mm(F, f[t], a, N.dims[t], M.dims[t], M.dims[s])
        rhs = _mm(F, b, f[s], N.dims[t], N.dims[s], M.dims[s])
        if lhs != rhs:
            return False
    return True


def _all_maps(table: CategoryTable, M: Rep, N: Rep, invertible: bool = False):
    q = table.ground.q
    F = table.field
    per = []
    for m, n in zip(M.dims, N.dims):
        mats = list(ff.all_matrices(q, n, m))
        if invertible:
            mats = [x for x in mats if m == 0 or ff.is_invertible(F, x)]
        per.append(mats)
    return itertools.product(*per)


def brute_hom_count(table: CategoryTable, a: int, b: int) -> int:
    F, Q = table.field, table.quiver
    M, N = table.classes[a].rep, table.classes[b].rep
    return sum(1 for f in _all_maps(table, M, N) if _intertwines(F, Q, M, N, f))


def brute_aut_count(table: CategoryTable, a: int) -> int:
    F, Q = table.field, table.quiver
    M = table.classes[a].rep
    return sum(1 for f in _all_maps(table, M, M, invertible=True) if _intertwines(F, Q, M, M, f))


def riedtmann_ext_count(table: CategoryTable, a: int, b: int, hom_count: int) -> Fraction:
    """``|Ext^1(A,B)| = |Hom(A,B)| sum_C g(B sub, A quot; C) |Aut A||Aut B| / |Aut C|``."""
    d = k0_add(table.dim(a), table.dim(b))
    total = Fraction(0)
    for c in table.by_dim.get(d, []):
        g = table.hall_g(b, a, c)
        if g:
            total += Fraction(g * table.aut_count(a) * table.aut_count(b), table.aut_count(c))
    return total * hom_count


def oracle_suite(table: CategoryTable, objs=None) -> list[CheckReport]:
    """hom / ext / aut / Euler-form closed formulas against brute-force counts."""
    t = table
    q = t.ground.q
    objs = objs if objs is not None else t.objects_upto()
    homs = CheckReport("oracle-hom")
    exts = CheckReport("oracle-ext")
    auts = CheckReport("oracle-aut")
    euler = CheckReport("oracle-euler")
    for a in objs:
        auts.record(brute_aut_count(t, a) == t.aut_count(a), {"obj": t.name(a)})
        for b in objs:
            inst = {"pair": [t.name(a), t.name(b)]}
            h = brute_hom_count(t, a, b)
            homs.record(h == q ** t.hom_dim(a, b), inst)
            if t.in_bound(k0_add(t.dim(a), t.dim(b))):
                e = riedtmann_ext_count(t, a, b, h)
                exts.record(e == q ** t.ext1_dim(a, b), inst)
                # <A,B>^2 = |Hom(A,B)| / |Ext^1(A,B)|
                lhs = t.euler(t.dim(a), t.dim(b)) ** 2
                euler.record(lhs == t.ground.coeff(Fraction(h) / e), inst)
    return [homs, exts, auts, euler]
