"""Finite field F_q via precomputed tables, plus small dense linear algebra.

Elements are encoded as integers ``0..q-1``.  For prime ``q`` this is plain
modular arithmetic; for ``q = p^k`` an element ``c_0 + c_1 x + ...`` is
encoded as ``sum c_i p^i`` and multiplied modulo a Conway polynomial.

Matrices are tuples of row tuples and act on column vectors.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .coeff import _prime_power

# Conway polynomials, lowest degree coefficient first, monic leading term omitted.
CONWAY = {
    (2, 2): (1, 1),
    (2, 3): (1, 1, 0),
    (2, 4): (1, 1, 0, 0),
    (3, 2): (2, 2),
    (3, 3): (1, 2, 0),
    (5, 2): (2, 4),
    (7, 2): (3, 6),
}


class GF:
    """Arithmetic tables for F_q."""

    _cache: dict[int, "GF"] = {}

    def __new__(cls, q: int):
        if q in cls._cache:
            return cls._cache[q]
        pk = _prime_power(q)
        if pk is None:
            raise ValueError(f"q={q} is not a prime power")
        self = super().__new__(cls)
        self.q = q
        self.p, self.k = pk
        self._build()
        cls._cache[q] = self
        return self

    def _build(self):
        q, p, k = self.q, self.p, self.k
        if k == 1:
            self.add = [[(a + b) % p for b in range(q)] for a in range(q)]
            self.mul = [[(a * b) % p for b in range(q)] for a in range(q)]
        else:
            if (p, k) not in CONWAY:
                raise ValueError(f"no Conway polynomial tabulated for q={q}")
            red = CONWAY[(p, k)]

            def digits(x):
                return [(x // p**i) % p for i in range(k)]

            def enc(ds):
                return sum(d * p**i for i, d in enumerate(ds))

            self.add = [[enc([(x + y) % p for x, y in zip(digits(a), digits(b))])
                         for b in range(q)] for a in range(q)]

            def polymul(a, b):
                prod = [0] * (2 * k - 1)
                for i, x in enumerate(digits(a)):
                    for j, y in enumerate(digits(b)):
                        prod[i + j] = (prod[i + j] + x * y) % p
                for d in range(2 * k - 2, k - 1, -1):
                    c = prod[d]
                    if c:
                        prod[d] = 0
                        # x^k = -(red_0 + red_1 x + ...)
                        for i, r in enumerate(red):
                            prod[d - k + i] = (prod[d - k + i] - c * r) % p
                return enc(prod[:k])

            self.mul = [[polymul(a, b) for b in range(q)] for a in range(q)]
        self.neg = [next(b for b in range(q) if self.add[a][b] == 0) for a in range(q)]
        self.inv = [None] + [next(b for b in range(1, q) if self.mul[a][b] == 1) for a in range(1, q)]
        self.sub = [[self.add[a][self.neg[b]] for b in range(q)] for a in range(q)]

    def __reduce__(self):
        return (GF, (self.q,))

    def __repr__(self):
        return f"GF({self.q})"


# ---- dense linear algebra -------------------------------------------------

def zeros(rows: int, cols: int) -> tuple:
    return tuple((0,) * cols for _ in range(rows))


def identity(n: int) -> tuple:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def matmul(F: GF, A, B, inner: int | None = None):
    """Product of an ``r x n`` and ``n x c`` matrix; ``inner`` needed when ``r == 0``."""
    if not A:
        return ()
    n = len(A[0]) if inner is None else inner
    cols = len(B[0]) if B else 0
    add, mul = F.add, F.mul
    out = []
    for row in A:
        r = []
        for j in range(cols):
            s = 0
            for t in range(n):
                a = row[t]
                if a:
                    s = add[s][mul[a][B[t][j]]]
            r.append(s)
        out.append(tuple(r))
    return tuple(out)


def matvec(F: GF, A, x):
    add, mul = F.add, F.mul
    out = []
    for row in A:
        s = 0
        for a, b in zip(row, x):
            if a and b:
                s = add[s][mul[a][b]]
        out.append(s)
    return tuple(out)


def is_zero(A) -> bool:
    return all(not any(r) for r in A)


def rref(F: GF, rows):
    """Row-reduced echelon form; returns ``(rows, pivot_columns)``."""
    M = [list(r) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    add, mul, inv, neg = F.add, F.mul, F.inv, F.neg
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(M):
            break
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        s = inv[M[r][c]]
        M[r] = [mul[s][x] for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = neg[M[i][c]]
                Mi, Mr = M[i], M[r]
                M[i] = [add[a][mul[f][b]] for a, b in zip(Mi, Mr)]
        pivots.append(c)
        r += 1
    return [tuple(x) for x in M[:r]], pivots


def rank(F: GF, rows) -> int:
    return len(rref(F, rows)[1])


def nullspace(F: GF, rows, ncols: int):
    """Basis (list of tuples) of ``{x : rows @ x = 0}`` in ``F^ncols``."""
    R, piv = rref(F, rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    neg = F.neg
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for row, p in zip(R, piv):
            x[p] = neg[row[f]]
        basis.append(tuple(x))
    return basis


def is_invertible(F: GF, A) -> bool:
    return len(A) == (len(A[0]) if A else 0) and rank(F, A) == len(A)


def transpose(A, ncols: int | None = None):
    if not A:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*A))


def span_rref(F: GF, vectors, dim: int):
    """Echelon basis of the span of ``vectors`` in ``F^dim``."""
    if not vectors:
        return [], []
    return rref(F, vectors)


@lru_cache(maxsize=None)
def subspaces(q: int, n: int, k: int):
    """All ``k``-dim subspaces of ``F_q^n`` as RREF row tuples, with pivots."""
    out = []
    for piv in itertools.combinations(range(n), k):
        # free slots: row i, column c > piv[i] with c not a pivot
        slots = [(i, c) for i in range(k) for c in range(piv[i] + 1, n) if c not in piv]
        for vals in itertools.product(range(q), repeat=len(slots)):
            M = [[0] * n for _ in range(k)]
            for i, p in enumerate(piv):
                M[i][p] = 1
            for (i, c), v in zip(slots, vals):
                M[i][c] = v
            out.append((tuple(tuple(r) for r in M), piv))
    return tuple(out)


def all_matrices(q: int, rows: int, cols: int):
    for vals in itertools.product(range(q), repeat=rows * cols):
        yield tuple(tuple(vals[i * cols:(i + 1) * cols]) for i in range(rows))


def gl_order(q: int, n: int) -> int:
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out
