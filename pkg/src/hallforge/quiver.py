"""Representations of an acyclic quiver over F_q, classified up to a dimension bound.

``build_table`` enumerates every isomorphism class with dimension vector
below a componentwise bound and stores one canonical representative per
class.  All counting data used by the algebra modules comes from here:
Hom/Ext^1 dimensions, automorphism group orders, Hall numbers ``g_AB^C``
and the four-term counts ``gamma_AB^MN``.

Classes are referred to by integer ids; id 0 is always the zero object.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import os
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import ff
from .coeff import Coeff, GroundParams

CACHE_VERSION = 1
DEFAULT_BUDGET = 2_000_000
# End(A) spaces up to this many elements are enumerated when counting Aut(A)
AUT_ENUM_CAP = 20_000


class InvalidQuiver(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class OutOfTable(LookupError):
    """An object (or a product) falls outside the table's dimension bound."""


class ConfigError(ValueError):
    pass


K0 = tuple  # a K_0 class: tuple of ints indexed by vertices


def k0_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def k0_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def k0_neg(a):
    return tuple(-x for x in a)


def k0_scale(c, a):
    return tuple(c * x for x in a)


def k0_leq(a, b):
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple  # pairs of vertex indices (source, target)

    def __post_init__(self):
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise InvalidQuiver("duplicate vertex labels")
        for s, t in self.arrows:
            if not (0 <= s < n and 0 <= t < n):
                raise InvalidQuiver(f"arrow ({s},{t}) references unknown vertex")
        # Kahn's algorithm; leftover vertices lie on a cycle
        indeg = [0] * n
        for _, t in self.arrows:
            indeg[t] += 1
        ready = [v for v in range(n) if indeg[v] == 0]
        seen = 0
        while ready:
            v = ready.pop()
            seen += 1
            for s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        ready.append(t)
        if seen != n:
            raise InvalidQuiver("quiver has an oriented cycle")

    @classmethod
    def from_labels(cls, vertices, arrows) -> "Quiver":
        vertices = tuple(str(v) for v in vertices)
        idx = {v: i for i, v in enumerate(vertices)}
        try:
            arr = tuple((idx[str(s)], idx[str(t)]) for s, t in arrows)
        except KeyError as e:
            raise InvalidQuiver(f"arrow endpoint {e} is not a vertex") from None
        return cls(vertices, arr)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def euler_exp(self, a, b) -> int:
        """Exponent of v in <a,b>: sum a_i b_i - sum over arrows i->j of a_i b_j."""
        return sum(x * y for x, y in zip(a, b)) - sum(a[s] * b[t] for s, t in self.arrows)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices),
                "arrows": [[self.vertices[s], self.vertices[t]] for s, t in self.arrows]}


@dataclass(frozen=True)
class Rep:
    """A representation: vertex dimensions and one matrix per arrow (target x source)."""

    dims: tuple
    mats: tuple

    def key(self):
        return (self.dims, self.mats)


def zero_rep(quiver: Quiver, dims) -> Rep:
    return Rep(tuple(dims), tuple(ff.zeros(dims[t], dims[s]) for s, t in quiver.arrows))


def direct_sum_rep(quiver: Quiver, M: Rep, N: Rep) -> Rep:
    dims = k0_add(M.dims, N.dims)
    mats = []
    for a, (s, t) in enumerate(quiver.arrows):
        rows = [tuple(r) + (0,) * N.dims[s] for r in M.mats[a]]
        rows += [(0,) * M.dims[s] + tuple(r) for r in N.mats[a]]
        mats.append(tuple(rows))
    return Rep(dims, tuple(mats))


# ---- Hom / Ext via the standard resolution ---------------------------------

def _hom_system(F: ff.GF, quiver: Quiver, M: Rep, N: Rep):
    """Matrix of (f_i) -> (N_a f_s - f_t M_a)_a; columns index the f_i entries."""
    offs, n = [], 0
    for i in range(quiver.n):
        offs.append(n)
        n += N.dims[i] * M.dims[i]
    neg = F.neg
    rows = []
    for a, (s, t) in enumerate(quiver.arrows):
        Na, Ma = N.mats[a], M.mats[a]
        for r in range(N.dims[t]):
            for c in range(M.dims[s]):
                row = [0] * n
                # (N_a f_s)[r][c] = sum_k N_a[r][k] f_s[k][c]
                for k in range(N.dims[s]):
                    x = Na[r][k]
                    if x:
                        row[offs[s] + k * M.dims[s] + c] = F.add[row[offs[s] + k * M.dims[s] + c]][x]
                # -(f_t M_a)[r][c] = -sum_k f_t[r][k] M_a[k][c]
                for k in range(M.dims[t]):
                    x = Ma[k][c]
                    if x:
                        j = offs[t] + r * M.dims[t] + k
                        row[j] = F.add[row[j]][neg[x]]
                rows.append(row)
    return rows, n, offs


def hom_ext_dims(F: ff.GF, quiver: Quiver, M: Rep, N: Rep) -> tuple[int, int]:
    rows, n, _ = _hom_system(F, quiver, M, N)
    rk = ff.rank(F, rows) if rows and n else 0
    return n - rk, len(rows) - rk


def hom_basis(F: ff.GF, quiver: Quiver, M: Rep, N: Rep):
    """Basis of Hom(M, N) as flat coordinate vectors, plus the vertex offsets."""
    rows, n, offs = _hom_system(F, quiver, M, N)
    if n == 0:
        return [], offs
    if not rows:
        return [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)], offs
    return ff.nullspace(F, rows, n), offs


def _combinations(F: ff.GF, basis, n: int):
    """Every F_q-linear combination of ``basis`` (flat vectors of length n)."""
    if not basis:
        yield (0,) * n
        return
    add, mul = F.add, F.mul
    for coeffs in itertools.product(range(F.q), repeat=len(basis)):
        v = [0] * n
        for c, b in zip(coeffs, basis):
            if c:
                for j, x in enumerate(b):
                    if x:
                        v[j] = add[v[j]][mul[c][x]]
        yield tuple(v)


def _unflatten(vec, offs, M: Rep, N: Rep):
    out = []
    for i, o in enumerate(offs):
        r, c = N.dims[i], M.dims[i]
        out.append(tuple(tuple(vec[o + k * c:o + (k + 1) * c]) for k in range(r)))
    return tuple(out)


def iter_homs(F: ff.GF, quiver: Quiver, M: Rep, N: Rep):
    """Yield every intertwiner M -> N as a tuple of per-vertex matrices."""
    basis, offs = hom_basis(F, quiver, M, N)
    n = sum(N.dims[i] * M.dims[i] for i in range(quiver.n))
    for v in _combinations(F, basis, n):
        yield _unflatten(v, offs, M, N)


def is_iso_map(F: ff.GF, f) -> bool:
    return all(ff.is_invertible(F, m) if m else True for m in f)


def find_iso(F: ff.GF, quiver: Quiver, M: Rep, N: Rep):
    if M.dims != N.dims:
        return None
    for f in iter_homs(F, quiver, M, N):
        if is_iso_map(F, f):
            return f
    return None


# ---- sub / quotient representations ----------------------------------------

def _coords_in(F, R, piv, w):
    """Coordinates of ``w`` in RREF basis ``R`` and the residual ``w - sum``."""
    coords = tuple(w[p] for p in piv)
    res = list(w)
    for c, row in zip(coords, R):
        if c:
            nc = F.neg[c]
            for j, x in enumerate(row):
                if x:
                    res[j] = F.add[res[j]][F.mul[nc][x]]
    return coords, res


def restrict(F: ff.GF, quiver: Quiver, M: Rep, U):
    """Sub and quotient reps for a family ``U`` of (rref rows, pivots) per vertex.

    Returns ``None`` when ``U`` is not stable under the arrows.
    """
    sub_mats, quo_mats = [], []
    comp = [[c for c in range(M.dims[i]) if c not in set(U[i][1])] for i in range(quiver.n)]
    for a, (s, t) in enumerate(quiver.arrows):
        Ma = M.mats[a]
        Rt, pt = U[t]
        cols = []
        for row in U[s][0]:
            w = ff.matvec(F, Ma, row)
            coords, res = _coords_in(F, Rt, pt, w)
            if any(res):
                return None
            cols.append(coords)
        sub_mats.append(ff.transpose(cols, len(pt)) if cols else tuple(() for _ in pt))
        qcols = []
        for c in comp[s]:
            w = tuple(Ma[r][c] for r in range(M.dims[t]))
            _, res = _coords_in(F, Rt, pt, w)
            qcols.append(tuple(res[j] for j in comp[t]))
        quo_mats.append(ff.transpose(qcols, len(comp[t])) if qcols else tuple(() for _ in comp[t]))
    sub = Rep(tuple(len(U[i][1]) for i in range(quiver.n)), tuple(_fix(m) for m in sub_mats))
    quo = Rep(tuple(len(comp[i]) for i in range(quiver.n)), tuple(_fix(m) for m in quo_mats))
    return sub, quo


def _fix(m):
    return tuple(tuple(r) for r in m)


def kernel_subspaces(F: ff.GF, quiver: Quiver, f, src: Rep):
    out = []
    for i in range(quiver.n):
        basis = ff.nullspace(F, f[i], src.dims[i]) if f[i] else [
            tuple(1 if j == k else 0 for j in range(src.dims[i])) for k in range(src.dims[i])]
        out.append(ff.span_rref(F, basis, src.dims[i]))
    return out


def image_subspaces(F: ff.GF, quiver: Quiver, f, src: Rep, dst: Rep):
    out = []
    for i in range(quiver.n):
        cols = [tuple(f[i][r][c] for r in range(dst.dims[i])) for c in range(src.dims[i])]
        cols = [c for c in cols if any(c)]
        out.append(ff.span_rref(F, cols, dst.dims[i]))
    return out


# ---- the table --------------------------------------------------------------

@dataclass(frozen=True)
class ObjClass:
    id: int
    dim: tuple
    indecomposables: tuple  # sorted ids of indecomposable summands, with repetition
    rep: Rep
    name: str = ""


def dims_upto(bound):
    vecs = itertools.product(*(range(b + 1) for b in bound))
    return sorted(vecs, key=lambda d: (sum(d), d))


def _multisets_summing(target, indecs, dims_of, start=0):
    """Multisets (sorted tuples) of indecomposable ids whose dims add to ``target``."""
    if not any(target):
        yield ()
        return
    for k in range(start, len(indecs)):
        x = indecs[k]
        d = dims_of[x]
        if k0_leq(d, target):
            for rest in _multisets_summing(k0_sub(target, d), indecs, dims_of, k):
                yield (x,) + rest


class CategoryTable:
    """Iso classes of representations up to ``bound`` plus memoized counting data."""

    def __init__(self, quiver: Quiver, ground: GroundParams, bound, names=None):
        if len(bound) != quiver.n or any(b < 0 for b in bound):
            raise ValueError("bound must be a nonnegative vector, one entry per vertex")
        self.quiver = quiver
        self.ground = ground
        self.field = ff.GF(ground.q)
        self.bound = tuple(bound)
        self.classes: list[ObjClass] = []
        self.by_dim: dict[tuple, list[int]] = {}
        self.by_multiset: dict[tuple, int] = {}
        self.indecomposables: list[int] = []
        self._names_cfg = dict(names or {})
        self._memo: dict = {}
        self._lock = threading.Lock()
        self._fp_index: dict = {}
        self._classify_memo: dict = {}
        self.raw_count = 0

    # -- construction --

    def _add_class(self, dim, indecs, rep) -> int:
        cid = len(self.classes)
        self.classes.append(ObjClass(cid, tuple(dim), tuple(sorted(indecs)) if indecs else (), rep))
        self.by_dim.setdefault(tuple(dim), []).append(cid)
        return cid

    def _finish_class(self, cid, indecs):
        c = self.classes[cid]
        self.classes[cid] = ObjClass(cid, c.dim, tuple(sorted(indecs)), c.rep, c.name)
        self.by_multiset[tuple(sorted(indecs))] = cid

    def _invariant(self, rep: Rep):
        F, Q = self.field, self.quiver
        fwd = tuple(hom_ext_dims(F, Q, self.classes[x].rep, rep)[0] for x in self.indecomposables)
        bwd = tuple(hom_ext_dims(F, Q, rep, self.classes[x].rep)[0] for x in self.indecomposables)
        return fwd, bwd, hom_ext_dims(F, Q, rep, rep)[0]

    def _build(self, budget: int, exhaustive: bool):
        Q, F, q = self.quiver, self.field, self.ground.q
        zero = self._add_class((0,) * Q.n, (), zero_rep(Q, (0,) * Q.n))
        self.by_multiset[()] = zero
        for d in dims_upto(self.bound):
            if not any(d):
                continue
            nvars = sum(d[s] * d[t] for s, t in Q.arrows)
            total = q**nvars
            self.raw_count += total
            if self.raw_count > budget:
                raise BudgetExceeded(
                    f"enumerating {self.raw_count} representations exceeds budget {budget}")
            gl = 1
            for x in d:
                gl *= ff.gl_order(q, x)
            known = []
            for ms in _multisets_summing(d, self.indecomposables, {x: self.classes[x].dim for x in self.indecomposables}):
                if len(ms) < 2:
                    continue
                rep = self.classes[ms[0]].rep
                for x in ms[1:]:
                    rep = direct_sum_rep(Q, rep, self.classes[x].rep)
                cid = self._add_class(d, ms, rep)
                self.by_multiset[ms] = cid
                known.append(cid)
            mass = sum(Fraction(gl, self.aut_count(c)) for c in known)
            if mass < total or exhaustive:
                invs = {}
                for c in known:
                    invs.setdefault(self._invariant(self.classes[c].rep), []).append(c)
                new_indecs = []
                for mats in itertools.product(*(ff.all_matrices(q, d[t], d[s]) for s, t in Q.arrows)):
                    if mass == total and not exhaustive:
                        break
                    rep = Rep(d, tuple(mats))
                    inv = self._invariant(rep)
                    cands = invs.get(inv, [])
                    if any(find_iso(F, Q, rep, self.classes[c].rep) is not None for c in cands):
                        continue
                    cid = self._add_class(d, (), rep)
                    self._finish_class(cid, (cid,))
                    new_indecs.append(cid)
                    invs.setdefault(inv, []).append(cid)
                    mass += Fraction(gl, self.aut_count(cid))
                self.indecomposables.extend(new_indecs)
            if mass != total:
                raise RuntimeError(f"orbit mass {mass} != {total} at dim {d}")
        self._name_classes()
        self._index_fingerprints()

    def _index_fingerprints(self):
        for c in self.classes:
            key = (c.dim, self.fingerprint(c.rep))
            if key in self._fp_index:
                raise RuntimeError(f"hom fingerprint not injective at dim {c.dim}")
            self._fp_index[key] = c.id

    def fingerprint(self, rep: Rep):
        F, Q = self.field, self.quiver
        return tuple(hom_ext_dims(F, Q, self.classes[x].rep, rep)[0] for x in self.indecomposables)

    def _name_classes(self):
        Q = self.quiver
        names = {}
        per_dim: dict = {}
        for x in self.indecomposables:
            per_dim.setdefault(self.classes[x].dim, []).append(x)
        for label, spec in self._names_cfg.items():
            if isinstance(spec, dict):
                dim, idx = tuple(spec["dim"]), spec.get("index", 0)
            elif spec and isinstance(spec[0], list):
                dim, idx = tuple(spec[0]), spec[1] if len(spec) > 1 else 0
            else:
                dim, idx = tuple(spec), 0
            if len(dim) != Q.n:
                raise ConfigError(f"name {label!r}: dimension vector {list(dim)} has wrong length")
            if not k0_leq(dim, self.bound):
                continue  # names beyond the bound are simply unused
            try:
                names[per_dim[dim][idx]] = label
            except (KeyError, IndexError):
                raise ConfigError(f"name {label!r}: no indecomposable {dim}#{idx} in table") from None
        for dim, xs in per_dim.items():
            for k, x in enumerate(xs):
                if x in names:
                    continue
                if sum(dim) == 1:
                    names[x] = "S" + Q.vertices[dim.index(1)]
                else:
                    names[x] = "I(" + ",".join(map(str, dim)) + ")" + (f"#{k}" if len(xs) > 1 else "")
        if len(set(names.values())) != len(names):
            raise ConfigError("indecomposable names are not unique")
        self.indec_names = names
        for c in list(self.classes):
            self.classes[c.id] = ObjClass(c.id, c.dim, c.indecomposables, c.rep, self._render(c.indecomposables))
        self.by_name = {c.name: c.id for c in self.classes}
        self.name_to_indec = {v: k for k, v in names.items()}

    def _render(self, ms) -> str:
        if not ms:
            return "0"
        parts = []
        for x, grp in itertools.groupby(ms):
            k = len(list(grp))
            parts.append(self.indec_names[x] + (f"^{k}" if k > 1 else ""))
        return "+".join(parts)

    # -- lookups --

    def __len__(self):
        return len(self.classes)

    def check(self, c: int) -> ObjClass:
        if not isinstance(c, int) or not 0 <= c < len(self.classes):
            raise OutOfTable(f"no class {c!r} in table")
        return self.classes[c]

    def dim(self, c: int):
        return self.check(c).dim

    def name(self, c: int) -> str:
        return self.check(c).name

    def lookup(self, name: str) -> int:
        """Class id from a rendered name such as ``"S1^2+P"`` or ``"0"``."""
        text = name.replace(" ", "")
        if text in self.by_name:
            return self.by_name[text]
        ms = []
        for part in text.split("+"):
            base, _, mult = part.partition("^")
            if base not in self.name_to_indec:
                raise KeyError(base)
            ms += [self.name_to_indec[base]] * (int(mult) if mult else 1)
        return self.from_multiset(ms)

    def from_multiset(self, ms) -> int:
        ms = tuple(sorted(ms))
        if ms in self.by_multiset:
            return self.by_multiset[ms]
        raise OutOfTable(f"object {self._render(ms)} exceeds bound {self.bound}")

    def in_bound(self, dim) -> bool:
        return all(0 <= x <= b for x, b in zip(dim, self.bound))

    def classify(self, rep: Rep) -> int:
        if not self.in_bound(rep.dims):
            raise OutOfTable(f"representation of dim {rep.dims} exceeds bound {self.bound}")
        key = rep.key()
        cid = self._classify_memo.get(key)
        if cid is None:
            cid = self._fp_index[(tuple(rep.dims), self.fingerprint(rep))]
            self._classify_memo[key] = cid
        return cid

    def direct_sum(self, a: int, b: int) -> int:
        return self.from_multiset(self.check(a).indecomposables + self.check(b).indecomposables)

    def decompose(self, a: int) -> tuple:
        return self.check(a).indecomposables

    def objects_upto(self, dim_cap=None, total=None, nonzero=False):
        out = []
        for c in self.classes:
            if nonzero and c.id == 0:
                continue
            if dim_cap is not None and not k0_leq(c.dim, dim_cap):
                continue
            if total is not None and sum(c.dim) > total:
                continue
            out.append(c.id)
        return out

    # -- memo helper --

    def _cached(self, key, fn):
        try:
            return self._memo[key]
        except KeyError:
            pass
        val = fn()
        with self._lock:
            return self._memo.setdefault(key, val)

    # -- homological data --

    def _hom_ext(self, a: int, b: int):
        A, B = self.check(a), self.check(b)
        return self._cached(("he", a, b), lambda: hom_ext_dims(self.field, self.quiver, A.rep, B.rep))

    def hom_dim(self, a: int, b: int) -> int:
        return self._hom_ext(a, b)[0]

    def ext1_dim(self, a: int, b: int) -> int:
        return self._hom_ext(a, b)[1]

    def end_dim(self, a: int) -> int:
        return self.hom_dim(a, a)

    def aut_count(self, a: int) -> int:
        return self._cached(("aut", a), lambda: self._aut(a))

    def aut_count_enumerated(self, a: int) -> int:
        F, Q = self.field, self.quiver
        rep = self.check(a).rep
        return sum(1 for f in iter_homs(F, Q, rep, rep) if is_iso_map(F, f))

    def _aut(self, a: int) -> int:
        q = self.ground.q
        if q ** self.end_dim(a) <= AUT_ENUM_CAP:
            return self.aut_count_enumerated(a)
        return self.aut_count_structural(a)

    def aut_count_structural(self, a: int) -> int:
        """|Aut| = |rad End| * prod |GL_m(D_X)| over indecomposable summands X^m."""
        q = self.ground.q
        rad = self.end_dim(a)
        out = 1
        for x, grp in itertools.groupby(self.decompose(a)):
            m = len(list(grp))
            e = self.end_dim(x)
            ax = self.aut_count(x)
            # |Aut X| = q^e - q^(e - r) with r = dim of End(X)/rad
            r = next(r for r in range(1, e + 1) if q**e - q**(e - r) == ax)
            rad -= m * m * r
            out *= ff.gl_order(q**r, m)
        return q**rad * out

    def euler_exp(self, alpha, beta) -> int:
        return self.quiver.euler_exp(alpha, beta)

    def euler(self, alpha, beta) -> Coeff:
        return self.ground.vpow(self.euler_exp(alpha, beta))

    def sym_exp(self, alpha, beta) -> int:
        return self.euler_exp(alpha, beta) + self.euler_exp(beta, alpha)

    def sym(self, alpha, beta) -> Coeff:
        return self.ground.vpow(self.sym_exp(alpha, beta))

    # -- Hall numbers --

    def subobjects(self, c: int):
        """``[(sub, quotient, count)]`` over all subrepresentations of ``c``."""
        return self._cached(("sub", c), lambda: self._subobjects(c))

    def _subobjects(self, c: int):
        F, Q, q = self.field, self.quiver, self.ground.q
        C = self.check(c)
        counts: dict = {}
        for e in itertools.product(*(range(x + 1) for x in C.dim)):
            spaces = [ff.subspaces(q, C.dim[i], e[i]) for i in range(Q.n)]
            for U in itertools.product(*spaces):
                U = [(list(R), list(p)) for R, p in U]
                sq = restrict(F, Q, C.rep, U)
                if sq is None:
                    continue
                key = (self.classify(sq[0]), self.classify(sq[1]))
                counts[key] = counts.get(key, 0) + 1
        return sorted((s, t, n) for (s, t), n in counts.items())

    def hall_g(self, a: int, b: int, c: int) -> int:
        """Number of subobjects of ``c`` isomorphic to ``a`` with quotient ``b``."""
        self.check(a), self.check(b)
        if k0_add(self.dim(a), self.dim(b)) != self.dim(c):
            return 0
        table = self._cached(("g", c), lambda: {(s, t): n for s, t, n in self.subobjects(c)})
        return table.get((a, b), 0)

    def hall_products(self, a: int, b: int):
        """``{C: g_ab^C}`` over classes with nonzero Hall number."""
        def compute():
            d = k0_add(self.dim(a), self.dim(b))
            if not self.in_bound(d):
                raise OutOfTable(
                    f"product of {self.name(a)} and {self.name(b)} has dim {d} beyond bound {self.bound}")
            out = {}
            for c in self.by_dim.get(d, []):
                g = self.hall_g(a, b, c)
                if g:
                    out[c] = g
            return out
        return self._cached(("hp", a, b), compute)

    # -- four-term counts --

    def phi_counts(self, a: int, b: int):
        """``{(ker, coker): #phi}`` over all phi in Hom(b, a)."""
        def compute():
            F, Q = self.field, self.quiver
            A, B = self.check(a).rep, self.check(b).rep
            out: dict = {}
            for f in iter_homs(F, Q, B, A):
                ker = restrict(F, Q, B, kernel_subspaces(F, Q, f, B))[0]
                coker = restrict(F, Q, A, image_subspaces(F, Q, f, B, A))[1]
                key = (self.classify(ker), self.classify(coker))
                out[key] = out.get(key, 0) + 1
            return out
        return self._cached(("phi", a, b), compute)

    def gamma_terms(self, a: int, b: int):
        """``{(M, N): gamma_ab^MN}`` (nonzero entries only) as exact rationals."""
        def compute():
            denom = self.aut_count(a) * self.aut_count(b)
            out = {}
            for (m, n), cnt in sorted(self.phi_counts(a, b).items()):
                # four-term Euler characteristic: b - m = a - n
                assert k0_sub(self.dim(b), self.dim(m)) == k0_sub(self.dim(a), self.dim(n))
                out[(m, n)] = Fraction(cnt * self.aut_count(m) * self.aut_count(n), denom)
            return out
        return self._cached(("gt", a, b), compute)

    def gamma4(self, a: int, b: int, m: int, n: int) -> Coeff:
        for x in (a, b, m, n):
            self.check(x)
        return self.ground.coeff(self.gamma_terms(a, b).get((m, n), 0))

    # -- serialization --

    def cache_key(self) -> str:
        blob = json.dumps({"quiver": self.quiver.to_json(), "q": self.ground.q,
                           "bound": list(self.bound), "names": self._names_cfg,
                           "v": CACHE_VERSION}, sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def to_json(self) -> dict:
        return {
            "version": CACHE_VERSION,
            "key": self.cache_key(),
            "quiver": self.quiver.to_json(),
            "q": self.ground.q,
            "bound": list(self.bound),
            "names": self._names_cfg,
            "indecomposables": self.indecomposables,
            "classes": [{"dim": list(c.dim), "indecomposables": list(c.indecomposables),
                         "mats": [[list(r) for r in m] for m in c.rep.mats]} for c in self.classes],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CategoryTable":
        if data.get("version") != CACHE_VERSION:
            raise ValueError("table cache version mismatch")
        quiver = Quiver.from_labels(data["quiver"]["vertices"], data["quiver"]["arrows"])
        t = cls(quiver, GroundParams(data["q"]), tuple(data["bound"]), data.get("names"))
        for c in data["classes"]:
            dims = tuple(c["dim"])
            rep = Rep(dims, tuple(_fix(m) if m else tuple(() for _ in range(dims[tt]))
                                  for m, (_, tt) in zip(c["mats"], quiver.arrows)))
            cid = t._add_class(c["dim"], c["indecomposables"], rep)
            t.by_multiset[tuple(c["indecomposables"])] = cid
        t.indecomposables = list(data["indecomposables"])
        t._name_classes()
        t._index_fingerprints()
        if t.cache_key() != data["key"]:
            raise ValueError("table cache key mismatch")
        return t

    def info(self) -> dict:
        return {
            "quiver": self.quiver.to_json(),
            "q": self.ground.q,
            "bound": list(self.bound),
            "classes": len(self.classes),
            "indecomposables": {self.indec_names[x]: list(self.dim(x)) for x in self.indecomposables},
            "raw_representations": self.raw_count,
        }


def build_table(quiver: Quiver, ground: GroundParams, bound, names=None,
                budget: int = DEFAULT_BUDGET, exhaustive: bool = False) -> CategoryTable:
    """Enumerate all iso classes of representations with dim <= bound.

    Decomposable classes come from Krull-Schmidt; indecomposables are found
    by an orbit search over raw representations, stopped once the orbit
    mass ``sum |GL_d| / |Aut C|`` accounts for all ``q^N`` representations.
    With ``exhaustive=True`` every raw representation is visited.
    """
    if isinstance(ground, int):
        ground = GroundParams(ground)
    t = CategoryTable(quiver, ground, tuple(bound), names)
    t._build(budget, exhaustive)
    return t


# ---- configs and caching -----------------------------------------------------

BUILTIN = Path(__file__).parent / "data"


def load_config(src) -> dict:
    """Read a quiver config (path, builtin name, or dict) into a plain dict."""
    if isinstance(src, dict):
        cfg = dict(src)
    else:
        p = Path(src)
        if not p.exists():
            p = BUILTIN / f"{src}.json"
        try:
            cfg = json.loads(p.read_text())
        except FileNotFoundError:
            raise ConfigError(f"config {src!r} not found") from None
        except json.JSONDecodeError as e:
            raise ConfigError(f"config {src!r}: {e}") from None
    for key in ("vertices", "arrows"):
        if key not in cfg:
            raise ConfigError(f"config missing {key!r}")
    return cfg


def table_from_config(cfg, q=None, bound=None, budget: int = DEFAULT_BUDGET,
                      use_cache: bool = True) -> CategoryTable:
    cfg = load_config(cfg)
    try:
        quiver = Quiver.from_labels(cfg["vertices"], cfg["arrows"])
        ground = GroundParams(int(q if q is not None else cfg.get("q", 2)))
        bound = tuple(bound if bound is not None else cfg.get("bound", [1] * quiver.n))
    except (InvalidQuiver, ValueError, TypeError) as e:
        raise ConfigError(str(e)) from None
    if len(bound) != quiver.n:
        raise ConfigError("bound length does not match vertex count")
    names = cfg.get("names")
    cache_dir = os.environ.get("HALLFORGE_CACHE_DIR")
    if use_cache and cache_dir:
        probe = CategoryTable(quiver, ground, bound, names)
        path = Path(cache_dir) / f"table-{probe.cache_key()}.json"
        if path.exists():
            try:
                return CategoryTable.from_json(json.loads(path.read_text()))
            except (ValueError, KeyError):
                pass
        t = build_table(quiver, ground, bound, names, budget)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(t.to_json()))
        return t
    return build_table(quiver, ground, bound, names, budget)
