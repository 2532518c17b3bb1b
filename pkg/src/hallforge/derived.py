"""Graded objects (complexes with zero differential) and tilting tables.

A graded object maps cohomological degree -> class id.  ``A[n]`` moves the
component in degree ``d`` to degree ``d - n``.  A tilting table sends each
source indecomposable ``X`` to ``Y[s]`` for a target indecomposable ``Y``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import ff
from .coeff import Coeff
from .elem import add_term, sub
from .heis import CheckReport, HeisDouble
from .hopf import RingelHopf
from .quiver import (BudgetExceeded, CategoryTable, OutOfTable, Rep, image_subspaces,
                     iter_homs, k0_add, k0_scale, kernel_subspaces, restrict)

DEFAULT_GAMMA_BUDGET = 2**24


class Graded:
    """Finitely supported ``degree -> class id``; zero components are dropped."""

    __slots__ = ("items",)

    def __init__(self, comps=None):
        comps = dict(comps or {})
        self.items = tuple(sorted((int(d), c) for d, c in comps.items() if c != 0))

    def __getitem__(self, d: int) -> int:
        for k, c in self.items:
            if k == d:
                return c
        return 0

    def degrees(self):
        return [d for d, _ in self.items]

    def as_dict(self) -> dict:
        return dict(self.items)

    def shift(self, n: int) -> "Graded":
        """``A[n]``: component in degree d moves to degree d - n."""
        return Graded({d - n: c for d, c in self.items})

    def __eq__(self, other):
        return isinstance(other, Graded) and self.items == other.items

    def __hash__(self):
        return hash(self.items)

    def __repr__(self):
        return f"Graded({dict(self.items)})"

    def __bool__(self):
        return bool(self.items)


def graded_dim(table: CategoryTable, X: Graded) -> tuple:
    """Euler characteristic class ``sum (-1)^d dim X^d``."""
    out = (0,) * table.quiver.n
    for d, c in X.items:
        out = k0_add(out, k0_scale((-1) ** d, table.dim(c)))
    return out


def graded_hom_dim(table: CategoryTable, X: Graded, Y: Graded, i: int) -> int:
    """``dim Hom(X, Y[i]) = sum_j hom(X^j, Y^{j+i}) + sum_j ext(X^j, Y^{j+i-1})``."""
    out = 0
    for j, x in X.items:
        y = Y[j + i]
        if y:
            out += table.hom_dim(x, y)
        y = Y[j + i - 1]
        if y:
            out += table.ext1_dim(x, y)
    return out


def graded_aut_count(table: CategoryTable, X: Graded) -> int:
    q = table.ground.q
    out = 1
    for j, x in X.items:
        out *= table.aut_count(x)
        prev = X[j - 1]
        if prev:
            out *= q ** table.ext1_dim(x, prev)
    return out


def triangle_g2(table: CategoryTable, a: int, b: int, m: int, n: int) -> Coeff:
    """``g_{A,B[1]}^{M[1]+N} = gamma_AB^MN |Ext^1(N,M)|``."""
    return table.gamma4(a, b, m, n) * table.ground.q ** table.ext1_dim(n, m)


def triangle_g2_direct(table: CategoryTable, a: int, b: int, m: int, n: int) -> Fraction:
    """Same count via the phi-count with the block automorphism group of M[1]+N.

    ``#{phi: ker=M, coker=N} * |Aut(M[1]+N)| / (|Aut A| |Aut B| |Stab|)`` with
    trivial stabilizer.
    """
    cnt = table.phi_counts(a, b).get((m, n), 0)
    block = graded_aut_count(table, Graded({-1: m, 0: n}))
    return Fraction(cnt * block, table.aut_count(a) * table.aut_count(b))


# ---- long exact sequences ---------------------------------------------------

def _vertex_ranks(F, f):
    return [ff.rank(F, m) if m and m[0] else 0 for m in f]


def _compose_zero(F, g, f) -> bool:
    for gi, fi in zip(g, f):
        if gi and fi and fi[0] and gi[0]:
            if not ff.is_zero(ff.matmul(F, gi, fi)):
                return False
    return True


def gamma_graded(table: CategoryTable, A: Graded, B: Graded, C: Graded,
                 budget: int = DEFAULT_GAMMA_BUDGET) -> Fraction:
    """Orbifold count of long exact ``A^i -> C^i -> B^i -> A^{i+1}`` sequences.

    Brute force over all map tuples in the support window, divided by
    ``prod |Aut A^i| |Aut B^i|``.
    """
    F, Q = table.field, table.quiver
    degs = set(A.degrees()) | set(B.degrees()) | set(C.degrees())
    if not degs:
        return Fraction(1)
    lo, hi = min(degs), max(degs)
    chain = []
    for i in range(lo, hi + 1):
        chain += [A[i], C[i], B[i]]
    reps = [table.classes[c].rep for c in chain]
    q = table.ground.q
    size = 1
    for k in range(len(chain) - 1):
        size *= q ** table.hom_dim(chain[k], chain[k + 1])
        if size > budget:
            raise BudgetExceeded(f"long exact sequence enumeration exceeds budget {budget}")
    homs = [list(iter_homs(F, Q, reps[k], reps[k + 1])) for k in range(len(chain) - 1)]
    dims = [table.dim(c) for c in chain]
    ranks = [[_vertex_ranks(F, f) for f in hs] for hs in homs]
    nv = Q.n

    def exact_at(k, r_in, r_out, f_in, f_out):
        if f_in is not None and f_out is not None and not _compose_zero(F, f_out, f_in):
            return False
        return all(r_in[v] + r_out[v] == dims[k][v] for v in range(nv))

    zero_r = [0] * nv
    count = 0

    def dfs(k, r_prev, f_prev):
        nonlocal count
        if k == len(homs):
            if exact_at(k, r_prev, zero_r, None, None):
                count += 1
            return
        for f, r in zip(homs[k], ranks[k]):
            if exact_at(k, r_prev, r, f_prev, f):
                dfs(k + 1, r, f)

    dfs(0, zero_r, None)
    denom = 1
    for i in range(lo, hi + 1):
        denom *= table.aut_count(A[i]) * table.aut_count(B[i])
    return Fraction(count, denom)


def complex_cohomology(table: CategoryTable, X: Graded, d: dict) -> Graded:
    """Cohomology classes of ``X`` with differential ``d[m]: X^m -> X^{m+1}``."""
    F, Q = table.field, table.quiver
    out = {}
    for m, x in X.items:
        rep = table.classes[x].rep
        if d.get(m) is not None:
            ker_sub = kernel_subspaces(F, Q, d[m], rep)
            K = restrict(F, Q, rep, ker_sub)[0]
        else:
            ker_sub = [(list(ff.identity(rep.dims[v])), list(range(rep.dims[v]))) for v in range(Q.n)]
            K = rep
        if d.get(m - 1) is not None:
            prev = table.classes[X[m - 1]].rep
            img = image_subspaces(F, Q, d[m - 1], prev, rep)
            # image coordinates inside the kernel basis
            U = []
            for v in range(Q.n):
                R, piv = ker_sub[v]
                vecs = [tuple(w[p] for p in piv) for w in img[v][0]]
                U.append(ff.span_rref(F, vecs, len(piv)))
            U = [(list(r), list(p)) for r, p in U]
            H = restrict(F, Q, K, U)[1]
        else:
            H = K
        out[m] = table.classify(H)
    return Graded(out)


def iter_differentials(table: CategoryTable, X: Graded):
    """All ``d`` of degree +1 on ``X`` with ``d^2 = 0``, as dicts ``m -> map``."""
    F, Q = table.field, table.quiver
    degs = [m for m in X.degrees() if X[m + 1]]
    spaces = [list(iter_homs(F, Q, table.classes[X[m]].rep, table.classes[X[m + 1]].rep)) for m in degs]
    for choice in itertools.product(*spaces):
        d = dict(zip(degs, choice))
        if all(_compose_zero(F, d[m + 1], d[m]) for m in degs if m + 1 in d):
            yield d


# ---- tilting tables ------------------------------------------------------------

@dataclass
class TiltTable:
    source: CategoryTable
    target: CategoryTable
    mapping: dict  # source indecomposable id -> (target indecomposable id, shift)

    def __post_init__(self):
        missing = set(self.source.indecomposables) - set(self.mapping)
        if missing:
            raise ValueError(f"tilt table misses {sorted(self.source.name(x) for x in missing)}")
        imgs = list(self.mapping.values())
        if len(set(imgs)) != len(imgs):
            raise ValueError("tilt table is not injective")

    def apply(self, a: int) -> Graded:
        comps: dict = {}
        for x in self.source.decompose(a):
            y, s = self.mapping[x]
            comps.setdefault(-s, []).append(y)
        return Graded({d: self.target.from_multiset(ys) for d, ys in comps.items()})

    def k0(self, alpha) -> tuple:
        """``F_K``: linear extension of ``[X] -> (-1)^s dim Y`` through the simples."""
        t = self.source
        out = (0,) * self.target.quiver.n
        for v, a in enumerate(alpha):
            if not a:
                continue
            e = tuple(1 if i == v else 0 for i in range(t.quiver.n))
            simple = t.by_dim[e]
            img = graded_dim(self.target, self.apply(simple[0]))
            out = k0_add(out, k0_scale(a, img))
        return out

    def shifts(self) -> dict:
        return {x: s for x, (_, s) in self.mapping.items()}

    def to_json(self, source_ref=None, target_ref=None) -> dict:
        return {
            "source": source_ref if source_ref is not None else self.source.quiver.to_json(),
            "target": target_ref if target_ref is not None else self.target.quiver.to_json(),
            "map": [{"from": self.source.name(x), "to": self.target.name(y), "shift": s}
                    for x, (y, s) in sorted(self.mapping.items())],
        }

    @classmethod
    def from_json(cls, data: dict, source: CategoryTable, target: CategoryTable) -> "TiltTable":
        mapping = {}
        for row in data["map"]:
            x = source.lookup(row["from"])
            y = target.lookup(row["to"])
            if len(source.decompose(x)) != 1 or len(target.decompose(y)) != 1:
                raise ValueError(f"tilt entry {row} is not between indecomposables")
            mapping[x] = (y, int(row["shift"]))
        return cls(source, target, mapping)


def apply_tilt(F: TiltTable, a: int) -> Graded:
    return F.apply(a)


def tilt_k0(F: TiltTable, alpha) -> tuple:
    return F.k0(alpha)


def _source_graded_hom(t: CategoryTable, x: int, y: int, i: int) -> int:
    if i == 0:
        return t.hom_dim(x, y)
    if i == 1:
        return t.ext1_dim(x, y)
    return 0


def preserves_graded_homs(src: CategoryTable, tgt: CategoryTable, mapping: dict,
                          degrees=range(-3, 4)) -> bool:
    for x, (y, s) in mapping.items():
        for x2, (y2, s2) in mapping.items():
            X = Graded({-s: y})
            Y = Graded({-s2: y2})
            for i in degrees:
                if _source_graded_hom(src, x, x2, i) != graded_hom_dim(tgt, X, Y, i):
                    return False
    return True


def discover_tilt(source: CategoryTable, target: CategoryTable, shifts) -> list:
    """Every indecomposable assignment (with shifts in ``shifts``) preserving graded homs."""
    shifts = list(shifts)
    src = list(source.indecomposables)
    tgt = list(target.indecomposables)
    if not shifts or len(src) != len(tgt):
        return []
    out = []

    def ok_pair(x, img_x, x2, img_x2):
        (y, s), (y2, s2) = img_x, img_x2
        X, Y = Graded({-s: y}), Graded({-s2: y2})
        for i in range(-3, 4):
            if _source_graded_hom(source, x, x2, i) != graded_hom_dim(target, X, Y, i):
                return False
        return True

    def extend(k, mapping, used):
        if k == len(src):
            out.append(TiltTable(source, target, dict(mapping)))
            return
        x = src[k]
        for y in tgt:
            if y in used:
                continue
            for s in shifts:
                img = (y, s)
                if not ok_pair(x, img, x, img):
                    continue
                if all(ok_pair(x, img, x2, mapping[x2]) and ok_pair(x2, mapping[x2], x, img)
                       for x2 in mapping):
                    mapping[x] = img
                    used.add(y)
                    extend(k + 1, mapping, used)
                    used.discard(y)
                    del mapping[x]

    extend(0, {}, set())
    return out


def hom_ext_patterns_ok(F: TiltTable) -> bool:
    """Vanishing of Hom(A_1, A_0) and Ext^1(A_0, A_1) for the shift-0/shift-1 parts."""
    t = F.source
    sh = F.shifts()
    for x, s in sh.items():
        for y, s2 in sh.items():
            if s == 1 and s2 == 0 and t.hom_dim(x, y):
                return False
            if s == 0 and s2 == 1 and t.ext1_dim(x, y):
                return False
    return True


# ---- tilts act on Heis(A) ---------------------------------------------------

def tilt_image_heis(F: TiltTable, hd: HeisDouble, a: int) -> dict:
    X = F.apply(a)
    if any(d not in (-1, 0) for d in X.degrees()):
        raise ValueError(f"image of {F.source.name(a)} leaves degrees -1..0")
    return hd.z_complex2(X[-1], X[0])


def split_parts(F: TiltTable, a: int) -> tuple:
    """``(A_0, A_1)`` with ``A_i`` the summands sent to shift ``i``."""
    parts = {0: [], 1: []}
    for x in F.source.decompose(a):
        parts.setdefault(F.mapping[x][1], []).append(x)
    return F.source.from_multiset(parts[0]), F.source.from_multiset(parts[1])


def verify_tilt_heis(F: TiltTable, objs=None) -> CheckReport:
    """``F_*([A'] * [A'']) = F_*([A']) F_*([A''])`` in Heis of the target, plus the split form."""
    src, tgt = F.source, F.target
    Bs = RingelHopf(src)
    hd = HeisDouble(RingelHopf(tgt))
    objs = objs if objs is not None else src.objects_upto()
    rep = CheckReport("tilt-heis")
    image: dict = {}

    def img(a):
        if a not in image:
            image[a] = tilt_image_heis(F, hd, a)
        return image[a]

    for a in objs:
        for b in objs:
            if not src.in_bound(k0_add(src.dim(a), src.dim(b))):
                continue
            try:
                img(a), img(b), [img(c) for c in Bs.hall(a, b)]
            except ValueError as e:
                rep.record(False, {"pair": [src.name(a), src.name(b)], "reason": str(e)})
                continue
            lhs: dict = {}
            for c, x in Bs.hall(a, b).items():
                for k, y in img(c).items():
                    add_term(lhs, k, x * y)
            rhs = hd.mul(img(a), img(b))
            rep.record(not sub(lhs, rhs), {"pair": [src.name(a), src.name(b)]})
    for a in objs:
        a0, a1 = split_parts(F, a)
        lhs = {((0,) * src.quiver.n, a): src.ground.one}
        rhs = {((0,) * src.quiver.n, c): x * src.ground.vpow(-src.hom_dim(a0, a1))
               for c, x in Bs.hall(a1, a0).items()}
        rep.record(not sub(lhs, rhs), {"split": src.name(a)})
    return rep


def corrupt_tilt(F: TiltTable) -> TiltTable:
    """Negative control: swap the targets of the first two indecomposables."""
    xs = sorted(F.mapping)
    m = dict(F.mapping)
    m[xs[0]], m[xs[1]] = m[xs[1]], m[xs[0]]
    return TiltTable(F.source, F.target, m)


def corrupt_shift(F: TiltTable, delta: int = 1) -> TiltTable:
    """Negative control: move the first indecomposable's image by ``delta`` degrees."""
    xs = sorted(F.mapping)
    m = dict(F.mapping)
    y, s = m[xs[0]]
    m[xs[0]] = (y, s + delta)
    return TiltTable(F.source, F.target, m)
