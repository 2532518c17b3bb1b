"""Exhaustive invariant suites.  Every function returns a list of ``CheckReport``.

Universes are always "everything in bound": objects of the table (optionally
capped by total dimension), K-classes from a small fixed set, and sites from
an explicit finite window.  Products that would leave the table bound are
filtered out up front where the bound can be predicted, and recorded as
``skipped`` otherwise (a skipped instance makes the report fail).
"""

from __future__ import annotations

import itertools

from .derived import Graded
from .elem import add_into, add_term, sub
from .heis import CheckReport, HeisDouble, verify_heis_consistency
from .hopf import HopfConfig, RingelHopf
from .lattice import FAlgebra, LatticeAlgebra, LatticeConfig, f_differential_expansion, f_gamma_product_check
from .quiver import BudgetExceeded, CategoryTable, OutOfTable, k0_add, k0_leq


def unit_alphas(n: int, signed: bool = True) -> list:
    """``0`` and the (signed) unit vectors of ``Z^n``."""
    out = [(0,) * n]
    for v in range(n):
        e = tuple(1 if i == v else 0 for i in range(n))
        out.append(e)
        if signed:
            out.append(tuple(-x for x in e))
    return out


def _fits(t: CategoryTable, *objs) -> bool:
    d = (0,) * t.quiver.n
    for a in objs:
        d = k0_add(d, t.dim(a))
    return t.in_bound(d)


def _objs(t: CategoryTable, total=None, nonzero=False):
    return t.objects_upto(total=total, nonzero=nonzero)


# ---- Hall / Ringel algebra ---------------------------------------------------------

def hall_associativity(t: CategoryTable, total=None) -> list[CheckReport]:
    H = RingelHopf(t)
    objs = _objs(t, total)
    reps = []
    for tw in (False, True):
        rep = CheckReport("hall-assoc-" + ("twisted" if tw else "untwisted"))
        for a, b, c in itertools.product(objs, repeat=3):
            if not _fits(t, a, b, c):
                continue
            x, y, z = H.obj(a), H.obj(b), H.obj(c)
            lhs = H.mul(H.mul(x, y, tw), z, tw)
            rhs = H.mul(x, H.mul(y, z, tw), tw)
            rep.record(not sub(lhs, rhs), {"triple": [t.name(a), t.name(b), t.name(c)]})
        reps.append(rep)
    return reps


def hopf_suite(t: CategoryTable, config: HopfConfig | None = None, total=None) -> list[CheckReport]:
    H = RingelHopf(t, config)
    objs = _objs(t, total)
    alphas = unit_alphas(t.quiver.n)
    g = t.ground
    bialg = CheckReport("hopf-bialgebra")
    for a, b in itertools.product(objs, repeat=2):
        if not _fits(t, a, b):
            continue
        for al in alphas:
            for be in alphas:
                x, y = H.obj(a, al), H.obj(b, be)
                lhs = H.coproduct(H.mul(x, y))
                rhs = H.tensor_mul(H.coproduct(x), H.coproduct(y))
                bialg.record(not sub(lhs, rhs), {"x": [list(al), t.name(a)], "y": [list(be), t.name(b)]})
    counit = CheckReport("hopf-counit")
    anti = CheckReport("hopf-antipode")
    for a in objs:
        for al in alphas:
            x = H.obj(a, al)
            d = H.coproduct(x)
            for side in (0, 1):
                inst = {"x": [list(al), t.name(a)], "side": side}
                counit.record(not sub(H.id_tensor_counit(d, side), x), inst)
                want = {(H.zero, 0): H.counit(x)} if H.counit(x) else {}
                anti.record(not sub(H.convolution(x, side), want), inst)
    # counit is multiplicative
    for a, b in itertools.product(objs, repeat=2):
        if _fits(t, a, b):
            x, y = H.obj(a), H.obj(b)
            counit.record(H.counit(H.mul(x, y)) == H.counit(x) * H.counit(y),
                          {"multiplicative": [t.name(a), t.name(b)]})
    # Delta(K_alpha) = K_alpha (x) K_alpha and coassociativity on basis elements
    coassoc = CheckReport("hopf-coassociativity")
    for a in objs:
        x = H.obj(a, alphas[1] if len(alphas) > 1 else None)
        d = H.coproduct(x)
        left: dict = {}
        right: dict = {}
        for (k1, k2), c in d.items():
            for (u, w), e in H.coproduct_key(k1).items():
                add_term(left, (u, w, k2), c * e)
            for (u, w), e in H.coproduct_key(k2).items():
                add_term(right, (k1, u, w), c * e)
        coassoc.record(not sub(left, right), {"x": t.name(a)})
    for al in alphas:
        coassoc.record(H.coproduct(H.K(al)) == {((al, 0), (al, 0)): g.one}, {"K": list(al)})
    return [bialg, counit, anti, coassoc]


def pairing_suite(t: CategoryTable, total=None) -> list[CheckReport]:
    """Hopf-pairing conditions: products and coproducts adjoint; units vs counits."""
    H = RingelHopf(t)
    objs = _objs(t, total)
    alphas = unit_alphas(t.quiver.n)
    r1 = CheckReport("pairing-product-left")
    r2 = CheckReport("pairing-product-right")
    r3 = CheckReport("pairing-unit")
    for a, b in itertools.product(objs, repeat=2):
        if not _fits(t, a, b):
            continue
        d = k0_add(t.dim(a), t.dim(b))
        for c in t.by_dim.get(d, []):
            for al, be, ga in itertools.product(alphas, repeat=3):
                x, y, w = H.obj(a, al), H.obj(b, be), H.obj(c, ga)
                inst = {"xi": [list(al), t.name(a)], "xi'": [list(be), t.name(b)], "omega": [list(ga), t.name(c)]}
                # phi(x y, w) = phi(x, w_1) phi(y, w_2)
                r1.record(H.pair(H.mul(x, y), w) == H.pair2({(k, l): t.ground.one for k in x for l in y},
                                                           H.coproduct(w)), inst)
                # phi(w, x y) = phi(w_1, x) phi(w_2, y)
                r2.record(H.pair(w, H.mul(x, y)) == H.pair2(H.coproduct(w),
                                                           {(k, l): t.ground.one for k in x for l in y}), inst)
    for a in objs:
        for al in alphas:
            x = H.obj(a, al)
            r3.record(H.pair(H.one(), x) == H.counit(x) and H.pair(x, H.one()) == H.counit(x),
                      {"x": [list(al), t.name(a)]})
    return [r1, r2, r3]


# ---- Heisenberg double -------------------------------------------------------------

def heis_generators(hd: HeisDouble, objs) -> list:
    """``(label, element, plus_dim, minus_dim)`` for Z+, Z-, K+, K- generators."""
    t = hd.table
    n = t.quiver.n
    zero = (0,) * n
    gens = []
    for a in objs:
        gens.append((f"Z+{t.name(a)}", hd.zp(a), t.dim(a), zero))
        gens.append((f"Z-{t.name(a)}", hd.zm(a), zero, t.dim(a)))
    for al in unit_alphas(n, signed=False)[1:]:
        gens.append((f"K+{list(al)}", hd.kp(al), zero, zero))
        gens.append((f"K-{list(al)}", hd.km(al), zero, zero))
    return gens


def heis_suite(t: CategoryTable, total=None, assoc_total=None) -> list[CheckReport]:
    H = RingelHopf(t)
    hd = HeisDouble(H)
    objs = _objs(t, total)
    cons = verify_heis_consistency(hd, objs, unit_alphas(t.quiver.n))
    g = t.ground
    # associativity on generator triples with plus/minus parts in bound
    assoc = CheckReport("heis-assoc")
    gens = heis_generators(hd, _objs(t, assoc_total, nonzero=True))
    for (l1, x, p1, m1), (l2, y, p2, m2), (l3, z, p3, m3) in itertools.product(gens, repeat=3):
        if not (t.in_bound(k0_add(k0_add(p1, p2), p3)) and t.in_bound(k0_add(k0_add(m1, m2), m3))):
            continue
        # minus parts of y, z meet plus parts of x, y: the gamma terms stay in bound
        assoc.record(not sub(hd.mul(hd.mul(x, y), z), hd.mul(x, hd.mul(y, z))), {"triple": [l1, l2, l3]})
    # K relations and the two displayed forms of the cross relation
    krel = CheckReport("heis-k-relations")
    alphas = unit_alphas(t.quiver.n)
    for a in objs:
        for al in alphas:
            inst = {"obj": t.name(a), "alpha": list(al)}
            # Z-_A K_alpha = (A|alpha)^-1 K_alpha Z-_A
            lhs = hd.mul(hd.zm(a), hd.kp(al))
            rhs = {k: c / t.sym(t.dim(a), al) for k, c in hd.mul(hd.kp(al), hd.zm(a)).items()}
            krel.record(not sub(lhs, rhs), dict(inst, rel="Z-K+"))
            # Z+_A K-_alpha = K-_alpha Z+_A
            krel.record(not sub(hd.mul(hd.zp(a), hd.km(al)), hd.mul(hd.km(al), hd.zp(a))), dict(inst, rel="Z+K-"))
    for al in alphas:
        for be in alphas:
            lhs = hd.mul(hd.kp(al), hd.km(be))
            rhs = {k: c * t.sym(al, be) for k, c in hd.mul(hd.km(be), hd.kp(al)).items()}
            krel.record(not sub(lhs, rhs), {"K+": list(al), "K-": list(be)})
    forms = CheckReport("heis-cross-forms")
    for a in objs:
        for b in objs:
            first: dict = {}
            second: dict = {}
            db = t.dim(b)
            for (m, n), gam in t.gamma_terms(a, b).items():
                dm, dn = t.dim(m), t.dim(n)
                i = tuple(x - y for x, y in zip(db, dm))
                c1 = t.euler(i, dm) * t.euler(dn, i) * gam
                c2 = t.euler(i, tuple(x - y for x, y in zip(dm, dn))) * gam
                add_into(first, hd.mul_many(hd.zm(m), hd.kp(i), hd.zp(n)), c1)
                add_into(second, hd.mul_many(hd.zm(m), hd.zp(n), hd.kp(i)), c2)
            lhs = hd.mul(hd.zp(a), hd.zm(b))
            forms.record(not sub(first, second) and not sub(lhs, second), {"pair": [t.name(a), t.name(b)]})
    # each side is a copy of B(A)
    embed = CheckReport("heis-embeddings")
    for a, b in itertools.product(objs, repeat=2):
        if not _fits(t, a, b):
            continue
        prod = H.mul(H.obj(a), H.obj(b))
        embed.record(not sub(hd.mul(hd.zp(a), hd.zp(b)), hd.embed_plus(prod)), {"plus": [t.name(a), t.name(b)]})
        embed.record(not sub(hd.mul(hd.zm(a), hd.zm(b)), hd.embed_minus(prod)), {"minus": [t.name(a), t.name(b)]})
    return [cons, assoc, krel, forms, embed]


# ---- lattice algebra ---------------------------------------------------------------

def _lat_pair(t: CategoryTable, config: LatticeConfig | None):
    cfg = config or LatticeConfig()
    left = LatticeAlgebra(t, LatticeConfig("leftmost", cfg.adjacent_parity))
    right = LatticeAlgebra(t, LatticeConfig("rightmost", cfg.adjacent_parity))
    return left, right


def _both(L1, L2, word, rep, inst):
    try:
        x, y = L1.from_word(word), L2.from_word(word)
    except OutOfTable as e:
        rep.skipped.append(dict(inst, reason=str(e)))
        return
    rep.record(not sub(x, y), inst)


def lattice_confluence(t: CategoryTable, window, total: int = 2,
                       config: LatticeConfig | None = None) -> list[CheckReport]:
    """Overlap ``Z^{(m+1)}_A Z^{(m)}_B Z^{(m-1)}_C`` and distant commutators, both schedules."""
    L1, L2 = _lat_pair(t, config)
    objs = _objs(t, total, nonzero=True)
    sites = list(window)
    lo, hi = min(sites), max(sites)
    overlap = CheckReport("lattice-overlap")
    for m in range(lo + 1, hi):
        for a, b, c in itertools.product(objs, repeat=3):
            w = (("Z", m + 1, a), ("Z", m, b), ("Z", m - 1, c))
            _both(L1, L2, w, overlap, {"triple": [t.name(a), t.name(b), t.name(c)], "site": m})
    distant = CheckReport("lattice-distant-commutator")
    for m in range(lo, hi):
        for n in sites:
            if abs(m - n) < 2 or abs(m + 1 - n) < 2:
                continue
            for a, b, c in itertools.product(objs, repeat=3):
                inst = {"triple": [t.name(a), t.name(b), t.name(c)], "sites": [m, n]}
                zc = ("Z", n, c)
                pair = (("Z", m + 1, a), ("Z", m, b))
                _both(L1, L2, (zc,) + pair, distant, dict(inst, side="left"))
                _both(L1, L2, pair + (zc,), distant, dict(inst, side="right"))
    return [overlap, distant]


def splice_suite(t: CategoryTable, total: int = 2) -> list[CheckReport]:
    """``sum_M g_AB^MN g_MC^PQ = sum_U g_BC^PU g_AU^QN`` for all P, Q, N (gamma counts)."""
    rep = CheckReport("splice")
    objs = _objs(t, total)
    for a, b, c in itertools.product(objs, repeat=3):
        lhs: dict = {}
        for (m, n), g1 in t.gamma_terms(a, b).items():
            for (p, qq), g2 in t.gamma_terms(m, c).items():
                lhs[(p, qq, n)] = lhs.get((p, qq, n), 0) + g1 * g2
        rhs: dict = {}
        for (p, u), g1 in t.gamma_terms(b, c).items():
            for (qq, n), g2 in t.gamma_terms(a, u).items():
                rhs[(p, qq, n)] = rhs.get((p, qq, n), 0) + g1 * g2
        lhs = {k: v for k, v in lhs.items() if v}
        rhs = {k: v for k, v in rhs.items() if v}
        rep.record(lhs == rhs, {"triple": [t.name(a), t.name(b), t.name(c)]})
    return [rep]


def lattice_generators(L: LatticeAlgebra, objs, sites) -> list:
    t = L.table
    n = t.quiver.n
    gens = [(f"Z{m}[{t.name(a)}]", L.z(m, a), t.dim(a)) for m in sites for a in objs]
    gens += [(f"K{list(al)}", L.K(al), (0,) * n) for al in unit_alphas(n)[1:]]
    return gens


def lattice_associativity(t: CategoryTable, window, total: int = 2,
                          config: LatticeConfig | None = None) -> list[CheckReport]:
    """Associativity and schedule independence on generator triples whose total dim is in bound."""
    L1, L2 = _lat_pair(t, config)
    objs = _objs(t, total, nonzero=True)
    gens = lattice_generators(L1, objs, list(window))
    assoc = CheckReport("lattice-assoc")
    sched = CheckReport("lattice-schedule")
    for (l1, x, d1), (l2, y, d2), (l3, z, d3) in itertools.product(gens, repeat=3):
        if not t.in_bound(k0_add(k0_add(d1, d2), d3)):
            continue
        inst = {"triple": [l1, l2, l3]}
        try:
            a1 = L1.mul(L1.mul(x, y), z)
            a2 = L1.mul(x, L1.mul(y, z))
            b1 = L2.mul(L2.mul(x, y), z)
        except OutOfTable as e:
            assoc.skipped.append(dict(inst, reason=str(e)))
            continue
        assoc.record(not sub(a1, a2), inst)
        sched.record(not sub(a1, b1), inst)
    return [assoc, sched]


def shift_suite(t: CategoryTable, window, total: int = 2) -> list[CheckReport]:
    """``Sigma`` is multiplicative; ``Sigma^p Sigma^-p = id``; z_monomial gives distinct single keys."""
    L = LatticeAlgebra(t)
    objs = _objs(t, total, nonzero=True)
    sites = list(window)
    gens = lattice_generators(L, objs, sites)
    auto = CheckReport("shift-automorphism")
    for (l1, x, d1), (l2, y, d2) in itertools.product(gens, repeat=2):
        if not t.in_bound(k0_add(d1, d2)):
            continue
        xy = L.mul(x, y)
        for p in (1, -1, 2):
            lhs = L.shift_sigma(xy, p)
            rhs = L.mul(L.shift_sigma(x, p), L.shift_sigma(y, p))
            auto.record(not sub(lhs, rhs), {"pair": [l1, l2], "p": p})
            auto.record(L.shift_sigma(L.shift_sigma(xy, p), -p) == xy, {"inverse": [l1, l2], "p": p})
    basis = CheckReport("z-monomial-basis")
    seen: dict = {}
    allobjs = _objs(t, total)
    for comps in itertools.product(allobjs, repeat=len(sites[:3])):
        A = Graded(dict(zip(sites[:3], comps)))
        z = L.z_monomial(A)
        ok = len(z) == 1 and all(c for c in z.values())
        key = next(iter(z)) if len(z) == 1 else None
        ok = ok and key[0] == tuple(A.items) and key not in seen
        seen[key] = A
        basis.record(ok, {"graded": {str(k): t.name(v) for k, v in A.as_dict().items()}})
    return [auto, basis]


# ---- F(A) ---------------------------------------------------------------------------

def graded_universe(t: CategoryTable, degrees, total: int):
    """Graded objects supported in ``degrees`` with total dimension ``<= total``."""
    objs = t.objects_upto()
    out = []
    for comps in itertools.product(objs, repeat=len(degrees)):
        s = sum(sum(t.dim(c)) for c in comps)
        if s <= total:
            out.append(Graded(dict(zip(degrees, comps))))
    return out


def falgebra_suite(t: CategoryTable, budget: int = 2**20, product_total: int = 2,
                   expansion_total: int = 3, degrees=(0, 1, 2)) -> list[CheckReport]:
    F = FAlgebra(t)
    gam = CheckReport("f-gamma-product")
    excluded = []
    uni = [A for A in graded_universe(t, degrees[:2], product_total)]
    for A, B in itertools.product(uni, repeat=2):
        if not _fits(t, *[c for _, c in A.items], *[c for _, c in B.items]):
            continue
        try:
            r = f_gamma_product_check(F, A, B, budget)
        except BudgetExceeded:
            excluded.append({"A": A.as_dict(), "B": B.as_dict()})
            continue
        gam.checked += r.checked
        gam.passed += r.passed
        gam.failures += r.failures
    gam.excluded += excluded
    exp = CheckReport("f-differential-expansion")
    for A in graded_universe(t, list(degrees), expansion_total):
        inst = {"graded": {str(k): t.name(v) for k, v in A.as_dict().items()}}
        try:
            lhs = F.reversed_word(A)
            rhs = f_differential_expansion(F, A)
        except OutOfTable as e:
            exp.skipped.append(dict(inst, reason=str(e)))
            continue
        exp.record(not sub(lhs, rhs), inst)
    return [gam, exp]


# ---- quantum group and tilting ------------------------------------------------------

def qgroup_suite(t: CategoryTable, window, serre_window=None) -> list[CheckReport]:
    from .qgroup import adjacent_commutator_check, distant_and_k_checks, serre_check

    sw = list(serre_window) if serre_window is not None else list(window)
    return [serre_check(t, sw), adjacent_commutator_check(t, window), distant_and_k_checks(t, window)]


def tilt_suite(F, window) -> list[CheckReport]:
    """Heis-level tilt check, lattice push-forward homomorphism, split factorization."""
    from .derived import verify_tilt_heis
    from .lattice import lattice_tilt_hom, split_factorization_check

    return [verify_tilt_heis(F), lattice_tilt_hom(F, window), split_factorization_check(F)]
