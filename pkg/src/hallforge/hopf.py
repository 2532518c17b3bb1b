"""The extended Ringel algebra B(A) of a category table, as a Hopf algebra.

Basis keys are pairs ``(alpha, obj)`` standing for ``K_alpha [obj]`` (K on
the left).  Elements are dicts ``key -> Coeff``; tensor elements use pairs
of keys.  Also here: the Heisenberg double product computed straight from
the coproduct and the pairing, and the naive lattice algebra built from
adjacent copies of it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeff import Coeff
from .elem import add_into, add_term, bilinear
from .quiver import CategoryTable, k0_add, k0_neg
from .rewrite import Rewriter


def zero_k0(n: int) -> tuple:
    return (0,) * n


@dataclass
class HopfConfig:
    twisted: bool = True
    # antipode chains 0 = A_0 < A_1 < ... < A_n = A; False also admits A_0 != 0
    chains_from_zero: bool = True


class RingelHopf:
    """B(A) over a frozen ``CategoryTable``."""

    def __init__(self, table: CategoryTable, config: HopfConfig | None = None):
        self.table = table
        self.ground = table.ground
        self.config = config or HopfConfig()
        self.n = table.quiver.n
        self.zero = zero_k0(self.n)
        self._w: dict = {}

    # -- constructors --

    def one(self) -> dict:
        return {(self.zero, 0): self.ground.one}

    def obj(self, a: int, alpha=None) -> dict:
        self.table.check(a)
        return {(tuple(alpha) if alpha is not None else self.zero, a): self.ground.one}

    def K(self, alpha) -> dict:
        return {(tuple(alpha), 0): self.ground.one}

    def dimk(self, key) -> tuple:
        return self.table.dim(key[1])

    # -- product --

    def hall(self, a: int, b: int, twisted: bool | None = None) -> dict:
        """``[a]*[b]`` (or ``[a] o [b]``) as ``{obj: coeff}``."""
        t = self.table
        tw = self.config.twisted if twisted is None else twisted
        c0 = t.euler(t.dim(b), t.dim(a)) if tw else self.ground.one
        return {c: c0 * g for c, g in t.hall_products(a, b).items()}

    def mul_keys(self, k1, k2, twisted: bool | None = None) -> dict:
        (alpha, a), (beta, b) = k1, k2
        t = self.table
        # [a] K_beta = (a|beta) K_beta [a]
        s = t.sym(t.dim(a), beta) if a else self.ground.one
        gamma = k0_add(alpha, beta)
        return {(gamma, c): s * x for c, x in self.hall(a, b, twisted).items()}

    def mul(self, x: dict, y: dict, twisted: bool | None = None) -> dict:
        return bilinear(x, y, lambda k1, k2: self.mul_keys(k1, k2, twisted))

    def mul_many(self, *xs) -> dict:
        out = self.one()
        for x in xs:
            out = self.mul(out, x)
        return out

    # -- coalgebra --

    def coproduct_key(self, key) -> dict:
        alpha, a = key
        t = self.table
        aut_a = t.aut_count(a)
        out: dict = {}
        for s, qt, cnt in t.subobjects(a):
            c = t.euler(t.dim(qt), t.dim(s)) * self.ground.coeff(
                cnt * t.aut_count(s) * t.aut_count(qt)) / aut_a
            add_term(out, ((alpha, s), (k0_add(alpha, t.dim(s)), qt)), c)
        return out

    def coproduct(self, x: dict) -> dict:
        out: dict = {}
        for k, c in x.items():
            add_into(out, self.coproduct_key(k), c)
        return out

    def tensor_mul(self, X: dict, Y: dict) -> dict:
        """Componentwise product on B(A) (x) B(A)."""
        out: dict = {}
        for (a1, a2), c in X.items():
            for (b1, b2), d in Y.items():
                left = self.mul_keys(a1, b1)
                right = self.mul_keys(a2, b2)
                cd = c * d
                for k1, x1 in left.items():
                    for k2, x2 in right.items():
                        add_term(out, (k1, k2), cd * x1 * x2)
        return out

    def counit(self, x: dict) -> Coeff:
        out = self.ground.zero
        for (alpha, a), c in x.items():
            if a == 0:
                out = out + c
        return out

    def id_tensor_counit(self, X: dict, side: int) -> dict:
        """Apply counit to tensor factor ``side`` (0 or 1)."""
        out: dict = {}
        for pair, c in X.items():
            if pair[side][1] == 0:
                add_term(out, pair[1 - side], c)
        return out

    # -- antipode --

    def _chain_sum(self, a: int) -> dict:
        """Signed sum over strict chains ending at ``a`` (see ``antipode``)."""
        key = (a, self.config.chains_from_zero)
        if key in self._w:
            return self._w[key]
        t = self.table
        if a == 0:
            res = self.one()
        else:
            res = {}
            if not self.config.chains_from_zero:
                add_term(res, (self.zero, a), self.ground.coeff(t.aut_count(a)))
            for s, qt, cnt in t.subobjects(a):
                if s == a:
                    continue
                c = -t.euler(t.dim(qt), t.dim(s)) * (cnt * t.aut_count(qt))
                add_into(res, self.mul(self._chain_sum(s), self.obj(qt)), c)
        self._w[key] = res
        return res

    def antipode_key(self, key) -> dict:
        alpha, a = key
        if a == 0:
            return self.K(k0_neg(alpha))
        t = self.table
        w = dict(self._chain_sum(a))
        if not self.config.chains_from_zero:
            # the n = 0 "chain" A_0 = A is not part of the sum
            add_term(w, (self.zero, a), -self.ground.coeff(t.aut_count(a)))
        tail = self.K(k0_neg(k0_add(alpha, t.dim(a))))
        return {k: c / t.aut_count(a) for k, c in self.mul(w, tail).items()}

    def antipode(self, x: dict) -> dict:
        out: dict = {}
        for k, c in x.items():
            add_into(out, self.antipode_key(k), c)
        return out

    def convolution(self, x: dict, side: int) -> dict:
        """``m (S (x) id) Delta(x)`` for side 0, ``m (id (x) S) Delta(x)`` for side 1."""
        out: dict = {}
        for (k1, k2), c in self.coproduct(x).items():
            if side == 0:
                add_into(out, self.mul(self.antipode_key(k1), {k2: self.ground.one}), c)
            else:
                add_into(out, self.mul({k1: self.ground.one}, self.antipode_key(k2)), c)
        return out

    # -- pairing --

    def pair_keys(self, k1, k2) -> Coeff:
        (alpha, a), (beta, b) = k1, k2
        if a != b:
            return self.ground.zero
        return self.table.sym(alpha, beta) / self.table.aut_count(a)

    def pair(self, x: dict, y: dict) -> Coeff:
        out = self.ground.zero
        for k1, c1 in x.items():
            for k2, c2 in y.items():
                if k1[1] == k2[1]:
                    out = out + c1 * c2 * self.pair_keys(k1, k2)
        return out

    def pair2(self, X: dict, Y: dict) -> Coeff:
        """``phi (x) phi`` on two tensor elements."""
        out = self.ground.zero
        for (a1, a2), c in X.items():
            for (b1, b2), d in Y.items():
                if a1[1] == b1[1] and a2[1] == b2[1]:
                    out = out + c * d * self.pair_keys(a1, b1) * self.pair_keys(a2, b2)
        return out

    # -- Heisenberg double from the pairing --

    def cross_generic(self, xi, omega) -> dict:
        """``xi * omega`` for plus-key ``xi`` and minus-key ``omega``, as ``{(minus, plus): c}``.

        ``xi omega = sum phi(xi_1, omega_2) omega_1 (x) xi_2``.
        """
        out: dict = {}
        dx = self.coproduct_key(xi)
        dw = self.coproduct_key(omega)
        for (w1, w2), cw in dw.items():
            for (x1, x2), cx in dx.items():
                if x1[1] != w2[1]:
                    continue
                p = self.pair_keys(x1, w2)
                add_term(out, (w1, x2), cw * cx * p)
        return out

    def hd_mul(self, x: dict, y: dict, cross=None) -> dict:
        """Product on the Omega (x) Xi basis ``{(minus_key, plus_key): c}``."""
        cross = cross or self.cross_generic
        out: dict = {}
        for (w, xi), c in x.items():
            for (w2, xi2), d in y.items():
                for (m1, p1), e in cross(xi, w2).items():
                    left = self.mul_keys(w, m1)
                    right = self.mul_keys(p1, xi2)
                    ced = c * d * e
                    for kl, cl in left.items():
                        for kr, cr in right.items():
                            add_term(out, (kl, kr), ced * cl * cr)
        return out

    # -- naive lattice algebra --

    def naive_rewriter(self, strategy: str = "leftmost") -> Rewriter:
        one_key = (self.zero, 0)

        def rule(t1, t2):
            (m, k1), (n, k2) = t1, t2
            if m < n:
                return None
            if m == n:
                return [(c, ((m, k),) if k != one_key else ()) for k, c in self.mul_keys(k1, k2).items()]
            if m >= n + 2:
                return [(self.ground.one, (t2, t1))]
            # adjacent: t1 at the higher site plays xi, t2 plays omega
            return [(c, tuple(tok for tok in ((n, w1), (m, x2)) if tok[1] != one_key))
                    for (w1, x2), c in self.cross_generic(k1, k2).items()]

        return Rewriter(self.ground, rule, strategy)

    def naive_mul(self, x: dict, y: dict, rw: Rewriter | None = None) -> dict:
        """Product in the naive lattice algebra; keys are site-sorted tuples of ``(site, bkey)``."""
        rw = rw or self.naive_rewriter()
        out: dict = {}
        for w1, c1 in x.items():
            for w2, c2 in y.items():
                add_into(out, rw.normalize(tuple(w1) + tuple(w2)), c1 * c2)
        return out

    def naive_gen(self, site: int, key) -> dict:
        if key == (self.zero, 0):
            return {(): self.ground.one}
        return {((site, key),): self.ground.one}


def bkey_to_json(table: CategoryTable, key) -> dict:
    return {"k": list(key[0]), "obj": table.name(key[1])}


def belem_to_json(table: CategoryTable, x: dict) -> list:
    rows = [dict(bkey_to_json(table, k), coeff=c.to_json()) for k, c in x.items()]
    return sorted(rows, key=lambda r: (r["k"], r["obj"]))
