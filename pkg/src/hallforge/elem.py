"""Finitely supported linear combinations: plain dicts ``key -> Coeff``.

Zero coefficients are never stored.  Keys are hashable tuples whose layout
depends on the algebra (see ``hopf``, ``heis``, ``lattice``).
"""

from __future__ import annotations

from .coeff import Coeff


def add_term(d: dict, key, c: Coeff) -> None:
    if not c:
        return
    old = d.get(key)
    if old is None:
        d[key] = c
        return
    new = old + c
    if new:
        d[key] = new
    else:
        del d[key]


def add_into(d: dict, other: dict, scale=None) -> None:
    for k, c in other.items():
        add_term(d, k, c if scale is None else c * scale)


def combine(*pairs) -> dict:
    """``combine((c1, x1), (c2, x2), ...)`` = c1*x1 + c2*x2 + ..."""
    out: dict = {}
    for c, x in pairs:
        add_into(out, x, c)
    return out


def scale(x: dict, c) -> dict:
    if not c:
        return {}
    return {k: v * c for k, v in x.items()}


def sub(x: dict, y: dict) -> dict:
    out = dict(x)
    for k, c in y.items():
        add_term(out, k, -c)
    return out


def bilinear(x: dict, y: dict, keymul) -> dict:
    """Extend ``keymul(k1, k2) -> dict`` bilinearly."""
    out: dict = {}
    for k1, c1 in x.items():
        for k2, c2 in y.items():
            add_into(out, keymul(k1, k2), c1 * c2)
    return out


def monomial(ground, key) -> dict:
    return {key: ground.one}
