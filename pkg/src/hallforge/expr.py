"""A small expression language for elements of B(A), Heis(A), L(A) and F(A).

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' int)?
    atom   := int ('/' int)? | 'v' | 'q' | generator | '(' expr ')'

Generators, by algebra:

    B       [name]  K[(a,b,..)]
    heis    Zp[name]  Zm[name]  K[(..)]  Km[(..)]      (K is the plus copy)
    lattice Z{m}[name]  K[(..)]
    f       X{m}[name]

Negative powers are allowed for scalars and for group-like terms (a single
monomial in the K generators).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .elem import add_into, scale
from .quiver import CategoryTable, OutOfTable

ALGEBRAS = ("B", "heis", "lattice", "f")

_GEN_KINDS = {
    "B": {"H", "K"},
    "heis": {"Zp", "Zm", "K", "Km"},
    "lattice": {"Z", "K"},
    "f": {"X"},
}


class ExprError(ValueError):
    pass


class ParseError(ExprError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class UnknownName(ExprError):
    pass


class WrongAlgebra(ExprError):
    pass


# ---- AST ----------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str  # "v" or "q"


@dataclass(frozen=True)
class Gen:
    kind: str  # H, K, Km, Zp, Zm, Z, X
    arg: object  # object name (str) or K vector (tuple)
    site: int | None = None


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


@dataclass(frozen=True)
class Prod:
    factors: tuple


@dataclass(frozen=True)
class Sum:
    terms: tuple  # ((sign, node), ...) with sign in {"+", "-"}


@dataclass(frozen=True)
class Group:
    arg: object


# ---- parser ---------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<gen>(?:Zp|Zm|Km|K|Z|X)(?=[\[{]))
  | (?P<num>\d+)
  | (?P<sym>[vq](?![\w\[{]))
  | (?P<op>[-+*/^(){}\[\]])
""", re.VERBOSE)


class _Parser:
    def __init__(self, src: str, target: str, table: CategoryTable | None):
        if target not in ALGEBRAS:
            raise ValueError(f"unknown algebra {target!r}")
        self.src = src
        self.target = target
        self.table = table
        self.pos = 0

    # -- low level --

    def skip(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            got = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, got {got!r}", self.pos)
        self.pos += 1

    def integer(self, signed: bool = True) -> int:
        self.skip()
        m = re.compile(r"-?\d+" if signed else r"\d+").match(self.src, self.pos)
        if not m:
            raise ParseError("expected an integer", self.pos)
        self.pos = m.end()
        return int(m.group())

    # -- grammar --

    def parse(self):
        self.skip()
        if not self.src.strip():
            raise ParseError("empty expression", 0)
        node = self.expr()
        self.skip()
        if self.pos != len(self.src):
            raise ParseError(f"unexpected {self.src[self.pos]!r}", self.pos)
        return node

    def expr(self):
        terms = [("+", self.term())]
        while self.peek() in ("+", "-"):
            sign = self.peek()
            self.pos += 1
            terms.append((sign, self.term()))
        return terms[0][1] if len(terms) == 1 else Sum(tuple(terms))

    def term(self):
        fs = [self.factor()]
        while self.peek() == "*":
            self.pos += 1
            fs.append(self.factor())
        return fs[0] if len(fs) == 1 else Prod(tuple(fs))

    def factor(self):
        if self.peek() == "-":
            self.pos += 1
            return Neg(self.factor())
        node = self.atom()
        if self.peek() == "^":
            self.pos += 1
            node = Pow(node, self.integer())
        return node

    def atom(self):
        self.skip()
        start = self.pos
        if self.peek() == "(":
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return Group(node)
        if self.peek() == "[":
            return self.generator("H", start)
        m = _TOKEN.match(self.src, self.pos)
        if not m or m.lastgroup in ("ws", "op"):
            got = self.src[self.pos] if self.pos < len(self.src) else "end of input"
            raise ParseError(f"unexpected {got!r}", self.pos)
        self.pos = m.end()
        if m.lastgroup == "num":
            val = Fraction(int(m.group()))
            if self.peek() == "/":
                self.pos += 1
                den = self.integer(signed=False)
                if den == 0:
                    raise ParseError("zero denominator", self.pos)
                val = Fraction(int(m.group()), den)
            return Num(val)
        if m.lastgroup == "sym":
            return Sym(m.group())
        return self.generator(m.group(), start)

    def generator(self, kind: str, start: int):
        if kind not in _GEN_KINDS[self.target]:
            raise WrongAlgebra(f"generator {kind!r} is not part of the {self.target} algebra (position {start})")
        site = None
        if kind in ("Z", "X"):
            self.expect("{")
            site = self.integer()
            self.expect("}")
        self.expect("[")
        if kind in ("K", "Km"):
            self.expect("(")
            vec = [self.integer()]
            while self.peek() == ",":
                self.pos += 1
                vec.append(self.integer())
            self.expect(")")
            self.expect("]")
            arg = tuple(vec)
            if self.table is not None and len(arg) != self.table.quiver.n:
                raise ParseError(f"K vector needs {self.table.quiver.n} entries", start)
            return Gen(kind, arg)
        end = self.src.find("]", self.pos)
        if end < 0:
            raise ParseError("unterminated object name", self.pos)
        name = self.src[self.pos:end].strip()
        if not name:
            raise ParseError("empty object name", self.pos)
        self.pos = end + 1
        if self.table is not None:
            resolve_name(self.table, name)
        return Gen(kind, name, site)


def resolve_name(table: CategoryTable, name: str) -> int:
    try:
        return table.lookup(name)
    except KeyError:
        raise UnknownName(f"unknown object {name!r}") from None


def parse_expr(src: str, target: str, table: CategoryTable | None = None):
    return _Parser(src, target, table).parse()


# ---- renderer -------------------------------------------------------------------

def render(node) -> str:
    if isinstance(node, Num):
        v = node.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Gen):
        if node.kind in ("K", "Km"):
            return f"{node.kind}[({','.join(str(x) for x in node.arg)})]"
        if node.kind == "H":
            return f"[{node.arg}]"
        if node.site is not None:
            return f"{node.kind}{{{node.site}}}[{node.arg}]"
        return f"{node.kind}[{node.arg}]"
    if isinstance(node, Group):
        return f"({render(node.arg)})"
    if isinstance(node, Neg):
        return "-" + _wrap(node.arg, (Sum, Prod))
    if isinstance(node, Pow):
        return f"{_wrap(node.base, (Sum, Prod, Pow, Neg))}^{node.exp}"
    if isinstance(node, Prod):
        return " * ".join(_wrap(f, (Sum,)) for f in node.factors)
    if isinstance(node, Sum):
        out = render(node.terms[0][1]) if node.terms[0][0] == "+" else "-" + _wrap(node.terms[0][1], (Sum,))
        for sign, t in node.terms[1:]:
            out += f" {sign} {_wrap(t, (Sum,))}"
        return out
    raise TypeError(f"not an expression node: {node!r}")


def _wrap(node, kinds) -> str:
    s = render(node)
    return f"({s})" if isinstance(node, kinds) else s


# ---- evaluation -----------------------------------------------------------------

class Evaluator:
    """Evaluates ASTs in one algebra.  ``alg`` is a RingelHopf, HeisDouble,
    LatticeAlgebra or FAlgebra matching ``target``."""

    def __init__(self, alg, target: str):
        self.alg = alg
        self.target = target
        self.table = alg.table
        self.ground = alg.table.ground

    def scalar(self, c) -> dict:
        return scale(self.alg.one(), c) if c else {}

    def gen(self, g: Gen) -> dict:
        a = self.alg
        if g.kind in ("K", "Km"):
            alpha = tuple(g.arg)
            if self.target == "heis":
                return a.kp(alpha) if g.kind == "K" else a.km(alpha)
            return a.K(alpha)
        obj = resolve_name(self.table, g.arg)
        if g.kind == "H":
            return a.obj(obj)
        if g.kind == "Zp":
            return a.zp(obj)
        if g.kind == "Zm":
            return a.zm(obj)
        if g.kind == "Z":
            return a.z(g.site, obj)
        if g.kind == "X":
            return a.x(g.site, obj)
        raise WrongAlgebra(g.kind)

    def inverse(self, x: dict, node) -> dict:
        if len(x) != 1:
            raise ExprError(f"cannot invert {render(node)!r}: not a single group-like term")
        (key, c), = x.items()
        inv = self._inverse_key(key)
        if inv is None:
            raise ExprError(f"cannot invert {render(node)!r}: not group-like")
        return scale(inv, c.inv())

    def _inverse_key(self, key):
        a = self.alg
        neg = lambda v: tuple(-x for x in v)  # noqa: E731
        if self.target == "B":
            alpha, obj = key
            return a.K(neg(alpha)) if obj == 0 else None
        if self.target == "heis":
            (beta, m), (alpha, p) = key
            if m or p:
                return None
            return a.mul(a.kp(neg(alpha)), a.km(neg(beta)))
        if self.target == "lattice":
            sites, alpha = key
            return a.K(neg(alpha)) if not sites else None
        return a.one() if key == () else None

    def eval(self, node) -> dict:
        try:
            return self._eval(node)
        except OutOfTable as e:
            raise OutOfTable(f"{e} (while evaluating {render(node)!r})") from None

    def _eval(self, node) -> dict:
        g = self.ground
        if isinstance(node, Num):
            return self.scalar(g.coeff(node.value))
        if isinstance(node, Sym):
            return self.scalar(g.vpow(1 if node.name == "v" else 2))
        if isinstance(node, Gen):
            return self.gen(node)
        if isinstance(node, Group):
            return self._eval(node.arg)
        if isinstance(node, Neg):
            return scale(self._eval(node.arg), -g.one)
        if isinstance(node, Pow):
            base = self._eval(node.base)
            if node.exp < 0:
                base = self.inverse(base, node.base)
            out = self.alg.one()
            for _ in range(abs(node.exp)):
                out = self.alg.mul(out, base)
            return out
        if isinstance(node, Prod):
            out = self._eval(node.factors[0])
            for f in node.factors[1:]:
                try:
                    out = self.alg.mul(out, self._eval(f))
                except OutOfTable as e:
                    raise OutOfTable(f"{e} (in product {render(node)!r})") from None
            return out
        if isinstance(node, Sum):
            out: dict = {}
            for sign, t in node.terms:
                add_into(out, self._eval(t), -g.one if sign == "-" else g.one)
            return out
        raise TypeError(node)
