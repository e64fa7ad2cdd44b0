"""Sparse multivariate polynomials over a field tower.

A :class:`MultiPoly` stores a dict from exponent tuples to nonzero raw
coefficients; the canonical term list is that dict sorted descending in the
ring's monomial order. Two polynomials are equal iff their dicts are.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ExponentOverflow, ParseError, UnknownSymbol
from .fields import FieldElement, FieldTower

MAX_EXPONENT = 2**31
NEG_INF = -math.inf  # total degree of the zero polynomial


@dataclass(frozen=True)
class MonomialOrder:
    """``lex``, ``grevlex`` or a two-block elimination order.

    The block order compares the first ``block`` variables by grevlex, then
    the rest by grevlex, so anything involving the front block is larger than
    everything that does not.
    """

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.block < 1:
            raise ValueError("block order needs a positive front block size")

    def key(self, exp):
        if self.kind == "grevlex":
            return (sum(exp),) + tuple(-e for e in reversed(exp))
        if self.kind == "lex":
            return exp
        k = self.block
        front, back = exp[:k], exp[k:]
        return (
            (sum(front),)
            + tuple(-e for e in reversed(front))
            + (sum(back),)
            + tuple(-e for e in reversed(back))
        )

    @classmethod
    def parse(cls, text: str | MonomialOrder) -> MonomialOrder:
        if isinstance(text, MonomialOrder):
            return text
        text = text.strip()
        m = re.fullmatch(r"block[:(]\s*(\d+)\s*\)?", text)
        if m:
            return cls("block", int(m.group(1)))
        return cls(text)

    def __str__(self):
        return f"block({self.block})" if self.kind == "block" else self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class PolyRing:
    """``field[variables]`` with a fixed monomial order."""

    def __init__(self, field: FieldTower, variables, order="grevlex"):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be distinct")
        for v in variables:
            if not _NAME.match(v):
                raise ValueError(f"invalid variable name {v!r}")
            if v in field.generator_names:
                raise ValueError(f"variable {v!r} clashes with a field generator")
        self.field = field
        self.variables = variables
        self.nvars = len(variables)
        self.order = MonomialOrder.parse(order)
        if self.order.kind == "block" and self.order.block >= self.nvars:
            raise ValueError("block size must be smaller than the number of variables")
        self._keycache = {}
        self._zero_exp = (0,) * self.nvars

    def key(self, exp):
        k = self._keycache.get(exp)
        if k is None:
            k = self._keycache[exp] = self.order.key(exp)
        return k

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.variables == other.variables
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.variables, self.order))

    def __repr__(self):
        return f"PolyRing({self.field.spec}, {list(self.variables)}, {self.order})"

    # constructors ---------------------------------------------------------
    def zero(self) -> MultiPoly:
        return MultiPoly(self, {})

    def one(self) -> MultiPoly:
        return self.constant(self.field.one)

    def constant(self, raw) -> MultiPoly:
        if isinstance(raw, FieldElement):
            raw = self.field(raw).raw
        elif isinstance(raw, (int, Fraction)):
            raw = self.field(raw).raw
        if self.field.is_zero(raw):
            return MultiPoly(self, {})
        return MultiPoly(self, {self._zero_exp: raw})

    def var(self, name: str) -> MultiPoly:
        i = self.variables.index(name)
        exp = tuple(1 if j == i else 0 for j in range(self.nvars))
        return MultiPoly(self, {exp: self.field.one})

    def gens(self):
        return tuple(self.var(v) for v in self.variables)

    def monomial(self, exp) -> MultiPoly:
        return MultiPoly(self, {tuple(exp): self.field.one})

    def from_coefficients(self, coeffs: dict) -> MultiPoly:
        F = self.field
        terms = {}
        for exp, c in coeffs.items():
            if isinstance(c, (FieldElement, int, Fraction)):
                c = F(c).raw
            if not F.is_zero(c):
                terms[tuple(exp)] = c
        return MultiPoly(self, terms)

    def coerce(self, obj) -> MultiPoly:
        if isinstance(obj, MultiPoly):
            if obj.ring == self:
                return obj
            return obj.to_ring(self)
        if isinstance(obj, str):
            return self.parse(obj)
        return self.constant(obj)

    def parse(self, text: str) -> MultiPoly:
        return _Parser(self, text).parse()

    # derived rings ----------------------------------------------------------
    def with_order(self, order) -> PolyRing:
        return PolyRing(self.field, self.variables, order)

    def with_field(self, field: FieldTower) -> PolyRing:
        return PolyRing(field, self.variables, self.order)

    def fresh_name(self, *hints: str) -> str:
        taken = set(self.variables) | set(self.field.generator_names)
        for h in hints:
            if h not in taken:
                return h
        base = hints[0] if hints else "T"
        i = 1
        while f"{base}{i}" in taken:
            i += 1
        return f"{base}{i}"

    def monomials_up_to(self, deg: int):
        """All exponent vectors of total degree <= deg, descending in order."""
        out = []

        def rec(prefix, left, k):
            if k == self.nvars:
                out.append(tuple(prefix))
                return
            for e in range(left + 1):
                prefix.append(e)
                rec(prefix, left - e, k + 1)
                prefix.pop()

        if deg >= 0:
            rec([], deg, 0)
        out.sort(key=self.key, reverse=True)
        return out


class MultiPoly:
    """Immutable sparse polynomial. Do not mutate ``_terms``."""

    __slots__ = ("ring", "_terms", "_sorted")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self._terms = terms
        self._sorted = None

    # access ---------------------------------------------------------------
    def items(self):
        return self._terms.items()

    def raw_terms(self) -> dict:
        return self._terms

    def terms(self):
        """Canonical term list: ``[(exponents, raw coefficient), ...]``
        sorted strictly descending in the monomial order."""
        if self._sorted is None:
            self._sorted = sorted(self._terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)
        return self._sorted

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self.ring._zero_exp in self._terms)

    def constant_raw(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get(self.ring._zero_exp, self.ring.field.zero)

    def constant_value(self) -> FieldElement:
        return FieldElement(self.ring.field, self.constant_raw())

    def coefficient(self, exp) -> FieldElement:
        return FieldElement(self.ring.field, self._terms.get(tuple(exp), self.ring.field.zero))

    @property
    def leading_monomial(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms()[0][0]

    @property
    def leading_coefficient(self) -> FieldElement:
        return FieldElement(self.ring.field, self.terms()[0][1])

    def leading_term(self) -> MultiPoly:
        exp, c = self.terms()[0]
        return MultiPoly(self.ring, {exp: c})

    def total_degree(self):
        if not self._terms:
            return NEG_INF
        return max(sum(e) for e in self._terms)

    def degree_in(self, name: str) -> int:
        i = self.ring.variables.index(name)
        return max((e[i] for e in self._terms), default=-1)

    def support_variables(self):
        used = set()
        for e in self._terms:
            used.update(i for i, k in enumerate(e) if k)
        return tuple(self.ring.variables[i] for i in sorted(used))

    # arithmetic -----------------------------------------------------------
    def _other(self, other):
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise TypeError("polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return MultiPoly(self.ring, _add(self.ring.field, self._terms, other._terms))

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return MultiPoly(self.ring, {e: F.neg(c) for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return MultiPoly(self.ring, _mul(self.ring.field, self._terms, other._terms))

    __rmul__ = __mul__

    def scalar_mul(self, c) -> MultiPoly:
        F = self.ring.field
        c = F(c).raw if not isinstance(c, tuple) else c
        if F.is_zero(c):
            return self.ring.zero()
        return MultiPoly(self.ring, {e: F.mul(c, v) for e, v in self._terms.items()})

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            if not other.is_constant() or other.is_zero():
                raise ZeroDivisionError("can only divide by a nonzero constant")
            other = other.constant_value()
        F = self.ring.field
        return self.scalar_mul(F.inv(F(other).raw))

    def __pow__(self, e: int) -> MultiPoly:
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        if self._terms and e * max((max(x, default=0) for x in self._terms), default=0) > MAX_EXPONENT:
            raise ExponentOverflow("exponent exceeds 2^31")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def monic(self) -> MultiPoly:
        if not self._terms:
            return self
        return self.scalar_mul(self.ring.field.inv(self.terms()[0][1]))

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction, FieldElement)):
            return self._terms == self.ring.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # evaluation / conversion ---------------------------------------------
    def evaluate(self, point) -> FieldElement:
        """Value at ``point``; coordinates may live in an extension tower."""
        if len(point) != self.ring.nvars:
            raise ValueError(
                f"point has {len(point)} coordinates, ring has {self.ring.nvars} variables"
            )
        towers = [p.tower for p in point if isinstance(p, FieldElement)]
        T = self.ring.field
        for t in towers:
            if T.is_ancestor_of(t):
                T = t
            elif not t.is_ancestor_of(T):
                raise TypeError("point coordinates live in incompatible towers")
        coords = [T(p).raw for p in point]
        return FieldElement(T, evaluate_raw(self, T, coords))

    def to_ring(self, ring: PolyRing, mapping=None) -> MultiPoly:
        """Re-read this polynomial in ``ring``.

        Variables are matched by name (or through ``mapping``); coefficients
        are embedded when ``ring.field`` extends this ring's field.
        """
        src = self.ring
        mapping = mapping or {}
        idx = []
        for v in src.variables:
            target = mapping.get(v, v)
            if target not in ring.variables:
                if any(e[src.variables.index(v)] for e in self._terms):
                    raise ValueError(f"variable {v!r} missing from target ring")
                idx.append(None)
            else:
                idx.append(ring.variables.index(target))
        F, G = src.field, ring.field
        terms = {}
        for e, c in self._terms.items():
            new = [0] * ring.nvars
            for i, k in enumerate(e):
                if k:
                    new[idx[i]] += k
            terms[tuple(new)] = c if F == G else G.embed(c, F)
        return MultiPoly(ring, terms)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"


def evaluate_raw(f: MultiPoly, T: FieldTower, coords):
    F = f.ring.field
    cache = {}
    acc = T.zero
    for e, c in f.items():
        term = c if T == F else T.embed(c, F)
        for i, k in enumerate(e):
            if k:
                pk = cache.get((i, k))
                if pk is None:
                    pk = cache[(i, k)] = T.pow(coords[i], k)
                term = T.mul(term, pk)
        acc = T.add(acc, term)
    return acc


def _add(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for e, c in b.items():
        v = out.get(e)
        if v is None:
            out[e] = c
        else:
            v = F.add(v, c)
            if F.is_zero(v):
                del out[e]
            else:
                out[e] = v
    return out


def _mul(F, a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            v = F.mul(c1, c2)
            old = out.get(e)
            if old is not None:
                v = F.add(old, v)
            out[e] = v
    return {e: c for e, c in out.items() if not F.is_zero(c)}


# -- printing ------------------------------------------------------------


def _format_monomial(exp, names) -> str:
    parts = []
    for name, k in zip(names, exp):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def _base_parts(base: FieldTower, c):
    if base.characteristic == 0:
        return c < 0, str(abs(c))
    return False, str(c)


def _join(pieces) -> str:
    if not pieces:
        return "0"
    out = []
    for k, (negative, body) in enumerate(pieces):
        if k == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


def _product(*factors) -> str:
    return "*".join(f for f in factors if f)


def format_terms(base: FieldTower, terms, names) -> str:
    """Format ``[(exponents, base coefficient)]`` in the given order."""
    pieces = []
    for exp, c in terms:
        negative, mag = _base_parts(base, c)
        mono = _format_monomial(exp, names)
        if mono and mag == "1":
            mag = ""
        pieces.append((negative, _product(mag, mono) or "1"))
    return _join(pieces)


def format_poly(f: MultiPoly) -> str:
    T = f.ring.field
    base = T.base
    gnames = T.generator_names
    pieces = []
    for exp, c in f.terms():
        mono = _format_monomial(exp, f.ring.variables)
        tterms = T.to_terms(c)
        if len(tterms) == 1:
            (gexp, b), = tterms.items()
            negative, mag = _base_parts(base, b)
            gmono = _format_monomial(gexp, gnames)
            if (gmono or mono) and mag == "1":
                mag = ""
            pieces.append((negative, _product(mag, gmono, mono) or "1"))
        else:
            pieces.append((False, _product(f"({T.format(c)})", mono)))
    return _join(pieces)


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^()]))")


class _Parser:
    """Recursive descent over ``+ - * / ^ ( )``, integers and names."""

    def __init__(self, ring: PolyRing, text: str):
        self.ring = ring
        self.text = text
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _where(self, offset):
        line = self.text.count("\n", 0, offset) + 1
        col = offset - (self.text.rfind("\n", 0, offset) + 1) + 1
        return line, col

    def _tokenize(self, text):
        tokens = []
        i = 0
        while True:
            m = _TOKEN.match(text, i)
            if not m:
                rest = text[i:]
                if rest.strip() == "":
                    break
                off = i + (len(rest) - len(rest.lstrip()))
                raise ParseError(f"unexpected character {text[off]!r}", *self._where(off))
            if m.group(1) is not None:
                tokens.append(("int", int(m.group(1)), m.start(1)))
            elif m.group(2) is not None:
                tokens.append(("name", m.group(2), m.start(2)))
            else:
                tokens.append(("op", m.group(3), m.start(3)))
            i = m.end()
        tokens.append(("end", None, len(text)))
        return tokens

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, *self._where(tok[2]))

    def expect(self, op):
        tok = self.take()
        if tok != ("op", op, tok[2]):
            raise self.error(f"expected {op!r}", tok)

    def parse(self) -> MultiPoly:
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("int", "name") or tok[1] == "(":
                raise self.error("implicit multiplication is not allowed; use '*'")
            raise self.error(f"unexpected {tok[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "*/":
                self.take()
                rhs = self.unary()
                if tok[1] == "*":
                    value = value * rhs
                else:
                    if not rhs.is_constant() or rhs.is_zero():
                        raise self.error("division is only allowed by a nonzero constant", tok)
                    value = value / rhs
            elif tok[0] in ("int", "name") or tok[1] == "(":
                raise self.error("implicit multiplication is not allowed; use '*'")
            else:
                return value

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            value = self.unary()
            return -value if tok[1] == "-" else value
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            etok = self.take()
            if etok[0] != "int":
                raise self.error("exponent must be a nonnegative integer", etok)
            if etok[1] > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent {etok[1]} exceeds 2^31")
            return base ** etok[1]
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            return self.ring.constant(val)
        if kind == "name":
            if val in self.ring.variables:
                return self.ring.var(val)
            if val in self.ring.field.generator_names:
                return self.ring.constant(self.ring.field.gen(val))
            raise UnknownSymbol(val, *self._where(tok[2]))
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect(")")
            return value
        if kind == "end":
            raise self.error("unexpected end of expression", tok)
        raise self.error(f"unexpected {val!r}", tok)


# -- module-level helpers named after the operations -----------------------


def parse(text: str, ring: PolyRing) -> MultiPoly:
    return ring.parse(text)


def evaluate(f: MultiPoly, point) -> FieldElement:
    return f.evaluate(point)


def leading_term(f: MultiPoly, order=None) -> MultiPoly:
    if order is not None:
        f = f.to_ring(f.ring.with_order(order))
    return f.leading_term()


def total_degree(f: MultiPoly):
    return f.total_degree()
