"""Exact fields: the rationals, prime fields, and towers of simple extensions.

Raw values are plain Python objects so hot loops can work on them directly:

* rationals: :class:`fractions.Fraction`
* prime field GF(p): ``int`` in ``range(p)``
* extension level of degree d: ``tuple`` of d raw values of the level below
  (power basis in the generator, lowest power first)

:class:`FieldElement` wraps a raw value together with its tower for
user-facing arithmetic.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cached_property

from . import univariate as up
from .errors import (
    InapplicableOperation,
    MalformedExtension,
    ParseError,
    ZeroDivisorDetected,
)


class FieldTower:
    """Common interface of every tower level.

    Subclasses implement the raw arithmetic; this class adds element
    wrapping, comparison and printing helpers.
    """

    characteristic: int
    parent: FieldTower | None = None
    degree: int = 1  # degree over the parent level

    # raw arithmetic ---------------------------------------------------
    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b):
        return a == b

    # structure -----------------------------------------------------------
    @cached_property
    def generator_names(self) -> tuple[str, ...]:
        if self.parent is None:
            return ()
        return self.parent.generator_names + (self.name,)

    @cached_property
    def absolute_degree(self) -> int:
        if self.parent is None:
            return 1
        return self.parent.absolute_degree * self.degree

    @cached_property
    def size(self) -> int | None:
        if self.characteristic == 0:
            return None
        return self.characteristic**self.absolute_degree

    @property
    def is_rational(self) -> bool:
        return False

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    @cached_property
    def levels(self) -> tuple[FieldTower, ...]:
        if self.parent is None:
            return (self,)
        return self.parent.levels + (self,)

    @property
    def base(self) -> FieldTower:
        return self.levels[0]

    def is_ancestor_of(self, other: FieldTower) -> bool:
        """True if ``self`` is ``other`` or one of its lower levels."""
        return self in other.levels

    def extend(self, name: str, minpoly) -> SimpleExtension:
        """Adjoin a root ``name`` of the monic polynomial ``minpoly``.

        ``minpoly`` is a coefficient list (low to high) of raw values of this
        tower, or a string in one variable called ``name``.
        """
        return SimpleExtension(self, name, minpoly)

    def embed(self, raw, source: FieldTower):
        """Map a raw value of ``source`` (a lower level of self) into self."""
        if source == self:
            return raw
        if self.parent is None:
            raise ValueError(f"{source.spec} is not a subfield of {self.spec}")
        lifted = self.parent.embed(raw, source)
        return (lifted,) + (self.parent.zero,) * (self.degree - 1)

    # element helpers --------------------------------------------------
    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.tower == self:
                return value
            return FieldElement(self, self.embed(value.raw, value.tower))
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, int):
            return FieldElement(self, self.from_int(value))
        if isinstance(value, Fraction):
            return FieldElement(self, self.from_fraction(value))
        raise TypeError(f"cannot convert {value!r} into {self.spec}")

    def from_fraction(self, q: Fraction):
        return self.div(self.from_int(q.numerator), self.from_int(q.denominator))

    def element(self, raw) -> FieldElement:
        return FieldElement(self, raw)

    def gen(self, name: str | None = None) -> FieldElement:
        """Return the named generator (default: the top one)."""
        name = name or self.name
        for level in self.levels[1:]:
            if level.name == name:
                return FieldElement(self, self.embed(level.generator_raw, level))
        raise KeyError(name)

    def parse(self, text: str) -> FieldElement:
        from .poly import PolyRing

        f = PolyRing(self, ()).parse(text)
        return FieldElement(self, f.constant_raw())

    def format(self, raw) -> str:
        from .poly import format_terms

        terms = sorted(self.to_terms(raw).items(), key=lambda t: t[0][::-1], reverse=True)
        return format_terms(self.base, terms, self.generator_names)

    def to_terms(self, raw) -> dict:
        """Expand a raw value as ``{generator exponents: base coefficient}``."""
        raise NotImplementedError

    def frobenius_power(self, raw, e: int):
        """Return ``raw ** (p ** e)``."""
        if self.characteristic == 0:
            raise InapplicableOperation("Frobenius needs positive characteristic")
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        for _ in range(e):
            raw = self.pow(raw, self.characteristic)
        return raw

    def pth_root(self, raw):
        # Frobenius is an automorphism of a finite field of size q = p^k,
        # with inverse x -> x^(q/p).
        return self.pow(raw, self.size // self.characteristic)

    def elements(self):
        """Iterate over every raw value (finite fields only)."""
        raise InapplicableOperation("cannot enumerate an infinite field")

    @property
    def spec(self) -> str:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, FieldTower) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"FieldTower({self.spec!r})"


class RationalField(FieldTower):
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)
    _key = ("QQ",)

    @property
    def is_rational(self):
        return True

    @property
    def spec(self):
        return "QQ"

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, q):
        return Fraction(q)

    def is_zero(self, a):
        return a == 0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return 1 / a

    def to_terms(self, raw):
        return {(): raw} if raw else {}

    def random(self, rng, height=5):
        return Fraction(rng.randint(-height, height), rng.randint(1, height))


class PrimeField(FieldTower):
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.characteristic = p
        self.p = p
        self.zero = 0
        self.one = 1 % p
        self._key = ("GF", p)

    @property
    def spec(self):
        return f"GF({self.p})"

    def from_int(self, n):
        return n % self.p

    def is_zero(self, a):
        return a == 0

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return pow(a, -1, self.p)

    def pth_root(self, raw):
        return raw

    def to_terms(self, raw):
        return {(): raw} if raw else {}

    def elements(self):
        return iter(range(self.p))

    def random(self, rng):
        return rng.randrange(self.p)


class SimpleExtension(FieldTower):
    """``parent[name] / (minpoly)`` with the power basis in ``name``."""

    def __init__(self, parent: FieldTower, name: str, minpoly):
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name or ""):
            raise MalformedExtension(f"invalid generator name {name!r}")
        if name in parent.generator_names:
            raise MalformedExtension(f"generator name {name!r} already used in the tower")
        if isinstance(minpoly, str):
            minpoly = _parse_univariate(parent, name, minpoly)
        coeffs = up.trim(parent, minpoly)
        if len(coeffs) < 2:
            raise MalformedExtension("extension polynomial must have degree at least 1")
        if coeffs[-1] != parent.one:
            raise MalformedExtension("extension polynomial must be monic")
        self.parent = parent
        self.name = name
        self.modulus = tuple(coeffs)
        self.degree = len(coeffs) - 1
        self.characteristic = parent.characteristic
        self.zero = (parent.zero,) * self.degree
        self.one = (parent.one,) + (parent.zero,) * (self.degree - 1)
        self._key = (parent._key, name, self.modulus)

    @property
    def generator_raw(self):
        if self.degree == 1:
            return (self.parent.neg(self.modulus[0]),)
        return (self.parent.zero, self.parent.one) + (self.parent.zero,) * (self.degree - 2)

    @property
    def spec(self):
        from .poly import PolyRing

        ring = PolyRing(self.parent, (self.name,))
        text = str(ring.from_coefficients({(i,): c for i, c in enumerate(self.modulus)}))
        return f"{self.parent.spec}[{self.name}]/({text})"

    def _pad(self, coeffs):
        coeffs = list(coeffs)
        return tuple(coeffs + [self.parent.zero] * (self.degree - len(coeffs)))

    def from_int(self, n):
        return (self.parent.from_int(n),) + (self.parent.zero,) * (self.degree - 1)

    def is_zero(self, a):
        P = self.parent
        return all(P.is_zero(c) for c in a)

    def add(self, a, b):
        P = self.parent
        return tuple(P.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        P = self.parent
        return tuple(P.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        P = self.parent
        return tuple(P.neg(x) for x in a)

    def mul(self, a, b):
        P = self.parent
        d = self.degree
        prod = [P.zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if P.is_zero(x):
                continue
            for j, y in enumerate(b):
                if P.is_zero(y):
                    continue
                prod[i + j] = P.add(prod[i + j], P.mul(x, y))
        m = self.modulus
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if P.is_zero(c):
                continue
            for j in range(d):
                prod[k - d + j] = P.sub(prod[k - d + j], P.mul(c, m[j]))
        return tuple(prod[:d])

    def inv(self, a):
        P = self.parent
        if self.is_zero(a):
            raise ZeroDivisionError("division by zero")
        g, s, _ = up.xgcd(P, list(a), list(self.modulus))
        if len(g) > 1:
            raise ZeroDivisorDetected(
                f"extension polynomial of {self.name} is reducible; common factor found", g
            )
        return self._pad(s)

    def to_terms(self, raw):
        out = {}
        for j, c in enumerate(raw):
            for e, b in self.parent.to_terms(c).items():
                out[e + (j,)] = b
        return out

    def elements(self):
        import itertools

        for combo in itertools.product(list(self.parent.elements()), repeat=self.degree):
            yield tuple(combo)

    def random(self, rng):
        return tuple(self.parent.random(rng) for _ in range(self.degree))


def _parse_univariate(parent, name, text):
    from .poly import PolyRing

    ring = PolyRing(parent, (name,))
    f = ring.parse(text)
    deg = f.total_degree()
    if deg < 0:
        raise MalformedExtension("extension polynomial must be nonzero")
    coeffs = [parent.zero] * (deg + 1)
    for (e,), c in f.items():
        coeffs[e] = c
    return coeffs


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


_BASE = re.compile(r"\s*(QQ|GF\(\s*(\d+)\s*\))\s*")
_STEP = re.compile(r"\[\s*([A-Za-z_][A-Za-z0-9_]*)\s*\]\s*/\s*\(")


def parse_field(text: str) -> FieldTower:
    """Parse ``QQ``, ``GF(p)`` or chains like ``QQ[i]/(i^2+1)[r]/(r^2-2)``."""
    m = _BASE.match(text)
    if not m:
        raise ParseError(f"bad field specification {text!r}", 1, 1)
    tower = QQ if m.group(1) == "QQ" else GF(int(m.group(2)))
    pos = m.end()
    while pos < len(text):
        step = _STEP.match(text, pos)
        if not step:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"bad field extension syntax near {text[pos:]!r}", 1, pos + 1)
        depth, j = 1, step.end()
        while j < len(text) and depth:
            depth += {"(": 1, ")": -1}.get(text[j], 0)
            j += 1
        if depth:
            raise ParseError("unbalanced parentheses in field specification", 1, pos + 1)
        tower = tower.extend(step.group(1), text[step.end() : j - 1])
        pos = j
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tower


class FieldElement:
    """An element of a :class:`FieldTower` with the usual operators."""

    __slots__ = ("tower", "raw")

    def __init__(self, tower: FieldTower, raw):
        self.tower = tower
        self.raw = raw

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.tower == self.tower:
                return other.raw
            if other.tower.is_ancestor_of(self.tower):
                return self.tower.embed(other.raw, other.tower)
            raise TypeError("field elements live in incompatible towers")
        if isinstance(other, (int, Fraction)):
            return self.tower(other).raw
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.tower, self.tower.add(self.raw, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.tower, self.tower.sub(self.raw, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.tower, self.tower.sub(o, self.raw))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.tower, self.tower.mul(self.raw, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.tower, self.tower.div(self.raw, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.tower, self.tower.div(o, self.raw))

    def __neg__(self):
        return FieldElement(self.tower, self.tower.neg(self.raw))

    def __pow__(self, e: int):
        return FieldElement(self.tower, self.tower.pow(self.raw, e))

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return False
        if o is NotImplemented:
            return NotImplemented
        return self.tower.eq(self.raw, o)

    def __hash__(self):
        return hash((self.tower, self.raw))

    def __bool__(self):
        return not self.tower.is_zero(self.raw)

    def is_zero(self) -> bool:
        return self.tower.is_zero(self.raw)

    def inverse(self) -> FieldElement:
        return invert(self)

    def __str__(self):
        return self.tower.format(self.raw)

    def __repr__(self):
        return f"FieldElement({self.tower.spec!r}, {str(self)!r})"


def extend(tower: FieldTower, name: str, minpoly) -> SimpleExtension:
    return tower.extend(name, minpoly)


def invert(x: FieldElement) -> FieldElement:
    """Multiplicative inverse via the extended Euclidean algorithm.

    Raises ``ZeroDivisionError`` for zero and :class:`ZeroDivisorDetected` if
    a reducible extension polynomial is discovered along the way.
    """
    return FieldElement(x.tower, x.tower.inv(x.raw))


def frobenius_power(x: FieldElement, e: int) -> FieldElement:
    return FieldElement(x.tower, x.tower.frobenius_power(x.raw, e))
