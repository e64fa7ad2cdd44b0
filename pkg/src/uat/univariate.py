"""Dense univariate polynomials over a field tower level.

A polynomial is a list of raw field values, lowest degree first, with no
trailing zeros; the zero polynomial is ``[]``. Every function takes the
coefficient field ``F`` explicitly so the same code serves the rationals,
prime fields and extension levels.

Factorization lives here too: Cantor-Zassenhaus over finite fields and a
rational-root plus Kronecker search over the rationals.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from .errors import FactorizationBudgetExceeded, InapplicableOperation


def trim(F, a):
    a = list(a)
    while a and F.is_zero(a[-1]):
        a.pop()
    return a


def degree(a):
    return len(a) - 1


def add(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return trim(F, out)


def neg(F, a):
    return [F.neg(c) for c in a]


def sub(F, a, b):
    return add(F, a, neg(F, b))


def scale(F, a, c):
    if F.is_zero(c):
        return []
    return trim(F, [F.mul(c, x) for x in a])


def mul(F, a, b):
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(F, out)


def divmod_(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    inv_lc = F.inv(b[-1])
    if len(a) <= db:
        return [], trim(F, a)
    q = [F.zero] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if F.is_zero(c):
            continue
        c = F.mul(c, inv_lc)
        q[k - db] = c
        for j in range(db + 1):
            a[k - db + j] = F.sub(a[k - db + j], F.mul(c, b[j]))
    return trim(F, q), trim(F, a[:db])


def rem(F, a, b):
    return divmod_(F, a, b)[1]


def monic(F, a):
    if not a:
        return []
    return scale(F, a, F.inv(a[-1]))


def gcd(F, a, b):
    a, b = trim(F, a), trim(F, b)
    while b:
        a, b = b, rem(F, a, b)
    return monic(F, a)


def xgcd(F, a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = trim(F, a), trim(F, b)
    s0, s1 = [F.one], []
    t0, t1 = [], [F.one]
    while r1:
        q, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, q, s1))
        t0, t1 = t1, sub(F, t0, mul(F, q, t1))
    if not r0:
        return [], [], []
    c = F.inv(r0[-1])
    return scale(F, r0, c), scale(F, s0, c), scale(F, t0, c)


def derivative(F, a):
    return trim(F, [F.mul(F.from_int(i), a[i]) for i in range(1, len(a))])


def evaluate(F, a, x):
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def powmod(F, a, e, m):
    result = [F.one]
    base = rem(F, a, m)
    while e:
        if e & 1:
            result = rem(F, mul(F, result, base), m)
        e >>= 1
        if e:
            base = rem(F, mul(F, base, base), m)
    return result


def power(F, a, e):
    result = [F.one]
    base = list(a)
    while e:
        if e & 1:
            result = mul(F, result, base)
        e >>= 1
        if e:
            base = mul(F, base, base)
    return result


# -- squarefree decomposition ---------------------------------------------


def _pth_root_poly(F, a, p):
    # a(x) = b(x^p); return b with coefficientwise p-th roots
    return trim(F, [F.pth_root(a[i]) for i in range(0, len(a), p)])


def squarefree_decomposition(F, f):
    """Return ``[(g, i), ...]`` with monic squarefree pairwise coprime ``g`` and
    ``f = lc(f) * prod g**i``. Works in characteristic 0 (Yun) and over
    finite fields (with p-th roots)."""
    f = monic(F, f)
    if len(f) <= 1:
        return []
    p = F.characteristic
    if p == 0:
        return _yun(F, f)
    return _sqf_charp(F, f, p)


def _yun(F, f):
    out = []
    df = derivative(F, f)
    a = gcd(F, f, df)
    b = divmod_(F, f, a)[0]
    c = divmod_(F, df, a)[0]
    d = sub(F, c, derivative(F, b))
    i = 1
    while len(b) > 1:
        g = gcd(F, b, d)
        if len(g) > 1:
            out.append((g, i))
        b = divmod_(F, b, g)[0]
        c = divmod_(F, d, g)[0]
        d = sub(F, c, derivative(F, b))
        i += 1
    return out


def _sqf_charp(F, f, p):
    out = {}

    def record(g, i):
        if len(g) > 1:
            if i in out:
                out[i] = mul(F, out[i], g)
            else:
                out[i] = g

    def rec(f, mult):
        i = 1
        df = derivative(F, f)
        if df:
            c = gcd(F, f, df)
            w = divmod_(F, f, c)[0]
            while len(w) > 1:
                y = gcd(F, w, c)
                z = divmod_(F, w, y)[0]
                record(monic(F, z), i * mult)
                i += 1
                w = y
                c = divmod_(F, c, y)[0]
        else:
            c = f
        if len(c) > 1:
            rec(monic(F, _pth_root_poly(F, c, p)), mult * p)

    rec(f, 1)
    return sorted(((g, i) for i, g in out.items()), key=lambda t: t[1])


def squarefree_part(F, f):
    out = [F.one]
    for g, _ in squarefree_decomposition(F, f):
        out = mul(F, out, g)
    return out


# -- factorization ----------------------------------------------------------


def factor(F, f, *, degree_budget=8, seed=0, combo_budget=200_000):
    """Factor ``f`` into monic irreducibles.

    Returns ``(lc, [(g, e), ...])`` sorted by (degree, coefficients text).
    Raises :class:`FactorizationBudgetExceeded` when a piece cannot be
    completely factored within the configured budget, never a wrong answer.
    """
    f = trim(F, f)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    lc = f[-1]
    if len(f) == 1:
        return lc, []
    pieces = []
    for g, i in squarefree_decomposition(F, f):
        for h in _factor_squarefree(F, g, degree_budget, seed, combo_budget):
            pieces.append((h, i))
    pieces.sort(key=lambda t: (len(t[0]), [F.format(c) for c in t[0]], t[1]))
    return lc, pieces


def is_irreducible(F, f, **kw):
    _, fs = factor(F, f, **kw)
    return len(fs) == 1 and fs[0][1] == 1


def _factor_squarefree(F, g, degree_budget, seed, combo_budget):
    if len(g) <= 2:
        return [g]
    if F.size is not None:
        return _cantor_zassenhaus(F, g, seed)
    if F.is_rational:
        return _factor_rational(F, g, degree_budget, combo_budget)
    raise FactorizationBudgetExceeded(
        "factorization over algebraic extensions of the rationals is not available",
        degree=len(g) - 1,
    )


def _cantor_zassenhaus(F, g, seed):
    q = F.size
    x = [F.zero, F.one]
    out = []
    # distinct-degree split
    rest = g
    h = x
    i = 0
    while len(rest) - 1 >= 2 * (i + 1):
        i += 1
        h = powmod(F, h, q, rest)
        d = gcd(F, rest, sub(F, h, x))
        if len(d) > 1:
            out.extend(_equal_degree(F, d, i, q, seed))
            rest = divmod_(F, rest, d)[0]
            h = rem(F, h, rest)
    if len(rest) > 1:
        out.append(monic(F, rest))
    return out


def _equal_degree(F, f, d, q, seed):
    n = len(f) - 1
    if n == d:
        return [monic(F, f)]
    rng = random.Random(seed * 1_000_003 + n * 31 + d)
    p = F.characteristic
    tries = 0
    while True:
        tries += 1
        if tries <= 64:
            a = trim(F, [F.random(rng) for _ in range(n)])
        else:
            # deterministic sweep fallback: x^k + c
            k, c = divmod(tries - 65, max(2, q))
            a = [F.zero] * (k % n + 1)
            a[-1] = F.one
            a[0] = F.add(a[0], F.from_int(c)) if len(a) > 1 else F.from_int(c)
            a = trim(F, a)
            if tries > 64 + 4 * n * q:
                raise FactorizationBudgetExceeded("equal-degree split failed", degree=n)
        if len(a) <= 1:
            continue
        if p == 2:
            # trace from GF(q^d) to GF(2)
            k = d * (q.bit_length() - 1)
            t = a
            b = a
            for _ in range(k - 1):
                t = rem(F, mul(F, t, t), f)
                b = add(F, b, t)
        else:
            b = sub(F, powmod(F, a, (q**d - 1) // 2, f), [F.one])
        u = gcd(F, f, b)
        if 1 < len(u) < len(f):
            v = divmod_(F, f, u)[0]
            return _equal_degree(F, u, d, q, seed) + _equal_degree(F, v, d, q, seed)


# rationals ------------------------------------------------------------------


def _primitive_int(coeffs):
    den = 1
    for c in coeffs:
        den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _int_eval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _int_divide(a, b):
    """Exact division of integer polynomials, or None."""
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return None
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c % b[-1]:
            return None
        c //= b[-1]
        q[k - db] = c
        for j in range(db + 1):
            a[k - db + j] -= c * b[j]
    if any(a[:db]):
        return None
    return q


def _factor_rational(F, g, degree_budget, combo_budget):
    ints = _primitive_int(g)
    factors = []
    # rational roots first
    changed = True
    while changed and len(ints) > 2:
        changed = False
        a0, an = ints[0], ints[-1]
        if a0 == 0:
            factors.append([0, 1])
            ints = ints[1:]
            changed = True
            continue
        for q in _divisors(an):
            for p in _divisors(a0):
                for s in (p, -p):
                    r = Fraction(s, q)
                    if math.gcd(s, q) != 1:
                        continue
                    lin = [-r.numerator, r.denominator]
                    quo = _int_divide(ints, lin)
                    if quo is not None:
                        factors.append(lin)
                        ints = quo
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
    if len(ints) > 1:
        factors.extend(_kronecker(ints, degree_budget, combo_budget))
    return [monic(F, [Fraction(c) for c in h]) for h in factors]


def _kronecker(f, degree_budget, combo_budget):
    n = len(f) - 1
    if n <= 3:
        return [f]  # no rational roots left, so irreducible
    if n > degree_budget:
        raise FactorizationBudgetExceeded(
            "degree exceeds the rational factorization budget", degree=n, budget=degree_budget
        )
    for s in range(2, n // 2 + 1):
        # choose s+1 integer points with small nonzero values
        pts = sorted(
            (x for x in range(-12, 13) if _int_eval(f, x) != 0),
            key=lambda x: (len(_divisors(_int_eval(f, x))), abs(x)),
        )[: s + 1]
        vals = [_int_eval(f, x) for x in pts]
        choices = [_divisors(v) for v in vals]
        total = 2 ** s
        for c in choices:
            total *= len(c)
        if total > combo_budget:
            raise FactorizationBudgetExceeded(
                "Kronecker search exceeds its combination budget", degree=n, combos=total
            )
        signed = [choices[0]] + [[d for e in c for d in (e, -e)] for c in choices[1:]]
        for combo in itertools.product(*signed):
            h = _interpolate(pts, combo)
            if h is None or len(h) - 1 != s:
                continue
            hi = _primitive_int(h)
            quo = _int_divide(f, hi)
            if quo is not None:
                return _kronecker(hi, degree_budget, combo_budget) + _kronecker(
                    quo, degree_budget, combo_budget
                )
    return [f]


def _interpolate(xs, ys):
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        den = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            den *= xs[i] - xs[j]
        for k in range(n):
            coeffs[k] += ys[i] * basis[k] / den
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs or any(c.denominator != 1 for c in coeffs):
        return None
    return [int(c) for c in coeffs]


def require_positive_characteristic(F):
    if F.characteristic == 0:
        raise InapplicableOperation("operation needs positive characteristic")
