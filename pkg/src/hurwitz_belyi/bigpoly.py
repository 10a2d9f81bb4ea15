"""Dense univariate polynomials over the integers.

A polynomial is a list of Python ints in ascending degree with no trailing
zeros; the zero polynomial is ``[]``.  All routines are exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Poly = list  # list[int], ascending

_KRONECKER_MIN = 40  # use Kronecker substitution above this length

try:  # GMP integers make the pseudo-remainder loop several times faster
    from gmpy2 import mpz as _Z
except ImportError:  # pragma: no cover
    _Z = int


def trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly(coeffs: Iterable[int]) -> list[int]:
    return trim([int(c) for c in coeffs])


def degree(p: Sequence[int]) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(p) - 1


def lc(p: Sequence[int]) -> int:
    return p[-1] if p else 0


def is_zero(p: Sequence[int]) -> bool:
    return not p


def x_power(n: int) -> list[int]:
    return [0] * n + [1]


def add(p: Sequence[int], q: Sequence[int]) -> list[int]:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def neg(p: Sequence[int]) -> list[int]:
    return [-c for c in p]


def sub(p: Sequence[int], q: Sequence[int]) -> list[int]:
    return add(p, neg(q))


def scale(p: Sequence[int], k: int) -> list[int]:
    if k == 0:
        return []
    return [c * k for c in p]


def shift(p: Sequence[int], k: int) -> list[int]:
    """Multiply by x^k."""
    return [0] * k + list(p) if p else []


def _mul_school(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _pack(p: Sequence[int], bits: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = (acc << bits) + c
    return acc


def _unpack(n: int, bits: int, length: int) -> list[int]:
    out = []
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    for _ in range(length):
        d = n & mask
        n >>= bits
        if d >= half:
            d -= 1 << bits
            n += 1
        out.append(d)
    return out


def mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    if not p or not q:
        return []
    if min(len(p), len(q)) < _KRONECKER_MIN:
        return trim(_mul_school(p, q))
    mp = max(abs(c) for c in p).bit_length()
    mq = max(abs(c) for c in q).bit_length()
    bits = mp + mq + min(len(p), len(q)).bit_length() + 2
    prod = _pack(p, bits) * _pack(q, bits)
    return trim(_unpack(prod, bits, len(p) + len(q) - 1))


def power(p: Sequence[int], e: int) -> list[int]:
    if e < 0:
        raise ValueError("negative exponent")
    result = [1]
    base = list(p)
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def product(ps: Iterable[Sequence[int]]) -> list[int]:
    items = [list(p) for p in ps]
    if not items:
        return [1]
    while len(items) > 1:  # balanced tree keeps operand sizes even
        nxt = [mul(items[i], items[i + 1]) for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]


def deriv(p: Sequence[int]) -> list[int]:
    return trim([i * p[i] for i in range(1, len(p))])


def evaluate(p: Sequence[int], x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def compose(p: Sequence[int], q: Sequence[int]) -> list[int]:
    """p(q(x))."""
    acc: list[int] = []
    for c in reversed(p):
        acc = add(mul(acc, q), [c] if c else [])
    return acc


def reverse(p: Sequence[int], n: int | None = None) -> list[int]:
    """x^n p(1/x) with n = deg p by default."""
    n = degree(p) if n is None else n
    out = [0] * (n + 1)
    for i, c in enumerate(p):
        out[n - i] = c
    return trim(out)


def content(p: Sequence[int]) -> int:
    g = 0
    for c in p:
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def primitive(p: Sequence[int]) -> list[int]:
    """Primitive part with positive leading coefficient."""
    if not p:
        return []
    g = content(p)
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def divmod_exact(p: Sequence[int], q: Sequence[int]) -> tuple[list[int], list[int]] | None:
    """Quotient and remainder over Z when every step divides exactly, else None."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq, lq = len(q) - 1, q[-1]
    if len(r) - 1 < dq:
        return [], r
    quot = [0] * (len(r) - dq)
    for k in range(len(r) - 1 - dq, -1, -1):
        c = r[k + dq]
        if c:
            t, rem = divmod(c, lq)
            if rem:
                return None
            quot[k] = t
            for i in range(dq + 1):
                r[k + i] -= t * q[i]
    return trim(quot), trim(r[:dq])


def divides(q: Sequence[int], p: Sequence[int]) -> bool:
    res = divmod_exact(p, q)
    return res is not None and not res[1]


def exact_div(p: Sequence[int], q: Sequence[int]) -> list[int]:
    res = divmod_exact(p, q)
    if res is None or res[1]:
        raise ArithmeticError("division is not exact")
    return res[0]


def prem(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) a mod b."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    e = len(r) - len(b) + 1
    if e <= 0:
        return r
    while r and len(r) - 1 >= db:
        la = r[-1]
        s = len(r) - 1 - db
        r = [c * lb for c in r]
        for i in range(db + 1):
            r[s + i] -= la * b[i]
        r.pop()
        trim(r)
        e -= 1
    if e > 0:
        f = lb ** e
        r = [c * f for c in r]
    return r


def resultant(f: Sequence[int], g: Sequence[int]) -> int:
    """Resultant by the subresultant PRS (Collins, Brown)."""
    if not f or not g:
        return 0
    return int(_resultant([_Z(c) for c in f], [_Z(c) for c in g]))


def _resultant(A: list, B: list):
    dA, dB = degree(A), degree(B)
    s = 1
    if dA < dB:
        A, B = B, A
        dA, dB = dB, dA
        if dA % 2 and dB % 2:
            s = -1
    if dB == 0:
        return s * B[0] ** dA
    ca, cb = content(A), content(B)
    A = [c // ca for c in A]
    B = [c // cb for c in B]
    t = ca ** dB * cb ** dA
    gg, h = 1, 1
    while True:
        dA, dB = degree(A), degree(B)
        delta = dA - dB
        if dA % 2 and dB % 2:
            s = -s
        R = prem(A, B)
        if not R:
            return 0
        A = B
        den = gg * h ** delta
        B = [c // den for c in R]
        gg = lc(A)
        if delta == 0:
            pass
        elif delta == 1:
            h = gg
        else:
            h = gg ** delta // h ** (delta - 1)
        if degree(B) == 0:
            dA = degree(A)
            lb = B[0]
            if dA == 0:
                return s * t
            return s * t * (lb ** dA // h ** (dA - 1))


def discriminant(f: Sequence[int]) -> int:
    """(-1)^(n(n-1)/2) res(f, f') / lc(f)."""
    n = degree(f)
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    r = resultant(f, deriv(f))
    q, rem = divmod(r, f[-1])
    if rem:
        raise ArithmeticError("resultant not divisible by the leading coefficient")
    return -q if (n * (n - 1) // 2) % 2 else q


# -- gcd and squarefree decomposition ------------------------------------

def _mod_poly(p: Sequence[int], m: int) -> list[int]:
    return trim([c % m for c in p])


def _gcd_mod(a: list[int], b: list[int], m: int) -> list[int]:
    a, b = _mod_poly(a, m), _mod_poly(b, m)
    while b:
        inv = pow(b[-1], -1, m)
        r = list(a)
        db = len(b) - 1
        while r and len(r) - 1 >= db:
            c = r[-1] * inv % m
            s = len(r) - 1 - db
            for i in range(db + 1):
                r[s + i] = (r[s + i] - c * b[i]) % m
            trim(r)
        a, b = b, r
    return a


_FAST_PRIMES = (2**61 - 1, 2**31 - 1, 1000000007)


def coprime_fast(a: Sequence[int], b: Sequence[int]) -> bool:
    """True certifies gcd(a, b) = 1 over Q; False is inconclusive."""
    for m in _FAST_PRIMES:
        if lc(a) % m and lc(b) % m:
            return degree(_gcd_mod(list(a), list(b), m)) == 0
    return False


def gcd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Primitive gcd over Z with positive leading coefficient."""
    if not a:
        return primitive(b)
    if not b:
        return primitive(a)
    if degree(a) == 0 or degree(b) == 0:
        return [math.gcd(content(a), content(b))]
    ca, cb = content(a), content(b)
    c = math.gcd(ca, cb)
    if coprime_fast(a, b):
        return [c]
    A, B = primitive(a), primitive(b)
    if degree(A) < degree(B):
        A, B = B, A
    gg, h = 1, 1
    while B and degree(B) > 0:
        delta = degree(A) - degree(B)
        R = prem(A, B)
        A = B
        if not R:
            break
        den = gg * h ** delta
        B = [x // den for x in R]
        gg = lc(A)
        if delta == 1:
            h = gg
        elif delta > 1:
            h = gg ** delta // h ** (delta - 1)
    else:
        if B:  # nonzero constant remainder: coprime
            return [c]
    return scale(primitive(A), c)


def squarefree_decomposition(p: Sequence[int]) -> tuple[int, list[tuple[list[int], int]]]:
    """Yun's algorithm: p = unit * prod f_i^i with primitive squarefree coprime f_i.

    Returns (unit, [(f_i, i), ...]) with the trivial factors omitted; unit is
    the signed content.
    """
    if not p:
        raise ValueError("squarefree decomposition of zero")
    unit = content(p) * (1 if p[-1] > 0 else -1)
    f = primitive(p)
    out: list[tuple[list[int], int]] = []
    if degree(f) == 0:
        return unit, out
    # every gcd below is primitive, so by Gauss's lemma all divisions are exact over Z
    fp = deriv(f)
    a0 = gcd(f, fp)
    b = exact_div(f, a0)
    c = exact_div(fp, a0)
    d = sub(c, deriv(b))
    i = 1
    while degree(b) > 0:
        a = gcd(b, d)
        if degree(a) > 0:
            out.append((primitive(a), i))
        b = exact_div(b, a)
        c = exact_div(d, a)
        d = sub(c, deriv(b))
        i += 1
    return unit, out


# -- modular resultant oracle -------------------------------------------

def resultant_mod(f: Sequence[int], g: Sequence[int], m: int) -> int:
    """Resultant modulo a prime m by the Euclidean algorithm over GF(m).

    Assumes the leading coefficients of f and g are nonzero modulo m.
    """
    a, b = [c % m for c in f], [c % m for c in g]
    if not a[-1] or not b[-1]:
        raise ValueError("leading coefficient vanishes modulo the prime")
    res = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return res * pow(b[0], da, m) % m
        # a mod b over GF(m)
        r = list(a)
        inv = pow(b[-1], -1, m)
        while r and len(r) - 1 >= db:
            c = r[-1] * inv % m
            s = len(r) - 1 - db
            for i in range(db + 1):
                r[s + i] = (r[s + i] - c * b[i]) % m
            trim(r)
        if not r:
            return 0
        dr = len(r) - 1
        # res(a, b) = (-1)^(da db) lc(b)^(da - dr) res(b, r)
        if da % 2 and db % 2:
            res = -res
        res = res * pow(b[-1], da - dr, m) % m
        a, b = b, r


def discriminant_mod(f: Sequence[int], m: int) -> int:
    n = degree(f)
    r = resultant_mod(f, deriv(f), m)
    val = r * pow(f[-1] % m, -1, m) % m
    return (-val) % m if (n * (n - 1) // 2) % 2 else val


# -- interpolation ---------------------------------------------------------

def interpolate(xs: Sequence[int], ys: Sequence[int]) -> list[int]:
    """Integer polynomial through the points (Newton form); raises if not integral."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # expand Newton form
    out: list[Fraction] = [Fraction(0)]
    for i in range(n - 1, -1, -1):
        # out = out * (x - xs[i]) + coef[i]
        nxt = [Fraction(0)] * (len(out) + 1)
        for k, c in enumerate(out):
            nxt[k + 1] += c
            nxt[k] -= c * xs[i]
        nxt[0] += coef[i]
        out = nxt
    res = []
    for c in out:
        if c.denominator != 1:
            raise ArithmeticError("interpolated polynomial is not integral")
        res.append(c.numerator)
    return trim(res)


def divide_linear(p: Sequence[int], r: int) -> tuple[list[int], int]:
    """Synthetic division by (x - r): (quotient, remainder)."""
    if not p:
        return [], 0
    out = [0] * (len(p) - 1)
    acc = 0
    for i in range(len(p) - 1, -1, -1):
        acc = acc * r + p[i]
        if i:
            out[i - 1] = acc
    return trim(out), acc


def to_str(p: Sequence[int], var: str = "x") -> str:
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        if i == 0:
            mon = str(abs(c))
        else:
            xs = var if i == 1 else f"{var}^{i}"
            mon = xs if abs(c) == 1 else f"{abs(c)}*{xs}"
        terms.append(("-" if c < 0 else "+", mon))
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, mon in terms[1:]:
        s += f" {sign} {mon}"
    return s
