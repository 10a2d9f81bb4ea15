"""The semicubical clan pi_{a,b,d} and its quotients as exact rational maps.

Every map is first written as a ledger: a rational constant times a product
of integer polynomials raised to signed exponents.  Only then is it expanded,
so cancellation on walls happens through the gcd in RationalMap.from_polys.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import bigpoly as bp
from .belyi_verify import RationalMap, profile_from_polys

NOT_APPLICABLE = "NotApplicable"
DEFAULT_MAX_N = 60

X = [0, 1]
ONE_MINUS_X = [1, -1]


class ClanError(ValueError):
    pass


@dataclass
class Ledger:
    """constant * prod(poly ** exponent), exponents possibly negative."""

    constant: Fraction
    factors: list[tuple[list[int], int]]

    def raw(self) -> tuple[list[int], list[int]]:
        """Integer (A, C) with A/C equal to the ledger, before any reduction."""
        c = self.constant
        num = [c.numerator]
        den = [c.denominator]
        for f, e in self.factors:
            if e > 0:
                num = bp.mul(num, bp.power(f, e))
            elif e < 0:
                den = bp.mul(den, bp.power(f, -e))
        return num, den

    def to_map(self) -> RationalMap:
        return RationalMap.from_polys(*self.raw())


def _rpow(base: int, e: int) -> Fraction:
    # 0^0 = 1 is the convention the formulas need at walls
    if base == 0:
        if e == 0:
            return Fraction(1)
        if e < 0:
            raise ClanError("zero raised to a negative power")
        return Fraction(0)
    return Fraction(base) ** e


@dataclass(frozen=True)
class ClanParams:
    a: int
    b: int
    d: int

    @property
    def n(self) -> int:
        return self.a + self.b + 2 * self.d

    def validate(self, max_n: int | None = DEFAULT_MAX_N) -> None:
        if self.a * self.b * self.d * self.n == 0:
            raise ClanError(f"degenerate clan parameters a={self.a} b={self.b} d={self.d} (need a b d n nonzero)")
        if max_n is not None and max(abs(self.a), abs(self.b), abs(self.d), abs(self.n)) > max_n:
            raise ClanError(f"parameters exceed the cap {max_n}")

    def quadratics(self) -> tuple[list[int], list[int], list[int], list[int]]:
        a, b, d, n = self.a, self.b, self.d, self.n
        A = [(a + d) * (a + 2 * d), -2 * n * (a + d), n * (n - d)]
        B = [a * (a + d), -2 * a * n, n * (n - d)]
        C = [a * (a + d), -2 * a * (n - d), (a + b) * (n - d)]
        D = [a * (a + 2 * d), -2 * a * n, n * (a + b)]
        return A, B, C, D

    def ledger(self) -> Ledger:
        a, b, d, n = self.a, self.b, self.d, self.n
        A, B, C, D = self.quadratics()
        const = _rpow(a, a) * _rpow(b, b) / (_rpow(2, d) * _rpow(d, 2 * d) * _rpow(n, n))
        factors = [
            (A, a + d), (B, b + d), (D, d),
            (X, -(a + 2 * d)), (ONE_MINUS_X, -(b + 2 * d)), (C, -(n - d)),
        ]
        return Ledger(const, factors)


def clan_map(a: int, b: int, d: int, *, max_n: int | None = DEFAULT_MAX_N) -> RationalMap:
    p = ClanParams(a, b, d)
    p.validate(max_n)
    return p.ledger().to_map()


def sym_ledger(u: int, v: int, w: int) -> Ledger:
    d = u + v + w
    if d == 0:
        raise ClanError("u + v + w must be nonzero")
    p = ClanParams(u - d, v - d, d)
    A, B, C, D = p.quadratics()
    sign = -1 if (d - w) % 2 else 1
    const = Fraction(sign) / (_rpow(2, d) * _rpow(d, 2 * d) * _rpow(d - u, d - u)
                              * _rpow(d - v, d - v) * _rpow(d - w, d - w))
    factors = [(A, u), (B, v), (C, w), (D, d), (X, -(d + u)), (ONE_MINUS_X, -(d + v))]
    return Ledger(const, factors)


def clan_sym(u: int, v: int, w: int) -> RationalMap:
    """Pi_{u,v,w}, the clan in coordinates symmetric under u <-> w."""
    return sym_ledger(u, v, w).to_map()


def clan_V(a: int, d: int) -> RationalMap:
    """Quotient of pi_{a,a,d} by its x -> 1 - x symmetry."""
    if a == 0 or d == 0:
        raise ClanError("clan_V needs a and d nonzero")
    L1 = [-a - 2 * d, 4 * a + 4 * d]
    Q = [a * (a + 2 * d), -4 * a * (2 * a + 3 * d), 4 * (2 * a + d) ** 2]
    L2 = [-a - d, 4 * a + 2 * d]
    const = Fraction(1) / (_rpow(d, 2 * d) * _rpow(2, 2 * a + 3 * d))
    return Ledger(const, [(L1, d), (Q, a + d), (X, -(a + 2 * d)), (L2, -(2 * a + d))]).to_map()


def clan_S(a: int, d: int) -> RationalMap:
    """Quotient of pi_{a,d,d} by its order-three symmetry."""
    n = a + 3 * d
    if a == 0 or d == 0 or n == 0:
        raise ClanError("clan_S needs a, d and a + 3d nonzero")
    Q = [27 * d * d * (a + d) * (a + 2 * d), 2 * a * a * d * (5 * a + 9 * d), a ** 3 * (a + d)]
    const = _rpow(-a, a) / (_rpow(2, d) * _rpow(d, d) * _rpow(n, n))
    return Ledger(const, [([-1, 1], a + d), (Q, d), (X, -d)]).to_map()


def nominal_degree(a: int, b: int, d: int) -> int:
    """N(a, b, d): the total of the positive exponent contributions."""
    n = a + b + 2 * d
    qs = [2 * (d - n), 2 * (a + d), 2 * (b + d), 2 * d, -a - 2 * d, -b - 2 * d, a + b]
    return sum(q for q in qs if q > 0)


def _wall_quantities(a: int, b: int, d: int) -> list[int]:
    n = a + b + 2 * d
    return [d - n, a + d, b + d, a + 2 * d, b + 2 * d, a + b]


@dataclass
class DegreeResult:
    degree: int
    nominal: int
    wall: bool


def clan_degree(a: int, b: int, d: int) -> DegreeResult:
    """Degree of pi_{a,b,d}; on a wall the actual reduced degree is returned with wall=True."""
    N = nominal_degree(a, b, d)
    wall = any(q == 0 for q in _wall_quantities(a, b, d))
    m = clan_map(a, b, d, max_n=None).degree
    if not wall and m != N:
        raise ClanError(f"degree {m} differs from N = {N} off the walls")
    return DegreeResult(m, N, wall or m != N)


# -- discriminant ------------------------------------------------------------

def _theorem_hypotheses(a: int, b: int, d: int) -> bool:
    return a > 0 and b > 0 and d > 0 and len({a, b, d}) == 3 and math.gcd(a, math.gcd(b, d)) == 1


def disc_closed_form(a: int, b: int, d: int) -> tuple[int, int, int]:
    """(signed constant, exponent of v, exponent of v - 1) for the clan pencil."""
    n = a + b + 2 * d
    e = (a - 1) * a // 2 + (b - 1) * b // 2 + d
    c = (-1) ** e
    c *= 2 ** (n * (d + 2 * n))
    c *= a ** (2 * n * n - a * a + 2 * a * n - n)
    c *= b ** (2 * n * n - b * b - n + 2 * b * n)
    c *= d ** ((10 * n * n - (1 + a + b) * (a + b + 3 * n)) // 2)
    c *= (a + b) ** ((a + b + d - 1) * n)
    c *= (a + d) ** (a * n + a + d * n + d + n * n - n)
    c *= (b + d) ** (b * n + b + d * n + d + n * n - n)
    c *= (a + 2 * d) ** ((a + 2 * d) ** 2)
    c *= (b + 2 * d) ** ((b + 2 * d) ** 2)
    s = a + b + d
    c *= s ** (s * (2 * s + 1))
    c *= n ** (n * (3 * n + 2))
    return c, 3 * n - 7, 9


def clan_pencil(a: int, b: int, d: int) -> tuple[list[int], list[int]]:
    """(P0, P1) with pi_{a,b,d} = P0/P1, keeping the theorem's scaling (no content removal).

    P0 = a^a b^b A^(a+d) B^(b+d) D^d and P1 = 2^d d^(2d) n^n x^(a+2d) (1-x)^(b+2d) C^(n-d),
    valid when every exponent is nonnegative (the distinct-positive chamber).
    """
    p = ClanParams(a, b, d)
    A, B, C, D = p.quadratics()
    n = p.n
    P0 = bp.scale(bp.product([bp.power(A, a + d), bp.power(B, b + d), bp.power(D, d)]), a ** a * b ** b)
    P1 = bp.scale(bp.product([bp.power(X, a + 2 * d), bp.power(ONE_MINUS_X, b + 2 * d), bp.power(C, n - d)]),
                  2 ** d * d ** (2 * d) * n ** n)
    return P0, P1


@dataclass
class DiscCheck:
    passed: bool
    expected: tuple[int, int, int]
    got: tuple[int, int, int]


def clan_disc_check(a: int, b: int, d: int) -> DiscCheck | str:
    """Compare the exact discriminant profile of the clan pencil with the closed form.

    Returns NotApplicable unless a, b, d are distinct, positive and coprime.
    """
    if not _theorem_hypotheses(a, b, d):
        return NOT_APPLICABLE
    P0, P1 = clan_pencil(a, b, d)
    rep = profile_from_polys(P0, P1)
    got = (rep.sign * rep.c, rep.a, rep.b)
    want = disc_closed_form(a, b, d)
    ok = rep.extra_factor is None and rep.oracle_ok and got == want
    return DiscCheck(ok, want, got)


# -- the cubic Delta ----------------------------------------------------------

def delta_cubic(u: int, v: int, w: int) -> list[int]:
    """The cubic whose cube is the numerator of Pi'/Pi in symmetric coordinates.

    The constant term is +u(u-d)(u+d); this is the sign the log derivative forces.
    """
    d = u + v + w
    return [
        u * (u - d) * (u + d),
        3 * u * (u - d) * (w - d),
        3 * w * (u - d) * (w - d),
        w * (w - d) * (w + d),
    ]


def delta_cubic_printed(u: int, v: int, w: int) -> list[int]:
    """The same cubic with the opposite constant sign, as it is usually displayed."""
    D = delta_cubic(u, v, w)
    return [-D[0]] + D[1:]


def cubic_discriminant(p: Sequence[int]) -> int:
    """Formal discriminant of c0 + c1 x + c2 x^2 + c3 x^3 (valid even when c3 = 0)."""
    e, c, b, a = (list(p) + [0, 0, 0, 0])[:4]
    return b * b * c * c - 4 * a * c ** 3 - 4 * b ** 3 * e - 27 * a * a * e * e + 18 * a * b * c * e


def delta_discriminant_formula(u: int, v: int, w: int) -> int:
    d = u + v + w
    return 4 * 27 * u * v * w * (d - u) ** 2 * (d - v) ** 2 * (d - w) ** 2 * d ** 3


@dataclass
class DeltaCheck:
    delta: list[int]
    log_derivative_ok: bool
    discriminant_ok: bool
    wall: bool  # some of u, v, w, d -+ u, d -+ v, d -+ w vanish

    @property
    def ok(self) -> bool:
        # on a discriminantal line factors collide and only the discriminant identity is claimed
        return self.discriminant_ok and (self.log_derivative_ok or self.wall)


def _log_derivative_numerator(L: Ledger) -> list[int]:
    """Numerator of pi'/pi = sum e_i f_i'/f_i over the denominator prod f_i."""
    fs = [(f, e) for f, e in L.factors if e != 0 and bp.degree(f) > 0]
    total: list[int] = []
    for i, (f, e) in enumerate(fs):
        rest = bp.product([g for j, (g, _) in enumerate(fs) if j != i])
        total = bp.add(total, bp.scale(bp.mul(bp.deriv(f), rest), e))
    return total


def check_delta(u: int, v: int, w: int) -> DeltaCheck:
    """Check the log-derivative and discriminant identities for Delta(u, v, w)."""
    delta = delta_cubic(u, v, w)
    N = bp.trim(_log_derivative_numerator(sym_ledger(u, v, w)))
    cube = bp.trim(bp.power(delta, 3))
    if not cube:
        log_ok = not N
    else:
        log_ok = bool(N) and bp.primitive(N) == bp.primitive(cube)
    disc_ok = cubic_discriminant(delta) == delta_discriminant_formula(u, v, w)
    d = u + v + w
    wall = any(q == 0 for q in (u, v, w, d - u, d - v, d - w, d + u, d + v, d + w))
    return DeltaCheck(delta, log_ok, disc_ok, wall)


# -- printed maps ------------------------------------------------------------

def triple_chamber(a: int, b: int, d: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Expected ramification triple in the distinct-positive chamber."""
    n = a + b + 2 * d
    lam0 = sorted([a + b, a + d, a + d, b + d, b + d, d, d], reverse=True)
    lam1 = [4, 4, 4] + [1] * (3 * n - 12)
    laminf = sorted([a + b + d, a + b + d, a + 2 * d, b + 2 * d], reverse=True)
    return tuple(lam0), tuple(lam1), tuple(laminf)


def symmetric_params(a: int, b: int, d: int) -> tuple[int, int, int]:
    n = a + b + 2 * d
    return d + a, d + b, d - n


__all__ = [
    "ClanError",
    "ClanParams",
    "DEFAULT_MAX_N",
    "DeltaCheck",
    "DiscCheck",
    "Ledger",
    "NOT_APPLICABLE",
    "check_delta",
    "clan_S",
    "clan_V",
    "clan_degree",
    "clan_disc_check",
    "clan_map",
    "clan_pencil",
    "clan_sym",
    "cubic_discriminant",
    "delta_cubic",
    "delta_cubic_printed",
    "delta_discriminant_formula",
    "disc_closed_form",
    "nominal_degree",
    "symmetric_params",
    "triple_chamber",
]
