"""Exact verification of rational Belyi maps v = A(x)/C(x) with integer coefficients."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from . import bigpoly as bp
from .perm_core import parse_partition, partition_str

Partition = tuple[int, ...]


class BelyiError(ValueError):
    pass


def _small_primes(n: int) -> list[int]:
    sieve = [True] * (n + 1)
    out = []
    for p in range(2, n + 1):
        if sieve[p]:
            out.append(p)
            for q in range(p * p, n + 1, p):
                sieve[q] = False
    return out


@dataclass(frozen=True)
class RationalMap:
    """v = A/C in lowest terms: gcd(A, C) = 1, joint content 1, lc(C) > 0."""

    A: tuple[int, ...]
    C: tuple[int, ...]

    @classmethod
    def from_polys(cls, A: Sequence[int], C: Sequence[int]) -> "RationalMap":
        A, C = bp.poly(A), bp.poly(C)
        if not C:
            raise BelyiError("denominator is zero")
        if not A:
            raise BelyiError("numerator is zero")
        g = bp.gcd(A, C)
        if bp.degree(g) > 0:
            A, C = bp.exact_div(A, g), bp.exact_div(C, g)
        c = bp.content(A + C)
        if C[-1] < 0:
            c = -c
        A, C = [a // c for a in A], [b // c for b in C]
        if max(bp.degree(A), bp.degree(C)) < 1:
            raise BelyiError("map is constant")
        return cls(tuple(A), tuple(C))

    @classmethod
    def from_pencil(cls, P0: Sequence[int], P1: Sequence[int]) -> "RationalMap":
        """From P(v, x) = P0(x) + v P1(x), whose zero locus is v = -P0/P1."""
        return cls.from_polys(bp.neg(bp.poly(P0)), bp.poly(P1))

    @property
    def degree(self) -> int:
        return max(bp.degree(self.A), bp.degree(self.C))

    def to_json(self) -> dict:
        return {"numerator": [str(c) for c in self.A], "denominator": [str(c) for c in self.C]}

    @classmethod
    def from_json(cls, data: dict) -> "RationalMap":
        if "numerator" in data:
            return cls.from_polys([int(c) for c in data["numerator"]], [int(c) for c in data["denominator"]])
        if "pencil" in data:
            p = data["pencil"]
            return cls.from_pencil([int(c) for c in p["v0"]], [int(c) for c in p["v1"]])
        raise BelyiError("map JSON needs numerator/denominator or pencil")

    @classmethod
    def load(cls, path: str | Path) -> "RationalMap":
        return cls.from_json(json.loads(Path(path).read_text(encoding="utf-8")))

    def compose_right(self, num: Sequence[int], den: Sequence[int]) -> "RationalMap":
        """self(num(x)/den(x)), for a Mobius or polynomial substitution."""
        d = self.degree
        nA = _homogenize(list(self.A), d, num, den)
        nC = _homogenize(list(self.C), d, num, den)
        return RationalMap.from_polys(nA, nC)

    def inverse(self) -> "RationalMap":
        return RationalMap.from_polys(list(self.C), list(self.A))

    def power(self, e: int) -> "RationalMap":
        if e < 0:
            return self.inverse().power(-e)
        return RationalMap.from_polys(bp.power(self.A, e), bp.power(self.C, e))


def _homogenize(p: list[int], d: int, num: Sequence[int], den: Sequence[int]) -> list[int]:
    """den^d * p(num/den)."""
    terms = []
    for i, c in enumerate(p):
        if c:
            terms.append(bp.scale(bp.mul(bp.power(num, i), bp.power(den, d - i)), c))
    out: list[int] = []
    for t in terms:
        out = bp.add(out, t)
    return out


# -- ramification ------------------------------------------------------------

@dataclass
class RamificationReport:
    degree: int
    lambda0: Partition
    lambda1: Partition
    lambdainf: Partition
    infinity_over: str | None  # '0', '1', 'inf' or None when x = inf lies over another value
    genus_ok: bool

    @property
    def parts(self) -> int:
        return len(self.lambda0) + len(self.lambda1) + len(self.lambdainf)

    def triple(self) -> tuple[Partition, Partition, Partition]:
        return self.lambda0, self.lambda1, self.lambdainf

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "lambda0": partition_str(self.lambda0),
            "lambda1": partition_str(self.lambda1),
            "lambdaInf": partition_str(self.lambdainf),
            "infinityOver": self.infinity_over,
            "genusZero": self.genus_ok,
        }


def _parts_from(p: Sequence[int]) -> tuple[list[int], list[tuple[list[int], int]]]:
    if bp.degree(p) < 1:
        return [], []
    _, dec = bp.squarefree_decomposition(p)
    parts = []
    for f, m in dec:
        parts.extend([m] * bp.degree(f))
    return parts, dec


def _one_minus(f: RationalMap) -> list[int]:
    return bp.sub(list(f.A), list(f.C))


def _ramification(f: RationalMap):
    A, C = list(f.A), list(f.C)
    dA, dC, m = bp.degree(A), bp.degree(C), f.degree
    AmC = _one_minus(f)
    p0, d0 = _parts_from(A)
    pi, di = _parts_from(C)
    p1, d1 = _parts_from(AmC)
    over = None
    if dA > dC:
        pi.append(dA - dC)
        over = "inf"
    elif dA < dC:
        p0.append(dC - dA)
        over = "0"
    elif A[-1] == C[-1]:
        p1.append(m - bp.degree(AmC))
        over = "1"
    lam = tuple(tuple(sorted(p, reverse=True)) for p in (p0, p1, pi))
    return lam, over, (d0, d1, di)


def ramification_partitions(f: RationalMap) -> RamificationReport:
    (l0, l1, li), over, _ = _ramification(f)
    m = f.degree
    for lam in (l0, l1, li):
        if sum(lam) != m:
            raise BelyiError("partition does not sum to the degree")
    return RamificationReport(m, l0, l1, li, over, len(l0) + len(l1) + len(li) == m + 2)


@dataclass
class BelyiCertificate:
    is_belyi: bool
    wronskian_matches: bool
    parts_ok: bool
    reason: str = ""


def is_belyi(f: RationalMap) -> BelyiCertificate:
    """Check every finite critical point lies over 0, 1, inf and the Riemann-Hurwitz count closes.

    With W = A'C - AC', the squarefree decompositions of A, A - C and C give
    E = prod f^(e-1); W is a constant multiple of E exactly when the squarefree
    part of W divides A (A - C) C with the right multiplicities.
    """
    A, C = list(f.A), list(f.C)
    W = bp.sub(bp.mul(bp.deriv(A), C), bp.mul(A, bp.deriv(C)))
    lam, over, decs = _ramification(f)
    E = bp.product(bp.power(g, e - 1) for dec in decs for g, e in dec if e > 1)
    if not W:
        return BelyiCertificate(False, False, False, "map is constant")
    wm = bp.degree(W) == bp.degree(E) and bp.scale(W, E[-1]) == bp.scale(E, W[-1])
    parts = sum(len(x) for x in lam)
    ok = parts == f.degree + 2
    reason = ""
    if not wm:
        reason = "critical points outside the fibers over 0, 1, inf"
    elif not ok:
        reason = f"parts total {parts}, expected {f.degree + 2}"
    return BelyiCertificate(wm and ok, wm, ok, reason)


# -- discriminant profile ------------------------------------------------------

@dataclass
class DiscriminantReport:
    sign: int
    a: int
    b: int
    c: int  # unsigned constant
    factors: dict[int, int]
    cofactor: int
    bad_primes: tuple[int, ...]
    extra_factor: list[int] | None = None
    oracle_ok: bool = True

    @property
    def ok(self) -> bool:
        return self.extra_factor is None and self.oracle_ok

    def constant_str(self) -> str:
        s = "-" if self.sign < 0 else ""
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(self.factors.items())]
        if self.cofactor != 1:
            parts.append(str(self.cofactor))
        return s + (" ".join(parts) if parts else "1")

    def to_json(self) -> dict:
        return {
            "constant": self.constant_str(),
            "a": self.a,
            "b": self.b,
            "badPrimes": list(self.bad_primes),
            "cofactor": str(self.cofactor),
            "ok": self.ok,
            "extraFactor": None if self.extra_factor is None else [str(c) for c in self.extra_factor],
        }


def _lc_ratio_int(A: Sequence[int], C: Sequence[int]) -> set:
    if bp.degree(A) == bp.degree(C):
        r = Fraction(A[-1], C[-1])
        return {r}
    return set()


def _disc_at(A: Sequence[int], C: Sequence[int], v: int, m: int) -> int:
    P = bp.sub(list(A), bp.scale(list(C), v))
    if bp.degree(P) != m:
        raise BelyiError("sample point lowers the degree")
    return bp.discriminant(P)


def disc_polynomial(A: Sequence[int], C: Sequence[int]) -> tuple[list[int], list[int]]:
    """disc_x(A - v C) as a polynomial in v, by evaluation and interpolation.

    The degree in v is at most 2m - 2, so 2m - 1 integer samples determine it.
    Returns (polynomial, sample points used).
    """
    m = max(bp.degree(A), bp.degree(C))
    avoid = _lc_ratio_int(A, C)
    xs: list[int] = []
    v = 2
    while len(xs) < 2 * m - 1:
        if v not in avoid:
            xs.append(v)
        v += 1
    ys = [_disc_at(A, C, v, m) for v in xs]
    return bp.interpolate(xs, ys), xs


def factor_small(c: int, bound: int) -> tuple[dict[int, int], int]:
    c = abs(c)
    out: dict[int, int] = {}
    for p in _small_primes(bound):
        while c % p == 0:
            c //= p
            out[p] = out.get(p, 0) + 1
    return out, c


def _oracle_primes(m: int, count: int, avoid: Iterable[int]) -> list[int]:
    bad = list(avoid)
    out = []
    p = max(m + 1, 1000003)
    while len(out) < count:
        if all(p % q for q in range(2, int(p ** 0.5) + 1)) and all(b % p for b in bad if b):
            out.append(p)
        p += 1
    return out


def profile_from_polys(A: Sequence[int], C: Sequence[int]) -> DiscriminantReport:
    """Discriminant profile of the pencil A - v C exactly as given (no normalization)."""
    A, C = bp.poly(A), bp.poly(C)
    m = max(bp.degree(A), bp.degree(C))
    if m < 1:
        raise BelyiError("pencil is constant in x")
    D, xs = disc_polynomial(A, C)
    if not D:
        raise BelyiError("discriminant vanishes identically")
    a = 0
    while D and D[0] == 0:
        D = D[1:]
        a += 1
    b = 0
    while bp.degree(D) > 0:
        q, r = bp.divide_linear(D, 1)
        if r:
            break
        D, b = q, b + 1
    extra = None
    c_signed = 0
    if bp.degree(D) > 0:
        extra = D
    else:
        c_signed = D[0]
    oracle_ok = True
    if extra is None:
        # the identity must also hold at fresh points
        avoid = _lc_ratio_int(A, C)
        for v in (xs[-1] + 1, xs[-1] + 2, xs[-1] + 3):
            if v in avoid:
                continue
            if _disc_at(A, C, v, m) != c_signed * v ** a * (v - 1) ** b:
                oracle_ok = False
        # and an exact sample must agree with the modular route
        P = bp.sub(A, bp.scale(C, xs[0]))
        exact = bp.discriminant(P)
        for p in _oracle_primes(m, 2, [P[-1]]):
            if bp.discriminant_mod(P, p) != exact % p:
                oracle_ok = False
    factors, cof = factor_small(c_signed, m) if c_signed else ({}, 0)
    sign = -1 if c_signed < 0 else 1
    return DiscriminantReport(sign, a, b, abs(c_signed), factors, cof, tuple(sorted(factors)), extra, oracle_ok)


def discriminant_profile(f: RationalMap) -> DiscriminantReport:
    return profile_from_polys(list(f.A), list(f.C))


def bad_primes(f: RationalMap) -> tuple[int, ...]:
    return discriminant_profile(f).bad_primes


# -- expectations ----------------------------------------------------------

@dataclass
class VerifyResult:
    passed: bool
    diffs: list[str] = field(default_factory=list)
    ramification: RamificationReport | None = None
    discriminant: DiscriminantReport | None = None
    certificate: BelyiCertificate | None = None

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "diffs": self.diffs,
            "ramification": self.ramification.to_json() if self.ramification else None,
            "discriminant": self.discriminant.to_json() if self.discriminant else None,
            "isBelyi": self.certificate.is_belyi if self.certificate else None,
        }


def _as_partition(x) -> Partition:
    if isinstance(x, str):
        return tuple(parse_partition(x))
    return tuple(sorted((int(p) for p in x), reverse=True))


def verify_expected(f: RationalMap, expected_triple=None, expected_bad=None, *,
                    expected_constant: int | None = None, expected_a: int | None = None,
                    expected_b: int | None = None, bad_exact: bool = False) -> VerifyResult:
    """Compare computed invariants with expectations; ``expected_bad`` is an upper bound
    unless ``bad_exact`` is set."""
    diffs = []
    cert = is_belyi(f)
    if not cert.is_belyi:
        diffs.append(f"not Belyi: {cert.reason}")
    ram = ramification_partitions(f)
    if expected_triple is not None:
        want = tuple(_as_partition(x) for x in expected_triple)
        got = ram.triple()
        for name, w, g in zip(("lambda0", "lambda1", "lambdaInf"), want, got):
            if w != g:
                diffs.append(f"{name}: expected {partition_str(w)}, got {partition_str(g)}")
    disc = discriminant_profile(f)
    if disc.extra_factor is not None:
        diffs.append("discriminant has a factor other than v and v - 1")
    if not disc.oracle_ok:
        diffs.append("discriminant identity failed a re-evaluation or modular check")
    if disc.cofactor not in (0, 1):
        diffs.append(f"unfactored cofactor {disc.cofactor}")
    if expected_bad is not None:
        want = set(int(p) for p in expected_bad)
        got = set(disc.bad_primes)
        if bad_exact and got != want:
            diffs.append(f"bad primes: expected {sorted(want)}, got {sorted(got)}")
        elif not bad_exact and not got <= want:
            diffs.append(f"bad primes {sorted(got)} not within {sorted(want)}")
    if expected_constant is not None and disc.sign * disc.c != expected_constant:
        diffs.append(f"disc constant: expected {expected_constant}, got {disc.sign * disc.c}")
    if expected_a is not None and disc.a != expected_a:
        diffs.append(f"exponent a: expected {expected_a}, got {disc.a}")
    if expected_b is not None and disc.b != expected_b:
        diffs.append(f"exponent b: expected {expected_b}, got {disc.b}")
    return VerifyResult(not diffs, diffs, ram, disc, cert)


def verify_against_file(f: RationalMap, expected: dict) -> VerifyResult:
    """Expected-report sidecar: {"triple": [..3 partitions..], "badPrimes": [...],
    "badExact": bool, "constant": "<int>", "a": int, "b": int}."""
    const = expected.get("constant")
    return verify_expected(
        f,
        expected.get("triple"),
        expected.get("badPrimes"),
        expected_constant=int(const) if const is not None else None,
        expected_a=expected.get("a"),
        expected_b=expected.get("b"),
        bad_exact=bool(expected.get("badExact", False)),
    )
