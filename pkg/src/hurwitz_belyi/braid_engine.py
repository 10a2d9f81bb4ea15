"""Braid action on base fibers, pencil braid triples and component reports.

The braid generator sigma_i sends (g_i, g_{i+1}) to (g_{i+1}, g_i^{g_{i+1}})
and acts on the right, so a word is applied letter by letter from the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

from .nielsen import Canonicalizer, FiberIndex, HurwitzParameter, NielsenError, Tuple
from .perm_core import (
    Classification,
    classify_subgroup,
    cycle_type_of,
    cycles_of,
    partition_str,
    pconj,
    pidentity,
    pinv,
    pmul,
    ppow,
)


class BraidError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[tuple[int, int], ...]  # (i, +1 | -1), i is 1-based

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        """Words like ``s1 s2 s3^2`` or ``s2^-1 s1^-2``; ``1`` is the empty word."""
        letters: list[tuple[int, int]] = []
        for tok in text.split():
            if tok == "1":
                continue
            m = re.fullmatch(r"s(\d+)(?:\^(-?\d+))?", tok)
            if not m:
                raise BraidError(f"bad braid letter {tok!r}")
            i, e = int(m.group(1)), int(m.group(2) or 1)
            if i < 1 or e == 0:
                raise BraidError(f"bad braid letter {tok!r}")
            letters.extend([(i, 1 if e > 0 else -1)] * abs(e))
        return cls(tuple(letters))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def __pow__(self, e: int) -> "BraidWord":
        if e >= 0:
            return BraidWord(self.letters * e)
        return (~self) ** (-e)

    def __invert__(self) -> "BraidWord":
        return BraidWord(tuple((i, -s) for i, s in reversed(self.letters)))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"s{i}" if s > 0 else f"s{i}^-1" for i, s in self.letters)

    def position_permutation(self, r: int) -> tuple[int, ...]:
        """Image of the word in S_r (0-based positions, right action)."""
        p = list(range(r))
        for i, _ in self.letters:
            if i >= r:
                raise BraidError(f"letter s{i} needs at least {i + 1} strands")
            sw = list(range(r))
            sw[i - 1], sw[i] = i, i - 1
            p = [sw[x] for x in p]
        return tuple(p)

    def preserves_blocks(self, nu: Sequence[int]) -> bool:
        r = sum(nu)
        block = []
        for b, n in enumerate(nu):
            block.extend([b] * n)
        p = self.position_permutation(r)
        return all(block[p[x]] == block[x] for x in range(r))


def s(i: int, e: int = 1) -> BraidWord:
    return BraidWord(((i, 1 if e > 0 else -1),) * abs(e))


@dataclass(frozen=True)
class Pencil:
    name: str
    nu: tuple[int, ...]
    B0: BraidWord
    B1: BraidWord
    Binf: BraidWord
    order0: int | None = None  # order of B0 in the quotient, when finite
    order1: int | None = None

    @property
    def r(self) -> int:
        return sum(self.nu)

    def boundaries(self) -> frozenset[int]:
        out, acc = set(), 0
        for n in self.nu[:-1]:
            acc += n
            out.add(acc)
        return frozenset(out)


def _pencils() -> dict[str, Pencil]:
    b0_41 = s(1) * s(2) * s(3, 2)
    b1_41 = (s(1) * s(2) * s(3)) ** 2
    return {
        "u1111": Pencil("u1111", (1, 1, 1, 1), s(1, 2), s(2, 2), s(2, -2) * s(1, -2)),
        "u211": Pencil("u211", (2, 1, 1), s(1), s(1, -1) * s(2, -2), s(2, 2), None, 2),
        "u31": Pencil("u31", (3, 1), s(1) * s(2), s(2, -1) * s(1, -2), s(1), 3, 2),
        "u41": Pencil("u41", (4, 1), b0_41, b1_41, ~b1_41 * ~b0_41, 3, 2),
    }


PENCILS = _pencils()


def get_pencil(name: str) -> Pencil:
    key = name.replace("_", "").replace(",", "")
    if key not in PENCILS:
        raise BraidError(f"unknown pencil {name!r}; available: {', '.join(PENCILS)}")
    return PENCILS[key]


def check_compatible(h: HurwitzParameter, pencil: Pencil) -> None:
    if h.r != pencil.r:
        raise BraidError(f"pencil {pencil.name} has {pencil.r} points, parameter has {h.r}")
    if not h.block_boundaries() <= pencil.boundaries():
        raise BraidError(f"pencil {pencil.name} does not preserve the blocks of nu={h.nu}")


# -- action ---------------------------------------------------------------

def act_tuple(word: BraidWord, t: Sequence[Sequence[int]]) -> Tuple:
    g = [tuple(x) for x in t]
    for i, e in word.letters:
        a, b = g[i - 1], g[i]
        if e > 0:
            g[i - 1], g[i] = b, pconj(a, b)
        else:
            g[i - 1], g[i] = pconj(b, pinv(a)), a
    return tuple(g)


def act(word: BraidWord, fib: FiberIndex, canon: Canonicalizer | None = None) -> tuple[int, ...]:
    """Permutation of fiber indices induced by a block-preserving word."""
    h = fib.h
    if not word.preserves_blocks(h.nu):
        raise BraidError(f"word {word} does not preserve the blocks of nu={h.nu}")
    canon = canon or Canonicalizer(h)
    out = []
    for t in fib.reps:
        out.append(fib.locate(canon.form(act_tuple(word, t))))
    if sorted(out) != list(range(fib.degree)):
        raise NielsenError("braid action is not a permutation of the fiber")
    return tuple(out)


@dataclass
class BraidTriple:
    b0: tuple[int, ...]
    b1: tuple[int, ...]
    binf: tuple[int, ...]


def braid_triple(fib: FiberIndex, pencil: Pencil | str, *, check_sample: int | None = 64) -> BraidTriple:
    pencil = get_pencil(pencil) if isinstance(pencil, str) else pencil
    h = fib.h
    check_compatible(h, pencil)
    canon = Canonicalizer(h)
    b0 = act(pencil.B0, fib, canon)
    b1 = act(pencil.B1, fib, canon)
    binf = pinv(pmul(b0, b1))
    m = fib.degree
    ident = pidentity(m)
    # cross-check b_inf against the B_inf word on a sample of points
    pts = range(m) if check_sample is None or m <= check_sample else range(0, m, max(1, m // check_sample))
    for i in pts:
        j = fib.locate(canon.form(act_tuple(pencil.Binf, fib.reps[i])))
        if j != binf[i]:
            raise BraidError("B_inf word disagrees with (b0 b1)^-1")
    if pencil.order0 and ppow(b0, pencil.order0) != ident:
        raise BraidError(f"b0 does not have order dividing {pencil.order0}")
    if pencil.order1 and ppow(b1, pencil.order1) != ident:
        raise BraidError(f"b1 does not have order dividing {pencil.order1}")
    return BraidTriple(b0, b1, binf)


# -- components -------------------------------------------------------------

def genus(beta0: Sequence[int], beta1: Sequence[int], betainf: Sequence[int], m: int) -> int:
    for b in (beta0, beta1, betainf):
        if sum(b) != m:
            raise BraidError(f"partition {list(b)} does not sum to {m}")
    twice = m + 2 - (len(beta0) + len(beta1) + len(betainf))
    if twice % 2 or twice < 0:
        raise BraidError(f"inconsistent triple: 2g = {twice}")
    return twice // 2


@dataclass
class ComponentReport:
    size: int
    beta0: tuple[int, ...]
    beta1: tuple[int, ...]
    betainf: tuple[int, ...]
    genus: int
    classification: Classification
    lifting: str | None = None
    points: list[int] = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "beta0": partition_str(self.beta0),
            "beta1": partition_str(self.beta1),
            "betaInf": partition_str(self.betainf),
            "genus": self.genus,
            "classification": str(self.classification),
            "lifting": self.lifting,
        }


def _restrict(p: Sequence[int], pts: Sequence[int]) -> tuple[int, ...]:
    pos = {x: i for i, x in enumerate(pts)}
    return tuple(pos[p[x]] for x in pts)


def _orbits(gens: Sequence[Sequence[int]], m: int) -> list[list[int]]:
    seen = [False] * m
    out = []
    for start in range(m):
        if seen[start]:
            continue
        orb = [start]
        seen[start] = True
        i = 0
        while i < len(orb):
            x = orb[i]
            for g in gens:
                y = g[x]
                if not seen[y]:
                    seen[y] = True
                    orb.append(y)
            i += 1
        out.append(sorted(orb))
    return out


def components(fib: FiberIndex, pencil: Pencil | str, *, ext=None, classify: bool = True) -> list[ComponentReport]:
    """Orbits of <b0, b1> with partition triples, genus, classification and lifting label."""
    tri = braid_triple(fib, pencil)
    labels = None
    if ext is not None:
        from .lifting import lifting_invariant
        labels = [lifting_invariant(t, ext) for t in fib.reps]
    out = []
    for orb in _orbits([tri.b0, tri.b1], fib.degree):
        r0, r1, ri = (_restrict(p, orb) for p in (tri.b0, tri.b1, tri.binf))
        m = len(orb)
        c0, c1, ci = cycle_type_of(r0), cycle_type_of(r1), cycle_type_of(ri)
        g = genus(c0, c1, ci, m)
        cls = classify_subgroup([r0, r1], m) if classify else Classification("Unclassified", None, None)
        lab = None
        if labels is not None:
            seen = {labels[i] for i in orb}
            if len(seen) != 1:
                raise BraidError("lifting invariant is not constant on a component")
            lab = seen.pop()
        out.append(ComponentReport(m, tuple(c0), tuple(c1), tuple(ci), g, cls, lab, orb))
    out.sort(key=lambda c: (c.size, c.beta0, c.beta1, c.betainf, c.lifting or "", c.points))
    return out


def report(fib: FiberIndex, pencil: Pencil | str, comps: Sequence[ComponentReport], *, star: bool) -> dict:
    pencil = get_pencil(pencil) if isinstance(pencil, str) else pencil
    return {
        "parameter": fib.h.describe(),
        "pencil": pencil.name,
        "star": star,
        "degree": fib.degree,
        "components": [c.to_json() for c in comps],
    }
