"""Base fibers of Hurwitz parameters: product-one tuples up to conjugation.

Tuples are enumerated with the first entry pinned to the class
representative of C_1, so the remaining symmetry is the centralizer of that
representative.  A tuple's canonical form is the lexicographically least
tuple in its conjugation orbit whose first entry is the representative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import class_algebra
from .group_atlas import AtlasGroup, build_group, out_stabilizer, outer_action_on_classes, resolve_class
from .perm_core import ConjClass, PermGroup, Permutation, centralizer_elements, pconj, pinv, pmul

DEFAULT_WORK_BOUND = 10**9
DEFAULT_FIBER_BOUND = 10**5  # refuse fibers whose mass exceeds this

Tuple = tuple[tuple[int, ...], ...]


class NielsenError(ValueError):
    pass


class WorkBoundExceeded(NielsenError):
    pass


@dataclass
class HurwitzParameter:
    atlas: AtlasGroup
    classes: tuple[ConjClass, ...]
    nu: tuple[int, ...]
    # tuples count as fiber points when they generate a subgroup of this order
    # (default: the whole group); lets even classes of S_n model an A_n problem
    target_order: int | None = None

    def __post_init__(self):
        if len(self.classes) != len(self.nu):
            raise NielsenError("classes and multiplicities differ in length")
        if any(n < 1 for n in self.nu):
            raise NielsenError("multiplicities must be positive")
        if len({c.index for c in self.classes}) != len(self.classes):
            raise NielsenError("classes must be distinct")
        if self.r < 3:
            raise NielsenError("a Hurwitz parameter needs at least three branch points")

    @classmethod
    def parse(cls, group: str | AtlasGroup, classes: str | Sequence[str], nu: str | Sequence[int],
              target_order: int | None = None) -> "HurwitzParameter":
        ag = build_group(group) if isinstance(group, str) else group
        labels = [s.strip() for s in classes.split(",")] if isinstance(classes, str) else list(classes)
        nus = [int(s) for s in nu.split(",")] if isinstance(nu, str) else [int(x) for x in nu]
        return cls(ag, tuple(resolve_class(ag, l) for l in labels), tuple(nus), target_order)

    @property
    def r(self) -> int:
        return sum(self.nu)

    def position_classes(self) -> list[ConjClass]:
        out = []
        for c, n in zip(self.classes, self.nu):
            out.extend([c] * n)
        return out

    def block_boundaries(self) -> frozenset[int]:
        """Positions i (1-based) such that a new block starts at i + 1."""
        out, acc = set(), 0
        for n in self.nu[:-1]:
            acc += n
            out.add(acc)
        return frozenset(out)

    @property
    def generated_order(self) -> int:
        return self.target_order or self.atlas.order

    def describe(self) -> str:
        return f"({self.atlas.name},({','.join(c.label for c in self.classes)}),({','.join(map(str, self.nu))}))"


@dataclass
class Orbit:
    rep: Tuple
    stabilizer_order: int
    generating: bool
    subgroup_order: int


@dataclass
class FiberIndex:
    h: HurwitzParameter
    reps: list[Tuple]
    index: dict[Tuple, int]
    degenerate: list[Orbit]
    tuple_count: int
    stabilizer_orders: list[int] = field(default_factory=list)
    # star quotient data: canonical form -> fused index
    fused: dict[Tuple, int] | None = None
    quotient_order: int = 1

    @property
    def degree(self) -> int:
        return len(self.reps)

    def locate(self, canon: Tuple) -> int:
        if self.fused is not None:
            return self.fused[canon]
        return self.index[canon]

    def orbit_weight_sum(self) -> int:
        """Sum of |G|/|stab| over generating and degenerate orbits."""
        n = self.h.atlas.order
        if self.fused is not None:
            raise NielsenError("completeness is checked on the plain fiber")
        return sum(n // s for s in self.stabilizer_orders) + sum(n // o.stabilizer_order for o in self.degenerate)

    def mass(self) -> Fraction:
        return class_algebra.mass(self.h)

    def degenerate_masses(self) -> dict[int, Fraction]:
        """Degenerate mass grouped by the order of the generated subgroup."""
        z = self.h.atlas.classes.center_order()
        out: dict[int, Fraction] = {}
        for o in self.degenerate:
            out[o.subgroup_order] = out.get(o.subgroup_order, Fraction(0)) + Fraction(z, o.stabilizer_order)
        return dict(sorted(out.items()))


class Canonicalizer:
    """Canonical forms for tuples whose position classes are fixed."""

    def __init__(self, h: HurwitzParameter):
        self.h = h
        first = h.position_classes()[0]
        self.first = first
        self.rep = tuple(first.representative)
        self.cent = centralizer_elements(h.atlas.group, self.rep)
        self.cent_inv = [pinv(z) for z in self.cent]

    def canonical(self, t: Sequence[Sequence[int]]) -> tuple[Tuple, int]:
        """(canonical form, stabilizer order) of the conjugation orbit of t."""
        t = tuple(tuple(g) for g in t)
        c = self.first.conjugators.get(t[0])
        if c is None:
            raise NielsenError("first entry is not in the first class")
        if c != tuple(range(len(c))):
            ci = pinv(c)
            t = tuple(pconj(g, ci) for g in t)
        best = None
        stab = 0
        for z in self.cent:
            cand = tuple(pconj(g, z) for g in t[1:])
            if best is None or cand < best:
                best = cand
            if cand == t[1:]:
                stab += 1
        return (t[0],) + best, stab

    def form(self, t: Sequence[Sequence[int]]) -> Tuple:
        return self.canonical(t)[0]


def _generated_order(group_order: int, gens: Sequence[Sequence[int]], degree: int) -> int:
    H = PermGroup(gens, degree)
    if H.order_lower_bound() == group_order:
        return group_order
    return H.order()


def search_work(h: HurwitzParameter) -> int:
    """Product of the class sizes after the pinned first entry."""
    return math.prod(c.size for c in h.position_classes()[1:])


def enumerate_fiber(h: HurwitzParameter, *, work_bound: int = DEFAULT_WORK_BOUND,
                    fiber_bound: int = DEFAULT_FIBER_BOUND, check: bool = True) -> FiberIndex:
    """All conjugation orbits of product-one tuples for h, with a completeness check.

    Raises WorkBoundExceeded before any search when the product of the
    remaining class sizes exceeds ``work_bound`` or the mass (an upper bound
    for the number of orbits) exceeds ``fiber_bound``.
    """
    ag = h.atlas
    cd = ag.classes
    pos = h.position_classes()
    r = len(pos)
    work = search_work(h)
    if work > work_bound:
        raise WorkBoundExceeded(f"search space {work} exceeds work bound {work_bound} for {h.describe()}")
    T = class_algebra.tuple_count(cd, pos)
    m = class_algebra.mass(h)
    if m > fiber_bound:
        raise WorkBoundExceeded(f"mass {class_algebra.format_mass(m)} exceeds fiber bound {fiber_bound} "
                                f"for {h.describe()}")
    supports = class_algebra.suffix_supports(cd, pos)
    canon = Canonicalizer(h)
    n = ag.group.degree
    G_order = ag.order
    lookup = cd.lookup
    last = pos[-1].conjugators
    pools = [c.elements() for c in pos]

    found: dict[Tuple, int] = {}
    prefix: list[tuple[int, ...]] = [canon.rep]

    def rec(j: int, P: tuple[int, ...]):
        if j == r - 1:
            g = pinv(P)
            if g in last:
                t = tuple(prefix) + (g,)
                form, stab = canon.canonical(t)
                if form not in found:
                    found[form] = stab
            return
        sup = supports[j + 1]
        for g in pools[j]:
            Q = pmul(P, g)
            if lookup[pinv(Q)] not in sup:
                continue
            prefix.append(g)
            rec(j + 1, Q)
            prefix.pop()

    if lookup[pinv(canon.rep)] in supports[1]:
        rec(1, canon.rep)

    reps: list[Tuple] = []
    stabs: list[int] = []
    degenerate: list[Orbit] = []
    for form in sorted(found):
        stab = found[form]
        sub = _generated_order(G_order, form, n)
        if sub == h.generated_order:
            reps.append(form)
            stabs.append(stab)
        else:
            degenerate.append(Orbit(form, stab, False, sub))
    fib = FiberIndex(h, reps, {t: i for i, t in enumerate(reps)}, degenerate, T, stabs)
    if check:
        got = fib.orbit_weight_sum()
        if got != T:
            raise NielsenError(f"completeness check failed: orbits account for {got} of {T} tuples")
        z = cd.center_order()
        if h.generated_order == G_order and any(s != z for s in stabs):
            raise NielsenError("a generating tuple has stabilizer larger than the center")
    return fib


def star_quotient(fib: FiberIndex, outer: Iterable[Sequence[int]] | None = None) -> FiberIndex:
    """Fuse fiber points under Out(G, C); ``outer`` defaults to the catalog data."""
    h = fib.h
    ag = h.atlas
    if outer is None:
        outer = out_stabilizer(ag, h.classes)
    outer = [tuple(o) for o in outer]
    for o in outer:
        act = outer_action_on_classes(ag, o)
        for c in h.classes:
            if act[c.index] != c.index:
                raise NielsenError(f"outer element moves class {c.label}")
    canon = Canonicalizer(h)
    parent = list(range(fib.degree))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, t in enumerate(fib.reps):
        for o in outer:
            j = fib.index[canon.form(tuple(pconj(g, o) for g in t))]
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    roots = sorted({find(i) for i in range(fib.degree)})
    new_index = {root: k for k, root in enumerate(roots)}
    fused = {t: new_index[find(i)] for i, t in enumerate(fib.reps)}
    reps = [fib.reps[root] for root in roots]
    out = FiberIndex(h, reps, {t: k for k, t in enumerate(reps)}, fib.degenerate, fib.tuple_count,
                     [], fused, max(1, len(outer)))
    return out


def is_free(plain: FiberIndex, star: FiberIndex) -> bool:
    return star.degree * star.quotient_order == plain.degree


def random_conjugate(t: Sequence[Sequence[int]], x: Sequence[int]) -> Tuple:
    return tuple(pconj(g, x) for g in t)
