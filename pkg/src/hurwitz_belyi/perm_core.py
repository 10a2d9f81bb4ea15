"""Permutations and permutation groups.

Points are ``0 .. n-1`` and a permutation is the tuple of images of those
points.  Permutations act on the right: ``x^(pq) = (x^p)^q``, so ``p * q``
means "apply p first, then q".  Conjugation is ``g^h = h^-1 g h``, which
sends the point ``x^h`` to ``(x^g)^h``.  Every module in the package uses
this convention.

Hot loops elsewhere work on plain tuples through :func:`pmul`, :func:`pinv`
and :func:`pconj`; :class:`Permutation` is the same data with operators.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]

DEFAULT_ORDER_BOUND = 10**6


class PermError(ValueError):
    pass


class OrderBoundExceeded(PermError):
    pass


# -- raw tuple helpers ------------------------------------------------------

def pmul(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """p then q."""
    return tuple([q[i] for i in p])


def pinv(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def pconj(g: Sequence[int], h: Sequence[int]) -> tuple[int, ...]:
    """g^h = h^-1 g h."""
    out = [0] * len(g)
    for i, gi in enumerate(g):
        out[h[i]] = h[gi]
    return tuple(out)


def pidentity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def ppow(p: Sequence[int], e: int) -> tuple[int, ...]:
    n = len(p)
    if e < 0:
        p, e = pinv(p), -e
    result = tuple(range(n))
    base = tuple(p)
    while e:
        if e & 1:
            result = pmul(result, base)
        base = pmul(base, base)
        e >>= 1
    return result


def cycles_of(p: Sequence[int]) -> list[list[int]]:
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        out.append(cyc)
    return out


def cycle_type_of(p: Sequence[int]) -> Partition:
    return tuple(sorted((len(c) for c in cycles_of(p)), reverse=True))


def order_of(p: Sequence[int]) -> int:
    o = 1
    for c in cycles_of(p):
        o = o * len(c) // math.gcd(o, len(c))
    return o


def is_even(p: Sequence[int]) -> bool:
    return sum(len(c) - 1 for c in cycles_of(p)) % 2 == 0


# -- the public value type --------------------------------------------------

class Permutation(tuple):
    """A bijection of ``{0, ..., n-1}`` stored as its image tuple.

    >>> a = Permutation.from_cycles([[0, 1]], 3)
    >>> b = Permutation.from_cycles([[1, 2]], 3)
    >>> (a * b).cycles()
    [[0, 2, 1]]
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        t = tuple.__new__(cls, images)
        if sorted(t) != list(range(len(t))):
            raise PermError(f"not a permutation: {tuple(t)!r}")
        return t

    @classmethod
    def _raw(cls, images: Iterable[int]) -> "Permutation":
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._raw(range(n))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]], n: int) -> "Permutation":
        img = list(range(n))
        for cyc in cycles:
            cyc = list(cyc)
            for k, a in enumerate(cyc):
                b = cyc[(k + 1) % len(cyc)]
                if not (0 <= a < n):
                    raise PermError(f"point {a} outside degree {n}")
                img[a] = b
        return cls(img)

    @classmethod
    def parse(cls, text: str, n: int, *, one_based: bool = False) -> "Permutation":
        """Parse cycle notation such as ``(0 1 2)(3 4)`` or ``()``."""
        text = text.strip()
        cycles = []
        for chunk in text.replace(")", ")\n").split("\n"):
            chunk = chunk.strip()
            if not chunk:
                continue
            if not (chunk.startswith("(") and chunk.endswith(")")):
                raise PermError(f"bad cycle syntax: {text!r}")
            body = chunk[1:-1].replace(",", " ").split()
            pts = [int(s) - (1 if one_based else 0) for s in body]
            if pts:
                cycles.append(pts)
        return cls.from_cycles(cycles, n)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other):  # type: ignore[override]
        if len(self) != len(other):
            raise PermError("degree mismatch")
        return Permutation._raw(pmul(self, other))

    def __invert__(self) -> "Permutation":
        return Permutation._raw(pinv(self))

    def __pow__(self, e: int) -> "Permutation":
        return Permutation._raw(ppow(self, e))

    def conj(self, h: Sequence[int]) -> "Permutation":
        return Permutation._raw(pconj(self, h))

    def cycles(self, *, include_fixed: bool = False) -> list[list[int]]:
        return [c for c in cycles_of(self) if include_fixed or len(c) > 1]

    def cycle_type(self) -> Partition:
        return cycle_type_of(self)

    def order(self) -> int:
        return order_of(self)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def sign(self) -> int:
        return 1 if is_even(self) else -1

    def cycle_string(self) -> str:
        cs = self.cycles()
        if not cs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()}, n={len(self)})"


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """Right-action product: the result sends x to q(p(x))."""
    if len(p) != len(q):
        raise PermError("degree mismatch")
    return Permutation._raw(pmul(p, q))


def cycle_type(p: Sequence[int]) -> Partition:
    return cycle_type_of(p)


# -- partitions -------------------------------------------------------------

def partition_str(parts: Iterable[int]) -> str:
    """Exponent notation, largest part first: ``(5,4,3,3)`` -> ``"5 4 3^2"``."""
    parts = sorted(parts, reverse=True)
    out = []
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        k = j - i
        out.append(str(parts[i]) if k == 1 else f"{parts[i]}^{k}")
        i = j
    return " ".join(out)


def parse_partition(text: str) -> Partition:
    """Inverse of :func:`partition_str`; also accepts compact ``"5331"``."""
    text = text.strip()
    if not text:
        return ()
    parts: list[int] = []
    tokens = text.replace(",", " ").split()
    if len(tokens) == 1 and "^" not in text and len(text) > 1 and text.isdigit():
        parts = [int(c) for c in text]
    else:
        for tok in tokens:
            if "^" in tok:
                b, e = tok.split("^")
                parts.extend([int(b)] * int(e))
            else:
                parts.append(int(tok))
    return tuple(sorted(parts, reverse=True))


def compact_label(parts: Iterable[int]) -> str:
    """Class-style label ``"22111"``; falls back to exponent notation for parts > 9."""
    parts = sorted(parts, reverse=True)
    if all(p < 10 for p in parts):
        return "".join(map(str, parts))
    return partition_str(parts)


# -- stabilizer chains ------------------------------------------------------

@dataclass
class _Level:
    point: int
    gens: list[tuple[int, ...]]
    # orbit point -> (u, u^-1) with point^u = orbit point
    trans: dict[int, tuple[tuple[int, ...], tuple[int, ...]]]

    def extend(self, new_gens: Sequence[tuple[int, ...]]) -> None:
        """Grow the orbit after ``new_gens`` were appended to ``gens``."""
        queue = []
        for pt, (u, _) in list(self.trans.items()):
            for s in new_gens:
                q = s[pt]
                if q not in self.trans:
                    w = pmul(u, s)
                    self.trans[q] = (w, pinv(w))
                    queue.append(q)
        while queue:
            pt = queue.pop()
            u = self.trans[pt][0]
            for s in self.gens:
                q = s[pt]
                if q not in self.trans:
                    w = pmul(u, s)
                    self.trans[q] = (w, pinv(w))
                    queue.append(q)


class StabilizerChain:
    """Base, strong generators and transversals for a permutation group.

    Built with random Schreier-Sims (seeded, so reproducible); call
    :meth:`verify` to run the deterministic Schreier generator check.
    """

    def __init__(self, gens: Sequence[Sequence[int]], degree: int, *, seed: int = 0):
        self.degree = degree
        self.levels: list[_Level] = []
        self.verified = False
        self._rng = random.Random(seed)
        gens = [tuple(g) for g in gens if any(i != j for i, j in enumerate(g))]
        self._gens = gens
        for g in gens:
            self._insert(g, 0)
        self._random_phase()

    # sifting -----------------------------------------------------------
    def sift(self, g: Sequence[int], start: int = 0) -> tuple[tuple[int, ...], int]:
        g = tuple(g)
        for i in range(start, len(self.levels)):
            lev = self.levels[i]
            pt = g[lev.point]
            tr = lev.trans.get(pt)
            if tr is None:
                return g, i
            g = pmul(g, tr[1])
        return g, len(self.levels)

    def contains(self, g: Sequence[int]) -> bool:
        if len(g) != self.degree:
            return False
        r, _ = self.sift(g)
        return all(i == j for i, j in enumerate(r))

    def _insert(self, g: tuple[int, ...], level: int) -> None:
        """Add g (which fixes the first ``level`` base points) as a strong generator."""
        if all(i == j for i, j in enumerate(g)):
            return
        # extend the base if g fixes every current base point from `level` on
        i = level
        while i < len(self.levels) and g[self.levels[i].point] == self.levels[i].point:
            i += 1
        if i == len(self.levels):
            moved = next(p for p in range(self.degree) if g[p] != p)
            ident = pidentity(self.degree)
            self.levels.append(_Level(moved, [], {moved: (ident, ident)}))
        # g fixes every earlier base point, so it belongs to all S_j with j <= i
        for j in range(i + 1):
            lev = self.levels[j]
            lev.gens.append(g)
            lev.extend([g])

    def _random_phase(self, stable_rounds: int = 24) -> None:
        if not self._gens:
            return
        pool = list(self._gens)
        while len(pool) < 10:
            pool.append(pool[len(pool) % len(self._gens)])
        acc = pidentity(self.degree)
        rng = self._rng

        def rand_elt():
            nonlocal acc
            i, j = rng.sample(range(len(pool)), 2)
            if rng.random() < 0.5:
                pool[i] = pmul(pool[i], pool[j])
            else:
                pool[i] = pmul(pool[j], pool[i])
            acc = pmul(acc, pool[i])
            return acc

        for _ in range(30):
            rand_elt()
        quiet = 0
        while quiet < stable_rounds:
            r, lvl = self.sift(rand_elt())
            if any(i != j for i, j in enumerate(r)):
                self._insert(r, lvl)
                quiet = 0
            else:
                quiet += 1

    def verify(self) -> None:
        """Deterministic completion: every Schreier generator must sift."""
        while True:
            changed = False
            for i in range(len(self.levels) - 1, -1, -1):
                lev = self.levels[i]
                for pt, (u, _) in list(lev.trans.items()):
                    for s in list(lev.gens):
                        sg = pmul(pmul(u, s), lev.trans[s[pt]][1])
                        r, lvl = self.sift(sg, i + 1)
                        if any(a != b for a, b in enumerate(r)):
                            self._insert(r, lvl)
                            changed = True
                            break
                    if changed:
                        break
                if changed:
                    break
            if not changed:
                self.verified = True
                return

    def order(self) -> int:
        return math.prod(len(lev.trans) for lev in self.levels)

    @property
    def base(self) -> list[int]:
        return [lev.point for lev in self.levels]

    def strong_generators(self) -> list[tuple[int, ...]]:
        return list(self.levels[0].gens) if self.levels else []

    def elements(self) -> Iterator[tuple[int, ...]]:
        """All group elements, each exactly once."""
        n = self.degree

        def rec(i: int, acc: tuple[int, ...]):
            if i < 0:
                yield acc
                return
            for u, _ in self.levels[i].trans.values():
                yield from rec(i - 1, pmul(acc, u))

        if not self.levels:
            yield pidentity(n)
            return
        yield from rec(len(self.levels) - 1, pidentity(n))


# -- groups -----------------------------------------------------------------

class PermGroup:
    """A permutation group given by generators.

    The stabilizer chain is built lazily and always verified before an
    order is reported.
    """

    def __init__(self, gens: Iterable[Sequence[int]], degree: int | None = None, *, seed: int = 0):
        gens = [Permutation(g) for g in gens]
        if degree is None:
            if not gens:
                raise PermError("degree required for a group without generators")
            degree = len(gens[0])
        for g in gens:
            if len(g) != degree:
                raise PermError("generator degree mismatch")
        self.generators: list[Permutation] = gens
        self.degree = degree
        self._seed = seed
        self._chain: StabilizerChain | None = None
        self._elements: list[tuple[int, ...]] | None = None

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None or not self._chain.verified:
            if self._chain is None:
                self._chain = StabilizerChain(self.generators, self.degree, seed=self._seed)
            self._chain.verify()
        return self._chain

    def order_lower_bound(self) -> int:
        """Order of the unverified random chain; never exceeds the true order."""
        if self._chain is None:
            self._chain = StabilizerChain(self.generators, self.degree, seed=self._seed)
        return self._chain.order()

    def order(self) -> int:
        return self.chain.order()

    def contains(self, g: Sequence[int]) -> bool:
        return self.chain.contains(g)

    __contains__ = contains

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def elements(self, bound: int = DEFAULT_ORDER_BOUND) -> list[tuple[int, ...]]:
        if self._elements is None:
            if self.order() > bound:
                raise OrderBoundExceeded(f"group order {self.order()} exceeds bound {bound}")
            self._elements = sorted(self.chain.elements())
        return self._elements

    def orbit(self, point: int) -> list[int]:
        seen = {point}
        stack = [point]
        while stack:
            p = stack.pop()
            for g in self.generators:
                q = g[p]
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        return sorted(seen)

    def is_transitive(self) -> bool:
        return self.degree <= 1 or len(self.orbit(0)) == self.degree

    def random_element(self, rng: random.Random) -> Permutation:
        """Uniform random element via the stabilizer chain."""
        acc = pidentity(self.degree)
        for lev in reversed(self.chain.levels):
            u = rng.choice(sorted(lev.trans))
            acc = pmul(lev.trans[u][0], acc)
        return Permutation._raw(acc)


def minimal_block(gens: Sequence[Sequence[int]], n: int, a: int, b: int) -> list[int]:
    """Smallest block containing points a and b (Atkinson's union-find closure)."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> bool:
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[max(rx, ry)] = min(rx, ry)
        return True

    pending = [(a, b)]
    union(a, b)
    while pending:
        x, y = pending.pop()
        for g in gens:
            gx, gy = g[x], g[y]
            if find(gx) != find(gy):
                union(gx, gy)
                pending.append((gx, gy))
    root = find(a)
    return [p for p in range(n) if find(p) == root]


def block_system(gens: Sequence[Sequence[int]], n: int) -> list[int] | None:
    """A nontrivial block containing 0, or None if the (transitive) action is primitive."""
    for k in range(1, n):
        blk = minimal_block(gens, n, 0, k)
        if len(blk) < n:
            return blk
    return None


@dataclass(frozen=True)
class Classification:
    kind: str  # Symmetric | Alternating | Imprimitive | Intransitive | PrimitiveOther
    order: int | None = None
    block_size: int | None = None

    def __str__(self) -> str:
        if self.kind == "PrimitiveOther":
            return f"PrimitiveOther({self.order})"
        return self.kind


def classify_subgroup(gens: Sequence[Sequence[int]], m: int, *, seed: int = 0) -> Classification:
    """Decide whether <gens> on m points is S_m, A_m, intransitive, imprimitive or other.

    Full groups are recognised by exact order comparison with m! and m!/2.  The
    random chain gives a lower bound on the order, so reaching the bound
    certifies the answer without the verification pass.
    """
    gens = [tuple(g) for g in gens]
    if m <= 1:
        return Classification("Symmetric", 1)
    grp = PermGroup(gens, m, seed=seed) if gens else PermGroup([], m)
    if not grp.is_transitive():
        return Classification("Intransitive")
    blk = block_system(gens, m)
    if blk is not None:
        return Classification("Imprimitive", block_size=len(blk))
    full = math.factorial(m)
    all_even = all(is_even(g) for g in gens)
    target = full // 2 if all_even else full
    low = grp.order_lower_bound()
    order = low if low == target else grp.order()
    if order == full:
        return Classification("Symmetric", order)
    if 2 * order == full:
        return Classification("Alternating", order)
    return Classification("PrimitiveOther", order)


def symmetric_group(n: int) -> PermGroup:
    if n <= 1:
        return PermGroup([], max(n, 1))
    gens = [Permutation.from_cycles([[0, 1]], n), Permutation.from_cycles([list(range(n))], n)]
    return PermGroup(gens, n)


def alternating_group(n: int) -> PermGroup:
    if n <= 2:
        return PermGroup([], max(n, 1))
    gens = [Permutation.from_cycles([[i, i + 1, i + 2]], n) for i in range(n - 2)]
    return PermGroup(gens, n)


# -- conjugacy classes ------------------------------------------------------

@dataclass
class ConjClass:
    label: str
    representative: Permutation
    size: int
    element_order: int
    cycle_type: Partition
    index: int = 0
    power_links: dict[int, str] = field(default_factory=dict)
    # element -> conjugator c with representative^c = element
    conjugators: dict[tuple[int, ...], tuple[int, ...]] = field(default_factory=dict, repr=False)

    def elements(self) -> list[tuple[int, ...]]:
        return sorted(self.conjugators)

    def __contains__(self, g) -> bool:
        return tuple(g) in self.conjugators


class ClassData:
    """Conjugacy classes of a group together with an element -> class lookup."""

    def __init__(self, group: PermGroup, classes: list[ConjClass], lookup: dict[tuple[int, ...], int]):
        self.group = group
        self.classes = classes
        self.lookup = lookup

    def class_of(self, g: Sequence[int]) -> ConjClass:
        return self.classes[self.lookup[tuple(g)]]

    def by_label(self, label: str) -> ConjClass:
        for c in self.classes:
            if c.label == label:
                return c
        raise KeyError(label)

    def center_order(self) -> int:
        return sum(1 for c in self.classes if c.size == 1)


def _orbit_under_conjugation(rep: tuple[int, ...], gens: Sequence[tuple[int, ...]]) -> dict:
    n = len(rep)
    conj = {rep: pidentity(n)}
    stack = [rep]
    while stack:
        x = stack.pop()
        cx = conj[x]
        for s in gens:
            y = pconj(x, s)
            if y not in conj:
                conj[y] = pmul(cx, s)
                stack.append(y)
    return conj


def conjugacy_classes(group: PermGroup, *, bound: int = DEFAULT_ORDER_BOUND,
                      label_style: str = "cycle") -> ClassData:
    """Classes by closure under conjugation by generators, with deterministic labels.

    ``label_style`` is ``"cycle"`` (labels like ``311``, ``5a``), ``"order"``
    (``2a``, ``7b``) or ``"atlas"`` (letters by element order, smallest classes
    first, i.e. largest centralizers first).  Within one shape the letters
    follow the rule: the class holding the lexicographically least unlabelled
    element (for ``"atlas"``: the smallest class, then the least element) gets
    the next letter, then its power classes rep^k (k = 2, 3, ... coprime to
    the order) of the same shape get the following letters.
    """
    elements = group.elements(bound)
    gens = [tuple(g) for g in group.generators]
    lookup: dict[tuple[int, ...], int] = {}
    raw: list[tuple[tuple[int, ...], dict]] = []
    for e in elements:  # sorted, so reps are lexicographic minima
        if e in lookup:
            continue
        conj = _orbit_under_conjugation(e, gens)
        idx = len(raw)
        for y in conj:
            lookup[y] = idx
        raw.append((e, conj))

    def shape(rep):
        if label_style in ("order", "atlas"):
            return (order_of(rep),)
        return cycle_type_of(rep)

    # classes ordered by (element order, shape, size, rep)
    order_keys = sorted(range(len(raw)), key=lambda i: (order_of(raw[i][0]), _shape_key(shape(raw[i][0])),
                                                        len(raw[i][1]), raw[i][0]))
    renum = {old: new for new, old in enumerate(order_keys)}
    raw = [raw[i] for i in order_keys]
    lookup = {k: renum[v] for k, v in lookup.items()}

    by_shape: dict[tuple, list[int]] = {}
    for i, (rep, _) in enumerate(raw):
        by_shape.setdefault(shape(rep), []).append(i)

    labels: dict[int, str] = {}
    for shp, idxs in by_shape.items():
        base = str(shp[0]) if label_style in ("order", "atlas") else compact_label(shp)
        if len(idxs) == 1 and label_style == "cycle":
            labels[idxs[0]] = base
            continue
        letters = iter("abcdefghijklmnopqrstuvwxyz")
        if label_style == "atlas":
            remaining = sorted(idxs, key=lambda i: (len(raw[i][1]), raw[i][0]))
        else:
            remaining = sorted(idxs, key=lambda i: raw[i][0])
        while remaining:
            anchor = remaining[0]
            fam = [anchor]
            rep = raw[anchor][0]
            o = order_of(rep)
            for k in range(2, o):
                if math.gcd(k, o) != 1:
                    continue
                j = lookup[ppow(rep, k)]
                if j in remaining and j not in fam:
                    fam.append(j)
            for j in fam:
                labels[j] = base + next(letters)
                remaining.remove(j)

    # final order: element order, shape, then label
    final = sorted(range(len(raw)), key=lambda i: (order_of(raw[i][0]), _shape_key(shape(raw[i][0])),
                                                   len(labels[i]), labels[i]))
    renum = {old: new for new, old in enumerate(final)}
    raw = [raw[i] for i in final]
    labels = {renum[k]: v for k, v in labels.items()}
    lookup = {k: renum[v] for k, v in lookup.items()}

    classes = []
    for i, (rep, conj) in enumerate(raw):
        classes.append(ConjClass(label=labels[i], representative=Permutation._raw(rep), size=len(conj),
                                 element_order=order_of(rep), cycle_type=cycle_type_of(rep), index=i,
                                 conjugators=conj))
    for c in classes:
        o = c.element_order
        for k in range(1, max(o, 2)):
            if math.gcd(k, o) == 1:
                c.power_links[k] = classes[lookup[ppow(c.representative, k)]].label
    return ClassData(group, classes, lookup)


def _shape_key(shp: tuple) -> tuple:
    return tuple(-x for x in shp)


def centralizer_elements(group: PermGroup, g: Sequence[int], *, bound: int = DEFAULT_ORDER_BOUND) -> list[tuple[int, ...]]:
    g = tuple(g)
    return [x for x in group.elements(bound) if pmul(x, g) == pmul(g, x)]


def subgroup_from_elements(elements: Sequence[Sequence[int]], degree: int, target_order: int | None = None) -> PermGroup:
    """A subgroup generated greedily by elements until nothing new is added."""
    gens: list[tuple[int, ...]] = []
    grp = PermGroup([], degree)
    for x in elements:
        if target_order is not None and grp.order() == target_order:
            break
        if any(i != j for i, j in enumerate(x)) and not grp.contains(x):
            gens.append(tuple(x))
            grp = PermGroup(gens, degree)
    return grp


def centralizer(group: PermGroup, g: Sequence[int], *, bound: int = DEFAULT_ORDER_BOUND) -> PermGroup:
    if not group.contains(g):
        raise PermError("element is not in the group")
    elts = centralizer_elements(group, g, bound=bound)
    return subgroup_from_elements(elts, group.degree, len(elts))


def group_order(group: PermGroup) -> int:
    return group.order()
