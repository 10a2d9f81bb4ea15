"""Catalog of permutation groups, class labels, outer data and central extensions.

Built-in families: ``S<n>``, ``A<n>``, ``SL2(<q>)``, ``PSL2(<q>)``, ``PGL2(<q>)``.
Other groups come from ``*.grp`` files, looked up in the packaged data
directory and in the directory named by ``HURWITZ_BELYI_CATALOG``.

Config grammar (one directive per line, ``#`` starts a comment)::

    group <name>
    order <n>
    degree <n>
    labels cycle|order|atlas
    gen <cycles>
    outer <cycles>
    alias <label> order=<k> type=<partition> [power <e> -> <label>]... [contains <cycles>]

    extension <name> base=<group> kernel=<k> degree=<n>
    cover_gen <cycles> -> <cycles>
    designate <base class> <cover class>

Cycles use 0-based points, e.g. ``(0 1 2)(3 4)``.
"""

from __future__ import annotations

import os
import random
import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Sequence

from .perm_core import (
    ClassData,
    ConjClass,
    PermError,
    PermGroup,
    Permutation,
    alternating_group,
    conjugacy_classes,
    cycle_type_of,
    order_of,
    parse_partition,
    pconj,
    pidentity,
    pinv,
    pmul,
    ppow,
    symmetric_group,
)

CATALOG_ENV = "HURWITZ_BELYI_CATALOG"
DATA_DIR = Path(__file__).resolve().parent / "data" / "groups"


class AtlasError(ValueError):
    pass


# -- small finite fields ----------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            k, r = 0, q
            while r % p == 0:
                r //= p
                k += 1
            if r != 1:
                raise AtlasError(f"{q} is not a prime power")
            return p, k
    raise AtlasError(f"{q} is not a prime power")


class GF:
    """GF(p^k) with elements 0..q-1 read as base-p digit vectors."""

    def __init__(self, q: int):
        self.q = q
        self.p, self.k = _prime_power(q)
        self.modulus = self._first_irreducible()
        self.add_t = [[self._add(a, b) for b in range(q)] for a in range(q)]
        self.mul_t = [[self._mul(a, b) for b in range(q)] for a in range(q)]
        self.neg = [next(b for b in range(q) if self.add_t[a][b] == 0) for a in range(q)]
        self.inv = [0] + [next(b for b in range(q) if self.mul_t[a][b] == 1) for a in range(1, q)]
        self.primitive = next(a for a in range(1, q) if self._mult_order(a) == q - 1)

    def _digits(self, a: int) -> list[int]:
        return [(a // self.p ** i) % self.p for i in range(self.k)]

    def _num(self, d: Sequence[int]) -> int:
        return sum(c * self.p ** i for i, c in enumerate(d))

    def _add(self, a: int, b: int) -> int:
        return self._num([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def _polymulmod(self, x: list[int], y: list[int], mod: list[int]) -> list[int]:
        p, k = self.p, len(mod) - 1
        prod = [0] * (len(x) + len(y) - 1)
        for i, a in enumerate(x):
            for j, b in enumerate(y):
                prod[i + j] = (prod[i + j] + a * b) % p
        for d in range(len(prod) - 1, k - 1, -1):
            c = prod[d]
            if c:
                for i in range(k + 1):
                    prod[d - k + i] = (prod[d - k + i] - c * mod[i]) % p
        return (prod + [0] * k)[:k]

    def _mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        return self._num(self._polymulmod(self._digits(a), self._digits(b), self.modulus))

    def _first_irreducible(self) -> list[int]:
        p, k = self.p, self.k
        if k == 1:
            return [0, 1]
        for n in range(p ** k):
            coeffs = [(n // p ** i) % p for i in range(k)] + [1]
            if coeffs[0] == 0:
                continue
            # no roots is enough for k <= 3; check all monic factors of degree <= k/2
            if all(self._has_no_factor(coeffs, d) for d in range(1, k // 2 + 1)):
                return coeffs
        raise AtlasError("no irreducible polynomial found")

    def _has_no_factor(self, f: list[int], d: int) -> bool:
        p = self.p
        for n in range(p ** d):
            g = [(n // p ** i) % p for i in range(d)] + [1]
            r = f[:]
            for s in range(len(r) - 1, d - 1, -1):
                c = r[s]
                if c:
                    for i in range(d + 1):
                        r[s - d + i] = (r[s - d + i] - c * g[i]) % p
            if not any(r[:d]):
                return False
        return True

    def _mult_order(self, a: int) -> int:
        x, o = a, 1
        while x != 1:
            x = self._mul(x, a)
            o += 1
        return o

    def frobenius(self, a: int) -> int:
        r = 1
        for _ in range(self.p):
            r = self.mul_t[r][a]
        return r


# -- matrix groups over GF(q) as permutation groups --------------------------

def _mat_mul(F: GF, a, b):
    (a11, a12), (a21, a22) = a
    (b11, b12), (b21, b22) = b
    m, s = F.mul_t, F.add_t
    return ((s[m[a11][b11]][m[a12][b21]], s[m[a11][b12]][m[a12][b22]]),
            (s[m[a21][b11]][m[a22][b21]], s[m[a21][b12]][m[a22][b22]]))


def _proj_points(F: GF) -> list[tuple[int, int]]:
    # (a:1) for a in F, then (1:0) = infinity
    return [(a, 1) for a in range(F.q)] + [(1, 0)]


def _normalize_proj(F: GF, v: tuple[int, int]) -> tuple[int, int]:
    x, y = v
    if y:
        return (F.mul_t[x][F.inv[y]], 1)
    return (1, 0)


def _row_times(F: GF, v, M):
    x, y = v
    (m11, m12), (m21, m22) = M
    m, s = F.mul_t, F.add_t
    return (s[m[x][m11]][m[y][m21]], s[m[x][m12]][m[y][m22]])


def _perm_on_proj(F: GF, M) -> Permutation:
    pts = _proj_points(F)
    idx = {p: i for i, p in enumerate(pts)}
    return Permutation([idx[_normalize_proj(F, _row_times(F, v, M))] for v in pts])


def _vectors(F: GF) -> list[tuple[int, int]]:
    return [(x, y) for x in range(F.q) for y in range(F.q) if (x, y) != (0, 0)]


def _perm_on_vectors(F: GF, M) -> Permutation:
    vs = _vectors(F)
    idx = {v: i for i, v in enumerate(vs)}
    return Permutation([idx[_row_times(F, v, M)] for v in vs])


def _sl2_generators(F: GF):
    gens = []
    a = 1
    for _ in range(F.k):
        gens.append(((1, a), (0, 1)))
        gens.append(((1, 0), (a, 1)))
        a = F.mul_t[a][F.primitive]
    return gens


def _frobenius_perm(F: GF, points) -> Permutation:
    idx = {p: i for i, p in enumerate(points)}
    return Permutation([idx[(F.frobenius(x), F.frobenius(y))] for (x, y) in points])


# -- group objects ----------------------------------------------------------

@dataclass
class Alias:
    label: str
    order: int | None = None
    cycle_type: tuple[int, ...] | None = None
    powers: list[tuple[int, str]] = field(default_factory=list)
    contains: Permutation | None = None


@dataclass
class AtlasGroup:
    name: str
    group: PermGroup
    classes: ClassData
    outer: list[Permutation] = field(default_factory=list)
    aliases: dict[str, int] = field(default_factory=dict)
    expected_order: int | None = None

    def __iter__(self) -> Iterator:
        yield self.group
        yield self.classes.classes

    @property
    def order(self) -> int:
        return self.group.order()

    def resolve(self, label: str) -> ConjClass:
        return resolve_class(self, label)


def _normalizes(group: PermGroup, o: Sequence[int]) -> bool:
    return all(group.contains(pconj(g, o)) for g in group.generators)


def _resolve_aliases(cd: ClassData, aliases: list[Alias]) -> dict[str, int]:
    def candidates(al: Alias) -> list[int]:
        out = []
        for c in cd.classes:
            if al.order is not None and c.element_order != al.order:
                continue
            if al.cycle_type is not None and tuple(c.cycle_type) != al.cycle_type:
                continue
            if al.contains is not None and tuple(al.contains) not in c:
                continue
            out.append(c.index)
        return out

    by_label = {c.label: c.index for c in cd.classes}
    cands = [candidates(a) for a in aliases]
    for a, cs in zip(aliases, cands):
        if not cs:
            raise AtlasError(f"alias {a.label!r} matches no class")

    def consistent(assign: dict[str, int]) -> bool:
        for a in aliases:
            if a.label not in assign:
                continue
            rep = cd.classes[assign[a.label]].representative
            for e, target in a.powers:
                tgt = assign.get(target, by_label.get(target) if target not in {x.label for x in aliases} else None)
                if tgt is None:
                    continue
                if cd.lookup[ppow(rep, e)] != tgt:
                    return False
        return True

    def search(i: int, assign: dict[str, int]) -> dict[str, int] | None:
        if i == len(aliases):
            return dict(assign)
        for c in cands[i]:
            if c in assign.values():
                continue
            assign[aliases[i].label] = c
            if consistent(assign):
                res = search(i + 1, assign)
                if res is not None:
                    return res
            del assign[aliases[i].label]
        return None

    result = search(0, {})
    if result is None:
        raise AtlasError("aliases cannot be resolved consistently")
    return result


def _finish(name: str, group: PermGroup, *, expected: int | None, label_style: str,
            outer: Sequence[Sequence[int]] = (), aliases: Sequence[Alias] = ()) -> AtlasGroup:
    order = group.order()
    if expected is not None and order != expected:
        raise AtlasError(f"{name}: constructed order {order} differs from expected {expected}")
    cd = conjugacy_classes(group, label_style=label_style)
    outs = [Permutation(o) for o in outer]
    for o in outs:
        if not _normalizes(group, o):
            raise AtlasError(f"{name}: outer permutation does not normalize the group")
    amap = _resolve_aliases(cd, list(aliases)) if aliases else {}
    return AtlasGroup(name, group, cd, outs, amap, expected)


def _build_builtin(name: str) -> AtlasGroup | None:
    m = re.fullmatch(r"([SA])(\d+)", name)
    if m:
        n = int(m.group(2))
        if m.group(1) == "S":
            return _finish(name, symmetric_group(n), expected=None, label_style="cycle")
        outer = [Permutation.from_cycles([[0, 1]], n)] if n >= 2 else []
        return _finish(name, alternating_group(n), expected=None, label_style="cycle", outer=outer)
    m = re.fullmatch(r"(SL2|PSL2|PGL2)\((\d+)\)", name)
    if m:
        kind, q = m.group(1), int(m.group(2))
        F = GF(q)
        mats = _sl2_generators(F)
        if kind == "SL2":
            gens = [_perm_on_vectors(F, M) for M in mats]
            expected = q * (q * q - 1)
            outer = [_frobenius_perm(F, _vectors(F))] if F.k > 1 else []
        else:
            gens = [_perm_on_proj(F, M) for M in mats]
            expected = q * (q * q - 1) // (1 if F.p == 2 else 2)
            diag = ((F.primitive, 0), (0, 1))
            outer = []
            if kind == "PGL2" and F.p != 2:
                gens.append(_perm_on_proj(F, diag))
                expected *= 2
            elif F.p != 2:
                outer.append(_perm_on_proj(F, diag))
            if F.k > 1:
                outer.append(_frobenius_perm(F, _proj_points(F)))
        # SL2(q) == PSL2(q) == PGL2(q) in characteristic 2
        return _finish(name, PermGroup(gens), expected=expected, label_style="order", outer=outer)
    return None


# -- config files -----------------------------------------------------------

@dataclass
class _GroupConf:
    name: str
    order: int | None = None
    degree: int | None = None
    labels: str = "order"
    gens: list[str] = field(default_factory=list)
    outer: list[str] = field(default_factory=list)
    aliases: list[tuple[str, str]] = field(default_factory=list)


@dataclass
class _ExtConf:
    name: str
    base: str
    kernel: int
    degree: int
    gens: list[tuple[str, str]] = field(default_factory=list)
    designate: list[tuple[str, str]] = field(default_factory=list)


def _catalog_dirs() -> list[Path]:
    dirs = []
    env = os.environ.get(CATALOG_ENV)
    if env:
        dirs.append(Path(env))
    dirs.append(DATA_DIR)
    return dirs


def parse_config(text: str) -> tuple[list[_GroupConf], list[_ExtConf]]:
    groups: list[_GroupConf] = []
    exts: list[_ExtConf] = []
    cur: _GroupConf | _ExtConf | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if key == "group":
                cur = _GroupConf(rest)
                groups.append(cur)
            elif key == "extension":
                parts = rest.split()
                kv = dict(p.split("=", 1) for p in parts[1:])
                cur = _ExtConf(parts[0], kv["base"], int(kv["kernel"]), int(kv["degree"]))
                exts.append(cur)
            elif isinstance(cur, _GroupConf) and key == "order":
                cur.order = int(rest)
            elif isinstance(cur, _GroupConf) and key == "degree":
                cur.degree = int(rest)
            elif isinstance(cur, _GroupConf) and key == "labels":
                if rest not in ("cycle", "order", "atlas"):
                    raise ValueError(f"unknown label style {rest!r}")
                cur.labels = rest
            elif isinstance(cur, _GroupConf) and key == "gen":
                cur.gens.append(rest)
            elif isinstance(cur, _GroupConf) and key == "outer":
                cur.outer.append(rest)
            elif isinstance(cur, _GroupConf) and key == "alias":
                lab, _, spec = rest.partition(" ")
                cur.aliases.append((lab, spec))
            elif isinstance(cur, _ExtConf) and key == "cover_gen":
                a, b = rest.split("->")
                cur.gens.append((a.strip(), b.strip()))
            elif isinstance(cur, _ExtConf) and key == "designate":
                a, b = rest.split()
                cur.designate.append((a, b))
            else:
                raise AtlasError(f"unknown directive {key!r}")
        except (KeyError, ValueError) as exc:
            raise AtlasError(f"config line {lineno}: {raw.strip()!r}: {exc}") from exc
    return groups, exts


def _parse_alias(label: str, spec: str, degree: int) -> Alias:
    al = Alias(label)
    m = re.search(r"order=(\d+)", spec)
    if m:
        al.order = int(m.group(1))
    m = re.search(r"type=(\S+)", spec)
    if m:
        al.cycle_type = parse_partition(m.group(1))
    for e, tgt in re.findall(r"power\s+(\d+)\s*->\s*(\S+)", spec):
        al.powers.append((int(e), tgt))
    m = re.search(r"contains\s+(\(.*\))", spec)
    if m:
        al.contains = Permutation.parse(m.group(1), degree)
    return al


@lru_cache(maxsize=None)
def _load_configs() -> tuple[dict[str, _GroupConf], dict[str, _ExtConf]]:
    gmap: dict[str, _GroupConf] = {}
    emap: dict[str, _ExtConf] = {}
    for d in reversed(_catalog_dirs()):  # env dir wins
        if not d.is_dir():
            continue
        for f in sorted(d.glob("*.grp")):
            gs, es = parse_config(f.read_text(encoding="utf-8"))
            for g in gs:
                gmap[g.name] = g
            for e in es:
                emap[e.name] = e
    return gmap, emap


def _build_from_config(conf: _GroupConf) -> AtlasGroup:
    if conf.degree is None:
        raise AtlasError(f"{conf.name}: missing degree")
    n = conf.degree
    gens = [Permutation.parse(s, n) for s in conf.gens]
    outer = [Permutation.parse(s, n) for s in conf.outer]
    aliases = [_parse_alias(l, s, n) for l, s in conf.aliases]
    return _finish(conf.name, PermGroup(gens, n), expected=conf.order, label_style=conf.labels,
                   outer=outer, aliases=aliases)


_CACHE: dict[str, AtlasGroup] = {}


def build_group(name: str) -> AtlasGroup:
    """Construct a catalog group; iterating the result yields ``(PermGroup, classes)``."""
    key = name.strip()
    if key in _CACHE:
        return _CACHE[key]
    gmap, _ = _load_configs()
    if key in gmap:
        ag = _build_from_config(gmap[key])
    else:
        ag = _build_builtin(key)
        if ag is None:
            raise AtlasError(f"unknown group {name!r}")
    _CACHE[key] = ag
    return ag


def clear_cache() -> None:
    _CACHE.clear()
    _EXT_CACHE.clear()
    _load_configs.cache_clear()


def resolve_class(ag: AtlasGroup, label: str) -> ConjClass:
    label = label.strip()
    if label in ag.aliases:
        return ag.classes.classes[ag.aliases[label]]
    for c in ag.classes.classes:
        if c.label == label:
            return c
    # tolerate exponent notation for cycle types: "2^2 1" == "221"
    try:
        want = parse_partition(label)
    except ValueError:
        want = None
    if want:
        hits = [c for c in ag.classes.classes if tuple(c.cycle_type) == want and sum(want) == ag.group.degree]
        if len(hits) == 1:
            return hits[0]
        if len(hits) > 1:
            raise AtlasError(f"class label {label!r} is ambiguous in {ag.name}: "
                             + ", ".join(c.label for c in hits))
    raise AtlasError(f"unknown class {label!r} in {ag.name}")


def out_group_reps(ag: AtlasGroup) -> list[Permutation]:
    """Coset representatives of G in <G, outer>, identity first."""
    n = ag.group.degree
    reps: list[tuple[int, ...]] = [pidentity(n)]
    frontier = list(reps)
    while frontier:
        nxt = []
        for r in frontier:
            for o in ag.outer:
                x = pmul(r, tuple(o))
                if not any(ag.group.contains(pmul(x, pinv(y))) for y in reps):
                    reps.append(x)
                    nxt.append(x)
        frontier = nxt
    return [Permutation(r) for r in reps]


def outer_action_on_classes(ag: AtlasGroup, o: Sequence[int]) -> list[int]:
    """Index permutation of the class list induced by conjugation with o."""
    cd = ag.classes
    return [cd.lookup[pconj(tuple(c.representative), tuple(o))] for c in cd.classes]


def out_stabilizer(ag: AtlasGroup, classes: Sequence[ConjClass]) -> list[Permutation]:
    """Coset reps of Out(G, C): outer elements fixing every class in ``classes``."""
    keep = []
    for o in out_group_reps(ag):
        act = outer_action_on_classes(ag, o)
        if all(act[c.index] == c.index for c in classes):
            keep.append(o)
    return keep


# -- central extensions -----------------------------------------------------

@dataclass
class CentralExtensionSpec:
    name: str
    cover: PermGroup
    base: AtlasGroup
    cover_classes: ClassData
    projection: dict[tuple[int, ...], tuple[int, ...]]
    kernel: list[tuple[int, ...]]
    generator_images: list[tuple[Permutation, Permutation]]
    designated: dict[int, int] = field(default_factory=dict)  # base class index -> cover class index
    _lifts: dict[tuple[int, ...], list[tuple[int, ...]]] = field(default_factory=dict, repr=False)

    def project(self, x: Sequence[int]) -> tuple[int, ...]:
        return self.projection[tuple(x)]

    def lifts(self, g: Sequence[int]) -> list[tuple[int, ...]]:
        if not self._lifts:
            for x, y in self.projection.items():
                self._lifts.setdefault(y, []).append(x)
            for v in self._lifts.values():
                v.sort()
        return self._lifts[tuple(g)]

    def kernel_label(self, z: Sequence[int]) -> str:
        z = tuple(z)
        if len(self.kernel) == 1:
            return "+"
        if z not in self.kernel:
            raise AtlasError("element is not in the kernel")
        if len(self.kernel) == 2:
            return "+" if all(i == j for i, j in enumerate(z)) else "-"
        return f"z{self.kernel.index(z)}"

    def splits(self, cls: ConjClass) -> bool:
        """True if the preimage of the class is |Z| classes of the cover."""
        pre = {self.cover_classes.lookup[x] for x in self.lifts(cls.representative)}
        return len(pre) == len(self.kernel)

    def designated_class(self, cls: ConjClass) -> int:
        if cls.index in self.designated:
            return self.designated[cls.index]
        if len(self.kernel) == 1:
            return self.cover_classes.lookup[self.lifts(cls.representative)[0]]
        if len(self.kernel) == 2 and cls.element_order % 2 == 1:
            odd = [x for x in self.lifts(cls.representative) if order_of(x) % 2 == 1]
            return self.cover_classes.lookup[odd[0]]
        if not self.splits(cls):
            raise InertClass(f"class {cls.label} is inert in {self.name}")
        raise InertClass(f"class {cls.label} has no designated lift in {self.name}")

    def designated_lift(self, g: Sequence[int], cls: ConjClass) -> tuple[int, ...]:
        want = self.designated_class(cls)
        hits = [x for x in self.lifts(g) if self.cover_classes.lookup[x] == want]
        if len(hits) != 1:
            raise InertClass(f"class {cls.label} does not split in {self.name}")
        return hits[0]


class InertClass(AtlasError):
    pass


def _tabulate_projection(cover_gens: Sequence[Sequence[int]], images: Sequence[Sequence[int]],
                         base_degree: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Extend a generator correspondence to all of the cover, checking it is a homomorphism."""
    n = len(cover_gens[0])
    start = pidentity(n)
    table = {start: pidentity(base_degree)}
    stack = [start]
    pairs = [(tuple(a), tuple(b)) for a, b in zip(cover_gens, images)]
    while stack:
        x = stack.pop()
        fx = table[x]
        for a, b in pairs:
            y = pmul(x, a)
            fy = pmul(fx, b)
            old = table.get(y)
            if old is None:
                table[y] = fy
                stack.append(y)
            elif old != fy:
                raise AtlasError("projection is not a homomorphism")
    return table


def _finish_extension(name: str, cover: PermGroup, base: AtlasGroup, images: Sequence[Sequence[int]],
                      kernel_order: int, designate: Sequence[tuple[str, str]] = ()) -> CentralExtensionSpec:
    table = _tabulate_projection(cover.generators, images, base.group.degree)
    if len(table) != cover.order():
        raise AtlasError(f"{name}: tabulation did not reach the whole cover")
    ident = pidentity(base.group.degree)
    kernel = sorted(x for x, y in table.items() if y == ident)
    if len(kernel) != kernel_order:
        raise AtlasError(f"{name}: kernel has order {len(kernel)}, expected {kernel_order}")
    if len(set(table.values())) * kernel_order != cover.order():
        raise AtlasError(f"{name}: projection is not onto")
    for g in cover.generators:
        for z in kernel:
            if pmul(g, z) != pmul(z, g):
                raise AtlasError(f"{name}: kernel is not central")
    for y in set(table.values()):
        if not base.group.contains(y):
            raise AtlasError(f"{name}: image leaves the base group")
    ccd = conjugacy_classes(cover, label_style="order")
    spec = CentralExtensionSpec(name, cover, base, ccd, table, kernel,
                                [(Permutation(a), Permutation(b)) for a, b in zip(cover.generators, images)])
    for bl, cl in designate:
        spec.designated[resolve_class(base, bl).index] = ccd.by_label(cl).index
    return spec


def _index_k_action(cover: PermGroup, k: int, seed: int) -> list[Permutation]:
    """Images of the cover generators in its action on the conjugates of a subgroup of index k."""
    rng = random.Random(seed)
    elts = cover.elements()
    target = cover.order() // k
    for _ in range(20000):
        x, y = rng.choice(elts), rng.choice(elts)
        H = PermGroup([x, y], cover.degree)
        if H.order() != target:
            continue
        Hset = frozenset(H.elements())
        conjs = [Hset]
        seen = {Hset}
        i = 0
        while i < len(conjs):
            for g in cover.generators:
                c = frozenset(pconj(h, tuple(g)) for h in conjs[i])
                if c not in seen:
                    seen.add(c)
                    conjs.append(c)
            i += 1
        if len(conjs) != k:
            continue
        conjs.sort(key=min)
        idx = {c: j for j, c in enumerate(conjs)}
        return [Permutation([idx[frozenset(pconj(h, tuple(g)) for h in c)] for c in conjs])
                for g in cover.generators]
    raise AtlasError("no subgroup of the requested index found")


_EXT_CACHE: dict[str, CentralExtensionSpec] = {}

_BUILTIN_EXT = {
    "SL2(5)->A5": ("SL2(5)", "A5", 5, 2),
    "SL2(9)->A6": ("SL2(9)", "A6", 6, 2),
}
_EXT_ALIASES = {"2.A5": "SL2(5)->A5", "2.A6": "SL2(9)->A6"}


def build_extension(name: str) -> CentralExtensionSpec:
    """Built-in ``SL2(5)->A5``, ``SL2(9)->A6``, ``trivial:<G>``, or a config extension."""
    key = _EXT_ALIASES.get(name.strip(), name.strip())
    if key in _EXT_CACHE:
        return _EXT_CACHE[key]
    _, emap = _load_configs()
    if key.startswith("trivial:"):
        base = build_group(key.split(":", 1)[1])
        spec = _finish_extension(key, base.group, base, base.group.generators, 1)
    elif key in _BUILTIN_EXT:
        cover_name, base_name, k, z = _BUILTIN_EXT[key]
        cover = build_group(cover_name).group
        base = build_group(base_name)
        images = _index_k_action(cover, k, seed=1)
        spec = _finish_extension(key, cover, base, images, z)
    elif key in emap:
        ec = emap[key]
        base = build_group(ec.base)
        cover = PermGroup([Permutation.parse(a, ec.degree) for a, _ in ec.gens], ec.degree)
        images = [Permutation.parse(b, base.group.degree) for _, b in ec.gens]
        spec = _finish_extension(key, cover, base, images, ec.kernel, ec.designate)
    else:
        raise AtlasError(f"unknown extension {name!r}")
    _EXT_CACHE[key] = spec
    return spec


def catalog_names() -> list[str]:
    gmap, _ = _load_configs()
    return sorted(gmap)
