"""Class multiplication counts and masses, computed by convolution over classes.

A :class:`ClassVector` stores, for each class K, the number of tuples with
entries in the processed classes whose product equals one fixed element of K.
That number does not depend on which element of K is chosen.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .perm_core import ClassData, ConjClass, pmul


class ClassAlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class ClassVector:
    classes: ClassData
    counts: tuple[int, ...]

    @classmethod
    def identity(cls, cd: ClassData) -> "ClassVector":
        ident = cd.lookup[tuple(range(cd.group.degree))]
        return cls(cd, tuple(1 if i == ident else 0 for i in range(len(cd.classes))))

    def __getitem__(self, k: int) -> int:
        return self.counts[k]

    def total(self) -> int:
        """Number of tuples counted, summed over every possible product."""
        return sum(v * c.size for v, c in zip(self.counts, self.classes.classes))

    def support(self) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self.counts) if v)


# (id(ClassData), K index, C index) -> {K' index: count}
_STRUCT: dict[tuple[int, int, int], dict[int, int]] = {}


def structure_counts(cd: ClassData, k: int, c: int) -> dict[int, int]:
    """a(K, C, K') = #{y in C : x y in K'} for the fixed representative x of K."""
    key = (id(cd), k, c)
    hit = _STRUCT.get(key)
    if hit is not None:
        return hit
    x = tuple(cd.classes[k].representative)
    out: dict[int, int] = {}
    lookup = cd.lookup
    for y in cd.classes[c].conjugators:
        j = lookup[pmul(x, y)]
        out[j] = out.get(j, 0) + 1
    _STRUCT[key] = out
    return out


def convolve(v: ClassVector, C: ConjClass) -> ClassVector:
    cd = v.classes
    if C.index >= len(cd.classes) or cd.classes[C.index] is not C:
        raise ClassAlgebraError(f"class {C.label} does not belong to this group")
    acc = [0] * len(cd.classes)
    for k, vk in enumerate(v.counts):
        if not vk:
            continue
        sk = cd.classes[k].size
        for j, a in structure_counts(cd, k, C.index).items():
            acc[j] += vk * sk * a
    out = []
    for j, tot in enumerate(acc):
        q, r = divmod(tot, cd.classes[j].size)
        if r:
            raise ClassAlgebraError("class counts are not constant on a class")
        out.append(q)
    return ClassVector(cd, tuple(out))


def class_vector(cd: ClassData, classes: Iterable[ConjClass]) -> ClassVector:
    v = ClassVector.identity(cd)
    for c in classes:
        v = convolve(v, c)
    return v


def tuple_count(cd: ClassData, classes: Sequence[ConjClass]) -> int:
    """T = #{(g_1..g_r) : g_i in C_i, g_1 ... g_r = 1}."""
    v = class_vector(cd, classes)
    return v[cd.lookup[tuple(range(cd.group.degree))]]


def mass(h) -> Fraction:
    """Mass T |Z(G)| / |G| of a Hurwitz parameter."""
    cd = h.atlas.classes
    t = tuple_count(cd, h.position_classes())
    return Fraction(t * cd.center_order(), h.atlas.order)


def suffix_supports(cd: ClassData, classes: Sequence[ConjClass]) -> list[frozenset[int]]:
    """For each j, the classes K such that some product of classes[j:] lies in K."""
    out: list[frozenset[int]] = [frozenset()] * (len(classes) + 1)
    v = ClassVector.identity(cd)
    out[len(classes)] = v.support()
    for j in range(len(classes) - 1, -1, -1):
        # products c_j * (suffix) have the same class multiset as (suffix) * c_j
        v = convolve(v, classes[j])
        out[j] = v.support()
    return out


def format_mass(m: Fraction) -> str:
    """``106 1/7`` style mixed number."""
    if m.denominator == 1:
        return str(m.numerator)
    whole, rest = divmod(m.numerator, m.denominator)
    if whole:
        return f"{whole} {rest}/{m.denominator}"
    return f"{rest}/{m.denominator}"
