"""Shared oracles and small runners for the test suite."""

from __future__ import annotations

import itertools
import math

from hurwitz_belyi.braid_engine import BraidWord, act, components, s
from hurwitz_belyi.nielsen import HurwitzParameter, enumerate_fiber, star_quotient
from hurwitz_belyi.perm_core import pidentity, pinv, pmul


def brute_tuple_count(h: HurwitzParameter) -> int:
    """Product-one tuples with entries in the position classes, by exhaustion."""
    pos = h.position_classes()
    ident = pidentity(h.atlas.group.degree)
    members = [list(c.conjugators) for c in pos]
    count = 0
    for t in itertools.product(*members[:-1]):
        acc = ident
        for g in t:
            acc = pmul(acc, g)
        # the last entry is forced to be the inverse of the partial product
        if pinv(acc) in pos[-1].conjugators:
            count += 1
    return count


def fiber_components(group: str, classes: str, nu: str, pencil: str, *, star: bool = False, ext=None,
                     target_order: int | None = None):
    h = HurwitzParameter.parse(group, classes, nu, target_order)
    fib = enumerate_fiber(h)
    if star:
        fib = star_quotient(fib)
    return components(fib, pencil, ext=ext)


def relation_pairs(r: int) -> list[tuple[BraidWord, BraidWord]]:
    """Defining relations of the braid group on r strands, plus s_i s_i^-1 = 1."""
    out = []
    for i in range(1, r):
        out.append((s(i) * s(i, -1), BraidWord(())))
        if i + 1 < r:
            out.append((s(i) * s(i + 1) * s(i), s(i + 1) * s(i) * s(i + 1)))
        for j in range(i + 2, r):
            out.append((s(i) * s(j), s(j) * s(i)))
    return out


def _block_power(w: BraidWord, nu) -> int:
    k = 1
    while not (w ** k).preserves_blocks(nu):
        k += 1
        if k > math.factorial(sum(nu)):
            raise AssertionError("no block-preserving power")
    return k


def braid_relation_failures(fib) -> list[str]:
    """Check the braid relations as permutations of the fiber.

    A relation whose words permute the blocks is replaced by a power of both
    sides that preserves them.
    """
    h = fib.h
    bad = []
    if fib.degree == 0:
        return bad
    for L, R in relation_pairs(h.r):
        if not L.preserves_blocks(h.nu):
            k = _block_power(L, h.nu)
            L, R = L ** k, R ** k
        if act(L, fib) != act(R, fib):
            bad.append(f"relation {L} = {R}")
    return bad
