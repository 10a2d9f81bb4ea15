from __future__ import annotations

import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from hurwitz_belyi.perm_core import (PermError, PermGroup, Permutation, alternating_group, block_system,
                                     classify_subgroup, conjugacy_classes, cycle_type, parse_partition,
                                     partition_str, pconj, pidentity, pinv, pmul, ppow, symmetric_group)


def perms(n_min=1, n_max=8):
    return st.integers(n_min, n_max).flatmap(lambda n: st.permutations(list(range(n))).map(tuple))


def same_degree_perms(k: int):
    return st.integers(1, 8).flatmap(
        lambda n: st.tuples(*[st.permutations(list(range(n))).map(tuple) for _ in range(k)]))


def closure(gens, n):
    """Plain breadth-first closure, the oracle for small groups."""
    seen = {pidentity(n)}
    frontier = [pidentity(n)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = pmul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


@given(same_degree_perms(3))
def test_multiplication_is_associative(t):
    a, b, c = t
    assert pmul(pmul(a, b), c) == pmul(a, pmul(b, c))


@given(perms())
def test_inverse(p):
    assert pmul(p, pinv(p)) == pidentity(len(p))
    assert pmul(pinv(p), p) == pidentity(len(p))


@given(same_degree_perms(2))
def test_right_action_convention(t):
    p, q = t
    # i is sent by p first, then by q
    assert all(pmul(p, q)[i] == q[p[i]] for i in range(len(p)))
    assert pconj(p, q) == pmul(pmul(pinv(q), p), q)


@given(perms(), st.integers(-7, 7))
def test_power_agrees_with_repeated_product(p, e):
    acc = pidentity(len(p))
    step = p if e >= 0 else pinv(p)
    for _ in range(abs(e)):
        acc = pmul(acc, step)
    assert ppow(p, e) == acc


@given(perms())
def test_cycle_string_roundtrip(p):
    P = Permutation(p)
    assert Permutation.parse(P.cycle_string(), len(p)) == P
    assert sum(cycle_type(p)) == len(p)


@given(st.lists(st.integers(1, 9), min_size=1, max_size=8))
def test_partition_roundtrip(parts):
    parts = sorted(parts, reverse=True)
    assert list(parse_partition(partition_str(parts))) == parts


def test_partition_notation():
    assert list(parse_partition("15^3 9^3 5 3^6 1")) == [15] * 3 + [9] * 3 + [5] + [3] * 6 + [1]
    assert partition_str([3, 3, 3, 1]) == "3^3 1"


def test_bad_permutation_rejected():
    with pytest.raises(PermError):
        Permutation([0, 0, 1])
    with pytest.raises(PermError):
        Permutation.parse("(0 5)", 3)


@pytest.mark.parametrize("n", range(1, 8))
def test_symmetric_and_alternating_orders(n):
    assert symmetric_group(n).order() == math.factorial(n)
    assert alternating_group(n).order() == max(1, math.factorial(n) // 2)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.lists(st.permutations(list(range(n))).map(tuple), min_size=1,
                                                   max_size=3)))
def test_schreier_sims_matches_closure(gens):
    n = len(gens[0])
    G = PermGroup(gens, n)
    elems = closure(gens, n)
    assert G.order() == len(elems)
    assert set(G.elements()) == elems
    rng = random.Random(0)
    for _ in range(20):
        x = tuple(rng.sample(range(n), n))
        assert G.contains(x) == (x in elems)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_class_sizes_sum_to_order(n):
    G = symmetric_group(n)
    cd = conjugacy_classes(G)
    assert sum(c.size for c in cd.classes) == G.order()
    # classes of S_n are the cycle types
    assert len(cd.classes) == len({cycle_type(p) for p in itertools.permutations(range(n))})
    for c in cd.classes:
        assert cd.class_of(c.representative) is c
        assert c.element_order == math.lcm(*c.cycle_type)


def test_block_system_and_classification():
    # the dihedral group of the square preserves {0,2},{1,3}
    r = Permutation.from_cycles([[0, 1, 2, 3]], 4)
    f = Permutation.from_cycles([[1, 3]], 4)
    blocks = block_system([r, f], 4)
    assert blocks == [0, 2]
    assert block_system(list(symmetric_group(5).generators), 5) is None
    assert classify_subgroup([r, f], 4).kind == "Imprimitive"
    assert classify_subgroup(list(symmetric_group(6).generators), 6).kind == "Symmetric"
    assert classify_subgroup(list(alternating_group(7).generators), 7).kind == "Alternating"
    assert classify_subgroup([Permutation.from_cycles([[0, 1]], 3)], 3).kind == "Intransitive"
