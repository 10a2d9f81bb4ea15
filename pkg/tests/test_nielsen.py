from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from hurwitz_belyi.group_atlas import out_group_reps
from hurwitz_belyi.nielsen import (Canonicalizer, HurwitzParameter, NielsenError, WorkBoundExceeded,
                                   enumerate_fiber, is_free, random_conjugate, star_quotient)
from hurwitz_belyi.perm_core import PermGroup, pconj, pidentity, pinv, pmul


def brute_orbits(h: HurwitzParameter):
    """(generating orbit count, all orbit count) by listing every tuple."""
    G = h.atlas.group
    elems = G.elements()
    pos = h.position_classes()
    n = G.degree
    tuples = []
    for t in itertools.product(*[list(c.conjugators) for c in pos[:-1]]):
        acc = pidentity(n)
        for g in t:
            acc = pmul(acc, g)
        last = pinv(acc)
        if last in pos[-1].conjugators:
            tuples.append(tuple(t) + (last,))
    seen = set()
    gen = total = 0
    for t in tuples:
        if t in seen:
            continue
        orbit = {tuple(pconj(g, c) for g in t) for c in elems}
        seen |= orbit
        total += 1
        if PermGroup(list(t), n).order() == (h.target_order or h.atlas.order):
            gen += 1
    return gen, total, len(tuples)


SMALL = [
    ("A5", "311,5a", "3,1"),
    ("A5", "221,311", "3,1"),
    ("A5", "5a,5b", "1,2"),
    ("A5", "221,5a", "2,1"),
    ("S4", "211,31", "2,2"),
    ("S3", "21", "4"),
    ("PSL2(7)", "2a,3a,7a", "1,1,1"),
]


@pytest.mark.parametrize("args", SMALL)
def test_fiber_matches_brute_force(args):
    h = HurwitzParameter.parse(*args)
    fib = enumerate_fiber(h)
    gen, total, count = brute_orbits(h)
    assert fib.degree == gen
    assert fib.degree + len(fib.degenerate) == total
    assert fib.tuple_count == count
    assert fib.orbit_weight_sum() == count


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_canonical_form_is_conjugation_invariant(seed):
    h = HurwitzParameter.parse("A5", "311,5a", "3,1")
    fib = enumerate_fiber(h)
    canon = Canonicalizer(h)
    rng = random.Random(seed)
    t = fib.reps[rng.randrange(fib.degree)]
    x = h.atlas.group.random_element(rng)
    assert canon.form(random_conjugate(t, x)) == canon.form(t) == t


def test_star_quotient_free_action():
    h = HurwitzParameter.parse("A5", "221,311", "3,1")
    plain = enumerate_fiber(h)
    star = star_quotient(plain)
    assert (plain.degree, star.degree) == (18, 9)
    assert is_free(plain, star)


def test_star_quotient_rejects_class_moving_outer():
    h = HurwitzParameter.parse("A5", "311,5a", "3,1")
    fib = enumerate_fiber(h)
    (o,) = [o for o in out_group_reps(h.atlas) if not h.atlas.group.contains(o)]
    with pytest.raises(NielsenError):
        star_quotient(fib, [o])
    # with the catalog default no outer element fixes 5a, so nothing is fused
    assert star_quotient(fib).degree == fib.degree == 25


def test_target_order_models_subgroup_problem():
    full = enumerate_fiber(HurwitzParameter.parse("S5", "5,311,221", "2,1,1"))
    sub = enumerate_fiber(HurwitzParameter.parse("S5", "5,311,221", "2,1,1", target_order=60))
    assert full.degree == 0
    assert sub.degree == 24


def test_degenerate_masses():
    h = HurwitzParameter.parse("SL2(8)", "7a,7c", "3,1")
    fib = enumerate_fiber(h)
    assert fib.degree == 88
    assert sum(fib.degenerate_masses().values()) + fib.degree == fib.mass()


def test_work_bound_rejects_before_search():
    h = HurwitzParameter.parse("A7", "22111,7a", "3,1")
    with pytest.raises(WorkBoundExceeded):
        enumerate_fiber(h, work_bound=1000)
    with pytest.raises(WorkBoundExceeded):
        enumerate_fiber(h, fiber_bound=5)


def test_parameter_validation():
    with pytest.raises(NielsenError):
        HurwitzParameter.parse("A5", "311,5a", "3")
    with pytest.raises(NielsenError):
        HurwitzParameter.parse("A5", "311,311", "2,1")
    with pytest.raises(NielsenError):
        HurwitzParameter.parse("A5", "311", "2")
    with pytest.raises(NielsenError):
        HurwitzParameter.parse("A5", "311,5a", "3,0")
