from __future__ import annotations

import math

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hurwitz_belyi.belyi_verify import RationalMap, is_belyi, ramification_partitions
from hurwitz_belyi.clan import (NOT_APPLICABLE, ClanError, check_delta, clan_degree, clan_disc_check, clan_map,
                                clan_S, clan_sym, clan_V, cubic_discriminant, delta_cubic, delta_cubic_printed,
                                delta_discriminant_formula, disc_closed_form, nominal_degree, symmetric_params,
                                triple_chamber)
from hurwitz_belyi.cli import corpus_dir

X = sympy.Symbol("x")


def printed(label):
    return RationalMap.load(corpus_dir() / f"{label}.json")


@pytest.mark.parametrize("label,params", [("pi_1_1_1", (1, 1, 1)), ("pi_7_6_4", (7, 6, 4)),
                                          ("pi_1_m1_2", (1, -1, 2))])
def test_printed_maps(label, params):
    assert clan_map(*params) == printed(label)


def test_homogeneity_example():
    assert clan_map(2, 2, 2) == clan_map(1, 1, 1).power(2)


@pytest.mark.parametrize("params,deg", [((7, 6, 4), 63), ((1, 1, 1), 12), ((3, 2, 1), 21), ((5, 3, 1), 30)])
def test_degrees(params, deg):
    r = clan_degree(*params)
    assert r.degree == deg
    assert nominal_degree(*params) >= r.degree


small = st.integers(-6, 6).filter(lambda k: k != 0)


@settings(max_examples=200, deadline=None)
@given(small, small, small)
def test_identities(a, b, d):
    if a + b + 2 * d == 0:
        with pytest.raises(ClanError):
            clan_map(a, b, d)
        return
    f = clan_map(a, b, d)
    assert f.compose_right([1, -1], [1]) == clan_map(b, a, d)
    assert clan_map(-a, -b, -d) == f.inverse()
    u, v, w = symmetric_params(a, b, d)
    assert clan_sym(u, v, w) == f
    assert clan_sym(u, v, w).compose_right([1], [0, 1]) == clan_sym(w, v, u)
    for e in (2, 3):
        assert clan_map(e * a, e * b, e * d, max_n=None) == f.power(e)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 6))
def test_chamber_triples(a, b, d):
    f = clan_map(a, b, d)
    assert is_belyi(f).is_belyi
    if len({a, b, d}) == 3:
        assert ramification_partitions(f).triple() == triple_chamber(a, b, d)


def test_degree_off_walls_is_nominal():
    for a in range(1, 5):
        for b in range(1, 5):
            for d in range(1, 4):
                if len({a, b, d}) == 3:
                    assert clan_degree(a, b, d).degree == 3 * (a + b + 2 * d)


@pytest.mark.parametrize("params", [(3, 2, 1), (5, 3, 1), (1, 2, 3), (4, 1, 2)])
def test_disc_check(params):
    res = clan_disc_check(*params)
    assert res != NOT_APPLICABLE and res.passed, res


def test_disc_check_hypotheses():
    assert clan_disc_check(1, 1, 1) == NOT_APPLICABLE
    assert clan_disc_check(4, 2, 6) == NOT_APPLICABLE
    assert clan_disc_check(-1, 2, 3) == NOT_APPLICABLE


def test_disc_closed_form_exponents():
    c, ea, eb = disc_closed_form(3, 2, 1)
    assert (ea, eb) == (3 * 7 - 7, 9)
    assert c != 0


def test_quotient_maps():
    S = clan_S(1, 1)
    assert S.degree == 4 and is_belyi(S).is_belyi
    V = clan_V(1, 2)
    assert is_belyi(V).is_belyi
    lam1 = ramification_partitions(V).lambda1
    n = 2 * 1 + 2 * 2
    assert sorted(lam1, reverse=True) == [4, 2] + [1] * (int(1.5 * n) - 6)
    with pytest.raises(ClanError):
        clan_V(0, 2)
    with pytest.raises(ClanError):
        clan_S(3, -1)


def test_delta_examples():
    for uvw in [(1, 1, 1), (4, 3, 2), (-3, 2, 5)]:
        chk = check_delta(*uvw)
        assert chk.ok and chk.log_derivative_ok
    # the displayed sign of the constant term does not satisfy the log-derivative identity
    d = delta_cubic_printed(4, 3, 2)
    assert d != delta_cubic(4, 3, 2)


def test_delta_discriminant_symbolic():
    u, v, w, x = sympy.symbols("u v w x")
    d = u + v + w
    delta = (u * (u - d) * (u + d) + 3 * u * (u - d) * (w - d) * x + 3 * w * (u - d) * (w - d) * x ** 2
             + w * (w - d) * (w + d) * x ** 3)
    disc = sympy.discriminant(delta, x)
    want = 4 * 27 * u * v * w * (d - u) ** 2 * (d - v) ** 2 * (d - w) ** 2 * d ** 3
    assert sympy.expand(disc - want) == 0


def test_delta_wall():
    # u = d forces w = -v; 0 is then a triple root of Delta
    chk = check_delta(3, 2, -2)
    assert chk.wall and chk.delta[:3] == [0, 0, 0]


@settings(max_examples=100, deadline=None)
@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
def test_cubic_discriminant_formula(u, v, w):
    assert cubic_discriminant(delta_cubic(u, v, w)) == delta_discriminant_formula(u, v, w)


def test_parameter_cap():
    with pytest.raises(ClanError):
        clan_map(40, 30, 20)
    with pytest.raises(ClanError):
        clan_map(0, 1, 1)
