"""Acceptance criteria, one check per criterion.

Each ``check_criterion_*`` function returns ``(passed, detail)``.  The pytest
tests assert on them, conftest prints one PASS/FAIL line per criterion at the
end of the session, and ``python tests/test_acceptance.py`` prints the same
lines without pytest.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

from hurwitz_belyi.belyi_verify import RationalMap, discriminant_profile, verify_against_file
from hurwitz_belyi.braid_engine import BraidWord, act_tuple, braid_triple, components, get_pencil
from hurwitz_belyi.clan import (clan_disc_check, clan_map, clan_sym, NOT_APPLICABLE, symmetric_params)
from hurwitz_belyi.class_algebra import mass
from hurwitz_belyi.cli import corpus_dir, corpus_labels
from hurwitz_belyi.group_atlas import build_extension
from hurwitz_belyi.lifting import extension_masses, lifting_invariant, serre_sign
from hurwitz_belyi.nielsen import (Canonicalizer, HurwitzParameter, WorkBoundExceeded, enumerate_fiber,
                                   star_quotient)
from hurwitz_belyi.perm_core import parse_partition, pidentity, pmul, ppow

sys.path.insert(0, str(Path(__file__).parent))
from helpers import braid_relation_failures, brute_tuple_count, fiber_components  # noqa: E402

P = parse_partition

# Table of degrees for (G,(C1,C2),(3,1)) over A5 and S5: C1 carries multiplicity 3.
# Each cell lists its components as (beta0, beta1, betaInf); degrees are the sums.
T4 = ("3 1", "2^2", "3 1")
T9 = ("3^3", "2^4 1", "5 3 1")
T10A = ("3^3 1", "2^5", "5 3 2")
T10B = ("3^3 1", "2^5", "5 4 1")
T12 = ("3^4", "2^5 1^2", "5 4 3")
T15 = ("3^5", "2^7 1", "5 4 3^2")
T32 = ("3^10 1^2", "2^16", "10 6 5 4^2 3")
T16 = ("3^5 1", "2^8", "6 5 4 1")
T36 = ("3^12", "2^18", "10 6 5 4^2 3^2 1")

TABLE_CELLS = {
    ("A5", "221", "311"): [],
    ("A5", "221", "5b"): [T10A],
    ("A5", "311", "221"): [T12],
    ("A5", "311", "5b"): [T15, T10B],
    ("A5", "5a", "221"): [T4],
    ("A5", "5a", "311"): [T9],
    ("A5", "5a", "5b"): [T4],
    ("S5", "2111", "41"): [],
    ("S5", "2111", "32"): [],
    ("S5", "41", "2111"): [T32],
    ("S5", "41", "32"): [T36, T36],
    ("S5", "32", "2111"): [T10B],
    ("S5", "32", "41"): [T16, T16],
}


def _key(tri) -> tuple:
    return tuple(tuple(P(x)) if isinstance(x, str) else tuple(x) for x in tri)


def cell_components(group: str, c1: str, c2: str):
    h = HurwitzParameter.parse(group, [c1, c2], "3,1")
    fib = star_quotient(enumerate_fiber(h))
    return components(fib, "u31")


def check_criterion_1():
    t0 = time.time()
    bad = []
    for (g, c1, c2), want in TABLE_CELLS.items():
        got = sorted(_key((c.beta0, c.beta1, c.betainf)) for c in cell_components(g, c1, c2))
        exp = sorted(_key(t) for t in want)
        if got != exp:
            bad.append(f"{g}({c1},{c2}): table {[sum(t[0]) for t in exp]} computed {[sum(t[0]) for t in got]}")
    dt = time.time() - t0
    if dt >= 60:
        bad.append(f"runtime {dt:.1f}s")
    return not bad, f"{len(TABLE_CELLS)} cells in {dt:.1f}s" + (f"; mismatches: {'; '.join(bad)}" if bad else "")


def check_criterion_2():
    t0 = time.time()
    bad = []
    cases = [
        (("A5", "311,5a", "3,1"), None, Fraction(25)),
        (("S5", "5,311,221", "2,1,1"), None, Fraction(24)),
        (("SL2(8)", "7b,7c", "3,1"), None, Fraction(97)),
        (("SL2(8)", "7a,7c", "3,1"), None, Fraction(106) + Fraction(1, 7)),
    ]
    for args, _, want in cases:
        got = mass(HurwitzParameter.parse(*args))
        if got != want:
            bad.append(f"{args}: {got} != {want}")
    # oracle: mass |G| / |Z| equals a brute-force tuple count
    oracle_cases = [("A5", ["311", "5a"], [3, 1]), ("A5", ["221", "311"], [3, 1]), ("A5", ["5a", "5b"], [1, 2]),
                    ("A5", ["221", "311", "5a"], [1, 1, 1]), ("S3", ["21", "3"], [2, 2]), ("S3", ["21"], [4]),
                    ("S3", ["3"], [3])]
    for g, cl, nu in oracle_cases:
        h = HurwitzParameter.parse(g, cl, nu)
        z = h.atlas.classes.center_order()
        brute = brute_tuple_count(h)
        if mass(h) * h.atlas.order / z != brute:
            bad.append(f"{h.describe()}: mass {mass(h)} vs brute {brute}")
    dt = time.time() - t0
    if dt >= 60:
        bad.append(f"runtime {dt:.1f}s")
    return not bad, f"{len(cases)} masses, {len(oracle_cases)} oracle counts in {dt:.1f}s" + (
        f"; {'; '.join(bad)}" if bad else "")


def check_criterion_3(samples: int = 100, seed: int = 20261016):
    bad = []
    h = HurwitzParameter.parse("A5", "311,5a", "3,1")
    ext = build_extension("SL2(5)->A5")
    fib = enumerate_fiber(h)
    labels = [lifting_invariant(t, ext) for t in fib.reps]
    split = (labels.count("+"), labels.count("-"))
    if split != (15, 10):
        bad.append(f"fiber split {split}")
    em = extension_masses(h, ext)
    if em != {"+": Fraction(15), "-": Fraction(10)}:
        bad.append(f"extension masses {em}")
    canon = Canonicalizer(h)
    rng = random.Random(seed)
    gens = [BraidWord.parse(w) for w in ("s1", "s2", "s1^-1", "s2^-1", "s3^2", "s3^-2")]
    for _ in range(samples):
        i = rng.randrange(fib.degree)
        word = gens[rng.randrange(len(gens))]
        for _ in range(rng.randrange(1, 12)):
            word = word * gens[rng.randrange(len(gens))]
        j = fib.locate(canon.form(act_tuple(word, fib.reps[i])))
        if labels[i] != labels[j]:
            bad.append(f"invariant changes along {word}")
            break
    return not bad, f"split {split[0]}/{split[1]}, masses {em.get('+')}/{em.get('-')}, {samples} braid samples" + (
        f"; {'; '.join(bad)}" if bad else "")


def _expected(label: str) -> dict:
    return json.loads((corpus_dir() / f"{label}.expected.json").read_text(encoding="utf-8"))


def check_criterion_4():
    t0 = time.time()
    labels = corpus_labels()
    bad = []
    degrees = []
    for lab in labels:
        f = RationalMap.load(corpus_dir() / f"{lab}.json")
        degrees.append(f.degree)
        res = verify_against_file(f, _expected(lab))
        if not res.passed:
            bad.append(f"{lab}: {res.diffs}")
    dt = time.time() - t0
    if len(labels) < 25:
        bad.append(f"only {len(labels)} fixtures")
    if min(degrees) > 4 or max(degrees) < 96:
        bad.append(f"degree range {min(degrees)}..{max(degrees)}")
    if dt >= 300:
        bad.append(f"runtime {dt:.1f}s")
    return not bad, f"{len(labels)} maps, degrees {min(degrees)}..{max(degrees)}, {dt:.1f}s" + (
        f"; {'; '.join(bad)}" if bad else "")


def clan_sweep(max_n: int = 14):
    out = []
    for n in range(4, max_n + 1):
        for d in range(1, n // 2 + 1):
            for a in range(1, n - 2 * d):
                b = n - 2 * d - a
                if b < 1 or len({a, b, d}) < 3 or math.gcd(a, math.gcd(b, d)) != 1:
                    continue
                out.append((a, b, d))
    return out


def check_criterion_5(max_n: int = 14):
    t0 = time.time()
    bad = []
    u = discriminant_profile(RationalMap.load(corpus_dir() / "U89.json"))
    if (u.sign, u.c, u.a, u.b) != (1, 2 ** 256 * 3 ** 126, 59, 7):
        bad.append(f"U89 profile {u.sign}*{u.c} v^{u.a} (v-1)^{u.b}")
    displayed = {
        "f_30": (-1, 2 ** 450 * 3 ** 285 * 5 ** 95 * 7 ** 105, 22, 14),
        "f_40": (1, 2 ** 930 * 3 ** 1254 * 5 ** 230 * 7 ** 105, 29, 20),
    }
    for lab, want in displayed.items():
        r = discriminant_profile(RationalMap.load(corpus_dir() / f"{lab}.json"))
        if (r.sign, r.c, r.a, r.b) != want:
            bad.append(f"{lab} profile differs")
    triples = clan_sweep(max_n)
    for t in triples:
        res = clan_disc_check(*t)
        if res == NOT_APPLICABLE or not res.passed:
            bad.append(f"clan {t}")
    dt = time.time() - t0
    if dt >= 300:
        bad.append(f"runtime {dt:.1f}s")
    return not bad, f"U89, f_30, f_40 and {len(triples)} clan triples with n <= {max_n} in {dt:.1f}s" + (
        f"; {'; '.join(bad)}" if bad else "")


def clan_identity_failures(bound: int = 6) -> list[str]:
    bad = []
    rng = range(-bound, bound + 1)
    for a, b, d in itertools.product(rng, rng, rng):
        if a * b * d * (a + b + 2 * d) == 0:
            continue
        f = clan_map(a, b, d)
        if f.compose_right([1, -1], [1]) != clan_map(b, a, d):
            bad.append(f"sym1 {a,b,d}")
        if clan_map(-a, -b, -d) != f.inverse():
            bad.append(f"negation {a,b,d}")
        u, v, w = symmetric_params(a, b, d)
        if clan_sym(u, v, w) != f:
            bad.append(f"symmetric coordinates {a,b,d}")
        if clan_sym(u, v, w).compose_right([1], [0, 1]) != clan_sym(w, v, u):
            bad.append(f"sym2 {a,b,d}")
        g = math.gcd(a, math.gcd(b, d))
        if g > 1 and clan_map(a // g, b // g, d // g).power(g) != f:
            bad.append(f"homogeneity {a,b,d}")
    return bad


def check_criterion_6():
    bad = []
    for lab, params in (("pi_1_1_1", (1, 1, 1)), ("pi_7_6_4", (7, 6, 4)), ("pi_1_m1_2", (1, -1, 2))):
        if clan_map(*params) != RationalMap.load(corpus_dir() / f"{lab}.json"):
            bad.append(f"{lab} differs from clan_map{params}")
    bad += clan_identity_failures(6)
    return not bad, "printed clan maps and identities for |a|,|b|,|d| <= 6" + (
        f"; {len(bad)} failures: {'; '.join(bad[:5])}" if bad else "")


# The A6 target as stated in the criteria lists beta0 = 3^36, which sums to 108
# rather than 96; the printed table row has 3^32.  The stated value is checked.
A6_TARGET = (P("3^36"), P("2^44 1^8"), P("15^3 9^3 5 3^6 1"))
A6_TABLE = (P("3^32"), P("2^44 1^8"), P("15^3 9^3 5 3^6 1"))


def larger_targets() -> dict[str, tuple[bool, str]]:
    out = {}
    t0 = time.time()
    comps = fiber_components("A7", "22111,511,322", "2,1,1", "u211", star=True)
    got = sorted((c.size, c.classification.kind) for c in comps)
    out["A7 u211"] = (got == [(30, "Alternating"), (40, "Symmetric")], f"{got} in {time.time() - t0:.1f}s")
    t0 = time.time()
    comps = fiber_components("A7", "22111,7a", "3,1", "u31", star=True)
    tris = {_key((c.beta0, c.beta1, c.betainf)) for c in comps}
    ok = sorted(c.size for c in comps) == [21, 21] and len(tris) == 1
    out["A7 u31"] = (ok, f"{[c.size for c in comps]}, {len(tris)} distinct triple(s) in {time.time() - t0:.1f}s")
    t0 = time.time()
    comps = fiber_components("A6", "3111", "5", "u41", star=True)
    tri = [_key((c.beta0, c.beta1, c.betainf)) for c in comps]
    out["A6 u41 (stated 3^36)"] = (tri == [A6_TARGET], f"computed beta0 {comps[0].beta0[:1]}^{len(comps[0].beta0)}")
    out["A6 u41 (table 3^32)"] = (tri == [A6_TABLE], f"degree {sum(c.size for c in comps)} in {time.time() - t0:.1f}s")
    return out


def check_criterion_7():
    res = larger_targets()
    return all(ok for ok, _ in res.values()), "; ".join(f"{k}: {'ok' if ok else 'FAIL'} ({d})"
                                                        for k, (ok, d) in res.items())


SERRE_CASES = [
    ("A5", "311", "4", False),
    ("A6", "3111", "5", False),
    ("A5", "5a", "5", True),
]
EXTENSIONS = {"A5": "SL2(5)->A5", "A6": "SL2(9)->A6"}


def check_criterion_8():
    bad = []
    lines = []
    for g, c, n, formal in SERRE_CASES:
        h = HurwitzParameter.parse(g, c, n)
        sign = serre_sign(h, formal=formal)
        ext = build_extension(EXTENSIONS[g])
        fib = enumerate_fiber(h)
        present = {lifting_invariant(t, ext) for t in fib.reps}
        lines.append(f"{h.describe()} serre {sign} fibers {''.join(sorted(present))}")
        if present != {sign}:
            bad.append(h.describe())
    return not bad, "; ".join(lines)


# parameters exercised by the property suite
PROPERTY_PARAMS = [
    ("A5", "311,5a", "3,1", "u31"),
    ("A5", "221,5b", "3,1", "u31"),
    ("S5", "41,32", "3,1", "u31"),
    ("S5", "2111,5", "4,1", "u41"),
    ("A5", "311", "4", "u31"),
    ("S6", "33,21111,3111,411", "1,1,1,1", "u1111"),
    ("S5", "5,311,221", "2,1,1", "u211"),
    ("SL2(8)", "7a,7c", "3,1", "u31"),
]


def property_failures() -> list[str]:
    bad = []
    for g, cl, nu, pen in PROPERTY_PARAMS:
        h = HurwitzParameter.parse(g, cl, nu)
        fib = enumerate_fiber(h)
        tag = h.describe()
        if fib.orbit_weight_sum() != fib.tuple_count:
            bad.append(f"{tag}: completeness")
        bad += [f"{tag}: {x}" for x in braid_relation_failures(fib)]
        pencil = get_pencil(pen)
        if fib.degree == 0:
            continue
        tri = braid_triple(fib, pencil)
        ident = pidentity(fib.degree)
        if pmul(pmul(tri.b0, tri.b1), tri.binf) != ident:
            bad.append(f"{tag}: b0 b1 binf")
        if pencil.order0 and ppow(tri.b0, pencil.order0) != ident:
            bad.append(f"{tag}: order of b0")
        if pencil.order1 and ppow(tri.b1, pencil.order1) != ident:
            bad.append(f"{tag}: order of b1")
        for c in components(fib, pencil, classify=False):
            if c.genus < 0:
                bad.append(f"{tag}: negative genus")
    return bad


def check_criterion_9():
    bad = property_failures()
    return not bad, f"{len(PROPERTY_PARAMS)} parameters" + (f"; {'; '.join(bad)}" if bad else "")


def check_rejections():
    bad = []
    for g, cl, nu in (("W(E6)", "4c,6b", "3,1"), ("S6", "6,51", "4,1")):
        h = HurwitzParameter.parse(g, cl, nu)
        t0 = time.time()
        try:
            enumerate_fiber(h)
            bad.append(f"{h.describe()} not rejected")
        except WorkBoundExceeded:
            if time.time() - t0 > 30:
                bad.append(f"{h.describe()} rejected slowly")
    return not bad, "W(E6) (4c,6b),(3,1) and S6 (6,51),(4,1) refused by work bounds" + (
        f"; {'; '.join(bad)}" if bad else "")


CRITERIA = {
    "1": check_criterion_1,
    "2": check_criterion_2,
    "3": check_criterion_3,
    "4": check_criterion_4,
    "5": check_criterion_5,
    "6": check_criterion_6,
    "7": check_criterion_7,
    "8": check_criterion_8,
    "9": check_criterion_9,
    "rejections": check_rejections,
}


@pytest.fixture
def run(record_property):
    def _run(name: str):
        ok, detail = CRITERIA[name]()
        record_property("criterion", name)
        record_property("detail", detail)
        assert ok, detail
    return _run


def test_criterion_1_table_cells(run):
    run("1")


def test_criterion_2_masses(run):
    run("2")


def test_criterion_3_spin_separation(run):
    run("3")


def test_criterion_4_belyi_corpus(run):
    run("4")


@pytest.mark.slow
def test_criterion_5_discriminants(run):
    run("5")


def test_criterion_6_clan_identities(run):
    run("6")


def test_criterion_7_larger_targets(run):
    run("7")


def test_criterion_8_serre(run):
    run("8")


def test_criterion_9_properties(run):
    run("9")


def test_out_of_scale_claims_rejected(run):
    run("rejections")


if __name__ == "__main__":
    failed = 0
    for name, fn in CRITERIA.items():
        ok, detail = fn()
        failed += not ok
        print(f"criterion {name}: {'PASS' if ok else 'FAIL'} - {detail}", flush=True)
    sys.exit(1 if failed else 0)
