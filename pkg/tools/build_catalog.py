"""Regenerate the exotic group configs under src/hurwitz_belyi/data/groups.

Each group is built from first principles (a root system or a matrix group
over a finite field acting on a point set), its order is checked, and the
generators are written in cycle notation.  Run from the repository root:

    python tools/build_catalog.py [--out DIR]
"""

from __future__ import annotations

import argparse
import itertools
from pathlib import Path

from hurwitz_belyi.group_atlas import GF, build_group
from hurwitz_belyi.perm_core import Permutation, PermGroup

OUT = Path(__file__).resolve().parents[1] / "src" / "hurwitz_belyi" / "data" / "groups"


# -- W(E6) on the 27 weights of a minuscule representation ---------------------

E6_EDGES = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]  # Bourbaki numbering


def e6_cartan() -> list[list[int]]:
    A = [[2 if i == j else 0 for j in range(6)] for i in range(6)]
    for a, b in E6_EDGES:
        A[a - 1][b - 1] = A[b - 1][a - 1] = -1
    return A


def weyl_e6() -> tuple[list[Permutation], list[tuple[int, ...]]]:
    A = e6_cartan()

    def refl(i, lam):
        c = lam[i]
        return tuple(lam[j] - c * A[i][j] for j in range(6))

    start = (1, 0, 0, 0, 0, 0)
    orbit = [start]
    seen = {start}
    for lam in orbit:
        for i in range(6):
            mu = refl(i, lam)
            if mu not in seen:
                seen.add(mu)
                orbit.append(mu)
    orbit.sort()
    idx = {w: k for k, w in enumerate(orbit)}
    gens = [Permutation([idx[refl(i, w)] for w in orbit]) for i in range(6)]
    return gens, orbit


# -- 3x3 matrices over GF(q) ------------------------------------------------------

def mat_mul(F: GF, a, b):
    m, s = F.mul_t, F.add_t
    out = []
    for i in range(3):
        row = []
        for j in range(3):
            acc = 0
            for k in range(3):
                acc = s[acc][m[a[i][k]][b[k][j]]]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def vec_mat(F: GF, v, M):
    m, s = F.mul_t, F.add_t
    out = []
    for j in range(3):
        acc = 0
        for k in range(3):
            acc = s[acc][m[v[k]][M[k][j]]]
        out.append(acc)
    return tuple(out)


def normalize(F: GF, v):
    for c in v:
        if c:
            inv = F.inv[c]
            return tuple(F.mul_t[x][inv] for x in v)
    raise ValueError("zero vector")


def proj_points(F: GF) -> list[tuple[int, int, int]]:
    pts = {normalize(F, v) for v in itertools.product(range(F.q), repeat=3) if any(v)}
    return sorted(pts)


def transpose(M):
    return tuple(tuple(M[j][i] for j in range(3)) for i in range(3))


def mat_inv(F: GF, M):
    # adjugate over det
    m, s, neg = F.mul_t, F.add_t, F.neg

    def minor(i, j):
        r = [x for x in range(3) if x != i]
        c = [y for y in range(3) if y != j]
        return s[m[M[r[0]][c[0]]][M[r[1]][c[1]]]][neg[m[M[r[0]][c[1]]][M[r[1]][c[0]]]]]

    det = 0
    for j in range(3):
        t = m[M[0][j]][minor(0, j)]
        det = s[det][t if j % 2 == 0 else neg[t]]
    dinv = F.inv[det]
    adj = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            c = minor(i, j)
            if (i + j) % 2:
                c = neg[c]
            adj[j][i] = m[c][dinv]
    return tuple(tuple(r) for r in adj)


# -- SU3(3) on the 28 isotropic points ---------------------------------------------

def su33() -> tuple[list[Permutation], Permutation]:
    F = GF(9)
    bar = F.frobenius  # x -> x^3

    def herm(u, v):
        # u J bar(v)^T with J antidiagonal
        m, s = F.mul_t, F.add_t
        return s[s[m[u[0]][bar(v[2])]][m[u[1]][bar(v[1])]]][m[u[2]][bar(v[0])]]

    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]

    def unitary(M):
        rows = [M[i] for i in range(3)]
        return all(herm(rows[i], rows[j]) == herm(basis[i], basis[j]) for i in range(3) for j in range(3))

    lower, upper = [], []
    for a, b, c in itertools.product(range(9), repeat=3):
        L = ((1, 0, 0), (a, 1, 0), (b, c, 1))
        if unitary(L) and (a, b, c) != (0, 0, 0):
            lower.append(L)
            upper.append(transpose(L))
    pts = [p for p in proj_points(F) if herm(p, p) == 0]
    assert len(pts) == 28, len(pts)
    idx = {p: i for i, p in enumerate(pts)}

    def perm(M):
        return Permutation([idx[normalize(F, vec_mat(F, p, M))] for p in pts])

    gens = sorted({perm(M) for M in lower[:3] + upper[:3]})
    frob = Permutation([idx[normalize(F, tuple(bar(x) for x in p))] for p in pts])
    return gens, frob


# -- SL3(3) on points and lines of PG(2,3) -----------------------------------------

def sl33() -> tuple[list[Permutation], Permutation]:
    F = GF(3)
    pts = proj_points(F)
    n = len(pts)
    idx = {p: i for i, p in enumerate(pts)}

    def perm(M):
        Mit = transpose(mat_inv(F, M))
        img = [idx[normalize(F, vec_mat(F, p, M))] for p in pts]
        img += [n + idx[normalize(F, vec_mat(F, l, Mit))] for l in pts]
        return Permutation(img)

    gens = []
    for i, j in itertools.permutations(range(3), 2):
        M = [[1 if r == c else 0 for c in range(3)] for r in range(3)]
        M[i][j] = 1
        gens.append(perm(tuple(tuple(r) for r in M)))
    polarity = Permutation([n + k for k in range(n)] + list(range(n)))
    return gens, polarity


# -- output ------------------------------------------------------------------------

def block(name: str, order: int, degree: int, gens, outer=(), labels: str = "atlas", note: str = "") -> str:
    G = PermGroup(gens, degree)
    got = G.order()
    if got != order:
        raise SystemExit(f"{name}: built order {got}, expected {order}")
    for o in outer:
        for g in gens:
            if not G.contains(g.conj(o)):
                raise SystemExit(f"{name}: outer element does not normalize")
    lines = [f"group {name}"]
    if note:
        lines.insert(0, f"# {note}")
    lines += [f"order {order}", f"degree {degree}", f"labels {labels}"]
    lines += [f"gen {g.cycle_string()}" for g in gens]
    lines += [f"outer {o.cycle_string()}" for o in outer]
    return "\n".join(lines) + "\n"


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=OUT)
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)

    refl, _ = weyl_e6()
    even = [refl[0] * r for r in refl[1:]]
    text = "# Weyl group of E6 on the 27 weights of its minuscule representation\n\n"
    text += block("W(E6)", 51840, 27, refl) + "\n"
    text += block("W(E6)+", 25920, 27, even, [refl[0]], note="rotation subgroup; a reflection gives the outer class")
    (args.out / "weyl_e6.grp").write_text(text, encoding="utf-8")

    gens, frob = su33()
    text = "# SU3(3) on the 28 isotropic points of the Hermitian plane over GF(9)\n\n"
    text += block("SU3(3)", 6048, 28, gens, [frob]) + "\n"
    text += block("G2(2)", 12096, 28, gens + [frob], note="SU3(3) extended by the field automorphism")
    (args.out / "su3_3.grp").write_text(text, encoding="utf-8")

    gens, pol = sl33()
    text = "# SL3(3) on the 13 points and 13 lines of PG(2,3)\n\n"
    text += block("SL3(3)", 5616, 26, gens, [pol]) + "\n"
    text += block("SL3(3).2", 11232, 26, gens + [pol], note="extended by the standard polarity")
    (args.out / "sl3_3.grp").write_text(text, encoding="utf-8")

    ag = build_group("PSL2(7)")
    gl = build_group("PGL2(7)")
    text = "# SL3(2), realised as PSL2(7) on the 8 points of the projective line over GF(7)\n\n"
    text += block("SL3(2)", 168, 8, [Permutation(g) for g in ag.group.generators], ag.outer, labels="order")
    (args.out / "sl3_2.grp").write_text(text, encoding="utf-8")
    assert gl.order == 336
    for f in sorted(args.out.glob("*.grp")):
        print(f"wrote {f}")


if __name__ == "__main__":
    main()
