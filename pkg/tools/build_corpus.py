"""Regenerate the Belyi-map fixture corpus under src/hurwitz_belyi/data/corpus.

Every entry is a printed rational equation, typed in as a sympy expression.
Pencil entries give f(j, x) = P0(x) + j P1(x); the map is then j = -P0/P1.
Map entries give the rational function of x directly.  Expected triples and
bad-prime bounds are copied from the tables next to each equation (the two
clan members take theirs from the closed-form discriminant), so they do not
depend on the resultant code being tested.

    python tools/build_corpus.py [--out DIR] [--only LABEL ...]
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

import sympy as sp

OUT = Path(__file__).resolve().parents[1] / "src" / "hurwitz_belyi" / "data" / "corpus"

x, j = sp.symbols("x j")

P23 = [2, 3]
P235 = [2, 3, 5]
P237 = [2, 3, 7]

# label: (kind, expression, (beta0, beta1, betaInf), bad-prime bound, extras)
ENTRIES: dict[str, tuple] = {
    "U89": ("map",
            "(x+2)**9*x**18*(x**2-2)**18*(x-2) / ((x+1)**16*(x**3-3*x+1)**16)",
            ("18^3 9 1", "8 1^56", "16^4"), P23,
            {"badExact": True, "constant": 2**256 * 3**126, "a": 59, "b": 7}),
    "deg7x": ("map",
              "-x**3*(x**2+2*x-5)**2 / (4*(2*x-1)*(3*x-4))",
              ("3 2^2", "4 2 1", "5 1^2"), P235, {}),
    "f_12aa": ("pencil",
               "x**5*(9*x**2-21*x+16)**3*(x+3) - 2**8*j*(x-1)**3*(9*x**2-12*x+8)**2",
               ("5 3^2 1", "2^6", "5 3 2^2"), P235, {}),
    "f_12ab": ("pencil",
               "5**5*(x-1)**4*x**6*(5*x+4)**2 - 2**4*3**3*j*(2*x+1)**3*(5*x**2-6*x+2)**2",
               ("6 4 2", "2^5 1^2", "5 3 2^2"), P235, {}),
    "f_3_1": ("pencil", "(x-4)*x**3 + 4*j*(2*x+1)",
              ("3 1", "2^2", "3 1"), P23, {"constant": -2**12 * 3**3, "a": 2, "b": 2}),
    "f_4_3_2": ("pencil", "(4*x**3-3*x+2)**3 - 27*j*x**3*(3*x-2)**2",
                ("3^3", "2^4 1", "4 3 2"), P23, {"constant": 2**54 * 3**39, "a": 6, "b": 4}),
    "f_5_3_1": ("pencil", "5**2*(5*x**3-45*x**2+39*x+25)**3 - 2**14*3**3*j*x**3*(3*x-25)",
                ("3^3", "2^4 1", "5 3 1"), P235, {}),
    "f_5_3_2": ("pencil", "(9*x**3+3*x**2-53*x+81)**3*(x+9) - 2**14*3**2*j*x**3*(3*x-5)**2",
                ("3^3 1", "2^5", "5 3 2"), P235, {}),
    "f_5_4_3": ("pencil", "(4*x**4-24*x**3+24*x**2-48*x+27)**3 - 2**2*3**3*j*x**3*(3*x-4)**5",
                ("3^4", "2^5 1^2", "5 4 3"), P235, {}),
    "f_5_4_1": ("pencil", "(16*x**3-87*x**2+48*x+16)**3*(16*x+1) - 2**2*3**12*j*x**4*(x-5)",
                ("3^3 1", "2^5", "5 4 1"), P235, {}),
    "f_5_4_3_3": ("pencil",
                  "4*(256*x**5+640*x**4-440*x**3-3325*x**2-6400*x-4096)**3"
                  " - 3**12*j*x**4*(32*x**2+95*x+80)**3",
                  ("3^5", "2^7 1", "5 4 3^2"), P235, {}),
    "f_5_1": ("pencil", "(x**2-5)**3 - 3**3*j*(2*x-5)",
              ("3^2", "2^2 1^2", "5 1"), P235, {}),
    "f_5_5_4_2": ("pencil",
                  "2**7*x*(18*x**5-144*x**4+336*x**3-224*x**2+801*x-162)**3"
                  " - j*(2*x-9)**2*(36*x**2-52*x-9)**5",
                  ("3^5 1", "2^8", "5^2 4 2"), P235, {}),
    "f_10_8_8_6_5_4_4_3": ("pencil",
                           "(184528125*x**16-984150000*x**15+2263545000*x**14-2768742000*x**13"
                           "+1616849100*x**12+181316880*x**11-1023304104*x**10+721510416*x**9"
                           "-166620402*x**8-72763728*x**7+59318552*x**6-4952016*x**5-12051828*x**4"
                           "+7406640*x**3-2117016*x**2+314928*x-19683)**3"
                           " + 2**20*3**8*j*(9*x**2-10*x+3)**8*x**6*(5*x-3)**5*(3*x**2-1)**4*(3*x-1)**3",
                           ("3^16", "2^22 1^4", "10 8^2 6 5 4^2 3"), P235, {}),
    "f_10_6_5_4_4_3": ("pencil",
                       "(x**10-38*x**9+591*x**8-4920*x**7+24050*x**6-71236*x**5+125638*x**4"
                       "-124536*x**3+40365*x**2+85050*x-91125)**3*(x**2-14*x-5)"
                       " + 2**20*3**3*j*x**6*(x-5)**5*(x**2-4*x+5)**4*(x-9)**3",
                       ("3^10 1^2", "2^16", "10 6 5 4^2 3"), P235, {}),
    "f_5_4": ("pencil", "5**2*(10*x**3+15*x**2+48*x-100)**3 + 3**15*j*x**4",
              ("3^3", "2^3 1^3", "5 4"), P235, {}),
    "f_9_6_5_4": ("pencil",
                  "(9*x**8-72*x**7+180*x**6-104*x**5-26*x**4-568*x**3+1620*x**2-1944*x+729)**3"
                  " + 2**16*j*(x-3)**4*x**6*(2*x-3)**5",
                  ("3^8", "2^10 1^4", "9 6 5 4"), P235, {}),
    "f_5_5_5_5_4_3": ("pencil",
                      "(1024*x**9-13824*x**8+81360*x**7-272928*x**6+585144*x**5-879336*x**4"
                      "+1012365*x**3-896832*x**2+516096*x-131072)**3"
                      " - 54*j*(72*x**4-508*x**3+1350*x**2-1629*x+768)**5*x**3",
                      ("3^9", "2^13 1", "5^4 4 3"), P235, {}),
    "f_10_9_5_2_2": ("pencil",
                     "(3125*x**9-9375*x**8+7500*x**7-6500*x**6+9150*x**5-4410*x**4-2484*x**3"
                     "-2916*x**2-2187*x+6561)**3*(x-3)"
                     " + 2**22*3**3*j*x**9*(5*x-6)**5*(3*x**2+2*x+3)**2",
                     ("3^9 1", "2^13 1^2", "10 9 5 2^2"), P235, {}),
    "f_13_13_8_6_3_2_1": ("pencil",
                          "(16*x**4+40*x**3-3*x**2-116*x-8)*(4096*x**14+20480*x**13-25856*x**12"
                          "-196736*x**11+47189*x**10+680764*x**9-69384*x**8-1135104*x**7"
                          "+7638144*x**6-16337408*x**5+9620480*x**4-2785280*x**3+741376*x**2"
                          "-16384*x-32768)**3"
                          " - 2**13*3**12*j*(x-2)**3*x**6*(x+4)**2*(2*x-1)*(3*x**2+2*x-4)**13",
                          ("3^14 1^4", "2^23", "13^2 8 6 3 2 1"), [2, 3, 13],
                          {"constant": -2**2260 * 3**1371 * 13**351, "a": 28, "b": 23}),
    "f_9_9_9_8_8_4_4_2_1": ("pencil",
                            "(x**3+12*x**2+12*x-8)*(x**17-52*x**16+42136*x**15-593008*x**14"
                            "+10147846*x**13+225862160*x**12+1467000268*x**11+6342760760*x**10"
                            "+593082769*x**9-1815237116*x**8-5586407260*x**7-258348008*x**6"
                            "+8975722736*x**5-8292246656*x**4+3424464320*x**3-664160384*x**2"
                            "+44883968*x-131072)**3"
                            " - 2**4*3**9*j*x*(x**2-71*x+32)**4*(x**2+2*x-1)**8*(x**3+18*x**2-48*x-8)**9",
                            ("3^17 1^3", "2^27", "9^3 8^2 4^2 2 1"), [2, 3, 17], {}),
    "f_4_3": ("pencil", "4*(x-12)*(9*x**2-20*x-27)**3 + 3*7**7*j*x**3",
              ("3^2 1", "2^3 1", "4 3"), P237, {}),
    "f_7_4_3_3_1": ("pencil",
                    "(9*x**6-126*x**4+252*x**3-63*x**2-252*x+196)**3"
                    " + 2**6*j*(3*x-2)**4*(3*x**2-9*x+7)**3*(3*x+14)",
                    ("3^6", "2^9", "7 4 3^2 1"), P237, {}),
    "f_7_6_3_1_1": ("pencil",
                    "(9*x**6-102*x**5+295*x**4-212*x**3+39*x**2+90*x+9)**3"
                    " - 2**14*j*x**6*(2*x-3)**3*(9*x**2-66*x-7)",
                    ("3^6", "2^9", "7 6 3 1^2"), P237, {}),
    "f_9_7": ("pencil",
              "(441*x**4+1764*x**3+702*x**2-140*x+49)**3*(343*x**4+2940*x**3+6594*x**2-468*x+63)"
              " - 2**42*j*x**7",
              ("3^4 1^4", "2^8", "9 7"), P237, {}),
    "f_9_7_2": ("pencil",
                "(7**4*x**5-441*x**4-3366*x**3+2430*x**2-3**7*x+3**7)**3*(49*x**2+6*x+9)*(x+3)"
                " - 2**30*3**9*j*x**9*(x-1)**2",
                ("3^5 1^3", "2^9", "9 7 2"), P237, {}),
    "f_9_7_7_7_1_1_1": ("pencil",
                        "(16*x**11+256*x**10+1312*x**9+2208*x**8-1248*x**7-6720*x**6-1512*x**5"
                        "+5652*x**4-6147*x**3-3912*x**2+11712*x-1536)**3"
                        " + 108*j*(x-1)*(x+2)*(x+8)*(8*x**3+15*x**2-9*x-8)**7",
                        ("3^11", "2^16 1", "9 7^3 1^3"), P237, {}),
    # printed label reads 9,7^2,4,3,1^2, which sums to 32 for a degree 30 map
    "f_9_7_7_4_1_1_1": ("pencil",
                        "(11664*x**10+31104*x**9-38880*x**8-276960*x**7-458528*x**6-245952*x**5"
                        "+244440*x**4+549396*x**3+475389*x**2+225504*x+46656)**3"
                        " - 2**2*3**2*7**7*j*(8*x**2+15*x+9)**7*x**4*(x-3)*(3*x**2+6*x+4)",
                        ("3^10", "2^15", "9 7^2 4 1^3"), P237, {}),
    "f_8_7_6_3": ("pencil",
                  "4*(4*x**7+22*x**6-60*x**5-166*x**4+236*x**3+858*x**2-3626*x+2401)**3"
                  "*(2*x-1)*(2*x**2+16*x-49)"
                  " + 3**18*j*x**7*(x-2)**6*(x+4)**3",
                  ("3^7 1^3", "2^12", "8 7 6 3"), P237, {}),
    "f_12_8_8_7_3_2": ("pencil",
                       "(64*x**12-576*x**11+2400*x**10-5696*x**9+7344*x**8-3168*x**7-4080*x**6"
                       "+8640*x**5-7380*x**4-1508*x**3+8982*x**2-7644*x+2401)**3"
                       "*(4*x**4-20*x**3+78*x**2-92*x+49)"
                       " - 2**8*3**12*j*(2*x**2-4*x+3)**8*x**7*(x-2)**3*(x+1)**2",
                       ("3^12 1^4", "2^20", "12 8^2 7 3 2"), P237, {}),
    "f_30": ("pencil",
             "2**2*3**3*(7*x**2+14*x+4)**7*x**5*(2*x+1)**3*(x**2+3*x+1)**2*(2*x**2+x+2)**2"
             " + j*(7*x**2+6*x+2)**5*(5*x+2)**4*(14*x**3+39*x**2+18*x+2)**3*(x+2)",
             ("7^2 5 3 2^4", "2^14 1^2", "6 5^2 4 3^3 1"), [2, 3, 5, 7],
             {"constant": -2**450 * 3**285 * 5**95 * 7**105, "a": 22, "b": 14}),
    "f_40": ("pencil",
             "2**2*3**4*(5*x**2-12*x+3)**7*(5*x**2-15*x+12)**5*(x**2-3*x+6)**4"
             "*(4*x**2-15*x+15)**2*x*(5*x-9)"
             " + j*(x**2-3)**5*(5*x**3-45*x**2+120*x-108)**4"
             "*(400*x**6-2700*x**5+7425*x**4-10530*x**3+7830*x**2-2430*x-27)**3",
             ("7^2 5^2 4^2 2^3 1^2", "2^20", "5^2 4^3 3^6"), [2, 3, 5, 7],
             {"constant": 2**930 * 3**1254 * 5**230 * 7**105, "a": 29, "b": 20}),
    "f_15_15_15_9_9_9_5_3_3_3_3_3_3_1": ("pencil",
        "(3*x**8-6*x**7-60*x**6+202*x**5-110*x**4-74*x**3-52*x**2-10*x-1)**3"
        "*(729*x**24-10206*x**23+15552*x**22-2045790*x**21+52397442*x**20-543319218*x**19"
        "+3209261832*x**18-12210163074*x**17+31525143435*x**16-55955395164*x**15"
        "+66094935696*x**14-43882703964*x**13-2654708692*x**12+42096515820*x**11"
        "-51857004992*x**10+37353393228*x**9-17942013057*x**8+5711207034*x**7"
        "-1071984720*x**6+65222394*x**5+12734514*x**4-1277306*x**3-182088*x**2-3850*x-3)**3"
        " + 2**10*j*(3*x**3-7*x**2+11*x-1)**15*(3*x**3-9*x**2+3*x+1)**9*(x-3)**5"
        "*(x**4+8*x**3-36*x**2+17*x+1)**3*(x-1)**3*x",
        ("3^32", "2^44 1^8", "15^3 9^3 5 3^6 1"), [2, 3, 5], {}),
    "f_40a": ("pencil",
              "(x**4-30*x**3-240*x**2-450*x-225)**5*(x**4+30*x**3+240*x**2+450*x-225)**5"
              " - 2**4*3**3*5**4*j*(x**4+10*x**3+60*x**2+150*x+75)**6"
              "*(x**4+30*x**3+300*x**2+1050*x+675)**2*(x**4-60*x**3-510*x**2-1200*x-675)*x",
              ("5^8", "2^20", "6^4 3 2^4 1^5"), P235, {}),
    "f_27": ("pencil",
             "3**6*x**5*(x**2-5)**5*(x**2+5*x+10)**5*(2*x**2-5*x+5) + 5**4*j*(3*x**4+10*x**3+25)**6",
             ("5^5 1^2", "2^10 1^7", "6^4 3"), P235, {}),
    "f_9a": ("pencil", "4*(x**3+6*x**2+3*x-1)**3 + 3**6*j*x**3",
             ("3^3", "2^3 1^3", "6 3"), P23, {}),
    "f_9b": ("pencil", "4*(x**3-3*x**2+1)**3 - 27*j*x**2*(x-3)",
             ("3^3", "2^4 1", "6 2 1"), P23, {}),
    "pi_1_1_1": ("map",
                 "-(6*x**2-8*x+3)**2*(8*x**2-8*x+3)*(6*x**2-4*x+1)**2"
                 " / (2**8*x**3*(x-1)**3*(3*x**2-3*x+1)**3)",
                 ("2^5 1^2", "4^3", "3^4"), None, {}),
    "pi_7_6_4": ("map",
                 "(119*x**2-154*x+55)**11*(13*x**2-14*x+5)**4*(51*x**2-42*x+11)**10"
                 " / (2**14*x**15*(x-1)**14*(221*x**2-238*x+77)**17)",
                 ("13 11^2 10^2 4^2", "4^3 1^51", "17^2 15 14"), None, {}),
    "pi_1_m1_2": ("map",
                  "(8*x-5)**2*(8*x**2-24*x+15)**3*(8*x**2-8*x+3)"
                  " / (2**14*(x-1)**3*x**5*(4*x-3)**2)",
                  ("3^2 2 1^2", "4^2 1^2", "5 3 2"), P235, {}),
    "pi_nonhur": ("map",
                  "-(8*x-5)**2*(464*x**2-840*x+375)**3*(2528*x**2-4400*x+1875)"
                  " / (2**16*5**5*(x-1)**3*x**5*(4*x-3)**2)",
                  ("3^2 2 1^2", "4^2 1^2", "5 3 2"), P235, {}),
}

# bad-prime bounds for the two clan members come from the closed-form discriminant,
# which is a separate route from the resultant computation being checked
CLAN_PARAMS = {"pi_1_1_1": (1, 1, 1), "pi_7_6_4": (7, 6, 4)}


def coeffs(expr) -> list[int]:
    p = sp.Poly(sp.expand(expr), x)
    out = [int(c) for c in reversed(p.all_coeffs())]
    return out


def numer_denom(kind: str, text: str) -> tuple[list[int], list[int]]:
    expr = sp.sympify(text, locals={"x": x, "j": j})
    if kind == "pencil":
        poly = sp.Poly(sp.expand(expr), j)
        if poly.degree() != 1:
            raise SystemExit(f"pencil is not linear in j: {text[:40]}")
        p1 = poly.coeff_monomial(j)
        p0 = poly.coeff_monomial(1)
        return coeffs(-p0), coeffs(p1)
    num, den = sp.fraction(sp.together(expr))
    return coeffs(num), coeffs(den)


def clan_bound(params) -> list[int]:
    """Prime divisors of the closed-form clan discriminant constant."""
    from hurwitz_belyi.clan import disc_closed_form

    c = disc_closed_form(*params)[0]
    return sorted(p for p in sp.factorint(abs(c)) if p > 1)


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=OUT)
    ap.add_argument("--only", nargs="*", help="labels to rebuild")
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    for label, (kind, text, triple, bad, extra) in ENTRIES.items():
        if args.only and label not in args.only:
            continue
        num, den = numer_denom(kind, text)
        (args.out / f"{label}.json").write_text(
            json.dumps({"numerator": [str(c) for c in num], "denominator": [str(c) for c in den]}) + "\n",
            encoding="utf-8")
        if bad is None:
            bad = clan_bound(CLAN_PARAMS[label])
        exp = {"triple": list(triple), "badPrimes": bad, "badExact": bool(extra.get("badExact", False))}
        if "constant" in extra:
            exp["constant"] = str(extra["constant"])
        for k in ("a", "b"):
            if k in extra:
                exp[k] = extra[k]
        (args.out / f"{label}.expected.json").write_text(json.dumps(exp, indent=2) + "\n", encoding="utf-8")
        print(f"{label}: degree {max(len(num), len(den)) - 1}")


if __name__ == "__main__":
    main()
