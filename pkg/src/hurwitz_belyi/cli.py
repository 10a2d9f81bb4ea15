"""Command line interface: ``hurwitz-belyi <command> ...``.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 unknown
group or class, 4 work bound exceeded, 5 fiber or braid error, 6 lifting
error, 7 map or polynomial error, 8 clan parameter error, 9 file error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Sequence

from . import __version__
from .belyi_verify import (BelyiError, RationalMap, discriminant_profile, is_belyi,
                           ramification_partitions, verify_against_file)
from .braid_engine import BraidError, components, get_pencil, report
from .class_algebra import ClassAlgebraError, format_mass, mass
from .clan import (ClanError, NOT_APPLICABLE, check_delta, clan_degree, clan_disc_check, clan_map,
                   clan_S, clan_sym, clan_V)
from .group_atlas import CATALOG_ENV, AtlasError, InertClass, build_extension, build_group, clear_cache
from .lifting import LiftingError, extension_masses
from .nielsen import (DEFAULT_FIBER_BOUND, DEFAULT_WORK_BOUND, HurwitzParameter, NielsenError, WorkBoundExceeded, enumerate_fiber,
                      star_quotient)
from .perm_core import OrderBoundExceeded, PermError, partition_str

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_GROUP = 3
EXIT_WORK = 4
EXIT_FIBER = 5
EXIT_LIFT = 6
EXIT_MAP = 7
EXIT_CLAN = 8
EXIT_IO = 9


@dataclass
class RunConfig:
    catalog: str | None
    work_bound: int
    fiber_bound: int
    fmt: str
    seed: int  # only feeds randomized internals whose results are verified


def _config(args) -> RunConfig:
    return RunConfig(args.catalog, args.work_bound, args.fiber_bound, args.format, args.seed)


def _emit(data, fmt: str, rows: list[list[str]] | None = None) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(data, indent=2) + "\n")
    else:
        for r in rows or []:
            sys.stdout.write("\t".join(str(x) for x in r) + "\n")


def corpus_dir() -> Path:
    return Path(str(resources.files("hurwitz_belyi") / "data" / "corpus"))


def corpus_labels() -> list[str]:
    d = corpus_dir()
    return sorted(p.name[:-5] for p in d.glob("*.json") if not p.name.endswith(".expected.json"))


def _load_map(ref: str) -> tuple[str, RationalMap, dict | None]:
    """A path to a map file, or a corpus label such as U89."""
    p = Path(ref)
    if not p.exists():
        cand = corpus_dir() / f"{ref}.json"
        if not cand.exists():
            raise FileNotFoundError(f"no map file or corpus entry named {ref!r}")
        p = cand
    f = RationalMap.load(p)
    side = p.with_name(p.name[:-5] + ".expected.json") if p.name.endswith(".json") else None
    expected = json.loads(side.read_text(encoding="utf-8")) if side and side.exists() else None
    return p.name[:-5] if p.name.endswith(".json") else p.name, f, expected


# -- commands ------------------------------------------------------------------

def cmd_group_info(args) -> int:
    ag = build_group(args.name)
    cd = ag.classes
    classes = []
    for c in cd.classes:
        classes.append({
            "label": c.label,
            "size": c.size,
            "elementOrder": c.element_order,
            "cycleType": partition_str(c.cycle_type),
            "powers": {str(e): lab for e, lab in sorted(c.power_links.items())},
        })
    data = {
        "group": ag.name,
        "order": ag.order,
        "degree": ag.group.degree,
        "centerOrder": cd.center_order(),
        "outer": len(ag.outer),
        "classes": classes,
    }
    rows = [["group", ag.name], ["order", ag.order], ["degree", ag.group.degree],
            ["class", "size", "elementOrder", "cycleType", "powers"]]
    for c in classes:
        pw = ",".join(f"{e}:{lab}" for e, lab in c["powers"].items()) or "-"
        rows.append([c["label"], c["size"], c["elementOrder"], c["cycleType"], pw])
    _emit(data, args.format, rows)
    return EXIT_OK


def _parameter(args) -> HurwitzParameter:
    return HurwitzParameter.parse(args.group, args.classes, args.nu, args.generated_order)


def cmd_braid(args) -> int:
    h = _parameter(args)
    pencil = get_pencil(args.pencil)
    fib = enumerate_fiber(h, work_bound=args.work_bound, fiber_bound=args.fiber_bound)
    if args.star:
        fib = star_quotient(fib)
    ext = build_extension(args.lift) if args.lift else None
    comps = components(fib, pencil, ext=ext)
    data = report(fib, pencil, comps, star=args.star)
    rows = [["size", "beta0", "beta1", "betaInf", "genus", "classification", "lifting"]]
    for c in data["components"]:
        rows.append([c["size"], c["beta0"], c["beta1"], c["betaInf"], c["genus"], c["classification"],
                     c["lifting"] if c["lifting"] is not None else "-"])
    _emit(data, args.format, rows)
    return EXIT_OK


def cmd_mass(args) -> int:
    h = _parameter(args)
    m = mass(h)
    data = {"parameter": h.describe(), "mass": format_mass(m)}
    rows = [["parameter", h.describe()], ["mass", format_mass(m)]]
    if args.lift:
        ext = build_extension(args.lift)
        em = extension_masses(h, ext)
        data["extension"] = ext.name
        data["extensionMasses"] = {k: format_mass(v) for k, v in sorted(em.items())}
        for k, v in sorted(em.items()):
            rows.append([f"mass[{k}]", format_mass(v)])
    if args.fiber:
        fib = enumerate_fiber(h, work_bound=args.work_bound, fiber_bound=args.fiber_bound)
        deg = {str(k): format_mass(v) for k, v in fib.degenerate_masses().items()}
        data["fiberDegree"] = fib.degree
        data["degenerateMasses"] = deg
        rows.append(["fiberDegree", fib.degree])
        for k, v in deg.items():
            rows.append([f"degenerate[{k}]", v])
    _emit(data, args.format, rows)
    return EXIT_OK


def _verify_one(ref: str, expected_path: str | None) -> tuple[dict, bool]:
    label, f, expected = _load_map(ref)
    if expected_path:
        expected = json.loads(Path(expected_path).read_text(encoding="utf-8"))
    if expected is not None:
        res = verify_against_file(f, expected)
        out = {"map": label, **res.to_json()}
        return out, res.passed
    cert = is_belyi(f)
    ram = ramification_partitions(f)
    disc = discriminant_profile(f)
    ok = cert.is_belyi and disc.ok
    out = {"map": label, "passed": ok, "diffs": [] if ok else [cert.reason or "discriminant check failed"],
           "ramification": ram.to_json(), "discriminant": disc.to_json(), "isBelyi": cert.is_belyi}
    return out, ok


def cmd_verify(args) -> int:
    refs = corpus_labels() if args.corpus else [args.map]
    results = []
    all_ok = True
    for ref in refs:
        out, ok = _verify_one(ref, None if args.corpus else args.expected)
        results.append(out)
        all_ok = all_ok and ok
    data = results[0] if len(results) == 1 and not args.corpus else {"passed": all_ok, "maps": results}
    rows = [["map", "passed", "degree", "lambda0", "lambda1", "lambdaInf", "discConstant", "a", "b", "badPrimes"]]
    for r in results:
        ram, disc = r["ramification"], r["discriminant"]
        rows.append([r["map"], "pass" if r["passed"] else "FAIL", ram["degree"], ram["lambda0"], ram["lambda1"],
                     ram["lambdaInf"], disc["constant"], disc["a"], disc["b"],
                     ",".join(map(str, disc["badPrimes"])) or "-"])
    _emit(data, args.format, rows)
    return EXIT_OK if all_ok else EXIT_FAILED


def cmd_clan(args) -> int:
    p = args.params
    if args.check_disc:
        res = clan_disc_check(*p)
        if res == NOT_APPLICABLE:
            data = {"parameters": p, "discCheck": NOT_APPLICABLE}
            _emit(data, args.format, [["discCheck", NOT_APPLICABLE]])
            return EXIT_OK
        data = {"parameters": p, "discCheck": "pass" if res.passed else "fail",
                "a": res.got[1], "b": res.got[2], "constantMatches": res.got[0] == res.expected[0]}
        _emit(data, args.format, [["discCheck", data["discCheck"]], ["a", res.got[1]], ["b", res.got[2]]])
        return EXIT_OK if res.passed else EXIT_FAILED
    if args.delta:
        chk = check_delta(*p)
        data = {"parameters": p, "delta": [str(c) for c in chk.delta], "logDerivative": chk.log_derivative_ok,
                "discriminant": chk.discriminant_ok, "wall": chk.wall}
        _emit(data, args.format, [["delta", ",".join(data["delta"])], ["ok", chk.ok]])
        return EXIT_OK if chk.ok else EXIT_FAILED
    if args.form == "sym":
        f = clan_sym(*p)
    elif args.form == "V":
        f = clan_V(*p[:2])
    elif args.form == "S":
        f = clan_S(*p[:2])
    else:
        f = clan_map(*p, max_n=args.max_n)
    data = f.to_json()
    if args.form == "abd":
        deg = clan_degree(*p)
        data = {**data, "degree": deg.degree, "nominalDegree": deg.nominal, "wall": deg.wall}
    rows = [["numerator", ",".join(data["numerator"])], ["denominator", ",".join(data["denominator"])]]
    _emit(data, args.format, rows)
    return EXIT_OK


# -- parser ----------------------------------------------------------------------

def _add_parameter_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--group", required=True, help="group name, e.g. A5, S5, SL2(8), PSL2(17)")
    p.add_argument("--classes", required=True, help="comma list of class labels, e.g. 311,5a")
    p.add_argument("--nu", required=True, help="comma list of multiplicities, e.g. 3,1")
    p.add_argument("--generated-order", type=int, default=None,
                   help="count tuples generating a subgroup of this order (default: the whole group)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hurwitz-belyi", description="Hurwitz-Belyi map invariants and exact Belyi map checks")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--catalog", default=None, help=f"group catalog directory (overrides ${CATALOG_ENV})")
    common.add_argument("--work-bound", type=int, default=DEFAULT_WORK_BOUND,
                        help="refuse fiber searches whose remaining class sizes multiply past this")
    common.add_argument("--fiber-bound", type=int, default=DEFAULT_FIBER_BOUND,
                        help="refuse fibers whose mass exceeds this")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized internals; output does not depend on it")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group-info", parents=[common], help="order, classes and power maps of a group")
    g.add_argument("name")
    g.set_defaults(func=cmd_group_info)

    b = sub.add_parser("braid", parents=[common], help="components of a Hurwitz-Belyi map")
    _add_parameter_args(b)
    b.add_argument("--pencil", required=True, help="u1111, u211, u31 or u41")
    b.add_argument("--star", action="store_true", help="quotient the fiber by outer automorphisms fixing the classes")
    b.add_argument("--lift", default=None, help="central extension for lifting invariants, e.g. SL2(5)->A5")
    b.set_defaults(func=cmd_braid)

    m = sub.add_parser("mass", parents=[common], help="mass of a Hurwitz parameter")
    _add_parameter_args(m)
    m.add_argument("--lift", default=None, help="also report masses over this central extension")
    m.add_argument("--fiber", action="store_true", help="enumerate the fiber and split off degenerate mass")
    m.set_defaults(func=cmd_mass)

    v = sub.add_parser("verify", parents=[common], help="exact checks of a rational Belyi map")
    v.add_argument("map", nargs="?", help="map JSON file or corpus label such as U89")
    v.add_argument("expected", nargs="?", help="expected-report JSON (default: the sidecar, if any)")
    v.add_argument("--corpus", action="store_true", help="verify every shipped fixture")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("clan", parents=[common], help="semicubical clan maps and identities")
    c.add_argument("params", type=int, nargs="+", help="a b d (or u v w with --form sym, a d with V or S)")
    c.add_argument("--form", choices=("abd", "sym", "V", "S"), default="abd")
    c.add_argument("--check-disc", action="store_true", help="compare the discriminant with its closed form")
    c.add_argument("--delta", action="store_true", help="check the cubic Delta identities (u v w)")
    c.add_argument("--max-n", type=int, default=60)
    c.set_defaults(func=cmd_clan)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "command", None) == "clan":
        need = 2 if args.form in ("V", "S") else 3
        if len(args.params) != need:
            ap.error(f"clan --form {args.form} takes {need} integers")
    if getattr(args, "command", None) == "verify" and not args.corpus and not args.map:
        ap.error("verify needs a map file, a corpus label or --corpus")
    cfg = _config(args)
    if cfg.catalog:
        os.environ[CATALOG_ENV] = cfg.catalog
        clear_cache()
    try:
        return args.func(args)
    except WorkBoundExceeded as e:
        code, msg = EXIT_WORK, str(e)
    except (InertClass, LiftingError) as e:
        code, msg = EXIT_LIFT, str(e)
    except (AtlasError, PermError, OrderBoundExceeded, ClassAlgebraError) as e:
        code, msg = EXIT_GROUP, str(e)
    except (NielsenError, BraidError) as e:
        code, msg = EXIT_FIBER, str(e)
    except ClanError as e:
        code, msg = EXIT_CLAN, str(e)
    except (BelyiError, ArithmeticError) as e:
        code, msg = EXIT_MAP, str(e)
    except (OSError, json.JSONDecodeError) as e:
        code, msg = EXIT_IO, str(e)
    sys.stderr.write(f"hurwitz-belyi: error: {msg}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
