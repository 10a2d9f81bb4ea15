from __future__ import annotations

import json
import subprocess
import sys

import pytest

from hurwitz_belyi import cli
from hurwitz_belyi.cli import corpus_dir


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_group_info(capsys):
    code, out, _ = run(capsys, "group-info", "A5")
    data = json.loads(out)
    assert code == 0 and data["order"] == 60 and len(data["classes"]) == 5
    assert json.loads(run(capsys, "group-info", "S1")[1])["order"] == 1
    assert json.loads(run(capsys, "group-info", "SL2(8)")[1])["order"] == 504


def test_group_info_tsv(capsys):
    code, out, _ = run(capsys, "group-info", "A5", "--format", "tsv")
    assert code == 0
    assert out.splitlines()[1] == "order\t60"


def test_unknown_group_exit_code(capsys):
    code, _, err = run(capsys, "group-info", "Nope")
    assert code == cli.EXIT_GROUP and "unknown group" in err


def test_braid_spin_split(capsys):
    code, out, _ = run(capsys, "braid", "--group", "A5", "--classes", "311,5a", "--nu", "3,1", "--pencil", "u31",
                       "--lift", "SL2(5)->A5")
    data = json.loads(out)
    assert code == 0
    assert sorted((c["size"], c["lifting"]) for c in data["components"]) == [(10, "-"), (15, "+")]


def test_braid_twelve_plus_twelve(capsys):
    code, out, _ = run(capsys, "braid", "--group", "S5", "--classes", "5,311,221", "--nu", "2,1,1",
                       "--pencil", "u211", "--generated-order", "60")
    assert code == 0
    assert [c["size"] for c in json.loads(out)["components"]] == [12, 12]


def test_braid_size_one(capsys):
    code, out, _ = run(capsys, "braid", "--group", "S3", "--classes", "21,3,111", "--nu", "2,1,1",
                       "--pencil", "u211")
    comps = json.loads(out)["components"]
    assert code == 0 and comps == [{"size": 1, "beta0": "1", "beta1": "1", "betaInf": "1", "genus": 0,
                                    "classification": "Symmetric", "lifting": None}]


def test_braid_output_is_byte_identical(capsys):
    argv = ["braid", "--group", "A7", "--classes", "22111,7a", "--nu", "3,1", "--pencil", "u31", "--star"]
    first = run(capsys, *argv, "--seed", "1")[1]
    second = run(capsys, *argv, "--seed", "99")[1]
    assert first == second


def test_work_bound_exit_code(capsys):
    code, _, err = run(capsys, "braid", "--group", "W(E6)", "--classes", "4c,6b", "--nu", "3,1", "--pencil", "u31")
    assert code == cli.EXIT_WORK and "work bound" in err
    code, _, _ = run(capsys, "braid", "--group", "S6", "--classes", "6,51", "--nu", "4,1", "--pencil", "u41")
    assert code == cli.EXIT_WORK


def test_braid_errors(capsys):
    assert run(capsys, "braid", "--group", "A5", "--classes", "311,5a", "--nu", "3,1", "--pencil", "u41")[0] \
        == cli.EXIT_FIBER
    assert run(capsys, "braid", "--group", "A5", "--classes", "221,5a", "--nu", "3,1", "--pencil", "u31",
               "--lift", "SL2(5)->A5")[0] == cli.EXIT_LIFT
    assert run(capsys, "braid", "--group", "A5", "--classes", "9z,5a", "--nu", "3,1", "--pencil", "u31")[0] \
        == cli.EXIT_GROUP


def test_mass(capsys):
    code, out, _ = run(capsys, "mass", "--group", "A5", "--classes", "311,5a", "--nu", "3,1")
    assert code == 0 and json.loads(out)["mass"] == "25"
    code, out, _ = run(capsys, "mass", "--group", "SL2(8)", "--classes", "7a,7c", "--nu", "3,1", "--fiber")
    data = json.loads(out)
    assert data["mass"] == "106 1/7" and data["fiberDegree"] == 88
    code, out, _ = run(capsys, "mass", "--group", "A5", "--classes", "5a,5b", "--nu", "3,1", "--lift", "2.A5")
    assert json.loads(out)["extensionMasses"] == {"+": "1/5", "-": "4"}
    code, out, _ = run(capsys, "mass", "--group", "S1", "--classes", "1", "--nu", "3")
    assert json.loads(out)["mass"] == "1"


def test_verify_label_and_file(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "U89")
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["discriminant"]["badPrimes"] == [2, 3]
    m = json.loads((corpus_dir() / "f_5_3_1.json").read_text())
    m["numerator"][0] = str(int(m["numerator"][0]) + 1)
    bad = tmp_path / "perturbed.json"
    bad.write_text(json.dumps(m))
    code, out, _ = run(capsys, "verify", str(bad), str(corpus_dir() / "f_5_3_1.expected.json"))
    assert code == cli.EXIT_FAILED and not json.loads(out)["passed"]


def test_verify_io_errors(capsys, tmp_path):
    assert run(capsys, "verify", str(tmp_path / "missing.json"))[0] == cli.EXIT_IO
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert run(capsys, "verify", str(broken))[0] == cli.EXIT_IO
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify"])
    assert exc.value.code == cli.EXIT_USAGE


def test_verify_clan_output(capsys, tmp_path):
    code, out, _ = run(capsys, "clan", "3", "2", "1")
    data = json.loads(out)
    assert code == 0 and data["degree"] == 21
    path = tmp_path / "pi_3_2_1.json"
    path.write_text(json.dumps({"numerator": data["numerator"], "denominator": data["denominator"]}))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0 and json.loads(out)["isBelyi"]


def test_clan_commands(capsys):
    code, out, _ = run(capsys, "clan", "7", "6", "4")
    assert code == 0
    want = json.loads((corpus_dir() / "pi_7_6_4.json").read_text())
    data = json.loads(out)
    assert (data["numerator"], data["denominator"]) == (want["numerator"], want["denominator"])
    code, out, _ = run(capsys, "clan", "3", "2", "1", "--check-disc")
    assert code == 0 and json.loads(out)["discCheck"] == "pass"
    code, out, _ = run(capsys, "clan", "1", "1", "1", "--check-disc")
    assert code == 0 and json.loads(out)["discCheck"] == "NotApplicable"
    code, out, _ = run(capsys, "clan", "4", "3", "2", "--delta")
    assert code == 0
    assert run(capsys, "clan", "0", "1", "1")[0] == cli.EXIT_CLAN
    with pytest.raises(SystemExit):
        cli.main(["clan", "1", "2"])


def test_catalog_flag(capsys, tmp_path):
    (tmp_path / "toy.grp").write_text("group C7\norder 7\ndegree 7\ngen (0 1 2 3 4 5 6)\n")
    try:
        code, out, _ = run(capsys, "group-info", "C7", "--catalog", str(tmp_path))
        assert code == 0 and json.loads(out)["order"] == 7
    finally:
        import os
        from hurwitz_belyi.group_atlas import CATALOG_ENV, clear_cache
        os.environ.pop(CATALOG_ENV, None)
        clear_cache()


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "hurwitz_belyi.cli", "mass", "--group", "S5", "--classes",
                           "5,311,221", "--nu", "2,1,1", "--format", "tsv"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "mass\t24"


@pytest.mark.slow
def test_verify_corpus_tsv(capsys):
    code, out, _ = run(capsys, "verify", "--corpus", "--format", "tsv")
    rows = [line.split("\t") for line in out.splitlines()]
    assert code == 0
    assert rows[0][:2] == ["map", "passed"]
    assert len(rows) - 1 == len(cli.corpus_labels())
    assert all(r[1] == "pass" for r in rows[1:])
