import json
import subprocess
import sys

import pytest

from cyclealg.cli import main, parse_tower_spec
from cyclealg.errors import SpecValidationError

STATIONARY = {"schema_version": 1, "m": 3, "mode": "stationary_matroid", "d": 4, "s": 6}
EXPLICIT = {
    "schema_version": 1,
    "m": 3,
    "mode": "explicit",
    "shapes": [[1, 1, 1, 1, 1, 1], [2, 2, 2, 2, 2, 2]],
    "embeddings": [[1, 1, 0, 0, 0, 0]],
}


def write_spec(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def run_cli(*argv):
    proc = subprocess.run([sys.executable, "-m", "cyclealg", *argv],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


# -- spec validation ----------------------------------------------------------

def test_parse_stationary():
    mode, tower = parse_tower_spec(STATIONARY)
    assert mode == "stationary" and (tower.m, tower.d, tower.s) == (3, 4, 6)


def test_parse_explicit():
    mode, tower = parse_tower_spec(EXPLICIT)
    assert mode == "explicit" and len(tower.shapes) == 2


@pytest.mark.parametrize("patch,field", [
    ({"schema_version": 2}, "$.schema_version"),
    ({"m": 2}, "$.m"),
    ({"mode": "other"}, "$.mode"),
    ({"d": 0}, "$.d"),
    ({"s": 5}, "$.s"),
])
def test_parse_errors_carry_field_paths(patch, field):
    data = dict(STATIONARY)
    data.update(patch)
    with pytest.raises(SpecValidationError) as err:
        parse_tower_spec(data)
    assert err.value.field == field


def test_parse_explicit_capacity_error():
    data = json.loads(json.dumps(EXPLICIT))
    data["shapes"][1] = [1, 1, 1, 1, 1, 1]
    with pytest.raises(SpecValidationError):
        parse_tower_spec(data)


# -- commands and exit codes ----------------------------------------------------

def test_invariants_stationary(tmp_path, capsys):
    spec = write_spec(tmp_path, "t.json", STATIONARY)
    assert main(["invariants", spec, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["result"]["k0"]["supernatural"] == {"2": "inf", "3": "inf"}
    assert report["result"]["h1"]["display"] == "Z[1/(2*3)]"
    assert report["result"]["extreme"] is False
    assert report["result"]["homologically_limited"] is True


def test_invariants_s0(tmp_path, capsys):
    spec = write_spec(tmp_path, "t.json", dict(STATIONARY, s=0))
    assert main(["invariants", spec, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["result"]["h1"]["kind"] == "trivial"


def test_invariants_explicit(tmp_path, capsys):
    spec = write_spec(tmp_path, "t.json", EXPLICIT)
    assert main(["invariants", spec, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    levels = report["result"]["levels"]
    assert levels[0]["composite_signature"] is None
    assert levels[1]["composite_signature"] == [1, 1, 0, 0, 0, 0]


def test_invariants_explicit_identity_composite(tmp_path, capsys):
    data = {"schema_version": 1, "m": 3, "mode": "explicit",
            "shapes": [[1] * 6, [1] * 6],
            "embeddings": [[1, 0, 0, 0, 0, 0]]}
    spec = write_spec(tmp_path, "t.json", data)
    assert main(["invariants", spec, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["result"]["levels"][1]["composite_signature"] == [1, 0, 0, 0, 0, 0]


def test_invariants_bad_spec_exits_2(tmp_path, capsys):
    spec = write_spec(tmp_path, "t.json", dict(STATIONARY, s=5))
    assert main(["invariants", spec]) == 2
    spec2 = tmp_path / "missing.json"
    assert main(["invariants", str(spec2)]) == 2


def test_compare_exit_codes(tmp_path):
    a = write_spec(tmp_path, "a.json", STATIONARY)
    b = write_spec(tmp_path, "b.json", dict(STATIONARY, s=-6))
    c = write_spec(tmp_path, "c.json", dict(STATIONARY, s=12))
    e = write_spec(tmp_path, "e.json", EXPLICIT)
    assert main(["compare", a, b]) == 0
    assert main(["compare", a, c]) == 3
    assert main(["compare", a, e]) == 2
    other_m = write_spec(tmp_path, "m4.json",
                         {"schema_version": 1, "m": 4, "mode": "stationary_matroid",
                          "d": 1, "s": 4})
    assert main(["compare", a, other_m]) == 2


def test_compare_witness_in_report(tmp_path, capsys):
    a = write_spec(tmp_path, "a.json", STATIONARY)
    c = write_spec(tmp_path, "c.json", dict(STATIONARY, s=12))
    main(["compare", a, c, "--json"])
    report = json.loads(capsys.readouterr().out)
    assert report["result"]["verdict"] == "not_isomorphic"
    assert report["result"]["witness"] == "joint_scale_boundedness"


def test_signature_compose(capsys):
    assert main(["signature", "compose", "0,0,1,0,0,0", "1,0,0,0,0,0", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["result"]["composed"] == [0, 0, 1, 0, 0, 0]


def test_signature_homrange(capsys):
    assert main(["signature", "homrange", "1,1,1,1,1,1", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["result"]["homology_range"] == [-6, 0, 6]


def test_signature_fromk0h1(capsys):
    rows = ";".join(",".join("1" if i == j else "0" for j in range(6)) for i in range(6))
    assert main(["signature", "fromk0h1", "--m", "3", "--k0", rows, "--h", "1",
                 "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["result"]["signature"] == [1, 0, 0, 0, 0, 0]
    # unrealizable homology value: error report, exit 3
    assert main(["signature", "fromk0h1", "--m", "3", "--k0", rows, "--h", "-1",
                 "--json"]) == 3
    report = json.loads(capsys.readouterr().out)
    assert report["result"]["realizable"] is False
    assert report["result"]["kind"] == "HomologyRangeError"


def test_signature_malformed_exits_2(capsys):
    assert main(["signature", "homrange", "1,x,1"]) == 2


def test_verify_targets(capsys):
    assert main(["verify", "lemma22", "--m", "3", "--dims", "2", "--trials", "5",
                 "--seed", "1", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["result"]["ok"] is True
    assert main(["verify", "lemma31", "--m", "3", "--dims", "2", "--trials", "3",
                 "--delta", "1e-6", "--json"]) == 0
    capsys.readouterr()
    assert main(["verify", "example23", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["result"]["assertions"]["product_not_locally_regular"] is True
    assert main(["verify", "composition-oracle", "--m", "3", "--json"]) == 0
    capsys.readouterr()
    assert main(["verify", "lemma42-roundtrip", "--m", "3", "--max-entry", "1",
                 "--json"]) == 0
    capsys.readouterr()


def test_verify_refuses_four_cycle(capsys):
    assert main(["verify", "lemma22", "--m", "2", "--trials", "1"]) == 2
    assert main(["verify", "lemma31", "--m", "2", "--trials", "1"]) == 2


def test_cli_subprocess_determinism(tmp_path):
    # byte-identical output for identical inputs, flags and seed
    spec = write_spec(tmp_path, "t.json", STATIONARY)
    commands = [
        ("invariants", spec, "--json"),
        ("invariants", spec),
        ("verify", "lemma22", "--m", "3", "--dims", "2", "--trials", "5",
         "--seed", "7", "--json"),
        ("verify", "example23", "--json"),
        ("signature", "homrange", "2,1,2,1,2,1"),
    ]
    for cmd in commands:
        first = run_cli(*cmd)
        second = run_cli(*cmd)
        assert first == second
        assert first[0] == 0


def test_version_and_usage_exit_codes(capsys):
    assert main(["--version"]) == 0
    assert "cyclealg" in capsys.readouterr().out
    # argparse usage errors map to exit code 2
    assert main(["verify", "nonsense"]) == 2
