import json
import subprocess
import sys
from pathlib import Path

import pytest

from greenring.cli import main

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = [
    (["ring", "--kind", "stable", "--n", "4", "--format", "json"], "ring_stable_4.json"),
    (["fpdim", "--kind", "stable", "--n", "4", "--format", "csv"], "fpdim_stable_4.csv"),
    (["verify", "fusion", "--n", "4"], "verify_fusion_stable_4.json"),
    (["verify", "group-like", "--n", "4"], "verify_grouplike_stable_4.json"),
    (["verify", "bifrobenius", "--n", "4"], "verify_bifrobenius_stable_4.json"),
]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv, name", GOLDEN_CASES, ids=[c[1] for c in GOLDEN_CASES])
def test_golden(capsys, argv, name):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.encode("utf-8") == (GOLDEN / name).read_bytes()


def test_golden_via_subprocess():
    # the installed entry point, run twice, is byte-identical to the golden file
    for _ in range(2):
        proc = subprocess.run([sys.executable, "-m", "greenring", "ring", "--kind", "stable", "--n", "4",
                               "--format", "json"], capture_output=True, check=True)
        assert proc.stdout == (GOLDEN / "ring_stable_4.json").read_bytes()


def corrupted(tmp_path, mutate):
    data = json.loads((GOLDEN / "ring_stable_4.json").read_text())
    mutate(data)
    path = tmp_path / "ring.json"
    path.write_text(json.dumps(data))
    return str(path)


def bump_constant(data):
    data["constants"][20][3] = 2


def drop_product(data):
    data["constants"] = [c for c in data["constants"] if c[:2] != [5, 6]]


def swap_involution(data):
    inv = data["involution"]
    inv[1], inv[2] = inv[2], inv[1]


@pytest.mark.parametrize("mutate", [bump_constant, drop_product, swap_involution])
@pytest.mark.parametrize("what", ["fusion", "group-like", "bifrobenius"])
def test_corrupted_verify_exits_one(capsys, tmp_path, mutate, what):
    code, out, _ = run(capsys, "verify", what, "--input", corrupted(tmp_path, mutate))
    assert code == 1
    report = json.loads(out)
    assert report["passed"] is False
    assert report["violations"]


def test_verify_valid_input_file(capsys, tmp_path):
    path = corrupted(tmp_path, lambda d: None)
    code, out, _ = run(capsys, "verify", "bifrobenius", "--input", path, "--format", "text")
    assert code == 0
    assert out.startswith("bi-Frobenius: PASS")


def test_malformed_input_exits_two(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    code, _, err = run(capsys, "verify", "fusion", "--input", str(bad))
    assert code == 2 and "invalid JSON" in err
    code, _, err = run(capsys, "ring", "--input", corrupted(tmp_path, bump_constant))
    assert code == 2 and "associativity" in err
    code, _, _ = run(capsys, "ring", "--input", str(tmp_path / "missing.json"))
    assert code == 2


def test_file_format_checks(capsys, tmp_path):
    def zero(d):
        d["constants"][0][3] = 0

    def version(d):
        d["format_version"] = 99

    def dup(d):
        d["constants"].append(d["constants"][0])

    for mutate in (zero, version, dup):
        code, _, err = run(capsys, "verify", "fusion", "--input", corrupted(tmp_path, mutate))
        assert code == 2, mutate.__name__
        assert err.startswith("greenring: error:")


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["ring", "--n", "4"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["ring", "--kind", "stable"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "ring", "--kind", "stable", "--n", "1")
    assert code == 2 and "n must be" in err


def test_mul(capsys):
    assert run(capsys, "mul", "--kind", "stable", "--n", "4", "F_2", "F_3")[1] == "y*F_2\n"
    assert run(capsys, "mul", "--kind", "radford", "--n", "2", "X1", "Z")[1] == "2*X1\n"
    assert run(capsys, "mul", "--kind", "grothendieck", "--n", "2", "X1", "X1")[1] == "2*Y + 2\n"
    code, out, _ = run(capsys, "mul", "--kind", "taft", "--n", "3", "Z", "Z", "--format", "json")
    payload = json.loads(out)
    assert payload["ring"] == "taft(n=3)" and payload["element"] == "Z^2"


def test_mul_parse_error(capsys):
    code, _, err = run(capsys, "mul", "--kind", "stable", "--n", "4", "F_2 +", "1")
    assert code == 2 and "offset 5" in err


def test_gram_and_radical(capsys):
    code, out, _ = run(capsys, "gram", "--kind", "stable", "--n", "3", "--format", "json")
    g = json.loads(out)["gram"]
    assert all(sum(row) == 1 for row in g)
    code, out, _ = run(capsys, "radical", "--kind", "stable", "--n", "3", "--format", "json")
    assert json.loads(out)["nondegenerate"] is True
    code, out, _ = run(capsys, "radical", "--kind", "taft", "--n", "2", "--format", "text")
    assert out.startswith("nondegenerate: false")
    code, out, _ = run(capsys, "gram", "--kind", "stable", "--n", "2", "--format", "csv")
    assert out.splitlines()[0] == ",F_1,y*F_1"


def test_fpdim_formats(capsys):
    code, out, _ = run(capsys, "fpdim", "--kind", "stable", "--n", "4", "--format", "json")
    dims = json.loads(out)["fpdim"]
    assert abs(dims[4] - 2 ** 0.5) < 1e-9
    code, out, _ = run(capsys, "fpdim", "--kind", "stable", "--n", "3")
    assert "F_2  1" in out


def test_convert(capsys):
    assert run(capsys, "convert", "--n", "4", "--to", "monomial", "F_3 + y*F_1")[1] == "z^2\n"
    assert run(capsys, "convert", "--n", "5", "--to", "f", "z^3")[1] == "F_4 + 2*y*F_2\n"
    code, out, _ = run(capsys, "convert", "--n", "4", "--to", "monomial", "F_3", "--format", "csv")
    assert out.splitlines() == ["y_exp,z_exp,coefficient", "1,0,-1", "0,2,1"]
    with pytest.raises(SystemExit):
        main(["convert", "--kind", "radford", "--n", "4", "Z"])


def test_project(capsys):
    assert run(capsys, "project", "stable", "--n", "3", "X1 + Y")[1] == "y*F_1\n"
    assert run(capsys, "project", "grothendieck", "--n", "2", "Z^2")[1] == "2*Y + 2\n"
    with pytest.raises(SystemExit):
        main(["project", "stable", "--kind", "stable", "--n", "3", "Y"])


def test_ring_text_and_csv(capsys, tmp_path):
    code, out, _ = run(capsys, "ring", "--kind", "stable", "--n", "2", "--format", "csv")
    assert out.splitlines()[0] == "left,right,product"
    out_file = tmp_path / "r.txt"
    code, out, _ = run(capsys, "ring", "--kind", "taft", "--n", "2", "--format", "text", "--out", str(out_file))
    assert out == "" and "Z" in out_file.read_text()


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "greenring" in capsys.readouterr().out
