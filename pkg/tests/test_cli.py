import json
import subprocess
import sys

import pytest

from poisson_lab.io.cli import main

QUADRATIC = {
    "variables": ["a", "b", "c", "x", "y", "z"],
    "central": ["a", "b", "c"],
    "brackets": {"x,y": "a*z^2", "x,z": "b*y^2", "y,z": "c*x^2"},
}


@pytest.fixture
def quad_file(tmp_path):
    path = tmp_path / "quad.json"
    path.write_text(json.dumps(QUADRATIC))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_bracket(capsys, quad_file):
    assert run(capsys, "bracket", "--structure", quad_file, "x", "y/z^2") == (0, "a - 2*b*y^3*z^-3", "")


def test_bracket_machine(capsys, quad_file):
    code, out, _ = run(capsys, "bracket", "--machine", "--structure", quad_file, "x/z", "y/z")
    assert json.loads(out) == {"bracket": "a - b*y^3*z^-3 + c*x^3*z^-3"}


def test_bracket_print_order(capsys):
    code, out, _ = run(capsys, "bracket", "--structure", "gallery:axis", "--order", "y,x", "x*y", "y^2")
    assert out == "2*y^2*x"


def test_jacobi_summary_and_triple(capsys, quad_file):
    assert run(capsys, "jacobi", "--structure", quad_file)[:2] == (0, "valid")
    assert run(capsys, "jacobi", "--structure", "gallery:sl2", "a", "b", "d")[:2] == (0, "0")


def test_jacobi_failure(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"variables": ["x", "y", "z"], "brackets": {"x,y": "y^2", "x,z": "z", "y,z": "x"}}))
    code, out, err = run(capsys, "jacobi", "--structure", str(path))
    assert code == 2 and "Jacobi" in err
    code, out, _ = run(capsys, "jacobi", "--machine", "--skip-jacobi", "--structure", str(path))
    data = json.loads(out)
    assert code == 1 and not data["valid"]
    assert data["failures"][0]["triple"] == ["x", "y", "z"]


def test_constant_term(capsys):
    code, out, _ = run(
        capsys, "constant-term", "--structure", "gallery:borel-sl2", "alpha/(alpha+beta)", "beta/(alpha-beta)"
    )
    assert (code, out) == (0, "0")
    assert run(capsys, "constant-term", "--structure", "gallery:axis", "--", "1/x", "-x*y")[1] == "1"


def test_coeff_orders(capsys):
    base = ["coeff", "--structure", "gallery:axis", "--index", "1,-2"]
    assert run(capsys, *base, "1/(x+y)")[1] == "0"
    assert run(capsys, *base, "--order", "y,x", "1/(x+y)")[1] == "-1"


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "--vars", "x,y", "--order", "x,y", "--window", "x:-4..0,y:0..3", "1/(x+y)")
    assert out.splitlines() == ["-x^-4*y^3", "x^-3*y^2", "-x^-2*y", "x^-1"]
    code, out, _ = run(
        capsys, "expand", "--machine", "--vars", "x", "--window", "x:0..5", "1/(1-x)"
    )
    assert [t["coefficient"] for t in json.loads(out)["terms"]] == ["1"] * 6


def test_expand_inverted_window(capsys):
    code, _, err = run(capsys, "expand", "--vars", "x", "--window", "x:3..1", "x")
    assert code == 2 and "inverted" in err


def test_closure(capsys):
    code, out, _ = run(capsys, "closure", "--structure", "gallery:axis", "x", "y")
    assert "closed: True" in out and "dimension: 3" in out
    assert "verdict: nonabelian" in out
    code, out, _ = run(capsys, "closure", "--machine", "--structure", "gallery:axis", "--max-dim", "4", "x", "x*y")
    assert json.loads(out)["closed"] is False


def test_check_log_canonical(capsys):
    code, out, _ = run(capsys, "check-log-canonical", "--machine", "--structure", "gallery:borel-sl2", "alpha", "beta")
    assert json.loads(out)["omega"] == [["0", "1/2"], ["-1/2", "0"]]
    code, out, _ = run(capsys, "check-log-canonical", "--structure", "gallery:axis", "x", "y")
    assert code == 1 and "y^-1" in out


def test_canonical_pair(capsys):
    assert run(capsys, "canonical-pair", "1", "3")[1].splitlines() == ["u = x^-1", "v = x*y^-2", "{u,v} = 2"]
    code, out, _ = run(capsys, "canonical-pair", "--machine", "1", "0", "--unit")
    assert json.loads(out) == {"exists": True, "u": "x^-1", "v": "-x*y", "constant": "1"}
    assert run(capsys, "canonical-pair", "1", "1")[0] == 1


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "--machine", "--structure", "gallery:axis", "--", "1/x", "-x*y")
    assert json.loads(out)["f"] == "-y"
    code, out, _ = run(capsys, "witness", "--structure", "gallery:borel-sl2", "alpha", "beta")
    assert code == 1 and out.startswith("not applicable")


def test_gallery(capsys):
    code, out, _ = run(capsys, "gallery", "sl2")
    assert code == 0 and "ok   {a, d} = b*c" in out
    code, out, _ = run(capsys, "gallery", "--machine", "quadratic-xyz")
    assert json.loads(out)["structure"]["central"] == ["a", "b", "c"]


def test_errors(capsys):
    assert run(capsys, "bracket", "--structure", "gallery:axis", "x", "q")[0] == 2
    assert run(capsys, "bracket", "--structure", "/nonexistent.json", "x", "y")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "poisson_lab", "canonical-pair", "2", "2"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "{u,v} = 1"
