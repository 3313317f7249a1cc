import json

import pytest

from poisson_lab import load_structure, loads_structure
from poisson_lab.errors import StructureError
from poisson_lab.io.structfile import structure_to_dict

QUADRATIC = {
    "variables": ["a", "b", "c", "x", "y", "z"],
    "central": ["a", "b", "c"],
    "brackets": {"x,y": "a*z^2", "x,z": "b*y^2", "y,z": "c*x^2"},
}


def test_omega_file(tmp_path):
    path = tmp_path / "omega.json"
    path.write_text(json.dumps({"variables": ["p", "q", "r"], "omega": [[0, 1, -2], [-1, 0, 3], [2, -3, 0]]}))
    S = load_structure(path)
    assert S.kind == "log_canonical"
    assert S.omega[0, 2] == -2
    assert S.jacobi_validated


def test_omega_with_rational_strings():
    S = loads_structure('{"variables": ["u", "v"], "omega": [["0", "-1/2"], ["1/2", "0"]]}')
    assert str(S.omega[0, 1]) == "-1/2"


def test_brackets_file_quadratic():
    S = loads_structure(json.dumps(QUADRATIC))
    assert S.kind == "general"
    assert S.jacobi_validated
    assert S.central == {0, 1, 2}


def test_inconsistent_orientations_rejected():
    data = {"variables": ["x", "y"], "brackets": {"x,y": "x", "y,x": "x"}}
    with pytest.raises(StructureError):
        loads_structure(json.dumps(data))


def test_duplicate_json_keys_rejected():
    with pytest.raises(StructureError):
        loads_structure('{"variables": ["x", "y"], "brackets": {"x,y": "x", "x,y": "y"}}')


def test_non_skew_omega_rejected():
    with pytest.raises(StructureError):
        loads_structure('{"variables": ["x", "y"], "omega": [[0, 1], [1, 0]]}')


def test_undeclared_variable_in_expression():
    with pytest.raises(StructureError):
        loads_structure('{"variables": ["x", "y"], "brackets": {"x,y": "w"}}')


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"variables": ["x"]}',
        '{"variables": ["x", "y"], "omega": [[0, 1], [-1, 0]], "brackets": {}}',
        '{"variables": ["x", "y"], "omega": [[0, 0.5], [-0.5, 0]]}',
        '{"variables": ["x", "1y"], "brackets": {}}',
        '{"variables": ["x", "y"], "brackets": {"x,q": "1"}}',
        '{"variables": ["x", "y"], "central": ["z"], "brackets": {}}',
        '{"variables": ["x", "y"], "brackets": {}, "extra": 1}',
    ],
)
def test_malformed_files(text):
    with pytest.raises(StructureError):
        loads_structure(text)


def test_jacobi_failure_and_skip():
    data = {"variables": ["x", "y", "z"], "brackets": {"x,y": "y^2", "x,z": "z", "y,z": "x"}}
    with pytest.raises(StructureError, match="Jacobi"):
        loads_structure(json.dumps(data))
    S = loads_structure(json.dumps(data), skip_jacobi=True)
    assert not S.jacobi_validated


def test_dump_round_trip():
    S = loads_structure(json.dumps(QUADRATIC))
    again = loads_structure(json.dumps(structure_to_dict(S)))
    assert again.pi == S.pi and again.central == S.central
