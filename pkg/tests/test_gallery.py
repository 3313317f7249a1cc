from fractions import Fraction

import pytest

from poisson_lab import gallery, structure_validate
from poisson_lab.io.gallery import sln_structure


def test_sl2_table():
    entry = gallery("sl2")
    assert entry.passed
    checks = {str(i) for i in entry.identities}
    assert "{a, d} = b*c" in checks
    assert "{b, c} = 0" in checks
    assert len(entry.identities) == 6


def test_sln2_reproduces_sl2():
    sl2 = gallery("sl2").structure
    sln2 = gallery("sln:2").structure
    assert sl2.pi == sln2.pi


def test_sln3_validates():
    entry = gallery("sln:3")
    assert entry.passed
    assert entry.structure.n == 9
    assert structure_validate(entry.structure).valid


def test_sln_sign_convention():
    S = sln_structure(3)
    # row 1 against row 3, column 3 against column 1: c = (1 - 1)/2 = 0
    assert S.entry(S.index("x13"), S.index("x31")).is_zero
    # same column: c = 1/2
    assert S.entry(S.index("x12"), S.index("x32")) == (S.var("x12") * S.var("x32")).scale(Fraction(1, 2))


def test_borel():
    entry = gallery("borel-sl2")
    assert entry.passed
    assert entry.structure.omega[0, 1] == Fraction(1, 2)


def test_axis_and_families():
    assert gallery("axis").passed
    for a in range(4):
        for b in range(4):
            assert gallery(f"ab-family:{a},{b}").passed


def test_quadratic_entry():
    entry = gallery("quadratic-xyz")
    assert entry.passed
    assert "{x, y/z^2} = a - 2*b*(y/z)^3" in {str(i) for i in entry.identities}


@pytest.mark.parametrize("name", ["nope", "sln:1", "sln:x", "ab-family:1", "ab-family:-1,2"])
def test_bad_names(name):
    with pytest.raises(ValueError):
        gallery(name)
