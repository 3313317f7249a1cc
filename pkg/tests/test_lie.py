from fractions import Fraction

import pytest

from generators import random_log_canonical
from poisson_lab import (
    PoissonStructure,
    RationalFunction,
    abelian_verdict,
    ad_analysis,
    bracket_rational,
    canonical_pair,
    jacobian_rank,
    lie_closure,
    span_rank,
    witness_transform,
)
from poisson_lab.errors import NoCanonicalPair, NotApplicableError, ReportNotClosedError

x, y = RationalFunction.variables(2)
AXIS = PoissonStructure(["x", "y"], {(0, 1): x})
PLANE = PoissonStructure.log_canonical([[0, 1], [-1, 0]])
ZERO = PoissonStructure(["x", "y"], {})


def test_span_rank_monomials():
    assert span_rank([RationalFunction.one(2), x, y]) == 3


def test_span_rank_partition_of_unity():
    assert span_rank([x / (x + y), y / (x + y), RationalFunction.one(2)]) == 2


def test_span_rank_scalar_multiple():
    f = (x - 1) / (y + 2)
    assert span_rank([f, f.scale(2)]) == 1


def test_span_rank_empty_and_zero():
    assert span_rank([]) == 0
    assert span_rank([RationalFunction.zero(2)]) == 0


def test_axis_closure():
    report = lie_closure(AXIS, [x, y])
    assert report.closed and report.dimension == 3
    assert report.basis == [1, x, y]
    assert not report.abelian
    assert report.expansion(1, 2) == x


def test_axis_ad_x_nilpotent():
    ad = ad_analysis(lie_closure(AXIS, [x, y]), 1)
    # ad_x(y) = x, everything else to 0: a single 1 in row x, column y
    assert ad.matrix == [[0, 0, 0], [0, 0, 1], [0, 0, 0]]
    assert ad.is_nilpotent and not ad.is_zero
    assert ad.charpoly == [1, 0, 0, 0]


def test_axis_ad_y_eigenvalue():
    ad = ad_analysis(lie_closure(AXIS, [x, y]), 2)
    # lambda^2 (lambda + 1)
    assert ad.charpoly == [1, 1, 0, 0]
    assert ad.has_nonzero_eigenvalue
    assert Fraction(-1) in ad.rational_eigenvalues


def test_plane_closure_inconclusive():
    report = lie_closure(PLANE, [x, y], max_dim=16)
    assert not report.closed
    assert report.dimension == 16
    with pytest.raises(ReportNotClosedError):
        ad_analysis(report, 0)
    with pytest.raises(ReportNotClosedError):
        abelian_verdict(PLANE, report)


def test_commuting_generators_abelian():
    for S in (AXIS, PLANE):
        report = lie_closure(S, [x, 1 / x])
        assert report.closed and report.abelian
        assert all(ad_analysis(report, i).is_zero for i in range(report.dimension))


def test_dependent_generators_reduced():
    report = lie_closure(ZERO, [x, x.scale(3), RationalFunction.constant(2, 5), y])
    assert report.basis == [1, x, y]


def test_ad_index_out_of_range():
    with pytest.raises(IndexError):
        ad_analysis(lie_closure(AXIS, [x, y]), 3)


def test_structure_constants_reproduce_brackets():
    report = lie_closure(AXIS, [x, y, 1 / x])
    assert report.closed and report.dimension == 4
    for i in range(report.dimension):
        for j in range(report.dimension):
            c = report.structure_constants
            assert c[i][j] == [-v for v in c[j][i]]
            assert bracket_rational(AXIS, report.basis[i], report.basis[j]) == report.expansion(i, j)


def test_verdicts():
    assert abelian_verdict(PLANE, lie_closure(PLANE, [x, 1 / x])).kind == "abelian"
    assert abelian_verdict(ZERO, lie_closure(ZERO, [x, y])).kind == "abelian"
    v = abelian_verdict(AXIS, lie_closure(AXIS, [x, y]))
    assert v.kind == "nonabelian"
    f, g = v.witness
    # eigenvalue -1 of ad_y rescaled: {f, g} = g
    assert bracket_rational(AXIS, f, g) == g


def test_nilpotent_witness():
    # {x, y} = 1: ad_x is nonzero nilpotent and there are no eigenvalues
    S = PoissonStructure(["x", "y"], {(0, 1): 1})
    report = lie_closure(S, [x, y])
    v = abelian_verdict(S, report)
    f, g = v.witness
    h = bracket_rational(S, f, g)
    assert not h.is_zero and bracket_rational(S, f, h).is_zero


def test_random_log_canonical_closures_are_abelian(rng):
    closed = 0
    for _ in range(15):
        S = random_log_canonical(rng, 3, -2, 2)
        gens = [RationalFunction.monomial(tuple(rng.randint(-2, 2) for _ in range(3))) for _ in range(2)]
        report = lie_closure(S, gens, max_dim=6)
        if report.closed:
            closed += 1
            assert report.abelian
            assert abelian_verdict(S, report).kind == "abelian"
    assert closed > 0


@pytest.mark.parametrize("a,b", [(a, b) for a in range(5) for b in range(5) if (a, b) != (1, 1)])
def test_canonical_pair_family(a, b):
    pair = canonical_pair(a, b)
    if a != 1 and b != 1:
        expected = (a - 1) * (b - 1)
    elif a == 1:
        expected = b - 1
    else:
        expected = a - 1
    assert pair.constant == expected != 0
    assert bracket_rational(pair.structure, pair.u, pair.v) == expected
    assert jacobian_rank([pair.u, pair.v]) == 2


def test_canonical_pair_examples():
    p = canonical_pair(2, 2)
    assert (p.u, p.v, p.constant) == (1 / x, 1 / y, 1)
    p = canonical_pair(1, 3)
    assert (p.u, p.v, p.constant) == (1 / x, x / y**2, 2)


def test_canonical_pair_axis_unit():
    p = canonical_pair(1, 0, unit=True)
    assert (p.u, p.v, p.constant) == (1 / x, -x * y, 1)


def test_no_canonical_pair_for_log_canonical_case():
    with pytest.raises(NoCanonicalPair):
        canonical_pair(1, 1)


def test_witness_from_scaled_constant():
    S = PoissonStructure(["x", "y"], {(0, 1): y**2})
    # {3x, -1/y} = 3, rescaled to 1 before forming (f*g, g)
    res = witness_transform(S, x.scale(3), -1 / y)
    assert res.hypothesis == "a"
    assert res.bracket == -1 / y


def test_witness_from_unit_bracket():
    res = witness_transform(AXIS, 1 / x, -x * y)
    assert res.hypothesis == "a"
    assert res.pair == (-y, -x * y)
    assert res.bracket == -x * y


def test_witness_from_eigen_form():
    res = witness_transform(AXIS, y, x)
    assert res.hypothesis == "b"
    assert res.bracket == 1
    assert bracket_rational(AXIS, *res.pair) == 1


def test_witness_from_nilpotent_form():
    S = PoissonStructure(["x", "y"], {(0, 1): y**2})
    # {y, x} = -y^2 and {y, -y^2} = 0
    res = witness_transform(S, y, x)
    assert res.hypothesis == "c"
    assert bracket_rational(S, *res.pair) == 1


def test_witness_not_applicable_under_log_canonical():
    with pytest.raises(NotApplicableError) as exc:
        witness_transform(PLANE, x, y)
    assert len(exc.value.failed) == 4
    with pytest.raises(NotApplicableError):
        witness_transform(PLANE, x, x)
