"""Finite-dimensional Lie subalgebras of a Poisson field.

``lie_closure`` looks for the smallest subspace containing 1 and the
generators that is closed under the bracket, within a dimension budget.
``ad_analysis`` and ``abelian_verdict`` then read off the adjoint
representation, and ``witness_transform`` turns a nonabelian witness into
a pair with bracket 1 (or into one of the equivalent forms).

Linear (in)dependence over Q is decided exactly: elements are put over a
common denominator and the numerator coefficient vectors are row-reduced.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra.gcd import lcm_multivariate
from .algebra.laurent import LaurentPolynomial, divide_exact
from .algebra.linalg import charpoly, is_zero_matrix, matpow, nullspace, rank, rational_roots, solve
from .algebra.rational import RationalFunction, jacobian_rank
from .errors import (
    InternalConsistencyError,
    NoCanonicalPair,
    NotApplicableError,
    ReportNotClosedError,
)
from .poisson import PoissonStructure, bracket, bracket_rational


def _coordinate_rows(fs):
    """Coefficient vectors of the fs over one common denominator, with the monomial list."""
    n = fs[0].n
    L = LaurentPolynomial.one(n)
    for f in fs:
        if not f.is_laurent():
            L = lcm_multivariate(L, f.den)
    polys = []
    for f in fs:
        if f.is_laurent():
            polys.append(f.numerator() * L)
        else:
            polys.append(f.numerator() * divide_exact(L, f.den))
    monos = sorted({e for p in polys for e, _ in p.raw_items()})
    return [[p.coefficient(e) for e in monos] for p in polys]


def span_rank(fs):
    """Dimension over Q of the span of ``fs``."""
    fs = [f for f in fs if not f.is_zero]
    if not fs:
        return 0
    return rank(_coordinate_rows(fs))


def _express(basis, f):
    """Coefficients c with f = sum c_k basis[k], or None if f is outside the span."""
    if f.is_zero:
        return [Fraction(0)] * len(basis)
    rows = _coordinate_rows(list(basis) + [f])
    return solve(rows[:-1], rows[-1])


def _combine(basis, coeffs):
    n = basis[0].n
    total = RationalFunction.zero(n)
    for c, b in zip(coeffs, basis):
        if c:
            total = total + b.scale(c)
    return total


@dataclass
class LieClosureReport:
    closed: bool
    basis: list
    structure_constants: list = None
    trace: list = field(default_factory=list)

    @property
    def dimension(self):
        return len(self.basis)

    @property
    def abelian(self):
        if self.structure_constants is None:
            return None
        return all(not c for plane in self.structure_constants for row in plane for c in row)

    def expansion(self, i, j):
        """sum_k c^k_ij b_k for a closed report."""
        if not self.closed:
            raise ReportNotClosedError("closure did not finish within the budget")
        return _combine(self.basis, self.structure_constants[i][j])


def lie_closure(S, generators, max_dim=16):
    """Close span{1, generators} under the bracket, adjoining brackets breadth-first.

    Pairs are visited in the order (0,1), (0,2), (1,2), (0,3), ... over the
    growing basis. Adjoining an element past ``max_dim`` stops the search
    with ``closed=False``.
    """
    n = S.n
    gens = [g if isinstance(g, RationalFunction) else RationalFunction(g) for g in generators]
    if max_dim < 1:
        raise ValueError("max_dim must be positive")
    basis = [RationalFunction.one(n)]
    trace = [(basis[0], None)]
    for g in gens:
        if _express(basis, g) is None:
            if len(basis) >= max_dim:
                return LieClosureReport(False, basis, None, trace)
            basis.append(g)
            trace.append((g, None))
    brackets = {}
    j = 1
    while j < len(basis):
        for i in range(j):
            h = bracket(S, basis[i], basis[j])
            coords = _express(basis, h)
            if coords is None:
                if len(basis) >= max_dim:
                    return LieClosureReport(False, basis, None, trace + [(h, (i, j))])
                basis.append(h)
                trace.append((h, (i, j)))
                coords = [Fraction(0)] * (len(basis) - 1) + [Fraction(1)]
            brackets[(i, j)] = coords
        j += 1
    d = len(basis)
    consts = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    for (i, j), coords in brackets.items():
        coords = list(coords) + [Fraction(0)] * (d - len(coords))
        consts[i][j] = coords
        consts[j][i] = [-c for c in coords]
    return LieClosureReport(True, basis, consts, trace)


@dataclass
class AdjointAnalysis:
    index: int
    matrix: list
    charpoly: list
    is_nilpotent: bool
    has_nonzero_eigenvalue: bool
    rational_eigenvalues: list

    @property
    def is_zero(self):
        return is_zero_matrix(self.matrix)


def ad_analysis(report, i):
    """Matrix of ad_{b_i} on the basis (column j holds the coordinates of {b_i, b_j})."""
    if not report.closed:
        raise ReportNotClosedError("adjoint analysis needs a closed report")
    d = report.dimension
    if not 0 <= i < d:
        raise IndexError(f"basis index {i} out of range for dimension {d}")
    c = report.structure_constants
    matrix = [[c[i][j][k] for j in range(d)] for k in range(d)]
    cp = charpoly(matrix)
    by_charpoly = all(not v for v in cp[1:])
    by_power = is_zero_matrix(matpow(matrix, d))
    if by_charpoly != by_power:
        raise InternalConsistencyError(
            f"nilpotency tests disagree for element {i}: charpoly {by_charpoly}, power {by_power}"
        )
    roots = rational_roots(cp) or []
    return AdjointAnalysis(
        index=i,
        matrix=matrix,
        charpoly=cp,
        is_nilpotent=by_charpoly,
        has_nonzero_eigenvalue=not by_charpoly,
        rational_eigenvalues=roots,
    )


@dataclass
class Verdict:
    kind: str
    witness: tuple = None
    detail: str = ""

    def __str__(self):
        return f"{self.kind}: {self.detail}" if self.detail else self.kind


def _eigen_witness(report, ad):
    """(f, g) with {f, g} = g built from a nonzero rational eigenvalue of ad."""
    for lam in ad.rational_eigenvalues:
        if not lam:
            continue
        d = report.dimension
        shifted = [[ad.matrix[r][c] - (lam if r == c else 0) for c in range(d)] for r in range(d)]
        vecs = nullspace(shifted, d)
        if vecs:
            g = _combine(report.basis, vecs[0])
            return lam, report.basis[ad.index].scale(1 / lam), g
    return None


def _nilpotent_witness(report, ad):
    """(f, g) with {f, g} != 0 and {f, {f, g}} = 0 from a nonzero nilpotent ad."""
    d = report.dimension

    def apply(v):
        return [sum(ad.matrix[r][c] * v[c] for c in range(d)) for r in range(d)]

    j = next(j for j in range(d) if any(ad.matrix[r][j] for r in range(d)))
    vec = [Fraction(int(r == j)) for r in range(d)]
    # follow g, ad g, ad^2 g, ... until the step after next vanishes
    while True:
        nxt = apply(vec)
        if not any(apply(nxt)):
            return report.basis[ad.index], _combine(report.basis, vec)
        vec = nxt


def abelian_verdict(S, report):
    """abelian / nonabelian / contradiction, with a witness for nonabelian closures.

    A nonabelian closed report under a log-canonical structure would refute
    the theorem that such fields have no finite-dimensional nonabelian Lie
    subalgebras, so it is returned as ``contradiction``.
    """
    if not report.closed:
        raise ReportNotClosedError("verdict needs a closed report")
    if report.abelian:
        return Verdict("abelian")
    if S.is_log_canonical:
        return Verdict("contradiction", detail="nonabelian closure under a log-canonical structure")
    analyses = [ad_analysis(report, i) for i in range(report.dimension)]
    for ad in analyses:
        found = _eigen_witness(report, ad)
        if found:
            lam, f, g = found
            name = S.format(report.basis[ad.index])
            return Verdict("nonabelian", (f, g), f"ad_({name}) has eigenvalue {lam}")
    for ad in analyses:
        if ad.is_nilpotent and not ad.is_zero:
            f, g = _nilpotent_witness(report, ad)
            return Verdict("nonabelian", (f, g), f"ad_({S.format(f)}) is nonzero nilpotent")
    return Verdict("nonabelian", None, "only irrational nonzero eigenvalues")


@dataclass
class CanonicalPair:
    u: RationalFunction
    v: RationalFunction
    constant: Fraction
    structure: PoissonStructure


def ab_structure(a, b):
    xs = RationalFunction.variables(2)
    return PoissonStructure(("x", "y"), {(0, 1): RationalFunction.monomial((a, b))}), xs


def canonical_pair(a, b, unit=False):
    """Rational (u, v) with constant nonzero {u, v} for {x, y} = x^a y^b.

    With ``unit=True`` v is divided by the constant so that {u, v} = 1;
    for (a, b) = (1, 0) this gives (1/x, -xy).
    """
    if a < 0 or b < 0:
        raise ValueError("exponents must be nonnegative")
    if (a, b) == (1, 1):
        raise NoCanonicalPair("{x,y} = xy is log-canonical; no bracket of rational functions is a nonzero constant")
    S, (x, y) = ab_structure(a, b)
    if a != 1 and b != 1:
        u, v, c = x ** (1 - a), y ** (1 - b), Fraction((a - 1) * (b - 1))
    elif a == 1:
        u, v, c = x ** -1, x * y ** (1 - b), Fraction(b - 1)
    else:
        u, v, c = x ** (1 - a) * y, y ** -1, Fraction(a - 1)
    if unit:
        v, c = v.scale(1 / c), Fraction(1)
    got = bracket_rational(S, u, v)
    if got != c:
        raise InternalConsistencyError(f"{{u,v}} = {S.format(got)}, expected {c}")
    if jacobian_rank([u, v]) != 2:
        raise InternalConsistencyError("canonical pair is algebraically dependent")
    return CanonicalPair(u, v, c, S)


@dataclass
class WitnessResult:
    hypothesis: str
    pair: tuple
    bracket: RationalFunction
    note: str = ""


def _checked(S, hypothesis, f, g, expected, note):
    got = bracket_rational(S, f, g)
    if got != expected:
        raise InternalConsistencyError(
            f"transform ({hypothesis}) produced bracket {S.format(got)}, expected {S.format(expected)}"
        )
    return WitnessResult(hypothesis, (f, g), got, note)


def witness_transform(S, f, g):
    """Move between the equivalent forms {f,g} = 1, {f,g} = g and ad_f nilpotent on g.

    * {f,g} a nonzero constant c: rescale to 1 and return (fg/c, g) with bracket g.
    * {f,g} = l g or {f,g} = l f (l != 0): return a pair with bracket 1.
    * {f,g} = h != 0 with {f,h} = 0: return (f, g/h) with bracket 1.
    Every returned pair is re-bracketed and checked.
    """
    n = S.n
    one = RationalFunction.one(n)
    h = bracket_rational(S, f, g)
    failed = []
    if h.is_zero:
        raise NotApplicableError(["{f,g} is zero"])
    if h.is_constant():
        c = h.constant_value()
        f1 = f.scale(1 / c)
        return _checked(S, "a", f1 * g, g, g, f"{{f,g}} = c with c = {c}; returned (f*g/c, g)")
    failed.append("{f,g} is not a nonzero constant")
    lam = h.scalar_ratio(g)
    if lam:
        f1 = f.scale(1 / lam)
        return _checked(S, "b", g, -(f1 / g), one, f"{{f,g}} = l*g with l = {lam}; returned (g, -f/(l*g))")
    failed.append("{f,g} is not a scalar multiple of g")
    lam = h.scalar_ratio(f)
    if lam:
        g1 = g.scale(1 / lam)
        return _checked(S, "b", f, g1 / f, one, f"{{f,g}} = l*f with l = {lam}; returned (f, g/(l*f))")
    failed.append("{f,g} is not a scalar multiple of f")
    if bracket_rational(S, f, h).is_zero:
        return _checked(S, "c", f, g / h, one, "{f,{f,g}} = 0; returned (f, g/{f,g})")
    failed.append("{f,{f,g}} is nonzero")
    raise NotApplicableError(failed)
