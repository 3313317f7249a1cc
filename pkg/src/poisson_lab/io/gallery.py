"""Named example structures, each with a checklist verified on construction.

Names: ``sl2``, ``sln:<n>``, ``borel-sl2``, ``axis``, ``ab-family:<a>,<b>``
and ``quadratic-xyz``.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra.rational import RationalFunction, jacobian_rank
from ..errors import InternalConsistencyError, NoCanonicalPair
from ..lie import ab_structure, canonical_pair
from ..poisson import (
    PoissonStructure,
    bracket_rational,
    check_log_canonical,
    monomial3_family,
    structure_validate,
)


@dataclass
class Identity:
    """{left, right} = expected, all as expression text."""

    left: str
    right: str
    expected: str
    passed: bool = None

    def __str__(self):
        return f"{{{self.left}, {self.right}}} = {self.expected}"


@dataclass
class GalleryEntry:
    name: str
    structure: PoissonStructure
    identities: list
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(i.passed for i in self.identities) and all(ok for _, ok in self.checks)

    def lines(self):
        for ident in self.identities:
            yield f"{'ok  ' if ident.passed else 'FAIL'} {ident}"
        for label, ok in self.checks:
            yield f"{'ok  ' if ok else 'FAIL'} {label}"


def _verify(entry):
    S = entry.structure
    for ident in entry.identities:
        got = bracket_rational(S, S.parse(ident.left), S.parse(ident.right))
        ident.passed = got == S.parse(ident.expected)
    if not entry.passed:
        bad = [str(i) for i in entry.identities if not i.passed]
        bad += [label for label, ok in entry.checks if not ok]
        raise InternalConsistencyError(f"gallery entry {entry.name} fails: {'; '.join(bad)}")
    return entry


def _sign(v):
    return (v > 0) - (v < 0)


def sln_structure(n, names=None):
    """Standard bracket {x_ij, x_kl} = c x_il x_kj on the n^2 matrix entries."""
    if n < 2:
        raise ValueError("sln needs n >= 2")
    cells = [(i, j) for i in range(n) for j in range(n)]
    if names is None:
        names = [f"x{i + 1}{j + 1}" for i, j in cells]
    pos = {cell: k for k, cell in enumerate(cells)}
    N = len(cells)
    xs = RationalFunction.variables(N)
    brackets = {}
    for p, (i, j) in enumerate(cells):
        for q, (k, l) in enumerate(cells):
            if p < q:
                c = Fraction(_sign(k - i) + _sign(l - j), 2)
                if c:
                    brackets[(p, q)] = (xs[pos[(i, l)]] * xs[pos[(k, j)]]).scale(c)
    return PoissonStructure(names, brackets)


def _sl2_table(a, b, c, d):
    return [
        Identity(a, b, f"1/2*{a}*{b}"),
        Identity(c, d, f"1/2*{c}*{d}"),
        Identity(a, c, f"1/2*{a}*{c}"),
        Identity(b, d, f"1/2*{b}*{d}"),
        Identity(a, d, f"{b}*{c}"),
        Identity(b, c, "0"),
    ]


def _validated(S):
    report = structure_validate(S)
    return report.structure, ("Jacobi identity on all coordinate triples", report.valid)


def sl2():
    S, jac = _validated(sln_structure(2, ["a", "b", "c", "d"]))
    return _verify(GalleryEntry("sl2", S, _sl2_table("a", "b", "c", "d"), [jac]))


def sln(n):
    S, jac = _validated(sln_structure(n))
    ids = []
    # every 2x2 submatrix carries the SL_2 table
    for i in range(n):
        for k in range(i + 1, n):
            for j in range(n):
                for l in range(j + 1, n):
                    ids += _sl2_table(
                        f"x{i + 1}{j + 1}", f"x{i + 1}{l + 1}", f"x{k + 1}{j + 1}", f"x{k + 1}{l + 1}"
                    )
    return _verify(GalleryEntry(f"sln:{n}", S, ids, [jac]))


def borel_sl2():
    S = PoissonStructure(
        ("alpha", "beta"),
        {(0, 1): RationalFunction.monomial((1, 1), Fraction(1, 2))},
    )
    S, jac = _validated(S)
    omega = check_log_canonical(S, [S.var("alpha"), S.var("beta")])
    # on c = 0, d = 1/a the SL_2 relation {a,d} = bc must vanish, and it does
    sl = sl2().structure
    a = sl.var("a")
    consistent = bracket_rational(sl, a, sl.var("d")).evaluate([1, 1, 0, 1]) == 0
    checks = [
        jac,
        ("check_log_canonical(alpha, beta) gives omega = 1/2", omega[0, 1] == Fraction(1, 2)),
        ("{a,d} vanishes on the Borel subgroup c = 0", consistent),
    ]
    return _verify(GalleryEntry("borel-sl2", S, [Identity("alpha", "beta", "1/2*alpha*beta")], checks))


def axis():
    S, jac = _validated(PoissonStructure(("x", "y"), {(0, 1): RationalFunction.variable(2, 0)}))
    pair = canonical_pair(1, 0, unit=True)
    u, v = S.parse("1/x"), S.parse("-x*y")
    checks = [
        jac,
        ("canonical_pair(1, 0) normalized to bracket 1 is (1/x, -x*y)", (pair.u, pair.v) == (u, v)),
        ("jacobian_rank(1/x, -x*y) = 2", jacobian_rank([u, v]) == 2),
    ]
    ids = [Identity("x", "y", "x"), Identity("1/x", "-x*y", "1")]
    return _verify(GalleryEntry("axis", S, ids, checks))


def ab_family(a, b):
    S, _ = ab_structure(a, b)
    S, jac = _validated(S)
    checks = [jac]
    ids = [Identity("x", "y", S.format(RationalFunction.monomial((a, b))))]
    try:
        pair = canonical_pair(a, b)
    except NoCanonicalPair:
        omega = check_log_canonical(S, [S.var("x"), S.var("y")])
        checks.append(("(1,1) is log-canonical with omega = 1; no canonical pair", omega[0, 1] == 1))
    else:
        ids.append(Identity(S.format(pair.u), S.format(pair.v), str(pair.constant)))
        checks.append(("canonical pair is algebraically independent", jacobian_rank([pair.u, pair.v]) == 2))
    return _verify(GalleryEntry(f"ab-family:{a},{b}", S, ids, checks))


def quadratic_xyz():
    variables = ("a", "b", "c", "x", "y", "z")
    xs = RationalFunction.variables(6)
    a, b, c, x, y, z = xs
    S = PoissonStructure(
        variables,
        {("x", "y"): a * z * z, ("x", "z"): b * y * y, ("y", "z"): c * x * x},
        central=("a", "b", "c"),
    )
    S, jac = _validated(S)
    family = monomial3_family((0, 0, 2), (0, 2, 0), (2, 0, 0))
    ids = [
        Identity("x", "y/z^2", "a - 2*b*(y/z)^3"),
        Identity("x/z", "y/z", "a - b*(y/z)^3 + c*(x/z)^3"),
    ]
    checks = [
        jac,
        ("exponents (0,0,2), (0,2,0), (2,0,0) meet a1=b1, a2=c2, b3=c3", family.sufficient_condition_met),
        ("monomial-family jacobiator vanishes", family.jacobiator.is_zero),
    ]
    return _verify(GalleryEntry("quadratic-xyz", S, ids, checks))


NAMES = ("sl2", "sln:<n>", "borel-sl2", "axis", "ab-family:<a>,<b>", "quadratic-xyz")


def gallery(name):
    name = name.strip()
    if name == "sl2":
        return sl2()
    if name == "borel-sl2":
        return borel_sl2()
    if name == "axis":
        return axis()
    if name == "quadratic-xyz":
        return quadratic_xyz()
    if name.startswith("sln:"):
        try:
            n = int(name[4:])
        except ValueError:
            raise ValueError(f"bad size in {name!r}") from None
        return sln(n)
    if name.startswith("ab-family:"):
        try:
            a, b = (int(t) for t in name[len("ab-family:"):].split(","))
        except ValueError:
            raise ValueError(f"expected ab-family:<a>,<b>, got {name!r}") from None
        if a < 0 or b < 0:
            raise ValueError("ab-family exponents must be nonnegative")
        return ab_family(a, b)
    raise ValueError(f"unknown gallery entry {name!r}; known: {', '.join(NAMES)}")
