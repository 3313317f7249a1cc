"""Poisson structures on Q(x_1, ..., x_n) and their brackets.

A structure is fixed by the functions pi_ij = {x_i, x_j}; for arbitrary
f, g the bracket is

    {f, g} = sum_{i<j} pi_ij (d_i f d_j g - d_j f d_i g).

``bracket_rational`` evaluates this sum directly and is the reference
implementation. For log-canonical structures (pi_ij = w_ij x_i x_j with a
scalar skew matrix W) two monomials bracket to a single monomial,

    {x^I, x^J} = (I W J^T) x^(I+J),

and ``bracket_laurent`` sums that over the supports of f and g. The two
routes share no code beyond polynomial arithmetic, which is what makes
their agreement a meaningful test.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .algebra.laurent import LaurentPolynomial, add_exps, as_scalar, divide_exact
from .algebra.rational import RationalFunction
from .algebra.gcd import lcm_multivariate
from .errors import DimensionError, InternalConsistencyError, NotLogCanonicalError, StructureError


class SkewMatrix:
    """A skew-symmetric matrix of exact rationals."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(as_scalar(v) for v in row) for row in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionError("skew matrix must be square")
        for i in range(n):
            if rows[i][i]:
                raise StructureError(f"diagonal entry ({i},{i}) is {rows[i][i]}, not 0")
            for j in range(i + 1, n):
                if rows[i][j] != -rows[j][i]:
                    raise StructureError(f"entries ({i},{j}) and ({j},{i}) are not negatives")
        self.n = n
        self.rows = rows

    @classmethod
    def from_upper(cls, n, entries):
        """Build from ``{(i, j): w_ij}`` with i < j; missing entries are 0."""
        rows = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), w in entries.items():
            if not 0 <= i < j < n:
                raise DimensionError(f"index pair {(i, j)} is not i < j < {n}")
            w = as_scalar(w)
            rows[i][j], rows[j][i] = w, -w
        return cls(rows)

    @classmethod
    def zero(cls, n):
        return cls([[0] * n for _ in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if isinstance(other, SkewMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"SkewMatrix({[[str(v) for v in r] for r in self.rows]})"

    def upper(self):
        """Nonzero entries above the diagonal as ``{(i, j): w_ij}``."""
        return {
            (i, j): self.rows[i][j]
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.rows[i][j]
        }

    def apply(self, J):
        """The column vector W J^T."""
        return tuple(sum(w * j for w, j in zip(row, J) if w and j) for row in self.rows)


def m_form(omega, I, J):
    """M^I_J = sum_{k<l} w_kl (i_k j_l - i_l j_k), the sum of weighted 2x2 minors."""
    n = omega.n
    if len(I) != n or len(J) != n:
        raise DimensionError(f"exponent vectors must have length {n}")
    total = Fraction(0)
    for (k, l), w in omega.upper().items():
        total += w * (I[k] * J[l] - I[l] * J[k])
    return total.numerator if total.denominator == 1 else total


def bracket_monomial(omega, I, J):
    """{x^I, x^J} = M^I_J x^(I+J) for log-canonical W."""
    I, J = tuple(I), tuple(J)
    m = m_form(omega, I, J)
    return LaurentPolynomial.monomial(add_exps(I, J), m) if m else LaurentPolynomial.zero(omega.n)


def bracket_laurent(omega, f, g):
    """{f, g} for Laurent polynomials under the log-canonical matrix W."""
    n = omega.n
    if f.n != n or g.n != n:
        raise DimensionError(f"operands must have {n} variables")
    weighted = [(J, omega.apply(J), b) for J, b in g.raw_items()]
    out = {}
    for I, a in f.raw_items():
        for J, wj, b in weighted:
            m = sum(i * w for i, w in zip(I, wj) if i and w)
            if m:
                K = add_exps(I, J)
                c = out.get(K, 0) + a * b * m
                if c:
                    out[K] = c
                else:
                    out.pop(K, None)
    return LaurentPolynomial(n, out)


def _as_rational(n, f):
    if isinstance(f, RationalFunction):
        if f.n != n:
            raise DimensionError(f"expected {n} variables, got {f.n}")
        return f
    if isinstance(f, LaurentPolynomial):
        if f.n != n:
            raise DimensionError(f"expected {n} variables, got {f.n}")
        return RationalFunction(f)
    if isinstance(f, (int, Fraction)) and not isinstance(f, bool):
        return RationalFunction.constant(n, f)
    raise TypeError(f"cannot use {type(f).__name__} as a function")


class PoissonStructure:
    """Structure functions pi_ij = {x_i, x_j} on named variables.

    ``brackets`` maps index pairs to RationalFunctions (or anything
    ``RationalFunction`` accepts). Either orientation may be given; if both
    are, they must be negatives of each other. Variables listed in
    ``central`` are Poisson-central parameters and may not appear in any
    nonzero pair. The structure is classified as log-canonical whenever
    every pi_ij is a scalar multiple of x_i x_j.

    Jacobi is not checked here; ``structure_validate`` does that and
    returns a copy with ``jacobi_validated`` set.
    """

    def __init__(self, variables, brackets, central=()):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise StructureError("duplicate variable names")
        n = len(variables)
        index = {name: k for k, name in enumerate(variables)}
        central_idx = frozenset(index[c] if isinstance(c, str) else c for c in central)
        if any(not 0 <= c < n for c in central_idx):
            raise StructureError("central parameter out of range")
        pi = {}
        for key, value in brackets.items():
            i, j = (index[k] if isinstance(k, str) else k for k in key)
            if not (0 <= i < n and 0 <= j < n):
                raise StructureError(f"pair {key} out of range")
            value = _as_rational(n, value)
            if i == j:
                if not value.is_zero:
                    raise StructureError(f"{{{variables[i]},{variables[i]}}} must be 0")
                continue
            if i > j:
                i, j, value = j, i, -value
            if (i, j) in pi and pi[(i, j)] != value:
                raise StructureError(
                    f"{{{variables[i]},{variables[j]}}} given twice with inconsistent values"
                )
            pi[(i, j)] = value
        for (i, j), value in pi.items():
            if not value.is_zero and (i in central_idx or j in central_idx):
                raise StructureError(
                    f"central parameter has nonzero bracket {{{variables[i]},{variables[j]}}}"
                )
        self.variables = variables
        self.n = n
        self.pi = {k: v for k, v in sorted(pi.items()) if not v.is_zero}
        self.central = central_idx
        self.omega = self._detect_omega()
        self.jacobi_validated = False

    @classmethod
    def log_canonical(cls, omega, variables=None, central=()):
        if not isinstance(omega, SkewMatrix):
            omega = SkewMatrix(omega)
        n = omega.n
        if variables is None:
            variables = [f"x{k + 1}" for k in range(n)]
        xs = RationalFunction.variables(n)
        brackets = {(i, j): (xs[i] * xs[j]).scale(w) for (i, j), w in omega.upper().items()}
        return cls(variables, brackets, central)

    def _detect_omega(self):
        rows = [[Fraction(0)] * self.n for _ in range(self.n)]
        for (i, j), value in self.pi.items():
            e = [0] * self.n
            e[i] += 1
            e[j] += 1
            if not (value.is_laurent() and value.num.is_constant() and value.mono == tuple(e)):
                return None
            w = value.num.constant_value()
            rows[i][j], rows[j][i] = w, -w
        return SkewMatrix(rows)

    @property
    def kind(self):
        return "log_canonical" if self.omega is not None else "general"

    @property
    def is_log_canonical(self):
        return self.omega is not None

    def entry(self, i, j):
        """pi_ij for any ordered pair."""
        if i == j:
            return RationalFunction.zero(self.n)
        if i < j:
            return self.pi.get((i, j), RationalFunction.zero(self.n))
        return -self.pi.get((j, i), RationalFunction.zero(self.n))

    def index(self, name):
        return self.variables.index(name)

    def var(self, name):
        return RationalFunction.variable(self.n, self.index(name))

    def parse(self, text):
        from .io.expr import parse_expr

        return parse_expr(text, self.variables)

    def format(self, f):
        from .io.expr import format_expr

        return format_expr(f, self.variables)

    @cached_property
    def _cleared(self):
        """(D, {(i,j): P_ij}) with pi_ij = P_ij / D over a common denominator."""
        dens = [v.den for v in self.pi.values() if not v.is_laurent()]
        D = LaurentPolynomial.one(self.n)
        for d in dens:
            D = lcm_multivariate(D, d)
        table = {}
        for key, v in self.pi.items():
            if v.is_laurent():
                table[key] = v.numerator() * D
            else:
                table[key] = divide_exact(v.num * D, v.den).shift(v.mono)
        return D, table

    def validated(self):
        clone = object.__new__(PoissonStructure)
        clone.__dict__.update(self.__dict__)
        clone.jacobi_validated = True
        return clone

    def __repr__(self):
        rel = ", ".join(
            f"{{{self.variables[i]},{self.variables[j]}}}={self.format(v)}"
            for (i, j), v in self.pi.items()
        )
        return f"PoissonStructure({list(self.variables)}, {rel or 'zero'})"


def _gradient_numerators(f):
    """N, q and the numerators A_k of d_k f = A_k / q^2 (or / 1 when q = 1)."""
    N = f.numerator()
    q = f.den
    if q.is_constant():
        return N, q, [N.partial(k) for k in range(f.n)], False
    grads = []
    for k in range(f.n):
        dq = q.partial(k)
        dN = N.partial(k)
        grads.append(dN * q - N * dq if not dq.is_zero else dN * q)
    return N, q, grads, True


def bracket_rational(S, f, g):
    """Reference bracket from the structure functions, on one common denominator."""
    f = _as_rational(S.n, f)
    g = _as_rational(S.n, g)
    if f.is_zero or g.is_zero or f.is_constant() or g.is_constant():
        return RationalFunction.zero(S.n)
    D, table = S._cleared
    _, qf, A, sq_f = _gradient_numerators(f)
    _, qg, B, sq_g = _gradient_numerators(g)
    num = LaurentPolynomial.zero(S.n)
    for (i, j), P in table.items():
        if (A[i].is_zero or B[j].is_zero) and (A[j].is_zero or B[i].is_zero):
            continue
        num = num + P * (A[i] * B[j] - A[j] * B[i])
    if num.is_zero:
        return RationalFunction.zero(S.n)
    den = D
    hints = []
    if sq_f:
        den = den * qf * qf
        hints.append(qf)
    if sq_g:
        den = den * qg * qg
        hints.append(qg)
    if not D.is_constant():
        hints.append(D)
    return RationalFunction(num, den, hints=tuple(hints))


def bracket(S, f, g):
    """{f, g}, via the monomial kernel when S is log-canonical and both inputs are Laurent."""
    f = _as_rational(S.n, f)
    g = _as_rational(S.n, g)
    if S.omega is not None and f.is_laurent() and g.is_laurent():
        return RationalFunction(bracket_laurent(S.omega, f.numerator(), g.numerator()))
    return bracket_rational(S, f, g)


def jacobiator(S, f, g, h):
    """{f,{g,h}} + {g,{h,f}} + {h,{f,g}} through the reference bracket."""
    br = bracket_rational
    return br(S, f, br(S, g, h)) + br(S, g, br(S, h, f)) + br(S, h, br(S, f, g))


@dataclass
class ValidationReport:
    valid: bool
    failures: list = field(default_factory=list)
    structure: PoissonStructure = None

    def __str__(self):
        if self.valid:
            return "valid"
        names = self.structure.variables
        lines = ["invalid"]
        for (i, j, k), J in self.failures:
            lines.append(f"  ({names[i]},{names[j]},{names[k]}): {self.structure.format(J)}")
        return "\n".join(lines)


def structure_validate(S):
    """Check Jacobi on every coordinate triple i<j<k.

    Skewness and the central rows are enforced at construction, so only
    Jacobi can fail here.
    """
    xs = RationalFunction.variables(S.n)
    active = [k for k in range(S.n) if k not in S.central]
    failures = []
    for a in range(len(active)):
        for b in range(a + 1, len(active)):
            for c in range(b + 1, len(active)):
                i, j, k = active[a], active[b], active[c]
                J = jacobiator(S, xs[i], xs[j], xs[k])
                if not J.is_zero:
                    failures.append(((i, j, k), J))
    valid = not failures
    return ValidationReport(valid, failures, S.validated() if valid else S)


def check_log_canonical(S, gs):
    """Return W' with {g_i, g_j} = w'_ij g_i g_j, or raise NotLogCanonicalError."""
    gs = [_as_rational(S.n, g) for g in gs]
    if any(g.is_zero for g in gs):
        raise ValueError("check_log_canonical needs nonzero functions")
    k = len(gs)
    rows = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            ratio = bracket_rational(S, gs[i], gs[j]) / (gs[i] * gs[j])
            if not ratio.is_constant():
                raise NotLogCanonicalError(
                    (i, j), ratio, f"{{g{i + 1},g{j + 1}}}/(g{i + 1} g{j + 1}) is not constant"
                )
            rows[i][j] = ratio.constant_value()
            rows[j][i] = -rows[i][j]
    return SkewMatrix(rows)


@dataclass
class MonomialFamily:
    structure: PoissonStructure
    jacobiator: RationalFunction
    closed_form: RationalFunction
    sufficient_condition_met: bool


def _term(n, exps, coeff):
    return RationalFunction.monomial(exps + (0,) * (n - len(exps)), 1).scale(coeff) if coeff else RationalFunction.zero(n)


def monomial3_family(a, b, c, A=None, B=None, C=None):
    """{x,y} = A x^a, {x,z} = B x^b, {y,z} = C x^c on (x, y, z).

    Coefficients left as ``None`` become Poisson-central symbols named
    A, B, C appended after x, y, z, so the jacobiator can be compared with
    the three-term closed form as an identity in those symbols.
    """
    a, b, c = tuple(a), tuple(b), tuple(c)
    coeffs = {"A": A, "B": B, "C": C}
    symbolic = [name for name, v in coeffs.items() if v is None]
    variables = ("x", "y", "z") + tuple(symbolic)
    n = len(variables)

    def coef(name):
        if coeffs[name] is None:
            return RationalFunction.variable(n, variables.index(name))
        return RationalFunction.constant(n, as_scalar(coeffs[name]))

    cA, cB, cC = coef("A"), coef("B"), coef("C")
    S = PoissonStructure(
        variables,
        {
            (0, 1): cA * _term(n, a, 1),
            (0, 2): cB * _term(n, b, 1),
            (1, 2): cC * _term(n, c, 1),
        },
        central=symbolic,
    )
    xs = RationalFunction.variables(n)
    J = jacobiator(S, xs[0], xs[1], xs[2])
    a1, a2, a3 = a
    b1, b2, b3 = b
    c1, c2, c3 = c
    closed = (
        cA * cB * _term(n, (a1 + b1 - 1, a2 + b2, a3 + b3), b1 - a1)
        + cA * cC * _term(n, (a1 + c1, a2 + c2 - 1, a3 + c3), c2 - a2)
        + cB * cC * _term(n, (b1 + c1, b2 + c2, b3 + c3 - 1), c3 - b3)
    )
    if J != closed:
        raise InternalConsistencyError(
            f"jacobiator {S.format(J)} differs from the closed form {S.format(closed)}"
        )
    return MonomialFamily(S, J, closed, a1 == b1 and a2 == c2 and b3 == c3)
