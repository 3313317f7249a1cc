"""Seeded random inputs shared by the property and acceptance tests."""

from fractions import Fraction

import sympy

from poisson_lab import LaurentPolynomial, PoissonStructure, RationalFunction, SkewMatrix


def random_laurent(rng, n, max_terms=6, lo=-3, hi=3, coeffs=(-5, 5)):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(lo, hi) for _ in range(n))
        c = rng.randint(*coeffs)
        if c:
            terms[e] = Fraction(c, rng.choice((1, 1, 1, 2, 3)))
    return LaurentPolynomial(n, terms)


def random_polynomial(rng, n, max_degree=3, max_terms=4):
    """Nonzero polynomial with nonnegative exponents and total degree <= max_degree."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            d = rng.randint(0, max_degree)
            e = [0] * n
            for _ in range(d):
                e[rng.randrange(n)] += 1
            c = rng.randint(-4, 4)
            if c:
                terms[tuple(e)] = c
        p = LaurentPolynomial(n, terms)
        if not p.is_zero:
            return p


def random_rational(rng, n, max_degree=3):
    return RationalFunction(random_polynomial(rng, n, max_degree), random_polynomial(rng, n, max_degree))


def random_omega(rng, n, lo=-3, hi=3):
    return SkewMatrix.from_upper(
        n, {(i, j): rng.randint(lo, hi) for i in range(n) for j in range(i + 1, n)}
    )


def random_log_canonical(rng, n, lo=-3, hi=3):
    return PoissonStructure.log_canonical(random_omega(rng, n, lo, hi))


def sympy_symbols(n):
    return sympy.symbols(f"x1:{n + 1}")


def to_sympy(f, xs):
    """A sympy expression for a LaurentPolynomial or RationalFunction."""
    if isinstance(f, RationalFunction):
        return to_sympy(f.numerator(), xs) / to_sympy(f.den, xs)
    total = sympy.Integer(0)
    for e, c in f.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for x, k in zip(xs, e):
            term *= x**k
        total += term
    return total


def sympy_bracket(pi, f, g, xs):
    """Poisson bracket from a structure matrix by sympy differentiation."""
    n = len(xs)
    total = 0
    for i in range(n):
        for j in range(n):
            if pi[i][j] != 0:
                total += sympy.diff(f, xs[i]) * sympy.diff(g, xs[j]) * pi[i][j]
    return sympy.cancel(total)


def structure_matrix(S, xs):
    return [[to_sympy(S.entry(i, j), xs) for j in range(S.n)] for i in range(S.n)]


def _power_of(term, x):
    coeff, rest = sympy.factor(term).as_independent(x, as_Add=False)
    rest = sympy.powsimp(rest)
    if rest == 1:
        return coeff, 0
    base, exp = rest.as_base_exp()
    if base != x:
        raise ValueError(f"term {term} is not a monomial in {x}")
    return coeff, int(exp)


def sympy_iterated_coefficient(expr, index, xs):
    """[x^I] of expr in the iterated Laurent field, outermost variable last, via sympy series."""
    for x, k in reversed(list(zip(xs, index))):
        s = sympy.expand(sympy.series(expr, x, 0, max(k + 1, 1)).removeO())
        total = sympy.S.Zero
        for term in sympy.Add.make_args(s):
            if term == 0:
                continue
            coeff, power = _power_of(term, x)
            if power == k:
                total += coeff
        expr = sympy.cancel(total)
        if expr == 0:
            return sympy.S.Zero
    return expr
