"""Small exact linear algebra over Fractions (lists of lists)."""

from fractions import Fraction
from math import gcd, isqrt


def rref(rows):
    """Reduced row echelon form; returns ``(matrix, pivot_columns)``."""
    m = [[Fraction(v) for v in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows):
    if not rows:
        return 0
    return len(rref(rows)[1])


def solve(columns, target):
    """Coefficients ``c`` with ``sum_i c_i * columns[i] == target``, or None.

    ``columns`` are vectors of equal length; the solution is unique when
    they are linearly independent.
    """
    k = len(columns)
    length = len(target)
    aug = [[columns[i][r] for i in range(k)] + [target[r]] for r in range(length)]
    m, pivots = rref(aug)
    if k in pivots:
        return None
    sol = [Fraction(0)] * k
    for row, c in zip(m, pivots):
        sol[c] = row[k]
    return sol


def identity(d):
    return [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matpow(a, k):
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = matmul(result, base)
        k >>= 1
        if k:
            base = matmul(base, base)
    return result


def is_zero_matrix(a):
    return all(not v for row in a for v in row)


def charpoly(a):
    """Coefficients of det(t*I - A), highest degree first (Faddeev-LeVerrier)."""
    d = len(a)
    coeffs = [Fraction(1)]
    m = [[Fraction(0)] * d for _ in range(d)]
    ident = identity(d)
    for k in range(1, d + 1):
        m = matmul(a, m)
        m = [[m[i][j] + coeffs[-1] * ident[i][j] for j in range(d)] for i in range(d)]
        am = matmul(a, m)
        trace = sum(am[i][i] for i in range(d))
        coeffs.append(-trace / k)
    return coeffs


def poly_eval(coeffs, x):
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def _divisors(n, limit=10**7):
    n = abs(n)
    if n > limit:
        return None
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(coeffs):
    """Distinct rational roots of a polynomial (highest degree first).

    Uses the rational root theorem after clearing denominators; returns
    None when the constant term is too large to enumerate divisors.
    """
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and not coeffs[0]:
        coeffs.pop(0)
    roots = []
    while coeffs and not coeffs[-1]:
        coeffs.pop()
        if 0 not in roots:
            roots.append(Fraction(0))
    if len(coeffs) <= 1:
        return roots
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    ps, qs = _divisors(ints[-1]), _divisors(ints[0])
    if ps is None or qs is None:
        return None
    for p in ps:
        for q in qs:
            for s in (1, -1):
                r = Fraction(s * p, q)
                if r not in roots and poly_eval(coeffs, r) == 0:
                    roots.append(r)
    return sorted(roots)


def nullspace(rows, ncols=None):
    """A basis of {v : rows * v = 0}."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(m, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis
