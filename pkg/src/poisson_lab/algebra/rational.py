"""Rational functions in n variables with a unique canonical form.

A nonzero element is stored as ``x^V * p / q`` where

* ``p`` and ``q`` have nonnegative exponents and are divisible by no variable,
* ``gcd(p, q) = 1``,
* ``q`` is monic (leading grlex coefficient 1).

Zero is ``V = 0, p = 0, q = 1``. Equality is field-by-field comparison.
"""

import random
from fractions import Fraction

from ..errors import DimensionError
from .gcd import gcd_multivariate
from .laurent import LaurentPolynomial, as_scalar, divide_exact, sub_exps
from .linalg import rank as matrix_rank


def _strip_monomial(p):
    m = p.min_exponents()
    if any(m):
        return p.shift(tuple(-v for v in m)), m
    return p, m


def _is_one(p):
    return p.is_constant() and p.constant_value() == 1


def _reduce(p, q, hints=()):
    """Cancel the common factor of valuation-free polynomials p, q."""
    for h in hints:
        if h.is_constant() or p.is_constant():
            continue
        while not h.is_zero:
            pq = divide_exact(p, h)
            if pq is None:
                break
            qq = divide_exact(q, h)
            if qq is None:
                break
            p, q = pq, qq
    if q.is_constant() or p.is_zero:
        return p, q
    g = gcd_multivariate(p, q)
    if not g.is_constant():
        p, q = divide_exact(p, g), divide_exact(q, g)
    return p, q


class RationalFunction:
    """An element of Q(x_1, ..., x_n) in canonical form."""

    __slots__ = ("n", "mono", "num", "den", "_hash")

    def __init__(self, num, den=None, *, hints=(), coprime=False):
        if not isinstance(num, LaurentPolynomial):
            raise TypeError("numerator must be a LaurentPolynomial")
        n = num.n
        if den is None:
            den = LaurentPolynomial.one(n)
        if den.n != n:
            raise DimensionError(f"variable counts differ: {n} vs {den.n}")
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        self.n = n
        self._hash = None
        if num.is_zero:
            self.mono = (0,) * n
            self.num = LaurentPolynomial.zero(n)
            self.den = LaurentPolynomial.one(n)
            return
        p, mp = _strip_monomial(num)
        q, mq = _strip_monomial(den)
        if not coprime:
            p, q = _reduce(p, q, hints)
        lc = q.leading_coefficient()
        if lc != 1:
            p = p.scale(1 / lc)
            q = q.scale(1 / lc)
        self.mono = sub_exps(mp, mq)
        self.num = p
        self.den = q

    @classmethod
    def _canonical(cls, n, mono, num, den):
        obj = cls.__new__(cls)
        obj.n = n
        obj.mono = mono
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    # -- constructors -----------------------------------------------------
    @classmethod
    def constant(cls, n, c):
        c = as_scalar(c)
        if not c:
            return cls.zero(n)
        return cls._canonical(n, (0,) * n, LaurentPolynomial.constant(n, c), LaurentPolynomial.one(n))

    @classmethod
    def zero(cls, n):
        return cls._canonical(n, (0,) * n, LaurentPolynomial.zero(n), LaurentPolynomial.one(n))

    @classmethod
    def one(cls, n):
        return cls.constant(n, 1)

    @classmethod
    def variable(cls, n, k):
        return cls(LaurentPolynomial.variable(n, k))

    @classmethod
    def variables(cls, n):
        return tuple(cls.variable(n, k) for k in range(n))

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls(LaurentPolynomial.monomial(exps, coeff))

    # -- views ------------------------------------------------------------
    @property
    def is_zero(self):
        return self.num.is_zero

    def __bool__(self):
        return not self.num.is_zero

    def numerator(self):
        """Laurent numerator ``x^V p`` (denominator is ``q``)."""
        return self.num.shift(self.mono)

    def denominator(self):
        return self.den

    def is_laurent(self):
        return _is_one(self.den)

    def as_laurent(self):
        if not self.is_laurent():
            raise ValueError("not a Laurent polynomial")
        return self.numerator()

    def is_constant(self):
        return self.num.is_constant() and not any(self.mono) and _is_one(self.den)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num.constant_value()

    def scalar_ratio(self, other):
        """Return c with ``self == c * other`` if it exists, else None."""
        if other.is_zero:
            raise ZeroDivisionError("ratio against zero")
        if self.is_zero:
            return Fraction(0)
        if self.mono != other.mono or self.den != other.den or len(self.num) != len(other.num):
            return None
        e, c = self.num.leading_term()
        c2 = other.num.coefficient(e)
        if not c2:
            return None
        r = c / c2
        return r if self.num == other.num.scale(r) else None

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.n != self.n:
                raise DimensionError(f"variable counts differ: {self.n} vs {other.n}")
            return other
        if isinstance(other, LaurentPolynomial):
            if other.n != self.n:
                raise DimensionError(f"variable counts differ: {self.n} vs {other.n}")
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RationalFunction.constant(self.n, other)
        raise TypeError(f"cannot combine RationalFunction with {type(other).__name__}")

    def __neg__(self):
        return RationalFunction._canonical(self.n, self.mono, -self.num, self.den)

    def __pos__(self):
        return self

    def _addsub(self, other, sign):
        if self.is_zero:
            return -other if sign < 0 else other
        if other.is_zero:
            return self
        n = self.n
        m = tuple(min(a, b) for a, b in zip(self.mono, other.mono))
        a = self.num.shift(sub_exps(self.mono, m))
        c = other.num.shift(sub_exps(other.mono, m))
        if sign < 0:
            c = -c
        b, d = self.den, other.den
        # Henrici: g = gcd(b, d); t = a d/g + c b/g; result t/(b d/g) reduced by gcd(t, g)
        if b == d:
            t = a + c
            if t.is_zero:
                return RationalFunction.zero(n)
            return RationalFunction(t.shift(m), b, hints=(b,))
        if _is_one(b) or _is_one(d):
            g = LaurentPolynomial.one(n)
        else:
            g = gcd_multivariate(b, d)
        if g.is_constant():
            t = a * d + c * b
            if t.is_zero:
                return RationalFunction.zero(n)
            # a/b, c/d reduced and gcd(b, d) = 1 imply gcd(t, b*d) = 1
            return RationalFunction(t.shift(m), b * d, coprime=True)
        bg, dg = divide_exact(b, g), divide_exact(d, g)
        t = a * dg + c * bg
        if t.is_zero:
            return RationalFunction.zero(n)
        return RationalFunction(t.shift(m), bg * d, hints=(g,))

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self._addsub(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self._addsub(other, -1)

    def __rsub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return other._addsub(self, -1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = self.n
        if self.is_zero or other.is_zero:
            return RationalFunction.zero(n)
        mono = tuple(a + b for a, b in zip(self.mono, other.mono))
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = LaurentPolynomial.one(n) if _is_one(d) else gcd_multivariate(a, d)
        g2 = LaurentPolynomial.one(n) if _is_one(b) else gcd_multivariate(c, b)
        if not g1.is_constant():
            a, d = divide_exact(a, g1), divide_exact(d, g1)
        if not g2.is_constant():
            c, b = divide_exact(c, g2), divide_exact(b, g2)
        num, den = a * c, b * d
        lc = den.leading_coefficient()
        if lc != 1:
            num, den = num.scale(1 / lc), den.scale(1 / lc)
        return RationalFunction._canonical(n, mono, num, den)

    __rmul__ = __mul__

    def scale(self, c):
        c = as_scalar(c)
        if not c:
            return RationalFunction.zero(self.n)
        return RationalFunction._canonical(self.n, self.mono, self.num.scale(c), self.den)

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero rational function")
        lc = self.num.leading_coefficient()
        return RationalFunction._canonical(
            self.n, tuple(-v for v in self.mono), self.den.scale(1 / lc), self.num.scale(1 / lc)
        )

    def __truediv__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        mono = tuple(v * k for v in self.mono)
        return RationalFunction._canonical(self.n, mono, self.num ** k, self.den ** k)

    def partial(self, k):
        """Derivative in x_k (0-based) by the quotient rule."""
        if not 0 <= k < self.n:
            raise IndexError(f"variable index {k} out of range for n={self.n}")
        if self.is_zero:
            return self
        N = self.numerator()
        q = self.den
        dq = q.partial(k)
        if dq.is_zero:
            return RationalFunction(N.partial(k), q, hints=(q,))
        return RationalFunction(N.partial(k) * q - N * dq, q * q, hints=(q,))

    def evaluate(self, point):
        d = self.den.evaluate(point)
        if not d:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return self.numerator().evaluate(point) / d

    def permute(self, perm):
        return RationalFunction(self.numerator().permute(perm), self.den.permute(perm))

    def embed(self, n, positions):
        return RationalFunction._canonical(
            n,
            tuple(self.mono[positions.index(j)] if j in positions else 0 for j in range(n)),
            self.num.embed(n, positions),
            self.den.embed(n, positions),
        )

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return (
                self.n == other.n
                and self.mono == other.mono
                and self.num == other.num
                and self.den == other.den
            )
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == RationalFunction.constant(self.n, other)
        if isinstance(other, LaurentPolynomial):
            return other.n == self.n and self == RationalFunction(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.mono, self.num, self.den))
        return self._hash

    def __repr__(self):
        from ..io.expr import format_expr

        names = [f"x{k + 1}" for k in range(self.n)]
        return f"RationalFunction({format_expr(self, names)!r})"


def rf_normalize(num, den):
    """Canonical RationalFunction for ``num / den``."""
    if not isinstance(num, LaurentPolynomial):
        num = LaurentPolynomial.constant(den.n, num)
    return RationalFunction(num, den)


def rf_arith(op, f, g):
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    raise ValueError(f"unknown operation {op!r}")


def _random_point(rng, n, fs):
    for _ in range(20):
        pt = [Fraction(rng.randint(-50, 50), rng.randint(1, 7)) for _ in range(n)]
        if all(v != 0 for v in pt) and all(f.den.evaluate(pt) for f in fs):
            return pt
    return None


def jacobian_rank(fs):
    """Rank over Q(x) of the Jacobian matrix of ``fs``.

    In characteristic 0 this is the transcendence degree of Q(fs), so a
    rank equal to ``len(fs)`` certifies algebraic independence.

    Evaluating at a point can only lower the rank, so a full-rank
    evaluation is accepted as is; otherwise we eliminate exactly over
    the function field.
    """
    fs = list(fs)
    if not fs:
        return 0
    n = fs[0].n
    if any(f.n != n for f in fs):
        raise DimensionError("mixed ambient variable counts")
    rows = [[f.partial(k) for k in range(n)] for f in fs]
    full = min(len(fs), n)
    rng = random.Random(len(fs) * 1009 + n)
    pt = _random_point(rng, n, [e for row in rows for e in row])
    if pt is not None:
        numeric = [[e.evaluate(pt) for e in row] for row in rows]
        if matrix_rank(numeric) == full:
            return full
    return _symbolic_rank(rows)


def _symbolic_rank(rows):
    rows = [list(r) for r in rows]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not rows[i][col].is_zero), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inverse()
        for i in range(r + 1, len(rows)):
            if rows[i][col].is_zero:
                continue
            fac = rows[i][col] * inv
            rows[i] = [a - fac * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


__all__ = [
    "RationalFunction",
    "rf_normalize",
    "rf_arith",
    "jacobian_rank",
]
