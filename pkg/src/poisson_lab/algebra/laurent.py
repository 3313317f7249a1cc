"""Sparse multivariate Laurent polynomials over the rationals.

Exponent vectors are plain tuples of ints. Coefficients are stored as
``int`` when integral and ``fractions.Fraction`` otherwise; public
accessors always hand out ``Fraction``.

The fixed total order on exponent vectors is graded-lexicographic with
``x1 < x2 < ... < xn``: total degree first, then the exponent of the
highest-indexed variable, and so on downwards.
"""

from fractions import Fraction
from numbers import Rational

from ..errors import DimensionError, ExponentOverflowError

_EXP_LIMIT = 2**63


def grlex_key(e):
    return (sum(e), e[::-1])


def check_exponents(e):
    for v in e:
        if v >= _EXP_LIMIT or v < -_EXP_LIMIT:
            raise ExponentOverflowError(f"exponent {v} outside the signed 64-bit range")
    return e


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def as_scalar(c):
    """Coerce an int/Fraction/str like ``"-1/2"`` to an exact Fraction."""
    if isinstance(c, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    if isinstance(c, Rational):
        return Fraction(int(c.numerator), int(c.denominator))
    if isinstance(c, str):
        return Fraction(c.strip())
    raise TypeError(f"cannot use {type(c).__name__} as an exact scalar")


def add_exps(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub_exps(a, b):
    return tuple(x - y for x, y in zip(a, b))


class LaurentPolynomial:
    """Immutable finite sum of rational multiples of Laurent monomials ``x^I``.

    >>> x, y = LaurentPolynomial.variables(2)
    >>> (x + y) * (x - y) == x**2 - y**2
    True
    """

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n, terms=None):
        if n < 0:
            raise ValueError("variable count must be nonnegative")
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(v) for v in e)
            if len(e) != n:
                raise DimensionError(f"exponent {e} has length {len(e)}, expected {n}")
            c = _norm(as_scalar(c))
            if c:
                check_exponents(e)
                clean[e] = _norm(clean.get(e, 0) + c)
                if not clean[e]:
                    del clean[e]
        self.n = n
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n, terms):
        # trusted constructor: keys are valid tuples, values nonzero and normalized
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n, c):
        c = _norm(as_scalar(c))
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def one(cls, n):
        return cls._raw(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, exps, coeff=1):
        exps = tuple(int(v) for v in exps)
        check_exponents(exps)
        c = _norm(as_scalar(coeff))
        return cls._raw(len(exps), {exps: c} if c else {})

    @classmethod
    def variable(cls, n, k):
        if not 0 <= k < n:
            raise IndexError(f"variable index {k} out of range for n={n}")
        e = [0] * n
        e[k] = 1
        return cls._raw(n, {tuple(e): 1})

    @classmethod
    def variables(cls, n):
        return tuple(cls.variable(n, k) for k in range(n))

    # -- inspection -------------------------------------------------------
    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    @property
    def is_zero(self):
        return not self._terms

    def items(self):
        """(exponent, Fraction) pairs in increasing grlex order."""
        for e in sorted(self._terms, key=grlex_key):
            yield e, Fraction(self._terms[e])

    __iter__ = items

    def raw_items(self):
        return self._terms.items()

    def support(self):
        return frozenset(self._terms)

    def coefficient(self, exps):
        return Fraction(self._terms.get(tuple(exps), 0))

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and (0,) * self.n in self._terms)

    def constant_value(self):
        return Fraction(self._terms.get((0,) * self.n, 0))

    def is_monomial(self):
        return len(self._terms) == 1

    def is_polynomial(self):
        """True when no exponent is negative."""
        return all(v >= 0 for e in self._terms for v in e)

    def min_exponents(self):
        if not self._terms:
            return (0,) * self.n
        return tuple(min(col) for col in zip(*self._terms))

    def max_exponents(self):
        if not self._terms:
            return (0,) * self.n
        return tuple(max(col) for col in zip(*self._terms))

    def degree_in(self, k):
        if not self._terms:
            return -1
        return max(e[k] for e in self._terms)

    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def leading_term(self):
        """Largest exponent under grlex together with its coefficient."""
        e = max(self._terms, key=grlex_key)
        return e, Fraction(self._terms[e])

    def leading_coefficient(self):
        return self.leading_term()[1]

    def variables_present(self):
        seen = [False] * self.n
        for e in self._terms:
            for k, v in enumerate(e):
                if v:
                    seen[k] = True
        return [k for k in range(self.n) if seen[k]]

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, LaurentPolynomial):
            other = LaurentPolynomial.constant(self.n, other)
        if other.n != self.n:
            raise DimensionError(f"variable counts differ: {self.n} vs {other.n}")
        return other

    def __neg__(self):
        return LaurentPolynomial._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __add__(self, other):
        try:
            other = self._check(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return LaurentPolynomial._raw(self.n, out)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self._check(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return LaurentPolynomial._raw(self.n, out)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        try:
            other = self._check(other)
        except TypeError:
            return NotImplemented
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        res = {}
        for e, c in out.items():
            if c:
                res[check_exponents(e)] = _norm(c)
        return LaurentPolynomial._raw(self.n, res)

    __rmul__ = __mul__

    def scale(self, c):
        c = _norm(as_scalar(c))
        if not c:
            return LaurentPolynomial.zero(self.n)
        return LaurentPolynomial._raw(self.n, {e: _norm(v * c) for e, v in self._terms.items()})

    def shift(self, exps):
        """Multiply by the monomial ``x^exps``."""
        exps = tuple(exps)
        if not any(exps):
            return self
        return LaurentPolynomial._raw(
            self.n,
            {check_exponents(add_exps(e, exps)): c for e, c in self._terms.items()},
        )

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers exist only for monomials")
            (e, c), = self._terms.items()
            return LaurentPolynomial.monomial(tuple(v * k for v in e), Fraction(c) ** k)
        result = LaurentPolynomial.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def partial(self, k):
        """Derivative with respect to variable ``k`` (0-based)."""
        if not 0 <= k < self.n:
            raise IndexError(f"variable index {k} out of range for n={self.n}")
        out = {}
        for e, c in self._terms.items():
            p = e[k]
            if p:
                e2 = list(e)
                e2[k] -= 1
                out[tuple(e2)] = c * p
        return LaurentPolynomial._raw(self.n, out)

    def euler(self, k):
        """``x_k * d/dx_k``; keeps supports fixed."""
        return LaurentPolynomial._raw(
            self.n, {e: c * e[k] for e, c in self._terms.items() if e[k]}
        )

    def permute(self, perm):
        """Reorder coordinates: new exponent at slot ``j`` is the old one at ``perm[j]``."""
        return LaurentPolynomial._raw(
            self.n, {tuple(e[p] for p in perm): c for e, c in self._terms.items()}
        )

    def embed(self, n, positions):
        """Place these variables at ``positions`` of a larger ambient space."""
        out = {}
        for e, c in self._terms.items():
            e2 = [0] * n
            for v, p in zip(e, positions):
                e2[p] = v
            out[tuple(e2)] = c
        return LaurentPolynomial._raw(n, out)

    def coefficients_in(self, k):
        """Split as ``sum_d C_d x_k^d``; returns ``{d: C_d}`` with C_d free of x_k."""
        out = {}
        for e, c in self._terms.items():
            d = e[k]
            e2 = e[:k] + (0,) + e[k + 1:]
            out.setdefault(d, {})[e2] = c
        return {d: LaurentPolynomial._raw(self.n, t) for d, t in out.items()}

    def evaluate(self, point):
        """Exact evaluation at a full point of rationals."""
        total = Fraction(0)
        for e, c in self._terms.items():
            t = Fraction(c)
            for v, p in zip(point, e):
                if p:
                    t *= Fraction(v) ** p
            total += t
        return total

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == ({(0,) * self.n: _norm(Fraction(other))} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        from ..io.expr import format_laurent

        names = [f"x{k + 1}" for k in range(self.n)]
        return f"LaurentPolynomial({format_laurent(self, names)!r})"


def lp_combine(op, f, g):
    """Add, subtract or multiply two Laurent polynomials over the same variables."""
    if f.n != g.n:
        raise DimensionError(f"variable counts differ: {f.n} vs {g.n}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def lp_partial(f, k):
    return f.partial(k)


def divide_exact(p, d):
    """Quotient ``p / d`` for polynomials with nonnegative exponents, or None.

    Uses the single-divisor division algorithm under grlex; a principal
    ideal's generator is its own Groebner basis, so a nonzero remainder
    certifies non-divisibility.
    """
    if d.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    n = p.n
    if p.is_zero:
        return LaurentPolynomial.zero(n)
    dl, dc = max(d._terms.items(), key=lambda t: grlex_key(t[0]))
    if len(d._terms) == 1:
        out = {}
        for e, c in p._terms.items():
            q = sub_exps(e, dl)
            if min(q) < 0:
                return None
            out[q] = _norm(Fraction(c) / dc)
        return LaurentPolynomial._raw(n, out)
    dterms = [(e, c) for e, c in d._terms.items() if e != dl]
    rem = dict(p._terms)
    quo = {}
    dkey = grlex_key(dl)
    while rem:
        e = max(rem, key=grlex_key)
        q = sub_exps(e, dl)
        if min(q) < 0 or grlex_key(e) < dkey:
            return None
        c = rem.pop(e)
        qc = _norm(Fraction(c) / dc)
        quo[q] = qc
        for e2, c2 in dterms:
            t = add_exps(q, e2)
            s = rem.get(t, 0) - qc * c2
            if s:
                rem[t] = _norm(s)
            else:
                rem.pop(t, None)
    return LaurentPolynomial._raw(n, quo)
