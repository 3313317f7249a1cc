"""Coefficients of rational functions as iterated Laurent series.

The default field is built by adjoining x_1 first and x_n last, so x_n is
the outermost variable: a rational function is a Laurent series in x_n
whose coefficients are rational functions in x_1..x_{n-1}, each expanded
the same way. ``order`` lists variables innermost first; ``order=(1, 0)``
on two variables makes x_1 the outermost.

For p/q with x_n-valuations v_p, v_q the series starts at x_n^(v_p - v_q).
Writing p = sum P_i x_n^(v_p+i) and q = sum Q_i x_n^(v_q+i) (Q_0 != 0), the
coefficients c_j satisfy

    c_j = (P_j - sum_{i=1..j} Q_i c_{j-i}) / Q_0,

kept fraction-free as c_j = N_j / Q_0^(j+1) with

    N_j = P_j Q_0^j - sum_{i=1..j} Q_i N_{j-i} Q_0^(i-1).

No GCDs are needed: the recursion only ever divides by Q_0, which has
nonzero constant term in the next variable once its valuation is split off.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra.laurent import LaurentPolynomial
from .errors import DimensionError


@dataclass(frozen=True)
class SeriesWindow:
    """Inclusive per-variable exponent bounds ``[(lo, hi), ...]``."""

    bounds: tuple

    def __post_init__(self):
        b = tuple((int(lo), int(hi)) for lo, hi in self.bounds)
        for lo, hi in b:
            if lo > hi:
                raise ValueError(f"window bound {lo}..{hi} is inverted")
        object.__setattr__(self, "bounds", b)

    @property
    def n(self):
        return len(self.bounds)

    def __contains__(self, exps):
        return all(lo <= e <= hi for e, (lo, hi) in zip(exps, self.bounds))

    def points(self):
        from itertools import product

        return product(*(range(lo, hi + 1) for lo, hi in self.bounds))


@dataclass(frozen=True)
class TruncatedSeries:
    window: SeriesWindow
    order: tuple
    terms: dict = field(default_factory=dict)

    def __getitem__(self, exps):
        exps = tuple(exps)
        if exps not in self.window:
            raise KeyError(f"{exps} lies outside the window")
        return self.terms.get(exps, Fraction(0))

    def items(self):
        return sorted(self.terms.items())


def _resolve_order(n, order):
    if order is None:
        return tuple(range(n))
    order = tuple(order)
    if sorted(order) != list(range(n)):
        raise ValueError(f"order {order} is not a permutation of 0..{n - 1}")
    return order


def _split_last(p, k):
    """Split off x_k^valuation; return (valuation, {i: coefficient of x_k^(v+i)})."""
    v = min(e[k] for e, _ in p.raw_items())
    parts = {}
    for e, c in p.raw_items():
        parts.setdefault(e[k] - v, {})[e[:k] + (0,) + e[k + 1:]] = c
    return v, {i: LaurentPolynomial._raw(p.n, t) for i, t in parts.items()}


class _Expansion:
    """Lazily computed numerators N_j for one level of the recursion."""

    def __init__(self, num, den, k):
        self.k = k
        vp, self.P = _split_last(num, k)
        vq, self.Q = _split_last(den, k)
        self.start = vp - vq
        self.q0 = self.Q[0]
        self.N = []
        self.q0_pows = [LaurentPolynomial.one(num.n)]

    def q0_pow(self, j):
        while len(self.q0_pows) <= j:
            self.q0_pows.append(self.q0_pows[-1] * self.q0)
        return self.q0_pows[j]

    def numerator(self, j):
        zero = LaurentPolynomial.zero(self.q0.n)
        while len(self.N) <= j:
            m = len(self.N)
            acc = self.P.get(m, zero) * self.q0_pow(m)
            for i in range(1, m + 1):
                qi = self.Q.get(i)
                if qi is not None and not self.N[m - i].is_zero:
                    acc = acc - qi * self.N[m - i] * self.q0_pow(i - 1)
            self.N.append(acc)
        return self.N[j]

    def coefficient(self, j):
        """(numerator, denominator) of the x_k^(start+j) coefficient."""
        return self.numerator(j), self.q0_pow(j + 1)


def _coeff(num, den, target, order, depth):
    if num.is_zero:
        return Fraction(0)
    if depth == 0:
        return num.constant_value() / den.constant_value()
    k = order[depth - 1]
    exp = _Expansion(num, den, k)
    j = target[k] - exp.start
    if j < 0:
        return Fraction(0)
    n_j, d_j = exp.coefficient(j)
    return _coeff(n_j, d_j, target, order, depth - 1)


def _parts(f):
    from .algebra.rational import RationalFunction

    if isinstance(f, RationalFunction):
        return f.numerator(), f.den
    if isinstance(f, LaurentPolynomial):
        return f, LaurentPolynomial.one(f.n)
    raise TypeError(f"expected a rational function, got {type(f).__name__}")


def coefficient(f, exps, order=None):
    """Exact coefficient of ``x^exps`` in the iterated Laurent expansion of ``f``."""
    num, den = _parts(f)
    exps = tuple(exps)
    if len(exps) != num.n:
        raise DimensionError(f"index has length {len(exps)}, expected {num.n}")
    order = _resolve_order(num.n, order)
    return _coeff(num, den, exps, order, num.n)


def constant_term(f, order=None):
    num, _ = _parts(f)
    return coefficient(f, (0,) * num.n, order)


def _expand(num, den, window, order, depth, prefix, out):
    if num.is_zero:
        return
    if depth == 0:
        c = num.constant_value() / den.constant_value()
        if c:
            out[prefix] = c
        return
    k = order[depth - 1]
    lo, hi = window.bounds[k]
    exp = _Expansion(num, den, k)
    for e in range(max(lo, exp.start), hi + 1):
        n_j, d_j = exp.coefficient(e - exp.start)
        _expand(n_j, d_j, window, order, depth - 1, prefix + ((k, e),), out)


def expand_iterated(f, window, order=None):
    """All nonzero coefficients of ``f`` inside ``window`` for the given adjunction order."""
    num, den = _parts(f)
    if not isinstance(window, SeriesWindow):
        window = SeriesWindow(window)
    if window.n != num.n:
        raise DimensionError(f"window has {window.n} variables, expected {num.n}")
    order = _resolve_order(num.n, order)
    raw = {}
    _expand(num, den, window, order, num.n, (), raw)
    terms = {}
    for key, c in raw.items():
        e = [0] * num.n
        for k, v in key:
            e[k] = v
        terms[tuple(e)] = c
    return TruncatedSeries(window=window, order=order, terms=terms)
