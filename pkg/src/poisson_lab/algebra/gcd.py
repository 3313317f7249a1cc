"""Multivariate polynomial GCD over the rationals.

Works on integer-coefficient polynomials stored as ``{exponent tuple: int}``
dicts. The main routine is a recursive primitive polynomial remainder
sequence: choose a main variable, split off the content (a GCD in the
remaining variables), and run pseudo-remainders on primitive parts,
taking the primitive part of every remainder to keep coefficients small.

The PRS is the fallback. The first choice is the heuristic GCD of Char,
Geddes and Gonnet: evaluate the main variable at a large integer xi,
recurse, rebuild a candidate from its balanced xi-adic digits and keep it
only if it divides both inputs exactly. Pure-Python PRS suffers badly
from intermediate swell once degrees reach ~5 in several variables.

Before either we try to certify coprimality cheaply. If, for every
variable x_k, the univariate images obtained by substituting integers for
the other variables (without killing either leading coefficient in x_k)
have a constant GCD, then the true GCD has degree zero in every variable.
"""

import random
from fractions import Fraction
from math import gcd as igcd, isqrt

from .laurent import LaurentPolynomial, grlex_key


# -- integer dict helpers --------------------------------------------------

def _int_content(a):
    g = 0
    for c in a.values():
        g = igcd(g, c)
        if g == 1:
            break
    return g


def _min_exps(a):
    return tuple(min(col) for col in zip(*a))


def _vars_of(a):
    n = len(next(iter(a)))
    return frozenset(k for k in range(n) if any(e[k] for e in a))


def _is_const(a):
    return len(a) == 1 and not any(next(iter(a)))


def _is_unit(a):
    return _is_const(a) and abs(next(iter(a.values()))) == 1


def _mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _shift(a, m):
    return {tuple(x + y for x, y in zip(e, m)): c for e, c in a.items()}


def _divexact(a, d):
    """Exact quotient over Z, or None when d does not divide a."""
    if not a:
        return {}
    dl = max(d, key=grlex_key)
    dc = d[dl]
    rest = [(e, c) for e, c in d.items() if e != dl]
    rem = dict(a)
    quo = {}
    while rem:
        e = max(rem, key=grlex_key)
        q = tuple(x - y for x, y in zip(e, dl))
        if min(q) < 0:
            return None
        c = rem.pop(e)
        if c % dc:
            return None
        qc = c // dc
        quo[q] = qc
        for e2, c2 in rest:
            t = tuple(x + y for x, y in zip(q, e2))
            s = rem.get(t, 0) - qc * c2
            if s:
                rem[t] = s
            else:
                rem.pop(t, None)
    return quo


def _split(a, k):
    out = {}
    for e, c in a.items():
        out.setdefault(e[k], {})[e[:k] + (0,) + e[k + 1:]] = c
    return out


def _deg(a, k):
    return max(e[k] for e in a)


def _sign_normalize(a):
    if a[max(a, key=grlex_key)] < 0:
        return {e: -c for e, c in a.items()}
    return a


# -- univariate images -----------------------------------------------------

def _univariate_image(a, k, point):
    """Substitute ``point`` for every variable except x_k; returns {deg: int}."""
    out = {}
    for e, c in a.items():
        t = c
        for j, p in enumerate(e):
            if j != k and p:
                t *= point[j] ** p
        out[e[k]] = out.get(e[k], 0) + t
    return out


def _uni_gcd_degree(a, b):
    """Degree of gcd of two univariate {deg: int} polynomials over Q."""
    def to_list(d):
        top = max((i for i, c in d.items() if c), default=-1)
        return [Fraction(d.get(i, 0)) for i in range(top + 1)]

    f, g = to_list(a), to_list(b)
    if len(f) < len(g):
        f, g = g, f
    while g:
        # f mod g
        f = f[:]
        lg = g[-1]
        while len(f) >= len(g):
            q = f[-1] / lg
            off = len(f) - len(g)
            for i, c in enumerate(g):
                f[off + i] -= q * c
            f.pop()
            while f and not f[-1]:
                f.pop()
        f, g = g, f
    return len(f) - 1


def _coprime_certificate(a, b, variables):
    rng = random.Random(0x5EED)
    n = len(next(iter(a)))
    for k in variables:
        lca = _split(a, k)[_deg(a, k)]
        lcb = _split(b, k)[_deg(b, k)]
        for _ in range(3):
            point = [rng.randint(2, 97) * rng.choice((1, -1)) for _ in range(n)]
            if _univariate_image(lca, k, point).get(0) and _univariate_image(lcb, k, point).get(0):
                break
        else:
            return False
        if _uni_gcd_degree(_univariate_image(a, k, point), _univariate_image(b, k, point)) > 0:
            return False
    return True


# -- heuristic GCD -------------------------------------------------------------

def _eval_var(a, k, xi):
    out = {}
    for e, c in a.items():
        e2 = e[:k] + (0,) + e[k + 1:]
        v = out.get(e2, 0) + c * xi ** e[k]
        if v:
            out[e2] = v
        else:
            out.pop(e2, None)
    return out


def _interpolate(h, k, xi):
    out = {}
    i = 0
    half = xi // 2
    while h:
        digit = {}
        for e, c in h.items():
            r = c % xi
            if r > half:
                r -= xi
            if r:
                digit[e] = r
        for e, c in digit.items():
            out[e[:k] + (i,) + e[k + 1:]] = c
        h = {e: (c - digit.get(e, 0)) // xi for e, c in h.items()}
        h = {e: c for e, c in h.items() if c}
        i += 1
    return out


def _heu_gcd(f, g, variables):
    """Return ``(h, f/h, g/h)`` over Z or None when the heuristic gives up."""
    if not variables:
        (e,) = f
        a, b = f[e], g[e]
        h = igcd(a, b)
        return {e: h}, {e: a // h}, {e: b // h}
    cf, cg = _int_content(f), _int_content(g)
    gc = igcd(cf, cg)
    if gc != 1:
        f = {e: c // gc for e, c in f.items()}
        g = {e: c // gc for e, c in g.items()}
    k = variables[-1]
    rest = variables[:-1]
    fn = max(abs(c) for c in f.values())
    gn = max(abs(c) for c in g.values())
    # xi >= 2*min(|f|, |g|) + 2 makes the divisibility check conclusive
    xi = 2 * min(fn, gn) + 29
    for _ in range(6):
        ff, gg = _eval_var(f, k, xi), _eval_var(g, k, xi)
        if ff and gg:
            sub = _heu_gcd(ff, gg, [v for v in rest if any(e[v] for e in ff) or any(e[v] for e in gg)])
            if sub is not None:
                h, cff, cfg = sub
                h = _interpolate(h, k, xi)
                c = _int_content(h)
                if c != 1:
                    h = {e: v // c for e, v in h.items()}
                qf = _divexact(f, h)
                if qf is not None:
                    qg = _divexact(g, h)
                    if qg is not None:
                        return {e: v * gc for e, v in h.items()}, qf, qg
                cff = _interpolate(cff, k, xi)
                h2 = _divexact(f, cff) if cff else None
                if h2:
                    qg = _divexact(g, h2)
                    if qg is not None:
                        return {e: v * gc for e, v in h2.items()}, cff, qg
                cfg = _interpolate(cfg, k, xi)
                h3 = _divexact(g, cfg) if cfg else None
                if h3:
                    qf = _divexact(f, h3)
                    if qf is not None:
                        return {e: v * gc for e, v in h3.items()}, qf, cfg
        xi = 73794 * xi * isqrt(isqrt(xi)) // 27011
    return None


# -- recursive PRS -----------------------------------------------------------

def _prem(a, b, k):
    db = _deg(b, k)
    bs = _split(b, k)
    lcb = bs[db]
    r = a
    while r and _deg(r, k) >= db:
        dr = _deg(r, k)
        lcr = _split(r, k)[dr]
        mono = [0] * len(next(iter(b)))
        mono[k] = dr - db
        t1 = _mul(lcb, r)
        t2 = _mul(_shift(lcr, mono), b)
        out = dict(t1)
        for e, c in t2.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        r = out
    return r


def _content_in(a, k):
    g = None
    for coeff in _split(a, k).values():
        g = coeff if g is None else _zgcd(g, coeff)
        if _is_unit(g):
            break
    return g


def _zgcd(a, b):
    if not a:
        return _sign_normalize(b) if b else {}
    if not b:
        return _sign_normalize(a)
    n = len(next(iter(a)))
    ma, mb = _min_exps(a), _min_exps(b)
    m = tuple(min(x, y) for x, y in zip(ma, mb))
    if any(ma):
        a = _shift(a, tuple(-v for v in ma))
    if any(mb):
        b = _shift(b, tuple(-v for v in mb))
    ca, cb = _int_content(a), _int_content(b)
    c = igcd(ca, cb)
    if ca != 1:
        a = {e: v // ca for e, v in a.items()}
    if cb != 1:
        b = {e: v // cb for e, v in b.items()}
    g = _zgcd_primitive(a, b)
    if c != 1:
        g = {e: v * c for e, v in g.items()}
    if any(m):
        g = _shift(g, m)
    return _sign_normalize(g)


def _one(n):
    return {(0,) * n: 1}


def _zgcd_primitive(a, b):
    """a, b nonzero, integer-primitive, not divisible by any variable."""
    n = len(next(iter(a)))
    if _is_const(a) or _is_const(b):
        return _one(n)
    va, vb = _vars_of(a), _vars_of(b)
    if va != vb:
        only = sorted(va ^ vb)[0]
        if only in va:
            return _zgcd(_content_in(a, only), b)
        return _zgcd(a, _content_in(b, only))
    a, b = _sign_normalize(a), _sign_normalize(b)
    if a == b:
        return a
    if _coprime_certificate(a, b, sorted(va)):
        return _one(n)
    if len(a) >= len(b) and _divexact(a, b) is not None:
        return b
    if len(b) >= len(a) and _divexact(b, a) is not None:
        return a
    heu = _heu_gcd(a, b, sorted(va))
    if heu is not None:
        h, qa, qb = heu
        if _is_const(qa) or _is_const(qb):
            return _sign_normalize(h)
        vq = sorted(_vars_of(qa) | _vars_of(qb))
        if _vars_of(qa) == _vars_of(qb) and _coprime_certificate(qa, qb, vq):
            return _sign_normalize(h)
        return _sign_normalize(_mul(h, _zgcd(qa, qb)))
    return _prs_gcd(a, b, va)


def _prs_gcd(a, b, va):
    n = len(next(iter(a)))
    k = min(va, key=lambda j: (max(_deg(a, j), _deg(b, j)), -j))
    cont_a, cont_b = _content_in(a, k), _content_in(b, k)
    pa = _divexact(a, cont_a)
    pb = _divexact(b, cont_b)
    cont = _zgcd(cont_a, cont_b)
    if _deg(pa, k) < _deg(pb, k):
        pa, pb = pb, pa
    while True:
        r = _prem(pa, pb, k)
        if not r:
            g = pb
            break
        if _deg(r, k) == 0:
            g = _one(n)
            break
        r = _primitive(r, k)
        pa, pb = pb, r
    g = _primitive(g, k)
    return _mul(cont, g)


def _primitive(a, k):
    """Primitive part with respect to x_k, integer content removed as well."""
    cont = _content_in(a, k)
    if not _is_const(cont):
        a = _divexact(a, cont)
    c = _int_content(a)
    if c != 1:
        a = {e: v // c for e, v in a.items()}
    return _sign_normalize(a)


# -- public interface ------------------------------------------------------

def integer_primitive(p):
    """Write ``p = c * P`` with P integer-primitive; returns ``(c, P_dict)``."""
    if p.is_zero:
        return Fraction(0), {}
    den = 1
    for _, c in p.raw_items():
        if type(c) is Fraction:
            den = den * c.denominator // igcd(den, c.denominator)
    ints = {e: int(c * den) for e, c in p.raw_items()}
    g = _int_content(ints)
    return Fraction(g, den), {e: v // g for e, v in ints.items()}


def _from_int(n, a):
    return LaurentPolynomial._raw(n, dict(a))


def monic(p):
    if p.is_zero:
        return p
    return p.scale(1 / p.leading_coefficient())


def gcd_multivariate(p, q):
    """Monic GCD of two polynomials with nonnegative exponents.

    ``gcd(p, 0)`` is ``p`` made monic; ``gcd(0, 0)`` is zero.
    """
    if p.n != q.n:
        from ..errors import DimensionError

        raise DimensionError(f"variable counts differ: {p.n} vs {q.n}")
    if not p.is_polynomial() or not q.is_polynomial():
        raise ValueError("gcd_multivariate expects nonnegative exponents")
    if p.is_zero:
        return monic(q)
    if q.is_zero:
        return monic(p)
    _, a = integer_primitive(p)
    _, b = integer_primitive(q)
    return monic(_from_int(p.n, _zgcd(a, b)))


def lcm_multivariate(p, q):
    if p.is_zero or q.is_zero:
        return LaurentPolynomial.zero(p.n)
    from .laurent import divide_exact

    return monic(divide_exact(p * q, gcd_multivariate(p, q)))
