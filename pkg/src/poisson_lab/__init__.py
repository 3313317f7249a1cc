"""Exact Poisson brackets on fields of rational functions."""

from .algebra.gcd import gcd_multivariate
from .algebra.laurent import LaurentPolynomial, lp_combine, lp_partial
from .algebra.rational import RationalFunction, jacobian_rank, rf_arith, rf_normalize
from .io.expr import format_expr, parse_expr
from .io.gallery import gallery
from .io.structfile import load_structure, loads_structure
from .lie import (
    abelian_verdict,
    ad_analysis,
    canonical_pair,
    lie_closure,
    span_rank,
    witness_transform,
)
from .poisson import (
    PoissonStructure,
    SkewMatrix,
    bracket,
    bracket_laurent,
    bracket_monomial,
    bracket_rational,
    check_log_canonical,
    jacobiator,
    m_form,
    monomial3_family,
    structure_validate,
)
from .series import SeriesWindow, TruncatedSeries, coefficient, constant_term, expand_iterated

__version__ = "0.1.0"
