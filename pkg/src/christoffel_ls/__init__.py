"""Christoffel least squares: weighted Monte Carlo polynomial approximation
with equilibrium-measure sampling, plus the plain Monte Carlo baseline and
stability diagnostics."""
from .multiindex import MultiIndexSet, explicit_set, lp_ball_set, total_degree_set
from .orthopoly import (
    PolynomialFamily,
    TensorBasis,
    chebyshev,
    hermite,
    jacobi,
    laguerre,
    legendre,
    vandermonde,
)
from .lstsq import LsProblem, LsSolution, christoffel_weights, run_cls, run_mc, solve

__version__ = "0.1.0"
