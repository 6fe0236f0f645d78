"""Exact degenerate polylogarithms, Stirling numbers and poly-Bernoulli numbers."""

from .kernels import BACKEND
from .scalars import LAMBDA, LambdaPolynomial, lambda_product, parse_scalar, poly_eval, rational, render_scalar
from .series import TruncatedSeries, ValuatedSeries
from .identities import SuiteConfig, run_suite

__version__ = "0.1.0"
