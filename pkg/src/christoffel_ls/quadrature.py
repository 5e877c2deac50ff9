"""Gauss quadrature rules built from recurrence coefficients."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .orthopoly import PolynomialFamily, eval_univariate, jacobi, recurrence_coefficients

__all__ = ["QuadratureRule", "gauss_rule", "gauss_jacobi", "arcsine_rule"]


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray
    target: str

    def integrate(self, values) -> float:
        return float(np.dot(self.weights, values))

    def mapped(self, lo: float, hi: float, target: str | None = None) -> "QuadratureRule":
        """Affine image of a rule on [-1, 1]; weights keep unit mass."""
        x = lo + (hi - lo) * (self.nodes + 1) / 2
        return QuadratureRule(x, self.weights, target or self.target)


def gauss_rule(family: PolynomialFamily, n: int) -> QuadratureRule:
    """n-point Gauss rule for the family's probability density (Golub-Welsch).

    Exact for polynomials of degree ``2n - 1``; weights sum to 1.
    """
    if n < 1:
        raise ValueError("need at least one node")
    a, b = recurrence_coefficients(family, n)
    if n == 1:
        return QuadratureRule(np.array([a[0]]), np.array([1.0]), family.name)
    nodes = eigh_tridiagonal(a[:n], b[1:n], eigvals_only=True)
    if family.bounded:
        nodes = np.clip(nodes, -1.0, 1.0)
    # Christoffel numbers 1/K(x) keep relative accuracy in the tiny tail weights,
    # where squared eigenvector entries are only accurate to roundoff in absolute terms
    with np.errstate(over="ignore"):
        U = eval_univariate(family, n - 1, nodes)
        weights = 1.0 / np.einsum("sn,sn->s", U, U)
    weights /= weights.sum()
    return QuadratureRule(nodes, weights, family.name)


def gauss_jacobi(alpha: float, beta: float, n: int) -> QuadratureRule:
    """Gauss rule for the normalized density ``∝ (1-x)^alpha (1+x)^beta`` on [-1, 1]."""
    return gauss_rule(jacobi(alpha, beta), n)


def arcsine_rule(n: int) -> QuadratureRule:
    """Gauss-Chebyshev rule for the arcsine density ``1/(pi sqrt(1-x^2))``."""
    j = np.arange(1, n + 1)
    nodes = np.cos((2 * j - 1) * np.pi / (2 * n))
    return QuadratureRule(nodes[::-1].copy(), np.full(n, 1.0 / n), "arcsine")
