"""Weighted discrete least squares: plain Monte Carlo and Christoffel weighting."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .multiindex import max_degree
from .orthopoly import TensorBasis, kernel_diagonal, vandermonde
from .sampling import (
    SampleEnsemble,
    sample_equilibrium_cube,
    sample_equilibrium_hermite,
    sample_equilibrium_laguerre,
    sample_orthogonality,
)

__all__ = [
    "LsProblem",
    "LsSolution",
    "RANK_TOL",
    "christoffel_weights",
    "weighted_design",
    "condition_number",
    "solve",
    "gramian",
    "run_mc",
    "run_cls_bounded",
    "run_cls_unbounded",
    "run_cls",
    "evaluate_expansion",
    "truncate",
]

RANK_TOL = 1e-14


@dataclass(frozen=True)
class LsProblem:
    basis: TensorBasis
    ensemble: SampleEnsemble
    rhs: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)

    def __post_init__(self):
        S = self.ensemble.size
        if np.shape(self.rhs) != (S,) or np.shape(self.weights) != (S,):
            raise ValueError("rhs and weights must have one entry per sample")
        if np.any(~(np.asarray(self.weights) > 0)):
            raise ValueError("least-squares weights must be positive")


@dataclass(frozen=True)
class LsSolution:
    coefficients: np.ndarray
    condition_number: float
    residual_norm: float
    rank_deficient: bool = False
    singular_values: np.ndarray | None = field(default=None, repr=False)

    @property
    def rank_flag(self) -> str:
        return "RankDeficient" if self.rank_deficient else "FullRank"


def christoffel_weights(basis: TensorBasis, points) -> np.ndarray:
    """``N / K(z_s)``; each weighted Vandermonde row then has squared norm N."""
    K = kernel_diagonal(basis, points)
    if np.any(K <= 0):
        raise ArithmeticError("kernel diagonal is not positive; is the zero index missing?")
    return basis.size / K


def weighted_design(basis: TensorBasis, points, weights) -> np.ndarray:
    """``sqrt(K) V``."""
    V = vandermonde(basis, points)
    return np.sqrt(np.asarray(weights, dtype=float))[:, None] * V


def condition_number(A: np.ndarray) -> float:
    """sigma_max / sigma_min, ``inf`` for singular matrices."""
    s = np.linalg.svd(A, compute_uv=False)
    if s[-1] == 0 or not np.isfinite(s[0]):
        return float("inf")
    return float(s[0] / s[-1])


def solve(problem: LsProblem) -> LsSolution:
    """Minimize ``|| sqrt(K) (V c - f) ||`` through an SVD of ``sqrt(K) V``.

    Singular values below ``RANK_TOL * sigma_max`` are discarded and the
    solution is flagged rank deficient instead of failing.
    """
    basis = problem.basis
    S, N = problem.ensemble.size, basis.size
    if S < N:
        raise ValueError(f"need at least N={N} samples, got S={S}")
    sw = np.sqrt(np.asarray(problem.weights, dtype=float))
    A = sw[:, None] * vandermonde(basis, problem.ensemble.points)
    y = sw * np.asarray(problem.rhs, dtype=float)
    U, s, Vt = np.linalg.svd(A, full_matrices=False)
    keep = s > RANK_TOL * s[0]
    coef = Vt[keep].T @ ((U[:, keep].T @ y) / s[keep])
    cond = float(s[0] / s[-1]) if s[-1] > 0 else float("inf")
    resid = float(np.linalg.norm(A @ coef - y))
    return LsSolution(coef, cond, resid, not bool(keep.all()), s)


def gramian(problem: LsProblem) -> np.ndarray:
    """Discrete Gramian ``(1/S) V^T K V``."""
    V = vandermonde(problem.basis, problem.ensemble.points)
    k = np.asarray(problem.weights, dtype=float)
    return (V.T * k) @ V / problem.ensemble.size


def _problem(basis, ensemble, f, weights) -> LsProblem:
    rhs = np.asarray(f(ensemble.points), dtype=float).reshape(-1)
    return LsProblem(basis, ensemble, rhs, weights)


def run_mc(basis: TensorBasis, f: Callable, S: int, seed: int) -> LsSolution:
    """Unweighted least squares on samples from the orthogonality density."""
    ens = sample_orthogonality(basis, S, seed)
    return solve(_problem(basis, ens, f, np.ones(ens.size)))


def run_cls_bounded(basis: TensorBasis, f: Callable, S: int, seed: int) -> LsSolution:
    """Christoffel least squares on [-1, 1]^d: arcsine samples, N/K weights."""
    if not basis.bounded:
        raise ValueError("run_cls_bounded needs Jacobi families in every coordinate")
    ens = sample_equilibrium_cube(basis.dim, S, seed)
    return solve(_problem(basis, ens, f, christoffel_weights(basis, ens.points)))


def cls_unbounded_ensemble(basis: TensorBasis, S: int, seed: int) -> SampleEnsemble:
    kinds = {fam.kind for fam in basis.families}
    if kinds not in ({"hermite"}, {"laguerre"}):
        raise ValueError("run_cls_unbounded needs all-hermite or all-laguerre families")
    k = max(max_degree(basis.indices), 1)
    if kinds == {"hermite"}:
        return sample_equilibrium_hermite(basis.dim, k, S, seed)
    return sample_equilibrium_laguerre(basis.dim, k, S, seed)


def run_cls_unbounded(basis: TensorBasis, f: Callable, S: int, seed: int) -> LsSolution:
    """Christoffel least squares with the degree-expanded weighted equilibrium measure."""
    ens = cls_unbounded_ensemble(basis, S, seed)
    return solve(_problem(basis, ens, f, christoffel_weights(basis, ens.points)))


def cls_ensemble(basis: TensorBasis, S: int, seed: int) -> SampleEnsemble:
    if basis.bounded:
        return sample_equilibrium_cube(basis.dim, S, seed)
    return cls_unbounded_ensemble(basis, S, seed)


def run_cls(basis: TensorBasis, f: Callable, S: int, seed: int) -> LsSolution:
    if basis.bounded:
        return run_cls_bounded(basis, f, S, seed)
    return run_cls_unbounded(basis, f, S, seed)


def evaluate_expansion(basis: TensorBasis, coefficients, points, truncate_at: float | None = None) -> np.ndarray:
    values = vandermonde(basis, points) @ np.asarray(coefficients, dtype=float)
    if truncate_at is not None:
        values = truncate(values, truncate_at)
    return values


def truncate(values, L: float) -> np.ndarray:
    """``sgn(x) min(|x|, L)`` elementwise."""
    if L < 0:
        raise ValueError("truncation level must be non-negative")
    v = np.asarray(values, dtype=float)
    return np.sign(v) * np.minimum(np.abs(v), L)
