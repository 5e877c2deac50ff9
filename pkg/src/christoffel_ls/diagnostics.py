"""One-dimensional stability and accuracy diagnostics for Christoffel least squares.

The central object is the discrepancy Gramian R: the Gramian of the
w-orthonormal basis under the effective weight ``(N / K) v``, with ``v`` the
sampling (equilibrium) density. R is the large-sample limit of the CLS
normal-equations matrix, just as the identity is for plain Monte Carlo.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import lgamma, log, exp
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial import Polynomial

from .orthopoly import PolynomialFamily, eval_univariate
from .quadrature import QuadratureRule, arcsine_rule, gauss_jacobi

__all__ = [
    "DiscrepancyReport",
    "ProjectionDiscrepancy",
    "stability_factor",
    "r_matrix_bounded",
    "r_matrix_unbounded",
    "r_matrix",
    "projection_discrepancy",
    "test_functions_fq",
    "FQ_BREAKPOINT",
]

QUAD_TOL = 1e-10
FQ_BREAKPOINT = 0.5


@dataclass(frozen=True)
class DiscrepancyReport:
    family: str
    k: int
    R: np.ndarray = field(repr=False)
    lambda_min: float
    lambda_max: float
    kappa: float
    frobenius_dist_to_identity: float
    quadrature_converged: bool
    nodes_used: int

    @property
    def N(self) -> int:
        return self.R.shape[0]

    @property
    def inv_lambda_min(self) -> float:
        return 1.0 / self.lambda_min if self.lambda_min > 0 else float("inf")


def stability_factor(family: PolynomialFamily, k: int, n_grid: int = 10_000) -> float:
    """``max_z K_k(z) / (k + 1)`` over a Chebyshev-spaced grid including ±1."""
    if not family.bounded:
        raise ValueError(f"stability factor is unbounded for the {family.name} family")
    z = np.cos(np.pi * np.arange(n_grid + 1) / n_grid)
    U = eval_univariate(family, k, z)
    return float(np.max(np.einsum("sn,sn->s", U, U)) / (k + 1))


def _report(family, k, R, converged, nodes) -> DiscrepancyReport:
    R = 0.5 * (R + R.T)
    ev = np.linalg.eigvalsh(R)
    lmin, lmax = float(ev[0]), float(ev[-1])
    kappa = lmax / lmin if lmin > 0 else float("inf")
    frob = float(np.linalg.norm(R - np.eye(R.shape[0])))
    return DiscrepancyReport(family.name, k, R, lmin, lmax, kappa, frob, converged, nodes)


def _gramian_on_rule(family, k, x, wts) -> np.ndarray:
    U = eval_univariate(family, k, x)
    K = np.einsum("sn,sn->s", U, U)
    return (U.T * (wts * (k + 1) / K)) @ U


def _doubling(compute: Callable[[int], np.ndarray], n0: int, n_max: int):
    n = n0
    prev = compute(n)
    while 2 * n <= n_max:
        n *= 2
        cur = compute(n)
        if np.max(np.abs(cur - prev)) < QUAD_TOL:
            return cur, True, n
        prev = cur
    return prev, False, n


def r_matrix_bounded(family: PolynomialFamily, k: int, n_max: int = 1 << 16) -> DiscrepancyReport:
    """R_k for a Jacobi family with arcsine sampling, by Gauss-Chebyshev quadrature."""
    if not family.bounded:
        raise ValueError("r_matrix_bounded needs a Jacobi family")
    if k == 0:
        return _report(family, 0, np.ones((1, 1)), True, 1)

    def compute(n):
        q = arcsine_rule(n)
        return _gramian_on_rule(family, k, q.nodes, q.weights)

    R, ok, n = _doubling(compute, max(64, 2 * k + 16), n_max)
    return _report(family, k, R, ok, n)


@lru_cache(maxsize=64)
def _gauss_jacobi_cached(alpha: float, beta: float, n: int) -> QuadratureRule:
    return gauss_jacobi(alpha, beta, n)


def _unbounded_rule(family: PolynomialFamily, k: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights for the degree-k expanded equilibrium density (d = 1)."""
    s = max(k, 1)
    if family.kind == "hermite":
        # density ∝ sqrt(2s - z^2) on [-sqrt(2s), sqrt(2s)]
        q = _gauss_jacobi_cached(0.5, 0.5, n)
        return np.sqrt(2 * s) * q.nodes, q.weights
    if family.kind == "laguerre":
        # density ∝ sqrt((4s - z) / z) on [0, 4s]
        q = _gauss_jacobi_cached(0.5, -0.5, n)
        return 2 * s * (1 + q.nodes), q.weights
    raise ValueError("r_matrix_unbounded needs a hermite or laguerre family")


def r_matrix_unbounded(family: PolynomialFamily, k: int, n_max: int = 4096) -> DiscrepancyReport:
    """R_k for Hermite/Laguerre with the expanded weighted equilibrium density."""
    if family.bounded:
        raise ValueError("r_matrix_unbounded needs a hermite or laguerre family")
    if k == 0:
        return _report(family, 0, np.ones((1, 1)), True, 1)

    def compute(n):
        x, wts = _unbounded_rule(family, k, n)
        return _gramian_on_rule(family, k, x, wts)

    R, ok, n = _doubling(compute, max(64, 2 * k + 16), n_max)
    return _report(family, k, R, ok, n)


def r_matrix(family: PolynomialFamily, k: int) -> DiscrepancyReport:
    return r_matrix_bounded(family, k) if family.bounded else r_matrix_unbounded(family, k)


# -- projection discrepancy ---------------------------------------------------

def _log_beta(a, b):
    return lgamma(a) + lgamma(b) - lgamma(a + b)


def _w_panel_rule(family: PolynomialFamily, lo: float, hi: float, n: int):
    """Nodes/weights integrating ``h(z) w(z) dz`` over [lo, hi] ⊂ [-1, 1].

    Endpoint singularities of the Jacobi density are absorbed by a
    Gauss-Jacobi rule on panels touching ±1.
    """
    a, b = family.a, family.b
    ea = a if hi == 1.0 else 0.0
    eb = b if lo == -1.0 else 0.0
    q = _gauss_jacobi_cached(ea, eb, n)
    half = (hi - lo) / 2
    z = lo + half * (q.nodes + 1)
    # log of: w normalizer, rule mass, dz/dx, pulled-out endpoint scalings
    log_c = (-(a + b + 1) * log(2) - _log_beta(a + 1, b + 1)
             + (ea + eb + 1) * log(2) + _log_beta(ea + 1, eb + 1)
             + log(half) + (ea + eb) * log(half))
    rest = np.ones_like(z)
    if ea == 0.0 and a != 0.0:
        rest *= (1 - z) ** a
    if eb == 0.0 and b != 0.0:
        rest *= (1 + z) ** b
    return z, exp(log_c) * q.weights * rest


def _arcsine_panel_rule(lo: float, hi: float, n: int):
    """Nodes/weights for ``h(z) dz / (pi sqrt(1 - z^2))`` on [lo, hi] via z = cos(theta)."""
    t_lo, t_hi = np.arccos(hi), np.arccos(lo)
    x, w = np.polynomial.legendre.leggauss(n)
    theta = t_lo + (t_hi - t_lo) * (x + 1) / 2
    return np.cos(theta), w * (t_hi - t_lo) / (2 * np.pi)


def _panels(breakpoints: Sequence[float]):
    cuts = sorted(float(p) for p in breakpoints if -1 < p < 1)
    edges = [-1.0] + cuts + [1.0]
    return list(zip(edges[:-1], edges[1:]))


def _composite(rule_fn, panels, n):
    zs, ws = zip(*(rule_fn(lo, hi, n) for lo, hi in panels))
    return np.concatenate(zs), np.concatenate(ws)


@dataclass(frozen=True)
class ProjectionDiscrepancy:
    d_f: float
    delta_f: float
    g_norm_w: float
    g_norm_tilde: float
    lambda_min: float
    kappa: float
    converged: bool


def projection_discrepancy(f: Callable, family: PolynomialFamily, k: int,
                           breakpoints: Sequence[float] = (),
                           n_max: int = 4096) -> ProjectionDiscrepancy:
    """Projection discrepancy ``d(f)`` and suboptimality ratio ``Delta(f)``.

    ``d(f) = ||Pi~ f - Pi f||_w`` compares the w-projection with the
    w~-projection onto degree-k polynomials, ``w~ = (N / K) * arcsine``.
    ``breakpoints`` lists points where ``f`` is not smooth; quadrature is
    split there. ``delta_f`` is NaN when ``f`` lies in the polynomial space.
    """
    if not family.bounded:
        raise ValueError("projection_discrepancy supports Jacobi families only")
    panels = _panels(breakpoints)
    N = k + 1
    rep = r_matrix_bounded(family, k)

    def compute(n):
        zw, ww = _composite(lambda lo, hi, m: _w_panel_rule(family, lo, hi, m), panels, n)
        zt, wt = _composite(_arcsine_panel_rule, panels, n)
        Uw = eval_univariate(family, k, zw)
        fw = np.asarray(f(zw), dtype=float)
        c = Uw.T @ (ww * fw)
        g_w = fw - Uw @ c
        Ut = eval_univariate(family, k, zt)
        ft = np.asarray(f(zt), dtype=float)
        wt_eff = wt * N / np.einsum("sn,sn->s", Ut, Ut)
        h = Ut.T @ (wt_eff * ft)
        ctil = np.linalg.solve(rep.R, h)
        g_t = ft - Ut @ c
        return np.concatenate([[np.linalg.norm(ctil - c),
                                np.dot(ww, g_w**2),
                                np.dot(wt_eff, g_t**2)]])

    vals, ok, _ = _doubling(compute, max(64, 2 * k + 16), n_max)
    d_f, gw2, gt2 = float(vals[0]), max(float(vals[1]), 0.0), max(float(vals[2]), 0.0)
    if gw2 <= 1e-26:
        delta = float("nan")
    else:
        delta = gt2 / (rep.lambda_min * gw2) + 4 * rep.kappa**2 * d_f**2 / gw2
    return ProjectionDiscrepancy(d_f, delta, np.sqrt(gw2), np.sqrt(gt2),
                                 rep.lambda_min, rep.kappa, ok and rep.quadrature_converged)


# -- test functions of graded smoothness ----------------------------------------

def _fq_pieces(q: int) -> tuple[Polynomial, Polynomial]:
    left, right = Polynomial([1.0]), Polynomial([-1.0])
    for _ in range(q):
        left = left.integ(lbnd=-1.0)
        right = right.integ(lbnd=FQ_BREAKPOINT, k=left(FQ_BREAKPOINT))
    return left, right


def test_functions_fq(q: int) -> Callable[[np.ndarray], np.ndarray]:
    """Step function at z = 1/2 (q = 0) and its repeated antiderivatives from -1.

    ``f^(q)`` has q - 1 continuous derivatives; all are piecewise polynomials.
    """
    if q not in (0, 1, 2, 3):
        raise ValueError("q must be 0, 1, 2 or 3")
    left, right = _fq_pieces(q)

    def f(z):
        z = np.asarray(z, dtype=float)
        return np.where(z <= FQ_BREAKPOINT, left(z), right(z))

    f.__name__ = f"f{q}"
    return f


test_functions_fq.__test__ = False  # not a pytest test despite the name
