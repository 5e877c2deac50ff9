"""Target functions for convergence studies.

Includes two algebraic test functions, a 1-D diffusion problem with a
Karhunen-Loeve random diffusivity, and a resistor ladder network.
"""
from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.linalg import solve_banded

__all__ = [
    "TargetFunction",
    "ModelError",
    "f_gaussian_bump",
    "f_exponential",
    "DiffusionModel",
    "build_diffusion",
    "build_resistor_network",
    "ladder_voltage_nodal",
    "ladder_voltage_reduction",
    "get_target",
]


class ModelError(ArithmeticError):
    """Model evaluation failed at a specific parameter point."""

    def __init__(self, message, z=None):
        super().__init__(message)
        self.z = z


@dataclass(frozen=True)
class TargetFunction:
    name: str
    dim: int
    domain: str  # "cube", "halfspace" or "allspace"
    evaluator: Callable[[np.ndarray], float] = field(repr=False)
    vectorized: bool = False
    model: object = field(default=None, repr=False, compare=False)

    def __call__(self, points) -> np.ndarray:
        z = np.atleast_2d(np.asarray(points, dtype=float))
        if z.shape[1] != self.dim and z.shape[0] == self.dim and z.shape[1] == 1:
            z = z.T
        if self.vectorized:
            return np.asarray(self.evaluator(z), dtype=float)
        return np.array([self.evaluator(row) for row in z], dtype=float)


def f_gaussian_bump(d: int) -> TargetFunction:
    return TargetFunction("gaussian_bump", d, "cube",
                          lambda z: np.exp(-np.sum(z**2, axis=1)), vectorized=True)


def f_exponential(d: int) -> TargetFunction:
    return TargetFunction("exponential", d, "allspace",
                          lambda z: np.exp(-np.sum(z, axis=1)), vectorized=True)


# -- diffusion ------------------------------------------------------------------

@dataclass(frozen=True)
class DiffusionModel:
    """``-(a(x, z) u')' = forcing`` on (0, 1), ``u(0) = u(1) = 0``.

    ``a(x, z) = abar + sigma_a * sum_k sqrt(lam_k) phi_k(x) z_k`` with
    ``(lam_k, phi_k)`` the leading eigenpairs of ``exp(-(x1 - x2)^2 / l_c^2)``.
    ``n_x`` is the number of grid intervals.
    """

    d: int
    abar: float
    sigma_a: float
    l_c: float
    n_x: int
    x: np.ndarray = field(repr=False)
    eigenvalues: np.ndarray = field(repr=False)
    eigenfunctions: np.ndarray = field(repr=False)  # (d, n_x + 1)
    trace: float = 1.0
    all_eigenvalues: np.ndarray = field(default=None, repr=False)
    positivity_floor: float = 1e-8

    def diffusivity(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=float)
        return self.abar + self.sigma_a * (np.sqrt(self.eigenvalues) * z) @ self.eigenfunctions

    def solve(self, z, forcing: float = 1.0) -> np.ndarray:
        """Nodal solution on ``self.x``."""
        a = self.diffusivity(z)
        if np.min(a) <= self.positivity_floor:
            raise ModelError(f"non-positive diffusivity at z={np.asarray(z).tolist()}", z)
        h = 1.0 / self.n_x
        face = 2 * a[:-1] * a[1:] / (a[:-1] + a[1:])  # harmonic mean per interval
        m = self.n_x - 1
        ab = np.zeros((3, m))
        ab[0, 1:] = -face[1:-1]
        ab[1, :] = face[:-1] + face[1:]
        ab[2, :-1] = -face[1:-1]
        rhs = np.full(m, forcing * h * h)
        u = np.zeros(self.n_x + 1)
        u[1:-1] = solve_banded((1, 1), ab, rhs)
        return u

    def qoi(self, z, x0: float = 1.0 / 3.0) -> float:
        """``u(x0, z)``; quadratic interpolation when x0 is not a grid node."""
        u = self.solve(z)
        pos = x0 * self.n_x
        i = int(round(pos))
        if abs(pos - i) < 1e-9:
            return float(u[i])
        i = min(max(int(np.floor(pos)), 1), self.n_x - 1)
        xs, us = self.x[i - 1:i + 2], u[i - 1:i + 2]
        return float(np.polyval(np.polyfit(xs, us, 2), x0))

    def eigenpairs_csv(self) -> str:
        buf = io.StringIO()
        buf.write("x," + ",".join(f"phi{k + 1}" for k in range(self.d)) + "\n")
        buf.write("# eigenvalues=" + ",".join(f"{v:.17g}" for v in self.eigenvalues) + "\n")
        np.savetxt(buf, np.column_stack([self.x, self.eigenfunctions.T]), delimiter=",", fmt="%.17g")
        return buf.getvalue()


def kl_eigenpairs(n_x: int, l_c: float, n_terms: int):
    """Nystrom eigenpairs of the squared-exponential kernel with trapezoid weights.

    Eigenfunctions are normalized in L^2(0, 1) and signed so that their
    integral is non-negative.
    """
    x = np.linspace(0.0, 1.0, n_x + 1)
    w = np.full(n_x + 1, 1.0 / n_x)
    w[[0, -1]] *= 0.5
    C = np.exp(-((x[:, None] - x[None, :]) ** 2) / l_c**2)
    sw = np.sqrt(w)
    lam, vec = np.linalg.eigh(sw[:, None] * C * sw[None, :])
    order = np.argsort(lam)[::-1]
    lam, vec = lam[order], vec[:, order]
    phi = (vec / sw[:, None]).T
    signs = np.sign(phi @ w)
    signs[signs == 0] = 1
    phi *= signs[:, None]
    trace = float(np.dot(w, np.diag(C)))
    return x, lam[:n_terms], phi[:n_terms], trace, lam


def build_diffusion(d: int = 2, abar: float = 1.0, sigma_a: float = 0.1,
                    l_c: float = 1.0, n_x: int = 1023) -> TargetFunction:
    if n_x < 64:
        raise ValueError("n_x must be >= 64")
    x, lam, phi, trace, lam_all = kl_eigenpairs(n_x, l_c, d)
    if np.any(lam <= 0):
        raise ValueError("retained KL eigenvalues must be positive")
    model = DiffusionModel(d, abar, sigma_a, l_c, n_x, x, lam, phi, trace, lam_all)
    return TargetFunction("diffusion", d, "allspace", model.qoi, model=model)


# -- resistor ladder --------------------------------------------------------------
#
# Stage j (1-based) has a series resistor R[2j-2] from node j-1 to node j and a
# shunt resistor R[2j-1] from node j to ground. Node 0 is held at V0; the output
# is the voltage of node P, across the final shunt.

def ladder_voltage_nodal(R, V0: float = 1.0) -> float:
    R = np.asarray(R, dtype=float)
    P = R.size // 2
    if R.size != 2 * P or P < 1:
        raise ValueError("ladder needs an even, positive number of resistors")
    if np.any(~(R > 0)) or not np.all(np.isfinite(R)):
        raise ModelError("resistances must be positive and finite", R)
    gs, gp = 1.0 / R[0::2], 1.0 / R[1::2]
    G = np.zeros((P, P))
    b = np.zeros(P)
    for j in range(P):
        G[j, j] = gs[j] + gp[j] + (gs[j + 1] if j + 1 < P else 0.0)
        if j + 1 < P:
            G[j, j + 1] = G[j + 1, j] = -gs[j + 1]
    b[0] = gs[0] * V0
    try:
        v = np.linalg.solve(G, b)
    except np.linalg.LinAlgError as exc:
        raise ModelError("singular conductance matrix", R) from exc
    return float(v[-1])


def ladder_voltage_reduction(R, V0: float = 1.0) -> float:
    """Output voltage by series-parallel reduction from the load end."""
    R = np.asarray(R, dtype=float)
    P = R.size // 2
    series, shunt = R[0::2], R[1::2]
    # Z[j]: impedance seen looking into node j toward the load
    Z = np.empty(P)
    Z[-1] = shunt[-1]
    for j in range(P - 2, -1, -1):
        branch = series[j + 1] + Z[j + 1]
        Z[j] = shunt[j] * branch / (shunt[j] + branch)
    v = V0
    for j in range(P):
        v = v * Z[j] / (series[j] + Z[j])
    return float(v)


def build_resistor_network(P: int = 3, V0: float = 1.0, rho0: float = 0.1) -> TargetFunction:
    """Ladder output voltage as a function of ``z`` with resistances ``rho0 + z``."""
    if P < 1:
        raise ValueError("P must be >= 1")

    def evaluate(z):
        return ladder_voltage_nodal(rho0 + np.asarray(z, dtype=float), V0)

    return TargetFunction("resistor", 2 * P, "halfspace", evaluate)


def get_target(name: str, d: int, **params) -> TargetFunction:
    """Look up a target by name: gaussian_bump, exponential, diffusion, resistor."""
    if name == "gaussian_bump":
        return f_gaussian_bump(d)
    if name == "exponential":
        return f_exponential(d)
    if name == "diffusion":
        return build_diffusion(d=d, **params)
    if name == "resistor":
        if d % 2:
            raise ValueError("the resistor network needs an even dimension")
        return build_resistor_network(P=d // 2, **params)
    raise ValueError(f"unknown target function {name!r}")
