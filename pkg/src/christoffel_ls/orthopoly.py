"""Orthonormal polynomial families and tensor-product bases.

Every orthogonality weight is normalized to a probability density, so the
degree-zero polynomial is the constant 1 for all families:

- ``jacobi(a, b)``: density proportional to ``(1-z)^a (1+z)^b`` on [-1, 1]
- ``hermite``: density ``exp(-z^2) / sqrt(pi)`` on the real line
- ``laguerre``: density ``exp(-z)`` on [0, inf)

Laguerre polynomials follow the classical sign convention, ``phi_n(0) = 1``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import sqrt

import numpy as np

from .multiindex import MultiIndexSet, total_degree_set

__all__ = [
    "PolynomialFamily",
    "TensorBasis",
    "DomainError",
    "legendre",
    "chebyshev",
    "jacobi",
    "hermite",
    "laguerre",
    "parse_family",
    "recurrence_coefficients",
    "eval_univariate",
    "vandermonde",
    "kernel_diagonal",
    "scaled_family_eval",
]

DOMAIN_TOL = 1e-12


class DomainError(ValueError):
    """Raised when a point lies outside a family's domain."""


@dataclass(frozen=True)
class PolynomialFamily:
    kind: str  # "jacobi", "hermite" or "laguerre"
    a: float = 0.0
    b: float = 0.0

    def __post_init__(self):
        if self.kind not in ("jacobi", "hermite", "laguerre"):
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == "jacobi" and (self.a <= -1 or self.b <= -1):
            raise ValueError(f"Jacobi parameters must exceed -1, got ({self.a}, {self.b})")

    @property
    def bounded(self) -> bool:
        return self.kind == "jacobi"

    @property
    def homogeneity(self) -> int:
        """Homogeneity order t of -log(w)/2; only defined for unbounded families."""
        if self.kind == "hermite":
            return 2
        if self.kind == "laguerre":
            return 1
        raise ValueError("homogeneity order is only defined for hermite/laguerre")

    @property
    def name(self) -> str:
        if self.kind != "jacobi":
            return self.kind
        if self.a == 0 and self.b == 0:
            return "legendre"
        if self.a == -0.5 and self.b == -0.5:
            return "chebyshev"
        return f"jacobi({self.a:g},{self.b:g})"

    def check_domain(self, z: np.ndarray) -> None:
        z = np.asarray(z, dtype=float)
        if not np.all(np.isfinite(z)):
            raise DomainError(f"{self.name}: non-finite evaluation point")
        if self.kind == "jacobi":
            bad = np.abs(z) > 1 + DOMAIN_TOL
        elif self.kind == "laguerre":
            bad = z < -DOMAIN_TOL
        else:
            return
        if np.any(bad):
            raise DomainError(f"{self.name}: point {z[bad].flat[0]!r} outside the domain")


def legendre() -> PolynomialFamily:
    return PolynomialFamily("jacobi", 0.0, 0.0)


def chebyshev() -> PolynomialFamily:
    return PolynomialFamily("jacobi", -0.5, -0.5)


def jacobi(a: float, b: float) -> PolynomialFamily:
    return PolynomialFamily("jacobi", float(a), float(b))


def hermite() -> PolynomialFamily:
    return PolynomialFamily("hermite")


def laguerre() -> PolynomialFamily:
    return PolynomialFamily("laguerre")


_JACOBI_RE = re.compile(r"^jacobi\(\s*([-+0-9./eE]+)\s*,\s*([-+0-9./eE]+)\s*\)$")


def _num(s: str) -> float:
    if "/" in s:
        n, d = s.split("/")
        return float(n) / float(d)
    return float(s)


def parse_family(name: str) -> PolynomialFamily:
    """Parse ``legendre | chebyshev | jacobi(a,b) | hermite | laguerre``."""
    key = name.strip().lower()
    simple = {"legendre": legendre, "chebyshev": chebyshev,
              "hermite": hermite, "laguerre": laguerre}
    if key in simple:
        return simple[key]()
    m = _JACOBI_RE.match(key)
    if m:
        return jacobi(_num(m.group(1)), _num(m.group(2)))
    raise ValueError(f"unknown polynomial family {name!r}")


def recurrence_coefficients(family: PolynomialFamily, n_max: int) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal three-term recurrence coefficients.

    Returns arrays ``a`` and ``b`` of length ``n_max + 1`` such that

        b[n+1] phi_{n+1}(z) = (z - a[n]) phi_n(z) - b[n] phi_{n-1}(z)

    with ``phi_{-1} = 0`` and ``phi_0 = 1``. ``b[0]`` is set to 0. All ``b[n]``
    are positive, i.e. they describe the positive-leading-coefficient family.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    n = np.arange(n_max + 1, dtype=float)
    a = np.zeros(n_max + 1)
    b = np.zeros(n_max + 1)
    if family.kind == "hermite":
        b[1:] = np.sqrt(n[1:] / 2)
    elif family.kind == "laguerre":
        a[:] = 2 * n + 1
        b[1:] = n[1:]
    else:
        al, be = family.a, family.b
        s = al + be
        a[0] = (be - al) / (s + 2)
        if n_max >= 1:
            nn = n[1:]
            a[1:] = (be**2 - al**2) / ((2 * nn + s) * (2 * nn + s + 2))
            b[1] = sqrt(4 * (1 + al) * (1 + be) / ((2 + s) ** 2 * (3 + s)))
        if n_max >= 2:
            nn = n[2:]
            num = 4 * nn * (nn + al) * (nn + be) * (nn + s)
            den = (2 * nn + s) ** 2 * (2 * nn + s + 1) * (2 * nn + s - 1)
            b[2:] = np.sqrt(num / den)
    return a, b


def eval_univariate(family: PolynomialFamily, k: int, points) -> np.ndarray:
    """Evaluate ``phi_0, ..., phi_k`` at ``points``; returns shape ``(S, k+1)``."""
    z = np.asarray(points, dtype=float).ravel()
    family.check_domain(z)
    out = np.empty((z.size, k + 1))
    out[:, 0] = 1.0
    if k == 0:
        return out
    a, b = recurrence_coefficients(family, k)
    out[:, 1] = (z - a[0]) / b[1]
    for n in range(1, k):
        out[:, n + 1] = ((z - a[n]) * out[:, n] - b[n] * out[:, n - 1]) / b[n + 1]
    if family.kind == "laguerre":
        out[:, 1::2] *= -1
    return out


@dataclass(frozen=True)
class TensorBasis:
    """Tensor-product basis ``phi_alpha(z) = prod_j phi_{alpha_j}(z_j)``."""

    families: tuple[PolynomialFamily, ...]
    indices: MultiIndexSet

    def __post_init__(self):
        if len(self.families) != self.indices.dim:
            raise ValueError(
                f"{len(self.families)} families given for a {self.indices.dim}-dimensional index set"
            )

    @classmethod
    def isotropic(cls, family: PolynomialFamily, indices: MultiIndexSet) -> "TensorBasis":
        return cls((family,) * indices.dim, indices)

    @property
    def dim(self) -> int:
        return self.indices.dim

    @property
    def size(self) -> int:
        return len(self.indices)

    @property
    def bounded(self) -> bool:
        return all(f.bounded for f in self.families)


def vandermonde(basis: TensorBasis, points) -> np.ndarray:
    """The ``(S, N)`` matrix with entries ``phi_{alpha(n)}(z_s)``."""
    z = np.asarray(points, dtype=float)
    if z.ndim == 1:
        z = z.reshape(-1, basis.dim) if basis.dim > 1 else z[:, None]
    if z.shape[1] != basis.dim:
        raise ValueError(f"points have dimension {z.shape[1]}, basis has {basis.dim}")
    alpha = basis.indices.as_array()
    V = np.ones((z.shape[0], alpha.shape[0]))
    for j, fam in enumerate(basis.families):
        kj = int(alpha[:, j].max())
        if kj == 0:
            continue
        U = eval_univariate(fam, kj, z[:, j])
        V *= U[:, alpha[:, j]]
    return V


def kernel_diagonal(basis: TensorBasis, points) -> np.ndarray:
    """``K(z_s) = sum_alpha phi_alpha(z_s)^2`` for each point."""
    V = vandermonde(basis, points)
    return np.einsum("sn,sn->s", V, V)


def scaled_family_eval(family: PolynomialFamily, k: int, degree: int, points, d: int = 1) -> np.ndarray:
    """Evaluate ``k^(d/2t) phi_n(k^(1/t) z)`` for ``n = 0..degree``.

    These polynomials are orthonormal under ``w(k^(1/t) z)``, i.e. under
    ``w^k`` up to the normalization of ``w``.
    """
    if family.bounded:
        raise ValueError("scaled families are only defined for hermite/laguerre")
    if k < 1:
        raise ValueError("k must be >= 1")
    t = family.homogeneity
    z = np.asarray(points, dtype=float)
    return k ** (d / (2 * t)) * eval_univariate(family, degree, k ** (1 / t) * z)


def univariate_basis(family: PolynomialFamily, k: int) -> TensorBasis:
    return TensorBasis((family,), total_degree_set(1, k))
