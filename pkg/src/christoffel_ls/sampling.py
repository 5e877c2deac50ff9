"""Sample ensembles from orthogonality densities and equilibrium measures.

All randomness goes through numpy's PCG64 generator. Each ensemble derives
its own stream from ``(seed, rule tag)`` via ``numpy.random.SeedSequence``,
so equal inputs reproduce identical points and different rules never share
a stream.
"""
from __future__ import annotations

import io
import zlib
from dataclasses import dataclass, field

import numpy as np

from .orthopoly import PolynomialFamily, TensorBasis

__all__ = [
    "SamplingRule",
    "SampleEnsemble",
    "UnsupportedSampler",
    "make_rng",
    "sample_orthogonality",
    "sample_equilibrium_cube",
    "sample_equilibrium_ball",
    "sample_equilibrium_simplex",
    "sample_equilibrium_hermite",
    "sample_equilibrium_laguerre",
    "sample_rule",
    "in_support",
]

RULE_KINDS = (
    "orthogonality",
    "equilibrium_cube",
    "equilibrium_ball",
    "equilibrium_simplex",
    "equilibrium_hermite",
    "equilibrium_laguerre",
)


class UnsupportedSampler(ValueError):
    pass


@dataclass(frozen=True)
class SamplingRule:
    kind: str
    dim: int
    scale_degree: int | None = None
    families: tuple[str, ...] | None = None  # orthogonality rule only

    def __post_init__(self):
        if self.kind not in RULE_KINDS:
            raise ValueError(f"unknown sampling rule {self.kind!r}")
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        if self.kind in ("equilibrium_hermite", "equilibrium_laguerre"):
            if self.scale_degree is None or self.scale_degree < 1:
                raise ValueError(f"{self.kind} needs scale_degree >= 1")

    @property
    def tag(self) -> str:
        parts = [self.kind, f"d{self.dim}"]
        if self.scale_degree is not None:
            parts.append(f"k{self.scale_degree}")
        if self.families:
            parts.append("+".join(self.families))
        return ":".join(parts)


@dataclass(frozen=True)
class SampleEnsemble:
    points: np.ndarray = field(repr=False)
    rule: SamplingRule
    seed: int

    @property
    def size(self) -> int:
        return self.points.shape[0]

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(f"# rule={self.rule.tag} seed={self.seed} S={self.size} d={self.rule.dim}\n")
        np.savetxt(buf, self.points, delimiter=",", fmt="%.17g")
        return buf.getvalue()


def make_rng(seed: int, tag: str) -> np.random.Generator:
    """PCG64 stream derived from a 64-bit seed and a text tag."""
    ss = np.random.SeedSequence(entropy=int(seed) & (2**64 - 1),
                                spawn_key=(zlib.crc32(tag.encode()),))
    return np.random.Generator(np.random.PCG64(ss))


def _check_count(S: int) -> int:
    if S < 0:
        raise ValueError("sample count must be non-negative")
    return int(S)


def _draw_family(fam: PolynomialFamily, rng: np.random.Generator, S: int) -> np.ndarray:
    if fam.kind == "jacobi":
        # (1-z)^a (1+z)^b  <=>  (1+z)/2 ~ Beta(b+1, a+1)
        return 2.0 * rng.beta(fam.b + 1.0, fam.a + 1.0, size=S) - 1.0
    if fam.kind == "hermite":
        return rng.normal(0.0, np.sqrt(0.5), size=S)
    if fam.kind == "laguerre":
        return rng.exponential(1.0, size=S)
    raise UnsupportedSampler(f"no generator for family {fam.name}")


def sample_orthogonality(basis: TensorBasis, S: int, seed: int) -> SampleEnsemble:
    """iid draws from the product orthogonality density of ``basis``."""
    S = _check_count(S)
    rule = SamplingRule("orthogonality", basis.dim,
                        families=tuple(f.name for f in basis.families))
    rng = make_rng(seed, rule.tag)
    pts = np.empty((S, basis.dim))
    for j, fam in enumerate(basis.families):
        pts[:, j] = _draw_family(fam, rng, S)
    return SampleEnsemble(pts, rule, seed)


def sample_equilibrium_cube(d: int, S: int, seed: int) -> SampleEnsemble:
    """Product arcsine measure on [-1, 1]^d."""
    S = _check_count(S)
    rule = SamplingRule("equilibrium_cube", d)
    rng = make_rng(seed, rule.tag)
    return SampleEnsemble(np.cos(np.pi * rng.random((S, d))), rule, seed)


def _uniform_directions(rng: np.random.Generator, S: int, d: int) -> np.ndarray:
    W = rng.standard_normal((S, d))
    norms = np.linalg.norm(W, axis=1, keepdims=True)
    while np.any(norms == 0):  # probability zero, but keep it total
        bad = norms[:, 0] == 0
        W[bad] = rng.standard_normal((int(bad.sum()), d))
        norms = np.linalg.norm(W, axis=1, keepdims=True)
    return W / norms


def sample_equilibrium_ball(d: int, S: int, seed: int) -> SampleEnsemble:
    """Density ∝ (1 - |z|^2)^(-1/2) on the unit ball."""
    S = _check_count(S)
    rule = SamplingRule("equilibrium_ball", d)
    rng = make_rng(seed, rule.tag)
    U = _uniform_directions(rng, S, d)
    R = np.sqrt(rng.beta(d / 2, 0.5, size=S))
    return SampleEnsemble(U * R[:, None], rule, seed)


def sample_equilibrium_simplex(d: int, S: int, seed: int) -> SampleEnsemble:
    """Density ∝ sqrt((1 - sum z) / prod z) on the unit simplex."""
    S = _check_count(S)
    rule = SamplingRule("equilibrium_simplex", d)
    rng = make_rng(seed, rule.tag)
    W = rng.dirichlet([0.5] * d + [1.5], size=S)
    return SampleEnsemble(W[:, :d].copy(), rule, seed)


def sample_equilibrium_hermite(d: int, k: int, S: int, seed: int) -> SampleEnsemble:
    """Conjectured equilibrium measure for exp(-|z|^2), expanded by sqrt(k).

    Before expansion the density is ∝ (2 - |z|^2)^(d/2) on sqrt(2) times the
    unit ball: a uniform direction times radius sqrt(2 P), P ~ Beta(d/2, d/2+1).
    """
    S = _check_count(S)
    rule = SamplingRule("equilibrium_hermite", d, scale_degree=k)
    rng = make_rng(seed, rule.tag)
    U = _uniform_directions(rng, S, d)
    P = rng.beta(d / 2, d / 2 + 1, size=S)
    Z = np.sqrt(2 * P)[:, None] * U
    return SampleEnsemble(np.sqrt(k) * Z, rule, seed)


def sample_equilibrium_laguerre(d: int, k: int, S: int, seed: int) -> SampleEnsemble:
    """Conjectured equilibrium measure for exp(-sum z), expanded by k.

    Before expansion the density is ∝ (4 - sum y)^(d/2) prod y^(-1/2) on
    4 times the unit simplex, i.e. 4 times the first d coordinates of a
    Dirichlet(1/2, ..., 1/2, d/2 + 1) vector.
    """
    S = _check_count(S)
    rule = SamplingRule("equilibrium_laguerre", d, scale_degree=k)
    rng = make_rng(seed, rule.tag)
    W = rng.dirichlet([0.5] * d + [d / 2 + 1], size=S)
    return SampleEnsemble(4.0 * k * W[:, :d], rule, seed)


def sample_rule(rule: SamplingRule, S: int, seed: int, basis: TensorBasis | None = None) -> SampleEnsemble:
    """Dispatch on ``rule.kind``."""
    if rule.kind == "orthogonality":
        if basis is None:
            raise ValueError("the orthogonality rule needs a basis")
        return sample_orthogonality(basis, S, seed)
    if rule.kind == "equilibrium_cube":
        return sample_equilibrium_cube(rule.dim, S, seed)
    if rule.kind == "equilibrium_ball":
        return sample_equilibrium_ball(rule.dim, S, seed)
    if rule.kind == "equilibrium_simplex":
        return sample_equilibrium_simplex(rule.dim, S, seed)
    if rule.kind == "equilibrium_hermite":
        return sample_equilibrium_hermite(rule.dim, rule.scale_degree, S, seed)
    return sample_equilibrium_laguerre(rule.dim, rule.scale_degree, S, seed)


def in_support(rule: SamplingRule, points: np.ndarray) -> np.ndarray:
    """Boolean mask of points inside the rule's support (closed sets)."""
    z = np.asarray(points, dtype=float)
    k = rule.scale_degree or 1
    if rule.kind == "equilibrium_cube":
        return np.all(np.abs(z) <= 1, axis=1)
    if rule.kind == "equilibrium_ball":
        return np.sum(z**2, axis=1) <= 1
    if rule.kind == "equilibrium_simplex":
        return np.all(z >= 0, axis=1) & (z.sum(axis=1) <= 1)
    if rule.kind == "equilibrium_hermite":
        return np.sum(z**2, axis=1) <= 2 * k
    if rule.kind == "equilibrium_laguerre":
        return np.all(z >= 0, axis=1) & (z.sum(axis=1) <= 4 * k)
    return np.all(np.isfinite(z), axis=1)
