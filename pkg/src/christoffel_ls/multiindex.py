"""Multi-index sets defining polynomial subspaces.

Indices are kept in graded lexicographic order: by total degree first,
then by descending entries, so ``(1, 0)`` precedes ``(0, 1)``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

import mpmath
import numpy as np

__all__ = [
    "MultiIndexSet",
    "total_degree_set",
    "lp_ball_set",
    "explicit_set",
    "max_degree",
    "lp_member",
]

# precision for l^p membership; ties closer than this count as equal
_LP_DPS = 50
_LP_TOL = mpmath.mpf(10) ** -40


def _grlex_key(alpha: Sequence[int]):
    return (sum(alpha), tuple(-a for a in alpha))


@dataclass(frozen=True)
class MultiIndexSet:
    """Ordered set of d-dimensional multi-indices.

    ``kind`` is one of ``"total_degree"``, ``"lp_ball"`` or ``"explicit"``;
    ``degree`` and ``p`` are recorded for the first two.
    """

    dim: int
    indices: tuple[tuple[int, ...], ...]
    kind: str = "explicit"
    degree: int | None = None
    p: Fraction | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        if len(self.indices) == 0:
            raise ValueError("multi-index set must be nonempty")
        seen = set()
        for alpha in self.indices:
            if len(alpha) != self.dim:
                raise ValueError(f"index {alpha} does not have dimension {self.dim}")
            if any(a < 0 for a in alpha):
                raise ValueError(f"index {alpha} has negative entries")
            if alpha in seen:
                raise ValueError(f"duplicate index {alpha}")
            seen.add(alpha)

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, alpha) -> bool:
        return tuple(alpha) in set(self.indices)

    @property
    def size(self) -> int:
        return len(self.indices)

    def as_array(self) -> np.ndarray:
        """Indices as an ``(N, d)`` integer array."""
        return np.array(self.indices, dtype=int).reshape(len(self.indices), self.dim)

    def to_text(self) -> str:
        kind = self.kind
        if self.kind == "total_degree":
            kind = f"total_degree({self.degree})"
        elif self.kind == "lp_ball":
            kind = f"lp_ball({self.p},{self.degree})"
        lines = [f"d={self.dim} N={len(self)} kind={kind}"]
        lines += [" ".join(str(a) for a in alpha) for alpha in self.indices]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "MultiIndexSet":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        header = dict(tok.split("=", 1) for tok in lines[0].split())
        dim, n = int(header["d"]), int(header["N"])
        indices = tuple(tuple(int(a) for a in ln.split()) for ln in lines[1:])
        if len(indices) != n:
            raise ValueError(f"header says N={n} but found {len(indices)} indices")
        kind = header.get("kind", "explicit")
        degree = p = None
        if kind.startswith("total_degree("):
            degree = int(kind[len("total_degree("):-1])
            kind = "total_degree"
        elif kind.startswith("lp_ball("):
            p_str, k_str = kind[len("lp_ball("):-1].split(",")
            p, degree = Fraction(p_str), int(k_str)
            kind = "lp_ball"
        # preserve stored order verbatim
        return cls(dim, indices, kind, degree, p)


def total_degree_set(d: int, k: int) -> MultiIndexSet:
    """All multi-indices with ``|alpha| <= k``; there are ``comb(d + k, d)``."""
    if d < 1 or k < 0:
        raise ValueError("need d >= 1 and k >= 0")
    out = []

    def rec(prefix, remaining):
        if len(prefix) == d:
            out.append(tuple(prefix))
            return
        for a in range(remaining + 1):
            rec(prefix + [a], remaining - a)

    rec([], k)
    out.sort(key=_grlex_key)
    assert len(out) == comb(d + k, d)
    return MultiIndexSet(d, tuple(out), "total_degree", degree=k)


def _as_fraction(p) -> Fraction:
    if isinstance(p, str):
        return Fraction(p)
    if isinstance(p, float):
        return Fraction(p).limit_denominator(10**6)
    return Fraction(p)


def lp_member(alpha: Sequence[int], p, k: int) -> bool:
    """Whether ``(sum alpha_i^p)^(1/p) <= k``, decided in extended precision."""
    p = _as_fraction(p)
    nonzero = [a for a in alpha if a > 0]
    if len(nonzero) <= 1:
        return (nonzero[0] if nonzero else 0) <= k
    if p == 1:
        return sum(nonzero) <= k
    with mpmath.workdps(_LP_DPS):
        pm = mpmath.mpf(p.numerator) / p.denominator
        lhs = mpmath.fsum(mpmath.power(a, pm) for a in nonzero)
        return lhs <= mpmath.power(k, pm) * (1 + _LP_TOL)


def lp_ball_set(d: int, p, k: int) -> MultiIndexSet:
    """Multi-indices inside the l^p ball of radius ``k``.

    ``p`` may be given as a Fraction, an int, or a string such as ``"2/5"``.
    """
    p = _as_fraction(p)
    if d < 1 or k < 0 or p <= 0:
        raise ValueError("need d >= 1, k >= 0, p > 0")
    with mpmath.workdps(_LP_DPS):
        pm = mpmath.mpf(p.numerator) / p.denominator
        budget = mpmath.power(k, pm) * (1 + _LP_TOL)
        powers = [mpmath.power(a, pm) for a in range(k + 1)]
        out = []

        def rec(prefix, used):
            if len(prefix) == d:
                out.append(tuple(prefix))
                return
            for a in range(k + 1):
                s = used + powers[a]
                if s > budget:
                    break
                rec(prefix + [a], s)

        rec([], mpmath.mpf(0))
    out.sort(key=_grlex_key)
    return MultiIndexSet(d, tuple(out), "lp_ball", degree=k, p=p)


def explicit_set(indices: Iterable[Sequence[int]], dim: int | None = None) -> MultiIndexSet:
    """Wrap user-supplied indices, kept in graded lexicographic order."""
    idx = [tuple(int(a) for a in alpha) for alpha in indices]
    if dim is None:
        dim = len(idx[0])
    idx.sort(key=_grlex_key)
    if (0,) * dim not in idx:
        warnings.warn(
            "index set lacks the zero index; the kernel diagonal may vanish",
            stacklevel=2,
        )
    return MultiIndexSet(dim, tuple(idx), "explicit")


def max_degree(indices: MultiIndexSet) -> int:
    return max(sum(alpha) for alpha in indices)
