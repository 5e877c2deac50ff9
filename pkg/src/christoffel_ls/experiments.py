"""Declarative experiments: condition studies, convergence studies,
diagnostics sweeps and sampler checks.

An experiment is described by a flat ``key = value`` config file. Every
(method, degree, replicate) cell draws from its own seed, derived by hashing
``(base_seed, method, k, r)`` through ``numpy.random.SeedSequence``.
"""
from __future__ import annotations

import configparser
import hashlib
import io
import logging
import math
import threading
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, asdict
from datetime import datetime, timezone
from fractions import Fraction
from typing import Callable

import numpy as np
from scipy import stats

from . import diagnostics, sampling
from .lstsq import (
    christoffel_weights,
    cls_ensemble,
    condition_number,
    evaluate_expansion,
    LsProblem,
    solve,
    weighted_design,
)
from .models import ModelError, TargetFunction, get_target
from .multiindex import MultiIndexSet, lp_ball_set, total_degree_set
from .orthopoly import PolynomialFamily, TensorBasis, parse_family

log = logging.getLogger(__name__)

__all__ = [
    "ConfigError",
    "SampleCountRule",
    "ExperimentSpec",
    "ExperimentResult",
    "parse_config",
    "derive_seed",
    "estimate_error",
    "run_condition_study",
    "run_convergence_study",
    "run_diagnostics_sweep",
    "run_sampler_check",
    "run_experiment",
    "PRESETS",
]

STUDY_COLUMNS = ["method", "k", "N", "S", "mean_cond", "mean_err", "failures"]
DIAG_COLUMNS = ["family", "k", "N", "lambda_min", "lambda_max", "kappa",
                "frob_dist", "stability_factor"]
SAMPLER_COLUMNS = ["rule", "d", "test", "statistic", "expected", "p_value", "passed"]
FAILURE_FLAG_FRACTION = 0.10
MAX_RESAMPLES = 5


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SampleCountRule:
    kind: str  # "linear", "loglinear" or "loglinearmax"
    c: float

    @classmethod
    def parse(cls, text: str) -> "SampleCountRule":
        t = text.strip().lower().replace(" ", "")
        for kind in ("loglinearmax", "loglinear", "linear"):
            if t.startswith(kind + "(") and t.endswith(")"):
                return cls(kind, float(Fraction(t[len(kind) + 1:-1])))
        raise ConfigError(f"bad sample-count rule {text!r}")

    def __call__(self, N: int) -> int:
        if self.kind == "linear":
            return math.ceil(self.c * N)
        if self.kind == "loglinear":
            return math.ceil(self.c * N * math.log(N))
        return math.ceil(self.c * N * max(math.log(N), 1.0))

    def __str__(self):
        return f"{self.kind}({self.c:g})"


@dataclass(frozen=True)
class ExperimentSpec:
    kind: str  # condition | convergence | diagnostics | samplers
    family: str = "legendre"
    d: int = 1
    degrees: tuple[int, ...] = (1,)
    index_set: str = "total_degree"
    p: str = "1"
    methods: tuple[str, ...] = ("MC", "CLS")
    samples: SampleCountRule = SampleCountRule("loglinear", 1.5)
    ensemble: int = 1
    n_err: int = 10_000
    seed: int = 0
    target: str = "gaussian_bump"
    fq: tuple[int, ...] = ()
    sampler_count: int = 100_000
    sampler_dims: tuple[int, ...] = (1, 2, 4)
    output: str | None = None

    def __post_init__(self):
        if self.kind not in ("condition", "convergence", "diagnostics", "samplers"):
            raise ConfigError(f"unknown experiment kind {self.kind!r}")
        if self.kind == "samplers":
            return
        if not self.degrees or list(self.degrees) != sorted(set(self.degrees)):
            raise ConfigError("degree list must be nonempty and strictly increasing")
        if self.ensemble < 1:
            raise ConfigError("ensemble size must be >= 1")
        try:
            parse_family(self.family)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        for m in self.methods:
            if m not in ("MC", "CLS"):
                raise ConfigError(f"unknown method {m!r}")
        if self.kind in ("condition", "convergence"):
            for k in self.degrees:
                N = len(self.index_set_for(k))
                if self.samples(N) < N:
                    raise ConfigError(
                        f"sample rule {self.samples} gives S={self.samples(N)} < N={N} at k={k}")
        if self.kind == "diagnostics" and self.d != 1:
            raise ConfigError("diagnostics sweeps are one-dimensional")

    def polynomial_family(self) -> PolynomialFamily:
        return parse_family(self.family)

    def index_set_for(self, k: int) -> MultiIndexSet:
        if self.index_set == "total_degree":
            return total_degree_set(self.d, k)
        if self.index_set == "lp":
            return lp_ball_set(self.d, Fraction(self.p), k)
        raise ConfigError(f"unknown index set {self.index_set!r}")

    def basis_for(self, k: int) -> TensorBasis:
        return TensorBasis.isotropic(self.polynomial_family(), self.index_set_for(k))

    def canonical(self) -> str:
        items = asdict(self)
        items["samples"] = str(self.samples)
        items.pop("output")
        return "\n".join(f"{key}={items[key]}" for key in sorted(items))

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.canonical().encode()).hexdigest()[:16]


def _int_list(text: str) -> tuple[int, ...]:
    out = []
    for part in text.replace(" ", "").split(","):
        if not part:
            continue
        if ":" in part:
            bits = [int(b) for b in part.split(":")]
            lo, hi = bits[0], bits[1]
            step = bits[2] if len(bits) > 2 else 1
            out.extend(range(lo, hi + 1, step))
        else:
            out.append(int(part))
    return tuple(out)


def parse_config(text: str) -> ExperimentSpec:
    """Parse a flat ``key = value`` experiment description.

    Degree lists accept ``2,4,8`` and inclusive ranges ``lo:hi[:step]``.
    """
    cp = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        cp.read_string("[experiment]\n" + text)
    except configparser.Error as exc:
        raise ConfigError(f"unreadable config: {exc}") from exc
    sec = dict(cp["experiment"])
    known = {"kind", "family", "d", "degrees", "index_set", "p", "methods", "samples",
             "ensemble", "n_err", "seed", "target", "fq", "sampler_count",
             "sampler_dims", "output"}
    unknown = set(sec) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    if "kind" not in sec:
        raise ConfigError("config needs a 'kind' key")
    kw: dict = {"kind": sec["kind"].strip().lower()}
    try:
        for key in ("family", "index_set", "p", "target", "output"):
            if key in sec:
                kw[key] = sec[key].strip()
        for key in ("d", "ensemble", "n_err", "seed", "sampler_count"):
            if key in sec:
                kw[key] = int(sec[key])
        for key in ("degrees", "fq", "sampler_dims"):
            if key in sec:
                kw[key] = _int_list(sec[key])
        if "methods" in sec:
            kw["methods"] = tuple(m.strip().upper() for m in sec["methods"].split(",") if m.strip())
        if "samples" in sec:
            kw["samples"] = SampleCountRule.parse(sec["samples"])
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return ExperimentSpec(**kw)


@dataclass
class ExperimentResult:
    columns: list[str]
    rows: list[dict]
    metadata: dict = field(default_factory=dict)
    flagged: list[str] = field(default_factory=list)

    def to_csv(self, timestamp: bool = True) -> str:
        buf = io.StringIO()
        meta = " ".join(f"{k}={v}" for k, v in self.metadata.items())
        buf.write(f"# {meta}\n")
        if timestamp:
            buf.write(f"# timestamp={datetime.now(timezone.utc).isoformat(timespec='seconds')}\n")
        for note in self.flagged:
            buf.write(f"# flagged: {note}\n")
        buf.write(",".join(self.columns) + "\n")
        for row in self.rows:
            buf.write(",".join(_fmt(row.get(c)) for c in self.columns) + "\n")
        return buf.getvalue()

    def select(self, **match) -> list[dict]:
        return [r for r in self.rows if all(r.get(k) == v for k, v in match.items())]


def _fmt(v) -> str:
    if v is None:
        return "NA"
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        if not math.isfinite(v):
            return "NA" if math.isnan(v) else ("inf" if v > 0 else "-inf")
        return f"{float(v):.10g}"
    return str(v)


def derive_seed(base_seed: int, method: str, k: int, r: int, attempt: int = 0) -> int:
    """64-bit seed for one ensemble cell; SeedSequence hashes the whole tuple."""
    ss = np.random.SeedSequence(entropy=int(base_seed) & (2**64 - 1),
                                spawn_key=(zlib.crc32(method.encode()), k, r, attempt))
    lo, hi = ss.generate_state(2, dtype=np.uint32)
    return (int(hi) << 32) | int(lo)


def _ensemble_for(method: str, basis: TensorBasis, S: int, seed: int):
    if method == "MC":
        ens = sampling.sample_orthogonality(basis, S, seed)
        return ens, np.ones(ens.size)
    ens = cls_ensemble(basis, S, seed)
    return ens, christoffel_weights(basis, ens.points)


def _map(fn: Callable, cells: list, threads: int) -> list:
    if threads <= 1:
        return [fn(c) for c in cells]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, cells))


def _aggregate(spec, values_by_cell, k_meta, value_key) -> tuple[list[dict], list[str]]:
    rows, flagged = [], []
    for method in spec.methods:
        for k in spec.degrees:
            N, S = k_meta[k]
            results = [values_by_cell[(method, k, r)] for r in range(spec.ensemble)]
            ok = [res for res in results if res is not None]
            failures = len(results) - len(ok)
            row = {"method": method, "k": k, "N": N, "S": S, "failures": failures,
                   "mean_cond": None, "mean_err": None}
            # sd_* entries ride along for callers; they are not CSV columns
            if ok:
                conds = [res["cond"] for res in ok]
                row["mean_cond"], row["sd_cond"] = float(np.mean(conds)), float(np.std(conds, ddof=min(1, len(ok) - 1)))
                if value_key == "err":
                    errs = [res["err"] for res in ok]
                    row["mean_err"], row["sd_err"] = float(np.mean(errs)), float(np.std(errs, ddof=min(1, len(ok) - 1)))
            if failures > FAILURE_FLAG_FRACTION * spec.ensemble:
                flagged.append(f"method={method} k={k} failures={failures}/{spec.ensemble}")
            rows.append(row)
    return rows, flagged


def _metadata(spec: ExperimentSpec, **extra) -> dict:
    meta = {"kind": spec.kind, "seed": spec.seed, "spec_hash": spec.digest}
    meta.update(extra)
    return meta


def run_condition_study(spec: ExperimentSpec, threads: int = 1) -> ExperimentResult:
    """Mean condition number of ``sqrt(K) V`` per (method, degree)."""
    k_meta = {}
    bases = {}
    for k in spec.degrees:
        bases[k] = spec.basis_for(k)
        N = bases[k].size
        k_meta[k] = (N, spec.samples(N))

    def cell(key):
        method, k, r = key
        basis = bases[k]
        try:
            ens, w = _ensemble_for(method, basis, k_meta[k][1], derive_seed(spec.seed, method, k, r))
            cond = condition_number(weighted_design(basis, ens.points, w))
        except (ArithmeticError, ValueError, np.linalg.LinAlgError) as exc:
            log.warning("condition run %s failed: %s", key, exc)
            return None
        if not math.isfinite(cond):
            return None
        return {"cond": cond}

    keys = [(m, k, r) for m in spec.methods for k in spec.degrees for r in range(spec.ensemble)]
    values = dict(zip(keys, _map(cell, keys, threads)))
    rows, flagged = _aggregate(spec, values, k_meta, "cond")
    return ExperimentResult(STUDY_COLUMNS, rows, _metadata(spec), flagged)


def estimate_error(basis: TensorBasis, coefficients, f: Callable, n_err: int = 10_000,
                   seed: int = 0, truncate_at: float | None = None,
                   cache: dict | None = None) -> float:
    """Discrete RMS error over ``n_err`` fresh samples of the orthogonality density.

    The evaluation points depend only on ``seed`` and the basis families, so a
    fixed seed gives the same points for every method and degree. ``cache``
    (keyed by seed) avoids re-evaluating expensive targets.
    """
    key = (seed, n_err, tuple(f.name for f in basis.families))
    if cache is not None and key in cache:
        pts, fvals = cache[key]
    else:
        pts = sampling.sample_orthogonality(basis, n_err, seed).points
        fvals = np.asarray(f(pts), dtype=float)
        if cache is not None:
            cache[key] = (pts, fvals)
    approx = evaluate_expansion(basis, coefficients, pts, truncate_at)
    return float(np.sqrt(np.mean((fvals - approx) ** 2)))


def run_convergence_study(spec: ExperimentSpec, threads: int = 1,
                          truncate_at: float | None = None,
                          target: TargetFunction | None = None) -> ExperimentResult:
    """Mean approximation error per (method, degree) over the ensemble."""
    f = target if target is not None else get_target(spec.target, spec.d)
    if f.dim != spec.d:
        raise ConfigError(f"target {f.name} has dimension {f.dim}, spec has d={spec.d}")
    eval_seed = derive_seed(spec.seed, "error-evaluation", 0, 0)
    cache: dict = {}
    k_meta, bases = {}, {}
    for k in spec.degrees:
        bases[k] = spec.basis_for(k)
        N = bases[k].size
        k_meta[k] = (N, spec.samples(N))
    # warm the evaluation cache once, outside the worker threads
    estimate_error(bases[spec.degrees[0]], np.zeros(k_meta[spec.degrees[0]][0]), f,
                   spec.n_err, eval_seed, cache=cache)
    resamples = {"count": 0}
    lock = threading.Lock()

    def cell(key):
        method, k, r = key
        basis = bases[k]
        S = k_meta[k][1]
        for attempt in range(MAX_RESAMPLES + 1):
            seed = derive_seed(spec.seed, method, k, r, attempt)
            try:
                ens, w = _ensemble_for(method, basis, S, seed)
                rhs = np.asarray(f(ens.points), dtype=float)
            except ModelError as exc:
                with lock:
                    resamples["count"] += 1
                log.info("resampling %s after model error: %s", key, exc)
                continue
            try:
                sol = solve(LsProblem(basis, ens, rhs, w))
            except (ArithmeticError, ValueError, np.linalg.LinAlgError) as exc:
                log.warning("convergence run %s failed: %s", key, exc)
                return None
            err = estimate_error(basis, sol.coefficients, f, spec.n_err, eval_seed,
                                 truncate_at, cache)
            if not math.isfinite(err):
                return None
            return {"cond": sol.condition_number, "err": err}
        return None

    keys = [(m, k, r) for m in spec.methods for k in spec.degrees for r in range(spec.ensemble)]
    values = dict(zip(keys, _map(cell, keys, threads)))
    rows, flagged = _aggregate(spec, values, k_meta, "err")
    meta = _metadata(spec, target=f.name, resamples=resamples["count"])
    if truncate_at is not None:
        meta["truncate"] = truncate_at
    return ExperimentResult(STUDY_COLUMNS, rows, meta, flagged)


def run_diagnostics_sweep(spec: ExperimentSpec, threads: int = 1) -> ExperimentResult:
    """R-matrix spectrum, stability factor and optional Delta(f^(q)) per degree."""
    fam = spec.polynomial_family()
    columns = list(DIAG_COLUMNS) + ["converged"] + [f"delta_f{q}" for q in spec.fq]
    fqs = {q: diagnostics.test_functions_fq(q) for q in spec.fq}

    def one(k):
        rep = diagnostics.r_matrix(fam, k)
        row = {"family": fam.name, "k": k, "N": k + 1, "lambda_min": rep.lambda_min,
               "lambda_max": rep.lambda_max, "kappa": rep.kappa,
               "frob_dist": rep.frobenius_dist_to_identity,
               "stability_factor": diagnostics.stability_factor(fam, k) if fam.bounded else None,
               "converged": rep.quadrature_converged}
        for q, fq in fqs.items():
            if fam.bounded:
                pd = diagnostics.projection_discrepancy(fq, fam, k, [diagnostics.FQ_BREAKPOINT])
                row[f"delta_f{q}"] = pd.delta_f
            else:
                row[f"delta_f{q}"] = None
        return row

    rows = _map(one, list(spec.degrees), threads)
    flagged = [f"k={r['k']} quadrature not converged" for r in rows if not r["converged"]]
    return ExperimentResult(columns, rows, _metadata(spec), flagged)


# -- sampler checks -------------------------------------------------------------

def _arcsine_cdf(z):
    return 0.5 + np.arcsin(np.clip(z, -1, 1)) / np.pi


def _sampler_cases(d: int):
    """(rule name, sampler(S, seed) -> points, scalar functional, reference law)."""
    from .orthopoly import hermite, laguerre, legendre

    def ortho(fam):
        basis = TensorBasis.isotropic(fam, total_degree_set(d, 0))
        return lambda S, seed: sampling.sample_orthogonality(basis, S, seed).points

    k = 3
    return [
        ("orthogonality:legendre", ortho(legendre()), lambda z: z[:, 0], stats.uniform(-1, 2)),
        ("orthogonality:hermite", ortho(hermite()), lambda z: z[:, 0], stats.norm(0, np.sqrt(0.5))),
        ("orthogonality:laguerre", ortho(laguerre()), lambda z: z[:, 0], stats.expon()),
        ("equilibrium_cube", lambda S, s: sampling.sample_equilibrium_cube(d, S, s).points,
         lambda z: z[:, 0], stats.arcsine(-1, 2)),
        ("equilibrium_ball", lambda S, s: sampling.sample_equilibrium_ball(d, S, s).points,
         lambda z: np.sum(z**2, axis=1), stats.beta(d / 2, 0.5)),
        ("equilibrium_simplex", lambda S, s: sampling.sample_equilibrium_simplex(d, S, s).points,
         lambda z: np.sum(z, axis=1), stats.beta(d / 2, 1.5)),
        ("equilibrium_hermite", lambda S, s: sampling.sample_equilibrium_hermite(d, k, S, s).points,
         lambda z: np.sum(z**2, axis=1) / (2 * k), stats.beta(d / 2, d / 2 + 1)),
        ("equilibrium_laguerre", lambda S, s: sampling.sample_equilibrium_laguerre(d, k, S, s).points,
         lambda z: np.sum(z, axis=1) / (4 * k), stats.beta(d / 2, d / 2 + 1)),
    ]


def run_sampler_check(spec: ExperimentSpec, support_count: int | None = None) -> ExperimentResult:
    """KS and mean tests at the 1% level for each rule and dimension.

    Each rule is reduced to a scalar functional whose law is known exactly.
    """
    S = spec.sampler_count
    rows = []
    for d in spec.sampler_dims:
        for name, draw, functional, law in _sampler_cases(d):
            seed = derive_seed(spec.seed, name, d, 0)
            x = functional(draw(S, seed))
            ks = stats.kstest(x, law.cdf)
            rows.append({"rule": name, "d": d, "test": "ks", "statistic": ks.statistic,
                         "expected": None, "p_value": ks.pvalue, "passed": ks.pvalue > 0.01})
            mean, se = x.mean(), law.std() / math.sqrt(S)
            z = (mean - law.mean()) / se
            p = 2 * stats.norm.sf(abs(z))
            rows.append({"rule": name, "d": d, "test": "mean", "statistic": mean,
                         "expected": law.mean(), "p_value": p, "passed": p > 0.01})
            if support_count:
                rule_kind = name.split(":")[0]
                if rule_kind != "orthogonality":
                    pts = draw(support_count, derive_seed(spec.seed, name, d, 1))
                    rule = sampling.SamplingRule(rule_kind, d,
                                                 scale_degree=3 if "hermite" in name or "laguerre" in name else None)
                    bad = int(np.sum(~sampling.in_support(rule, pts)))
                    rows.append({"rule": name, "d": d, "test": "support", "statistic": bad,
                                 "expected": 0, "p_value": None, "passed": bad == 0})
    flagged = [f"{r['rule']} d={r['d']} {r['test']}" for r in rows if not r["passed"]]
    return ExperimentResult(SAMPLER_COLUMNS, rows, _metadata(spec, S=S), flagged)


def run_experiment(spec: ExperimentSpec, threads: int = 1,
                   truncate_at: float | None = None) -> ExperimentResult:
    if spec.kind == "condition":
        return run_condition_study(spec, threads)
    if spec.kind == "convergence":
        return run_convergence_study(spec, threads, truncate_at)
    if spec.kind == "diagnostics":
        return run_diagnostics_sweep(spec, threads)
    # support containment is checked on a ten times larger draw
    return run_sampler_check(spec, support_count=10 * spec.sampler_count)


# -- presets ----------------------------------------------------------------------

PRESETS: dict[str, tuple[str, str]] = {
    "cond-legendre-d2-loglinear": (
        "Legendre d=2 condition numbers, S = 1.5 N log N",
        "kind=condition\nfamily=legendre\nd=2\ndegrees=2:20\nsamples=loglinear(1.5)\nensemble=100\nseed=1\n"),
    "cond-legendre-d2-linear": (
        "Legendre d=2 condition numbers, S = 2N",
        "kind=condition\nfamily=legendre\nd=2\ndegrees=2:20\nsamples=linear(2)\nensemble=100\nseed=1\n"),
    "cond-legendre-d4-loglinear": (
        "Legendre d=4 condition numbers, S = 1.5 N log N",
        "kind=condition\nfamily=legendre\nd=4\ndegrees=1:10\nsamples=loglinear(1.5)\nensemble=100\nseed=1\n"),
    "cond-hermite-d2": (
        "Hermite d=2 condition numbers, S = N log N",
        "kind=condition\nfamily=hermite\nd=2\ndegrees=2:20\nsamples=loglinear(1)\nensemble=100\nseed=2\n"),
    "cond-laguerre-d2": (
        "Laguerre d=2 condition numbers, S = N log N",
        "kind=condition\nfamily=laguerre\nd=2\ndegrees=2:20\nsamples=loglinear(1)\nensemble=100\nseed=2\n"),
    "cond-legendre-dims": (
        "CLS-only Legendre d=4 condition numbers, S = 2 N log N",
        "kind=condition\nfamily=legendre\nd=4\ndegrees=1:10\nmethods=CLS\nsamples=loglinear(2)\nensemble=100\nseed=3\n"),
    "cond-laguerre-d10-lp": (
        "Laguerre d=10 on the l^(2/5) ball, S = N log N",
        "kind=condition\nfamily=laguerre\nd=10\nindex_set=lp\np=2/5\ndegrees=1:14\n"
        "samples=loglinear(1)\nensemble=20\nseed=4\n"),
    "conv-legendre-d2-bump": (
        "Legendre d=2 approximation of exp(-|z|^2), S = 2N",
        "kind=convergence\nfamily=legendre\nd=2\ndegrees=2:40:2\nsamples=linear(2)\n"
        "ensemble=20\ntarget=gaussian_bump\nseed=5\n"),
    "conv-hermite-d3-exp": (
        "Hermite d=3 approximation of exp(-sum z)",
        "kind=convergence\nfamily=hermite\nd=3\ndegrees=1:10\nsamples=loglinear(1.5)\n"
        "ensemble=20\ntarget=exponential\nseed=6\n"),
    "conv-hermite-d2-diffusion": (
        "Hermite d=2 approximation of the diffusion quantity u(1/3, z)",
        "kind=convergence\nfamily=hermite\nd=2\ndegrees=1:12\nsamples=loglinear(1.5)\n"
        "ensemble=20\ntarget=diffusion\nn_err=2000\nseed=7\n"),
    "conv-laguerre-d6-resistor": (
        "Laguerre d=6 approximation of the resistor ladder voltage",
        "kind=convergence\nfamily=laguerre\nd=6\ndegrees=1:6\nsamples=loglinear(1.5)\n"
        "ensemble=20\ntarget=resistor\nseed=8\n"),
    "diag-legendre": (
        "Legendre R-matrix spectrum, stability factor and Delta(f^(q))",
        "kind=diagnostics\nfamily=legendre\nd=1\ndegrees=1:40\nfq=0,1,2,3\n"),
    "diag-chebyshev": (
        "Chebyshev R-matrix spectrum and stability factor",
        "kind=diagnostics\nfamily=chebyshev\nd=1\ndegrees=1:40\n"),
    "diag-hermite": (
        "Hermite R-matrix spectrum",
        "kind=diagnostics\nfamily=hermite\nd=1\ndegrees=1:40\n"),
    "diag-laguerre": (
        "Laguerre R-matrix spectrum",
        "kind=diagnostics\nfamily=laguerre\nd=1\ndegrees=1:40\n"),
    "samplers": (
        "Distribution checks for every sampling rule",
        "kind=samplers\nsampler_count=100000\nsampler_dims=1,2,4\nseed=9\n"),
}
