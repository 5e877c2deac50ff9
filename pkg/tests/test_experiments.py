import numpy as np
import pytest
from scipy import integrate

from christoffel_ls.experiments import (
    PRESETS,
    STUDY_COLUMNS,
    ConfigError,
    SampleCountRule,
    MAX_RESAMPLES,
    derive_seed,
    estimate_error,
    parse_config,
    run_convergence_study,
    run_experiment,
)
from christoffel_ls.models import ModelError, TargetFunction, f_gaussian_bump
from christoffel_ls.multiindex import total_degree_set
from christoffel_ls.orthopoly import TensorBasis, legendre

SMALL = """
kind = condition
family = legendre
d = 2
degrees = 1:3
samples = loglinear(1.5)   # S = 1.5 N log N
ensemble = 4
seed = 11
"""


def strip_timestamp(text):
    return "\n".join(l for l in text.splitlines() if not l.startswith("# timestamp="))


def test_parse_config_and_ranges():
    spec = parse_config(SMALL)
    assert spec.degrees == (1, 2, 3) and spec.d == 2 and spec.ensemble == 4
    assert str(spec.samples) == "loglinear(1.5)"
    assert parse_config("kind=diagnostics\nd=1\ndegrees=2:10:4,12").degrees == (2, 6, 10, 12)


@pytest.mark.parametrize("text", [
    "family=legendre",                                   # no kind
    "kind=condition\nfoo=1",                             # unknown key
    "kind=condition\ndegrees=3,2",                       # not increasing
    "kind=condition\nensemble=0",
    "kind=condition\nfamily=gegenbauer",
    "kind=condition\nmethods=MC,QR",
    "kind=condition\ndegrees=1:4\nsamples=linear(0.5)",  # S < N
    "kind=condition\nsamples=cubic(2)",
    "kind=diagnostics\nd=2",
    "kind=condition\nd=two",
])
def test_config_errors(text):
    with pytest.raises(ConfigError):
        parse_config(text)


def test_sample_count_rules():
    assert SampleCountRule.parse("linear(2)")(10) == 20
    assert SampleCountRule.parse("loglinear(1.5)")(10) == int(np.ceil(15 * np.log(10)))
    assert SampleCountRule.parse("loglinear(1)")(1) == 0
    assert SampleCountRule.parse("loglinearmax(1)")(1) == 1
    assert SampleCountRule.parse("LogLinear(3/2)").c == 1.5


def test_derive_seed_distinct():
    seeds = {derive_seed(1, m, k, r) for m in ("MC", "CLS") for k in range(20) for r in range(50)}
    assert len(seeds) == 2 * 20 * 50
    assert derive_seed(1, "MC", 3, 4) == derive_seed(1, "MC", 3, 4)
    assert derive_seed(1, "MC", 3, 4, attempt=1) != derive_seed(1, "MC", 3, 4)


def test_condition_study_rows_and_determinism():
    spec = parse_config(SMALL)
    a, b = run_experiment(spec), run_experiment(spec, threads=3)
    assert strip_timestamp(a.to_csv()) == strip_timestamp(b.to_csv())
    assert a.columns == STUDY_COLUMNS and len(a.rows) == 2 * 3
    row = a.select(method="CLS", k=2)[0]
    assert row["N"] == 6 and row["S"] == int(np.ceil(1.5 * 6 * np.log(6))) and row["failures"] == 0
    assert row["mean_err"] is None
    assert a.to_csv().splitlines()[2] == ",".join(STUDY_COLUMNS)
    assert ",NA," in a.to_csv()


def test_zero_index_set_condition_is_one():
    spec = parse_config("kind=condition\nd=2\ndegrees=0\nsamples=linear(3)\nensemble=3")
    for row in run_experiment(spec).rows:
        assert row["mean_cond"] == pytest.approx(1.0)


def test_single_degree_convergence():
    spec = parse_config("kind=convergence\nd=2\ndegrees=3\nsamples=linear(3)\nensemble=2\nn_err=500")
    res = run_experiment(spec)
    assert len(res.rows) == 2 and all(r["mean_err"] > 0 for r in res.rows)


def test_estimate_error_zero_polynomial_is_norm():
    # ||f||_w^2 for exp(-|z|^2) under the uniform density on [-1, 1]^2 is (int_{-1}^1 e^{-2t^2} dt / 2)^2
    one_d = integrate.quad(lambda t: np.exp(-2 * t * t), -1, 1)[0] / 2
    basis = TensorBasis.isotropic(legendre(), total_degree_set(2, 2))
    err = estimate_error(basis, np.zeros(basis.size), f_gaussian_bump(2), n_err=200_000, seed=3)
    assert err == pytest.approx(one_d, rel=5e-3)


def test_estimate_error_exact_and_seed_independent():
    basis = TensorBasis.isotropic(legendre(), total_degree_set(2, 2))
    f = TargetFunction("quad", 2, "cube", lambda z: 1 + z[:, 0] * z[:, 1], vectorized=True)
    c = np.zeros(basis.size)
    c[0] = 1.0
    c[4] = 1 / 3  # phi_(1,1) = 3 z1 z2
    assert estimate_error(basis, c, f, seed=1) < 1e-12
    e1 = estimate_error(basis, np.zeros(6), f, seed=5)
    e2 = estimate_error(basis, np.zeros(6), f, seed=5)
    assert e1 == e2


def test_failures_counted_and_flagged():
    # fails on every fitting ensemble (S = 70 points) but not on the 50 error-evaluation points
    def fragile(z):
        if z.shape[0] == 70:
            raise ModelError("boom", z)
        return np.ones(z.shape[0])

    target = TargetFunction("fragile", 1, "cube", fragile, vectorized=True)
    spec = parse_config("kind=convergence\nd=1\ndegrees=6\nsamples=linear(10)\nensemble=5\nn_err=50\nseed=2")
    res = run_convergence_study(spec, target=target)
    assert all(r["failures"] == 5 and r["mean_err"] is None for r in res.rows)
    assert res.metadata["resamples"] == 2 * 5 * (MAX_RESAMPLES + 1)
    assert res.flagged and "# flagged: method=MC k=6 failures=5/5" in res.to_csv()


def test_diagnostics_sweep_columns():
    res = run_experiment(parse_config("kind=diagnostics\nfamily=chebyshev\nd=1\ndegrees=1:3\nfq=0"))
    assert res.columns[-2:] == ["converged", "delta_f0"]
    assert [r["k"] for r in res.rows] == [1, 2, 3]
    assert res.rows[2]["stability_factor"] == pytest.approx(7 / 4)


def test_presets_parse():
    for name, (desc, text) in PRESETS.items():
        spec = parse_config(text)
        assert desc and spec.kind in ("condition", "convergence", "diagnostics", "samplers"), name


def test_spec_digest_ignores_output():
    a = parse_config(SMALL)
    b = parse_config(SMALL + "output = x.csv\n")
    c = parse_config(SMALL.replace("seed = 11", "seed = 12"))
    assert a.digest == b.digest != c.digest
