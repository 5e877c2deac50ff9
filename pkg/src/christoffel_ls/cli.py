"""Command-line entry point.

    christoffel-ls run <config-path | preset:NAME> [--out CSV] [--seed U64]
                       [--threads N] [--truncate L]
    christoffel-ls check-samplers [--s COUNT]
    christoffel-ls list-presets

Every flag can also be set through an ``XLS_``-prefixed environment variable
(``XLS_OUT``, ``XLS_SEED``, ``XLS_THREADS``, ``XLS_TRUNCATE``, ``XLS_S``);
explicit flags win over the environment.

Exit codes: 0 success, 2 configuration error, 3 when a result row is flagged
for more than 10% failed runs (or a sampler test fails).
"""
from __future__ import annotations

import argparse
import dataclasses
import logging
import os
import sys
from pathlib import Path

from .experiments import PRESETS, ConfigError, parse_config, run_experiment

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_FLAGGED = 3

log = logging.getLogger("christoffel_ls")


def _env(name: str, convert):
    raw = os.environ.get(f"XLS_{name}")
    if raw is None or raw == "":
        return None
    try:
        return convert(raw)
    except ValueError as exc:
        raise ConfigError(f"bad value for XLS_{name}: {raw!r}") from exc


def _pick(flag, name: str, convert):
    return flag if flag is not None else _env(name, convert)


def _load_config_text(source: str) -> str:
    name = source[len("preset:"):] if source.startswith("preset:") else None
    if name is None and source in PRESETS and not Path(source).exists():
        name = source
    if name is not None:
        if name not in PRESETS:
            raise ConfigError(f"unknown preset {name!r}; see list-presets")
        return PRESETS[name][1]
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {source!r}: {exc.strerror}") from exc


def _emit(result, out: str | None) -> None:
    text = result.to_csv()
    if out:
        Path(out).write_text(text)
        log.info("wrote %d rows to %s", len(result.rows), out)
    else:
        sys.stdout.write(text)
    for note in result.flagged:
        log.warning("flagged: %s", note)


def cmd_run(args) -> int:
    spec = parse_config(_load_config_text(args.config))
    seed = _pick(args.seed, "SEED", int)
    threads = _pick(args.threads, "THREADS", int) or 1
    truncate_at = _pick(args.truncate, "TRUNCATE", float)
    out = _pick(args.out, "OUT", str) or spec.output
    if threads < 1:
        raise ConfigError("--threads must be >= 1")
    if truncate_at is not None and truncate_at < 0:
        raise ConfigError("--truncate must be non-negative")
    if seed is not None:
        if not 0 <= seed < 2**64:
            raise ConfigError("--seed must fit in 64 unsigned bits")
        spec = dataclasses.replace(spec, seed=seed)
    result = run_experiment(spec, threads=threads, truncate_at=truncate_at)
    _emit(result, out)
    return EXIT_FLAGGED if result.flagged else EXIT_OK


def cmd_check_samplers(args) -> int:
    spec = parse_config(PRESETS["samplers"][1])
    count = _pick(args.s, "S", int)
    if count is not None:
        if count < 100:
            raise ConfigError("--s must be at least 100")
        spec = dataclasses.replace(spec, sampler_count=count)
    seed = _env("SEED", int)
    if seed is not None:
        spec = dataclasses.replace(spec, seed=seed)
    result = run_experiment(spec)
    _emit(result, _env("OUT", str))
    return EXIT_FLAGGED if result.flagged else EXIT_OK


def cmd_list_presets(args) -> int:
    width = max(len(n) for n in PRESETS)
    for name, (desc, _) in PRESETS.items():
        print(f"{name:<{width}}  {desc}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="christoffel-ls",
        description="Monte Carlo and Christoffel least-squares polynomial approximation experiments.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run an experiment config or a built-in preset")
    run.add_argument("config", help="path to a key=value config file, or preset:NAME")
    run.add_argument("--out", help="CSV output path (default: stdout)")
    run.add_argument("--seed", type=int, help="override the base seed")
    run.add_argument("--threads", type=int, help="worker threads for the ensemble grid")
    run.add_argument("--truncate", type=float, metavar="L",
                     help="truncate the fitted surrogate to [-L, L] when estimating errors")
    run.set_defaults(func=cmd_run)

    chk = sub.add_parser("check-samplers", help="distribution tests for every sampling rule")
    chk.add_argument("--s", type=int, help="samples per rule and dimension (default 100000)")
    chk.set_defaults(func=cmd_check_samplers)

    lst = sub.add_parser("list-presets", help="list built-in experiment presets")
    lst.set_defaults(func=cmd_list_presets)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors, which is also our config-error code
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
