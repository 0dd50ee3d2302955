"""Batch command-line front end.

Commands: ``sample | spectrum | clt | moments | oracle | variance``.
Configuration comes from an optional flat ``key = value`` file ('#'
starts a comment) overridden by command-line flags; unknown keys are
rejected.  Every command is deterministic given its configuration
(the ``runtime_seconds`` report field excluded).

Exit codes: 0 ok, 1 config, 2 I/O, 3 solver, 4 enumeration budget.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import io
from .centro import DISTRIBUTIONS, assert_centrosymmetric, sample_centro
from .eig import eigenvalues, spectral_radial_cdf
from .errors import BudgetExceededError, ConfigError, SolverConvergenceError
from .fluctuation import default_threads, moment_suite, run_clt
from .oracle import DEFAULT_TERM_BUDGET, convergence_table
from .poly import Polynomial
from .variance import variance_report

__all__ = ["RunConfig", "main", "parse_config_file"]

RADIAL_GRID = (0.25, 0.5, 0.75, 1.0, 1.05)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_IO = 2
EXIT_SOLVER = 3
EXIT_BUDGET = 4


@dataclass
class RunConfig:
    """Validated settings for one command invocation."""

    command: str
    n: int = 1000
    trials: int | None = None
    kmax: int = 4
    n_list: list[int] | None = None
    k_list: list[int] | None = None
    l_list: list[int] | None = None
    dist: str = "gaussian"
    seed: int = 1
    f: list[float] | None = None
    radius: float = 1.5
    nodes: int = 256
    out: str = "."
    threads: int | None = None
    budget: int = DEFAULT_TERM_BUDGET


_INT_KEYS = {"n", "trials", "kmax", "nodes", "seed", "threads", "budget"}
_FLOAT_KEYS = {"radius"}
_STR_KEYS = {"dist", "out"}
_FLOAT_LIST_KEYS = {"f"}
_INT_LIST_KEYS = {"n_list", "k_list", "l_list"}
_CONFIG_KEYS = _INT_KEYS | _FLOAT_KEYS | _STR_KEYS | _FLOAT_LIST_KEYS | _INT_LIST_KEYS


def _coerce(key: str, text: str):
    try:
        if key in _INT_KEYS:
            return int(text)
        if key in _FLOAT_KEYS:
            return float(text)
        if key in _FLOAT_LIST_KEYS:
            return [float(v) for v in text.split(",") if v.strip() != ""]
        if key in _INT_LIST_KEYS:
            return [int(v) for v in text.split(",") if v.strip() != ""]
    except ValueError as exc:
        raise ConfigError(f"bad value for {key!r}: {text!r}") from exc
    return text


def parse_config_file(path) -> dict:
    """Parse a flat ``key = value`` file; unknown keys are rejected."""
    values: dict = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, text = line.partition("=")
        key = key.strip()
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown config key {key!r}")
        values[key] = _coerce(key, text.strip())
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="centrolab",
        description="Centrosymmetric random-matrix experiments: sampling, "
        "spectra, trace moments, fluctuation statistics, and limiting variance.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("sample", "draw one matrix and write it as CSV"),
        ("spectrum", "eigenvalues of one draw plus radial summary"),
        ("clt", "Monte Carlo fluctuation run with variance and KS report"),
        ("moments", "Monte Carlo trace-moment estimates against targets"),
        ("oracle", "exact chain-expectation table by enumeration"),
        ("variance", "closed form and contour quadratures of the variance"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", type=str, default=None, help="flat key=value file")
        p.add_argument("--out", type=str, default=None, help="output directory")
        p.add_argument("--seed", type=int, default=None, help="master seed")
        p.add_argument("--n", type=int, default=None, help="matrix order")
        p.add_argument("--trials", type=int, default=None, help="Monte Carlo trials")
        p.add_argument("--f", type=str, default=None, help="coefficients c0,c1,...,cd")
        p.add_argument("--dist", type=str, default=None, choices=DISTRIBUTIONS)
        p.add_argument("--radius", type=float, default=None, help="contour radius")
        p.add_argument("--nodes", type=int, default=None, help="quadrature nodes")
        p.add_argument("--kmax", type=int, default=None, help="largest trace power")
        p.add_argument("--threads", type=int, default=None, help="worker threads")
    return parser


def _assemble_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    if args.config is not None:
        try:
            file_values = parse_config_file(args.config)
        except OSError as exc:
            raise ConfigError(f"cannot read config file: {exc}") from exc
        for key, value in file_values.items():
            setattr(cfg, key, value)
    overrides = {
        "out": args.out,
        "seed": args.seed,
        "n": args.n,
        "trials": args.trials,
        "dist": args.dist,
        "radius": args.radius,
        "nodes": args.nodes,
        "kmax": args.kmax,
        "threads": args.threads,
    }
    for key, value in overrides.items():
        if value is not None:
            setattr(cfg, key, value)
    if args.f is not None:
        cfg.f = _coerce("f", args.f)
    _validate(cfg)
    return cfg


def _validate(cfg: RunConfig) -> None:
    if cfg.n < 1:
        raise ConfigError(f"matrix order must be positive, got {cfg.n}")
    if cfg.trials is not None and cfg.trials < 2:
        raise ConfigError(f"need at least 2 trials, got {cfg.trials}")
    if cfg.kmax < 2:
        raise ConfigError(f"kmax must be at least 2, got {cfg.kmax}")
    if cfg.nodes < 2:
        raise ConfigError(f"nodes must be at least 2, got {cfg.nodes}")
    if cfg.radius <= 1.0:
        raise ConfigError(f"contour radius must exceed 1, got {cfg.radius}")
    if cfg.dist not in DISTRIBUTIONS:
        raise ConfigError(f"unsupported distribution {cfg.dist!r}")
    if cfg.budget < 1:
        raise ConfigError(f"budget must be positive, got {cfg.budget}")
    for key in ("n_list", "k_list", "l_list"):
        values = getattr(cfg, key)
        if values is not None and any(v < 1 for v in values):
            raise ConfigError(f"{key} entries must be positive, got {values}")
    if cfg.threads is not None and cfg.threads < 1:
        raise ConfigError(f"threads must be positive, got {cfg.threads}")


def _polynomial(cfg: RunConfig) -> Polynomial:
    if not cfg.f:
        raise ConfigError("a test polynomial is required (--f c0,c1,...,cd)")
    try:
        return Polynomial(cfg.f)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _out_dir(cfg: RunConfig) -> Path:
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_sample(cfg: RunConfig) -> int:
    m = sample_centro(cfg.n, cfg.dist, cfg.seed)
    path = io.write_matrix_csv(
        _out_dir(cfg) / f"matrix_n{cfg.n}_{cfg.dist}_seed{cfg.seed}.csv", m
    )
    ok = assert_centrosymmetric(m, tol=0.0)
    print(f"{path} centrosymmetric={ok}")
    return EXIT_OK


def cmd_spectrum(cfg: RunConfig) -> int:
    m = sample_centro(cfg.n, cfg.dist, cfg.seed)
    spec = eigenvalues(m.entries)
    out = _out_dir(cfg)
    csv_path = io.write_spectrum_csv(
        out / f"spectrum_n{cfg.n}_{cfg.dist}_seed{cfg.seed}.csv", spec
    )
    cdf = spectral_radial_cdf(spec, RADIAL_GRID)
    payload = {
        "n": cfg.n,
        "dist": cfg.dist,
        "seed": cfg.seed,
        "converged": spec.converged,
        "iterations": spec.iterations,
        "radial_cdf": {str(r): float(c) for r, c in zip(RADIAL_GRID, cdf)},
    }
    json_path = io.write_json(
        out / f"radial_n{cfg.n}_{cfg.dist}_seed{cfg.seed}.json", payload
    )
    print(f"{csv_path} {json_path}")
    if not spec.converged:
        raise SolverConvergenceError(
            f"eigensolver did not converge after {spec.iterations} sweeps; "
            f"partial output written to {csv_path}"
        )
    return EXIT_OK


def cmd_clt(cfg: RunConfig) -> int:
    f = _polynomial(cfg)
    trials = 750 if cfg.trials is None else cfg.trials
    report = run_clt(cfg.n, trials, f, cfg.dist, cfg.seed, cfg.threads)
    out = _out_dir(cfg)
    payload = {
        "n": report.n,
        "trials": report.trials,
        "dist": report.dist,
        "seed": report.seed,
        "f": f.coefficient_list(),
        "empirical_variance": report.empirical_variance,
        "theoretical_variance": report.theoretical_variance,
        "ks": report.ks_statistic,
        "runtime_seconds": report.runtime_seconds,
    }
    stem = f"clt_n{cfg.n}_{cfg.dist}_seed{cfg.seed}"
    json_path = io.write_json(out / f"{stem}.json", payload)
    hist_path = io.write_histogram_csv(
        out / f"{stem}_hist.csv",
        report.samples.real if np.iscomplexobj(report.samples) else report.samples,
    )
    print(f"{json_path} {hist_path}")
    return EXIT_OK


def cmd_moments(cfg: RunConfig) -> int:
    trials = 2000 if cfg.trials is None else cfg.trials
    report = moment_suite(cfg.n, trials, cfg.kmax, cfg.dist, cfg.seed, cfg.threads)
    rows = []
    for e in report.entries:
        rows.append(
            {
                "k": e.k,
                "l": e.l,
                "estimate": e.estimate,
                "standard_error": e.standard_error,
                "target": e.target,
                "z_score": e.z_score,
                "flag": "PASS" if abs(e.z_score) <= 4.0 else "FAIL",
            }
        )
    payload = {
        "n": report.n,
        "trials": report.trials,
        "kmax": report.k_max,
        "dist": report.dist,
        "seed": report.seed,
        "rows": rows,
    }
    path = io.write_json(
        _out_dir(cfg) / f"moments_n{cfg.n}_{cfg.dist}_seed{cfg.seed}.json", payload
    )
    print(path)
    return EXIT_OK


def cmd_oracle(cfg: RunConfig) -> int:
    n_list = cfg.n_list if cfg.n_list else [cfg.n]
    k_list = cfg.k_list if cfg.k_list else list(range(2, cfg.kmax + 1))
    l_list = cfg.l_list if cfg.l_list else []
    rows = convergence_table(k_list, l_list, n_list, cfg.budget)
    path = io.write_chain_table_csv(_out_dir(cfg) / "oracle_table.csv", rows)
    print(path)
    return EXIT_OK


def cmd_variance(cfg: RunConfig) -> int:
    f = _polynomial(cfg)
    report = variance_report(f, cfg.radius, cfg.nodes)
    payload = {
        "f": f.coefficient_list(),
        "closed_form": report.closed_form,
        "quadrature": {
            tag: {
                "variant": q.variant,
                "radius": q.radius,
                "nodes": q.nodes,
                "value_re": q.value.real,
                "value_im": q.value.imag,
                "warning": q.warning,
            }
            for tag, q in report.quadrature.items()
        },
        "discrepancy": report.discrepancy,
    }
    path = io.write_json(_out_dir(cfg) / "variance_report.json", payload)
    print(path)
    return EXIT_OK


_COMMANDS = {
    "sample": cmd_sample,
    "spectrum": cmd_spectrum,
    "clt": cmd_clt,
    "moments": cmd_moments,
    "oracle": cmd_oracle,
    "variance": cmd_variance,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _assemble_config(args)
        return _COMMANDS[cfg.command](cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except SolverConvergenceError as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except BudgetExceededError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
