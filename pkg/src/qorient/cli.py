"""Command-line front end emitting figure datasets and headline summaries.

Datasets are CSV (header row, floats at 12 significant digits, angles in
degrees) or JSON (the same columns as arrays plus a metadata block).
Output goes to --output when given, otherwise to stdout with the summary
moved to stderr. Identical configurations, seed included, produce
byte-identical files; nothing is read from the environment.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .classical import classical_maximum, classical_minimum, classical_success_bound, enumerate_all
from .scoring import CLASSICAL_BOUND, N_TERMS, beta_value
from .simulate import (
    beta_from_counts,
    fit_noise,
    fit_noise_max_point,
    run_game,
    synth_counts,
)
from .spectra import sweep_surface
from .states import (
    BellState,
    OneParam,
    QuantumState,
    SettingTriple,
    TwoParam,
    bell_state_density,
    noisy_phi_plus,
    superpose,
)

MIN_STATISTICAL_SAMPLES = 100
DEFAULT_SETTINGS_DEG = (0.0, 120.0, -120.0)


def parse_state(spec: str) -> QuantumState:
    """Parse a state spec: bell label | noisy:P | superpose:A,B,AMP."""
    text = spec.strip().lower()
    if text.startswith("noisy:"):
        try:
            p = float(text.removeprefix("noisy:"))
        except ValueError:
            raise ValueError(f"bad noise parameter in state spec {spec!r}") from None
        return noisy_phi_plus(p)
    if text.startswith("superpose:"):
        parts = text.removeprefix("superpose:").split(",")
        if len(parts) != 3:
            raise ValueError(f"state spec {spec!r} needs superpose:LABEL,LABEL,AMPLITUDE")
        a = BellState.from_label(parts[0])
        b = BellState.from_label(parts[1])
        try:
            amp = float(parts[2])
        except ValueError:
            raise ValueError(f"bad amplitude in state spec {spec!r}") from None
        if not -1.0 <= amp <= 1.0:
            raise ValueError(f"superpose amplitude must lie in [-1, 1], got {amp}")
        return superpose(a, b, amp, math.sqrt(1.0 - amp * amp))
    return bell_state_density(BellState.from_label(text))


def _format_value(v) -> str:
    if isinstance(v, bool):
        return str(int(v))
    if isinstance(v, float):
        return f"{v + 0.0:.12g}"
    return str(v)


def write_dataset(columns, rows, args, metadata) -> None:
    """Serialize a dataset as CSV or JSON to --output, or stdout."""
    if args.format == "json":
        payload = {
            "metadata": dict(metadata, command=args.command, version=__version__),
            "columns": list(columns),
            "data": {c: [row[k] for row in rows] for k, c in enumerate(columns)},
        }
        text = json.dumps(payload, sort_keys=True, indent=1) + "\n"
    else:
        lines = [",".join(columns)]
        lines += [",".join(_format_value(v) for v in row) for row in rows]
        text = "\n".join(lines) + "\n"

    if args.output is None:
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _summary_stream(args):
    return sys.stderr if args.output is None else sys.stdout


def _say(args, line: str) -> None:
    print(line, file=_summary_stream(args))


def _settings_from_args(args) -> SettingTriple:
    return SettingTriple.from_degrees(*args.settings)


def cmd_eigs(args) -> int:
    family = OneParam if args.one_param else TwoParam
    dataset = sweep_surface(family, args.grid, include_numeric=not args.one_param)
    write_dataset(dataset.columns, dataset.rows, args,
                  {"grid": args.grid, "family": "one-param" if args.one_param else "two-param"})
    lam_cols = [dataset.column(c) for c in ("lambda1", "lambda2", "lambda3", "lambda4")]
    top = max(max(col) for col in lam_cols)
    low = min(min(col) for col in lam_cols)
    _say(args, f"eigenvalue range over grid: [{low:.9g}, {top:.9g}] "
               f"(classical bound {CLASSICAL_BOUND:g})")
    return 0


def _extreme_rows(dataset, col: str, pick) -> tuple[float, list[tuple]]:
    values = dataset.column(col)
    best = pick(values)
    where = [row for row, v in zip(dataset.rows, values) if abs(v - best) <= 1e-9]
    return best, where


def cmd_beta_surface(args) -> int:
    state = parse_state(args.state)
    dataset = sweep_surface(TwoParam, args.grid, state=state)
    write_dataset(dataset.columns, dataset.rows, args,
                  {"grid": args.grid, "state": args.state})
    best, at = _extreme_rows(dataset, "beta", max)
    low, _ = _extreme_rows(dataset, "beta", min)
    spots = ", ".join(f"({r[0]:g}, {r[1]:g})" for r in at[:4])
    _say(args, f"beta max over grid = {best:.9g} at (phi_deg, theta_deg): {spots}"
               + (" ..." if len(at) > 4 else ""))
    _say(args, f"beta min over grid = {low:.9g}; classical bound {CLASSICAL_BOUND:g}; "
               f"success bound {classical_success_bound():.6f}")
    return 0


def cmd_sweep_1d(args) -> int:
    state = parse_state(args.state)
    dataset = sweep_surface(OneParam, args.grid, state=state)
    write_dataset(dataset.columns, dataset.rows, args,
                  {"grid": args.grid, "state": args.state})
    best, at = _extreme_rows(dataset, "beta", max)
    spots = ", ".join(f"{r[0]:g}" for r in at[:4])
    _say(args, f"beta max over sweep = {best:.9g} at theta_deg: {spots}"
               + (" ..." if len(at) > 4 else ""))
    return 0


def cmd_classical(args) -> int:
    scored = enumerate_all()
    columns = ("a1", "a2", "a3", "b1", "b2", "b3", "beta")
    rows = [s.alice + s.bob + (score,) for s, score in scored]
    write_dataset(columns, rows, args, {"strategies": len(rows)})
    best, argmax = classical_maximum()
    worst, _ = classical_minimum()
    _say(args, f"{len(rows)} deterministic strategies; max beta = {best} "
               f"({len(argmax)} strategies), min beta = {worst}")
    _say(args, f"classical success bound = {best}/{N_TERMS} = {classical_success_bound():.6f}")
    return 0


def cmd_simulate(args) -> int:
    if args.trials < MIN_STATISTICAL_SAMPLES:
        raise ValueError(f"--trials must be >= {MIN_STATISTICAL_SAMPLES} for a "
                         "meaningful estimate")
    state = parse_state(args.state)
    settings = _settings_from_args(args)
    estimate = run_game(state, settings, args.trials, args.seed)
    expected = beta_value(state, settings).success_probability
    columns = ("state", "t1_deg", "t2_deg", "t3_deg", "trials", "seed",
               "success_rate", "stderr", "expected_success")
    rows = [(args.state, *args.settings, args.trials, args.seed,
             estimate.success_rate, estimate.stderr, expected)]
    write_dataset(columns, rows, args, {"state": args.state, "seed": args.seed,
                                        "trials": args.trials})
    _say(args, f"success rate = {estimate.success_rate:.6f} +- {estimate.stderr:.6f} "
               f"({args.trials} trials, seed {args.seed})")
    _say(args, f"Born-rule expectation = {expected:.6f}; classical bound "
               f"{CLASSICAL_BOUND:g}/{N_TERMS} = {classical_success_bound():.6f}")
    return 0


def cmd_counts(args) -> int:
    if args.n_per_pair < MIN_STATISTICAL_SAMPLES:
        raise ValueError(f"--n-per-pair must be >= {MIN_STATISTICAL_SAMPLES} for a "
                         "meaningful reconstruction")
    state = parse_state(args.state)
    settings = _settings_from_args(args)
    table = synth_counts(state, settings, args.n_per_pair, args.seed)
    degrees = settings.as_degrees()
    columns = ("i", "j", "theta_i_deg", "theta_j_deg",
               "n_pp", "n_pm", "n_mp", "n_mm", "n_tot")
    rows = []
    for i in range(3):
        for j in range(3):
            cell = table.counts[i, j]
            rows.append((i + 1, j + 1, degrees[i], degrees[j],
                         int(cell[0]), int(cell[1]), int(cell[2]), int(cell[3]),
                         int(cell.sum())))
    write_dataset(columns, rows, args, {"state": args.state, "seed": args.seed,
                                        "n_per_pair": args.n_per_pair})
    recon = beta_from_counts(table)
    _say(args, f"beta reconstructed from counts = {recon.beta:.6f} "
               f"(success {recon.success_probability:.6f}, seed {args.seed})")
    return 0


def cmd_fit(args) -> int:
    if args.beta_max is None and args.input is None:
        raise ValueError("fit needs --beta-max and/or --input")
    fits = []
    if args.beta_max is not None:
        fits.append(fit_noise_max_point(args.beta_max))
    if args.input is not None:
        observed = _read_sweep_observations(args.input)
        fits.append(fit_noise(observed, method="curve-fit"))
    columns = ("method", "p_hat", "residual")
    rows = [(f.method, f.p_hat, f.residual) for f in fits]
    write_dataset(columns, rows, args, {"beta_max": args.beta_max, "input": args.input})
    for f in fits:
        _say(args, f"{f.method}: p = {f.p_hat:.6f} (residual {f.residual:.3g})")
    if len(fits) == 1 and fits[0].method == "max-point":
        _say(args, "note: a single maximum pins p through the noise line only; "
                   "compare with a full-curve fit (--input) when sweep data exist")
    return 0


def _read_sweep_observations(path: str) -> list[tuple[OneParam, float]]:
    """Read (theta_deg, beta) rows from a sweep-1d CSV file."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines:
        raise ValueError(f"no data in {path}")
    header = lines[0].split(",")
    try:
        k_theta = header.index("theta_deg")
        k_beta = header.index("beta")
    except ValueError:
        raise ValueError(f"{path} must have theta_deg and beta columns") from None
    observed = []
    for ln in lines[1:]:
        parts = ln.split(",")
        observed.append((OneParam(math.radians(float(parts[k_theta]))),
                         float(parts[k_beta])))
    if not observed:
        raise ValueError(f"no observation rows in {path}")
    return observed


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qorient",
        description="Datasets and summaries for the entanglement-assisted "
                    "orientation game.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--output", "-o", default=None, metavar="PATH",
                       help="write the dataset here (default: stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv",
                       help="dataset format (default: csv)")

    def add_state(p, default="phi+"):
        p.add_argument("--state", default=default, metavar="SPEC",
                       help="bell label (phi+, phi-, psi+, psi-), noisy:P, or "
                            "superpose:A,B,AMP with AMP the first amplitude "
                            f"(default: {default})")

    def add_settings(p):
        p.add_argument("--settings", nargs=3, type=float, metavar=("D1", "D2", "D3"),
                       default=list(DEFAULT_SETTINGS_DEG),
                       help="measurement angles in degrees "
                            "(default: 0 120 -120, the quantum optimum)")

    p = sub.add_parser("eigs", help="eigenvalue bounds over a measurement family grid")
    p.add_argument("--grid", type=int, default=181,
                   help="points per axis over [-90, 90] degrees (default: 181)")
    p.add_argument("--one-param", action="store_true",
                   help="sweep the single-parameter family (0, 2t, -2t) instead")
    add_common(p)
    p.set_defaults(func=cmd_eigs)

    p = sub.add_parser("beta-surface", help="score surface of a state over the "
                                            "two-parameter family")
    add_state(p)
    p.add_argument("--grid", type=int, default=181,
                   help="points per axis over [-90, 90] degrees (default: 181)")
    add_common(p)
    p.set_defaults(func=cmd_beta_surface)

    p = sub.add_parser("sweep-1d", help="score of a state along the one-parameter family")
    add_state(p)
    p.add_argument("--grid", type=int, default=361,
                   help="points over [-90, 90] degrees (default: 361)")
    add_common(p)
    p.set_defaults(func=cmd_sweep_1d)

    p = sub.add_parser("classical", help="enumerate all 64 deterministic strategies")
    add_common(p)
    p.set_defaults(func=cmd_classical)

    p = sub.add_parser("simulate", help="Monte Carlo rounds of the game")
    add_state(p)
    add_settings(p)
    p.add_argument("--trials", type=int, default=100000,
                   help="number of rounds (default: 100000, minimum 100)")
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default: 0)")
    add_common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("counts", help="synthetic coincidence counts per setting pair")
    add_state(p)
    add_settings(p)
    p.add_argument("--n-per-pair", type=int, default=10000,
                   help="coincidences per setting pair (default: 10000, minimum 100)")
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default: 0)")
    add_common(p)
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("fit", help="fit the white-noise parameter of the source")
    p.add_argument("--beta-max", type=float, default=None,
                   help="invert a single maximal score through the noise line")
    p.add_argument("--input", default=None, metavar="PATH",
                   help="sweep-1d CSV (theta_deg, beta) for a full-curve fit")
    add_common(p)
    p.set_defaults(func=cmd_fit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
