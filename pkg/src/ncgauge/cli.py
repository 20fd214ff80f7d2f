"""Command-line driver: verification suites, action minimization, and the
two-point Higgs scan, with deterministic CSV/JSON outputs.

Three commands (positional or via ``--command``):

* ``verify``   — run the seeded invariant suites; JSON report to stdout;
  exit 0 iff everything passes.
* ``minimize`` — gradient descent on the matrix-model action from a
  seeded random start (or, with ``--dims``, evaluate a lattice
  configuration); CSV trace (iter, action, grad_norm) plus a JSON
  summary with the vacuum classification.
* ``two_point``— scan the two-point model action over a φ-grid;
  CSV (re_phi, im_phi, action) plus a JSON summary.

A JSON config file (``--config``) overrides command-line flags.  With
``--out`` the CSV goes to that file and the JSON summary to stdout;
without it the CSV goes to stdout and the summary to stderr.  Outputs
contain no timestamps and all randomness flows from ``--seed``, so a
fixed seed reproduces results byte-for-byte.

Exit codes: 0 success; 1 suite failure or missed convergence; 2 bad
configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import verify as verify_mod
from .basis import MatrixBasis
from .connections import (
    casimir_invariant,
    flat_connection_check,
    minimize,
    random_connection,
)
from .errors import ConfigError, NCGaugeError
from .lattice import (
    lattice_action,
    random_lattice_config,
    vacuum_config,
    zero_momentum_gradient_norm,
)
from .spectral import two_point_action

__all__ = ["RunConfig", "build_config", "cmd_verify", "cmd_minimize", "cmd_two_point", "main"]

_COMMANDS = ("verify", "minimize", "two_point")

_CONFIG_KEYS = {
    "command",
    "n",
    "N",
    "r",
    "dims",
    "mu",
    "seed",
    "steps",
    "tol",
    "out",
    "init",
    "grid",
    "M",
}


@dataclass
class RunConfig:
    """Fully resolved run parameters (flags merged with the JSON config)."""

    command: str
    n: int = 2
    big_n: int = 1
    r: int | None = None
    dims: tuple[int, ...] | None = None
    mu: float = 1.0
    seed: int = 0
    steps: int | None = None
    tol: float = 1e-8
    out: str | None = None
    init: str = "broken"
    grid: str = "real"
    m_matrix: np.ndarray | None = None


def _parse_dims(text) -> tuple[int, ...]:
    if isinstance(text, (list, tuple)):
        items = list(text)
    else:
        items = [part for part in str(text).split(",") if part.strip()]
    try:
        dims = tuple(int(x) for x in items)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"cannot parse lattice dims from {text!r}") from exc
    if not dims:
        raise ConfigError("empty lattice dims")
    return dims


def _parse_mass_matrix(obj, big_n: int) -> np.ndarray:
    try:
        if isinstance(obj, dict):
            m = np.array(obj["re"], dtype=float) + 1j * np.array(obj["im"], dtype=float)
        else:
            m = np.array(obj, dtype=complex)
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"malformed mass matrix: {exc}") from exc
    if m.shape != (big_n, big_n):
        raise ConfigError(f"mass matrix must be {big_n}x{big_n}, got shape {m.shape}")
    return m


def build_config(argv: list[str]) -> RunConfig:
    """Parse flags, merge the optional JSON config on top, validate.

    Raises ``ConfigError`` on any invalid input (exit code 2 territory).
    """
    parser = argparse.ArgumentParser(
        prog="ncgauge",
        description="matrix geometry toolkit: verification, minimization, two-point scan",
    )
    parser.add_argument("positional_command", nargs="?", choices=_COMMANDS, metavar="command")
    parser.add_argument("--command", choices=_COMMANDS, dest="command_flag")
    parser.add_argument("--config", help="JSON file whose entries override flags")
    parser.add_argument("--n", type=int, default=2, help="matrix size (default 2)")
    parser.add_argument("--N", type=int, default=1, dest="big_n", help="two-point block size")
    parser.add_argument("--r", type=int, default=None, help="module row size (default n)")
    parser.add_argument("--dims", default=None, help="lattice shape, e.g. 16 or 8,8")
    parser.add_argument("--mu", type=float, default=1.0, help="algebraic-direction weight")
    parser.add_argument("--seed", type=int, default=0, help="seed for all randomness")
    parser.add_argument("--steps", type=int, default=None, help="iteration/grid budget")
    parser.add_argument("--tol", type=float, default=1e-8, help="convergence tolerance")
    parser.add_argument("--out", default=None, help="CSV output path")
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        raise ConfigError("unparseable command line") from exc

    merged = {
        "command": args.command_flag or args.positional_command,
        "n": args.n,
        "N": args.big_n,
        "r": args.r,
        "dims": args.dims,
        "mu": args.mu,
        "seed": args.seed,
        "steps": args.steps,
        "tol": args.tol,
        "out": args.out,
        "init": "broken",
        "grid": "real",
        "M": None,
    }
    if args.config:
        try:
            loaded = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config file: {exc}") from exc
        if not isinstance(loaded, dict):
            raise ConfigError("config file must hold a JSON object")
        unknown = set(loaded) - _CONFIG_KEYS
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        merged.update(loaded)

    command = merged["command"]
    if command not in _COMMANDS:
        raise ConfigError(f"command must be one of {_COMMANDS}, got {command!r}")
    try:
        n = int(merged["n"])
        big_n = int(merged["N"])
        seed = int(merged["seed"])
        mu = float(merged["mu"])
        tol = float(merged["tol"])
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"malformed scalar option: {exc}") from exc
    if n < 2:
        raise ConfigError(f"matrix size must be at least 2, got {n}")
    if big_n < 1:
        raise ConfigError(f"two-point block size must be at least 1, got {big_n}")
    if mu <= 0:
        raise ConfigError(f"mu must be positive, got {mu}")
    if tol <= 0:
        raise ConfigError(f"tolerance must be positive, got {tol}")
    r = merged["r"]
    if r is not None:
        r = int(r)
        if r < 1:
            raise ConfigError(f"module row size must be positive, got {r}")
    steps = merged["steps"]
    if steps is not None:
        steps = int(steps)
        if steps < 0:
            raise ConfigError(f"step budget must be non-negative, got {steps}")
    dims = merged["dims"]
    if dims is not None:
        dims = _parse_dims(dims)
        if len(dims) > 2 or any(d < 2 or d > 64 for d in dims):
            raise ConfigError(f"lattice dims must be 1 or 2 sides in 2..64, got {dims}")
    init = str(merged["init"])
    if init not in ("broken", "symmetric", "random"):
        raise ConfigError(f"init must be broken/symmetric/random, got {init!r}")
    grid = str(merged["grid"])
    if grid not in ("real", "circle"):
        raise ConfigError(f"grid must be real/circle, got {grid!r}")
    m_matrix = None
    if merged["M"] is not None:
        m_matrix = _parse_mass_matrix(merged["M"], big_n)
    return RunConfig(
        command=command,
        n=n,
        big_n=big_n,
        r=r,
        dims=dims,
        mu=mu,
        seed=seed,
        steps=steps,
        tol=tol,
        out=merged["out"],
        init=init,
        grid=grid,
        m_matrix=m_matrix,
    )


def _emit(cfg: RunConfig, csv_header: list[str], csv_rows: list[tuple], summary: dict) -> None:
    """CSV to --out (or stdout), JSON summary to stdout (or stderr)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(csv_header)
    for row in csv_rows:
        writer.writerow([repr(x) if isinstance(x, float) else x for x in row])
    text = buf.getvalue()
    summary_text = json.dumps(summary, sort_keys=True, indent=2) + "\n"
    if cfg.out:
        Path(cfg.out).write_text(text, encoding="utf-8")
        sys.stdout.write(summary_text)
    else:
        sys.stdout.write(text)
        sys.stderr.write(summary_text)


def cmd_verify(cfg: RunConfig) -> int:
    report = verify_mod.run_all(n=cfg.n, seed=cfg.seed)
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    sys.stdout.write(text)
    if cfg.out:
        Path(cfg.out).write_text(text, encoding="utf-8")
    return 0 if report["passed"] else 1


def _classify_orbit(action_value: float, casimir: float, n: int, tol: float) -> str:
    if action_value >= tol:
        return "unconverged"
    canonical = n * (n**2 - 1)
    if abs(casimir) < 0.5:
        return "symmetric"
    if abs(casimir - canonical) < 0.5:
        return "canonical-flat"
    return "flat-other"


def _cmd_minimize_lattice(cfg: RunConfig) -> int:
    basis = MatrixBasis.gellmann(cfg.n)
    rng = np.random.default_rng(cfg.seed)
    if cfg.init == "random":
        lat = random_lattice_config(cfg.dims, basis, cfg.mu, rng, scale=0.3)
    else:
        lat = vacuum_config(cfg.init, cfg.dims, basis, cfg.mu)
    s = lattice_action(lat)
    gnorm = zero_momentum_gradient_norm(lat)
    converged = s < cfg.tol
    if converged:
        classification = "symmetric" if cfg.init == "symmetric" else "broken"
    else:
        classification = "unconverged"
    summary = {
        "mode": "lattice",
        "dims": list(cfg.dims),
        "init": cfg.init,
        "mu": cfg.mu,
        "action": s,
        "grad_norm": gnorm,
        "converged": converged,
        "classification": classification,
    }
    _emit(cfg, ["iter", "action", "grad_norm"], [(0, s, gnorm)], summary)
    return 0 if converged else 1


def cmd_minimize(cfg: RunConfig) -> int:
    if cfg.dims is not None:
        return _cmd_minimize_lattice(cfg)
    basis = MatrixBasis.gellmann(cfg.n)
    rng = np.random.default_rng(cfg.seed)
    conn0 = random_connection(basis, rng, r=cfg.r)
    steps = 20000 if cfg.steps is None else cfg.steps
    res = minimize(conn0, max_iter=steps, gtol=cfg.tol)
    report = flat_connection_check(res.connection, tol=max(cfg.tol, 1e-10))
    summary = {
        "mode": "matrix",
        "n": cfg.n,
        "r": res.connection.r,
        "seed": cfg.seed,
        "action": res.action,
        "grad_norm": res.grad_norm,
        "iterations": res.iterations,
        "converged": res.converged,
        "flat": report.is_flat,
        "curvature_residual": report.max_residual,
        "casimir": report.casimir,
        "classification": _classify_orbit(
            res.action, casimir_invariant(res.connection), cfg.n, cfg.tol
        ),
    }
    _emit(cfg, ["iter", "action", "grad_norm"], res.trace, summary)
    return 0 if res.converged else 1


def cmd_two_point(cfg: RunConfig) -> int:
    m = cfg.m_matrix
    if m is None:
        m = np.eye(cfg.big_n, dtype=complex)
    if cfg.grid == "circle":
        count = 64 if cfg.steps is None else max(1, cfg.steps)
        phis = np.exp(2j * np.pi * np.arange(count) / count)
    else:
        count = 81 if cfg.steps is None else max(2, cfg.steps)
        phis = np.linspace(-2.0, 2.0, count).astype(complex)
    rows = []
    best = None
    for phi in phis:
        s = two_point_action(phi, m)
        rows.append((float(np.real(phi)), float(np.imag(phi)), s))
        if best is None or s < best[1]:
            best = (phi, s)
    summary = {
        "mode": "two_point",
        "N": cfg.big_n,
        "grid": cfg.grid,
        "points": len(rows),
        "min_action": best[1],
        "argmin_phi": [float(np.real(best[0])), float(np.imag(best[0]))],
    }
    _emit(cfg, ["re_phi", "im_phi", "action"], rows, summary)
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cfg = build_config(argv)
        if cfg.command == "verify":
            return cmd_verify(cfg)
        if cfg.command == "minimize":
            return cmd_minimize(cfg)
        return cmd_two_point(cfg)
    except ConfigError as exc:
        sys.stderr.write(f"configuration error: {exc}\n")
        return 2
    except NCGaugeError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
