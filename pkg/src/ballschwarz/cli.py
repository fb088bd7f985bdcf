"""Command-line front end: constant tables, envelope curves, verification runs.

Subcommands
    constants   sharp boundary-derivative constants over (n, a) grids
    envelope    upper/lower envelope curves over (kind, n, c, r) grids
    verify      the default inequality suite; exit code 0 iff all pass
    hopf        hyperbolic difference-quotient scan with power-law fit
    mobius      residuals of the ball-automorphism operator identities

All numeric output is printed at 12 significant digits in either CSV
(RFC-style quoting, header row) or JSON (array of row objects with the
same field names), so the two formats carry identical numeric content
and a fixed configuration reproduces byte-identical bytes.  Exit codes:
0 success, 1 a check failed, 2 usage error, 3 a numeric routine missed
its tolerance.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from .envelope import (
    CapSpec,
    KernelKind,
    boundary_derivative_harmonic,
    cap_angle_from_measure,
    envelope_lower,
    envelope_upper,
    heinz_schwarz_constant,
    hyperbolic_decay_coefficient,
    schwarz_planar_bound,
)
from .errors import AccuracyError, DomainError
from .hilbert_ball import (
    MobiusParams,
    mobius_A,
    mobius_map,
    verify_dphi_adjoint_identity,
)
from .poisson import BoundaryMap, monte_carlo_extension
from .quadrature import QuadratureConfig
from .verify import DEFAULT_SEED, default_verification_suite, hopf_failure_scan

__all__ = ["RunConfig", "main"]

_MOBIUS_BATCH = 200
_ORACLE_SAMPLES = 200_000


@dataclass
class RunConfig:
    """Parsed invocation: grids, kernel kind, tolerances, seed, output sink."""

    subcommand: str
    n_values: list[int] = field(default_factory=list)
    m: int = 2
    a_grid: list[float] = field(default_factory=list)
    c_grid: list[float] = field(default_factory=list)
    r_grid: list[float] = field(default_factory=list)
    kind: KernelKind = KernelKind.HARMONIC
    seed: int = DEFAULT_SEED
    fmt: str = "csv"
    out: str | None = None
    oracle: bool = False
    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)
    bound_scale: float = 1.0


def _parse_floats(text: str, flag: str) -> list[float]:
    items = [piece for piece in text.split(",") if piece.strip() != ""]
    if not items:
        raise argparse.ArgumentTypeError(f"{flag} needs a nonempty comma-separated list")
    try:
        return [float(piece) for piece in items]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{flag}: {exc}") from exc


def _parse_ints(text: str, flag: str) -> list[int]:
    values = _parse_floats(text, flag)
    out = []
    for v in values:
        if v != int(v):
            raise argparse.ArgumentTypeError(f"{flag} must contain integers")
        out.append(int(v))
    return out


def _fmt(value):
    if value is None or isinstance(value, str):
        return value
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    return float(f"{float(value):.12g}")


def _render(rows: list[dict], columns: list[str], fmt: str) -> str:
    if fmt == "json":
        shaped = [{col: _fmt(row.get(col)) for col in columns} for row in rows]
        return json.dumps(shaped, indent=2) + "\n"
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        rendered = []
        for col in columns:
            value = _fmt(row.get(col))
            if value is None:
                rendered.append("")
            elif isinstance(value, bool):
                rendered.append(str(int(value)))
            elif isinstance(value, float):
                rendered.append(f"{value:.12g}")
            else:
                rendered.append(str(value))
        writer.writerow(rendered)
    return buffer.getvalue()


def _emit(rows: list[dict], columns: list[str], config: RunConfig) -> None:
    text = _render(rows, columns, config.fmt)
    if config.out is None:
        sys.stdout.write(text)
    else:
        with open(config.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _cmd_constants(config: RunConfig) -> int:
    """Rows (n, a) with the cap-quadrature derivative, the hypergeometric
    constant at a = 0, and the planar closed form at n = 2."""
    rows = []
    for n in sorted(config.n_values):
        for a in sorted(config.a_grid):
            if not -1.0 < a < 1.0:
                raise DomainError(f"a grid entry {a!r} outside (-1, 1)")
            row = {
                "n": n,
                "a": a,
                "D_cap_quadrature": boundary_derivative_harmonic(n, a, config.quadrature),
                "C_hypergeometric": (
                    heinz_schwarz_constant(n, oracle=config.oracle) if a == 0.0 else None
                ),
                "s_minus_closed_form": schwarz_planar_bound(a) if n == 2 else None,
            }
            rows.append(row)
    _emit(rows, ["n", "a", "D_cap_quadrature", "C_hypergeometric", "s_minus_closed_form"], config)
    return 0


def _envelope_mc_oracle(kind: KernelKind, n: int, cap: CapSpec, r: float, seed: int):
    """Monte-Carlo re-evaluation of the upper envelope (slow oracle path)."""
    alpha = cap.alpha

    def eval_data(eta: np.ndarray) -> np.ndarray:
        angles = np.arccos(np.clip(eta[:, 0], -1.0, 1.0))
        return np.where(angles <= alpha, 1.0, -1.0)[:, None]

    cap_map = BoundaryMap(n=n, m=1, eval=eval_data)
    x = np.zeros(n)
    x[0] = r
    estimate, stderr = monte_carlo_extension(kind, cap_map, x, _ORACLE_SAMPLES, seed)
    return float(estimate[0]), float(stderr[0])


def _cmd_envelope(config: RunConfig) -> int:
    rows = []
    columns = ["kind", "n", "c", "r", "M_upper", "m_lower"]
    if config.oracle:
        columns += ["M_oracle_mc", "M_oracle_stderr"]
    seed = config.seed
    for n in sorted(config.n_values):
        for c in sorted(config.c_grid):
            if not 0.0 < c <= 1.0:
                raise DomainError(f"c grid entry {c!r} outside (0, 1]")
            if c == 1.0:
                cap = CapSpec(n=n, c=1.0, alpha=math.pi)
            else:
                cap = cap_angle_from_measure(n, c)
            for r in sorted(config.r_grid):
                row = {
                    "kind": config.kind.value,
                    "n": n,
                    "c": c,
                    "r": r,
                    "M_upper": envelope_upper(config.kind, cap, r, config.quadrature),
                    "m_lower": envelope_lower(config.kind, cap, r, config.quadrature),
                }
                if config.oracle:
                    est, err = _envelope_mc_oracle(config.kind, n, cap, r, seed)
                    seed += 1
                    row["M_oracle_mc"] = est
                    row["M_oracle_stderr"] = err
                rows.append(row)
    _emit(rows, columns, config)
    return 0


def _cmd_verify(config: RunConfig) -> int:
    reports = default_verification_suite(
        seed=config.seed,
        config=config.quadrature,
        bound_scale=config.bound_scale,
        target_dim=config.m,
    )
    rows = [
        {
            "case": rep.case,
            "lambda": rep.lam,
            "bound": rep.bound,
            "margin": rep.margin,
            "passed": rep.passed,
        }
        for rep in reports
    ]
    _emit(rows, ["case", "lambda", "bound", "margin", "passed"], config)
    return 0 if all(rep.passed for rep in reports) else 1


def _cmd_hopf(config: RunConfig) -> int:
    rows = []
    for n in sorted(config.n_values):
        for c in sorted(config.c_grid):
            scan = hopf_failure_scan(n, c, config=config.quadrature)
            for r, value in zip(scan.radii, scan.values):
                rows.append(
                    {"n": n, "c": c, "r": r, "T": value, "slope": None, "coefficient": None, "d_n": None}
                )
            rows.append(
                {
                    "n": n,
                    "c": c,
                    "r": None,
                    "T": None,
                    "slope": scan.slope,
                    "coefficient": scan.coefficient,
                    "d_n": hyperbolic_decay_coefficient(n, c, config.quadrature),
                }
            )
    _emit(rows, ["n", "c", "r", "T", "slope", "coefficient", "d_n"], config)
    return 0


def _mobius_residuals(params: MobiusParams, z: np.ndarray) -> dict[str, float]:
    amat = mobius_A(params)
    k = params.k
    xi = params.xi
    a_sq_target = params.s**2 * np.eye(k, dtype=complex) + np.outer(xi, np.conj(xi))
    image = mobius_map(params, z)
    return {
        "involution": float(np.linalg.norm(mobius_map(params, image) - z)),
        "sphere_preservation": abs(float(np.linalg.norm(image)) - 1.0),
        "A_squared": float(np.linalg.norm(amat @ amat - a_sq_target)),
        "derivative_adjoint": verify_dphi_adjoint_identity(params, z),
    }


def _cmd_mobius(config: RunConfig) -> int:
    rows = []
    identities = ["involution", "sphere_preservation", "A_squared", "derivative_adjoint"]
    for k in sorted(config.n_values):
        if k < 1:
            raise DomainError(f"complex dimension must be >= 1, got {k!r}")
        zero = _mobius_residuals(MobiusParams(np.zeros(k, dtype=complex)), _unit_sphere_point(k, config.seed))
        for name in identities:
            rows.append({"k": k, "case": "origin", "identity": name, "residual": zero[name], "draws": 1})
        rng = np.random.Generator(np.random.Philox([config.seed, k]))
        worst = {name: 0.0 for name in identities}
        for _ in range(_MOBIUS_BATCH):
            xi = _random_ball_point(rng, k, 0.9)
            z = _random_unit_complex(rng, k)
            res = _mobius_residuals(MobiusParams(xi), z)
            for name in identities:
                worst[name] = max(worst[name], res[name])
        for name in identities:
            rows.append(
                {"k": k, "case": "random_max", "identity": name, "residual": worst[name], "draws": _MOBIUS_BATCH}
            )
    _emit(rows, ["k", "case", "identity", "residual", "draws"], config)
    return 0


def _unit_sphere_point(k: int, seed: int) -> np.ndarray:
    rng = np.random.Generator(np.random.Philox([seed, 7]))
    return _random_unit_complex(rng, k)


def _random_unit_complex(rng: np.random.Generator, k: int) -> np.ndarray:
    z = rng.standard_normal(k) + 1j * rng.standard_normal(k)
    return z / np.linalg.norm(z)


def _random_ball_point(rng: np.random.Generator, k: int, max_norm: float) -> np.ndarray:
    z = _random_unit_complex(rng, k)
    return z * (max_norm * rng.uniform() ** (1.0 / (2 * k)))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ballschwarz",
        description="Sharp boundary-derivative constants and envelopes on the unit ball.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--out", default=None, metavar="PATH")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                       help=f"random seed (default {DEFAULT_SEED})")
        p.add_argument("--tol-abs", type=float, default=1e-11)
        p.add_argument("--tol-rel", type=float, default=1e-10)
        p.add_argument("--oracle", action="store_true",
                       help="route selected values through slow brute-force oracles")

    p_const = sub.add_parser("constants", help="sharp constant table over (n, a) grids")
    p_const.add_argument("--n", default="2,3,4,5", metavar="LIST")
    p_const.add_argument("--a-grid", default="0", metavar="LIST")
    add_common(p_const)

    p_env = sub.add_parser("envelope", help="envelope curves M and m")
    p_env.add_argument("--n", default="3", metavar="LIST")
    p_env.add_argument("--c-grid", default="0.5", metavar="LIST")
    p_env.add_argument("--r-grid", default="0,0.2,0.4,0.6,0.8", metavar="LIST")
    p_env.add_argument("--kind", choices=["harmonic", "hyperbolic"], default="harmonic")
    add_common(p_env)

    p_verify = sub.add_parser("verify", help="run the default inequality suite")
    p_verify.add_argument("--m", type=int, default=2,
                          help="codomain dimension of the vector-valued test maps")
    p_verify.add_argument("--debug-bound-scale", type=float, default=1.0,
                          help="multiply all bounds (1.5 forces the sharp rows to fail)")
    add_common(p_verify)

    p_hopf = sub.add_parser("hopf", help="hyperbolic difference-quotient scan")
    p_hopf.add_argument("--n", default="3,4", metavar="LIST")
    p_hopf.add_argument("--c-grid", default="0.5", metavar="LIST")
    add_common(p_hopf)

    p_mob = sub.add_parser("mobius", help="ball-automorphism identity residuals")
    p_mob.add_argument("--n", default="1,2,3,8", metavar="LIST",
                       help="complex dimensions to sample")
    add_common(p_mob)

    return parser


def _config_from_args(args: argparse.Namespace, parser: argparse.ArgumentParser) -> RunConfig:
    config = RunConfig(subcommand=args.subcommand)
    config.fmt = args.format
    config.out = args.out
    config.seed = args.seed
    config.oracle = args.oracle
    try:
        config.quadrature = QuadratureConfig(abs_tol=args.tol_abs, rel_tol=args.tol_rel)
    except DomainError as exc:
        parser.error(str(exc))
    try:
        if hasattr(args, "n"):
            config.n_values = _parse_ints(args.n, "--n")
        if hasattr(args, "a_grid"):
            config.a_grid = _parse_floats(args.a_grid, "--a-grid")
        if hasattr(args, "c_grid"):
            config.c_grid = _parse_floats(args.c_grid, "--c-grid")
        if hasattr(args, "r_grid"):
            config.r_grid = _parse_floats(args.r_grid, "--r-grid")
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    if hasattr(args, "kind"):
        config.kind = (
            KernelKind.HARMONIC if args.kind == "harmonic" else KernelKind.HYPERBOLIC_HARMONIC
        )
    if hasattr(args, "m"):
        config.m = args.m
    if hasattr(args, "debug_bound_scale"):
        config.bound_scale = args.debug_bound_scale
    return config


_DISPATCH = {
    "constants": _cmd_constants,
    "envelope": _cmd_envelope,
    "verify": _cmd_verify,
    "hopf": _cmd_hopf,
    "mobius": _cmd_mobius,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    config = _config_from_args(args, parser)
    try:
        return _DISPATCH[config.subcommand](config)
    except AccuracyError as exc:
        print(f"accuracy error: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
