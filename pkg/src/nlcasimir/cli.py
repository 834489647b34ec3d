"""Command-line front end.

Subcommands emit plot-ready CSV (default) or JSON on stdout or --out.
Data streams are deterministic: identical invocations produce identical
bytes.  All diagnostics go to stderr.  Exit codes: 0 success, 1 failed
verification (kk-verify only), 2 usage or domain error, 3 numerical
non-convergence.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from .constants import CONSTANTS
from .errors import ConvergenceError, DomainError, ParseError
from .kramers_kronig import (KKReport, verify_kk_imag_axis_T,
                             verify_kk_imag_from_real_T,
                             verify_kk_real_from_imag_T, verify_kk_L)
from .lifshitz import PressureQuery, casimir_pressure
from .optical_data import build_core_table, interband_im_eps, parse_optical_table
from .reflection import reflectance_deviation
from .response import (Drude, DrudeParams, NonlocalAlt, NonlocalParams,
                       Plasma, PRESETS, WithCore, eval_imag_axis,
                       eval_real_axis)
from .sphere_plate import SpherePlateConfig, force_gradient, parse_experiment_csv

_T_RELATIONS = ("t-real-from-imag", "t-imag-from-real", "t-imag-axis")
_L_RELATIONS = ("l-real-from-imag", "l-imag-from-real", "l-imag-axis")
_ALL_RELATIONS = _T_RELATIONS + _L_RELATIONS
_KK_THRESHOLD = 1e-4
# imaginary-axis grid used when tabulating an interband core
_CORE_XI_GRID = np.geomspace(1e-3, 1e2, 121)


@dataclass(frozen=True)
class RunConfig:
    """Model parameters and output plumbing shared by all subcommands."""

    params: NonlocalParams
    temperature: float
    fmt: str
    out: Optional[str]
    optical_data: Optional[str]


def _fmt(x: float) -> str:
    return format(float(x), ".9g")


def _round9(x: float) -> float:
    return float(_fmt(x))


def _parse_theta(text: str) -> float:
    try:
        if text.endswith("deg"):
            return math.radians(float(text[:-3]))
        return float(text)
    except ValueError:
        raise DomainError(
            f"cannot parse angle {text!r}; use radians or append 'deg'") from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nlcasimir",
        description="Casimir pressure and response-function tables for "
                    "local and spatially dispersive metals.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--preset", default="gold-default",
                       choices=sorted(PRESETS),
                       help="named parameter set (default: %(default)s)")
        p.add_argument("--omega-p", type=float, default=None,
                       help="plasma frequency in eV (overrides preset)")
        p.add_argument("--gamma", type=float, default=None,
                       help="relaxation rate in eV (overrides preset)")
        p.add_argument("--vt", type=float, default=None, metavar="N",
                       help="transverse velocity in units of v_F")
        p.add_argument("--vl", type=float, default=None, metavar="N",
                       help="longitudinal velocity in units of v_F")
        p.add_argument("--temp", type=float, default=300.0,
                       help="temperature in K (default: %(default)s)")
        p.add_argument("--optical-data", default=None, metavar="PATH",
                       help="tabulated n,k file; adds an interband core on "
                            "the imaginary axis")
        p.add_argument("--format", dest="fmt", choices=("csv", "json"),
                       default=None,
                       help="output format (default: csv; kk-verify: json)")
        p.add_argument("--out", default=None, metavar="PATH",
                       help="write the data stream to PATH instead of stdout")

    p_eps = sub.add_parser("epsilon", help="permittivity tables")
    add_common(p_eps)
    p_eps.add_argument("--axis", choices=("imag", "real"), default="imag")
    p_eps.add_argument("--kperp", type=float, default=0.0,
                       help="transverse wavevector as hbar c k in eV")
    p_eps.add_argument("--omega-min", type=float, default=0.1)
    p_eps.add_argument("--omega-max", type=float, default=10.0)
    p_eps.add_argument("--points", type=int, default=50)

    p_pr = sub.add_parser("pressure", help="plate-plate pressure sweep")
    add_common(p_pr)
    p_pr.add_argument("--models", default="drude,nonlocal,plasma",
                      help="comma list from {drude, nonlocal, plasma}")
    p_pr.add_argument("--a-min", type=float, required=True, help="um")
    p_pr.add_argument("--a-max", type=float, required=True, help="um")
    p_pr.add_argument("--points", type=int, default=25)

    p_gr = sub.add_parser("gradient", help="sphere-plate force gradient")
    add_common(p_gr)
    p_gr.add_argument("--model", choices=("drude", "nonlocal", "plasma"),
                      default="nonlocal")
    p_gr.add_argument("--radius", type=float, required=True, help="um")
    p_gr.add_argument("--beta", type=float, default=0.0,
                      help="leading proximity-force correction coefficient")
    p_gr.add_argument("--delta-s", type=float, default=0.0,
                      help="sphere rms roughness, um")
    p_gr.add_argument("--delta-p", type=float, default=0.0,
                      help="plate rms roughness, um")
    p_gr.add_argument("--a-min", type=float, default=0.6, help="um")
    p_gr.add_argument("--a-max", type=float, default=2.0, help="um")
    p_gr.add_argument("--points", type=int, default=30)
    p_gr.add_argument("--expt", default=None, metavar="PATH",
                      help="measured-gradient CSV; evaluates at its "
                           "separations and emits the difference column")

    p_rf = sub.add_parser("reflectance", help="real-frequency reflectances "
                          "and their deviation from the local model")
    add_common(p_rf)
    p_rf.add_argument("--theta", required=True,
                      help="incidence angle, radians or 'NNdeg'")
    p_rf.add_argument("--omega-min", type=float, default=0.1)
    p_rf.add_argument("--omega-max", type=float, default=1.0)
    p_rf.add_argument("--points", type=int, default=50)

    p_kk = sub.add_parser("kk-verify", help="causality-relation residuals")
    add_common(p_kk)
    p_kk.add_argument("--kperp", type=float, default=0.0,
                      help="transverse wavevector as hbar c k in eV")
    p_kk.add_argument("--relations", default="all",
                      help="'all' or comma list from: "
                           + ", ".join(_ALL_RELATIONS))
    return parser


def _resolve_params(args) -> NonlocalParams:
    base = PRESETS[args.preset]().params
    vf = CONSTANTS.fermi_velocity_ratio_default
    omega_p = base.drude.omega_p if args.omega_p is None else args.omega_p
    gamma = base.drude.gamma if args.gamma is None else args.gamma
    vt = base.v_t_ratio if args.vt is None else args.vt * vf
    vl = base.v_l_ratio if args.vl is None else args.vl * vf
    return NonlocalParams(DrudeParams(omega_p, gamma), vt, vl)


def _config(args) -> RunConfig:
    default_fmt = "json" if args.command == "kk-verify" else "csv"
    return RunConfig(params=_resolve_params(args),
                     temperature=args.temp,
                     fmt=args.fmt or default_fmt,
                     out=args.out,
                     optical_data=args.optical_data)


def _load_core(cfg: RunConfig):
    with open(cfg.optical_data, encoding="utf-8") as handle:
        table = parse_optical_table(handle.read())
    interband = interband_im_eps(table, cfg.params.drude)
    return build_core_table(interband, _CORE_XI_GRID,
                            provenance=cfg.optical_data)


def _build_model(name: str, cfg: RunConfig, core):
    if name == "drude":
        model = Drude(cfg.params.drude)
    elif name == "nonlocal":
        model = NonlocalAlt(cfg.params)
    elif name == "plasma":
        # dissipationless baseline: no relaxation, no interband core
        return Plasma(cfg.params.drude.omega_p)
    else:
        raise DomainError(f"unknown model name {name!r}")
    if core is not None:
        model = WithCore(model, core)
    return model


def _meta_line(cfg: RunConfig, extra: dict) -> str:
    vf = CONSTANTS.fermi_velocity_ratio_default
    fields = {
        "omega_p_eV": _fmt(cfg.params.drude.omega_p),
        "gamma_eV": _fmt(cfg.params.drude.gamma),
        "vt_over_vF": _fmt(cfg.params.v_t_ratio / vf),
        "vl_over_vF": _fmt(cfg.params.v_l_ratio / vf),
        "temp_K": _fmt(cfg.temperature),
    }
    if cfg.optical_data:
        fields["optical_data"] = cfg.optical_data
    fields.update(extra)
    return "# " + " ".join(f"{k}={v}" for k, v in fields.items())


def _meta_dict(cfg: RunConfig, extra: dict) -> dict:
    vf = CONSTANTS.fermi_velocity_ratio_default
    meta = {
        "omega_p_eV": _round9(cfg.params.drude.omega_p),
        "gamma_eV": _round9(cfg.params.drude.gamma),
        "vt_over_vF": _round9(cfg.params.v_t_ratio / vf),
        "vl_over_vF": _round9(cfg.params.v_l_ratio / vf),
        "temp_K": _round9(cfg.temperature),
    }
    if cfg.optical_data:
        meta["optical_data"] = cfg.optical_data
    meta.update(extra)
    return meta


def _emit_table(cfg: RunConfig, meta: dict, header: List[str],
                rows: List[List[float]]) -> str:
    if cfg.fmt == "csv":
        lines = [_meta_line(cfg, meta), ",".join(header)]
        lines.extend(",".join(_fmt(v) for v in row) for row in rows)
        return "\n".join(lines) + "\n"
    payload = {
        "meta": _meta_dict(cfg, meta),
        "columns": header,
        "rows": [[_round9(v) for v in row] for row in rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def _grid(lo: float, hi: float, points: int) -> np.ndarray:
    if points < 1:
        raise DomainError(f"points must be >= 1, got {points}")
    if lo > hi:
        raise DomainError(f"empty range [{lo}, {hi}]")
    return np.linspace(lo, hi, points)


def _cmd_epsilon(args, cfg: RunConfig) -> str:
    grid = _grid(args.omega_min, args.omega_max, args.points)
    core = _load_core(cfg) if cfg.optical_data else None
    if args.axis == "imag":
        model = _build_model("nonlocal", cfg, core)
        header = ["xi_eV", "eps_L", "eps_T"]
        rows = []
        for xi in grid:
            pair = eval_imag_axis(model, float(xi), args.kperp)
            rows.append([xi, pair.eps_l, pair.eps_t])
    else:
        if core is not None:
            raise DomainError(
                "interband cores are defined on the imaginary axis only; "
                "drop --optical-data for --axis real")
        model = _build_model("nonlocal", cfg, None)
        header = ["omega_eV", "re_eps_L", "im_eps_L", "re_eps_T", "im_eps_T"]
        rows = []
        for om in grid:
            pair = eval_real_axis(model, float(om), args.kperp)
            rows.append([om, pair.eps_l.real, pair.eps_l.imag,
                         pair.eps_t.real, pair.eps_t.imag])
    meta = {"command": "epsilon", "axis": args.axis,
            "kperp_eV": _fmt(args.kperp)}
    return _emit_table(cfg, meta, header, rows)


def _cmd_pressure(args, cfg: RunConfig) -> str:
    names = [n.strip() for n in args.models.split(",") if n.strip()]
    if not names:
        raise DomainError("--models must name at least one model")
    seen = set()
    for n in names:
        if n in seen:
            raise DomainError(f"model {n!r} listed twice")
        seen.add(n)
    core = _load_core(cfg) if cfg.optical_data else None
    models = {n: _build_model(n, cfg, core) for n in names}
    grid = _grid(args.a_min, args.a_max, args.points)
    if grid[0] <= 0.0:
        raise DomainError("separations must be positive")

    header = ["a_um"] + [f"P_{n}_Pa" for n in names]
    with_ratio_nl = "nonlocal" in seen and "drude" in seen
    with_ratio_pl = "plasma" in seen and "drude" in seen
    if with_ratio_nl:
        header.append("ratio_nl_drude")
    if with_ratio_pl:
        header.append("ratio_pl_drude")

    rows = []
    for a in grid:
        pressures = {n: casimir_pressure(
            PressureQuery(float(a), cfg.temperature, models[n])).pressure
            for n in names}
        row = [a] + [pressures[n] for n in names]
        if with_ratio_nl:
            row.append(pressures["nonlocal"] / pressures["drude"])
        if with_ratio_pl:
            row.append(pressures["plasma"] / pressures["drude"])
        rows.append(row)
    meta = {"command": "pressure", "models": ",".join(names)}
    return _emit_table(cfg, meta, header, rows)


def _cmd_gradient(args, cfg: RunConfig) -> str:
    core = _load_core(cfg) if cfg.optical_data else None
    model = _build_model(args.model, cfg, core)
    sp = SpherePlateConfig(radius=args.radius, beta=args.beta,
                           delta_sphere=args.delta_s, delta_plate=args.delta_p)

    def pressure(a):
        return casimir_pressure(
            PressureQuery(a, cfg.temperature, model)).pressure

    if args.expt:
        with open(args.expt, encoding="utf-8") as handle:
            a_expt, fp_expt, _sigma = parse_experiment_csv(handle.read())
        header = ["a_um", "Fprime_theor", "Fprime_expt", "diff"]
        rows = []
        for a, fp in zip(a_expt, fp_expt):
            theor = force_gradient(float(a), sp, pressure)
            rows.append([a, theor, fp, fp - theor])
    else:
        grid = _grid(args.a_min, args.a_max, args.points)
        if grid[0] <= 0.0:
            raise DomainError("separations must be positive")
        header = ["a_um", "Fprime_theor"]
        rows = [[a, force_gradient(float(a), sp, pressure)] for a in grid]
    meta = {"command": "gradient", "model": args.model,
            "radius_um": _fmt(args.radius), "beta": _fmt(args.beta),
            "delta_s_um": _fmt(args.delta_s), "delta_p_um": _fmt(args.delta_p)}
    return _emit_table(cfg, meta, header, rows)


def _cmd_reflectance(args, cfg: RunConfig) -> str:
    if cfg.optical_data:
        raise DomainError("reflectance works on the real axis; interband "
                          "cores (--optical-data) are imaginary-axis only")
    theta = _parse_theta(args.theta)
    nonlocal_model = _build_model("nonlocal", cfg, None)
    local_model = _build_model("drude", cfg, None)
    grid = _grid(args.omega_min, args.omega_max, args.points)
    header = ["omega_eV", "R_TM", "R_TE", "dR_TM", "dR_TE"]
    rows = []
    for om in grid:
        dev = reflectance_deviation(nonlocal_model, local_model,
                                    float(om), theta)
        rows.append([om, dev.reflectance_tm, dev.reflectance_te,
                     dev.deviation_tm, dev.deviation_te])
    meta = {"command": "reflectance", "theta_rad": _fmt(theta)}
    return _emit_table(cfg, meta, header, rows)


def _select_relations(spec: str) -> List[str]:
    if spec.strip() == "all":
        return list(_ALL_RELATIONS)
    names = [n.strip() for n in spec.split(",") if n.strip()]
    unknown = [n for n in names if n not in _ALL_RELATIONS]
    if unknown:
        raise DomainError(f"unknown relation ids {unknown}; choose from "
                          f"{', '.join(_ALL_RELATIONS)}")
    if not names:
        raise DomainError("--relations must name at least one relation")
    return names


def _report_dict(report: KKReport) -> dict:
    out = {
        "relation": report.relation,
        "k_hat_eV": _round9(report.k_hat),
        "grid_eV": [_round9(x) for x in report.grid],
        "residuals": [_round9(r) for r in report.residuals],
        "max_residual": _round9(report.max_residual),
    }
    if report.note:
        out["note"] = report.note
    return out


def _cmd_kk_verify(args, cfg: RunConfig) -> tuple:
    wanted = _select_relations(args.relations)
    params = cfg.params
    k = args.kperp
    reports = {}
    if "t-real-from-imag" in wanted:
        reports["t-real-from-imag"] = verify_kk_real_from_imag_T(params, k)
    if "t-imag-from-real" in wanted:
        reports["t-imag-from-real"] = verify_kk_imag_from_real_T(params, k)
    if "t-imag-axis" in wanted:
        reports["t-imag-axis"] = verify_kk_imag_axis_T(params, k)
    if any(r in wanted for r in _L_RELATIONS):
        for report in verify_kk_L(params, k):
            if report.relation in wanted:
                reports[report.relation] = report
    ordered = [reports[name] for name in wanted]

    if cfg.fmt == "json":
        text = json.dumps([_report_dict(r) for r in ordered], indent=2) + "\n"
    else:
        lines = [_meta_line(cfg, {"command": "kk-verify",
                                  "kperp_eV": _fmt(k)}),
                 "relation,grid_eV,residual"]
        for rep in ordered:
            for x, res in zip(rep.grid, rep.residuals):
                lines.append(f"{rep.relation},{_fmt(x)},{_fmt(res)}")
        text = "\n".join(lines) + "\n"
    failed = any(r.max_residual > _KK_THRESHOLD for r in ordered)
    return text, failed


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    exit_code = 0
    try:
        cfg = _config(args)
        if args.command == "epsilon":
            text = _cmd_epsilon(args, cfg)
        elif args.command == "pressure":
            text = _cmd_pressure(args, cfg)
        elif args.command == "gradient":
            text = _cmd_gradient(args, cfg)
        elif args.command == "reflectance":
            text = _cmd_reflectance(args, cfg)
        elif args.command == "kk-verify":
            text, failed = _cmd_kk_verify(args, cfg)
            if failed:
                print(f"kk-verify: at least one max_residual exceeds "
                      f"{_KK_THRESHOLD:g}", file=sys.stderr)
                exit_code = 1
        else:  # pragma: no cover - argparse enforces the choices
            raise DomainError(f"unknown command {args.command!r}")
    except (DomainError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3

    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
