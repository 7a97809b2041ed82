"""Command-line entry point.

Subcommands: ingest, fit, gap, sensitivity, simulate, report. Exit codes
are a stable contract for scripting: 0 success, 1 a verified property
failed, 2 bad input or configuration. All outputs are deterministic
given the config and inputs, so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from . import gap as gap_mod
from .calibration import CalibrationProfile, SufficientStats
from .config import RunConfig, load_config, parse_kv_text
from .errors import ConfigError, InputError, ParseError, PropertyViolation
from .fitting import fit_all, fit_elasticity, write_estimates_csv
from .ingest import (
    LaborMarketPanel,
    build_panel,
    parse_series_csv,
    splice_jump,
    splice_vacancy,
    to_quarterly,
)
from .planner import (
    DmpCurve,
    DmpEconomy,
    IsoelasticCurve,
    comparative_statics_check,
    dmp_stats,
    solve_planner_numeric,
    synth_panel,
)
from .quarters import Quarter
from .regimes import RegimeTable, build_schedule
from .svgfig import scatter_fit_svg, timeseries_svg

_ZETA_TAG = gap_mod._zeta_tag


def _round_floats(obj):
    if isinstance(obj, float):
        return float(f"{obj:.10g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def _write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(_round_floats(payload), sort_keys=True, indent=2) + "\n")


def _update_summary(out_dir: Path, section: str, payload: dict) -> None:
    path = out_dir / "summary.json"
    existing = json.loads(path.read_text()) if path.is_file() else {}
    existing[section] = payload
    _write_json(path, existing)


def _read_series(path: Path, unit: str):
    with open(path, encoding="utf-8") as fh:
        points = parse_series_csv(fh.read(), unit)
    quarterly, dropped = to_quarterly(points)
    return quarterly, dropped


def _load_panel(cfg: RunConfig) -> tuple[LaborMarketPanel, dict]:
    u_q, u_dropped = _read_series(cfg.u_series, cfg.unit)
    pre_q, pre_dropped = _read_series(cfg.v_pre, cfg.unit)
    post_q, post_dropped = _read_series(cfg.v_post, cfg.unit)
    v_q = splice_vacancy(pre_q, post_q, cfg.cutover)
    pre_val, post_val = splice_jump(pre_q, post_q, cfg.cutover)
    panel = build_panel(u_q, v_q)
    audit = {
        "dropped": {
            "u": [f"{q} ({n} months)" for q, n in u_dropped],
            "v_pre": [f"{q} ({n} months)" for q, n in pre_dropped],
            "v_post": [f"{q} ({n} months)" for q, n in post_dropped],
        },
        "splice": {
            "cutover": str(cfg.cutover),
            "last_pre_value": pre_val,
            "first_post_value": post_val,
            "relative_jump": post_val / pre_val - 1.0,
        },
    }
    return panel, audit


def _calibration(cfg: RunConfig) -> tuple[float, float, CalibrationProfile]:
    profile = CalibrationProfile.from_file(cfg.calibration)
    kappa = cfg.kappa if cfg.kappa is not None else profile.kappa()
    zeta = cfg.zeta if cfg.zeta is not None else profile.zeta
    return kappa, zeta, profile


def _kappa_overrides(cfg: RunConfig, table: RegimeTable) -> dict[str, float] | None:
    """Per-regime recruiting-cost overrides for robustness runs."""
    if cfg.kappa_file is None:
        return None
    labels = {regime.label for regime in table}
    overrides: dict[str, float] = {}
    lines = Path(cfg.kappa_file).read_text(encoding="utf-8").splitlines()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line.lower().startswith("regime"):
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 2:
            raise ParseError(f"kappa file line {lineno}: expected 'regime,kappa'")
        try:
            label, value = parts[0], float(parts[1])
        except ValueError:
            raise ParseError(f"kappa file line {lineno}: bad kappa {parts[1]!r}") from None
        if label not in labels:
            raise ConfigError(f"kappa file line {lineno}: unknown regime {label!r}")
        if value <= 0.0:
            raise ConfigError(f"kappa file line {lineno}: kappa must be positive")
        overrides[label] = value
    return overrides or None


def _recession_bands(cfg: RunConfig, quarters) -> list[tuple[int, int]]:
    if cfg.recessions is None or not Path(cfg.recessions).is_file():
        return []
    index = {q: i for i, q in enumerate(quarters)}
    bands = []
    lines = Path(cfg.recessions).read_text(encoding="utf-8").splitlines()
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.lower().startswith("start"):
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 2:
            raise ParseError(f"recessions line {lineno}: expected 'start,end'")
        start, end = Quarter.parse(parts[0]), Quarter.parse(parts[1])
        covered = [index[q] for q in index if start <= q <= end]
        if covered:
            bands.append((min(covered), max(covered)))
    return sorted(bands)


def _decade_ticks(quarters) -> tuple[list[int], list[str]]:
    positions, labels = [], []
    for i, q in enumerate(quarters):
        if q.q == 1 and q.year % 10 == 0:
            positions.append(i)
            labels.append(str(q.year))
    return positions, labels


def _out_dirs(cfg: RunConfig) -> tuple[Path, Path]:
    out = Path(cfg.out_dir)
    figures = out / "figures"
    figures.mkdir(parents=True, exist_ok=True)
    return out, figures


def cmd_ingest(cfg: RunConfig) -> int:
    out, figures = _out_dirs(cfg)
    panel, audit = _load_panel(cfg)
    with open(out / "panel.csv", "w", encoding="utf-8") as fh:
        panel.to_csv(fh)
    for series, dropped in audit["dropped"].items():
        for item in dropped:
            print(f"dropped incomplete quarter in {series}: {item}")
    splice = audit["splice"]
    print(
        "splice audit at {cut}: last pre={pre:.6g}, first post={post:.6g}, jump={jump:+.2%}".format(
            cut=splice["cutover"],
            pre=splice["last_pre_value"],
            post=splice["first_post_value"],
            jump=splice["relative_jump"],
        )
    )
    quarters = panel.quarters()
    ticks, labels = _decade_ticks(quarters)
    bands = _recession_bands(cfg, quarters)
    svg = timeseries_svg(
        "Unemployment and vacancy rates",
        ticks,
        labels,
        len(quarters),
        [
            ("unemployment", [100.0 * r.u for r in panel]),
            ("vacancies", [100.0 * r.v for r in panel]),
        ],
        bands=bands,
        ylabel="percent of labor force",
    )
    (figures / "rates_timeseries.svg").write_text(svg)
    _update_summary(out, "ingest", {"n_quarters": len(panel), "splice": splice})
    print(f"panel: {len(panel)} quarters {quarters[0]}..{quarters[-1]} -> {out / 'panel.csv'}")
    return 0


def cmd_fit(cfg: RunConfig) -> int:
    out, figures = _out_dirs(cfg)
    panel, _ = _load_panel(cfg)
    table = RegimeTable.from_file(cfg.regimes)
    estimates = []
    failures = []
    # fit each regime on its own so one bad regime does not hide the rest
    for regime in table:
        rows = [r for r in panel if regime.contains(r.quarter)]
        try:
            estimates.append(fit_elasticity(rows, label=regime.label))
        except InputError as exc:
            failures.append((regime.label, exc))
            continue
    fitted = RegimeTable(tuple(r for r in table if r.label in {e.label for e in estimates}))
    with open(out / "estimates.csv", "w", encoding="utf-8") as fh:
        write_estimates_csv(estimates, fitted, fh)
    for regime, est in zip(fitted, estimates):
        rows = [r for r in panel if regime.contains(r.quarter)]
        svg = scatter_fit_svg(
            f"Beveridge curve {regime.label}",
            [math.log(r.u) for r in rows],
            [math.log(r.v) for r in rows],
            slope=-est.epsilon,
            intercept=est.log_v0,
        )
        (figures / f"fit_{regime.label}.svg").write_text(svg)
        print(
            f"{regime.label}: epsilon={est.epsilon:.4f} se={est.se_epsilon:.4f} "
            f"r2={est.r_squared:.4f} n={est.n_obs}"
        )
    for label, exc in failures:
        print(f"regime {label!r} failed to fit: {exc}", file=sys.stderr)
    print(f"estimates -> {out / 'estimates.csv'}")
    return 2 if failures else 0


def _gap_points(cfg: RunConfig):
    panel, _ = _load_panel(cfg)
    table = RegimeTable.from_file(cfg.regimes)
    estimates = fit_all(panel, table)
    schedule = build_schedule(table, estimates, panel.quarters())
    return panel, table, estimates, schedule


def cmd_gap(cfg: RunConfig) -> int:
    out, figures = _out_dirs(cfg)
    panel, table, _estimates, schedule = _gap_points(cfg)
    kappa, zeta, _ = _calibration(cfg)
    overrides = _kappa_overrides(cfg, table)
    points = gap_mod.gap_series(
        panel, schedule, kappa, zeta, tol=cfg.tolerance, kappa_by_regime=overrides
    )
    with open(out / "gap.csv", "w", encoding="utf-8") as fh:
        gap_mod.write_gap_csv(points, fh)

    summary_all = gap_mod.summarize(points, exclude_gap_quarters=False)
    summary_core = gap_mod.summarize(points, exclude_gap_quarters=True)
    payload = {
        "kappa": kappa,
        "kappa_overrides": overrides or {},
        "zeta": zeta,
        "n_gap_quarters": sum(p.is_gap_quarter for p in points),
        "n_out_of_range": sum(p.u_star_out_of_range for p in points),
        "all_quarters": summary_all.to_dict(),
        "excluding_gap_quarters": summary_core.to_dict(),
    }
    _update_summary(out, "gap", payload)

    quarters = panel.quarters()
    ticks, labels = _decade_ticks(quarters)
    bands = _recession_bands(cfg, quarters)
    svg = timeseries_svg(
        "Actual and efficient unemployment rate",
        ticks,
        labels,
        len(quarters),
        [
            ("unemployment", [100.0 * p.u for p in points]),
            ("efficient rate", [100.0 * p.u_star for p in points]),
        ],
        bands=bands,
        ylabel="percent of labor force",
    )
    (figures / "gap_unemployment.svg").write_text(svg)

    shown = summary_core if cfg.exclude_gap_quarters else summary_all
    print(
        "gap summary ({}): mean u={:.2%} mean u*={:.2%} mean gap={:.2f}pp "
        "max gap={:.2f}pp at {}".format(
            "excluding gap quarters" if cfg.exclude_gap_quarters else "all quarters",
            shown.mean_u,
            shown.mean_u_star,
            100.0 * shown.mean_gap,
            100.0 * shown.max_gap,
            shown.max_gap_quarter,
        )
    )
    print(f"gap series -> {out / 'gap.csv'}")
    return 0


def cmd_sensitivity(cfg: RunConfig) -> int:
    out, figures = _out_dirs(cfg)
    panel, _table, _estimates, schedule = _gap_points(cfg)
    kappa, _zeta, _ = _calibration(cfg)
    band = gap_mod.sensitivity(panel, schedule, kappa, cfg.zeta_list)
    with open(out / "sensitivity.csv", "w", encoding="utf-8") as fh:
        gap_mod.write_sensitivity_csv(band, fh)

    n = len(band.quarters)
    payload = {
        "zetas": list(band.zetas),
        "baseline_zeta": band.baseline_zeta,
        "mean_u_star": {_ZETA_TAG(z): sum(band.u_star[z]) / n for z in band.zetas},
        "mean_shift_vs_baseline": {_ZETA_TAG(z): band.mean_shift[z] for z in band.zetas},
        "min_u_star": {_ZETA_TAG(z): min(band.u_star[z]) for z in band.zetas},
        "width_pair": list(band.width_pair),
        "mean_width": band.mean_width,
    }

    quarters = list(band.quarters)
    ticks, labels = _decade_ticks(quarters)
    bands = _recession_bands(cfg, quarters)
    series = [("unemployment", [100.0 * x for x in band.u])]
    series += [
        (f"u* (zeta={z:g})", [100.0 * x for x in band.u_star[z]]) for z in band.zetas
    ]
    svg = timeseries_svg(
        "Efficient unemployment under alternative social values of nonwork",
        ticks,
        labels,
        n,
        series,
        bands=bands,
        ylabel="percent of labor force",
    )
    (figures / "sensitivity.svg").write_text(svg)

    if cfg.implied_zeta:
        rows = gap_mod.implied_zeta_series(panel, schedule, kappa)
        with open(out / "implied_zeta.csv", "w", encoding="utf-8") as fh:
            gap_mod.write_implied_zeta_csv(rows, fh)
        lo = min(rows, key=lambda r: r[3])
        hi = max(rows, key=lambda r: r[3])
        payload["implied_zeta"] = {
            "min": lo[3],
            "min_quarter": str(lo[0]),
            "max": hi[3],
            "max_quarter": str(hi[0]),
        }
        print(f"implied zeta series -> {out / 'implied_zeta.csv'}")

    _update_summary(out, "sensitivity", payload)
    print(
        "sensitivity: mean width between zeta={:g} and {:g} is {:.2f}pp".format(
            band.width_pair[0], band.width_pair[1], 100.0 * band.mean_width
        )
    )
    print(f"band -> {out / 'sensitivity.csv'}")
    return 0


def _load_scenario(cfg: RunConfig) -> tuple[DmpEconomy, list, float, int]:
    if cfg.scenario is None:
        raise ConfigError("simulate needs a scenario file (simulate.scenario)")
    path = Path(cfg.scenario)
    values = parse_kv_text(path.read_text(encoding="utf-8"))

    def econ_value(key: str) -> float:
        try:
            return float(values[f"economy.{key}"])
        except KeyError:
            raise ConfigError(f"scenario is missing economy.{key}") from None
        except ValueError:
            raise ConfigError(f"scenario economy.{key} is not a number") from None

    econ = DmpEconomy(
        alpha=econ_value("alpha"),
        mu=econ_value("mu"),
        s=econ_value("s"),
        p=econ_value("p"),
        z=econ_value("z"),
        c=econ_value("c"),
        labor_force=econ_value("labor_force"),
    )
    shocks_file = values.get("shocks.path")
    if shocks_file is None:
        raise ConfigError("scenario is missing shocks.path")
    shocks_path = Path(shocks_file)
    if not shocks_path.is_absolute():
        shocks_path = path.parent / shocks_path
    shock_path = []
    lines = shocks_path.read_text(encoding="utf-8").splitlines()
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.lower().startswith("quarter"):
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 3:
            raise ParseError(f"shock line {lineno}: expected quarter,s_multiplier,mu_multiplier")
        try:
            shock_path.append((Quarter.parse(parts[0]), float(parts[1]), float(parts[2])))
        except ValueError:
            raise ParseError(f"shock line {lineno}: bad multiplier in {line!r}") from None

    noise = cfg.noise_scale
    if noise is None:
        noise = float(values.get("shocks.noise_scale", "0"))
    seed = cfg.seed
    if seed is None and "TOOLKIT_SEED" in os.environ:
        seed = int(os.environ["TOOLKIT_SEED"])
    if seed is None:
        seed = int(values.get("shocks.seed", "0"))
    return econ, shock_path, noise, seed


def cmd_simulate(cfg: RunConfig) -> int:
    out, _figures = _out_dirs(cfg)
    econ, shock_path, noise, seed = _load_scenario(cfg)
    panel = synth_panel(econ, shock_path, noise_scale=noise, seed=seed)
    with open(out / "synthetic_panel.csv", "w", encoding="utf-8") as fh:
        panel.to_csv(fh)

    stats = dmp_stats(econ)
    est = fit_elasticity(panel.rows, label="synthetic")
    planner = solve_planner_numeric(DmpCurve(econ), stats.zeta, stats.kappa)
    fitted_stats = SufficientStats(est.epsilon, stats.kappa, stats.zeta)
    rel_errors = [
        abs(gap_mod.efficient_unemployment(row.u, row.v, fitted_stats) - planner.u_star)
        / planner.u_star
        for row in panel
    ]
    max_rel = max(rel_errors)
    round_trip_tol = 1e-3
    round_trip_checked = noise == 0.0
    round_trip_ok = (not round_trip_checked) or max_rel < round_trip_tol

    statics = comparative_statics_check(
        IsoelasticCurve(math.exp(est.log_v0), est.epsilon), stats.zeta, stats.kappa
    )

    report = {
        "economy": {
            "alpha": econ.alpha,
            "mu": econ.mu,
            "s": econ.s,
            "p": econ.p,
            "z": econ.z,
            "c": econ.c,
            "labor_force": econ.labor_force,
        },
        "seed": seed,
        "noise_scale": noise,
        "n_quarters": len(panel),
        "fit": {"epsilon": est.epsilon, "r_squared": est.r_squared, "se": est.se_epsilon},
        "round_trip": {
            "planner_u_star": planner.u_star,
            "max_relative_error": max_rel,
            "tolerance": round_trip_tol,
            "checked": round_trip_checked,
            "passed": round_trip_ok,
        },
        "comparative_statics": [
            {"name": c.name, "passed": c.passed, "details": c.details} for c in statics.checks
        ],
        "all_passed": round_trip_ok and statics.all_passed,
    }
    _write_json(out / "simulation_report.json", report)
    print(f"synthetic panel ({len(panel)} quarters) -> {out / 'synthetic_panel.csv'}")
    print(
        "round trip: max |u* error| = {:.3g} (tol {:g}, {})".format(
            max_rel, round_trip_tol, "checked" if round_trip_checked else "not checked, noisy run"
        )
    )
    for check in statics.checks:
        print(f"comparative statics {check.name}: {'pass' if check.passed else 'FAIL'}")
    if not report["all_passed"]:
        failures = [c.name for c in statics.failures()]
        if not round_trip_ok:
            failures.append("round_trip")
        raise PropertyViolation(f"simulation checks failed: {', '.join(failures)}")
    return 0


def _markdown_table(csv_text: str) -> list[str]:
    rows = [line.split(",") for line in csv_text.strip().splitlines()]
    header, body = rows[0], rows[1:]
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(r) + " |" for r in body]
    return lines


def cmd_report(cfg: RunConfig, recompute: bool = False) -> int:
    out, _figures = _out_dirs(cfg)
    if recompute:
        cmd_ingest(cfg)
        cmd_fit(cfg)
        cmd_gap(cfg)
        cmd_sensitivity(cfg)

    table = RegimeTable.from_file(cfg.regimes)
    last_label = table.regimes[-1].label
    required = [
        out / "estimates.csv",
        out / "gap.csv",
        out / "sensitivity.csv",
        out / "summary.json",
        out / "figures" / "rates_timeseries.svg",
        out / "figures" / f"fit_{last_label}.svg",
        out / "figures" / "gap_unemployment.svg",
        out / "figures" / "sensitivity.svg",
    ]
    missing = [p for p in required if not p.is_file()]
    if missing:
        raise ConfigError(
            "missing artifacts (run ingest/fit/gap/sensitivity or pass --recompute): "
            + ", ".join(str(p) for p in missing)
        )

    summary = json.loads((out / "summary.json").read_text())
    gap_sum = summary["gap"]["all_quarters"]
    gap_core = summary["gap"]["excluding_gap_quarters"]
    sens = summary["sensitivity"]

    lines = ["# Unemployment gap report", ""]
    lines += ["## Beveridge-curve estimates", ""]
    lines += _markdown_table((out / "estimates.csv").read_text())
    lines += ["", "## Gap summary", ""]
    lines += [
        f"- calibration: kappa = {summary['gap']['kappa']:.4g}, zeta = {summary['gap']['zeta']:.4g}",
        f"- mean unemployment rate: {100 * gap_sum['mean_u']:.2f}%",
        f"- mean efficient rate: {100 * gap_sum['mean_u_star']:.2f}%",
        f"- mean gap: {100 * gap_sum['mean_gap']:.2f}pp "
        f"({100 * gap_core['mean_gap']:.2f}pp excluding shift quarters)",
        f"- largest gap: {100 * gap_sum['max_gap']:.2f}pp in {gap_sum['max_gap_quarter']}",
        f"- most negative gap: {100 * gap_sum['min_gap']:.2f}pp in {gap_sum['min_gap_quarter']}",
        f"- quarters flagged as curve shifts: {summary['gap']['n_gap_quarters']}",
    ]
    lines += ["", "## Sensitivity to the social value of nonwork", ""]
    for tag, value in sorted(sens["mean_u_star"].items()):
        shift = sens["mean_shift_vs_baseline"][tag]
        lines.append(f"- {tag}: mean u* = {100 * value:.2f}% (shift {100 * shift:+.2f}pp)")
    lines.append(
        f"- mean band width between zeta={sens['width_pair'][0]:g} and "
        f"{sens['width_pair'][1]:g}: {100 * sens['mean_width']:.2f}pp"
    )
    if "implied_zeta" in sens:
        iz = sens["implied_zeta"]
        lines.append(
            f"- implied zeta range: {iz['min']:.2f} ({iz['min_quarter']}) to "
            f"{iz['max']:.2f} ({iz['max_quarter']})"
        )
    lines += ["", "## Figures", ""]
    lines += [
        "![rates](figures/rates_timeseries.svg)",
        f"![fit](figures/fit_{last_label}.svg)",
        "![gap](figures/gap_unemployment.svg)",
        "![sensitivity](figures/sensitivity.svg)",
    ]
    lines += ["", "Every figure's underlying numbers are in the CSV exports next to it.", ""]
    (out / "report.md").write_text("\n".join(lines))
    print(f"report -> {out / 'report.md'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ugap",
        description="Beveridge-curve estimation and efficient-unemployment-gap toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", type=Path, default=None, help="run config (default: bundled)")
        p.add_argument("--out", type=Path, default=None, help="output directory")
        p.add_argument("--u-series", type=Path, default=None)
        p.add_argument("--v-pre", type=Path, default=None)
        p.add_argument("--v-post", type=Path, default=None)
        p.add_argument("--cutover", type=str, default=None)
        p.add_argument("--unit", choices=("fraction", "percent"), default=None)
        p.add_argument("--regimes", type=Path, default=None)
        p.add_argument("--recessions", type=Path, default=None)
        p.add_argument("--calibration", type=Path, default=None)
        p.add_argument("--kappa", type=float, default=None)
        p.add_argument("--kappa-file", type=Path, default=None)
        p.add_argument("--zeta", type=float, default=None)
        p.add_argument("--zeta-list", type=str, default=None)
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--exclude-gap-quarters", action="store_true", default=None)
        p.add_argument("--implied-zeta", action="store_true", default=None)
        p.add_argument("--scenario", type=Path, default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--noise-scale", type=float, default=None)

    for name in ("ingest", "fit", "gap", "sensitivity", "simulate", "report"):
        p = sub.add_parser(name)
        add_common(p)
        if name == "report":
            p.add_argument("--recompute", action="store_true")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    overrides = {
        "u_series": args.u_series,
        "v_pre": args.v_pre,
        "v_post": args.v_post,
        "cutover": Quarter.parse(args.cutover) if args.cutover else None,
        "unit": args.unit,
        "regimes": args.regimes,
        "recessions": args.recessions,
        "calibration": args.calibration,
        "kappa": args.kappa,
        "kappa_file": args.kappa_file,
        "zeta": args.zeta,
        "zeta_list": None,
        "tolerance": args.tol,
        "exclude_gap_quarters": args.exclude_gap_quarters,
        "implied_zeta": args.implied_zeta,
        "scenario": args.scenario,
        "seed": args.seed,
        "noise_scale": args.noise_scale,
        "out_dir": args.out,
    }
    if args.zeta_list:
        from .config import _parse_zeta_list

        overrides["zeta_list"] = _parse_zeta_list(args.zeta_list)
    return load_config(args.config, overrides)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "ingest": cmd_ingest,
        "fit": cmd_fit,
        "gap": cmd_gap,
        "sensitivity": cmd_sensitivity,
        "simulate": cmd_simulate,
    }
    try:
        cfg = _config_from_args(args)
        if args.command == "report":
            return cmd_report(cfg, recompute=args.recompute)
        return handlers[args.command](cfg)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PropertyViolation as exc:
        print(f"property violation: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
