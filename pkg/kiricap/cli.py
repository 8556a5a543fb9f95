#!/usr/bin/env python
"""
kiricap command-line interface.

Every command writes its files under --out with fixed names plus a
manifest.json, prints a short summary on stdout and exits with the code of
the error class it hit (0 success, 2 invalid input, 3 I/O, 4 constraint
failure, 5 infeasible simulation).
"""

import hashlib
import json
import math
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd
import typer
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from config.settings import settings
from kiricap.analysis import (
    classify_safety,
    compare_groups,
    envelope_for,
    envelopes_from_config,
    load_force_csv,
    load_values_csv,
    peak_forces,
    summarize,
)
from kiricap.cam import (
    MOTION_COLUMNS,
    cam_profile,
    check_constraints,
    follower_kinematics,
    is_simple,
    pitch_curve,
)
from kiricap.cam.kinematics import rise_schedule
from kiricap.core.contracts import CalibrationFit, CapsuleConfig, LawFamily, Tissue, ToolConfig
from kiricap.core.errors import InvalidParamsError, KiricapError, ParseError
from kiricap.core.io import write_bytes, write_csv, write_json
from kiricap.core.manifest import RunManifest
from kiricap.drive import fit_pulse_angle, load_calibration_csv
from kiricap.geometry import export_curves_dxf, export_curves_svg, export_dxf, export_svg, generate_pattern, validate_layout
from kiricap.mechanics import DeploymentModel, penetration_report
from kiricap.monitoring.logging import configure_logging, log_command_execution
from kiricap.sim import export_trace, simulate, summarize_trace

app = typer.Typer(add_completion=False, help="Kirigami biopsy capsule design and simulation toolkit")
console = Console(soft_wrap=True, highlight=False)
err_console = Console(stderr=True, soft_wrap=True, highlight=False)

ConfigOption = typer.Option(None, "--config", "-c", help="JSON tool configuration")
OutOption = typer.Option(None, "--out", "-o", help="Output directory")


def _validation_message(error: ValidationError) -> str:
    parts = []
    for err in error.errors():
        loc = ".".join(str(p) for p in err["loc"]) or "config"
        parts.append(f"{loc}: {err['msg']}")
    return "; ".join(parts)


@contextmanager
def _command(name: str):
    """Map kiricap errors to exit codes and log one record per command"""
    started = time.perf_counter()
    code = 0
    try:
        yield
    except ValidationError as e:
        code = InvalidParamsError.exit_code
        err_console.print(f"[red]error:[/red] invalid parameters: {escape(_validation_message(e))}")
    except KiricapError as e:
        code = e.exit_code
        err_console.print(f"[red]error:[/red] {escape(str(e))}")
    finally:
        log_command_execution(name, code, time.perf_counter() - started)
    if code:
        raise typer.Exit(code)


def load_tool_config(path: Optional[Path]) -> Tuple[ToolConfig, Dict[str, Any]]:
    """Strictly parse a JSON tool config; no path means all defaults"""
    if path is None:
        tool = ToolConfig()
        return tool, tool.model_dump(mode="json")
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError as e:
        raise ParseError(f"config file not found: {path}") from e
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON in {path}: {e.msg}", line=e.lineno) from e
    tool = ToolConfig.model_validate(raw)
    return tool, tool.model_dump(mode="json")


def _out_dir(out: Optional[Path], tool: Optional[ToolConfig] = None) -> Path:
    if out is not None:
        return out
    if tool is not None and tool.output_dir:
        return Path(tool.output_dir)
    return settings.output_dir


def _resolve_calibration(tool: ToolConfig, config_path: Optional[Path]) -> CalibrationFit:
    source = tool.calibration
    if source.fit is not None:
        return source.fit
    csv = Path(source.csv)
    if not csv.is_absolute() and config_path is not None:
        csv = Path(config_path).parent / csv
    return fit_pulse_angle(load_calibration_csv(csv), through_origin=source.through_origin)


def _input_digest(path: Path) -> str:
    try:
        return hashlib.sha256(Path(path).read_bytes()).hexdigest()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e


def _finish(command: str, config: Dict[str, Any], out_dir: Path, outputs: List[Path]) -> None:
    manifest = RunManifest.create(command, config, outputs)
    RunManifest.save(manifest, out_dir)


@app.callback()
def main_callback(
    log_level: str = typer.Option(settings.log_level, "--log-level", help="Logging level (logs go to stderr)"),
):
    configure_logging(
        level=log_level,
        log_dir=settings.logs_dir,
        enable_file_logging=settings.enable_file_logging,
        enable_json_logging=settings.enable_json_logging,
    )


@app.command()
def pattern(
    config: Optional[Path] = ConfigOption,
    out: Optional[Path] = OutOption,
    svg: bool = typer.Option(False, "--svg", help="Write pattern.svg"),
    dxf: bool = typer.Option(False, "--dxf", help="Write pattern.dxf"),
    margin: Optional[float] = typer.Option(None, "--margin", help="Inset from the strip edge (mm)"),
):
    """Generate the kirigami cut layout (both formats when neither flag is given)"""
    with _command("pattern"):
        tool, raw = load_tool_config(config)
        out_dir = _out_dir(out, tool)
        margin = settings.default_margin if margin is None else margin
        layout = generate_pattern(tool.kirigami, margin=margin)
        violations = validate_layout(layout)
        for v in violations:
            err_console.print(f"[yellow]warning:[/yellow] {escape(v.message)}")

        outputs = []
        if svg or not dxf:
            outputs.append(write_bytes(export_svg(layout), out_dir / "pattern.svg"))
        if dxf or not svg:
            outputs.append(write_bytes(export_dxf(layout), out_dir / "pattern.dxf"))
        _finish("pattern", {**raw, "margin": margin}, out_dir, outputs)

        p = tool.kirigami
        if layout.is_empty:
            console.print(f"0 segments: margin {margin:.3f} mm leaves no room on the {p.w:.3f} x {p.h:.3f} mm strip")
        else:
            console.print(f"{len(layout.segments)} segments on a {p.w:.3f} x {p.h:.3f} mm strip (margin {margin:.3f} mm)")


@app.command()
def cam(
    config: Optional[Path] = ConfigOption,
    out: Optional[Path] = OutOption,
    law: Optional[LawFamily] = typer.Option(None, "--law", help="Override the configured law family"),
    check: bool = typer.Option(False, "--check", help="Exit with code 4 when a bound is violated"),
    mu_max: float = typer.Option(30.0, "--mu-max", help="Pressure-angle bound (deg)"),
    a_max: float = typer.Option(1000.0, "--a-max", help="Acceleration bound (mm/s^2)"),
    profile: bool = typer.Option(False, "--profile", help="Write cam_profile.svg/.dxf"),
    samples: Optional[int] = typer.Option(None, "--samples", help="Rows in cam_kinematics.csv"),
):
    """Follower kinematics over the rise, constraint report and optional cam profile"""
    with _command("cam"):
        tool, raw = load_tool_config(config)
        out_dir = _out_dir(out, tool)
        cam_law = tool.law if law is None else tool.law.model_copy(update={"family": law})
        n = settings.cam_csv_samples if samples is None else samples
        if n < 2:
            raise InvalidParamsError(f"--samples must be >= 2, got {n}")

        schedule = rise_schedule(tool.cam, cam_law)
        t = np.linspace(0.0, schedule.duration, n)
        state = follower_kinematics(tool.cam, cam_law, t)
        frame = pd.DataFrame(
            {
                "t": t,
                "phi": state.phi,
                "y": state.y,
                "y_dot": state.y_dot,
                "y_ddot": state.y_ddot,
                "mu": state.mu,
                "scrape_angle": np.zeros(n),
            },
            columns=MOTION_COLUMNS,
        )
        outputs = [write_csv(frame, out_dir / "cam_kinematics.csv")]

        report = check_constraints(
            tool.cam, cam_law, math.radians(mu_max), a_max, n_samples=settings.constraint_samples
        )
        outputs.append(
            write_json(
                {**report.model_dump(), "max_pressure_angle_deg": report.max_pressure_angle_deg, "passed": report.passed},
                out_dir / "constraints.json",
            )
        )

        if profile:
            pitch = pitch_curve(tool.cam, cam_law, settings.constraint_samples)
            curve = cam_profile(pitch, tool.cam.roller_radius)
            if not is_simple(curve):
                err_console.print("[yellow]warning:[/yellow] cam profile crosses itself")
            outputs.append(write_bytes(export_curves_svg(curve, pitch.points), out_dir / "cam_profile.svg"))
            outputs.append(write_bytes(export_curves_dxf(curve, pitch.points), out_dir / "cam_profile.dxf"))

        settings_used = {"law": cam_law.family.value, "mu_max_deg": mu_max, "a_max": a_max, "samples": n}
        _finish("cam", {**raw, **settings_used}, out_dir, outputs)

        console.print(
            f"{cam_law.family.value}: max mu {report.max_pressure_angle_deg:.3f} deg, "
            f"max |a| {report.max_acceleration:.3f} mm/s^2, "
            f"min rho {report.min_radius_of_curvature:.3f} mm -> {'pass' if report.passed else 'FAIL'}"
        )
        if check:
            report.raise_for_violations()


@app.command("simulate")
def simulate_cmd(
    config: Optional[Path] = ConfigOption,
    out: Optional[Path] = OutOption,
    dt: Optional[float] = typer.Option(None, "--dt", help="Time step (s)"),
):
    """Run the motion program and write trace.csv plus simulation.json"""
    with _command("simulate"):
        tool, raw = load_tool_config(config)
        out_dir = _out_dir(out, tool)
        dt = settings.default_dt if dt is None else dt
        capsule = CapsuleConfig(
            kirigami=tool.kirigami,
            cam_config=tool.cam,
            deploy_law=tool.law,
            program=tool.program,
            calibration=_resolve_calibration(tool, config),
            strain_reference_length=tool.strain_reference_length,
            spike_policy=tool.spike_policy,
        )
        model = DeploymentModel.from_config(settings.load_deployment_config())
        trace = simulate(capsule, dt, model)
        summary = summarize_trace(trace)
        summary["penetration"] = penetration_report(tool.kirigami, summary.get("peak_theta", 0.0))

        outputs = [
            write_bytes(export_trace(trace), out_dir / "trace.csv"),
            write_json(summary, out_dir / "simulation.json"),
        ]
        _finish("simulate", {**raw, "dt": dt}, out_dir, outputs)

        console.print(
            f"{summary['rows']} rows: peak strain {summary.get('peak_strain', 0.0):.3f}, "
            f"peak theta {summary.get('peak_theta', 0.0):.3f} deg, "
            f"peak depth {summary.get('peak_depth', 0.0):.3f} mm "
            f"(reference theoretical 0.704 mm, measured median 0.610 mm)"
        )


@app.command()
def calibrate(
    samples: Path = typer.Argument(..., help="CSV with header pulses,angle_deg"),
    out: Optional[Path] = OutOption,
    through_origin: bool = typer.Option(False, "--through-origin", help="Pin the intercept to 0"),
):
    """Fit the pulse-to-angle line"""
    with _command("calibrate"):
        out_dir = _out_dir(out)
        data = load_calibration_csv(samples)
        fit = fit_pulse_angle(data, through_origin=through_origin)
        result = {**fit.model_dump(), "pulses_per_revolution": fit.pulses_per_revolution, "n": len(data)}
        outputs = [write_json(result, out_dir / "calibration.json")]
        _finish(
            "calibrate",
            {"samples": _input_digest(samples), "through_origin": through_origin},
            out_dir,
            outputs,
        )
        console.print(f"slope {fit.slope:.6f} deg/pulse, intercept {fit.intercept:.6f} deg, r2 {fit.r2:.6f}")


@app.command()
def analyze(
    forces: Path = typer.Argument(..., help="CSV with header t,fx,fy,fz"),
    out: Optional[Path] = OutOption,
    tissue: Tissue = typer.Option(Tissue.GASTRIC, "--tissue", help="Safety envelope"),
    window: float = typer.Option(0.5, "--window", help="Minimum spacing between peaks (s)"),
):
    """Detect force peaks and classify them against a tissue envelope"""
    with _command("analyze"):
        out_dir = _out_dir(out)
        trace = load_force_csv(forces)
        envelope = envelope_for(tissue.value, envelopes_from_config(settings.load_envelope_config()))
        verdicts = classify_safety(peak_forces(trace, window), envelope)
        result = {
            "tissue": tissue.value,
            "envelope": {"f_min": envelope.f_min, "f_max": envelope.f_max},
            "window": window,
            "peaks": [v.as_dict() for v in verdicts],
        }
        outputs = [write_json(result, out_dir / "peaks.json")]
        _finish(
            "analyze",
            {"forces": _input_digest(forces), "tissue": tissue.value, "window": window},
            out_dir,
            outputs,
        )

        counts: Dict[str, int] = {}
        for v in verdicts:
            counts[v.verdict.value] = counts.get(v.verdict.value, 0) + 1
        detail = ", ".join(f"{k}: {counts[k]}" for k in sorted(counts)) or "none"
        console.print(f"{len(verdicts)} peak(s) against {tissue.value} envelope ({detail})")


def _stats_table(title: str, stats) -> Table:
    table = Table(title=title, show_header=True)
    for name in ("n", "min", "q1", "median", "q3", "max", "mean"):
        table.add_column(name, justify="right")
    table.add_row(str(stats.n), *(f"{getattr(stats, k):.4f}" for k in ("min", "q1", "median", "q3", "max", "mean")))
    return table


@app.command()
def stats(
    values: Path = typer.Argument(..., help="CSV with header value"),
    out: Optional[Path] = OutOption,
):
    """Median, quartiles, range and mean of a measurement set"""
    with _command("stats"):
        out_dir = _out_dir(out)
        summary = summarize(load_values_csv(values))
        outputs = [write_json(summary.model_dump(), out_dir / "summary.json")]
        _finish("stats", {"values": _input_digest(values)}, out_dir, outputs)
        console.print(_stats_table(values.name, summary))


@app.command()
def compare(
    first: Path = typer.Argument(..., help="First measurement CSV"),
    second: Path = typer.Argument(..., help="Second measurement CSV"),
    out: Optional[Path] = OutOption,
):
    """Two-sided Mann-Whitney U test between two measurement sets"""
    with _command("compare"):
        out_dir = _out_dir(out)
        result = compare_groups(load_values_csv(first), load_values_csv(second))
        outputs = [write_json(result.model_dump(), out_dir / "comparison.json")]
        _finish(
            "compare",
            {"first": _input_digest(first), "second": _input_digest(second)},
            out_dir,
            outputs,
        )
        console.print(_stats_table(first.name, result.a))
        console.print(_stats_table(second.name, result.b))
        console.print(f"Mann-Whitney U = {result.u_statistic:.3f}, p = {result.p_value:.4g}")


def main():
    app()


if __name__ == "__main__":
    main()
