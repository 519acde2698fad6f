"""Scenario files, the four-method pipeline and report emission.

Scenario file format, one ``key = value`` per line, ``#`` starts a comment::

    [body]
    preset = earth-uniform          # or mass_kg / radius_m / spin_omega_rad_s
    [orbit]
    radii_m = 7.0e6, 4.224e7
    [run]
    methods = kerr, semiclassical, gem, oracle
    rel_tol = 1e-12

Explicit body keys override the preset's values.  Presets also fix the
physical constants (``toy-unit`` runs with G = c = hbar = 1).
"""

from __future__ import annotations

import csv
import io
import math
import warnings
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Optional, TextIO

from .constants import CODATA2018, UNIT_CONSTANTS, CentralBody, PhysicalConstants, derive_body, keplerian_frequency
from .errors import GravClockError, ScenarioError
from .gem import first_order_epsilon, gem_clock_effect, level_pair
from .kerr import Method, kerr_clock_effect
from .oracle import IntegratorConfig, measure_clock_effect
from .semiclassical import level_energies, quantum_clock_effect

SECTION_KEYS = {
    "body": ("preset", "mass_kg", "radius_m", "spin_omega_rad_s"),
    "orbit": ("radii_m",),
    "run": ("methods", "rel_tol"),
}

PRESETS = {
    "earth-uniform": (CentralBody(mass=5.972e24, radius=6.371e6, spin_omega=7.2921e-5), CODATA2018),
    "toy-unit": (CentralBody(mass=1.0, radius=1.0, spin_omega=1.0), UNIT_CONSTANTS),
}

SIGNIFICANT_DIGITS = 12


@dataclass(frozen=True)
class Scenario:
    name: str
    body: CentralBody
    radii: tuple[float, ...]
    methods: tuple[Method, ...]
    integrator: IntegratorConfig = field(default_factory=IntegratorConfig)
    constants: PhysicalConstants = CODATA2018

    def __post_init__(self):
        if not self.radii:
            raise ScenarioError("radii must be non-empty")
        for r in self.radii:
            if not (math.isfinite(r) and r > self.body.radius):
                raise ScenarioError(f"radius {r!r} must exceed the body radius {self.body.radius!r}")
        if not self.methods:
            raise ScenarioError("methods must be non-empty")


@dataclass(frozen=True)
class ReportRow:
    scenario: str
    method: str
    r: float
    omega_k: Optional[float] = None
    T_plus: Optional[float] = None
    T_minus: Optional[float] = None
    delta_T: Optional[float] = None
    delta_E: Optional[float] = None
    epsilon: Optional[float] = None
    energy_drift: Optional[float] = None
    error: str = ""


COLUMNS = tuple(f.name for f in fields(ReportRow))


def _parse_float(text, key, lineno):
    try:
        value = float(text)
    except ValueError:
        raise ScenarioError(f"{key}: cannot parse {text!r} as a number", lineno) from None
    if not math.isfinite(value):
        raise ScenarioError(f"{key}: value must be finite, got {text!r}", lineno)
    return value


def parse_scenario(text: str, name: str = "scenario") -> Scenario:
    values: dict[str, tuple[str, int]] = {}
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ScenarioError(f"malformed section header {line!r}", lineno)
            section = line[1:-1].strip()
            if section not in SECTION_KEYS:
                raise ScenarioError(f"unknown section [{section}]", lineno)
            continue
        if "=" not in line:
            raise ScenarioError(f"expected 'key = value', got {line!r}", lineno)
        if section is None:
            raise ScenarioError("key outside of any section", lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in SECTION_KEYS[section]:
            raise ScenarioError(f"unknown key {key!r} in [{section}]", lineno)
        if key in values:
            raise ScenarioError(f"duplicate key {key!r}", lineno)
        values[key] = (value, lineno)

    consts = CODATA2018
    body_kwargs = {}
    if "preset" in values:
        preset, lineno = values["preset"]
        if preset not in PRESETS:
            raise ScenarioError(f"unknown preset {preset!r}; choose from {sorted(PRESETS)}", lineno)
        preset_body, consts = PRESETS[preset]
        body_kwargs = {"mass": preset_body.mass, "radius": preset_body.radius, "spin_omega": preset_body.spin_omega}
    for key, attr in (("mass_kg", "mass"), ("radius_m", "radius"), ("spin_omega_rad_s", "spin_omega")):
        if key in values:
            body_kwargs[attr] = _parse_float(values[key][0], key, values[key][1])
    missing = {"mass", "radius"} - body_kwargs.keys()
    if missing:
        raise ScenarioError(f"[body] needs a preset or mass_kg and radius_m (missing {sorted(missing)})")
    try:
        body = CentralBody(**body_kwargs)
    except GravClockError as exc:
        raise ScenarioError(f"invalid body: {exc}") from None

    if "radii_m" not in values:
        raise ScenarioError("[orbit] radii_m is required")
    text_radii, lineno = values["radii_m"]
    radii = tuple(
        sorted(_parse_float(item.strip(), "radii_m", lineno) for item in text_radii.split(",") if item.strip())
    )
    if not radii:
        raise ScenarioError("radii must be non-empty", lineno)

    methods: tuple[Method, ...] = tuple(Method)
    if "methods" in values:
        text_methods, lineno = values["methods"]
        names = [item.strip() for item in text_methods.split(",") if item.strip()]
        try:
            methods = tuple(Method(item) for item in names)
        except ValueError:
            raise ScenarioError(f"unknown method in {text_methods!r}; choose from {[m.value for m in Method]}", lineno) from None
        if len(set(methods)) != len(methods):
            raise ScenarioError("methods must not repeat", lineno)

    integrator = IntegratorConfig()
    if "rel_tol" in values:
        text_tol, lineno = values["rel_tol"]
        try:
            integrator = IntegratorConfig(relative_tolerance=_parse_float(text_tol, "rel_tol", lineno))
        except GravClockError as exc:
            if isinstance(exc, ScenarioError):
                raise
            raise ScenarioError(str(exc), lineno) from None

    return Scenario(name=name, body=body, radii=radii, methods=methods, integrator=integrator, constants=consts)


def load_scenario(path) -> Scenario:
    path = Path(path)
    return parse_scenario(path.read_text(encoding="utf-8"), name=path.stem)


def _method_row(scenario: Scenario, method: Method, r: float) -> ReportRow:
    consts = scenario.constants
    body = scenario.body
    derived = derive_body(body, consts)
    J, a = derived.spin_J, derived.spin_parameter_a
    omega_k = keplerian_frequency(body.mass, r, consts)
    epsilon = abs(first_order_epsilon(J, body.mass, omega_k, consts))
    delta_E = None
    drift = None
    if method is Method.KERR:
        report = kerr_clock_effect(a, omega_k)
    elif method is Method.SEMICLASSICAL:
        report = quantum_clock_effect(a, omega_k, consts)
        E_plus, E_minus = level_energies(a, omega_k, consts)
        delta_E = E_plus - E_minus
    elif method is Method.GEM:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            report = gem_clock_effect(J, body.mass, omega_k, consts)
        delta_E = level_pair(J, body.mass, omega_k, consts).delta_E
    else:
        report = measure_clock_effect(body, r, scenario.integrator, consts)
        drift = report.energy_drift
    return ReportRow(
        scenario=scenario.name,
        method=method.value,
        r=r,
        omega_k=omega_k,
        T_plus=report.T_plus,
        T_minus=report.T_minus,
        delta_T=report.delta_T,
        delta_E=delta_E,
        epsilon=epsilon,
        energy_drift=drift,
    )


def run_scenario(scenario: Scenario) -> list[ReportRow]:
    """One row per (method, radius), methods in listed order, radii ascending.

    A failing row carries its error message and leaves the others intact.
    """
    rows = []
    for method in scenario.methods:
        for r in sorted(scenario.radii):
            try:
                rows.append(_method_row(scenario, method, r))
            except GravClockError as exc:
                rows.append(ReportRow(scenario=scenario.name, method=method.value, r=r, error=f"{type(exc).__name__}: {exc}"))
    return rows


def _format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.{SIGNIFICANT_DIGITS}g}"
    return str(value)


def emit_report(rows, stream: TextIO, format: str = "csv") -> None:
    if format == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(COLUMNS)
        for row in rows:
            writer.writerow([_format_value(getattr(row, name)) for name in COLUMNS])
    elif format == "text":
        table = [list(COLUMNS)] + [[_format_value(getattr(row, name)) for name in COLUMNS] for row in rows]
        widths = [max(len(line[i]) for line in table) for i in range(len(COLUMNS))]
        for i, line in enumerate(table):
            stream.write("  ".join(cell.rjust(w) for cell, w in zip(line, widths)).rstrip() + "\n")
            if i == 0:
                stream.write("  ".join("-" * w for w in widths) + "\n")
    else:
        raise ValueError(f"unknown report format {format!r}")


def report_to_string(rows, format: str = "csv") -> str:
    buffer = io.StringIO()
    emit_report(rows, buffer, format)
    return buffer.getvalue()


def read_report_csv(stream: TextIO) -> list[dict[str, Optional[float]]]:
    """Parse emitted CSV back into dicts; numeric cells become floats."""
    out = []
    for record in csv.DictReader(stream):
        parsed = {}
        for key, value in record.items():
            if key in ("scenario", "method", "error"):
                parsed[key] = value
            else:
                parsed[key] = float(value) if value else None
        out.append(parsed)
    return out
