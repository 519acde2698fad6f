"""Command-line front end.

    gravclock kerr --preset earth-uniform --r 7e6 4.224e7
    gravclock integrate --mass 1 --radius 0.5 --spin 2.5e-3 --unit-constants --r 1 --dump orbit.txt
    gravclock scenario run examples.cfg --format text
    gravclock presets list

Exit status is 0 when every row computed, 1 when any row errored and 2 on
bad input.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from pathlib import Path

from .constants import UNIT_CONSTANTS, CentralBody
from .errors import GravClockError
from .kerr import Method, OrbitSense
from .oracle import IntegratorConfig, circular_launch, integrate_orbit, write_trajectory
from .scenario import PRESETS, Scenario, emit_report, load_scenario, run_scenario


@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            yield handle


def _add_common(parser):
    parser.add_argument("--format", choices=("csv", "text"), default="csv")
    parser.add_argument("--out", type=Path, default=None, help="write the report here instead of stdout")
    parser.add_argument("--tolerance", type=float, default=None, help="integrator relative tolerance")


def _add_body(parser):
    parser.add_argument("--preset", choices=sorted(PRESETS), default=None)
    parser.add_argument("--mass", type=float, help="kg")
    parser.add_argument("--radius", type=float, help="m")
    parser.add_argument("--spin", type=float, help="spin angular frequency, rad/s")
    parser.add_argument("--unit-constants", action="store_true", help="use G = c = hbar = 1")
    parser.add_argument("--r", type=float, nargs="+", required=True, help="orbital radii, m")


def _scenario_from_args(args, method: Method) -> Scenario:
    if args.preset is not None:
        preset_body, consts = PRESETS[args.preset]
        mass, radius, spin = preset_body.mass, preset_body.radius, preset_body.spin_omega
    else:
        if args.mass is None or args.radius is None:
            raise GravClockError("give --preset or both --mass and --radius")
        consts = UNIT_CONSTANTS if args.unit_constants else PRESETS["earth-uniform"][1]
        mass, radius, spin = args.mass, args.radius, 0.0
    if args.unit_constants:
        consts = UNIT_CONSTANTS
    body = CentralBody(
        mass=args.mass if args.mass is not None else mass,
        radius=args.radius if args.radius is not None else radius,
        spin_omega=args.spin if args.spin is not None else spin,
    )
    integrator = IntegratorConfig() if args.tolerance is None else IntegratorConfig(relative_tolerance=args.tolerance)
    return Scenario(
        name=method.value,
        body=body,
        radii=tuple(sorted(args.r)),
        methods=(method,),
        integrator=integrator,
        constants=consts,
    )


def _emit(rows, args) -> int:
    with _output(args.out) as stream:
        emit_report(rows, stream, args.format)
    for row in rows:
        if row.error:
            print(f"error: {row.method} at r={row.r:g}: {row.error}", file=sys.stderr)
    return 1 if any(row.error for row in rows) else 0


def _run_method(args) -> int:
    scenario = _scenario_from_args(args, Method(args.command if args.command != "integrate" else "oracle"))
    if args.command == "integrate" and args.dump is not None:
        with open(args.dump, "w", encoding="utf-8") as handle:
            for r in scenario.radii:
                for sense in OrbitSense:
                    traj = integrate_orbit(
                        circular_launch(r, sense, scenario.body, scenario.constants),
                        scenario.body,
                        scenario.integrator,
                        scenario.constants,
                        revolutions=args.revolutions,
                    )
                    handle.write(f"# r={r!r} sense={sense.value}\n")
                    write_trajectory(traj, handle)
    return _emit(run_scenario(scenario), args)


def _run_scenario_file(args) -> int:
    scenario = load_scenario(args.file)
    if args.tolerance is not None:
        scenario = Scenario(
            name=scenario.name,
            body=scenario.body,
            radii=scenario.radii,
            methods=scenario.methods,
            integrator=IntegratorConfig(relative_tolerance=args.tolerance),
            constants=scenario.constants,
        )
    return _emit(run_scenario(scenario), args)


def _list_presets(args) -> int:
    with _output(args.out) as stream:
        stream.write("name,mass_kg,radius_m,spin_omega_rad_s,G,c,hbar\n")
        for name, (body, consts) in sorted(PRESETS.items()):
            stream.write(
                f"{name},{body.mass:.12g},{body.radius:.12g},{body.spin_omega:.12g},"
                f"{consts.G:.12g},{consts.c:.12g},{consts.hbar:.12g}\n"
            )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gravclock", description="Gravitomagnetic clock effect toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("kerr", "exact Kerr circular-orbit route"),
        ("semiclassical", "semiclassical level / rotor-closure route"),
        ("gem", "gravitomagnetic level-splitting route"),
        ("integrate", "numerical orbit-integration oracle"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        _add_body(cmd)
        _add_common(cmd)
        if name == "integrate":
            cmd.add_argument("--dump", type=Path, default=None, help="write trajectories (time x y vx vy)")
            cmd.add_argument("--revolutions", type=int, default=2)
        cmd.set_defaults(handler=_run_method)

    scenario = sub.add_parser("scenario", help="scenario files")
    scenario_sub = scenario.add_subparsers(dest="action", required=True)
    run = scenario_sub.add_parser("run", help="run a scenario file")
    run.add_argument("file", type=Path)
    _add_common(run)
    run.set_defaults(handler=_run_scenario_file)

    presets = sub.add_parser("presets", help="built-in bodies")
    presets_sub = presets.add_subparsers(dest="action", required=True)
    listing = presets_sub.add_parser("list", help="list presets")
    listing.add_argument("--out", type=Path, default=None)
    listing.set_defaults(handler=_list_presets)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (GravClockError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
