"""Command-line front end: scenario selection, trajectory runs, CSV/JSON output.

Configuration comes from flags, from a JSON file (``--config``), or both;
flags override file values.  Exit codes: 0 success, 2 configuration error,
3 internal engine-consistency error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dynamics import Scenario, Trajectory, TransitionResult, detect_transition, evolve_trajectory
from .errors import ConsistencyError
from .states import FanoForm

CSV_HEADER = "t,I,C,D,Icomp,c1,c2,c3"
_NUM = "{:#.9g}"  # fixed 9 significant digits, locale-independent

_CONFIG_KEYS = (
    "family",
    "c3",
    "sign",
    "theta",
    "beta",
    "gamma",
    "channel",
    "tmax",
    "points",
    "fano",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcorr",
        description="Evolve two-qubit correlation measures under local Markovian noise.",
    )
    parser.add_argument("--config", help="JSON scenario file; flags override its values")
    parser.add_argument(
        "--family", choices=["mazzola", "pure", "werner", "custom"], help="initial-state family"
    )
    parser.add_argument("--c3", type=float, help="tensor diagonal c3 (mazzola family)")
    parser.add_argument(
        "--sign", choices=["+", "-"], help="sign variant: c1(0) = +-1, c2(0) = -+c3 (mazzola)"
    )
    parser.add_argument("--theta", type=float, help="Schmidt angle in radians (pure family)")
    parser.add_argument("--beta", type=float, help="singlet fraction (werner family)")
    parser.add_argument("--gamma", type=float, help="damping rate (default 1)")
    parser.add_argument(
        "--channel",
        choices=["phase_damping", "depolarizing", "amplitude_damping"],
        help="local noise family (default phase_damping)",
    )
    parser.add_argument("--tmax", type=float, help="end of the time grid (default 2/gamma)")
    parser.add_argument("--points", type=int, help="number of grid points (default 801)")
    parser.add_argument("--format", choices=["csv", "json"], default="csv", help="output format")
    parser.add_argument("--out", help="output path (default: standard output)")
    parser.add_argument(
        "--validate-only",
        action="store_true",
        help="check the scenario and report diagnostics without running",
    )
    return parser


def scenario_from_config(args: argparse.Namespace) -> Scenario:
    config: dict = {}
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            config = json.load(fh)
        unknown = set(config) - set(_CONFIG_KEYS)
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")

    def pick(key, flag_value):
        return flag_value if flag_value is not None else config.get(key)

    family = pick("family", args.family)
    if family is None:
        raise ValueError("a scenario family is required (--family or config file)")

    fano = None
    raw_fano = config.get("fano")
    if raw_fano is not None:
        fano = FanoForm(a=raw_fano["a"], b=raw_fano["b"], tensor=raw_fano["T"])

    c3 = pick("c3", args.c3)
    sign = pick("sign", args.sign)
    gamma = pick("gamma", args.gamma)
    if family == "mazzola":
        c3 = 0.6 if c3 is None else c3
        sign = "+" if sign is None else sign

    scenario = Scenario(
        family=family,
        gamma=1.0 if gamma is None else float(gamma),
        c3=c3,
        sign_variant=sign,
        theta=pick("theta", args.theta),
        beta=pick("beta", args.beta),
        fano=fano,
        channel=pick("channel", args.channel) or "phase_damping",
        t_max=pick("tmax", args.tmax),
        n_points=int(pick("points", args.points) or 801),
    )
    return scenario


def _fmt(value: float | None) -> str:
    return "none" if value is None else _NUM.format(value)


def format_csv(trajectory: Trajectory, transition: TransitionResult) -> str:
    lines = [CSV_HEADER]
    for s in trajectory:
        lines.append(
            ",".join(
                _NUM.format(v)
                for v in (
                    s.t,
                    s.mutual_info,
                    s.classical,
                    s.discord,
                    s.complementary,
                    s.c1,
                    s.c2,
                    s.c3,
                )
            )
        )
    lines.append(
        f"# transition: detected_t={_fmt(transition.detected_t)},"
        f"analytic_t={_fmt(transition.analytic_t)}"
    )
    return "\n".join(lines) + "\n"


def _scenario_dict(scenario: Scenario) -> dict:
    out = {
        "family": scenario.family,
        "gamma": scenario.gamma,
        "channel": scenario.channel,
        "t_max": scenario.resolved_t_max(),
        "n_points": scenario.n_points,
    }
    if scenario.family == "mazzola":
        out["c3"] = scenario.c3
        out["sign"] = scenario.sign_variant
    elif scenario.family == "pure":
        out["theta"] = scenario.theta
    elif scenario.family == "werner":
        out["beta"] = scenario.beta
    elif scenario.family == "custom":
        out["fano"] = {
            "a": list(scenario.fano.a),
            "b": list(scenario.fano.b),
            "T": [list(row) for row in scenario.fano.tensor],
        }
    return out


def format_json(trajectory: Trajectory, transition: TransitionResult) -> str:
    payload = {
        "scenario": _scenario_dict(trajectory.scenario),
        "samples": [
            {
                "t": s.t,
                "I": s.mutual_info,
                "C": s.classical,
                "D": s.discord,
                "Icomp": s.complementary,
                "c1": s.c1,
                "c2": s.c2,
                "c3": s.c3,
            }
            for s in trajectory
        ],
        "transition": {
            "detected_t": transition.detected_t,
            "analytic_t": transition.analytic_t,
        },
    }
    return json.dumps(payload, indent=2) + "\n"


def _emit(text: str, destination: str | None) -> None:
    if destination:
        with open(destination, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the diagnostic
        return int(exc.code or 0)

    try:
        scenario = scenario_from_config(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"qcorr: configuration error: {exc}", file=sys.stderr)
        return 2

    report = scenario.validate()
    if args.validate_only:
        print(report.render())
        return 0 if report.ok else 2
    if not report.ok:
        print(f"qcorr: invalid scenario:\n{report.render()}", file=sys.stderr)
        return 2

    try:
        trajectory = evolve_trajectory(scenario)
        transition = detect_transition(trajectory)
    except ConsistencyError as exc:
        print(f"qcorr: engine consistency error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"qcorr: configuration error: {exc}", file=sys.stderr)
        return 2

    text = (
        format_json(trajectory, transition)
        if args.format == "json"
        else format_csv(trajectory, transition)
    )
    _emit(text, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
