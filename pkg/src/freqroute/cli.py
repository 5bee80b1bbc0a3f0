"""Command line interface: gen, route, compare, sweep, and validate subcommands."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .harness import (
    ORACLE_MAX_VEHICLES,
    compare_routes,
    cross_check,
    cross_check_batch,
    run_sweep,
    run_sweep_fixed,
    summarize_sweep,
    sweep_csv,
)
from .metrics import Metric
from .model import GenSpec, ScenarioError, generate_scenario, load_scenario, save_scenario
from .router import Route, astar
from .topology import build_link_graph

ARROW = "→"

# exit codes: 0 success / route found, 1 no route, 2 invalid input or flags
EXIT_OK = 0
EXIT_NO_ROUTE = 1
EXIT_INVALID = 2


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {value}")
    return value


def _freq_list(text: str) -> tuple[int, ...]:
    try:
        pool = tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not pool:
        raise argparse.ArgumentTypeError("frequency list must not be empty")
    return pool


def _add_gen_flags(parser, *, vehicles=30, area=(1000.0, 1000.0), comm_range=200.0,
                   radios=1, freqs=(1,), bw=(2.0, 10.0), seed=0):
    parser.add_argument("--seed", type=int, default=seed,
                        help=f"generation seed (default {seed})")
    parser.add_argument("--vehicles", type=_positive_int, default=vehicles,
                        help=f"number of vehicles (default {vehicles})")
    parser.add_argument("--area", type=_positive_float, nargs=2, metavar=("W", "H"),
                        default=list(area), help=f"area size in meters (default {area[0]:g} {area[1]:g})")
    parser.add_argument("--range", dest="comm_range", type=_positive_float, default=comm_range,
                        help=f"communication range in meters (default {comm_range:g})")
    parser.add_argument("--radios", type=_positive_int, default=radios,
                        help=f"radios per vehicle (default {radios})")
    parser.add_argument("--freqs", type=_freq_list, default=tuple(freqs),
                        help="comma-separated channel pool (default %s)" % ",".join(str(f) for f in freqs))
    parser.add_argument("--bw", type=_positive_float, nargs=2, metavar=("MIN", "MAX"),
                        default=list(bw), help=f"bandwidth range in kb/s (default {bw[0]:g} {bw[1]:g})")


def _genspec(args, vehicle_count=None) -> GenSpec:
    return GenSpec(
        seed=args.seed,
        vehicle_count=vehicle_count if vehicle_count is not None else args.vehicles,
        area=tuple(args.area),
        comm_range=args.comm_range,
        radios_per_vehicle=args.radios,
        frequency_pool=tuple(args.freqs),
        bandwidth_range=tuple(args.bw),
    )


def _load(path: str):
    return load_scenario(Path(path).read_text())


def _fmt_route(route: Route) -> str:
    return ARROW.join(str(v) for v in route.vehicle_sequence)


def _fmt_stats(route: Route) -> str:
    s = route.stats
    return (f"hops={s.hops} total_distance={s.total_distance:.4f} "
            f"avg_bandwidth={s.avg_bandwidth:.4f} p_value={s.p_value:.4f}")


# --- subcommands -----------------------------------------------------------


def cmd_gen(args) -> int:
    out = Path(args.out)
    if out.exists() and not args.force:
        print(f"error: {out} exists; pass --force to overwrite", file=sys.stderr)
        return EXIT_INVALID
    scenario = generate_scenario(_genspec(args))
    out.write_text(save_scenario(scenario))
    print(f"wrote {out} ({len(scenario.vehicles)} vehicles)")
    return EXIT_OK


def cmd_route(args) -> int:
    scenario = _load(args.scenario)
    graph = build_link_graph(scenario)
    route = astar(scenario, graph, args.src, args.dst, Metric(args.metric))
    if route is None:
        print("NO ROUTE")
        return EXIT_NO_ROUTE
    print(_fmt_route(route))
    if route.hops:
        print(_fmt_stats(route))
    else:
        print("hops=0 total_distance=0.0000")
    return EXIT_OK


def cmd_compare(args) -> int:
    scenario = _load(args.scenario)
    graph = build_link_graph(scenario)
    report = compare_routes(scenario, graph, args.src, args.dst)
    if not report.both_found:
        # link feasibility does not depend on the metric, so it is both or neither
        print("NO ROUTE")
        return EXIT_NO_ROUTE
    print(f"{'metric':<10} {'route':<28} hops  total_distance  avg_bandwidth  p_value")
    for name, route in (("distance", report.distance_route),
                        ("bandwidth", report.bandwidth_route)):
        s = route.stats
        print(f"{name:<10} {_fmt_route(route):<28} {s.hops:<5} "
              f"{s.total_distance:<15.4f} {s.avg_bandwidth:<14.4f} {s.p_value:.4f}")
    print(f"delta: avg_bandwidth {report.avg_bandwidth_delta:+.4f}, "
          f"total_distance {report.total_distance_delta:+.4f}")
    print("check: p(bandwidth) <= p(distance): "
          + ("ok" if report.p_ordering_ok else "VIOLATED"))
    if args.csv:
        lines = ["metric,found,hops,total_distance,avg_bandwidth,p_value"]
        for name, route in (("distance", report.distance_route),
                            ("bandwidth", report.bandwidth_route)):
            s = route.stats
            lines.append(f"{name},true,{s.hops},{s.total_distance:.4f},"
                         f"{s.avg_bandwidth:.4f},{s.p_value:.4f}")
        Path(args.csv).write_text("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_sweep(args) -> int:
    if (args.src is None) != (args.dst is None):
        print("error: --src and --dst must be given together", file=sys.stderr)
        return EXIT_INVALID
    if args.scenario:
        scenario = _load(args.scenario)
        rows = run_sweep_fixed(scenario, args.rounds, args.src, args.dst)
    else:
        rows = run_sweep(_genspec(args), args.rounds, args.seed, args.src, args.dst)
    text = sweep_csv(rows)
    if args.csv:
        Path(args.csv).write_text(text)
        print(f"wrote {args.csv} ({len(rows)} rows)")
    else:
        sys.stdout.write(text)
    summary = summarize_sweep(rows)
    for name in ("distance", "bandwidth"):
        stats = summary[name]
        if stats["rounds_with_route"]:
            print(f"{name}: rounds_with_route={stats['rounds_with_route']:.0f} "
                  f"mean_total_distance={stats['mean_total_distance']:.4f} "
                  f"mean_avg_bandwidth={stats['mean_avg_bandwidth']:.4f} "
                  f"mean_p_value={stats['mean_p_value']:.4f}")
        else:
            print(f"{name}: rounds_with_route=0")
    return EXIT_OK


def cmd_validate(args) -> int:
    if args.scenario is None and args.batch is None:
        print("error: pass --scenario or --batch", file=sys.stderr)
        return EXIT_INVALID
    if args.scenario is not None:
        report = cross_check(_load(args.scenario))
    else:
        vmax = args.vehicles_max if args.vehicles_max is not None else args.vehicles
        report = cross_check_batch(_genspec(args), args.batch, args.seed,
                                   args.vehicles, vmax)
    print(f"scenarios={report.scenarios} connected_ordered_pairs={report.connected_pairs}")
    for name, check in (("distance", report.distance), ("bandwidth", report.bandwidth)):
        print(f"{name:<10} match {check.matched}/{check.pairs} ({check.match_rate:.1%}) "
              f"worst_relative_gap {check.worst_gap:.3e}")
    return EXIT_OK


# --- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freqroute",
        description="Route planning over multi-radio vehicle networks where links "
                    "require matching frequency channels and adequate range.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a random scenario file")
    _add_gen_flags(gen)
    gen.add_argument("--out", required=True, help="output scenario path")
    gen.add_argument("--force", action="store_true", help="overwrite an existing file")
    gen.set_defaults(func=cmd_gen)

    route = sub.add_parser("route", help="find a route between two vehicles")
    route.add_argument("--scenario", required=True, help="scenario JSON file")
    route.add_argument("--src", type=int, required=True, help="source vehicle id")
    route.add_argument("--dst", type=int, required=True, help="destination vehicle id")
    route.add_argument("--metric", choices=[m.value for m in Metric],
                       default="distance", help="cost metric (default distance)")
    route.set_defaults(func=cmd_route)

    compare = sub.add_parser("compare", help="route the same query under both metrics")
    compare.add_argument("--scenario", required=True, help="scenario JSON file")
    compare.add_argument("--src", type=int, required=True, help="source vehicle id")
    compare.add_argument("--dst", type=int, required=True, help="destination vehicle id")
    compare.add_argument("--csv", help="also write the two result rows as CSV")
    compare.set_defaults(func=cmd_compare)

    sweep = sub.add_parser("sweep", help="run repeated rounds over generated scenarios")
    sweep.add_argument("--rounds", type=_positive_int, default=30,
                       help="number of rounds (default 30)")
    _add_gen_flags(sweep)
    sweep.add_argument("--scenario", help="use a fixed scenario file instead of generating")
    sweep.add_argument("--src", type=int, help="fixed source vehicle id")
    sweep.add_argument("--dst", type=int, help="fixed destination vehicle id")
    sweep.add_argument("--csv", help="write rows to this file instead of stdout")
    sweep.set_defaults(func=cmd_sweep)

    validate = sub.add_parser(
        "validate",
        help="cross-check search results against exhaustive enumeration "
             f"(scenarios up to {ORACLE_MAX_VEHICLES} vehicles)",
    )
    validate.add_argument("--scenario", help="scenario JSON file to check")
    validate.add_argument("--batch", type=_positive_int,
                          help="instead generate and check this many scenarios")
    _add_gen_flags(validate, vehicles=8, area=(500.0, 500.0))
    validate.add_argument("--vehicles-max", type=_positive_int, default=None,
                          help="cycle vehicle counts from --vehicles up to this")
    validate.set_defaults(func=cmd_validate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ValueError, KeyError) as exc:
        # str(KeyError) wraps the message in quotes; unwrap for readable output
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
