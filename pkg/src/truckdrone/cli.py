"""Command-line front end.

Instance files:  {"v": .., "R": .., "truck_start": .., "points": [{"x","y"}..]}
Schedule files:  {"deliveries": [{"point","start","return"}..], "count": ..}

Unknown fields are rejected.  Numbers are written with 17 significant
digits, so parsing a file we wrote and writing it again reproduces it
byte for byte.  Exit codes: 0 success, 1 solver/verification refusal,
2 bad usage or unparseable input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from .generators import (
    GenerationError,
    ThreePartitionSpec,
    gen_greedy_tightness,
    gen_random_band,
    gen_random_proper,
    gen_three_partition,
)
from .model import (
    DEFAULT_TOL,
    Delivery,
    Instance,
    InvalidScheduleError,
    Schedule,
    verify_schedule,
)
from .proper import NotProperError, check_proper
from .render import render_svg
from .solvers import BudgetError, solve_dp_proper, solve_exact, solve_greedy


class CliError(Exception):
    """Input that cannot be used; reported on stderr with exit code 2."""


# --- canonical JSON ---------------------------------------------------------


def _fmt_num(x: float) -> str:
    if isinstance(x, int) and not isinstance(x, bool):
        return str(x)
    return format(float(x), ".17g")


def _emit(value, indent: int = 0) -> str:
    pad = "  " * indent
    if value is None:
        return "null"
    if isinstance(value, dict):
        if not value:
            return "{}"
        inner = ",\n".join(
            f'{pad}  "{k}": {_emit(v, indent + 1)}' for k, v in value.items()
        )
        return "{\n" + inner + "\n" + pad + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        inner = ",\n".join(f"{pad}  {_emit(v, indent + 1)}" for v in value)
        return "[\n" + inner + "\n" + pad + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float)):
        return _fmt_num(value)
    if isinstance(value, str):
        return json.dumps(value)
    raise TypeError(f"cannot serialize {type(value)!r}")


def emit_json(value) -> str:
    return _emit(value) + "\n"


def _write_out(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as f:
            f.write(text)


# --- strict parsing ---------------------------------------------------------


def _need_number(obj, key: str, where: str) -> float:
    if key not in obj:
        raise CliError(f"{where}: missing field '{key}'")
    val = obj[key]
    if isinstance(val, bool) or not isinstance(val, (int, float)):
        raise CliError(f"{where}: field '{key}' must be a number")
    if not math.isfinite(val):
        raise CliError(f"{where}: field '{key}' must be finite")
    return float(val)


def _need_keys(obj, allowed: set[str], required: set[str], where: str) -> None:
    if not isinstance(obj, dict):
        raise CliError(f"{where}: expected a JSON object")
    extra = set(obj) - allowed
    if extra:
        raise CliError(f"{where}: unknown fields {sorted(extra)}")
    missing = required - set(obj)
    if missing:
        raise CliError(f"{where}: missing fields {sorted(missing)}")


def _load_json(path: str, what: str):
    try:
        with open(path) as f:
            return json.load(f)
    except OSError as e:
        raise CliError(f"cannot read {what} file {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise CliError(f"{path} is not valid JSON: {e}") from e


def load_instance(path: str) -> Instance:
    data = _load_json(path, "instance")
    _need_keys(data, {"v", "R", "truck_start", "points"}, {"v", "R", "points"}, path)
    v = _need_number(data, "v", path)
    R = _need_number(data, "R", path)
    s0 = _need_number(data, "truck_start", path) if "truck_start" in data else 0.0
    if not isinstance(data["points"], list):
        raise CliError(f"{path}: 'points' must be an array")
    pts = []
    for i, entry in enumerate(data["points"]):
        where = f"{path}: points[{i}]"
        _need_keys(entry, {"x", "y"}, {"x", "y"}, where)
        x = _need_number(entry, "x", where)
        y = _need_number(entry, "y", where)
        if y == 0.0:
            raise CliError(f"{where}: y must be nonzero")
        pts.append((x, y))
    if not v > 1.0:
        raise CliError(f"{path}: need v > 1")
    if not R > 0.0:
        raise CliError(f"{path}: need R > 0")
    return Instance(v, R, tuple(pts), truck_start=s0)


def load_schedule(path: str) -> Schedule:
    data = _load_json(path, "schedule")
    _need_keys(data, {"deliveries", "count"}, {"deliveries", "count"}, path)
    if not isinstance(data["deliveries"], list):
        raise CliError(f"{path}: 'deliveries' must be an array")
    count = data["count"]
    if isinstance(count, bool) or not isinstance(count, int):
        raise CliError(f"{path}: 'count' must be an integer")
    if count != len(data["deliveries"]):
        raise CliError(f"{path}: count={count} but {len(data['deliveries'])} deliveries")
    entries = []
    for j, entry in enumerate(data["deliveries"]):
        where = f"{path}: deliveries[{j}]"
        _need_keys(entry, {"point", "start", "return"}, {"point", "start", "return"}, where)
        point = entry["point"]
        if isinstance(point, bool) or not isinstance(point, int) or point < 0:
            raise CliError(f"{where}: 'point' must be a nonnegative integer")
        start = _need_number(entry, "start", where)
        ret = _need_number(entry, "return", where)
        entries.append(Delivery(point, start, ret))
    return Schedule(tuple(entries))


def instance_to_json(inst: Instance) -> str:
    return emit_json({
        "v": inst.v,
        "R": inst.R,
        "truck_start": inst.truck_start,
        "points": [{"x": p.x, "y": p.y} for p in inst.points],
    })


def schedule_to_json(sched: Schedule) -> str:
    return emit_json({
        "deliveries": [
            {"point": d.point, "start": d.start, "return": d.ret}
            for d in sched.deliveries
        ],
        "count": sched.count,
    })


# --- commands ---------------------------------------------------------------


def cmd_solve(args) -> int:
    inst = load_instance(args.input)
    try:
        if args.algo == "greedy":
            sched = solve_greedy(inst)
        elif args.algo == "dp":
            sched = solve_dp_proper(inst, require_proper=not args.allow_nonproper)
        else:
            sched = solve_exact(inst, max_points=args.max_points)
    except NotProperError as e:
        print(f"dp refused: {e}", file=sys.stderr)
        return 1
    except BudgetError as e:
        print(f"exact refused: {e}", file=sys.stderr)
        return 1
    report = verify_schedule(inst, sched, tol=args.tolerance)
    _write_out(schedule_to_json(sched), args.output)
    print(
        f"{args.algo}: count={sched.count} completion={_fmt_num(report.completion)}",
        file=sys.stderr,
    )
    return 0


def cmd_verify(args) -> int:
    inst = load_instance(args.instance)
    sched = load_schedule(args.schedule)
    try:
        report = verify_schedule(inst, sched, tol=args.tolerance)
    except InvalidScheduleError as e:
        raise CliError(str(e)) from e
    sys.stdout.write(emit_json({
        "feasible": report.feasible,
        "violations": [{"entry": j, "reason": r} for j, r in report.violations],
        "completion": report.completion if math.isfinite(report.completion) else None,
    }))
    return 0 if report.feasible else 1


def cmd_check_proper(args) -> int:
    inst = load_instance(args.input)
    report = check_proper(inst, tol=args.tolerance)
    sys.stdout.write(emit_json({
        "is_proper": report.is_proper,
        "triangle_violations": [list(p) for p in report.triangle_violations],
        "nesting_violations": [list(p) for p in report.nesting_violations],
        "out_of_band": list(report.out_of_band),
    }))
    return 0 if report.is_proper else 1


def _parse_values(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise CliError(f"bad value list {text!r}: {e}") from e


def cmd_gen(args) -> int:
    try:
        if args.kind == "random":
            inst = gen_random_band(args.n, args.v, args.R, args.x_span, args.seed)
        elif args.kind == "random-proper":
            inst = gen_random_proper(args.n, args.v, args.R, args.seed)
        elif args.kind == "partition":
            spec = ThreePartitionSpec(_parse_values(args.values), c=args.c)
            inst, expected = gen_three_partition(spec)
            print(f"expected count on yes-instances: {expected}", file=sys.stderr)
        else:  # adversarial
            inst, cert = gen_greedy_tightness(args.k, args.v, args.R)
            cert_json = emit_json({
                "pairs": cert.pairs,
                "exact_count": cert.exact_count,
                "greedy_count": cert.greedy_count,
                "optimal_order": list(cert.optimal_order),
                "method": cert.method,
            })
            if args.out and args.out != "-":
                cert_path = args.out + ".cert.json"
                _write_out(cert_json, cert_path)
                print(f"certificate written to {cert_path}", file=sys.stderr)
            else:
                sys.stderr.write(cert_json)
    except ValueError as e:
        raise CliError(str(e)) from e
    except GenerationError as e:
        print(f"generation failed: {e}", file=sys.stderr)
        return 1
    _write_out(instance_to_json(inst), args.out)
    return 0


def cmd_compare(args) -> int:
    inst = load_instance(args.input)
    rows = []
    for algo in args.algos.split(","):
        algo = algo.strip()
        if algo not in ("greedy", "dp", "exact"):
            raise CliError(f"unknown algorithm {algo!r}")
        t0 = time.perf_counter()
        note = ""
        sched = None
        try:
            if algo == "greedy":
                sched = solve_greedy(inst)
            elif algo == "dp":
                sched = solve_dp_proper(inst)
            else:
                sched = solve_exact(inst, max_points=args.max_points)
        except NotProperError:
            note = "not-proper"
        except BudgetError:
            note = "over-budget"
        wall = time.perf_counter() - t0
        if sched is None:
            rows.append({"algo": algo, "count": None, "completion": None,
                         "wall_s": wall, "note": note})
        else:
            report = verify_schedule(inst, sched)
            rows.append({"algo": algo, "count": sched.count,
                         "completion": report.completion, "wall_s": wall,
                         "note": note})
    if args.json:
        sys.stdout.write(emit_json({"rows": rows}))
    else:
        print(f"{'algo':<8} {'count':>5} {'completion':>22} {'wall_s':>10}  note")
        for r in rows:
            count = "-" if r["count"] is None else str(r["count"])
            comp = "-" if r["completion"] is None else _fmt_num(r["completion"])
            print(f"{r['algo']:<8} {count:>5} {comp:>22} {r['wall_s']:>10.4f}  {r['note']}")
    return 0


def cmd_render(args) -> int:
    inst = load_instance(args.instance)
    sched = load_schedule(args.schedule) if args.schedule else None
    if sched is not None:
        # indices must resolve against this instance before drawing
        try:
            verify_schedule(inst, sched)
        except InvalidScheduleError as e:
            raise CliError(str(e)) from e
    svg = render_svg(inst, sched, show_windows=args.show_windows,
                     show_ellipses=args.show_ellipses)
    _write_out(svg, args.out)
    return 0


# --- wiring -----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="truckdrone",
        description="Schedule drone deliveries launched from a truck on the x-axis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run a solver on an instance file")
    p.add_argument("--algo", choices=("greedy", "dp", "exact"), required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--output", default=None, help="schedule JSON (default stdout)")
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOL)
    p.add_argument("--allow-nonproper", action="store_true",
                   help="let dp run as a heuristic on non-proper instances")
    p.add_argument("--max-points", type=int, default=10,
                   help="point budget for the exact solver")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a schedule against an instance")
    p.add_argument("--instance", required=True)
    p.add_argument("--schedule", required=True)
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check-proper", help="test the properness conditions")
    p.add_argument("--input", required=True)
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=cmd_check_proper)

    p = sub.add_parser("gen", help="generate an instance file")
    p.add_argument("kind", choices=("random", "random-proper", "partition", "adversarial"))
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--v", type=float, default=2.0)
    p.add_argument("--R", type=float, default=10.0)
    p.add_argument("--x-span", type=float, default=50.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--values", default="1,1,1,1,1,1",
                   help="comma-separated integers for kind=partition")
    p.add_argument("--c", type=int, default=4,
                   help="spacing exponent for kind=partition")
    p.add_argument("--k", type=int, default=3, help="pairs for kind=adversarial")
    p.add_argument("--out", default=None, help="instance JSON (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("compare", help="run several solvers and tabulate")
    p.add_argument("--input", required=True)
    p.add_argument("--algos", default="greedy,exact")
    p.add_argument("--max-points", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("render", help="draw an instance (and schedule) as SVG")
    p.add_argument("--instance", required=True)
    p.add_argument("--schedule", default=None)
    p.add_argument("--out", default=None, help="SVG path (default stdout)")
    p.add_argument("--show-windows", action="store_true")
    p.add_argument("--show-ellipses", action="store_true")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
