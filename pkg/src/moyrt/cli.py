"""Command-line front end.

Exit codes: 0 success, 1 bad input (unreadable, malformed or invalid
diagram, bad flags), 2 verification failure or disagreeing engines.

Everything printed to stdout is deterministic; wall-clock timings go to
stderr so that stdout can be compared byte for byte between runs.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__, links
from .moy.diagram import Crossing, DiagramError, Fork, Join, LayeredDiagram, step, validate
from .moy.io import FormatError, load
from .moy.state_sum import SweepStats, bracket, bracket_naive, colored_rotation_number
from .suites import DEFAULT_BOUNDS, SUITES, run_suite

EXIT_OK, EXIT_INPUT, EXIT_FAIL = 0, 1, 2


class InputError(Exception):
    pass


def _load(path: str) -> LayeredDiagram:
    try:
        d = load(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    except FormatError as exc:
        raise InputError(f"{path}: {exc}") from exc
    diags = validate(d)
    if d.kind == "link":
        diags = [x for x in diags if x.reason != "crossing in a graph diagram"]
    if diags:
        raise InputError(f"{path}: invalid diagram\n" + "\n".join(f"  {x}" for x in diags))
    return d


def _resolve_n(args, d: LayeredDiagram) -> int:
    N = args.n if args.n is not None else d.N
    if N is None:
        raise InputError("no N given: pass --n or set \"N\" in the file")
    if N < 1:
        raise InputError(f"N must be positive, got {N}")
    return N


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _evaluate(d: LayeredDiagram, N: int, engine: str):
    stats = SweepStats()
    if d.kind == "link":
        value = links.bracket_link(d, N, "fused" if engine == "dp" else "naive", stats=stats)
    elif engine == "dp":
        value = bracket(d, N, stats)
    else:
        value = bracket_naive(d, N)
        stats = None
    return value, stats


def cmd_eval(args) -> int:
    d = _load(args.path)
    N = _resolve_n(args, d)
    engines = ["dp", "naive"] if args.engine == "both" else [args.engine]
    t0 = time.perf_counter()
    results = {e: _evaluate(d, N, e) for e in engines}
    elapsed = time.perf_counter() - t0
    value, stats = results[engines[0]]
    agree = len({str(v) for v, _ in results.values()}) == 1
    payload = {"N": N, "kind": d.kind, "layers": len(d.layers), "value": str(value)}
    lines = [str(value), f"layers: {len(d.layers)}"]
    dp_stats = results.get("dp", (None, None))[1]
    if dp_stats is not None:
        payload["peak_states"] = dp_stats.peak_states
        lines.append(f"peak states: {dp_stats.peak_states}")
    if len(engines) == 2:
        payload["engines"] = {e: str(v) for e, (v, _) in results.items()}
        payload["agree"] = agree
        lines += [f"{e}: {v}" for e, (v, _) in results.items()]
        lines.append("engines agree" if agree else "ENGINES DISAGREE")
    _emit(args, payload, lines)
    print(f"wall time: {elapsed:.4f} s", file=sys.stderr)
    return EXIT_OK if agree else EXIT_FAIL


def cmd_rt(args) -> int:
    d = _load(args.path)
    if d.kind != "link":
        raise InputError(f"{args.path}: rt needs a file with kind \"link\", got {d.kind!r}")
    N = _resolve_n(args, d)
    t0 = time.perf_counter()
    rt = links.rt_polynomial(d, N)
    elapsed = time.perf_counter() - t0
    tc = links.total_color(d)
    cr = links.adjusted_rotation(d)
    parity_ok = (cr - tc) % 2 == 0
    shifts = [
        {"layer": i, "m": m, "n": n, "sign": "+" if s > 0 else "-", "shift": str(links.shift_factor(m, n, s, N))}
        for i, m, n, s in links.crossing_colors(d)
    ]
    payload = {"N": N, "rt": str(rt), "shift_factors": shifts, "total_color": tc, "adjusted_rotation": cr,
               "parity": "OK" if parity_ok else "FAIL"}
    lines = [f"RT: {rt}"]
    lines += [f"shift factor layer {x['layer']} ({x['m']},{x['n']}){x['sign']}: {x['shift']}" for x in shifts]
    lines += [f"total color: {tc}", f"adjusted rotation: {cr}", f"parity {'OK' if parity_ok else 'FAIL'}"]
    _emit(args, payload, lines)
    print(f"wall time: {elapsed:.4f} s", file=sys.stderr)
    return EXIT_OK if parity_ok else EXIT_FAIL


def _parse_bounds(items: list[str]) -> dict:
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise InputError(f"bound {item!r} is not of the form key=value")
        try:
            out[key] = int(value)
        except ValueError as exc:
            raise InputError(f"bound {key!r} needs an integer, got {value!r}") from exc
    return out


def cmd_verify(args) -> int:
    bounds = _parse_bounds(args.bounds)
    t0 = time.perf_counter()
    try:
        report = run_suite(args.suite, bounds, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    elapsed = time.perf_counter() - t0
    passed = sum(c.ok for c in report.cases)
    if args.output == "json":
        payload = {
            "suite": report.name,
            "bounds": report.bounds,
            "seed": args.seed,
            "passed": passed,
            "failed": len(report.cases) - passed,
            "cases": [{"case": c.label, "ok": c.ok, "detail": c.detail} for c in report.cases],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for c in report.cases:
            print(f"{'PASS' if c.ok else 'FAIL'} {c.label}" + (f": {c.detail}" if c.detail else ""))
        b = " ".join(f"{k}={v}" for k, v in report.bounds.items())
        print(f"{report.name} [{b}] seed={args.seed}: {passed}/{len(report.cases)} passed")
    print(f"wall time: {elapsed:.4f} s", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_info(args) -> int:
    d = _load(args.path)
    prof = ()
    width = 0
    for i, ev in enumerate(d.layers):
        prof = step(prof, ev, i)
        width = max(width, len(prof))
    vertices = sum(isinstance(ev, (Join, Fork)) for ev in d.layers)
    crossings = sum(isinstance(ev, Crossing) for ev in d.layers)
    payload = {
        "kind": d.kind,
        "N": d.N,
        "layers": len(d.layers),
        "max_width": width,
        "vertices": vertices,
        "crossings": crossings,
        "colored_rotation": colored_rotation_number(d),
    }
    if d.kind == "link" and not vertices:
        payload["total_color"] = links.total_color(d)
        payload["adjusted_rotation"] = links.adjusted_rotation(d)
    lines = [f"{k.replace('_', ' ')}: {'-' if v is None else v}" for k, v in payload.items()]
    _emit(args, payload, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="moyrt", description="Colored sl(N) MOY brackets and RT polynomials.")
    p.add_argument("--version", action="version", version=f"moyrt {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, needs_n=True):
        sp.add_argument("--output", choices=("text", "json"), default="text")
        if needs_n:
            sp.add_argument("--n", type=int, default=None, help="rank N (overrides the file's N)")

    e = sub.add_parser("eval", help="evaluate the bracket of a graph or link diagram")
    e.add_argument("path")
    e.add_argument("--engine", choices=("dp", "naive", "both"), default="dp")
    common(e)
    e.set_defaults(func=cmd_eval)

    r = sub.add_parser("rt", help="RT polynomial, shift factors and the parity check of a link")
    r.add_argument("path")
    common(r)
    r.set_defaults(func=cmd_rt)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--bounds", nargs="*", default=[], metavar="KEY=VALUE",
                   help="override suite bounds; defaults: " +
                        "; ".join(f"{s}: " + ",".join(f"{k}={x}" for k, x in b.items()) for s, b in DEFAULT_BOUNDS.items()))
    v.add_argument("--seed", type=int, default=7)
    common(v, needs_n=False)
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("info", help="report diagram metadata")
    i.add_argument("path")
    common(i, needs_n=False)
    i.set_defaults(func=cmd_info)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; the contract reserves 2 for failed checks
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, DiagramError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
