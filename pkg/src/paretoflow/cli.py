"""Command line entry point: ``paretoflow INSTANCE.json [options]``.

Exit codes: 0 success, 1 error, 2 empty feasible set without --penalty.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .costfn import parse_rational
from .errors import CostError, ParetoFlowError
from .io import Options, dumps_canonical, parse_instance, result_to_doc, text_report
from .network import scale_network
from .oracle import DEFAULT_CAP, verify_points
from .pareto import METHODS, solve
from .penalty import PenaltyConfig, normalize_kind, solve_penalized

EXIT_OK, EXIT_ERROR, EXIT_EMPTY = 0, 1, 2

log = logging.getLogger("paretoflow")


def _gamma(text: str):
    try:
        k, v = text.split("=", 1)
        return int(k), parse_rational(v.strip())
    except (ValueError, CostError) as exc:
        raise argparse.ArgumentTypeError(f"expected K=VALUE with integer K, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="paretoflow",
        description="Efficient Pareto optimal flows of a multi-player integer network problem.",
    )
    p.add_argument("input", help="instance JSON file ('-' reads stdin)")
    p.add_argument("--method", choices=METHODS, default=None,
                   help="how to compute F: exhaustive filter of D or Groebner basis (default: brute)")
    p.add_argument("--penalty", action="store_true",
                   help="use the penalised formulation (needed when F is empty)")
    p.add_argument("--penalty-kind", default=None,
                   help="square (alias exact_penalty) or absolute (alias power_barrier)")
    p.add_argument("--gamma", action="append", type=_gamma, default=[], metavar="K=VALUE",
                   help="penalty weight of basic player K (1-based, in basis order); repeatable")
    p.add_argument("--scale", type=int, default=None, metavar="N",
                   help="multiply supplies and capacities by N and rescale costs")
    p.add_argument("--verify", action="store_true", help="check outputs with the brute-force oracles")
    p.add_argument("--trace", action="store_true", help="include the restriction trace")
    p.add_argument("--output", choices=("json", "text"), default="text")
    p.add_argument("--basis", default=None, metavar="J1,J2,...",
                   help="pin the basis to these 1-based arcs (overrides basis_hint)")
    p.add_argument("-v", "--verbose", action="count", default=0)
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


def _merge(opts: Options, args) -> Options:
    if args.method:
        opts.method = args.method
    if args.scale is not None:
        if args.scale < 1:
            raise ParetoFlowError("--scale must be a positive integer")
        opts.scale = args.scale
    if args.verify:
        opts.verify = True
    if args.basis:
        opts.basis_hint = [int(j) for j in args.basis.split(",")]
    if args.penalty or args.penalty_kind or args.gamma:
        pen = dict(opts.penalty or {"kind": "square", "gammas": {}})
        if args.penalty_kind:
            pen["kind"] = normalize_kind(args.penalty_kind)
        gammas = dict(pen.get("gammas") or {})
        gammas.update(dict(args.gamma))
        pen["gammas"] = gammas
        opts.penalty = pen
    return opts


def _verify_doc(result, out):
    reports = verify_points(result.problem, result.transform, result.x_points, cap=DEFAULT_CAP)
    docs = []
    for rep in reports:
        docs.append({
            "x": list(rep.x),
            "pareto": rep.pareto,
            "pareto_witness": list(rep.pareto_witness) if rep.pareto_witness else None,
            "nash": rep.nash,
            "nash_witness": list(rep.nash_witness) if rep.nash_witness else None,
            "optimal_players": None if rep.optimal_players is None
            else sorted(i + 1 for i in rep.optimal_players),
            "maximal": rep.maximal,
        })
    out["verification"] = docs
    return all(r.nash and r.pareto is not False for r in reports)


def _verify_text(doc) -> str:
    lines = ["Verification (brute force over P):"]
    for v in doc["verification"]:
        def yn(flag):
            return "skipped" if flag is None else ("yes" if flag else "NO")
        lines.append(f"  x = ({', '.join(map(str, v['x']))}): pareto={yn(v['pareto'])} "
                     f"nash={yn(v['nash'])} maximal={yn(v['maximal'])}")
        if v["optimal_players"] is not None:
            lines.append(f"      players at their global minimum: {v['optimal_players']}")
    return "\n".join(lines) + "\n"


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s", stream=stderr)
    try:
        data = sys.stdin.buffer.read() if args.input == "-" else Path(args.input).read_bytes()
        net, opts = parse_instance(data)
        opts = _merge(opts, args)
        if opts.scale != 1:
            net = scale_network(net, opts.scale)
        basis = [j - 1 for j in opts.basis_hint] if opts.basis_hint else None
        if opts.penalty is not None:
            config = PenaltyConfig.build(net.m, opts.penalty["kind"],
                                         opts.penalty["gammas"])
            result = solve_penalized(net, config, basis_cols=basis)
        else:
            result = solve(net, method=opts.method, basis_cols=basis)
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=stderr)
        return EXIT_ERROR
    except (ParetoFlowError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_ERROR

    doc = result_to_doc(result, trace=args.trace, scale=opts.scale)
    verified = True
    if opts.verify and not result.empty:
        verified = _verify_doc(result, doc)

    if args.output == "json":
        stdout.write(dumps_canonical(doc))
    else:
        stdout.write(text_report(result, trace=args.trace, scale=opts.scale))
        if "verification" in doc:
            stdout.write(_verify_text(doc))

    if result.empty:
        print("error: F is empty; re-run with --penalty to solve the penalised problem", file=stderr)
        return EXIT_EMPTY
    if not verified:
        print("error: verification failed", file=stderr)
        return EXIT_ERROR
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
