"""JSON instance documents and result serialisation.

Instance schema::

    {
      "description": "optional free text",
      "nodes": 5,
      "supplies": [9, -13, 15, -11, 0],
      "arcs": [{"tail": 2, "head": 1, "capacity": 10, "cost": {...}}, ...],
      "options": {
        "method": "brute" | "groebner",
        "penalty": {"kind": "square" | "absolute", "gammas": {"1": "1/2"}} | null,
        "scale": 1,
        "verify": false,
        "basis_hint": [13, 14, 15, 16]
      }
    }

Nodes, arcs and basis_hint entries are 1-based.  Rationals are ints or
strings such as "77/120".  Cost objects follow ``costfn.parse_cost``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .costfn import cost_to_doc, format_rational, parse_cost, parse_rational
from .errors import CostError, NetworkError, SchemaError
from .network import Network, validate_network
from .pareto import METHODS, ParetoResult
from .penalty import PenaltyConfig, normalize_kind


@dataclass
class Options:
    method: str = "brute"
    penalty: Optional[dict] = None  # {"kind": str, "gammas": {k: Fraction}} with 1-based k
    scale: int = 1
    verify: bool = False
    basis_hint: Optional[list[int]] = None  # 1-based
    description: str = ""
    extra: dict = field(default_factory=dict)

    def penalty_config(self, m: int) -> Optional[PenaltyConfig]:
        if self.penalty is None:
            return None
        return PenaltyConfig.build(m, self.penalty.get("kind", "square"), self.penalty.get("gammas"))


def _int(value, path, minimum=None):
    if not isinstance(value, int) or isinstance(value, bool):
        raise SchemaError(f"expected an integer, got {value!r}", path)
    if minimum is not None and value < minimum:
        raise SchemaError(f"must be >= {minimum}, got {value}", path)
    return value


def parse_instance_doc(doc) -> tuple[Network, Options]:
    if not isinstance(doc, dict):
        raise SchemaError("instance must be a JSON object")
    for key in ("nodes", "supplies", "arcs"):
        if key not in doc:
            raise SchemaError(f"missing required key {key!r}")
    nodes = _int(doc["nodes"], "$.nodes", minimum=1)
    if not isinstance(doc["supplies"], list):
        raise SchemaError("expected a list", "$.supplies")
    supplies = [_int(b, f"$.supplies[{k}]") for k, b in enumerate(doc["supplies"])]
    if not isinstance(doc["arcs"], list):
        raise SchemaError("expected a list", "$.arcs")
    arcs, caps, costs = [], [], []
    for k, arc in enumerate(doc["arcs"]):
        path = f"$.arcs[{k}]"
        if not isinstance(arc, dict):
            raise SchemaError("arc must be an object", path)
        for key in ("tail", "head", "capacity", "cost"):
            if key not in arc:
                raise SchemaError(f"missing required key {key!r}", path)
        if arc.get("lower", 0) != 0:
            raise SchemaError("nonzero lower bounds are not supported", path + ".lower")
        arcs.append((_int(arc["tail"], path + ".tail"), _int(arc["head"], path + ".head")))
        caps.append(_int(arc["capacity"], path + ".capacity", minimum=0))
        try:
            costs.append(parse_cost(arc["cost"], path + ".cost"))
        except CostError as exc:
            raise SchemaError(str(exc), path + ".cost") from exc
    net = Network(nodes, tuple(arcs), tuple(supplies), tuple(caps), tuple(costs))
    try:
        validate_network(net)
    except (NetworkError, CostError) as exc:
        raise SchemaError(f"{type(exc).__name__}: {exc}", "$") from exc
    return net, _parse_options(doc.get("options", {}) or {}, len(arcs), doc.get("description", ""))


def _parse_options(opts, n, description) -> Options:
    if not isinstance(opts, dict):
        raise SchemaError("expected an object", "$.options")
    out = Options(description=description if isinstance(description, str) else "")
    method = opts.get("method", "brute")
    if method not in METHODS:
        raise SchemaError(f"method must be one of {METHODS}", "$.options.method")
    out.method = method
    out.scale = _int(opts.get("scale", 1), "$.options.scale", minimum=1)
    verify = opts.get("verify", False)
    if not isinstance(verify, bool):
        raise SchemaError("expected a boolean", "$.options.verify")
    out.verify = verify
    hint = opts.get("basis_hint")
    if hint is not None:
        if not isinstance(hint, list):
            raise SchemaError("expected a list of arc numbers", "$.options.basis_hint")
        out.basis_hint = [_int(j, f"$.options.basis_hint[{k}]", minimum=1) for k, j in enumerate(hint)]
        if any(j > n for j in out.basis_hint):
            raise SchemaError(f"arc number out of range 1..{n}", "$.options.basis_hint")
    pen = opts.get("penalty")
    if pen is not None:
        if not isinstance(pen, dict):
            raise SchemaError("expected an object or null", "$.options.penalty")
        try:
            kind = normalize_kind(pen.get("kind", "square"))
        except ValueError as exc:
            raise SchemaError(str(exc), "$.options.penalty.kind") from exc
        gammas = {}
        for k, g in (pen.get("gammas") or {}).items():
            path = f"$.options.penalty.gammas.{k}"
            try:
                idx = int(k)
                val = parse_rational(g)
            except (ValueError, CostError) as exc:
                raise SchemaError(str(exc), path) from exc
            if val <= 0:
                raise SchemaError("penalty parameters must be positive", path)
            gammas[idx] = val
        out.penalty = {"kind": kind, "gammas": gammas}
    return out


def parse_instance(data) -> tuple[Network, Options]:
    """Parse UTF-8 JSON bytes (or str) into a validated network and options."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SchemaError(f"input is not UTF-8: {exc}") from exc
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return parse_instance_doc(doc)


def instance_to_doc(net: Network, options: Optional[Options] = None) -> dict:
    doc = {
        "nodes": net.node_count,
        "supplies": list(net.supplies),
        "arcs": [
            {"tail": t, "head": h, "capacity": u, "cost": cost_to_doc(f)}
            for (t, h), u, f in zip(net.arcs, net.capacities, net.costs)
        ],
    }
    if options is not None:
        if options.description:
            doc["description"] = options.description
        opts = {"method": options.method, "scale": options.scale, "verify": options.verify}
        if options.basis_hint is not None:
            opts["basis_hint"] = list(options.basis_hint)
        if options.penalty is not None:
            opts["penalty"] = {
                "kind": options.penalty["kind"],
                "gammas": {str(k): format_rational(g) for k, g in sorted(options.penalty["gammas"].items())},
            }
        else:
            opts["penalty"] = None
        doc["options"] = opts
    return doc


def dumps_canonical(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _num(v) -> str:
    if isinstance(v, float):
        return "inf" if v > 0 else "-inf"
    return format_rational(v)


def result_to_doc(result: ParetoResult, trace: bool = False, scale: int = 1) -> dict:
    td = result.transform
    doc = {
        "status": result.status,
        "method": result.method,
        "penalized": result.penalized,
        "basis_arcs": [j + 1 for j in td.basis_cols] if td else [],
        "D": [list(s) for s in result.D.sets] if result.D is not None else [],
        "F_size": len(result.F) if result.F is not None else 0,
    }
    pts = sorted(zip(result.x_points, result.z_points, result.per_player_costs))
    caps = result.problem.capacities if result.problem is not None else None
    doc["points"] = [
        {"x": list(x), "z": list(z), "costs": [_num(c) for c in costs],
         "within_bounds": caps is None or all(0 <= v <= u for v, u in zip(x, caps))}
        for x, z, costs in pts
    ]
    if scale != 1:
        doc["scale"] = scale
        for p in doc["points"]:
            p["x_real"] = [format_rational(Fraction(v, scale)) for v in p["x"]]
    if trace:
        doc["order"] = [td.perm[i] + 1 for i in result.order]
        doc["trace"] = [
            {
                "arc": step.arc + 1,
                "image": list(step.image),
                "argmin": list(step.argmin),
                "optimal_cost": _num(step.optimal_cost),
                "remaining": step.size,
            }
            for step in result.trace
        ]
    return doc


def _matrix_lines(M) -> list[str]:
    width = max((len(str(v)) for row in M for v in row), default=1)
    return ["  [" + " ".join(str(v).rjust(width) for v in row) + "]" for row in M]


def text_report(result: ParetoResult, trace: bool = False, scale: int = 1) -> str:
    """Human-readable report: incidence matrix, D, F, Pareto points."""
    lines = []
    td = result.transform
    if result.incidence is not None:
        lines.append("Augmented node-arc incidence matrix:")
        lines += _matrix_lines(result.incidence.A_aug)
        lines.append(f"Resource vector b: {list(result.incidence.b)}")
        lines.append("")
    if td is not None:
        lines.append(f"Unimodular basis (arcs): {[j + 1 for j in td.basis_cols]}")
        lines.append(f"d = {list(td.d)}")
        lines.append("")
    if result.D is not None:
        lines.append("Decoupled minimiser sets:")
        for k, f in enumerate(result.D.factors, 1):
            lines.append(f"  D{k} (arc {f.player + 1}): {{{', '.join(map(str, f.values))}}}")
        lines.append(f"  |D| = {len(result.D)}")
        lines.append("")
    if result.F is not None:
        label = "D (penalised)" if result.penalized else "F"
        lines.append(f"{label}: {len(result.F)} point(s)")
        for z in result.F:
            lines.append("  (" + ", ".join(map(str, z)) + ")")
        lines.append("")
    if result.empty:
        lines.append("F is empty: no flow satisfies the bounds with every decoupled player at its"
                     " optimum. Re-run with --penalty.")
        return "\n".join(lines) + "\n"
    if trace:
        lines.append("Restriction trace:")
        for step in result.trace:
            lines.append(f"  arc {step.arc + 1}: X={list(step.image)} X*={list(step.argmin)} "
                         f"cost={_num(step.optimal_cost)} |F*|={step.size}")
        lines.append("")
    if result.penalized:
        lines.append("Penalised solutions (original arc order):")
    else:
        lines.append("Efficient Pareto optimal flows (original arc order):")
    caps = result.problem.capacities if result.problem is not None else None
    for x, z in sorted(zip(result.x_points, result.z_points)):
        note = ""
        if caps is not None and any(not 0 <= v <= u for v, u in zip(x, caps)):
            note = "  [outside capacity bounds]"
        lines.append("  x = (" + ", ".join(map(str, x)) + ")" + note)
        if scale != 1:
            lines.append("      x/alpha = (" + ", ".join(format_rational(Fraction(v, scale)) for v in x) + ")")
    return "\n".join(lines) + "\n"
