"""Command-line front end: shear-file ingestion and subcommand dispatch.

Input shear functions are JSON files

    {"edges": [{"p": [num, den], "q": [num, den], "value": 0.25}, ...]}

with oo written as [1, 0].  Every edge must satisfy the Farey determinant
condition and appear at most once; violations are reported with the entry
index and offending field.  Numeric output is CSV with a header row or a
JSON envelope {"meta": ..., "data": ...}; floats are printed with 17
significant digits so reruns are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .farey import ExtRational, FareyEdge, enumerate_vertices, farey_order, oriented_edge
from .fields import (ShearFunction, assemble_field, sum_field_eval,
                     tail_bound, zygmund_condition_sup)
from .fourier import FourierCoefficient, field_fourier
from .hilbert import (PVOracleConfig, hilbert_pv_oracle, hilbert_series_eval,
                      hilbert_shear_series)
from .torus import TangentShear, wp_gram, wp_pairing
from . import __version__ as VERSION


class CliError(Exception):
    def __init__(self, message: str, field_name: str = "", code: int = 2):
        super().__init__(message)
        self.field_name = field_name
        self.code = code


@dataclass
class RunConfig:
    subcommand: list
    input_path: str | None = None
    max_order: int = 6
    window: int = 20
    depth: int = 6
    tolerance: float = 1e-8
    out_format: str = "csv"
    output: str | None = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.max_order < 1:
            raise CliError("max-order must be >= 1", "max-order")
        if self.window < 0:
            raise CliError("window must be >= 0", "window")
        if self.tolerance <= 0:
            raise CliError("tolerance must be positive", "tolerance")


def fmt(x: float) -> str:
    return f"{float(x):.17g}"


def parse_shear_file(path: str) -> ShearFunction:
    """Load and validate a shear JSON file."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise CliError(f"no such file: {path}", "input")
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed JSON in {path}: {exc}", "input")
    if not isinstance(doc, dict) or "edges" not in doc:
        raise CliError("shear file must be an object with an 'edges' list",
                       "edges")
    sdot = ShearFunction()
    seen = set()
    for idx, entry in enumerate(doc["edges"]):
        where = f"edges[{idx}]"
        for key in ("p", "q", "value"):
            if key not in entry:
                raise CliError(f"{where} is missing '{key}'", f"{where}.{key}")
        try:
            p = ExtRational(*entry["p"])
            q = ExtRational(*entry["q"])
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise CliError(f"{where}: bad endpoint ({exc})", where)
        try:
            edge = oriented_edge(p, q)
        except ValueError as exc:
            raise CliError(f"{where}: {exc}", where)
        key = edge.unordered()
        if key in seen:
            raise CliError(f"{where}: duplicate edge {p}, {q}", where)
        seen.add(key)
        try:
            value = float(entry["value"])
        except (TypeError, ValueError):
            raise CliError(f"{where}: value is not a number",
                           f"{where}.value")
        sdot.set(edge, value)
    return sdot


def _parse_edge_arg(text: str) -> FareyEdge:
    try:
        nums = [int(v) for v in text.split(",")]
        if len(nums) != 4:
            raise ValueError("need four integers")
        return oriented_edge(ExtRational(nums[0], nums[1]),
                             ExtRational(nums[2], nums[3]))
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"bad edge '{text}': {exc}", "edge")


def _parse_triple(text: str, name: str) -> TangentShear:
    try:
        vals = [float(v) for v in text.split(",")]
        if len(vals) != 3:
            raise ValueError("need three numbers")
        return TangentShear(*vals)
    except ValueError as exc:
        raise CliError(f"bad {name} '{text}': {exc}", name)


def _grid(args) -> list[float]:
    lo, hi, n = args.grid_from, args.grid_to, args.samples
    if not (hi > lo) or n < 1:
        raise CliError("need --to > --from and --samples >= 1", "grid")
    if n == 1:
        return [lo]
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]


def _emit(cfg_format: str, output, header, rows, meta):
    """Write CSV (header + rows) or a JSON envelope; deterministic bytes."""
    if cfg_format == "csv":
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(fmt(v) if isinstance(v, float) else str(v)
                                  for v in row))
        text = "\n".join(lines) + "\n"
    else:
        data = [dict(zip(header, row)) for row in rows]
        text = json.dumps({"meta": meta, "data": data},
                          sort_keys=True, separators=(",", ":"),
                          default=lambda v: float(v)) + "\n"
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _meta(**kw):
    base = {"version": VERSION}
    base.update(kw)
    return base


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_farey(args) -> int:
    if args.action == "vertices":
        verts = enumerate_vertices(args.max_order)
        rows = [(str(v), v.num, v.den, farey_order(v)) for v in verts]
        _emit(args.format, args.output,
              ["vertex", "num", "den", "order"], rows,
              _meta(max_order=args.max_order))
        return 0
    # edges: every tessellation edge with both endpoints of order <= max_order
    from .farey import enumerate_edges
    edges = enumerate_edges(args.max_order)
    if args.format == "json":
        # an edge serializes as the flat array [p_num, p_den, q_num, q_den]
        doc = {"meta": _meta(max_order=args.max_order),
               "data": [e.to_json() for e in edges]}
        text = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    rows = [tuple(e.to_json()) for e in edges]
    _emit(args.format, args.output,
          ["p_num", "p_den", "q_num", "q_den"], rows,
          _meta(max_order=args.max_order))
    return 0


def cmd_field(args) -> int:
    sdot = parse_shear_file(args.shears)
    rows = []
    bound = tail_bound(args.max_order + 1, 1.0)
    for x in _grid(args):
        v = sum_field_eval(sdot, args.max_order, args.window, x)
        rows.append((float(x), float(v)))
    _emit(args.format, args.output, ["x", "value"], rows,
          _meta(max_order=args.max_order, window=args.window,
                unit_tail_bound=bound))
    return 0


def cmd_zygmund(args) -> int:
    sdot = parse_shear_file(args.shears)
    report = zygmund_condition_sup(sdot, sdot.support_tips(), args.window)
    witness = None
    if report.witness is not None:
        tip, m, k = report.witness
        witness = {"tip": [tip.num, tip.den], "m": m, "k": k}
    _emit("json", args.output, ["sup", "witness"],
          [(report.sup_value, witness)],
          _meta(window=args.window))
    return 0


def cmd_hilbert(args) -> int:
    sdot = parse_shear_file(args.shears)
    if args.action == "eval":
        rows = []
        if args.mode == "oracle":
            V = assemble_field(sdot, args.max_order, args.window)
            cfg = PVOracleConfig(tolerance=args.tolerance)
            for x in _grid(args):
                rows.append((float(x), hilbert_pv_oracle(V, x, cfg)))
        else:   # closed forms; "series" reports the same truncated double sum
            for x in _grid(args):
                rows.append((float(x),
                             hilbert_series_eval(sdot, args.max_order,
                                                 args.window, x)))
        _emit(args.format, args.output, ["x", "value"], rows,
              _meta(mode=args.mode, max_order=args.max_order,
                    window=args.window))
        return 0
    # shear: recovered transform shear on one edge, with partials per order
    edge = _parse_edge_arg(args.edge)
    partials = [hilbert_shear_series(sdot, edge, k, args.window)
                for k in range(1, args.max_order + 1)]
    value = partials[-1]
    doc = {"meta": _meta(max_order=args.max_order, window=args.window,
                         unit_tail_bound=tail_bound(args.max_order + 1, 1.0)),
           "data": {"edge": edge.to_json(), "value": value,
                    "partials_by_order": partials}}
    text = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_fourier(args) -> int:
    sdot = parse_shear_file(args.shears)
    lo, hi = args.n_min, args.n_max
    if hi < lo:
        raise CliError("need --n-max >= --n-min", "n")
    rows = []
    for n in range(lo, hi + 1):
        c = FourierCoefficient(n, field_fourier(sdot, args.max_order,
                                                args.window, n))
        rows.append((c.n, c.value.real, c.value.imag))
    low_mass = sum(abs(v) for e, v in sdot
                   if min(farey_order(e.initial), farey_order(e.terminal)) <= 2)
    total_mass = sum(abs(v) for _, v in sdot) or 1.0
    _emit(args.format, args.output, ["n", "re", "im"], rows,
          _meta(max_order=args.max_order, window=args.window,
                low_order_shear_fraction=low_mass / total_mass))
    return 0


def cmd_wp(args) -> int:
    if args.depth < 1:
        raise CliError("depth must be >= 1", "depth")
    if args.action == "pair":
        t1 = _parse_triple(args.t1, "t1")
        t2 = _parse_triple(args.t2, "t2")
        from .torus import cusp_condition_check
        for name, t in (("t1", t1), ("t2", t2)):
            if not cusp_condition_check(t):
                raise CliError(f"{name} violates the cusp condition "
                               f"(components must sum to 0)", name)
        value = wp_pairing(t1, t2, args.depth)
        prev = wp_pairing(t1, t2, args.depth - 1) if args.depth > 1 else None
        doc = {"meta": _meta(depth=args.depth),
               "data": {"t1": list(t1.values), "t2": list(t2.values),
                        "value": value, "value_prev_depth": prev}}
    else:
        gram = wp_gram(args.depth)
        prev = wp_gram(args.depth - 1) if args.depth > 1 else None
        doc = {"meta": _meta(depth=args.depth),
               "data": {**gram,
                        "depth_prev_gram": prev["gram"] if prev else None}}
    text = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_common(p, shears=True, grid=False):
    if shears:
        p.add_argument("--shears", required=True,
                       help="shear JSON file (see module docstring)")
    p.add_argument("--max-order", type=int, default=6, dest="max_order",
                   help="largest Farey order of fan tips in truncated sums")
    p.add_argument("--window", type=int, default=20,
                   help="fan index window |n| <= window")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--output", default=None, help="output path (default stdout)")
    p.add_argument("--tolerance", type=float, default=1e-8)
    if grid:
        p.add_argument("--from", type=float, default=-3.0, dest="grid_from")
        p.add_argument("--to", type=float, default=3.0, dest="grid_to")
        p.add_argument("--samples", type=int, default=61)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="shearfield",
        description="Shear functions on the Farey tessellation: field "
                    "evaluation, Hilbert transform, Fourier coefficients, "
                    "Weil-Petersson pairing.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("farey", help="tessellation combinatorics")
    p.add_argument("action", choices=["vertices", "edges"])
    _add_common(p, shears=False)
    p.set_defaults(func=cmd_farey)

    p = sub.add_parser("field", help="evaluate the vector field of a shear file")
    p.add_argument("action", choices=["eval"])
    _add_common(p, grid=True)
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("zygmund", help="admissibility condition checker")
    p.add_argument("action", choices=["check"])
    _add_common(p)
    p.set_defaults(func=cmd_zygmund)

    p = sub.add_parser("hilbert", help="Hilbert transform of the field")
    p.add_argument("action", choices=["eval", "shear"])
    _add_common(p, grid=True)
    p.add_argument("--mode", choices=["closed", "series", "oracle"],
                   default="closed")
    p.add_argument("--edge", default="0,1,1,0",
                   help="target edge as p_num,p_den,q_num,q_den")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("fourier", help="Fourier coefficients of the field")
    _add_common(p)
    p.add_argument("--n-min", type=int, default=0, dest="n_min")
    p.add_argument("--n-max", type=int, default=10, dest="n_max")
    p.set_defaults(func=cmd_fourier)

    p = sub.add_parser("wp", help="Weil-Petersson pairing on the punctured torus")
    p.add_argument("action", choices=["pair", "gram"])
    p.add_argument("--t1", default="1,-1,0")
    p.add_argument("--t2", default="0,1,-1")
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_wp)

    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        # central validation of the shared numeric knobs
        RunConfig(subcommand=[args.command, getattr(args, "action", "")],
                  input_path=getattr(args, "shears", None),
                  max_order=getattr(args, "max_order", 6),
                  window=getattr(args, "window", 20),
                  depth=getattr(args, "depth", 6),
                  tolerance=getattr(args, "tolerance", 1e-8),
                  out_format=getattr(args, "format", "csv"),
                  output=args.output)
        return args.func(args)
    except CliError as exc:
        diag = {"error": str(exc), "field": exc.field_name}
        sys.stderr.write(json.dumps(diag, sort_keys=True) + "\n")
        return exc.code
    except (ValueError, OSError, RuntimeError) as exc:
        diag = {"error": str(exc), "field": ""}
        sys.stderr.write(json.dumps(diag, sort_keys=True) + "\n")
        return 1


def main() -> None:
    sys.exit(run())
