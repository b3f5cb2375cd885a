"""Command-line interface: path catalogs, invariants, surgery classification,
and the verification sweeps.

Exit codes: 0 success, 1 usage error, 2 domain-constraint violation,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict

from .classify import (
    SurgeryKind,
    reducible_surgeries,
    satellite_candidates,
    surgery_knot,
    torus_knot_surgeries,
)
from .farey import DomainError, Rational, from_partial_quotients
from .invariants import SurfaceData, Weights, assemble
from .oracle import SweepSpec, run_all
from .paths import Regime, catalog_with_exclusions, path_edges

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_MISMATCH = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2; the contract is 1
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _surface_payload(data: SurfaceData) -> dict:
    return {
        "alpha": data.alpha,
        "beta": data.beta,
        "raw_slope1": list(data.raw_slope1),
        "raw_slope2": list(data.raw_slope2),
        "slope1_pair": list(data.slope1_pair),
        "slope2_pair": list(data.slope2_pair),
        "slope1": None if data.slope1 is None else str(data.slope1),
        "slope2": None if data.slope2 is None else str(data.slope2),
        "chi": data.chi,
        "b1": data.b1,
        "b2": data.b2,
        "gprime": str(data.gprime),
        "meridional_boundary": data.meridional_boundary,
    }


def make_record(command: str, inputs: dict, result) -> dict:
    return {"schema_version": 1, "command": command, "input": inputs,
            "result": result}


def _flatten(prefix: str, value, out: dict) -> None:
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], out)
    elif isinstance(value, list):
        out[prefix] = json.dumps(value)
    else:
        out[prefix] = value


def emit(record: dict, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "json":
        json.dump(record, stream, indent=2, sort_keys=True)
        stream.write("\n")
    elif fmt == "csv":
        flat: dict = {}
        _flatten("", record, flat)
        writer = csv.writer(stream)
        writer.writerow(flat.keys())
        writer.writerow(flat.values())
    else:
        _emit_table(record, stream)


def _emit_table(record: dict, stream) -> None:
    stream.write(f"# {record['command']}  "
                 f"{json.dumps(record['input'], sort_keys=True)}\n")
    result = record["result"]
    rows = result if isinstance(result, list) else [result]
    for row in rows:
        if isinstance(row, dict):
            width = max((len(k) for k in row), default=0)
            for k in sorted(row):
                stream.write(f"  {k:<{width}}  {row[k]}\n")
        else:
            stream.write(f"  {row}\n")
        stream.write("\n")


def _resolve_params(args) -> tuple[int, int]:
    if args.r is not None or args.s is not None:
        if args.r is None or args.s is None or args.w is not None or args.u is not None:
            raise DomainError("give either --r and --s, or --w and --u")
        return (args.r - 1) // 2 if args.r % 2 else _bad_r(args.r), (args.s - 1) // 2
    if args.w is None or args.u is None:
        raise DomainError("give either --r and --s, or --w and --u")
    return args.w, args.u


def _bad_r(r):
    raise DomainError(f"r must be odd, got {r}")


def _add_params(parser) -> None:
    parser.add_argument("--r", type=int, help="odd integer >= 3")
    parser.add_argument("--s", type=int, help="odd integer, |s| >= 3")
    parser.add_argument("--w", type=int, help="r = 2w+1")
    parser.add_argument("--u", type=int, help="s = 2u+1")
    parser.add_argument("--format", choices=("table", "json", "csv"),
                        default="table")


def cmd_paths(args) -> int:
    w, u = _resolve_params(args)
    r, s = 2 * w + 1, 2 * u + 1
    result = []
    for regime in (Regime.D1, Regime.DINF, Regime.DT):
        included, excluded = catalog_with_exclusions(r, s, regime)
        for name in included:
            path = path_edges(name, w, u)
            result.append({"regime": regime.value, "name": name,
                           "edges": len(path), "labels": path.labels(),
                           "excluded": False})
        for name in excluded:
            result.append({"regime": regime.value, "name": name,
                           "excluded": True,
                           "reason": "not minimal at these parameters"})
    record = make_record("paths", {"r": r, "s": s}, result)
    emit(record, args.format)
    return EXIT_OK


def cmd_invariants(args) -> int:
    w, u = _resolve_params(args)
    path = path_edges(args.family, w, u)
    weights = Weights(args.alpha, args.beta, args.n)
    data = assemble(path, weights)
    record = make_record(
        "invariants",
        {"r": 2 * w + 1, "s": 2 * u + 1, "family": args.family,
         "alpha": args.alpha, "beta": args.beta, "n": args.n},
        _surface_payload(data),
    )
    emit(record, args.format)
    return EXIT_OK


def _classification_payload(c) -> dict:
    out = {"kind": c.kind.value, "mirror": c.mirror}
    for key in ("gamma", "lens", "cable_of_core", "cable_of_exterior",
                "torus_pair", "companion", "cable_pair"):
        value = getattr(c, key)
        if value is not None:
            out[key] = list(value) if isinstance(value, tuple) else value
    if c.note:
        out["note"] = c.note
    return out


def cmd_classify(args) -> int:
    w, u = _resolve_params(args)
    r, s = 2 * w + 1, 2 * u + 1
    inputs = {"r": r, "s": s, "gamma": args.gamma}
    if args.gamma is None:
        result = {
            "reducible_pairs": [list(p) for p in reducible_surgeries(w, u)],
            "note": "pairs are unordered; the mirror image realizes the "
                    "negated pairs",
        }
    else:
        fraction = from_partial_quotients([r, s])
        knot = surgery_knot(w, u, args.gamma)
        satellite = satellite_candidates(fraction, args.gamma)
        torus_rows = [
            {"gamma": row.gamma, "pair": list(row.pair), "mirror": row.mirror,
             "family": row.family, **({"note": row.note} if row.note else {})}
            for row in torus_knot_surgeries(fraction)
        ]
        result = {
            "surgery_knot": _classification_payload(knot),
            "satellite": asdict(satellite),
            "torus_knot_surgeries": torus_rows,
        }
    emit(make_record("classify", inputs, result), args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = SweepSpec(
        w_values=tuple(range(1, args.max_w + 1)),
        u_values=tuple(range(1, args.max_w + 1))
        + tuple(range(-args.max_w - 1, -1)),
        alpha_max=args.alpha_max,
        families=tuple(args.families) if args.families else
        SweepSpec.__dataclass_fields__["families"].default,
    )
    reports = run_all(spec)
    ok = all(rep.ok for rep in reports)
    result = [json.loads(rep.to_json()) for rep in reports]
    emit(make_record("verify",
                     {"alpha_max": spec.alpha_max,
                      "families": list(spec.families)},
                     result), args.format)
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twobridge",
                     description="Essential-surface invariants and Dehn "
                                 "surgery classification for 2-bridge links "
                                 "L([r,s]).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("paths", parents=[], help="list the minimal edge-paths")
    _add_params(p)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("invariants", help="invariants of one carried surface")
    _add_params(p)
    p.add_argument("--family", required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("classify", help="reducible pairs / single-surgery knot")
    _add_params(p)
    p.add_argument("--gamma", type=int, default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the brute-force verification sweeps")
    p.add_argument("--alpha-max", type=int, default=64)
    p.add_argument("--max-w", type=int, default=6)
    p.add_argument("--families", nargs="*", default=None)
    p.add_argument("--format", choices=("table", "json", "csv"),
                   default="table")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
