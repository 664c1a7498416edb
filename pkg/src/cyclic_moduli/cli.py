"""Command-line front end: a thin client over the shared handler layer.

Exit codes: 0 success, 1 domain error, 2 parse error.  Every failure prints a
single machine-parseable line ``error: <Kind>: <message>`` on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional

from . import handlers
from .errors import CyclicModuliError, SpecError, SpecSyntaxError


def _dims_str(dims: List[int]) -> str:
    if not dims:
        return "(point)"
    return " x ".join(f"P^{d}" for d in dims)


def _print_analyze(out: Dict):
    print(f"canonical degrees: ({', '.join(map(str, out['canonical_degrees']))})  t={out['twist']}")
    print(f"eta (sheet count): {out['eta']}")
    print(f"nilcone: {_dims_str(out['nilcone_dims'])}")
    print(f"bundle rank: {out['bundle_rank']}")
    print(f"rep dim: {out['rep_dim']}")
    print(f"moduli dim: {out['moduli_dim']}")
    if not out["coprime"]:
        print("warning: node count and total degree are not coprime; strictly "
              "semistable objects may exist")


def _print_fibre(out: Dict):
    print(f"gamma: {out['gamma']}")
    print(f"count: {out['count']}")
    for entry in out["points"]:
        print("; ".join(f"phi{i}={s}" for i, s in enumerate(entry["phis"], start=1)))


def _print_nilcone(out: Dict):
    print(f"nilcone: {_dims_str(out['nilcone_dims'])}  ({out['vanishing_map']} = 0)")


def _print_flow(out: Dict):
    print("; ".join(f"phi{i}={s}" for i, s in enumerate(out["phis"], start=1)))
    print(f"hitchin image: {out['hitchin']}")
    print(f"nilcone: {_dims_str(out['nilcone_dims'])}")


def _print_stable(out: Dict):
    print(f"stable: {'true' if out['stable'] else 'false'}")
    if not out["stable"]:
        w = out["witness"]
        nodes = ", ".join(f"U_{i}" for i in w["nodes"])
        print(f"witness subbundle: {nodes} with slope {w['slope']} >= {w['total_slope']}")


def _poly(entry: Dict) -> str:
    return "[" + ", ".join(entry["coeffs"]) + f"] (degree {entry['degree']})"


def _print_reduce(out: Dict):
    print(f"reduction amounts: {tuple(out['reduction_amounts'])}")
    for i, entry in enumerate(out["odd_maps"]):
        print(f"phi{2 * i + 1}: {_poly(entry)}")
    for i, entry in enumerate(out["even_maps"]):
        print(f"phi{2 * i + 2}: {_poly(entry)}")
    for m in out["multipliers"]:
        print(f"psi_{m['i']}{m['j']}: {_poly(m)}")
    print(f"chart shift: {out['chart_shift']}")
    print(f"hitchin image: {_poly(out['hitchin'])} at lambda^{out['lambda_exponent']}")


def _print_decompose(out: Dict):
    for f in out["factors"]:
        base = f"(1,1) factor ({f['node_degree']}, {f['tail_degree']})"
        adj = f" reduced by {f['reduction']}" if f["reduction"] else ""
        print(base + adj)
    print(f"cover count: {out['cover_count']}")
    print(f"special locus: P^{out['special_locus_dim']}")


def _parse_profile(raw: str) -> List[int]:
    try:
        return [int(part) for part in raw.replace(" ", "").split(",") if part != ""]
    except ValueError:
        raise SpecSyntaxError(f"profile must be comma-separated integers, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclic-moduli",
        description="Exact moduli computations for twisted cyclic quiver "
        "representations on the projective line.",
    )
    parser.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, gamma=False, profile=False, rep=False):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("spec", help="quiver description, e.g. 'cyclic t=4 nodes=(0,-1)'")
        if gamma:
            cmd.add_argument("--gamma", required=True, help="base-point section literal")
        if profile:
            cmd.add_argument("--profile", required=True, help="comma-separated multiplicities")
        if rep:
            cmd.add_argument("--rep", required=True, help="semicolon-separated phi sections")
        # SUPPRESS keeps a pre-subcommand --json from being clobbered by the default
        cmd.add_argument(
            "--json", action="store_true", default=argparse.SUPPRESS,
            help="emit machine-readable JSON",
        )
        return cmd

    add("analyze", "sheet count, nilcone shape, bundle rank and dimensions")
    add("fibre", "enumerate the moduli points over a base point", gamma=True)
    add("count", "count fibre points for a multiplicity profile", profile=True)
    add("nilcone", "describe the fibre over zero")
    add("flow", "limit of a representation into the nilpotent cone", rep=True)
    add("stable", "slope stability of a representation", rep=True)
    add("reduce", "normal form of a (k,1) representation under conjugation", rep=True)
    add("decompose", "product decomposition of a (k,1) moduli space")
    return parser


_RENDERERS = {
    "analyze": _print_analyze,
    "fibre": _print_fibre,
    "count": lambda out: print(f"count: {out['count']}"),
    "nilcone": _print_nilcone,
    "flow": _print_flow,
    "stable": _print_stable,
    "reduce": _print_reduce,
    "decompose": _print_decompose,
}


def _dispatch(args: argparse.Namespace) -> Dict:
    if args.command == "analyze":
        return handlers.analyze(args.spec)
    if args.command == "fibre":
        return handlers.fibre(args.spec, args.gamma)
    if args.command == "count":
        return handlers.count(args.spec, _parse_profile(args.profile))
    if args.command == "nilcone":
        return handlers.nilcone(args.spec)
    if args.command == "flow":
        return handlers.flow(args.spec, args.rep)
    if args.command == "stable":
        return handlers.stable(args.spec, args.rep)
    if args.command == "reduce":
        return handlers.reduce(args.spec, args.rep)
    if args.command == "decompose":
        return handlers.decompose_cmd(args.spec)
    raise AssertionError(f"unhandled command {args.command}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = _dispatch(args)
    except SpecError as exc:
        print(f"error: {type(exc).__name__.removeprefix('Spec')}: {exc}", file=sys.stderr)
        return 2
    except CyclicModuliError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(out, sort_keys=True))
    else:
        _RENDERERS[args.command](out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
