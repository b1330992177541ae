"""Command-line front end.

    circix gen circular-clique 5 2 --out c5.json
    circix params c5.json
    circix construct g.json --q 2 --out code.json
    circix verify g.json code.json
    circix decode-demo g.json code.json --seed 0
    circix oracle confusion g.json --t 1 --q 2
    circix oracle exhaustive g.json --q 2
    circix report g.json --q 2
    circix ng g.json --q 2
    circix suite --max-n 5 --q 2 --seed 0 --out suite_out
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import graphs as gr
from .confusion_oracle import MAX_VERTICES, ConfusionGraph, beta_lower_bound, max_clique_confusion
from .construction import build_code, certified_code
from .graph_params import (
    CircularColoring, chromatic_number, circular_chromatic_number, circular_clique_number,
    clique_number, is_circular_perfect, is_perfect,
)
from .graphs import SideInfoGraph, complement, format_rational
from .index_codes import LinearIndexCode, decode, encode, is_valid, violations
from .limits import LimitExceeded, check_limit
from .ng_bounds import good_code, product_bound_report, sum_bound_report, tensor_rank_check
from .search_oracle import beta_scalar_exhaustive, sandwich_report
from .suite import SuiteConfig, run_suite, summary, to_csv


class InputError(Exception):
    pass


FAMILIES = {
    # name: (constructor, parameter types)
    "circular-clique": (gr.circular_clique, (int, int)),
    "web": (gr.web, (int, int)),
    "cycle": (gr.cycle, (int,)),
    "path": (gr.path, (int,)),
    "complete": (gr.complete, (int,)),
    "edgeless": (gr.edgeless, (int,)),
    "join-at-vertex": (lambda n: gr.join_at_vertex(gr.complete(n), gr.edgeless(n)), (int,)),
    "neighbouring-side-info": (gr.symmetric_neighbouring_side_info, (int, int)),
    "neighbouring-interference": (gr.symmetric_neighbouring_interference, (int, int)),
    "interlacing": (gr.interlacing_graph, (int, int, int)),
    "random": (gr.random_graph, (int, float)),
}


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"{path}: file not found")
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON ({e})")


def _load(path: str, parser, what: str):
    obj = _load_json(path)
    try:
        return parser(obj)
    except (ValueError, TypeError, KeyError) as e:
        raise InputError(f"{path}: bad {what}: {e}")


def load_graph(path: str) -> SideInfoGraph:
    return _load(path, SideInfoGraph.from_json, "graph")


def load_code(path: str) -> LinearIndexCode:
    return _load(path, LinearIndexCode.from_json, "code")


def load_coloring(path: str) -> CircularColoring:
    return _load(path, CircularColoring.from_json, "coloring")


def emit(obj, out: str | None = None) -> None:
    text = obj if isinstance(obj, str) else json.dumps(obj, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _fmt_bound(b) -> str:
    return format_rational(b) if hasattr(b, "numerator") else f"{b:.6f}"


# --- commands -------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.family not in FAMILIES:
        raise InputError(f"unknown family '{args.family}'; choose from {', '.join(FAMILIES)}")
    fn, types = FAMILIES[args.family]
    if len(args.params) != len(types):
        raise InputError(f"family '{args.family}' takes {len(types)} parameter(s), got {len(args.params)}")
    try:
        values = [tp(p) for tp, p in zip(types, args.params)]
    except ValueError as e:
        raise InputError(f"bad parameter: {e}")
    G = fn(*values, seed=args.seed) if args.family == "random" else fn(*values)
    if args.format == "dot":
        emit(G.to_dot(), args.out)
    else:
        emit(G.to_json(), args.out)
    return 0


def cmd_params(args) -> int:
    G = load_graph(args.graph)
    gr.require_undirected(G)
    chi_c, coloring = circular_chromatic_number(G)
    emit({
        "omega": clique_number(G),
        "chi": chromatic_number(G),
        "omega_c": format_rational(circular_clique_number(G)),
        "chi_c": format_rational(chi_c),
        "coloring": coloring.to_json(),
        "circular_perfect": is_circular_perfect(G),
        "perfect": is_perfect(G),
    }, args.out)
    return 0


def cmd_construct(args) -> int:
    G = load_graph(args.graph)
    if args.coloring:
        coloring = load_coloring(args.coloring)
        code = build_code(G, coloring, args.q)
        omega_c = circular_clique_number(complement(G))
    else:
        cert = certified_code(G, args.q)
        code, coloring, omega_c = cert.code, cert.coloring, cert.omega_c
    info = {
        "rate": format_rational(code.rate()),
        "t": code.t,
        "l": code.l,
        "coloring": coloring.to_json(),
        "omega_c_complement": format_rational(omega_c),
        "optimal": code.rate() == omega_c,
        "valid": is_valid(code, G),
    }
    if args.out:
        emit(code.to_json(), args.out)
        sys.stdout.write(json.dumps(info) + "\n")
    else:
        emit({**info, "code": code.to_json()})
    return 0


def cmd_verify(args) -> int:
    G, code = load_graph(args.graph), load_code(args.code)
    bad = violations(code, G)
    emit({"valid": not bad, "violations": [list(v) for v in bad], "rate": format_rational(code.rate())}, args.out)
    return 0 if not bad else 1


def cmd_decode_demo(args) -> int:
    G, code = load_graph(args.graph), load_code(args.code)
    rng = random.Random(args.seed)
    q = code.field.q
    x = [[rng.randrange(q) for _ in range(code.t)] for _ in range(code.n)]
    c = encode(code, x)
    decoded = [list(decode(code, G, i, c, {u: x[u] for u in G.side_info[i]})) for i in range(G.n)]
    emit({"message": x, "codeword": list(c), "decoded": decoded, "ok": decoded == x}, args.out)
    return 0 if decoded == x else 1


def cmd_oracle(args) -> int:
    G = load_graph(args.graph)
    if args.kind == "confusion":
        cg = ConfusionGraph(G, args.t, args.q)
        check_limit("q^(nt)", cg.num_vertices, MAX_VERTICES)
        omega = max_clique_confusion(G, args.t, args.q)
        emit({"omega": omega, "bound": _fmt_bound(beta_lower_bound(G, args.t, args.q)),
              "vertices": cg.num_vertices}, args.out)
    else:
        found = beta_scalar_exhaustive(G, args.q)
        emit({"beta_sl": found[0], "witness": found[1].to_json()}, args.out)
    return 0


def cmd_report(args) -> int:
    emit(sandwich_report(load_graph(args.graph), args.q).to_json(), args.out)
    return 0


def cmd_ng(args) -> int:
    G = load_graph(args.graph)
    B, C = good_code(G, args.q), good_code(complement(G), args.q)
    tr = tensor_rank_check(B, C, G)
    out = {"tensor_rank_ok": tr.full_rank, "tensor_rank": tr.to_json()}
    if G.is_undirected():
        p, s = product_bound_report(G, args.q), sum_bound_report(G, args.q)
        out.update({
            "product_interval": p.to_json()["product_interval"],
            "sum_interval": s.to_json()["sum_interval"],
            "equality_flags": {
                "product_lower": p.lower_status,
                "product_upper": p.upper_status,
                "sum_lower": s.lower_status,
                "sum_upper": s.upper_status,
            },
        })
    else:
        out.update({"product_interval": None, "sum_interval": None,
                    "equality_flags": {"note": "interval reports need an undirected graph"}})
    emit(out, args.out)
    return 0 if tr.full_rank else 1


def cmd_suite(args) -> int:
    cfg = SuiteConfig(max_n=args.max_n, q=args.q, seed=args.seed)
    results = run_suite(cfg)
    csv_text, summ = to_csv(results), summary(results, cfg)
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "suite.csv").write_text(csv_text)
        (outdir / "suite.json").write_text(json.dumps(summ, indent=2) + "\n")
    if args.format == "csv":
        sys.stdout.write(csv_text)
    else:
        sys.stdout.write(json.dumps(summ, indent=2) + "\n")
    return 0 if summ["all_passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="circix", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="generate a graph family member")
    s.add_argument("family")
    s.add_argument("params", nargs="*")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--format", choices=("json", "dot"), default="json")
    s.add_argument("--out")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("params", help="omega, chi, omega_c, chi_c and perfectness of a graph")
    s.add_argument("graph")
    s.add_argument("--out")
    s.set_defaults(func=cmd_params)

    s = sub.add_parser("construct", help="build the circular-colouring code for G")
    s.add_argument("graph")
    s.add_argument("--q", type=int, default=2)
    s.add_argument("--coloring")
    s.add_argument("--out")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("verify", help="check a code against a graph")
    s.add_argument("graph")
    s.add_argument("code")
    s.add_argument("--out")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("decode-demo", help="encode a random message and decode at every receiver")
    s.add_argument("graph")
    s.add_argument("code")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out")
    s.set_defaults(func=cmd_decode_demo)

    s = sub.add_parser("oracle", help="confusion-graph or exhaustive scalar oracle")
    s.add_argument("kind", choices=("confusion", "exhaustive"))
    s.add_argument("graph")
    s.add_argument("--q", type=int, default=2)
    s.add_argument("--t", type=int, default=1)
    s.add_argument("--out")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("report", help="bound sandwich for the broadcast rate")
    s.add_argument("graph")
    s.add_argument("--q", type=int, default=2)
    s.add_argument("--out")
    s.set_defaults(func=cmd_report)

    s = sub.add_parser("ng", help="Nordhaus-Gaddum product/sum report")
    s.add_argument("graph")
    s.add_argument("--q", type=int, default=2)
    s.add_argument("--out")
    s.set_defaults(func=cmd_ng)

    s = sub.add_parser("suite", help="run the full experiment battery")
    s.add_argument("--max-n", type=int, default=5)
    s.add_argument("--q", type=int, default=2)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--out")
    s.set_defaults(func=cmd_suite)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LimitExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
