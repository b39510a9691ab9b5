"""Command line interface.

Subcommands: gen, check, decompose, reduce, recolor, pipeline,
oracle {distance|connected|diameter}, audit, bench. All files are JSON in
the formats documented in the README; bench writes CSV.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bestchoice import best_choice_recoloring
from .chordalize import merge_same_colored, pipeline_theorem
from .decomposition import (
    EliminationOrdering,
    TreeDecomposition,
    mcs_order,
    reduce_width2,
)
from .errors import RecolorError
from .experiments import (
    ExperimentConfig,
    FAMILIES,
    has_violations,
    run_experiments,
    write_csv,
)
from .graphs import (
    Coloring,
    Graph,
    gen_2tree,
    gen_chordal_omega3,
    gen_partial_2tree,
    is_proper,
    random_proper_coloring,
)
from .oracle import DEFAULT_STATE_CAP, bfs_distance, reconfig_connected, reconfig_diameter
from .sequences import RecoloringSequence, audit_best_choice, verify_sequence


def _load(path: str) -> dict:
    with open(path) as handle:
        return json.load(handle)


def _dump(path: str, obj: dict) -> None:
    with open(path, "w") as handle:
        json.dump(obj, handle, indent=2)
        handle.write("\n")


def _cmd_gen(args) -> int:
    if args.family == "2tree":
        g = gen_2tree(args.n, args.seed)
    elif args.family == "partial-2tree":
        g = gen_partial_2tree(args.n, args.keep_prob, args.seed)
    else:
        g = gen_chordal_omega3(args.n, args.seed)
    _dump(args.out, g.to_json())
    if args.coloring_out:
        order = mcs_order(g)
        col = random_proper_coloring(g, order, args.k, args.coloring_seed)
        _dump(args.coloring_out, col.to_json())
    print(f"wrote {args.family} graph with n={g.n}, m={g.num_edges()} to {args.out}")
    return 0


def _cmd_check(args) -> int:
    g = Graph.from_json(_load(args.graph))
    if args.coloring:
        col = Coloring.from_json(_load(args.coloring))
        ok = is_proper(g, col)
        print("proper" if ok else "improper")
        return 0 if ok else 1
    seq = RecoloringSequence.from_json(_load(args.seq))
    try:
        final = verify_sequence(g, seq)
    except RecolorError as exc:
        print(f"invalid: {exc}")
        return 1
    print(f"valid sequence of {len(seq.steps)} steps")
    if args.expect_final:
        want = Coloring.from_json(_load(args.expect_final))
        if final.colors != want.colors:
            print("final coloring does not match the expected one")
            return 1
    return 0


def _cmd_decompose(args) -> int:
    g = Graph.from_json(_load(args.graph))
    if not args.td and not args.peo:
        print("nothing to do: pass --td and/or --peo", file=sys.stderr)
        return 2
    if args.td:
        td = reduce_width2(g)
        _dump(args.td, td.to_json())
        print(f"wrote width-{td.width()} decomposition with {len(td.bags)} bags")
    if args.peo:
        peo = mcs_order(g)
        _dump(args.peo, peo.to_json())
        print(f"wrote elimination ordering of {g.n} vertices")
    return 0


def _cmd_reduce(args) -> int:
    g = Graph.from_json(_load(args.graph))
    td = TreeDecomposition.from_json(_load(args.td))
    alpha = Coloring.from_json(_load(args.alpha))
    h, merge_map, alpha_h = merge_same_colored(g, td, alpha)
    _dump(
        args.out,
        {
            "graph": h.to_json(),
            "merge_map": merge_map.to_json(),
            "coloring": alpha_h.to_json(),
        },
    )
    print(f"merged {g.n} vertices into {h.n}")
    return 0


def _cmd_recolor(args) -> int:
    g = Graph.from_json(_load(args.graph))
    peo = EliminationOrdering.from_json(_load(args.peo))
    alpha = Coloring.from_json(_load(args.alpha))
    beta = Coloring.from_json(_load(args.beta))
    seq = best_choice_recoloring(g, peo, alpha, beta, args.k)
    _dump(args.out, seq.to_json())
    if args.trace:
        for v, c in seq.steps:
            print(f"{v} -> {c}")
    print(f"wrote sequence of {len(seq.steps)} steps to {args.out}")
    return 0


def _cmd_pipeline(args) -> int:
    g = Graph.from_json(_load(args.graph))
    alpha = Coloring.from_json(_load(args.alpha))
    beta = Coloring.from_json(_load(args.beta))
    seq = pipeline_theorem(g, alpha, beta)
    _dump(args.out, seq.to_json())
    print(f"wrote sequence of {len(seq.steps)} steps to {args.out}")
    return 0


def _cmd_oracle(args) -> int:
    g = Graph.from_json(_load(args.graph))
    if args.mode == "distance":
        alpha = Coloring.from_json(_load(args.alpha))
        beta = Coloring.from_json(_load(args.beta))
        d = bfs_distance(g, args.k, alpha, beta, args.state_cap)
        print("unreachable" if d is None else d)
        return 0
    if args.mode == "connected":
        print("connected" if reconfig_connected(g, args.k, args.state_cap) else "disconnected")
        return 0
    d = reconfig_diameter(g, args.k, args.state_cap)
    print("disconnected" if d is None else d)
    return 0


def _cmd_audit(args) -> int:
    g = Graph.from_json(_load(args.graph))
    peo = EliminationOrdering.from_json(_load(args.peo))
    seq = RecoloringSequence.from_json(_load(args.seq))
    report = audit_best_choice(seq, peo, g, strict=False)
    if args.json_out:
        _dump(args.json_out, report.to_json())
    if report.clean:
        print("audit clean")
        return 0
    for violation in report.violations:
        print(json.dumps(violation.to_json()))
    return 1


def _cmd_bench(args) -> int:
    config = ExperimentConfig(
        family=args.family,
        sizes=tuple(int(x) for x in args.sizes.split(",")),
        seeds=tuple(range(args.seeds)),
        k=args.k,
        keep_prob=args.keep_prob,
        state_cap=args.state_cap,
        cross_check=not args.no_cross_check,
        jobs=args.jobs,
    )
    records = run_experiments(config)
    write_csv(args.out, records)
    bad = has_violations(records)
    print(f"wrote {len(records)} records to {args.out}")
    if bad:
        print("violations found", file=sys.stderr)
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recolor",
        description="Recoloring transformations between colorings of treewidth-2 graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random instance graph")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--keep-prob", type=float, default=0.6)
    p.add_argument("--out", required=True)
    p.add_argument("--coloring-out", help="also write a random proper coloring")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--coloring-seed", type=int, default=0)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("check", help="check a coloring or verify a sequence")
    p.add_argument("--graph", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--coloring")
    group.add_argument("--seq")
    p.add_argument("--expect-final", help="coloring the sequence must end at")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("decompose", help="tree decomposition and elimination ordering")
    p.add_argument("--graph", required=True)
    p.add_argument("--td", help="output path for the width-2 tree decomposition")
    p.add_argument("--peo", help="output path for the elimination ordering")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("reduce", help="merge same-colored bag vertices, fill cliques")
    p.add_argument("--graph", required=True)
    p.add_argument("--td", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("recolor", help="greedy bounded recoloring on a chordal graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--peo", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--out", required=True)
    p.add_argument("--trace", action="store_true", help="print one line per step")
    p.set_defaults(func=_cmd_recolor)

    p = sub.add_parser("pipeline", help="full 5-coloring transformation")
    p.add_argument("--graph", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_pipeline)

    p = sub.add_parser("oracle", help="exhaustive state-space search")
    p.add_argument("mode", choices=("distance", "connected", "diameter"))
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--state-cap", type=int, default=DEFAULT_STATE_CAP)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("audit", help="audit a sequence against the greedy guarantees")
    p.add_argument("--graph", required=True)
    p.add_argument("--peo", required=True)
    p.add_argument("--seq", required=True)
    p.add_argument("--json-out", help="write the full report as JSON")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("bench", help="run experiment batches, write CSV")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--sizes", required=True, help="comma separated, e.g. 50,100,200")
    p.add_argument("--seeds", type=int, default=10, help="use seeds 0..N-1")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--keep-prob", type=float, default=0.6)
    p.add_argument("--state-cap", type=int, default=DEFAULT_STATE_CAP)
    p.add_argument("--no-cross-check", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RecolorError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
