"""Command line pipeline: generate, diagram, compare, matrix, embed, classify.

Data goes to files (or stdout for the final scalar of classify), logs go
to stderr.  Exit codes: 0 success, 1 computation failure, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from math import inf
from pathlib import Path

from . import __version__
from .bottleneck import bottleneck_matrix
from .embed import (
    DistanceMatrix,
    embedding_from_csv,
    embedding_to_csv,
    embedding_to_svg,
    linear_boundary_errors,
    matrix_from_csv,
    matrix_to_csv,
    mds_embed,
    one_vs_rest_errors,
)
from .exact import exact_pnorm_distance, pnorm_lower_bound, upper_bound_distance
from .generators import MODELS, GenConfig, generate
from .network import load_network, save_network
from .persistence import diagrams_to_csv, network_diagrams

_EXACT_NODE_PRODUCT_CAP = 20


class ConfigError(Exception):
    """Bad flags or inputs; maps to exit code 2."""


def _parse_p(text: str) -> float:
    if text in ("inf", "infinity"):
        return inf
    try:
        value = float(text)
    except ValueError as exc:
        raise ConfigError(f"invalid p-norm {text!r}") from exc
    if value <= 0:
        raise ConfigError("p must be positive or inf")
    return value


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        cfg = GenConfig(
            model=args.model,
            n=args.n,
            seed=args.seed,
            sigma=args.sigma,
            feature_dim=args.feature_dim,
            tau=args.tau,
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    net = generate(cfg)
    save_network(net, args.out)
    print(f"wrote {args.out}: {len(net.nodes)} nodes, {len(net.weights)} listed weights", file=sys.stderr)
    return 0


def cmd_diagram(args: argparse.Namespace) -> int:
    net = load_network(args.network)
    diagrams = network_diagrams(net, max_hom_dim=args.max_dim, min_persistence=args.prune)
    diagrams_to_csv(diagrams, args.out)
    print(f"wrote {args.out}: {sum(len(d) for d in diagrams)} points", file=sys.stderr)
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    net_a = load_network(args.network_a)
    net_b = load_network(args.network_b)
    p = _parse_p(args.p)
    dims = None
    if args.dims:
        try:
            dims = tuple(int(d) for d in args.dims.split(","))
        except ValueError as exc:
            raise ConfigError(f"invalid --dims {args.dims!r}") from exc
    bound = pnorm_lower_bound(net_a, net_b, p=p, dims=dims)
    report = {
        "p": "inf" if p == inf else p,
        "zero_order": bound.entries[0],
        "bottleneck": {f"dim{k}": v for k, v in zip(bound.dims, bound.entries[1:])},
        "lower_bound": bound.value,
        "upper_bound": upper_bound_distance(net_a, net_b, p),
    }
    small = len(net_a.nodes) * len(net_b.nodes) <= _EXACT_NODE_PRODUCT_CAP
    if args.exact == "on" or (args.exact == "auto" and small):
        report["exact"] = exact_pnorm_distance(net_a, net_b, p)
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2)
        fh.write("\n")
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


def _diagram_for_matrix(task):
    path, dim, prune = task
    net = load_network(path)
    return network_diagrams(net, max_hom_dim=dim, min_persistence=prune)[dim]


def cmd_matrix(args: argparse.Namespace) -> int:
    paths = sorted(Path(args.corpus).glob("*.json"))
    if len(paths) < 2:
        raise ConfigError(f"corpus {args.corpus} holds fewer than two networks")
    labels = tuple(p.stem for p in paths)
    tasks = [(str(p), args.dim, args.prune) for p in paths]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            diagrams = list(pool.map(_diagram_for_matrix, tasks))
    else:
        diagrams = [_diagram_for_matrix(t) for t in tasks]
    values = bottleneck_matrix(diagrams, workers=args.workers)
    matrix_to_csv(DistanceMatrix(labels=labels, values=values), args.out)
    print(f"wrote {args.out}: {len(labels)}x{len(labels)}", file=sys.stderr)
    return 0


def cmd_embed(args: argparse.Namespace) -> int:
    matrix = matrix_from_csv(args.matrix)
    classes = tuple(label.split(args.class_delim)[0] for label in matrix.labels)
    embedding = mds_embed(matrix, classes=classes)
    embedding_to_csv(embedding, args.out)
    if args.svg:
        embedding_to_svg(embedding, args.svg)
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    embedding = embedding_from_csv(args.embedding)
    if embedding.classes is None:
        raise ConfigError("embedding CSV carries no class labels")
    class_count = len(set(embedding.classes))
    if class_count <= 2:
        errors = linear_boundary_errors(embedding)
        per_class = {cls: errors for cls in sorted(set(embedding.classes))}
    else:
        # one line cannot carve three classes; score the best one-vs-rest split
        per_class = one_vs_rest_errors(embedding)
        errors = min(per_class.values())
    print(f"per-class errors: {per_class}", file=sys.stderr)
    print(errors)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump({"errors": errors, "per_class": per_class}, fh, indent=2)
            fh.write("\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phnet",
        description="Persistence-based lower bounds on high-order network distances.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a synthetic pairwise proximity network")
    gen.add_argument("--model", required=True, choices=MODELS)
    gen.add_argument("--n", required=True, type=int, help="node count")
    gen.add_argument("--seed", required=True, type=int, help="generation seed (mandatory for reproducibility)")
    gen.add_argument("--sigma", type=float, default=0.5, help="Gaussian kernel width (default 0.5)")
    gen.add_argument("--feature-dim", type=int, default=30, help="feature dimension of the correlation model (default 30)")
    gen.add_argument("--tau", type=float, default=0.2, help="sparsification threshold (default 0.2)")
    gen.add_argument("-o", "--out", required=True, help="output network JSON")
    gen.set_defaults(func=cmd_gen)

    diagram = sub.add_parser("diagram", help="persistence diagrams of a network (dualizes proximity input)")
    diagram.add_argument("network", help="network JSON file")
    diagram.add_argument("--max-dim", type=int, default=None, help="top homology dimension (default: network order)")
    diagram.add_argument("--prune", type=float, default=0.0, help="drop points with persistence <= this (default 0)")
    diagram.add_argument("-o", "--out", required=True, help="output diagram CSV")
    diagram.set_defaults(func=cmd_diagram)

    compare = sub.add_parser("compare", help="lower/upper bounds and optional exact distance of two networks")
    compare.add_argument("network_a")
    compare.add_argument("network_b")
    compare.add_argument("--dims", default=None, help="comma list, diagram dimension per order (default l-1)")
    compare.add_argument("--p", default="inf", help="p-norm: positive number or inf (default inf)")
    compare.add_argument("--exact", choices=("auto", "on", "off"), default="auto",
                         help="exact distance by enumeration when small (default auto)")
    compare.add_argument("-o", "--out", required=True, help="output report JSON")
    compare.set_defaults(func=cmd_compare)

    matrix = sub.add_parser("matrix", help="pairwise bottleneck distance matrix over a corpus directory")
    matrix.add_argument("corpus", help="directory of network JSON files")
    matrix.add_argument("--dim", required=True, type=int, help="diagram dimension to compare")
    matrix.add_argument("--prune", type=float, default=0.0)
    matrix.add_argument("--workers", type=int, default=1)
    matrix.add_argument("-o", "--out", required=True, help="output matrix CSV")
    matrix.set_defaults(func=cmd_matrix)

    embed = sub.add_parser("embed", help="classical MDS embedding of a distance matrix")
    embed.add_argument("matrix", help="distance matrix CSV")
    embed.add_argument("--class-delim", default="_", help="label prefix up to this is the class (default '_')")
    embed.add_argument("--svg", default=None, help="optional scatter SVG")
    embed.add_argument("-o", "--out", required=True, help="output embedding CSV")
    embed.set_defaults(func=cmd_embed)

    classify = sub.add_parser("classify", help="best single-line error count of a labeled embedding")
    classify.add_argument("embedding", help="embedding CSV")
    classify.add_argument("-o", "--out", default=None, help="optional report JSON")
    classify.set_defaults(func=cmd_classify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, FileNotFoundError, ValueError) as exc:
        # bad flags, missing files, or inputs violating a precondition
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # computation failure
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
