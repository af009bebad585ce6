"""Command-line entry point: ``minorkit <command> ...``.

Graph arguments accept either a file (graph6 line or edge list) or a family
token such as ``aw+:6``, ``K5`` or ``terrahawk``.  Results go to stdout,
diagnostics to stderr.  Exit status is 0 for success or a true answer, 1 for
a false answer or a failed check and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .canonical import canonical_form
from .connectivity import is_internally_4_connected, is_quasi_4_connected, vertex_connectivity
from .families import FAMILY_NAMES, FamilySpec, UnknownFamily, family_spec, parse_family
from .formats import encode_graph6, parse_graph_text, to_dot, to_edge_list
from .graph import Graph, GraphError
from .growth import MAX_OPS, Bounds, default_jobs, grow, predicate_pattern
from .minor import find_minor, forbidden_edges, is_planar
from .verify import DEFAULT_BOUNDS, SUITES, run_suite

FILTER_ALIASES = {
    "v8e-free": "v8e-minor-free",
    "v8e-minor-free": "v8e-minor-free",
    "v8-free": "v8-minor-free",
    "v8-minor-free": "v8-minor-free",
    "always": "always",
}


class UsageError(Exception):
    pass


def _dump(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def load_graph(token: str) -> tuple[Graph, FamilySpec | None]:
    """Resolve a file path or family token to a graph (and its family, if any)."""
    if os.path.isfile(token):
        try:
            with open(token, encoding="ascii") as fh:
                text = fh.read()
        except (OSError, UnicodeDecodeError) as exc:
            raise UsageError(f"cannot read {token}: {exc}") from None
        try:
            return parse_graph_text(text), None
        except GraphError as exc:
            raise UsageError(f"malformed graph file {token}: {exc}") from None
    try:
        spec = parse_family(token)
        return spec.build(), spec
    except UnknownFamily:
        raise UsageError(f"{token!r} is neither a file nor a known family ({', '.join(FAMILY_NAMES)})") from None
    except (GraphError, ValueError) as exc:
        raise UsageError(f"bad family token {token!r}: {exc}") from None


def _pattern_graph(token: str) -> Graph:
    return load_graph(token)[0]


# -- commands --------------------------------------------------------------------


def cmd_family(args) -> int:
    try:
        spec = family_spec(args.name, *args.param)
        g = spec.build()
    except UnknownFamily:
        raise UsageError(f"unknown family {args.name!r}; known: {', '.join(FAMILY_NAMES)}") from None
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "graph6":
        sys.stdout.write(encode_graph6(g) + "\n")
    elif args.format == "edges":
        sys.stdout.write(to_edge_list(g))
    else:
        name = args.name + "".join(f"_{p}" for p in args.param)
        sys.stdout.write(to_dot(g, name, list(spec.labels)))
    return 0


def cmd_minor(args) -> int:
    host, _ = load_graph(args.host)
    pattern = _pattern_graph(args.pattern)
    emb = find_minor(host, pattern)
    sys.stdout.write(("true" if emb is not None else "false") + "\n")
    if args.witness and emb is not None:
        _dump(emb.to_json())
    return 0 if emb is not None else 1


def cmd_check(args) -> int:
    g, _ = load_graph(args.graph)
    if args.predicate == "connectivity":
        sys.stdout.write(f"{vertex_connectivity(g)}\n")
        return 0
    fn = {"i4c": is_internally_4_connected, "q4c": is_quasi_4_connected, "planar": is_planar}[args.predicate]
    value = fn(g)
    sys.stdout.write(("true" if value else "false") + "\n")
    return 0 if value else 1


def _label_edge(labels, u: int, v: int) -> str:
    a, b = labels[u], labels[v]
    return a + b if len(a) == 1 and len(b) == 1 else f"{a}-{b}"


def cmd_forbidden(args) -> int:
    g, spec = load_graph(args.graph)
    pattern = predicate_pattern(FILTER_ALIASES[args.pattern + "-free"])
    fes = forbidden_edges(g, pattern)
    out = {
        "graph6": encode_graph6(g),
        "pattern": args.pattern,
        "edges": [[u, v] for u, v in fes.edges],
        "witnesses": {f"{u}-{v}": fes.certificates[(u, v)].to_json() for u, v in fes.edges},
    }
    if spec is not None and spec.labels:
        out["family"] = spec.name
        out["labelling"] = spec.labeling_doc
        out["labelled_edges"] = [_label_edge(spec.labels, u, v) for u, v in fes.edges]
    _dump(out)
    return 0


def cmd_grow(args) -> int:
    seeds = [load_graph(tok)[0] for tok in args.seed]
    bounds = Bounds(args.max_vertices, args.max_edges, args.stages, args.max_ops)
    report = grow(seeds, FILTER_ALIASES[args.filter], bounds, jobs=args.jobs, seed_names=args.seed)
    _dump(report.to_json())
    return 0


def cmd_verify(args) -> int:
    names = args.names or ["all"]
    for nm in names:
        if nm != "all" and nm not in SUITES:
            raise UsageError(f"unknown check {nm!r}; expected one of {', '.join(sorted(SUITES))} or all")
    overrides = None
    given = (args.max_vertices, args.max_edges, args.stages)
    if any(x is not None for x in given):
        overrides = {}
        for lemma, default in DEFAULT_BOUNDS.items():
            overrides[lemma] = tuple(d if x is None else x for x, d in zip(given, default))
    report = run_suite(names, jobs=args.jobs, bounds=overrides)
    _dump(report)
    return 0 if report["ok"] else 1


def cmd_canon(args) -> int:
    g, _ = load_graph(args.graph)
    sys.stdout.write(canonical_form(g) + "\n")
    return 0


# -- parser ----------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="minorkit", description="Graph minors, i-4-c growth and V8+e verification")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("family", help="emit a named graph")
    p.add_argument("name")
    p.add_argument("param", nargs="*", type=int)
    p.add_argument("--format", choices=("graph6", "edges", "dot"), default="graph6")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("minor", help="test whether the pattern is a minor of the host")
    p.add_argument("--host", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--witness", action="store_true", help="also print the branch sets as JSON")
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("check", help="evaluate a connectivity or planarity predicate")
    p.add_argument("predicate", choices=("i4c", "q4c", "planar", "connectivity"))
    p.add_argument("graph")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("forbidden", help="non-edges whose addition creates the pattern")
    p.add_argument("graph")
    p.add_argument("--pattern", choices=("v8e", "v8"), default="v8e")
    p.set_defaults(func=cmd_forbidden)

    p = sub.add_parser("grow", help="bounded growth by stages of splits and additions")
    p.add_argument("--seed", action="append", required=True)
    p.add_argument("--filter", choices=sorted(FILTER_ALIASES), default="v8e-free")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--max-edges", type=int, required=True)
    p.add_argument("--stages", type=int, required=True)
    p.add_argument("--max-ops", type=int, default=MAX_OPS)
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=cmd_grow)

    p = sub.add_parser("verify", help="run verification checks and print a claim report")
    p.add_argument("names", nargs="*", help=f"checks among {', '.join(sorted(SUITES))} or all")
    p.add_argument("--max-vertices", type=int, default=None, help="override lemma growth bounds")
    p.add_argument("--max-edges", type=int, default=None)
    p.add_argument("--stages", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("canon", help="canonical graph6 string")
    p.add_argument("graph")
    p.set_defaults(func=cmd_canon)
    return parser


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "jobs", None) is None and hasattr(args, "jobs"):
            args.jobs = default_jobs()
        return args.func(args)
    except UsageError as exc:
        print(f"minorkit: {exc}", file=sys.stderr)
        return 2
    except GraphError as exc:
        print(f"minorkit: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
