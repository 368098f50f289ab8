"""Command-line front end: a thin client over the service handlers.

Every subcommand builds a request model, calls the shared handler, and
renders the response as line-oriented text or canonical JSON.  Exit codes:
0 success, 2 malformed input, 3 completion budget exhausted, 4 verification
failure (failed hom check, unequal growth, failed correspondence check).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import IncompleteSystemError, ParseError
from .rewriting import BUDGET_EXHAUSTED
from .service import handlers, schemas

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _json(model) -> str:
    payload = model.model_dump(exclude_none=True)
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _budget_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-rules", type=int, default=10_000, metavar="N",
                        help="completion rule budget (default 10000)")
    parser.add_argument("--max-steps", type=int, default=1_000_000, metavar="N",
                        help="critical-pair examination budget (default 1000000)")


def _graph_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("graph", help="graph file")
    parser.add_argument("--order", metavar="NAMES",
                        help="vertex order override, e.g. 'a c b'")
    parser.add_argument("--format", choices=["text", "json"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="traagkit",
        description="Rewriting systems, normal forms, growth and torsion for "
                    "groups presented by mixed graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="validate a graph file and report its shape")
    _graph_args(p)

    p = sub.add_parser("complete", help="complete the graph's rewriting system")
    _graph_args(p)
    _budget_args(p)

    p = sub.add_parser("reduce", help="normal form of a word")
    _graph_args(p)
    p.add_argument("word")
    p.add_argument("--geodesic", action="store_true", help="also print the geodesic length")
    _budget_args(p)

    p = sub.add_parser("wp", help="word problem: does the word equal the identity?")
    _graph_args(p)
    p.add_argument("word")
    _budget_args(p)

    p = sub.add_parser("growth", help="sphere sizes and geodesic counts")
    _graph_args(p)
    p.add_argument("--radius", type=int, default=5)
    p.add_argument("--compare-raag", action="store_true",
                   help="compare against the direction-erased graph's group")
    _budget_args(p)

    p = sub.add_parser("torsion", help="torsion witness, if any")
    _graph_args(p)
    _budget_args(p)

    p = sub.add_parser("abel", help="abelianization ranks")
    _graph_args(p)

    p = sub.add_parser("indicable", help="does the group surject onto the integers?")
    _graph_args(p)

    p = sub.add_parser("homcheck", help="verify a generator map is a homomorphism")
    p.add_argument("source_graph")
    p.add_argument("target_graph")
    p.add_argument("map", help="map file: lines 'vertex -> word'")
    p.add_argument("--inverse", metavar="MAP",
                   help="candidate inverse map; also checks mutual inverse")
    p.add_argument("--format", choices=["text", "json"], default="text")
    _budget_args(p)

    p = sub.add_parser("cayley", help="export a Cayley ball, or check the "
                                      "correspondence with the direction-erased group")
    p.add_argument("graph")
    p.add_argument("--order", metavar="NAMES")
    p.add_argument("--radius", type=int, default=3)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument("--check", action="store_true",
                   help="check the Cayley correspondence instead of exporting")
    _budget_args(p)

    return parser


def _render_parse(r: schemas.ParseResponse) -> str:
    lines = [
        f"vertices: {len(r.vertices)}",
        f"undirected edges: {len(r.undirected)}",
        f"directed edges: {len(r.directed)}",
        f"origins: {' '.join(r.origins)}".rstrip(),
        f"order: {' '.join(r.order)}",
    ]
    return "\n".join(lines) + "\n"


def _render_complete(r: schemas.CompleteResponse) -> str:
    lines = [
        f"status: {r.status}",
        f"passes: {r.passes}",
        f"examined: {r.examined}",
        f"added: {r.added}",
        f"rules: {len(r.rules)}",
    ]
    lines.extend(f"{rule.lhs} -> {rule.rhs}" for rule in r.rules)
    return "\n".join(lines) + "\n"


def _render_growth(r: schemas.GrowthResponse) -> str:
    lines = [
        f"radius: {r.radius}",
        f"spheres: {' '.join(map(str, r.spheres))}",
        f"geodesics: {' '.join(map(str, r.geodesics))}",
    ]
    if r.equal is not None:
        lines.append(f"raag spheres: {' '.join(map(str, r.underlying_spheres))}")
        lines.append(f"raag geodesics: {' '.join(map(str, r.underlying_geodesics))}")
        lines.append(f"equal: {_bool(r.equal)}")
    return "\n".join(lines) + "\n"


def _render_torsion(r: schemas.TorsionResponse) -> str:
    if not r.torsion:
        return "torsion: no\n"
    return (
        "torsion: yes\n"
        f"cycle: {' '.join(r.cycle)}\n"
        f"element: {r.element}\n"
        f"element order: {r.element_order}\n"
    )


def _render_homcheck(r: schemas.HomcheckResponse) -> str:
    lines = [f"homomorphism: {_bool(r.homomorphism)}"]
    if r.violated is not None:
        lines.append(f"violated: {r.violated}")
    if r.inverse_homomorphism is not None:
        lines.append(f"inverse homomorphism: {_bool(r.inverse_homomorphism)}")
    if r.inverse_violated is not None:
        lines.append(f"inverse violated: {r.inverse_violated}")
    if r.mutually_inverse is not None:
        lines.append(f"mutually inverse: {_bool(r.mutually_inverse)}")
    return "\n".join(lines) + "\n"


def _dispatch(args: argparse.Namespace) -> tuple[str, int]:
    cmd = args.command
    if cmd == "parse":
        r = handlers.handle_parse(schemas.GraphRequest(graph=_read(args.graph), order=args.order))
        return (_json(r) if args.format == "json" else _render_parse(r)), EXIT_OK

    if cmd == "complete":
        r = handlers.handle_complete(schemas.CompleteRequest(
            graph=_read(args.graph), order=args.order,
            max_rules=args.max_rules, max_steps=args.max_steps))
        code = EXIT_BUDGET if r.status == BUDGET_EXHAUSTED else EXIT_OK
        return (_json(r) if args.format == "json" else _render_complete(r)), code

    if cmd == "reduce":
        r = handlers.handle_reduce(schemas.WordRequest(
            graph=_read(args.graph), order=args.order, word=args.word,
            max_rules=args.max_rules, max_steps=args.max_steps))
        if args.format == "json":
            return _json(r), EXIT_OK
        text = f"normal form: {r.normal_form}\n"
        if args.geodesic:
            text += f"geodesic length: {r.geodesic_length}\n"
        return text, EXIT_OK

    if cmd == "wp":
        r = handlers.handle_word_problem(schemas.WordRequest(
            graph=_read(args.graph), order=args.order, word=args.word,
            max_rules=args.max_rules, max_steps=args.max_steps))
        if args.format == "json":
            return _json(r), EXIT_OK
        return ("trivial\n" if r.trivial else "nontrivial\n"), EXIT_OK

    if cmd == "growth":
        r = handlers.handle_growth(schemas.GrowthRequest(
            graph=_read(args.graph), order=args.order, radius=args.radius,
            compare=args.compare_raag, max_rules=args.max_rules, max_steps=args.max_steps))
        code = EXIT_VERIFY if r.equal is False else EXIT_OK
        return (_json(r) if args.format == "json" else _render_growth(r)), code

    if cmd == "torsion":
        r = handlers.handle_torsion(schemas.CompleteRequest(
            graph=_read(args.graph), order=args.order,
            max_rules=args.max_rules, max_steps=args.max_steps))
        return (_json(r) if args.format == "json" else _render_torsion(r)), EXIT_OK

    if cmd == "abel":
        r = handlers.handle_abelianization(
            schemas.GraphRequest(graph=_read(args.graph), order=args.order))
        if args.format == "json":
            return _json(r), EXIT_OK
        return f"free rank: {r.free_rank}\nz2 rank: {r.z2_rank}\n", EXIT_OK

    if cmd == "indicable":
        r = handlers.handle_indicability(
            schemas.GraphRequest(graph=_read(args.graph), order=args.order))
        if args.format == "json":
            return _json(r), EXIT_OK
        text = f"indicable: {_bool(r.indicable)}\n"
        if r.witness is not None:
            text += f"witness: {r.witness}\n"
        return text, EXIT_OK

    if cmd == "homcheck":
        r = handlers.handle_homcheck(schemas.HomRequest(
            source_graph=_read(args.source_graph), target_graph=_read(args.target_graph),
            map=_read(args.map),
            inverse_map=_read(args.inverse) if args.inverse else None,
            max_rules=args.max_rules, max_steps=args.max_steps))
        ok = r.homomorphism and r.inverse_homomorphism in (None, True) \
            and r.mutually_inverse in (None, True)
        code = EXIT_OK if ok else EXIT_VERIFY
        return (_json(r) if args.format == "json" else _render_homcheck(r)), code

    if cmd == "cayley":
        r = handlers.handle_cayley(schemas.CayleyRequest(
            graph=_read(args.graph), order=args.order, radius=args.radius,
            check=args.check, max_rules=args.max_rules, max_steps=args.max_steps))
        if args.check:
            ok = bool(r.bijective and r.adjacency_preserved)
            text = (f"bijective: {_bool(r.bijective)}\n"
                    f"adjacency preserved: {_bool(r.adjacency_preserved)}\n")
            if args.format == "json":
                text = _json(r)
            return text, (EXIT_OK if ok else EXIT_VERIFY)
        if args.format == "json":
            r.dot = None
            return _json(r), EXIT_OK
        return r.dot or "", EXIT_OK

    raise AssertionError(f"unhandled command {cmd!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        output, code = _dispatch(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except IncompleteSystemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    sys.stdout.write(output)
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
