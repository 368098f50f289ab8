"""Shared request handlers: one function per operation.

The FastAPI endpoints and the CLI subcommands are both thin wrappers around
these.  Completions are cached by (graph text, order, budgets) so repeated
queries against the same presentation skip the completion run.
"""

from __future__ import annotations

from functools import lru_cache

from .. import analysis, growth, presentations
from ..errors import GraphParseError, IncompleteSystemError
from ..graphs import MixedGraph, parse_graph
from ..presentations import Completion, Presentation
from ..words import format_word, parse_word
from . import schemas


def _resolve_order(graph: MixedGraph, order_text: str | None) -> tuple[int, ...]:
    if order_text is None:
        return graph.order
    names = order_text.split()
    if sorted(names) != sorted(graph.names):
        raise GraphParseError("order override must be a permutation of the vertices")
    return tuple(graph.index(name) for name in names)


@lru_cache(maxsize=64)
def _completed(
    graph_text: str, order_text: str | None, max_rules: int, max_steps: int
) -> tuple[Presentation, Completion]:
    graph = parse_graph(graph_text)
    p = presentations.presentation(graph, _resolve_order(graph, order_text))
    return p, presentations.complete(p, max_rules=max_rules, max_steps=max_steps)


def load_presentation(graph_text: str, order_text: str | None = None) -> Presentation:
    graph = parse_graph(graph_text)
    return presentations.presentation(graph, _resolve_order(graph, order_text))


def completed(req: schemas.CompleteRequest) -> tuple[Presentation, Completion]:
    return _completed(req.graph, req.order, req.max_rules, req.max_steps)


def finite_completion(req: schemas.CompleteRequest) -> tuple[Presentation, Completion]:
    p, completion = completed(req)
    if not completion.finite:
        raise IncompleteSystemError(
            "completion exhausted its budget; raise --max-rules/--max-steps "
            "or choose a different vertex order"
        )
    return p, completion


def handle_parse(req: schemas.GraphRequest) -> schemas.ParseResponse:
    graph = parse_graph(req.graph)
    order = _resolve_order(graph, req.order)
    name = graph.names.__getitem__
    return schemas.ParseResponse(
        vertices=list(graph.names),
        undirected=[[name(i), name(j)] for i, j in sorted(graph.undirected)],
        directed=[[name(o), name(t)] for o, t in sorted(graph.directed)],
        origins=[name(v) for v in graph.origins()],
        order=[name(v) for v in order],
    )


def handle_complete(req: schemas.CompleteRequest) -> schemas.CompleteResponse:
    p, completion = completed(req)
    names = p.graph.names
    return schemas.CompleteResponse(
        status=completion.status,
        passes=completion.passes,
        examined=completion.examined,
        added=len(completion.added_rules),
        rules=[
            schemas.RuleText(lhs=format_word(r.lhs, names), rhs=format_word(r.rhs, names))
            for r in completion.system.rules
        ],
    )


def handle_reduce(req: schemas.WordRequest) -> schemas.ReduceResponse:
    p, completion = finite_completion(req)
    word = parse_word(req.word, p.graph.names)
    nf = presentations.normal_form(completion, word)
    return schemas.ReduceResponse(
        input=req.word.strip(),
        normal_form=format_word(nf, p.graph.names),
        geodesic_length=analysis.geodesic_length(completion, word),
    )


def handle_word_problem(req: schemas.WordRequest) -> schemas.WordProblemResponse:
    p, completion = finite_completion(req)
    word = parse_word(req.word, p.graph.names)
    nf = presentations.normal_form(completion, word)
    return schemas.WordProblemResponse(
        trivial=(nf == ()), normal_form=format_word(nf, p.graph.names)
    )


def handle_growth(req: schemas.GrowthRequest) -> schemas.GrowthResponse:
    if req.radius < 0:
        raise ValueError("radius must be nonnegative")
    p, completion = finite_completion(req)
    if req.compare:
        comparison = growth.compare_with_underlying(
            p, req.radius, max_rules=req.max_rules, max_steps=req.max_steps
        )
        return schemas.GrowthResponse(
            radius=req.radius,
            spheres=list(comparison.table.spheres),
            geodesics=list(comparison.table.geodesics),
            underlying_spheres=list(comparison.underlying_table.spheres),
            underlying_geodesics=list(comparison.underlying_table.geodesics),
            equal=comparison.equal,
        )
    table = growth.growth_table(growth.cayley_ball(completion, req.radius))
    return schemas.GrowthResponse(
        radius=req.radius, spheres=list(table.spheres), geodesics=list(table.geodesics)
    )


def handle_torsion(req: schemas.CompleteRequest) -> schemas.TorsionResponse:
    p, completion = finite_completion(req)
    witness = analysis.torsion(p, completion)
    if witness is None:
        return schemas.TorsionResponse(torsion=False)
    return schemas.TorsionResponse(
        torsion=True,
        cycle=[p.graph.names[v] for v in witness.cycle],
        element=format_word(witness.element, p.graph.names),
        element_order=2,
    )


def handle_abelianization(req: schemas.GraphRequest) -> schemas.AbelianizationResponse:
    graph = parse_graph(req.graph)
    result = analysis.abelianization(graph)
    return schemas.AbelianizationResponse(
        free_rank=result.free_rank, z2_rank=result.z2_rank
    )


def handle_indicability(req: schemas.GraphRequest) -> schemas.IndicabilityResponse:
    graph = parse_graph(req.graph)
    witness = analysis.indicable_vertex(graph)
    if witness is None:
        return schemas.IndicabilityResponse(indicable=False)
    return schemas.IndicabilityResponse(indicable=True, witness=graph.names[witness])


def handle_homcheck(req: schemas.HomRequest) -> schemas.HomcheckResponse:
    src_p, src_completion = _completed(req.source_graph, None, req.max_rules, req.max_steps)
    tgt_p, tgt_completion = _completed(req.target_graph, None, req.max_rules, req.max_steps)
    for completion in (src_completion, tgt_completion):
        if not completion.finite:
            raise IncompleteSystemError("completion exhausted its budget")
    forward = analysis.parse_map(req.map, src_p.graph, tgt_p.graph)
    violated = analysis.check_hom(forward, tgt_completion)
    response = schemas.HomcheckResponse(
        homomorphism=violated is None,
        violated=None if violated is None else format_word(violated, src_p.graph.names),
    )
    if violated is not None or req.inverse_map is None:
        return response
    backward = analysis.parse_map(req.inverse_map, tgt_p.graph, src_p.graph)
    inverse_violated = analysis.check_hom(backward, src_completion)
    response.inverse_homomorphism = inverse_violated is None
    response.inverse_violated = (
        None if inverse_violated is None else format_word(inverse_violated, tgt_p.graph.names)
    )
    if inverse_violated is None:
        response.mutually_inverse = analysis.mutually_inverse(
            forward, backward, src_completion, tgt_completion
        )
    return response


def handle_cayley(req: schemas.CayleyRequest) -> schemas.CayleyResponse:
    if req.radius < 0:
        raise ValueError("radius must be nonnegative")
    p, completion = finite_completion(req)
    ball = growth.cayley_ball(completion, req.radius)
    dot = growth.cayley_dot(p, completion, ball)
    edges = sum(1 for line in dot.splitlines() if " -- " in line)
    response = schemas.CayleyResponse(
        radius=req.radius,
        nodes=len(ball.elements()),
        edges=edges,
        dot=dot,
        layers=[[format_word(w, p.graph.names) for w in layer] for layer in ball.layers],
        geodesic_counts={
            format_word(w, p.graph.names): ball.geodesics[w] for w in ball.elements()
        },
    )
    if req.check:
        check = growth.check_cayley_correspondence(
            p, req.radius, max_rules=req.max_rules, max_steps=req.max_steps
        )
        response.bijective = check.bijective
        response.adjacency_preserved = check.adjacency_preserved
    return response
