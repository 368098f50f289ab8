"""Group presentations from mixed graphs.

An undirected edge {x, y} makes x and y commute; a directed edge with origin
o and terminus t imposes the Klein relation ``o t o = t``.  Over the doubled
alphabet every edge contributes four oriented rules (one per sign choice)
that move the order-larger letter to the right, flipping the origin letter's
sign when the edge is directed; every vertex contributes the two free
cancellation rules.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import IncompleteSystemError
from .graphs import DIRECTED, MixedGraph
from .rewriting import Completion, Rule, RewriteSystem, knuth_bendix
from .words import (
    AlphabetOrder,
    Letter,
    Word,
    free_reduce,
    letter,
    sign_of,
    vertex_of,
)


@dataclass(frozen=True)
class Presentation:
    graph: MixedGraph
    order: AlphabetOrder
    system: RewriteSystem  # the base rules, before completion


def base_rules(graph: MixedGraph, order: AlphabetOrder) -> list[Rule]:
    rules: list[Rule] = []
    for v in range(graph.n):
        for g in (1, -1):
            rules.append(Rule((letter(v, g), letter(v, -g)), ()))
    for i, j in graph.edge_pairs():
        x, y = (i, j) if order.position(i) < order.position(j) else (j, i)
        kind, origin, _ = graph.edge(i, j)
        for b in (1, -1):
            for a in (1, -1):
                lhs = (letter(y, b), letter(x, a))
                if kind != DIRECTED:
                    rhs = (letter(x, a), letter(y, b))
                elif origin == x:
                    rhs = (letter(x, -a), letter(y, b))
                else:
                    rhs = (letter(x, a), letter(y, -b))
                rules.append(Rule(lhs, rhs))
    return rules


def presentation(
    graph: MixedGraph, order: AlphabetOrder | Sequence[int] | None = None
) -> Presentation:
    """Build the base rewriting system for a graph.

    ``order`` defaults to the graph's declared vertex order and may be given
    as an AlphabetOrder or a permutation of vertex indices.
    """
    if order is None:
        order = graph.alphabet_order()
    elif not isinstance(order, AlphabetOrder):
        order = AlphabetOrder(tuple(order))
    if order.size != graph.n:
        raise ValueError("order does not cover the graph's vertices")
    return Presentation(graph, order, RewriteSystem(order, base_rules(graph, order)))


def complete(
    p: Presentation, *, max_rules: int = 10_000, max_steps: int = 1_000_000
) -> Completion:
    return knuth_bendix(p.system, max_rules=max_rules, max_steps=max_steps)


def normal_form(completion: Completion, word: Sequence[Letter]) -> Word:
    """The unique irreducible representative of the word's group element.

    Refuses budget-exhausted completions: without confluence the reduced
    form need not be unique.
    """
    if not completion.finite:
        raise IncompleteSystemError(
            "normal forms require a finite completion; this run exhausted its budget"
        )
    return completion.system.reduce(free_reduce(word))


def word_problem(completion: Completion, word: Sequence[Letter]) -> bool:
    """True when the word represents the identity."""
    return normal_form(completion, word) == ()


def relators(graph: MixedGraph) -> tuple[Word, ...]:
    """Defining relators, one per edge: x y x^-1 y^-1 for undirected edges
    (endpoints sorted), o t o t^-1 for directed edges."""
    out: list[Word] = []
    for i, j in sorted(graph.undirected):
        out.append((letter(i, 1), letter(j, 1), letter(i, -1), letter(j, -1)))
    for o, t in sorted(graph.directed):
        out.append((letter(o, 1), letter(t, 1), letter(o, 1), letter(t, -1)))
    return tuple(out)


def shuffle_left(
    p: Presentation, word: Sequence[Letter], x_letter: Letter
) -> tuple[Letter, Word]:
    """Move a letter from the right end of ``word . x`` to the front.

    Every vertex of ``word`` must be adjacent to x.  Crossing a neighbor
    reached by a directed edge out of x flips x's sign; a neighbor with a
    directed edge into x gets its own sign flipped; undirected neighbors
    change nothing.  Returns (x', word') with word . x == x' . word'.
    """
    x = vertex_of(x_letter)
    eps = sign_of(x_letter)
    flips = 0
    out: list[int] = []
    for y_letter in word:
        v = vertex_of(y_letter)
        edge = p.graph.edge(v, x)
        if edge is None:
            raise ValueError(
                f"vertex {p.graph.names[v]!r} is not adjacent to {p.graph.names[x]!r}"
            )
        kind, origin, _ = edge
        if kind == DIRECTED and origin == x:
            flips += 1
            out.append(y_letter)
        elif kind == DIRECTED and origin == v:
            out.append(-y_letter)
        else:
            out.append(y_letter)
    return letter(x, eps if flips % 2 == 0 else -eps), tuple(out)


_SHAPE_CHECKS = (
    "length_preserving",
    "last_letter_moved_to_front",
    "vertex_sequence_rotated",
    "prefix_condition",
)


def rule_shape(p: Presentation, rule: Rule) -> dict[str, bool]:
    """The four structural checks for a completion-added rule.

    A well-shaped rule carries its last letter to the front, rotating the
    vertex sequence without changing the length, and its letters interact
    with the moved letter through base rules only (the prefix condition).
    """
    lhs, rhs = rule.lhs, rule.rhs
    checks = {name: False for name in _SHAPE_CHECKS}
    checks["length_preserving"] = len(lhs) == len(rhs)
    if not lhs or not rhs:
        return checks
    checks["last_letter_moved_to_front"] = vertex_of(rhs[0]) == vertex_of(lhs[-1])
    checks["vertex_sequence_rotated"] = [vertex_of(z) for z in rhs[1:]] == [
        vertex_of(z) for z in lhs[:-1]
    ]
    x = vertex_of(lhs[-1])
    pos = p.order.position
    adjacent = p.graph.adjacent
    head = vertex_of(lhs[0])
    ok = adjacent(head, x) and pos(x) < pos(head)
    for z in lhs[1:-1]:
        v = vertex_of(z)
        ok = ok and adjacent(x, v) and pos(v) < pos(x)
    checks["prefix_condition"] = ok
    return checks


@dataclass(frozen=True)
class ShapeReport:
    entries: tuple[tuple[Rule, dict[str, bool]], ...]

    @property
    def all_pass(self) -> bool:
        return all(all(checks.values()) for _, checks in self.entries)


def rule_shape_report(p: Presentation, completion: Completion) -> ShapeReport:
    """Shape checks for every rule the completion added beyond the base system."""
    if not completion.finite:
        raise IncompleteSystemError("shape report requires a finite completion")
    return ShapeReport(
        tuple((rule, rule_shape(p, rule)) for rule in completion.added_rules)
    )
