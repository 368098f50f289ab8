"""Cayley-ball enumeration, growth tables, and the comparison with the
direction-erased graph's group.

Elements are keyed by their normal forms, which are exactly the irreducible
words, so breadth-first layering over the generators enumerates each element
once.  Geodesic counting is layered dynamic programming: every relator has
even length, so each generator step changes the distance by exactly one and
geodesics are exactly the layer-increasing paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import IncompleteSystemError
from .graphs import underlying
from .presentations import Completion, Presentation, complete, presentation
from .words import Word, format_word, from_syllables, invert, to_syllables


@dataclass(frozen=True)
class CayleyBall:
    radius: int
    layers: tuple[tuple[Word, ...], ...]  # layer n = elements at distance n
    distance: Mapping[Word, int]
    geodesics: Mapping[Word, int]  # number of geodesic words reaching each element

    def elements(self) -> tuple[Word, ...]:
        return tuple(w for layer in self.layers for w in layer)


def cayley_ball(completion: Completion, radius: int) -> CayleyBall:
    """Breadth-first layers of group elements out to the given radius."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    if not completion.finite:
        raise IncompleteSystemError("Cayley enumeration requires a finite completion")
    order = completion.system.order
    generators = order.letters()
    reduce = completion.system.reduce
    layers: list[tuple[Word, ...]] = [((),)]
    distance: dict[Word, int] = {(): 0}
    geodesics: dict[Word, int] = {(): 1}
    for n in range(radius):
        frontier: dict[Word, int] = {}
        for g in layers[n]:
            count = geodesics[g]
            for s in generators:
                h = reduce(g + (s,))
                if h in distance:
                    continue
                frontier[h] = frontier.get(h, 0) + count
        layer = tuple(sorted(frontier, key=order.key))
        for h in layer:
            distance[h] = n + 1
            geodesics[h] = frontier[h]
        layers.append(layer)
    return CayleyBall(radius, tuple(layers), distance, geodesics)


@dataclass(frozen=True)
class GrowthTable:
    radius: int
    spheres: tuple[int, ...]  # elements at distance exactly n
    geodesics: tuple[int, ...]  # geodesic words of length exactly n


def growth_table(ball: CayleyBall) -> GrowthTable:
    spheres = tuple(len(layer) for layer in ball.layers)
    geodesics = tuple(sum(ball.geodesics[w] for w in layer) for layer in ball.layers)
    return GrowthTable(ball.radius, spheres, geodesics)


def underlying_presentation(p: Presentation) -> Presentation:
    """The same vertices and order with every edge direction erased."""
    return presentation(underlying(p.graph), p.order)


@dataclass(frozen=True)
class GrowthComparison:
    equal: bool
    table: GrowthTable
    underlying_table: GrowthTable


def compare_with_underlying(
    p: Presentation,
    radius: int,
    *,
    max_rules: int = 10_000,
    max_steps: int = 1_000_000,
) -> GrowthComparison:
    """Growth tables of the group and of its direction-erased counterpart."""
    mine = complete(p, max_rules=max_rules, max_steps=max_steps)
    plain = complete(underlying_presentation(p), max_rules=max_rules, max_steps=max_steps)
    table = growth_table(cayley_ball(mine, radius))
    underlying_tbl = growth_table(cayley_ball(plain, radius))
    return GrowthComparison(
        equal=(table.spheres == underlying_tbl.spheres
               and table.geodesics == underlying_tbl.geodesics),
        table=table,
        underlying_table=underlying_tbl,
    )


def untwist(p: Presentation, word: Word) -> Word:
    """Map a normal form to its counterpart over the direction-erased graph.

    A syllable's exponent sign is flipped once for each earlier letter of a
    vertex its own directed edges point to; that compensates the sign
    twisting that directed edges introduce, making the map carry Cayley-graph
    neighbors to neighbors.  Parities are preserved, so the map is an
    involution on the (shared) set of irreducible words.
    """
    flip_deps: list[tuple[int, ...]] = [
        tuple(t for o, t in sorted(p.graph.directed) if o == v) for v in range(p.graph.n)
    ]
    parity = [0] * p.graph.n
    out: list[tuple[int, int]] = []
    for v, e in to_syllables(word):
        flips = sum(parity[t] for t in flip_deps[v]) % 2
        out.append((v, -e if flips else e))
        parity[v] ^= abs(e) & 1
    return from_syllables(out)


@dataclass(frozen=True)
class CorrespondenceCheck:
    bijective: bool
    adjacency_preserved: bool


def check_cayley_correspondence(
    p: Presentation,
    radius: int,
    *,
    max_rules: int = 10_000,
    max_steps: int = 1_000_000,
) -> CorrespondenceCheck:
    """Verify on the radius-r balls that the group's Cayley graph matches the
    direction-erased group's: the untwisting map must biject layer onto layer
    and send every generator edge to an edge."""
    mine = complete(p, max_rules=max_rules, max_steps=max_steps)
    plain_p = underlying_presentation(p)
    plain = complete(plain_p, max_rules=max_rules, max_steps=max_steps)
    ball = cayley_ball(mine, radius)
    plain_ball = cayley_ball(plain, radius)

    bijective = True
    for layer, plain_layer in zip(ball.layers, plain_ball.layers):
        images = {untwist(p, w) for w in layer}
        if len(images) != len(layer) or images != set(plain_layer):
            bijective = False
            break

    adjacency = True
    generators = p.order.letters()
    reduce_mine = mine.system.reduce
    reduce_plain = plain.system.reduce
    for layer in ball.layers[:-1]:
        for g in layer:
            phi_g = untwist(p, g)
            for s in generators:
                h = reduce_mine(g + (s,))
                delta = reduce_plain(invert(phi_g) + untwist(p, h))
                if len(delta) != 1:
                    adjacency = False
                    break
            if not adjacency:
                break
        if not adjacency:
            break
    return CorrespondenceCheck(bijective, adjacency)


def cayley_dot(p: Presentation, completion: Completion, ball: CayleyBall) -> str:
    """The ball as an undirected DOT graph, one node per element labeled by
    its normal form, one edge per generator-neighbor pair inside the ball.
    Output is deterministic: nodes layer by layer, edges in node order."""
    names = p.graph.names
    order = completion.system.order
    reduce = completion.system.reduce
    nodes = ball.elements()
    labels = {w: format_word(w, names) for w in nodes}
    lines = ["graph cayley_ball {"]
    for w in nodes:
        lines.append(f'  "{labels[w]}";')
    seen: set[tuple[Word, Word]] = set()
    for g in nodes:
        for s in order.letters():
            h = reduce(g + (s,))
            if h not in ball.distance:
                continue
            pair = (g, h) if order.key(g) <= order.key(h) else (h, g)
            if pair in seen:
                continue
            seen.add(pair)
            lines.append(f'  "{labels[pair[0]]}" -- "{labels[pair[1]]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
