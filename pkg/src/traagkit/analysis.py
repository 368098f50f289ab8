"""Algebraic invariants and certificates computed from graphs and normal forms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import MapParseError
from .graphs import MixedGraph, clique_directed_cycle
from .presentations import Completion, Presentation, normal_form, relators
from .words import Letter, Word, invert, letter, parse_word, to_syllables, vertex_of


@dataclass(frozen=True)
class AbelianizationResult:
    """Ranks of the abelianized group: Z^free_rank x (Z/2)^z2_rank.

    A vertex that originates a directed edge o t o = t satisfies o^2 = 1
    after abelianizing, so the Z/2 rank counts exactly the origin vertices.
    """

    free_rank: int
    z2_rank: int


def abelianization(graph: MixedGraph) -> AbelianizationResult:
    origins = len(graph.origins())
    return AbelianizationResult(free_rank=graph.n - origins, z2_rank=origins)


def indicable_vertex(graph: MixedGraph) -> Optional[int]:
    """The order-least vertex that originates no directed edge, if any.

    Sending such a vertex to 1 and the rest to 0 defines a surjection onto
    the integers; when every vertex is an origin no surjection exists.
    """
    origins = set(graph.origins())
    for v in graph.order:
        if v not in origins:
            return v
    return None


@dataclass(frozen=True)
class TorsionWitness:
    cycle: tuple[int, ...]  # vertices of a directed cycle spanning a clique
    element: Word  # the cycle product; squares to the identity


def torsion(p: Presentation, completion: Completion) -> Optional[TorsionWitness]:
    """A torsion witness, or None when the group is torsion-free.

    Torsion exists exactly when some clique's vertices form a directed
    cycle; the product of the cycle's vertices is then an involution, which
    is verified against the completed system before being returned.
    """
    cycle = clique_directed_cycle(p.graph)
    if cycle is None:
        return None
    element = tuple(letter(v, 1) for v in cycle)
    if normal_form(completion, element + element) != ():
        raise RuntimeError("internal error: torsion witness failed verification")
    return TorsionWitness(cycle, element)


def geodesic_length(completion: Completion, word: Sequence[Letter]) -> int:
    """Distance from the identity: sum of |exponent| over the normal form's
    syllables."""
    return sum(abs(e) for _, e in to_syllables(normal_form(completion, word)))


def support(completion: Completion, word: Sequence[Letter]) -> frozenset[int]:
    """Vertices occurring in the word's normal form."""
    return frozenset(vertex_of(x) for x in normal_form(completion, word))


@dataclass(frozen=True)
class GeneratorMap:
    source: MixedGraph
    target: MixedGraph
    images: tuple[Word, ...]  # one image word per source vertex


def parse_map(text: str, source: MixedGraph, target: MixedGraph) -> GeneratorMap:
    """Parse lines ``source_vertex -> word`` (word syntax over target names)."""
    images: dict[int, Word] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition("->")
        if not sep:
            raise MapParseError(f"malformed map line {line!r}", lineno)
        name = head.strip()
        if name not in source.names:
            raise MapParseError(f"unknown source vertex {name!r}", lineno)
        v = source.index(name)
        if v in images:
            raise MapParseError(f"duplicate image for {name!r}", lineno)
        try:
            images[v] = parse_word(rest.strip(), target.names)
        except ValueError as exc:
            raise MapParseError(str(exc), lineno) from exc
    missing = [source.names[v] for v in range(source.n) if v not in images]
    if missing:
        raise MapParseError(f"missing images for: {' '.join(missing)}")
    return GeneratorMap(source, target, tuple(images[v] for v in range(source.n)))


def apply_map(m: GeneratorMap, word: Sequence[Letter]) -> Word:
    out: list[int] = []
    for x in word:
        image = m.images[vertex_of(x)]
        out.extend(image if x > 0 else invert(image))
    return tuple(out)


def check_hom(m: GeneratorMap, target_completion: Completion) -> Optional[Word]:
    """None when the map respects every defining relator of the source;
    otherwise the first violated relator (a word over the source alphabet)."""
    for relator in relators(m.source):
        if normal_form(target_completion, apply_map(m, relator)) != ():
            return relator
    return None


def mutually_inverse(
    f: GeneratorMap,
    g: GeneratorMap,
    source_completion: Completion,
    target_completion: Completion,
) -> bool:
    """True when g(f(v)) = v for every source generator and f(g(w)) = w for
    every target generator; together with the hom checks this certifies an
    isomorphism."""
    for v in range(f.source.n):
        if normal_form(source_completion, apply_map(g, f.images[v])) != (letter(v, 1),):
            return False
    for w in range(g.source.n):
        if normal_form(target_completion, apply_map(f, g.images[w])) != (letter(w, 1),):
            return False
    return True
