"""Shared fixtures: a ten-graph suite with completing orders, plus brute-force
oracles and random-graph helpers used across the tests."""

from __future__ import annotations

import itertools
import random
from pathlib import Path

import pytest

from traagkit import complete, parse_graph, presentation
from traagkit.graphs import MixedGraph

DATA = Path(__file__).parent / "data"

GRAPH_TEXTS = {
    "z2": "vertices: a b\nedge a b\n",
    "klein": "vertices: a b\nedge a -> b\n",
    "delta": "vertices: a b c\nedge a -> b\nedge b -> c\nedge c -> a\n",
    "k3": "vertices: a b c\nedge a b\nedge b c\nedge a c\n",
    # The middle vertex must sort last for the completion to terminate.
    "path": "vertices: a b c\nedge a b\nedge b -> c\norder: a c b\n",
    "zline": "vertices: a\n",
    "free2": "vertices: a b\n",
    "k4mixed": (
        "vertices: a b c d\n"
        "edge a b\nedge a -> c\nedge d -> a\nedge b -> c\nedge b d\nedge c -> d\n"
    ),
    # Star with one edge of each kind around the center x.
    "star": "vertices: x a b c\nedge x -> a\nedge b -> x\nedge x c\n",
    "split": "vertices: a b c\nedge a b\n",
}

SUITE_NAMES = tuple(GRAPH_TEXTS)

PENTAGON = "vertices: a b c d e\nedge a b\nedge b c\nedge c d\nedge d e\nedge e a\n"


@pytest.fixture(scope="session")
def suite():
    """name -> (Presentation, Completion) for the ten-graph suite."""
    out = {}
    for name, text in GRAPH_TEXTS.items():
        p = presentation(parse_graph(text))
        c = complete(p)
        assert c.finite, f"suite graph {name} must complete finitely"
        out[name] = (p, c)
    return out


def random_mixed_graph(rng: random.Random, n: int) -> MixedGraph:
    """Uniform edge types: absent, undirected, or directed either way."""
    undirected, directed = set(), set()
    for i, j in itertools.combinations(range(n), 2):
        kind = rng.randrange(4)
        if kind == 1:
            undirected.add((i, j))
        elif kind == 2:
            directed.add((i, j))
        elif kind == 3:
            directed.add((j, i))
    names = tuple(f"v{i}" for i in range(n))
    return MixedGraph(names, frozenset(undirected), frozenset(directed), tuple(range(n)))


def all_mixed_graphs(n: int):
    """Every mixed graph on n labelled vertices, over all edge-type choices."""
    names = tuple("abcdef"[:n])
    pairs = list(itertools.combinations(range(n), 2))
    for types in itertools.product((None, "und", "fwd", "rev"), repeat=len(pairs)):
        undirected, directed = set(), set()
        for (i, j), t in zip(pairs, types):
            if t == "und":
                undirected.add((i, j))
            elif t == "fwd":
                directed.add((i, j))
            elif t == "rev":
                directed.add((j, i))
        yield MixedGraph(names, frozenset(undirected), frozenset(directed), tuple(range(n)))


def flawless_order(graph: MixedGraph):
    """A vertex order under which the base system completes with no additions:
    no vertex may sit between two of its neighbors that are not adjacent to
    each other.  Returns a permutation or None."""
    for perm in itertools.permutations(range(graph.n)):
        position = {v: i for i, v in enumerate(perm)}
        ok = True
        for x in range(graph.n):
            smaller = [u for u in graph.neighbors(x) if position[u] < position[x]]
            bigger = [w for w in graph.neighbors(x) if position[w] > position[x]]
            if any(not graph.adjacent(u, w) for u in smaller for w in bigger):
                ok = False
                break
        if ok:
            return perm
    return None


def random_word(rng: random.Random, letters, max_len: int = 12):
    return tuple(rng.choice(letters) for _ in range(rng.randrange(max_len + 1)))
