"""Mixed graphs: named vertices joined by undirected or directed edges.

A directed edge carries an (origin, terminus) pair.  At most one edge of
either kind may join a pair of vertices, and loops are rejected, so the
direction-erased graph is simplicial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import GraphParseError
from .words import AlphabetOrder

MAX_VERTICES = 64

_NAME = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")

UNDIRECTED = "undirected"
DIRECTED = "directed"


@dataclass(frozen=True)
class MixedGraph:
    names: tuple[str, ...]
    undirected: frozenset[tuple[int, int]]  # (i, j) with i < j
    directed: frozenset[tuple[int, int]]  # (origin, terminus)
    order: tuple[int, ...]  # default alphabet permutation

    def __post_init__(self):
        n = len(self.names)
        if n == 0:
            raise ValueError("a graph needs at least one vertex")
        if n > MAX_VERTICES:
            raise ValueError(f"at most {MAX_VERTICES} vertices supported, got {n}")
        if len(set(self.names)) != n:
            raise ValueError("duplicate vertex names")
        for name in self.names:
            if not _NAME.match(name):
                raise ValueError(f"invalid vertex name {name!r}")
        seen_pairs: set[tuple[int, int]] = set()
        for i, j in self.undirected:
            if not (0 <= i < j < n):
                raise ValueError(f"bad undirected edge ({i}, {j})")
            seen_pairs.add((i, j))
        for o, t in self.directed:
            if o == t:
                raise ValueError("directed edge origin and terminus must differ")
            if not (0 <= o < n and 0 <= t < n):
                raise ValueError(f"bad directed edge ({o}, {t})")
            pair = (o, t) if o < t else (t, o)
            if pair in seen_pairs:
                raise ValueError(f"more than one edge joins vertices {pair}")
            seen_pairs.add(pair)
        if sorted(self.order) != list(range(n)):
            raise ValueError("order must be a permutation of the vertices")
        direction: dict[tuple[int, int], tuple[int, int]] = {}
        for o, t in self.directed:
            pair = (o, t) if o < t else (t, o)
            direction[pair] = (o, t)
        object.__setattr__(self, "_adjacency", frozenset(seen_pairs))
        object.__setattr__(self, "_direction", direction)

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"unknown vertex {name!r}") from None

    def adjacent(self, i: int, j: int) -> bool:
        """Adjacency in the direction-erased graph."""
        if i == j:
            return False
        pair = (i, j) if i < j else (j, i)
        return pair in self._adjacency

    def edge(self, i: int, j: int) -> Optional[tuple[str, int, int]]:
        """The edge joining i and j: (kind, origin, terminus), or None.

        For undirected edges origin/terminus are the sorted endpoints.
        """
        pair = (i, j) if i < j else (j, i)
        if pair not in self._adjacency:
            return None
        if pair in self._direction:
            o, t = self._direction[pair]
            return (DIRECTED, o, t)
        return (UNDIRECTED, pair[0], pair[1])

    def edge_pairs(self) -> tuple[tuple[int, int], ...]:
        """All unordered edge pairs, sorted."""
        return tuple(sorted(self._adjacency))

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in range(self.n) if self.adjacent(i, j))

    def origins(self) -> tuple[int, ...]:
        """Vertices that are the origin of at least one directed edge."""
        return tuple(sorted({o for o, _ in self.directed}))

    def alphabet_order(self) -> AlphabetOrder:
        return AlphabetOrder(self.order)


def underlying(graph: MixedGraph) -> MixedGraph:
    """Forget all edge directions, keeping vertices and their order."""
    edges = set(graph.undirected)
    for o, t in graph.directed:
        edges.add((o, t) if o < t else (t, o))
    return MixedGraph(graph.names, frozenset(edges), frozenset(), graph.order)


def is_clique(graph: MixedGraph, vertices: Iterable[int]) -> bool:
    """True when every pair of the given vertices is adjacent (directions ignored)."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < graph.n:
            raise ValueError(f"unknown vertex index {v}")
    return all(graph.adjacent(a, b) for k, a in enumerate(vs) for b in vs[k + 1 :])


def directed_acyclic(graph: MixedGraph) -> bool:
    """Kahn's algorithm on the directed edges alone."""
    indeg = [0] * graph.n
    out: dict[int, list[int]] = {v: [] for v in range(graph.n)}
    for o, t in graph.directed:
        out[o].append(t)
        indeg[t] += 1
    queue = [v for v in range(graph.n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for t in out[v]:
            indeg[t] -= 1
            if indeg[t] == 0:
                queue.append(t)
    return seen == graph.n


def clique_directed_cycle(graph: MixedGraph) -> Optional[tuple[int, ...]]:
    """Shortest directed cycle (length >= 3) whose vertex set is a clique.

    The cycle uses directed edges only, consistently oriented, and every pair
    of its vertices must be adjacent in the direction-erased graph.  Ties are
    broken lexicographically by vertex index, starting from the least vertex
    of the cycle.  Exhaustive search; intended for desk-scale graphs.
    """
    if directed_acyclic(graph):
        return None
    succ: dict[int, list[int]] = {v: [] for v in range(graph.n)}
    for o, t in sorted(graph.directed):
        succ[o].append(t)

    def extend(path: list[int], start: int, length: int) -> Optional[tuple[int, ...]]:
        last = path[-1]
        if len(path) == length:
            if start in succ[last]:
                return tuple(path)
            return None
        for nxt in succ[last]:
            if nxt <= start or nxt in path:
                continue
            if not all(graph.adjacent(nxt, v) for v in path):
                continue
            found = extend(path + [nxt], start, length)
            if found is not None:
                return found
        return None

    for length in range(3, graph.n + 1):
        for start in range(graph.n):
            found = extend([start], start, length)
            if found is not None:
                return found
    return None


def parse_graph(text: str) -> MixedGraph:
    """Parse the line-based graph format.

    ``vertices: a b c`` must come first; then ``edge x y`` (undirected),
    ``edge x -> y`` (directed, origin x), and an optional ``order: ...``
    directive permuting the default vertex order.  ``#`` starts a comment.
    """
    names: list[str] | None = None
    order: list[int] | None = None
    undirected: set[tuple[int, int]] = set()
    directed: set[tuple[int, int]] = set()
    pairs_seen: set[tuple[int, int]] = set()

    def vertex(token: str, lineno: int) -> int:
        if names is None or token not in names:
            raise GraphParseError(f"unknown vertex {token!r}", lineno)
        return names.index(token)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if names is None:
            if tokens[0] != "vertices:":
                raise GraphParseError("first line must be 'vertices: name...'", lineno)
            if len(tokens) == 1:
                raise GraphParseError("no vertex names given", lineno)
            names = tokens[1:]
            for name in names:
                if not _NAME.match(name):
                    raise GraphParseError(f"invalid vertex name {name!r}", lineno)
            if len(set(names)) != len(names):
                raise GraphParseError("duplicate vertex name", lineno)
            if len(names) > MAX_VERTICES:
                raise GraphParseError(f"at most {MAX_VERTICES} vertices supported", lineno)
            continue
        if tokens[0] == "vertices:":
            raise GraphParseError("duplicate vertices line", lineno)
        if tokens[0] == "order:":
            if order is not None:
                raise GraphParseError("duplicate order directive", lineno)
            if sorted(tokens[1:]) != sorted(names):
                raise GraphParseError("order must be a permutation of the vertices", lineno)
            order = [names.index(t) for t in tokens[1:]]
            continue
        if tokens[0] == "edge":
            if len(tokens) == 3 and "->" not in tokens:
                i, j = vertex(tokens[1], lineno), vertex(tokens[2], lineno)
                kind = UNDIRECTED
            elif len(tokens) == 4 and tokens[2] == "->" and tokens[1] != "->" and tokens[3] != "->":
                i, j = vertex(tokens[1], lineno), vertex(tokens[3], lineno)
                kind = DIRECTED
            else:
                raise GraphParseError(f"malformed edge line {line!r}", lineno)
            if i == j:
                raise GraphParseError(f"self-loop at {tokens[1]!r}", lineno)
            pair = (i, j) if i < j else (j, i)
            if pair in pairs_seen:
                raise GraphParseError(
                    f"duplicate edge between {names[pair[0]]!r} and {names[pair[1]]!r}", lineno
                )
            pairs_seen.add(pair)
            if kind == UNDIRECTED:
                undirected.add(pair)
            else:
                directed.add((i, j))
            continue
        raise GraphParseError(f"malformed line {line!r}", lineno)

    if names is None:
        raise GraphParseError("missing 'vertices:' line")
    if order is None:
        order = list(range(len(names)))
    try:
        return MixedGraph(tuple(names), frozenset(undirected), frozenset(directed), tuple(order))
    except ValueError as exc:
        raise GraphParseError(str(exc)) from exc
