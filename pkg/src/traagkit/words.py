"""Signed words over a finite vertex alphabet.

A letter is a nonzero integer: ``+(i + 1)`` is the generator for vertex ``i``
and ``-(i + 1)`` its inverse.  A word is a tuple of letters; the empty tuple
is the identity.  Storing letters as (vertex, sign) packed integers keeps
sign flips and free cancellation O(1).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import WordParseError

Letter = int
Word = tuple[int, ...]
Syllable = tuple[int, int]  # (vertex index, nonzero exponent)

EMPTY: Word = ()


def letter(vertex: int, sign: int) -> Letter:
    if sign not in (-1, 1):
        raise ValueError(f"sign must be -1 or +1, got {sign!r}")
    if vertex < 0:
        raise ValueError(f"vertex index must be nonnegative, got {vertex!r}")
    return sign * (vertex + 1)


def vertex_of(x: Letter) -> int:
    return (x if x > 0 else -x) - 1


def sign_of(x: Letter) -> int:
    return 1 if x > 0 else -1


def free_reduce(word: Iterable[Letter]) -> Word:
    """Cancel adjacent inverse pairs until none remain (single stack pass)."""
    out: list[int] = []
    push = out.append
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            push(x)
    return tuple(out)


def invert(word: Sequence[Letter]) -> Word:
    """The group inverse: reversed sequence with all signs negated."""
    return tuple(-x for x in reversed(word))


def to_syllables(word: Sequence[Letter]) -> tuple[Syllable, ...]:
    """Group a freely reduced word into maximal same-vertex power blocks.

    Rejects words that are not freely reduced, since a cancellation inside a
    block would produce a zero exponent.
    """
    syllables: list[Syllable] = []
    for x in word:
        v, s = vertex_of(x), sign_of(x)
        if syllables and syllables[-1][0] == v:
            e = syllables[-1][1]
            if (e > 0) != (s > 0):
                raise ValueError("word is not freely reduced")
            syllables[-1] = (v, e + s)
        else:
            syllables.append((v, s))
    return tuple(syllables)


def from_syllables(syllables: Iterable[Syllable]) -> Word:
    out: list[int] = []
    for v, e in syllables:
        if e == 0:
            raise ValueError("syllable exponent must be nonzero")
        out.extend([letter(v, 1 if e > 0 else -1)] * abs(e))
    return tuple(out)


@dataclass(frozen=True)
class AlphabetOrder:
    """Total order v < v^-1 < w < w^-1 < ... induced by a vertex permutation.

    ``permutation`` lists vertex indices from smallest to largest.  The order
    on words is shortlex: shorter first, ties broken lexicographically by
    letter rank.
    """

    permutation: tuple[int, ...]

    def __post_init__(self):
        n = len(self.permutation)
        if sorted(self.permutation) != list(range(n)):
            raise ValueError("permutation must list every vertex index exactly once")
        positions = [0] * n
        for rank, v in enumerate(self.permutation):
            positions[v] = rank
        object.__setattr__(self, "_positions", tuple(positions))

    @classmethod
    def default(cls, n: int) -> "AlphabetOrder":
        return cls(tuple(range(n)))

    @property
    def size(self) -> int:
        return len(self.permutation)

    def position(self, vertex: int) -> int:
        return self._positions[vertex]

    def rank(self, x: Letter) -> int:
        return 2 * self._positions[vertex_of(x)] + (0 if x > 0 else 1)

    def letters(self) -> tuple[Letter, ...]:
        """All 2n letters in ascending order."""
        out: list[int] = []
        for v in self.permutation:
            out.append(v + 1)
            out.append(-(v + 1))
        return tuple(out)

    def key(self, word: Sequence[Letter]) -> tuple[int, tuple[int, ...]]:
        """Shortlex sort key."""
        return (len(word), tuple(self.rank(x) for x in word))

    def compare(self, u: Sequence[Letter], v: Sequence[Letter]) -> int:
        """Shortlex comparison: -1, 0 or +1."""
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)


_TOKEN = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def parse_word(text: str, names: Sequence[str]) -> Word:
    """Parse whitespace-separated tokens ``name``, ``name^k`` or ``name^-k``.

    A lone ``1`` is the empty word.  Powers expand to |k| letters.
    """
    tokens = text.split()
    if not tokens:
        raise WordParseError("empty word text (write '1' for the identity)")
    if tokens == ["1"]:
        return EMPTY
    index = {name: i for i, name in enumerate(names)}
    out: list[int] = []
    for token in tokens:
        if token == "1":
            raise WordParseError("'1' denotes the empty word and must stand alone")
        m = _TOKEN.match(token)
        if m is None:
            raise WordParseError(f"malformed token {token!r}")
        name, exponent = m.group(1), m.group(2)
        if name not in index:
            raise WordParseError(f"unknown vertex {name!r}")
        k = 1 if exponent is None else int(exponent)
        if k == 0:
            raise WordParseError(f"zero exponent in {token!r}")
        out.extend([letter(index[name], 1 if k > 0 else -1)] * abs(k))
    return tuple(out)


def format_word(word: Sequence[Letter], names: Sequence[str]) -> str:
    """Render a word in the text syntax, compressing runs of equal letters."""
    if not word:
        return "1"
    parts: list[str] = []
    i = 0
    while i < len(word):
        x = word[i]
        j = i
        while j < len(word) and word[j] == x:
            j += 1
        count = j - i
        exponent = sign_of(x) * count
        name = names[vertex_of(x)]
        parts.append(name if exponent == 1 else f"{name}^{exponent}")
        i = j
    return " ".join(parts)
