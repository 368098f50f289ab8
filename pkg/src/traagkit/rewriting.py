"""String rewriting over a shortlex order.

Rules strictly decrease shortlex rank, so every rewrite sequence terminates.
Rewriting always picks the leftmost redex, preferring the longest left-hand
side at that position.  Critical pairs follow the classical overlap and
inclusion cases, and completion repeatedly orients unresolved pairs into new
rules until none remain or a budget runs out.

Internally words are transcoded to strings over a private character range in
rank order: shortlex comparison of words becomes (length, string) comparison,
slicing is C-speed, and the redex search runs inside the regex engine.  The
rule set compiles to a trie-shaped pattern whose alternatives put longer
continuations before shorter ones, which makes a plain regex search return
exactly the leftmost-longest redex.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .words import AlphabetOrder, Word

FINITE = "finite"
BUDGET_EXHAUSTED = "budget_exhausted"

OVERLAP = "overlap"
INCLUSION = "inclusion"

_BASE = 0x100  # letters encode above ASCII so rule patterns never collide


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: Word


@dataclass(frozen=True)
class CriticalPair:
    kind: str  # OVERLAP or INCLUSION
    peak: Word
    left: Word
    right: Word


def _trie_pattern(keys: Iterable[str]) -> str:
    """A regex matching any of the keys, preferring the longest at each
    position: shared prefixes collapse into a trie and every terminal node
    lists its continuations before the empty alternative."""
    root: dict = {}
    for key in keys:
        node = root
        for ch in key:
            node = node.setdefault(ch, {})
        node[""] = {}

    def emit(node: dict) -> str:
        branches = [
            re.escape(ch) + emit(sub) for ch, sub in sorted(node.items()) if ch != ""
        ]
        if not branches:
            return ""
        if "" in node:
            return "(?:" + "|".join(branches) + "|)"
        if len(branches) == 1:
            return branches[0]
        return "(?:" + "|".join(branches) + ")"

    return emit(root)


class _Matcher:
    """Mutable rule index over a fixed alphabet order.

    Rules live as encoded strings; the compiled pattern is rebuilt lazily
    after changes.
    """

    def __init__(self, order: AlphabetOrder):
        self.order = order
        self._rules: dict[str, str] = {}
        self._dirty = True
        self._pattern: Optional[re.Pattern[str]] = None
        encode: dict[int, str] = {}
        decode: dict[str, int] = {}
        for v in range(order.size):
            for x in (v + 1, -(v + 1)):
                c = chr(_BASE + order.rank(x))
                encode[x] = c
                decode[c] = x
        self._encode_map = encode
        self._decode_map = decode

    def encode(self, word: Sequence[int]) -> str:
        return "".join(map(self._encode_map.__getitem__, word))

    def decode(self, text: str) -> Word:
        return tuple(map(self._decode_map.__getitem__, text))

    def copy(self) -> "_Matcher":
        other = _Matcher(self.order)
        other._rules = dict(self._rules)
        return other

    def __len__(self) -> int:
        return len(self._rules)

    def add(self, lhs: Word, rhs: Word) -> None:
        self.add_encoded(self.encode(lhs), self.encode(rhs))

    def add_encoded(self, lhs: str, rhs: str) -> None:
        self._rules[lhs] = rhs
        self._dirty = True

    def remove_encoded(self, lhs: str) -> None:
        del self._rules[lhs]
        self._dirty = True

    def rules_encoded(self) -> dict[str, str]:
        return self._rules

    def items(self) -> Iterator[tuple[Word, Word]]:
        for l, r in self._rules.items():
            yield self.decode(l), self.decode(r)

    def _compiled(self) -> Optional[re.Pattern[str]]:
        if self._dirty:
            self._pattern = (
                re.compile(_trie_pattern(self._rules)) if self._rules else None
            )
            self._max_lhs = max(map(len, self._rules), default=0)
            self._dirty = False
        return self._pattern

    def reduce_encoded(self, s: str) -> str:
        pattern = self._compiled()
        if pattern is None:
            return s
        rules = self._rules
        back = self._max_lhs - 1
        pos = 0
        while True:
            m = pattern.search(s, pos)
            if m is None:
                return s
            start = m.start()
            s = s[:start] + rules[m.group(0)] + s[m.end() :]
            pos = start - back
            if pos < 0:
                pos = 0

    def reduce(self, word: Sequence[int]) -> Word:
        return self.decode(self.reduce_encoded(self.encode(word)))

    def apply_once(self, word: Sequence[int]) -> Optional[Word]:
        pattern = self._compiled()
        if pattern is None:
            return None
        s = self.encode(word)
        m = pattern.search(s)
        if m is None:
            return None
        return self.decode(s[: m.start()] + self._rules[m.group(0)] + s[m.end() :])


class RewriteSystem:
    """An immutable, validated rule set over one alphabet order.

    Every rule's left side must be strictly shortlex-larger than its right
    side, and no two rules may share a left side.
    """

    def __init__(self, order: AlphabetOrder, rules: Iterable[Rule]):
        canonical = sorted(set(rules), key=lambda r: order.key(r.lhs))
        seen: set[Word] = set()
        for rule in canonical:
            if not rule.lhs:
                raise ValueError("rule with empty left-hand side")
            if order.compare(rule.lhs, rule.rhs) <= 0:
                raise ValueError(f"rule does not decrease shortlex rank: {rule}")
            if rule.lhs in seen:
                raise ValueError(f"two rules share the left-hand side {rule.lhs}")
            seen.add(rule.lhs)
        self.order = order
        self.rules: tuple[Rule, ...] = tuple(canonical)
        self._matcher = _Matcher(order)
        for rule in canonical:
            self._matcher.add(rule.lhs, rule.rhs)

    def __len__(self) -> int:
        return len(self.rules)

    def apply_once(self, word: Sequence[int]) -> Optional[Word]:
        """One leftmost-longest rewrite step, or None when irreducible."""
        return self._matcher.apply_once(word)

    def reduce(self, word: Sequence[int]) -> Word:
        """The irreducible descendant under the leftmost-longest strategy."""
        return self._matcher.reduce(word)

    def is_irreducible(self, word: Sequence[int]) -> bool:
        return self.apply_once(word) is None


def reduce_rightmost(system: RewriteSystem, word: Sequence[int]) -> Word:
    """Reference reducer taking the rightmost redex instead; used to observe
    strategy independence on confluent systems."""
    by_first: dict[int, list[Rule]] = {}
    for rule in system.rules:
        by_first.setdefault(rule.lhs[0], []).append(rule)
    for bucket in by_first.values():
        bucket.sort(key=lambda r: -len(r.lhs))
    w = list(word)
    while True:
        applied = False
        for i in range(len(w) - 1, -1, -1):
            for rule in by_first.get(w[i], ()):
                L = len(rule.lhs)
                if i + L <= len(w) and tuple(w[i : i + L]) == rule.lhs:
                    w[i : i + L] = rule.rhs
                    applied = True
                    break
            if applied:
                break
        if not applied:
            return tuple(w)


def _overlap_obligations(l1, r1, l2, r2) -> list:
    """(peak, left, right) for every nonempty proper suffix of l1 that is a
    proper prefix of l2.  Works on words and on encoded strings alike."""
    out = []
    for k in range(1, min(len(l1), len(l2))):
        if l1[len(l1) - k :] == l2[:k]:
            out.append((l1 + l2[k:], r1 + l2[k:], l1[: len(l1) - k] + r2))
    return out


def critical_pairs(system: RewriteSystem) -> tuple[CriticalPair, ...]:
    """All overlap and inclusion pairs over ordered rule pairs, including a
    rule with itself, in a deterministic order."""
    pairs: list[CriticalPair] = []
    for r1 in system.rules:
        for r2 in system.rules:
            l1, l2 = r1.lhs, r2.lhs
            for peak, left, right in _overlap_obligations(l1, r1.rhs, l2, r2.rhs):
                pairs.append(CriticalPair(OVERLAP, peak, left, right))
            if len(l2) < len(l1):
                for p in range(len(l1) - len(l2) + 1):
                    if l1[p : p + len(l2)] == l2:
                        inner = l1[:p] + r2.rhs + l1[p + len(l2) :]
                        pairs.append(CriticalPair(INCLUSION, l1, r1.rhs, inner))
    return tuple(pairs)


def is_locally_confluent(
    system: RewriteSystem,
) -> tuple[bool, Optional[CriticalPair]]:
    """Check every critical pair; returns (True, None) or (False, first failure)."""
    for pair in critical_pairs(system):
        if system.reduce(pair.left) != system.reduce(pair.right):
            return False, pair
    return True, None


@dataclass(frozen=True)
class Completion:
    """Outcome of a completion run.

    ``added`` holds one tuple of rules per pass; ``examined`` counts critical
    pair examinations (the max_steps budget dimension).
    """

    system: RewriteSystem
    status: str  # FINITE or BUDGET_EXHAUSTED
    passes: int
    examined: int
    added: tuple[tuple[Rule, ...], ...]

    @property
    def finite(self) -> bool:
        return self.status == FINITE

    @property
    def added_rules(self) -> tuple[Rule, ...]:
        return tuple(rule for batch in self.added for rule in batch)


def knuth_bendix(
    system: RewriteSystem,
    *,
    max_rules: int = 10_000,
    max_steps: int = 1_000_000,
) -> Completion:
    """Complete a rewriting system, or stop when a budget is exhausted.

    Works in passes: all currently pending critical pairs are examined in
    shortlex order of their peaks; each unresolved pair contributes a new
    rule whose sides are the reduced descendants, oriented by shortlex.
    After adding a rule all existing rules whose sides became reducible are
    re-reduced and re-oriented (rules with joinable sides are dropped), and
    the new rule's overlaps join the next pass.  The run is finite when a
    pass finds nothing unresolved.
    """
    if max_rules <= 0 or max_steps <= 0:
        raise ValueError("budget values must be positive")
    order = system.order
    matcher = system._matcher.copy()
    rules = matcher.rules_encoded()
    reduce = matcher.reduce_encoded

    # Encoded characters ascend with letter rank, so the shortlex key of an
    # encoded word is just (length, string).
    pending: list[tuple[int, str, str, str]] = []

    def push_overlaps(l1: str, r1: str, l2: str, r2: str) -> None:
        for k in range(1, min(len(l1), len(l2))):
            if l1[len(l1) - k :] == l2[:k]:
                peak = l1 + l2[k:]
                pending.append((len(peak), peak, r1 + l2[k:], l1[: len(l1) - k] + r2))

    items = list(rules.items())
    for l1, r1 in items:
        for l2, r2 in items:
            push_overlaps(l1, r1, l2, r2)
            if len(l2) < len(l1):
                p = l1.find(l2)
                while p >= 0:
                    pending.append(
                        (len(l1), l1, r1, l1[:p] + r2 + l1[p + len(l2) :])
                    )
                    p = l1.find(l2, p + 1)

    examined = 0
    added_total = 0
    passes: list[list[Rule]] = []
    exhausted = False

    def adjoin(a: str, b: str, batch: list[Rule]) -> bool:
        """Adjoin the oriented rule for a != b, inter-reducing affected rules;
        False when the rule budget is hit."""
        nonlocal added_total
        queue = [(a, b)]
        while queue:
            lhs, rhs = queue.pop()
            lhs = reduce(lhs)
            rhs = reduce(rhs)
            if lhs == rhs:
                continue
            if (len(lhs), lhs) < (len(rhs), rhs):
                lhs, rhs = rhs, lhs
            if added_total >= max_rules:
                return False
            matcher.add_encoded(lhs, rhs)
            added_total += 1
            batch.append(Rule(matcher.decode(lhs), matcher.decode(rhs)))
            for l2, r2 in list(rules.items()):
                push_overlaps(lhs, rhs, l2, r2)
                if l2 != lhs:
                    push_overlaps(l2, r2, lhs, rhs)
            for l2, r2 in list(rules.items()):
                if l2 == lhs:
                    continue
                if lhs in l2:
                    matcher.remove_encoded(l2)
                    queue.append((l2, r2))
                elif lhs in r2:
                    matcher.add_encoded(l2, reduce(r2))
        return True

    while pending and not exhausted:
        batch_pairs = sorted(pending)
        pending = []
        added_now: list[Rule] = []
        for _, _peak, left, right in batch_pairs:
            if examined >= max_steps:
                exhausted = True
                break
            examined += 1
            a = reduce(left)
            b = reduce(right)
            if a == b:
                continue
            if not adjoin(a, b, added_now):
                exhausted = True
                break
        passes.append(added_now)

    final = RewriteSystem(order, [Rule(l, r) for l, r in matcher.items()])
    status = BUDGET_EXHAUSTED if exhausted else FINITE
    return Completion(final, status, len(passes), examined, tuple(tuple(p) for p in passes))
