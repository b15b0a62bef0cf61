"""Local rewriting of braid words by the welded (and extended) relations.

Each rule is a two-sided relation ``lhs = rhs`` applied in either direction
at one position.  Rules with an empty side act as cancellation one way and
insertion the other.

Search here is a semi-decision: a failure to connect two words within the
budget says nothing about whether they are equal.  Use
:func:`loopbraid.words.equal` to decide equality.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .words import BraidWord, GeneratorToken

FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class RewriteRule:
    family: str
    lhs: tuple[GeneratorToken, ...]
    rhs: tuple[GeneratorToken, ...]

    @property
    def name(self) -> str:
        lhs = " ".join(map(str, self.lhs)) or "1"
        rhs = " ".join(map(str, self.rhs)) or "1"
        return f"{self.family}: {lhs} = {rhs}"

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class MoveRecord:
    rule: str
    direction: str
    position: int

    def inverse(self) -> "MoveRecord":
        flipped = BACKWARD if self.direction == FORWARD else FORWARD
        return MoveRecord(self.rule, flipped, self.position)

    def to_json(self) -> str:
        return json.dumps({"rule": self.rule, "direction": self.direction, "position": self.position})

    @classmethod
    def from_json(cls, line: str) -> "MoveRecord":
        d = json.loads(line)
        return cls(d["rule"], d["direction"], int(d["position"]))


def _toks(text: str) -> tuple[GeneratorToken, ...]:
    # indices are validated by rule_table's bounds, not by a strand count
    out = []
    for tok in text.split():
        out.append(GeneratorToken(tok[0], int(tok[1:])))
    return tuple(out)


def _inverse_toks(toks):
    return tuple(t.inverse() for t in reversed(toks))


@lru_cache(maxsize=None)
def rule_table(n: int, extended: bool = False) -> tuple[RewriteRule, ...]:
    """All admissible instances of the relation families on ``n`` strands.

    Besides the defining relations, each non-commutation family also gets its
    letter-inverted form (e.g. ``S1 S2 S1 = S2 S1 S2``), and commutation
    families are instantiated for both signs of sigma.  Every rule is checked
    against the automorphism representation in the test suite.
    """
    if n < 1:
        raise ValueError(f"strand count must be positive, got {n}")
    m = n - 1
    raw: list[tuple[str, str, str]] = []

    def both(family, lhs, rhs):
        raw.append((family, lhs, rhs))
        l, r = _toks(lhs), _toks(rhs)
        raw.append((family, _fmt(_inverse_toks(l)), _fmt(_inverse_toks(r))))

    for i in range(1, n):
        raw.append(("R2", f"s{i} S{i}", ""))
        raw.append(("R2", f"S{i} s{i}", ""))
        raw.append(("V2", f"r{i} r{i}", ""))
    for i in range(1, n - 1):
        j = i + 1
        both("R3", f"s{i} s{j} s{i}", f"s{j} s{i} s{j}")
        raw.append(("V3", f"r{i} r{j} r{i}", f"r{j} r{i} r{j}"))
        both("M", f"r{j} r{i} s{j}", f"s{i} r{j} r{i}")
        both("F1", f"s{j} s{i} r{j}", f"r{i} s{j} s{i}")
    for i in range(1, m + 1):
        for j in range(i + 2, m + 1):
            for a in "sS":
                for b in "sS":
                    raw.append(("FC-ss", f"{a}{i} {b}{j}", f"{b}{j} {a}{i}"))
            raw.append(("FC-rr", f"r{i} r{j}", f"r{j} r{i}"))
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if abs(i - j) > 1:
                for a in "sS":
                    raw.append(("FC-rs", f"r{i} {a}{j}", f"{a}{j} r{i}"))
    if extended:
        for i in range(1, n + 1):
            raw.append(("T2", f"t{i} t{i}", ""))
            for j in range(i + 1, n + 1):
                raw.append(("T-comm", f"t{i} t{j}", f"t{j} t{i}"))
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                if abs(i - j) > 1:
                    for a in "sSr":
                        raw.append(("T-comm", f"{a}{i} t{j}", f"t{j} {a}{i}"))
            both("TR", f"t{i} r{i}", f"r{i} t{i + 1}")
            both("TS", f"t{i} s{i}", f"s{i} t{i + 1}")
            both("TSbar", f"t{i + 1} s{i}", f"r{i} S{i} r{i} t{i}")

    seen = set()
    rules = []
    for family, lhs, rhs in raw:
        l, r = _toks(lhs), _toks(rhs)
        key = frozenset((l, r))
        if key in seen:
            continue
        seen.add(key)
        rules.append(RewriteRule(family, l, r))
    return tuple(rules)


def _fmt(toks) -> str:
    return " ".join(map(str, toks))


class _Index:
    """Rules keyed by the first token of the side being replaced."""

    def __init__(self, rules: Iterable[RewriteRule]):
        self.rules = tuple(rules)
        self.by_name = {r.name: r for r in self.rules}
        self.by_first = defaultdict(list)
        self.insertions = []
        # fewest strands on which every rule token is valid
        self.strands_needed = 1
        for r in self.rules:
            for t in r.lhs + r.rhs:
                self.strands_needed = max(self.strands_needed, t.index + (t.kind != "t"))
        for r in self.rules:
            for direction, pat, rep in ((FORWARD, r.lhs, r.rhs), (BACKWARD, r.rhs, r.lhs)):
                entry = (r.name, direction, pat, rep)
                if pat:
                    self.by_first[pat[0]].append(entry)
                else:
                    self.insertions.append(entry)


_index_cache: dict = {}


def _index(rules) -> _Index:
    key = tuple(rules)
    idx = _index_cache.get(key)
    if idx is None:
        idx = _index_cache[key] = _Index(key)
    return idx


def _moves(toks: tuple, idx: _Index, max_length: Optional[int]):
    n = len(toks)
    for p in range(n + 1):
        if p < n:
            for name, direction, pat, rep in idx.by_first.get(toks[p], ()):
                k = len(pat)
                if toks[p:p + k] == pat:
                    new_len = n - k + len(rep)
                    if max_length is None or new_len <= max_length:
                        yield MoveRecord(name, direction, p), toks[:p] + rep + toks[p + k:]
        for name, direction, pat, rep in idx.insertions:
            if max_length is None or n + len(rep) <= max_length:
                yield MoveRecord(name, direction, p), toks[:p] + rep + toks[p:]


def _default_rules(w: BraidWord, extended: Optional[bool]):
    if extended is None:
        extended = any(t.kind == "t" for t in w.tokens)
    return rule_table(w.strands, extended)


def moves(w: BraidWord, rules=None, max_length: Optional[int] = None) -> list[tuple[MoveRecord, BraidWord]]:
    """Every single-rule rewrite of ``w`` with the record that produces it."""
    rules = _default_rules(w, None) if rules is None else rules
    idx = _index(rules)
    make = BraidWord._trusted if idx.strands_needed <= w.strands else BraidWord
    return [(rec, make(w.strands, toks)) for rec, toks in _moves(w.tokens, idx, max_length)]


def neighbors(w: BraidWord, rules=None, max_length: Optional[int] = None) -> list[BraidWord]:
    out, seen = [], set()
    for _, u in moves(w, rules, max_length):
        if u.tokens not in seen:
            seen.add(u.tokens)
            out.append(u)
    return out


class MoveError(ValueError):
    pass


def apply_move(w: BraidWord, record: MoveRecord, rules=None) -> BraidWord:
    # the extended table contains every non-extended rule under the same name
    rules = rule_table(w.strands, True) if rules is None else rules
    idx = _index(rules)
    rule = idx.by_name.get(record.rule)
    if rule is None:
        raise MoveError(f"unknown rule {record.rule!r}")
    pat, rep = (rule.lhs, rule.rhs) if record.direction == FORWARD else (rule.rhs, rule.lhs)
    p = record.position
    toks = w.tokens
    if not 0 <= p <= len(toks) or toks[p:p + len(pat)] != pat:
        raise MoveError(f"rule {record.rule!r} ({record.direction}) does not match at position {p}")
    return BraidWord(w.strands, toks[:p] + rep + toks[p + len(pat):])


def replay(w: BraidWord, path: Iterable[MoveRecord], rules=None) -> BraidWord:
    for rec in path:
        w = apply_move(w, rec, rules)
    return w


CONNECTED = "connected"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SearchResult:
    status: str
    path: Optional[tuple[MoveRecord, ...]] = None
    states: int = 0

    @property
    def connected(self) -> bool:
        return self.status == CONNECTED


def bfs_equivalent(
    w1: BraidWord,
    w2: BraidWord,
    max_depth: int,
    max_states: int = 200_000,
    rules=None,
    max_length: Optional[int] = None,
) -> SearchResult:
    """Bidirectional breadth-first search for a move path from ``w1`` to ``w2``.

    Returns ``connected`` with a replayable path of at most ``max_depth``
    moves, or ``inconclusive``.  An inconclusive result is not a proof that
    the words differ.  Insertions are limited so no intermediate word is
    longer than ``max_length`` (default: the longer input plus two).
    """
    if w1.strands != w2.strands:
        raise ValueError(f"strand mismatch: {w1.strands} vs {w2.strands}")
    if rules is None:
        ext = any(t.kind == "t" for t in w1.tokens + w2.tokens)
        rules = rule_table(w1.strands, ext)
    if max_length is None:
        max_length = max(len(w1), len(w2)) + 2
    idx = _index(rules)
    a, b = w1.tokens, w2.tokens
    if a == b:
        return SearchResult(CONNECTED, (), 1)

    # parent maps: state -> (previous state, record taking previous to state)
    fwd = {a: None}
    bwd = {b: None}
    ffront, bfront = [a], [b]
    df = db = 0

    def path_to(meet):
        left = []
        s = meet
        while fwd[s] is not None:
            prev, rec = fwd[s]
            left.append(rec)
            s = prev
        left.reverse()
        s = meet
        while bwd[s] is not None:
            prev, rec = bwd[s]
            left.append(rec.inverse())
            s = prev
        return tuple(left)

    while df + db < max_depth and ffront and bfront:
        forward_side = len(ffront) <= len(bfront)
        front, mine, other = (ffront, fwd, bwd) if forward_side else (bfront, bwd, fwd)
        nxt_front = []
        for s in front:
            for rec, t in _moves(s, idx, max_length):
                if t in mine:
                    continue
                mine[t] = (s, rec)
                if t in other:
                    return SearchResult(CONNECTED, path_to(t), len(fwd) + len(bwd))
                nxt_front.append(t)
                if len(fwd) + len(bwd) > max_states:
                    return SearchResult(INCONCLUSIVE, None, len(fwd) + len(bwd))
        if forward_side:
            ffront, df = nxt_front, df + 1
        else:
            bfront, db = nxt_front, db + 1
    return SearchResult(INCONCLUSIVE, None, len(fwd) + len(bwd))


_FREE_PAIRS = {("s", "S"), ("S", "s"), ("r", "r"), ("t", "t")}


def free_cancel(w: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs (sigma sigma^-1, rho rho, tau tau) to a fixpoint."""
    out: list[GeneratorToken] = []
    for t in w.tokens:
        if out and out[-1].index == t.index and (out[-1].kind, t.kind) in _FREE_PAIRS:
            out.pop()
        else:
            out.append(t)
    return BraidWord(w.strands, tuple(out))


def _better(x: tuple, y: tuple) -> bool:
    return (len(x), x) < (len(y), y)


def simplify(w: BraidWord, budget: int = 2000, rules=None, slack: int = 2) -> BraidWord:
    """Shorten ``w`` by free cancellation and bounded search over the move graph.

    Each round explores up to ``budget`` words no longer than the current best
    plus ``slack`` and restarts from the shortest (then lexicographically
    smallest) word found.  The result never gets longer.
    """
    rules = _default_rules(w, None) if rules is None else rules
    idx = _index(rules)
    best = free_cancel(w).tokens
    while True:
        start = best
        cap = len(start) + slack
        seen = {start}
        frontier = [start]
        while frontier and len(seen) < budget:
            nxt = []
            for s in frontier:
                for _, t in _moves(s, idx, cap):
                    if t in seen:
                        continue
                    seen.add(t)
                    nxt.append(t)
                    if _better(t, best):
                        best = t
                    if len(seen) >= budget:
                        break
                if len(seen) >= budget:
                    break
            frontier = nxt
        best = free_cancel(BraidWord(w.strands, best)).tokens
        if not len(best) < len(start):
            return BraidWord(w.strands, best)


def parse_path(text: str) -> list[MoveRecord]:
    return [MoveRecord.from_json(line) for line in text.splitlines() if line.strip()]


def format_path(path: Iterable[MoveRecord]) -> str:
    return "".join(rec.to_json() + "\n" for rec in path)

