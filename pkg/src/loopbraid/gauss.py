"""Braid Gauss diagrams for tau-free welded braid words.

A diagram has ``n`` intervals, one per strand, named by the top position at
which the strand enters.  Crossings become signed arrows from the
over-strand (tail) to the under-strand (head), kept as a time-ordered event
list.  ``permutation[i-1]`` is the bottom position where strand ``i`` exits,
i.e. the label on the right end of interval ``i``.

Moves: ``O2`` deletes (or inserts) an adjacent cancelling pair, ``O3``
reverses a triangle of three arrows, ``TC`` swaps two adjacent arrows that
share a tail.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import permutations as _perms
from typing import NamedTuple, Union

from .words import BraidWord, GeneratorToken, equal, evaluate

OMEGA2 = "O2"
OMEGA3 = "O3"
TAIL_COMMUTE = "TC"
_MOVE_ALIASES = {
    "O2": OMEGA2, "OMEGA2": OMEGA2, "Ω2": OMEGA2,
    "O3": OMEGA3, "OMEGA3": OMEGA3, "Ω3": OMEGA3,
    "TC": TAIL_COMMUTE,
}


class UnsupportedWordError(ValueError):
    """The word contains tau, which has no Gauss diagram encoding."""


class MoveNotApplicable(ValueError):
    pass


class Arrow(NamedTuple):
    tail: int
    head: int
    sign: int


@dataclass(frozen=True)
class GaussDiagram:
    strands: int
    arrows: tuple[Arrow, ...]
    permutation: tuple[int, ...]

    def __post_init__(self):
        n = self.strands
        if n < 1:
            raise ValueError(f"strand count must be positive, got {n}")
        arrows = tuple(Arrow(*a) for a in self.arrows)
        for t, a in enumerate(arrows, 1):
            if not (1 <= a.tail <= n and 1 <= a.head <= n):
                raise ValueError(f"arrow {t} has an interval outside 1..{n}")
            if a.tail == a.head:
                raise ValueError(f"arrow {t} joins interval {a.tail} to itself")
            if a.sign not in (1, -1):
                raise ValueError(f"arrow {t} has sign {a.sign}")
        perm = tuple(self.permutation)
        if sorted(perm) != list(range(1, n + 1)):
            raise ValueError(f"{list(perm)} is not a permutation of 1..{n}")
        object.__setattr__(self, "arrows", arrows)
        object.__setattr__(self, "permutation", perm)

    def __len__(self):
        return len(self.arrows)


def from_word(w: BraidWord) -> GaussDiagram:
    """Gauss diagram of a tau-free word; rho contributes wiring only."""
    at = list(range(1, w.strands + 1))  # at[p] = strand at position p + 1
    arrows = []
    for t in w.tokens:
        i = t.index
        if t.kind == "t":
            raise UnsupportedWordError("tau has no Gauss diagram encoding")
        if t.kind == "s":
            arrows.append(Arrow(at[i], at[i - 1], 1))
        elif t.kind == "S":
            arrows.append(Arrow(at[i - 1], at[i], -1))
        at[i - 1], at[i] = at[i], at[i - 1]
    exit_pos = [0] * w.strands
    for p, s in enumerate(at, 1):
        exit_pos[s - 1] = p
    return GaussDiagram(w.strands, tuple(arrows), tuple(exit_pos))


def realize(g: GaussDiagram) -> BraidWord:
    """A tau-free word ``w`` with ``from_word(w) == g``.

    For each arrow the strand at the lower position is carried up by rho
    moves until the two strands are adjacent, in the order the crossing
    sign needs; a final rho block realizes the permutation.
    """
    n = g.strands
    at = list(range(1, n + 1))
    pos = {s: p for p, s in enumerate(at, 1)}
    toks: list[GeneratorToken] = []

    def swap(k):
        # exchange positions k and k+1
        a, b = at[k - 1], at[k]
        at[k - 1], at[k] = b, a
        pos[a], pos[b] = k + 1, k

    for a in g.arrows:
        lo, hi = sorted((pos[a.tail], pos[a.head]))
        mover = at[lo - 1]
        for k in range(lo, hi - 1):
            toks.append(GeneratorToken("r", k))
            swap(k)
        # the crossing sits at positions (hi-1, hi); sigma needs the tail on
        # top position hi, sigma^-1 needs it at hi-1
        want_low = a.head if a.sign == 1 else a.tail
        if mover != want_low:
            toks.append(GeneratorToken("r", hi - 1))
            swap(hi - 1)
        toks.append(GeneratorToken("s" if a.sign == 1 else "S", hi - 1))
        swap(hi - 1)

    target = g.permutation
    for end in range(n - 1, 0, -1):
        for k in range(1, end + 1):
            if target[at[k - 1] - 1] > target[at[k] - 1]:
                toks.append(GeneratorToken("r", k))
                swap(k)
    return BraidWord(n, tuple(toks))


# sigma-sign triples (e1, e2, e3) for which s1^e1 s2^e2 s1^e3 = s2^e3 s1^e2 s2^e1;
# the two missing triples give cyclic arrow triangles and are not moves
R3_SIGN_VARIANTS = ((1, 1, 1), (1, 1, -1), (1, -1, -1), (-1, 1, 1), (-1, -1, 1), (-1, -1, -1))


def _r3_words(e):
    k = {1: "s", -1: "S"}
    lhs = [GeneratorToken(k[e[0]], 1), GeneratorToken(k[e[1]], 2), GeneratorToken(k[e[2]], 1)]
    rhs = [GeneratorToken(k[e[2]], 2), GeneratorToken(k[e[1]], 1), GeneratorToken(k[e[0]], 2)]
    return BraidWord(3, tuple(lhs)), BraidWord(3, tuple(rhs))


def _omega3_templates():
    out = set()
    for e in R3_SIGN_VARIANTS:
        for w in _r3_words(e):
            out.add(from_word(w).arrows)
    return frozenset(out)


OMEGA3_TEMPLATES = _omega3_templates()


def _matches_template(triple) -> bool:
    intervals = sorted({x for a in triple for x in (a.tail, a.head)})
    if len(intervals) != 3:
        return False
    for image in _perms(intervals):
        relabel = dict(zip((1, 2, 3), image))
        for tpl in OMEGA3_TEMPLATES:
            if all(
                Arrow(relabel[p.tail], relabel[p.head], p.sign) == a for p, a in zip(tpl, triple)
            ):
                return True
    return False


def _replace(g: GaussDiagram, start: int, stop: int, new) -> GaussDiagram:
    arrows = g.arrows[:start] + tuple(new) + g.arrows[stop:]
    return GaussDiagram(g.strands, arrows, g.permutation)


Location = Union[int, tuple]


def apply_gauss_move(g: GaussDiagram, move: str, location: Location) -> GaussDiagram:
    """Apply a wReidemeister move at 1-based time ``location``.

    ``O2`` with an int deletes arrows ``t, t+1``; with ``(t, tail, head,
    sign)`` it inserts ``(tail, head, sign), (tail, head, -sign)`` so the
    first new arrow gets time ``t``.  ``O3`` reverses arrows ``t..t+2``.
    ``TC`` swaps arrows ``t, t+1``.
    """
    kind = _MOVE_ALIASES.get(move.upper() if move.isascii() else move)
    if kind is None:
        raise ValueError(f"unknown Gauss move {move!r}")
    arrows = g.arrows

    if kind == OMEGA2 and isinstance(location, tuple):
        t, tail, head, sign = location
        if not 1 <= t <= len(arrows) + 1:
            raise MoveNotApplicable(f"insertion time {t} outside 1..{len(arrows) + 1}")
        if sign not in (1, -1):
            raise MoveNotApplicable(f"bad sign {sign}")
        try:
            return _replace(g, t - 1, t - 1, [Arrow(tail, head, sign), Arrow(tail, head, -sign)])
        except ValueError as exc:
            raise MoveNotApplicable(str(exc)) from None

    t = location
    if not isinstance(t, int):
        raise MoveNotApplicable(f"bad location {location!r} for {kind}")
    width = 3 if kind == OMEGA3 else 2
    if not 1 <= t <= len(arrows) - width + 1:
        raise MoveNotApplicable(f"{kind} needs {width} arrows starting at time {t}")
    window = arrows[t - 1:t - 1 + width]

    if kind == OMEGA2:
        a, b = window
        if (a.tail, a.head) != (b.tail, b.head) or a.sign != -b.sign:
            raise MoveNotApplicable(f"arrows {t}, {t + 1} are not a cancelling pair")
        return _replace(g, t - 1, t + 1, ())
    if kind == OMEGA3:
        if not _matches_template(window):
            raise MoveNotApplicable(f"arrows {t}..{t + 2} do not form an Omega3 triangle")
        return _replace(g, t - 1, t + 2, window[::-1])
    a, b = window
    if a.tail != b.tail or a.head == b.head:
        raise MoveNotApplicable(f"arrows {t}, {t + 1} do not share a tail with distinct heads")
    return _replace(g, t - 1, t + 1, (b, a))


def applicable_moves(g: GaussDiagram) -> list[tuple[str, int]]:
    """All (move, time) pairs where a deleting/reordering move applies."""
    out = []
    arrows = g.arrows
    for t in range(1, len(arrows)):
        a, b = arrows[t - 1], arrows[t]
        if (a.tail, a.head) == (b.tail, b.head) and a.sign == -b.sign:
            out.append((OMEGA2, t))
        if a.tail == b.tail and a.head != b.head:
            out.append((TAIL_COMMUTE, t))
        if t + 1 < len(arrows) and _matches_template(arrows[t - 1:t + 2]):
            out.append((OMEGA3, t))
    return out


def gauss_equal(g1: GaussDiagram, g2: GaussDiagram) -> bool:
    """Equality of the welded braids the two diagrams represent."""
    if g1.strands != g2.strands:
        raise ValueError(f"strand mismatch: {g1.strands} vs {g2.strands}")
    return equal(realize(g1), realize(g2))


def gauss_evaluate(g: GaussDiagram):
    return evaluate(realize(g))


def random_diagram(n: int, arrows: int, seed=None) -> GaussDiagram:
    if n < 2 and arrows:
        raise ValueError("arrows need at least two intervals")
    rng = random.Random(seed)
    out = []
    for _ in range(arrows):
        tail, head = rng.sample(range(1, n + 1), 2)
        out.append(Arrow(tail, head, rng.choice((1, -1))))
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return GaussDiagram(n, tuple(out), tuple(perm))


def to_dict(g: GaussDiagram) -> dict:
    return {
        "strands": g.strands,
        "arrows": [{"t": t, "from": a.tail, "to": a.head, "sign": a.sign} for t, a in enumerate(g.arrows, 1)],
        "perm": list(g.permutation),
    }


def dumps(g: GaussDiagram) -> str:
    """Canonical JSON text (one line, fixed key order, trailing newline)."""
    return json.dumps(to_dict(g)) + "\n"


def from_dict(d: dict) -> GaussDiagram:
    try:
        n = d["strands"]
        raw = d["arrows"]
        perm = d["perm"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"missing Gauss diagram field: {exc}") from None
    if not isinstance(n, int) or not isinstance(raw, list) or not isinstance(perm, list):
        raise ValueError("strands must be an int, arrows and perm lists")
    arrows = []
    for k, a in enumerate(raw, 1):
        if a.get("t") != k:
            raise ValueError(f"arrow times must be consecutive from 1; got t={a.get('t')} at entry {k}")
        arrows.append(Arrow(a["from"], a["to"], a["sign"]))
    return GaussDiagram(n, tuple(arrows), tuple(perm))


def loads(text: str) -> GaussDiagram:
    return from_dict(json.loads(text))
