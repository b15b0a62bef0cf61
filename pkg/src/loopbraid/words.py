"""Loop braid words in sigma_i^{+-1}, rho_i and tau_i.

Grammar: whitespace-separated tokens ``s<i>`` (sigma_i), ``S<i>``
(sigma_i^-1), ``r<i>`` (rho_i) and ``t<i>`` (tau_i), 1-based.  rho and tau
are involutions and have no inverse tokens.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from . import _kernels
from .automorphism import (
    PCAut,
    compose,
    equals,
    generator_rho,
    generator_sigma,
    generator_sigma_inverse,
    generator_tau,
    identity,
)

KINDS = ("s", "S", "r", "t")
_KIND_CODE = {"s": 0, "S": 1, "r": 2, "t": 3}
_TOKEN = re.compile(r"([sSrt])(\d+)$")


class ParseError(ValueError):
    """Bad braid word text; ``position`` is the character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at character {position})")
        self.position = position


class GeneratorToken(NamedTuple):
    kind: str
    index: int

    def __str__(self):
        return f"{self.kind}{self.index}"

    def inverse(self) -> "GeneratorToken":
        if self.kind == "s":
            return GeneratorToken("S", self.index)
        if self.kind == "S":
            return GeneratorToken("s", self.index)
        return self


def token_is_valid(tok: GeneratorToken, n: int) -> bool:
    if tok.kind == "t":
        return 1 <= tok.index <= n
    return tok.kind in _KIND_CODE and 1 <= tok.index <= n - 1


@dataclass(frozen=True)
class BraidWord:
    strands: int
    tokens: tuple[GeneratorToken, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be positive, got {self.strands}")
        toks = tuple(t if isinstance(t, GeneratorToken) else GeneratorToken(*t) for t in self.tokens)
        for t in toks:
            if not token_is_valid(t, self.strands):
                raise ValueError(f"token {t} invalid on {self.strands} strands")
        object.__setattr__(self, "tokens", toks)

    @classmethod
    def _trusted(cls, strands: int, tokens: tuple) -> "BraidWord":
        # caller guarantees valid GeneratorTokens
        w = object.__new__(cls)
        object.__setattr__(w, "strands", strands)
        object.__setattr__(w, "tokens", tokens)
        return w

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __str__(self):
        return format_word(self)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError(f"strand mismatch: {self.strands} vs {other.strands}")
        return BraidWord._trusted(self.strands, self.tokens + other.tokens)

    def sort_key(self):
        return (len(self.tokens), self.tokens)


def parse(text: str, n: int) -> BraidWord:
    if n < 1:
        raise ValueError(f"strand count must be positive, got {n}")
    tokens = []
    for m in re.finditer(r"\S+", text):
        tok = m.group(0)
        mt = _TOKEN.match(tok)
        if mt is None:
            raise ParseError(f"unknown token {tok!r}", m.start())
        gt = GeneratorToken(mt.group(1), int(mt.group(2)))
        if not token_is_valid(gt, n):
            bound = n if gt.kind == "t" else n - 1
            raise ParseError(f"index of {tok!r} outside 1..{bound} for {n} strands", m.start())
        tokens.append(gt)
    return BraidWord(n, tuple(tokens))


def format_word(w: BraidWord) -> str:
    return " ".join(map(str, w.tokens))


def codes(w: BraidWord) -> list[int]:
    return [4 * (t.index - 1) + _KIND_CODE[t.kind] for t in w.tokens]


def evaluate(w: BraidWord) -> PCAut:
    """The automorphism of F_n represented by ``w``."""
    raw = _kernels.evaluate_codes(w.strands, codes(w))
    return PCAut._from_raw(w.strands, raw)


def _same_strands(w1: BraidWord, w2: BraidWord) -> None:
    if w1.strands != w2.strands:
        raise ValueError(f"strand mismatch: {w1.strands} vs {w2.strands}")


def equal(w1: BraidWord, w2: BraidWord) -> bool:
    """Decide equality in the (extended) welded braid group."""
    _same_strands(w1, w2)
    return equals(evaluate(w1), evaluate(w2))


def permutation(w: BraidWord) -> tuple[int, ...]:
    """The permutation part of ``evaluate(w)``, computed by strand bookkeeping."""
    p = list(range(1, w.strands + 1))
    for t in w.tokens:
        if t.kind != "t":
            k = t.index
            p[k - 1], p[k] = p[k], p[k - 1]
    return tuple(p)


def strand_permutation(w: BraidWord) -> tuple[int, ...]:
    """Entry ``i`` is the bottom position of the strand entering at top position ``i``.

    This is the inverse of :func:`permutation`.
    """
    p = permutation(w)
    out = [0] * w.strands
    for i, j in enumerate(p, 1):
        out[j - 1] = i
    return tuple(out)


def is_pure(w: BraidWord) -> bool:
    return permutation(w) == tuple(range(1, w.strands + 1))


def is_extended(w: BraidWord) -> bool:
    return any(t.kind == "t" for t in w.tokens)


def inverse_word(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(t.inverse() for t in reversed(w.tokens)))


def permutation_word(n: int, perm: Iterable[int]) -> BraidWord:
    """A rho-word whose automorphism permutes generators by ``perm`` (one-line, 1-based)."""
    p = list(perm)
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"{p} is not a permutation of 1..{n}")
    swaps = []
    # bubble sort: p o t_{a1} o ... o t_{am} = id, so p = t_{am} o ... o t_{a1}
    for end in range(n - 1, 0, -1):
        for k in range(end):
            if p[k] > p[k + 1]:
                p[k], p[k + 1] = p[k + 1], p[k]
                swaps.append(k + 1)
    return BraidWord(n, tuple(GeneratorToken("r", k) for k in reversed(swaps)))


# Found once by exhaustive search over sigma/rho words of length <= 4 at n = 2
# (see tests/test_words.py); alpha_{1,2} is "s1 r1", alpha_{2,1} is "r1 s1".
_ALPHA_12 = (GeneratorToken("s", 1), GeneratorToken("r", 1))


def alpha_word(n: int, i: int, j: int) -> BraidWord:
    """A sigma/rho word evaluating to ``x_i -> x_j^-1 x_i x_j``."""
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"alpha_{i},{j} needs distinct indices in 1..{n}")
    rest = [k for k in range(1, n + 1) if k not in (i, j)]
    conj = permutation_word(n, [i, j, *rest])
    out: list[GeneratorToken] = []
    for t in (*conj.tokens, *_ALPHA_12, *inverse_word(conj).tokens):
        if out and out[-1] == t.inverse():
            out.pop()
        else:
            out.append(t)
    return BraidWord(n, tuple(out))


def generator_tokens(n: int, allow_tau: bool = False) -> list[GeneratorToken]:
    toks = [GeneratorToken(k, i) for i in range(1, n) for k in ("s", "S", "r")]
    if allow_tau:
        toks += [GeneratorToken("t", i) for i in range(1, n + 1)]
    return toks


def random_word(n: int, length: int, seed=None, allow_tau: bool = False) -> BraidWord:
    if length < 0:
        raise ValueError("length must be non-negative")
    alphabet = generator_tokens(n, allow_tau)
    if not alphabet:
        if length:
            raise ValueError(f"no generators on {n} strands")
        return BraidWord(n)
    rng = random.Random(seed)
    return BraidWord(n, tuple(rng.choice(alphabet) for _ in range(length)))


def evaluate_slow(w: BraidWord) -> PCAut:
    """Generator-by-generator fold through :func:`compose`; reference path."""
    make = {"s": generator_sigma, "S": generator_sigma_inverse, "r": generator_rho, "t": generator_tau}
    acc = identity(w.strands)
    for t in w.tokens:
        acc = compose(acc, make[t.kind](w.strands, t.index))
    return acc
