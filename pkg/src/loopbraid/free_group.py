"""Reduced words in the free group F_n on x_1, ..., x_n.

Letters are stored as nonzero ints (``i`` for ``x_i``, ``-i`` for its
inverse); :attr:`FreeWord.letters` exposes them as ``(index, exponent)``
pairs.  Text form is ``x1 x2^-1 x1``; the empty word prints as ``1``.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple, Optional

from . import _kernels


class FreeWord:
    """An immutable freely reduced word of a fixed rank."""

    __slots__ = ("rank", "_w", "_hash")

    def __init__(self, rank: int, letters: Iterable = ()):
        if rank < 1:
            raise ValueError(f"rank must be positive, got {rank}")
        raw = _normalize(letters)
        for a in raw:
            if a == 0 or abs(a) > rank:
                raise ValueError(f"letter index {abs(a)} out of range 1..{rank}")
        self.rank = rank
        self._w = _kernels.reduce_letters(raw)
        self._hash = None

    @classmethod
    def _trusted(cls, rank: int, w: tuple) -> "FreeWord":
        # w must already be reduced and in range
        self = object.__new__(cls)
        self.rank = rank
        self._w = w
        self._hash = None
        return self

    @classmethod
    def generator(cls, rank: int, index: int, exponent: int = 1) -> "FreeWord":
        if not 1 <= index <= rank:
            raise ValueError(f"generator index {index} out of range 1..{rank}")
        if exponent not in (1, -1):
            raise ValueError("exponent must be +1 or -1")
        return cls._trusted(rank, (index * exponent,))

    @property
    def letters(self) -> tuple[tuple[int, int], ...]:
        return tuple((abs(a), 1 if a > 0 else -1) for a in self._w)

    @property
    def signed(self) -> tuple[int, ...]:
        """Letters as signed ints."""
        return self._w

    def __len__(self):
        return len(self._w)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self._w)

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.rank == other.rank and self._w == other._w

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, self._w))
        return self._hash

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return multiply(self, other)

    def __invert__(self) -> "FreeWord":
        return invert(self)

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"FreeWord({self.rank}, {format_word(self)!r})"

    def conjugate(self, w: "FreeWord") -> "FreeWord":
        return conjugate(self, w)


def _normalize(letters) -> tuple:
    out = []
    for a in letters:
        if isinstance(a, tuple):
            index, exponent = a
            if exponent not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {exponent}")
            out.append(index * exponent)
        else:
            out.append(int(a))
    return tuple(out)


def _check_rank(u: FreeWord, v: FreeWord) -> None:
    if u.rank != v.rank:
        raise ValueError(f"rank mismatch: {u.rank} vs {v.rank}")


def reduce(rank: int, raw_letters: Iterable) -> FreeWord:
    """Freely reduce ``raw_letters`` (pairs or signed ints) in F_rank."""
    return FreeWord(rank, raw_letters)


def multiply(u: FreeWord, v: FreeWord) -> FreeWord:
    _check_rank(u, v)
    return FreeWord._trusted(u.rank, _kernels.reduce_letters(u._w + v._w))


def invert(u: FreeWord) -> FreeWord:
    return FreeWord._trusted(u.rank, _kernels.invert_letters(u._w))


def conjugate(u: FreeWord, w: FreeWord) -> FreeWord:
    """Return ``w^-1 u w``."""
    _check_rank(u, w)
    return FreeWord._trusted(u.rank, _kernels.conjugate_letters(u._w, w._w))


class GeneratorConjugate(NamedTuple):
    index: int
    sign: int
    conjugator: FreeWord


def _split_conjugate(w: tuple) -> Optional[tuple[int, tuple]]:
    # peel matched outer pairs; w is reduced so the core is cyclically reduced
    lo, hi = 0, len(w) - 1
    while lo < hi and w[lo] == -w[hi]:
        lo += 1
        hi -= 1
    if lo != hi:
        return None
    return w[lo], w[hi + 1:]


def as_conjugate_of_generator(u: FreeWord) -> Optional[GeneratorConjugate]:
    """Write ``u`` as ``w^-1 x_j^e w`` if possible.

    Returns ``(j, e, w)`` with ``w`` the minimal conjugator, or ``None`` when
    the cyclic core of ``u`` is not a single letter.
    """
    split = _split_conjugate(u._w)
    if split is None:
        return None
    core, tail = split
    return GeneratorConjugate(abs(core), 1 if core > 0 else -1, FreeWord._trusted(u.rank, tail))


def cyclic_core(u: FreeWord) -> FreeWord:
    w = u._w
    lo, hi = 0, len(w) - 1
    while lo < hi and w[lo] == -w[hi]:
        lo += 1
        hi -= 1
    return FreeWord._trusted(u.rank, w[lo:hi + 1])


_LETTER = re.compile(r"x(\d+)(\^-1)?$")


def parse_word(text: str, rank: int) -> FreeWord:
    """Parse ``x1 x2^-1 ...``; ``""`` and ``"1"`` are the empty word."""
    tokens = text.split()
    if tokens == ["1"]:
        return FreeWord(rank)
    letters = []
    for pos, tok in enumerate(tokens):
        m = _LETTER.match(tok)
        if not m:
            raise ValueError(f"bad free-group letter {tok!r} at token {pos}")
        index = int(m.group(1))
        if not 1 <= index <= rank:
            raise ValueError(f"letter {tok!r} at token {pos} out of range for rank {rank}")
        letters.append(-index if m.group(2) == "^-1" else index)
    return FreeWord(rank, letters)


def format_word(u: FreeWord) -> str:
    if not u._w:
        return "1"
    return " ".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in u._w)
