"""Permutation-conjugacy automorphisms of F_n.

A PC automorphism sends every ``x_i`` to ``w_i^-1 x_{pi(i)}^{e_i} w_i``.  The
extended loop braid group embeds in Aut(F_n) with exactly this image.

Composition convention: ``compose(f, g)`` is the map ``x -> f(g(x))``.  With
this choice the braid word ``u v`` evaluates to ``compose(eval(u), eval(v))``
and every defining relation of the loop braid presentations holds.  The
induced permutations then satisfy ``pi_{f.g}(i) = pi_f(pi_g(i))``.

Shape recognition certifies the PC *shape* of a tuple of images only; it does
not prove that the endomorphism is invertible.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple, Optional, Sequence

from . import _kernels
from .free_group import FreeWord, _split_conjugate


class PCShape(NamedTuple):
    permutation: tuple[int, ...]
    signs: tuple[int, ...]
    conjugators: tuple[FreeWord, ...]


def _shape_of(rank: int, raw: Sequence[tuple]) -> Optional[PCShape]:
    perm, signs, conj = [], [], []
    for w in raw:
        split = _split_conjugate(w)
        if split is None:
            return None
        core, tail = split
        perm.append(abs(core))
        signs.append(1 if core > 0 else -1)
        conj.append(FreeWord._trusted(rank, tail))
    if sorted(perm) != list(range(1, rank + 1)):
        return None
    return PCShape(tuple(perm), tuple(signs), tuple(conj))


def recognize_pc_shape(rank: int, images: Sequence[FreeWord]) -> Optional[PCShape]:
    """Extract ``(pi, signs, conjugators)`` from generator images, or ``None``."""
    if len(images) != rank:
        return None
    for img in images:
        if img.rank != rank:
            raise ValueError(f"image of rank {img.rank} in a rank-{rank} automorphism")
    return _shape_of(rank, [img.signed for img in images])


class PCAut:
    """A permutation-conjugacy automorphism, stored by its generator images."""

    __slots__ = ("rank", "_raw", "_shape")

    def __init__(self, rank: int, images: Sequence):
        if rank < 1:
            raise ValueError(f"rank must be positive, got {rank}")
        words = [img if isinstance(img, FreeWord) else FreeWord(rank, img) for img in images]
        shape = recognize_pc_shape(rank, words)
        if shape is None:
            raise ValueError("images are not of permutation-conjugacy shape")
        self.rank = rank
        self._raw = tuple(w.signed for w in words)
        self._shape = shape

    @classmethod
    def _from_raw(cls, rank: int, raw: tuple) -> "PCAut":
        shape = _shape_of(rank, raw)
        if shape is None:
            raise AssertionError("composition left the permutation-conjugacy group")
        self = object.__new__(cls)
        self.rank = rank
        self._raw = raw
        self._shape = shape
        return self

    @property
    def images(self) -> tuple[FreeWord, ...]:
        return tuple(FreeWord._trusted(self.rank, w) for w in self._raw)

    @property
    def raw_images(self) -> tuple[tuple[int, ...], ...]:
        return self._raw

    @property
    def permutation(self) -> tuple[int, ...]:
        return self._shape.permutation

    @property
    def signs(self) -> tuple[int, ...]:
        return self._shape.signs

    @property
    def conjugators(self) -> tuple[FreeWord, ...]:
        return self._shape.conjugators

    def image(self, i: int) -> FreeWord:
        return FreeWord._trusted(self.rank, self._raw[i - 1])

    def __call__(self, u: FreeWord) -> FreeWord:
        return apply(self, u)

    def __matmul__(self, other: "PCAut") -> "PCAut":
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, PCAut):
            return NotImplemented
        return self.rank == other.rank and self._raw == other._raw

    def __hash__(self):
        return hash((self.rank, self._raw))

    def is_identity(self) -> bool:
        return all(w == (i,) for i, w in enumerate(self._raw, 1))

    def total_length(self) -> int:
        return sum(len(w) for w in self._raw)

    def __repr__(self):
        return f"PCAut({self.rank}, {[str(w) for w in self.images]})"

    def __str__(self):
        return format_automorphism(self)


def _check(f: PCAut, g) -> None:
    if f.rank != g.rank:
        raise ValueError(f"rank mismatch: {f.rank} vs {g.rank}")


@lru_cache(maxsize=None)
def identity(n: int) -> PCAut:
    if n < 1:
        raise ValueError(f"rank must be positive, got {n}")
    return PCAut._from_raw(n, tuple((i,) for i in range(1, n + 1)))


def _with(n: int, changes: dict) -> PCAut:
    raw = [(i,) for i in range(1, n + 1)]
    for i, w in changes.items():
        raw[i - 1] = w
    return PCAut._from_raw(n, tuple(raw))


def _adjacent(n: int, i: int, name: str) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"{name}_{i} needs 1 <= i <= {n - 1}")


@lru_cache(maxsize=None)
def generator_sigma(n: int, i: int) -> PCAut:
    """``x_i -> x_{i+1}``, ``x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}``."""
    _adjacent(n, i, "sigma")
    return _with(n, {i: (i + 1,), i + 1: (-(i + 1), i, i + 1)})


@lru_cache(maxsize=None)
def generator_sigma_inverse(n: int, i: int) -> PCAut:
    """Inverse of sigma_i: ``x_i -> x_i x_{i+1} x_i^-1``, ``x_{i+1} -> x_i``."""
    _adjacent(n, i, "sigma")
    return _with(n, {i: (i, i + 1, -i), i + 1: (i,)})


@lru_cache(maxsize=None)
def generator_rho(n: int, i: int) -> PCAut:
    _adjacent(n, i, "rho")
    return _with(n, {i: (i + 1,), i + 1: (i,)})


@lru_cache(maxsize=None)
def generator_tau(n: int, i: int) -> PCAut:
    if not 1 <= i <= n:
        raise ValueError(f"tau_{i} needs 1 <= i <= {n}")
    return _with(n, {i: (-i,)})


@lru_cache(maxsize=None)
def generator_alpha(n: int, i: int, j: int, exponent: int = 1) -> PCAut:
    """Basis-conjugating automorphism ``x_i -> x_j^-1 x_i x_j`` (or its inverse)."""
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"alpha_{i},{j} needs distinct indices in 1..{n}")
    if exponent == 1:
        return _with(n, {i: (-j, i, j)})
    if exponent == -1:
        return _with(n, {i: (j, i, -j)})
    raise ValueError("exponent must be +1 or -1")


def compose(f: PCAut, g: PCAut) -> PCAut:
    """``x -> f(g(x))``: the value of the word "f then g"."""
    _check(f, g)
    sub = _kernels.substitute
    raw = tuple(sub(f._raw, w) for w in g._raw)
    return PCAut._from_raw(f.rank, raw)


def compose_all(n: int, factors) -> PCAut:
    acc = identity(n)
    for f in factors:
        acc = compose(acc, f)
    return acc


def apply(f: PCAut, u: FreeWord) -> FreeWord:
    _check(f, u)
    return FreeWord._trusted(f.rank, _kernels.substitute(f._raw, u.signed))


def equals(f: PCAut, g: PCAut) -> bool:
    _check(f, g)
    return f._raw == g._raw


def permutation(f: PCAut) -> tuple[int, ...]:
    return f.permutation


def signs(f: PCAut) -> tuple[int, ...]:
    return f.signs


def first_difference(f: PCAut, g: PCAut) -> Optional[int]:
    """Smallest generator index whose images under ``f`` and ``g`` differ."""
    _check(f, g)
    for i, (a, b) in enumerate(zip(f._raw, g._raw), 1):
        if a != b:
            return i
    return None


def format_automorphism(f: PCAut) -> str:
    lines = [f"x_{i} -> {w}" for i, w in enumerate(f.images, 1)]
    lines.append(f"perm: [{', '.join(map(str, f.permutation))}]")
    lines.append(f"signs: [{', '.join(map(str, f.signs))}]")
    return "\n".join(lines)
