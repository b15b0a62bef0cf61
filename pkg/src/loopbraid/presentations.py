"""The four loop braid presentations as data, plus a relator verifier.

Each relation ``u = v`` is stored as the relator ``u v^-1`` and checked
against the identity automorphism.  "Different letters stand for different
indices": families are instantiated over pairwise-distinct index tuples only.
Symmetric families (e.g. far commutation) are instantiated for every ordered
admissible tuple, so ``s1 s3 = s3 s1`` and ``s3 s1 = s1 s3`` both appear.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Optional

from .automorphism import (
    PCAut,
    compose,
    first_difference,
    generator_alpha,
    generator_rho,
    generator_sigma,
    generator_sigma_inverse,
    generator_tau,
    identity,
)
from .words import alpha_word, evaluate, inverse_word

Letter = tuple[str, int]  # (symbol, +1 | -1)


def sym_sigma(i):
    return f"s{i}"


def sym_rho(i):
    return f"r{i}"


def sym_tau(i):
    return f"t{i}"


def sym_alpha(i, j):
    return f"a{i},{j}"


@dataclass(frozen=True)
class Relator:
    family: str
    indices: tuple[int, ...]
    word: tuple[Letter, ...]
    lhs: tuple[Letter, ...] = ()
    rhs: tuple[Letter, ...] = ()

    @property
    def ident(self) -> str:
        return f"{self.family}[{','.join(map(str, self.indices))}]"

    def __str__(self):
        return f"{_fmt(self.lhs)} = {_fmt(self.rhs) or '1'}"


def _fmt(letters) -> str:
    return " ".join(s if e == 1 else f"{s}^-1" for s, e in letters)


def _inv(letters):
    return tuple((s, -e) for s, e in reversed(letters))


def _rel(family, indices, lhs, rhs=()) -> Relator:
    lhs = tuple(x if isinstance(x, tuple) else (x, 1) for x in lhs)
    rhs = tuple(x if isinstance(x, tuple) else (x, 1) for x in rhs)
    return Relator(family, tuple(indices), lhs + _inv(rhs), lhs, rhs)


@dataclass
class Presentation:
    name: str
    n: int
    generators: tuple[str, ...]
    relators: list[Relator]
    interpretation: dict[str, PCAut]
    inverse_interpretation: dict[str, PCAut]
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        gens = set(self.generators)
        for r in self.relators:
            for s, _ in r.word:
                if s not in gens:
                    raise ValueError(f"relator {r.ident} uses undeclared generator {s}")


class ConfigurationError(Exception):
    pass


def _require(n):
    if n < 2:
        raise ValueError(f"presentations need n >= 2, got {n}")


def _distinct(n, k):
    return permutations(range(1, n + 1), k)


def ur_relators(n: int) -> list[Relator]:
    s, r = sym_sigma, sym_rho
    m = n - 1
    far = [(i, j) for i in range(1, m + 1) for j in range(1, m + 1) if abs(i - j) > 1]
    rels = []
    rels += [_rel("ss-far", (i, j), [s(i), s(j)], [s(j), s(i)]) for i, j in far]
    rels += [_rel("sss-braid", (i,), [s(i), s(i + 1), s(i)], [s(i + 1), s(i), s(i + 1)]) for i in range(1, n - 1)]
    rels += [_rel("rr-far", (i, j), [r(i), r(j)], [r(j), r(i)]) for i, j in far]
    rels += [_rel("rrr-braid", (i,), [r(i), r(i + 1), r(i)], [r(i + 1), r(i), r(i + 1)]) for i in range(1, n - 1)]
    rels += [_rel("rr-square", (i,), [r(i), r(i)]) for i in range(1, m + 1)]
    rels += [_rel("rs-far", (i, j), [r(i), s(j)], [s(j), r(i)]) for i, j in far]
    rels += [_rel("rrs-mixed", (i,), [r(i + 1), r(i), s(i + 1)], [s(i), r(i + 1), r(i)]) for i in range(1, n - 1)]
    rels += [_rel("ssr-welded", (i,), [s(i + 1), s(i), r(i + 1)], [r(i), s(i + 1), s(i)]) for i in range(1, n - 1)]
    return rels


def r_relators(n: int) -> list[Relator]:
    s, r, t = sym_sigma, sym_rho, sym_tau
    m = n - 1
    rels = []
    rels += [_rel("tt-comm", (i, j), [t(i), t(j)], [t(j), t(i)]) for i, j in _distinct(n, 2)]
    rels += [_rel("tt-square", (i,), [t(i), t(i)]) for i in range(1, n + 1)]
    far = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1) if abs(i - j) > 1]
    rels += [_rel("st-far", (i, j), [s(i), t(j)], [t(j), s(i)]) for i, j in far]
    rels += [_rel("rt-far", (i, j), [r(i), t(j)], [t(j), r(i)]) for i, j in far]
    rels += [_rel("tr", (i,), [t(i), r(i)], [r(i), t(i + 1)]) for i in range(1, m + 1)]
    rels += [_rel("ts", (i,), [t(i), s(i)], [s(i), t(i + 1)]) for i in range(1, m + 1)]
    rels += [
        _rel("ts-bar", (i,), [t(i + 1), s(i)], [r(i), (s(i), -1), r(i), t(i)])
        for i in range(1, m + 1)
    ]
    return rels


def pur_relators(n: int) -> list[Relator]:
    a = sym_alpha
    rels = []
    rels += [_rel("aa-disjoint", (i, j, k, l), [a(i, j), a(k, l)], [a(k, l), a(i, j)]) for i, j, k, l in _distinct(n, 4)]
    rels += [_rel("aa-same-target", (i, j, k), [a(i, k), a(j, k)], [a(j, k), a(i, k)]) for i, j, k in _distinct(n, 3)]
    rels += [
        _rel("a-aa-triangle", (i, j, k), [a(i, j), a(i, k), a(j, k)], [a(i, k), a(j, k), a(i, j)])
        for i, j, k in _distinct(n, 3)
    ]
    return rels


def plbe_relators(n: int) -> list[Relator]:
    a, t = sym_alpha, sym_tau
    rels = []
    rels += [_rel("aa-disjoint", (i, j, k, l), [a(i, j), a(k, l)], [a(k, l), a(i, j)]) for i, j, k, l in _distinct(n, 4)]
    rels += [_rel("aa-same-target", (i, j, k), [a(i, j), a(k, j)], [a(k, j), a(i, j)]) for i, j, k in _distinct(n, 3)]
    rels += [
        _rel("aa-a-triangle", (i, j, k), [a(i, j), a(k, j), a(i, k)], [a(i, k), a(i, j), a(k, j)])
        for i, j, k in _distinct(n, 3)
    ]
    rels += [_rel("tt-square", (i,), [t(i), t(i)]) for i in range(1, n + 1)]
    rels += [_rel("ta-source", (i, j), [t(i), a(i, j)], [a(i, j), t(i)]) for i, j in _distinct(n, 2)]
    rels += [_rel("ta-disjoint", (i, j, k), [t(i), a(j, k)], [a(j, k), t(i)]) for i, j, k in _distinct(n, 3)]
    rels += [_rel("ta-target", (i, j), [t(i), a(j, i), t(i)], [(a(j, i), -1)]) for i, j in _distinct(n, 2)]
    return rels


def _braid_interp(n, extended):
    fwd, bwd = {}, {}
    for i in range(1, n):
        fwd[sym_sigma(i)] = generator_sigma(n, i)
        bwd[sym_sigma(i)] = generator_sigma_inverse(n, i)
        fwd[sym_rho(i)] = bwd[sym_rho(i)] = generator_rho(n, i)
    if extended:
        for i in range(1, n + 1):
            fwd[sym_tau(i)] = bwd[sym_tau(i)] = generator_tau(n, i)
    return fwd, bwd


def _alpha_interp(n, closed_form=False):
    fwd, bwd = {}, {}
    for i, j in _distinct(n, 2):
        if closed_form:
            fwd[sym_alpha(i, j)] = generator_alpha(n, i, j)
            bwd[sym_alpha(i, j)] = generator_alpha(n, i, j, -1)
        else:
            w = alpha_word(n, i, j)
            fwd[sym_alpha(i, j)] = evaluate(w)
            bwd[sym_alpha(i, j)] = evaluate(inverse_word(w))
    return fwd, bwd


def ur_presentation(n: int) -> Presentation:
    _require(n)
    fwd, bwd = _braid_interp(n, False)
    gens = tuple(sym_sigma(i) for i in range(1, n)) + tuple(sym_rho(i) for i in range(1, n))
    return Presentation("UR", n, gens, ur_relators(n), fwd, bwd)


def r_presentation(n: int) -> Presentation:
    _require(n)
    fwd, bwd = _braid_interp(n, True)
    gens = (
        tuple(sym_sigma(i) for i in range(1, n))
        + tuple(sym_rho(i) for i in range(1, n))
        + tuple(sym_tau(i) for i in range(1, n + 1))
    )
    return Presentation("R", n, gens, ur_relators(n) + r_relators(n), fwd, bwd)


_DISTINCT_NOTE = "index tuples in every family are pairwise distinct"


def pur_presentation(n: int, closed_form: bool = False) -> Presentation:
    """Pure loop braid presentation; ``closed_form`` interprets alpha directly."""
    _require(n)
    fwd, bwd = _alpha_interp(n, closed_form)
    gens = tuple(sym_alpha(i, j) for i, j in _distinct(n, 2))
    return Presentation("PUR", n, gens, pur_relators(n), fwd, bwd, [_DISTINCT_NOTE])


def plbe_presentation(n: int, closed_form: bool = False) -> Presentation:
    _require(n)
    fwd, bwd = _alpha_interp(n, closed_form)
    for i in range(1, n + 1):
        fwd[sym_tau(i)] = bwd[sym_tau(i)] = generator_tau(n, i)
    gens = tuple(sym_alpha(i, j) for i, j in _distinct(n, 2)) + tuple(sym_tau(i) for i in range(1, n + 1))
    return Presentation("PLBE", n, gens, plbe_relators(n), fwd, bwd, [_DISTINCT_NOTE])


PRESENTATIONS: dict[str, Callable[[int], Presentation]] = {
    "ur": ur_presentation,
    "r": r_presentation,
    "pur": pur_presentation,
    "plbe": plbe_presentation,
}


@dataclass(frozen=True)
class RelatorResult:
    relator: Relator
    passed: bool
    witness: Optional[int] = None
    image: Optional[str] = None

    def as_dict(self) -> dict:
        d = {
            "id": self.relator.ident,
            "family": self.relator.family,
            "indices": list(self.relator.indices),
            "relation": str(self.relator),
            "pass": self.passed,
        }
        if not self.passed:
            d["witness"] = f"x{self.witness}"
            d["image"] = self.image
        return d


@dataclass(frozen=True)
class Report:
    name: str
    n: int
    results: tuple[RelatorResult, ...]
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[RelatorResult]:
        return [r for r in self.results if not r.passed]

    def as_dict(self) -> dict:
        return {
            "presentation": self.name,
            "n": self.n,
            "pass": self.passed,
            "relators": [r.as_dict() for r in self.results],
            "notes": list(self.notes),
        }

    def table(self) -> str:
        width = max([len(r.relator.ident) for r in self.results] + [8])
        lines = [f"{self.name} n={self.n}: {len(self.results)} relators, {len(self.failures)} failing"]
        for r in self.results:
            mark = "ok  " if r.passed else "FAIL"
            line = f"  {mark} {r.relator.ident:<{width}}  {r.relator}"
            if not r.passed:
                line += f"   [x{r.witness} -> {r.image}]"
            lines.append(line)
        return "\n".join(lines)


def evaluate_relator(p: Presentation, word) -> PCAut:
    acc = identity(p.n)
    for sym, e in word:
        table = p.interpretation if e == 1 else p.inverse_interpretation
        if sym not in table:
            raise ConfigurationError(f"no interpretation for generator {sym}")
        acc = compose(acc, table[sym])
    return acc


def verify(p: Presentation) -> Report:
    results = []
    one = identity(p.n)
    for rel in sorted(p.relators, key=lambda r: (r.family, r.indices)):
        img = evaluate_relator(p, rel.word)
        k = first_difference(img, one)
        if k is None:
            results.append(RelatorResult(rel, True))
        else:
            results.append(RelatorResult(rel, False, k, str(img.image(k))))
    return Report(p.name, p.n, tuple(results), tuple(p.notes))
