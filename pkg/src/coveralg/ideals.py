"""Monomial ideals by minimal generators.

Used as an independent check on the cover computations: the symbolic power
of the cover ideal is an intersection of powers of monomial primes, worked out
here with lcm's and divisibility only.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .complex_core import SimplicialComplex, dual, minimal_vertex_covers
from .limits import GuardExceeded, get_limits

Monomial = tuple[int, ...]


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _guard(count: int, what: str) -> None:
    allowed = get_limits().max_ideal_generators
    if count > allowed:
        raise GuardExceeded("max_ideal_generators", count, allowed, what)


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    generators: tuple[Monomial, ...]

    def contains(self, mono: Monomial) -> bool:
        return any(divides(g, mono) for g in self.generators)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return all(other.contains(g) for g in self.generators)

    def to_dict(self) -> dict:
        return {"n": self.n, "generators": [list(g) for g in self.generators]}

    @classmethod
    def from_dict(cls, data: dict) -> "MonomialIdeal":
        return minimalize([tuple(g) for g in data["generators"]], n=data["n"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def minimalize(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    """Divisibility-minimal generators, sorted by degree then lexicographically."""
    uniq = {tuple(g) for g in gens}
    if not uniq:
        raise ValueError("an ideal needs at least one generator")
    lengths = {len(g) for g in uniq}
    if len(lengths) != 1 or (n is not None and lengths != {n}):
        raise ValueError("generators must all have the ambient length")
    ordered = sorted(uniq, key=lambda g: (sum(g), g))
    kept: list[Monomial] = []
    for g in ordered:
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    return MonomialIdeal(len(ordered[0]), tuple(kept))


def product(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _guard(len(i.generators) * len(j.generators), "ideal product")
    return minimalize(
        (tuple(x + y for x, y in zip(a, b)) for a in i.generators for b in j.generators), n=i.n
    )


def power(i: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise ValueError("k must be at least 1")
    out = i
    for _ in range(k - 1):
        out = product(out, i)
    return out


def intersect(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    if i.n != j.n:
        raise ValueError("ideals live in different polynomial rings")
    _guard(len(i.generators) * len(j.generators), "ideal intersection")
    return minimalize((lcm(a, b) for a in i.generators for b in j.generators), n=i.n)


def squarefree(n: int, support: Iterable[int]) -> Monomial:
    s = set(support)
    return tuple(int(v in s) for v in range(1, n + 1))


def facet_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    return minimalize((squarefree(cx.n, f) for f in cx.facets), n=cx.n)


def cover_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    out = minimalize((squarefree(cx.n, c) for c in minimal_vertex_covers(cx)), n=cx.n)
    assert out == facet_ideal(dual(cx))
    return out


def prime_power(n: int, support: Iterable[int], k: int) -> MonomialIdeal:
    """Generators of P_F^k: every degree-k monomial in the variables of F."""
    sup = sorted(set(support))
    gens = []
    for combo in itertools.combinations_with_replacement(sup, k):
        e = [0] * n
        for v in combo:
            e[v - 1] += 1
        gens.append(tuple(e))
    _guard(len(gens), "prime power")
    return minimalize(gens, n=n)


def symbolic_power(cx: SimplicialComplex, k: int) -> MonomialIdeal:
    """Intersection over facets F of P_F^k: the k-th symbolic power of the cover ideal."""
    if k < 1:
        raise ValueError("k must be at least 1")
    out = None
    for f in cx.facets:
        p = prime_power(cx.n, f, k)
        out = p if out is None else intersect(out, p)
    return out


@dataclass(frozen=True)
class PowerComparison:
    k: int
    equal: bool
    witness: Monomial | None
    symbolic: MonomialIdeal
    ordinary: MonomialIdeal

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "equal": self.equal,
            "witness": None if self.witness is None else list(self.witness),
            "symbolic_generators": len(self.symbolic.generators),
            "ordinary_generators": len(self.ordinary.generators),
        }


def symbolic_equals_ordinary(cx: SimplicialComplex, k: int) -> PowerComparison:
    """Compare the k-th symbolic and ordinary powers of the facet ideal of ``cx``.

    The witness, when the powers differ, is the first symbolic generator (by
    degree, then lexicographically) outside the ordinary power.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    symbolic = symbolic_power(dual(cx), k)
    ordinary = power(facet_ideal(cx), k)
    assert ordinary <= symbolic, "ordinary power must lie in the symbolic power"
    witness = next((g for g in symbolic.generators if not ordinary.contains(g)), None)
    return PowerComparison(k, witness is None, witness, symbolic, ordinary)


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) or "1"
