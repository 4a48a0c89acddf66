"""Cycles and special cycles of the facet hypergraph.

A cycle is ``v1, F1, v2, ..., vs, Fs, v1`` with distinct vertices, distinct
facets and ``vi, v(i+1)`` in ``Fi``.  It is special when no ``Fi`` contains a
third cycle vertex.  Balanced means no special odd cycle; totally balanced
means no special cycle of length at least 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .complex_core import Facet, SimplicialComplex
from .limits import Budget


class InvalidCycle(ValueError):
    pass


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]
    facets: tuple[Facet, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "facets": [list(f) for f in self.facets]}

    @classmethod
    def from_dict(cls, data: dict) -> "CycleWitness":
        return cls(tuple(data["vertices"]), tuple(tuple(sorted(f)) for f in data["facets"]))

    def __str__(self) -> str:
        parts = []
        for v, f in zip(self.vertices, self.facets):
            parts.append(str(v))
            parts.append("{" + ",".join(map(str, f)) + "}")
        parts.append(str(self.vertices[0]))
        return ",".join(parts)


def validate_cycle(cx: SimplicialComplex, w: CycleWitness) -> None:
    s = len(w.vertices)
    if s < 2:
        raise InvalidCycle("a cycle has length at least 2")
    if len(w.facets) != s:
        raise InvalidCycle("a cycle alternates vertices and facets: counts differ")
    if len(set(w.vertices)) != s:
        raise InvalidCycle("cycle vertices are not pairwise distinct")
    facets = [tuple(sorted(f)) for f in w.facets]
    if len(set(facets)) != s:
        raise InvalidCycle("cycle facets are not pairwise distinct")
    known = set(cx.facets)
    for f in facets:
        if f not in known:
            raise InvalidCycle(f"{list(f)} is not a facet of the complex")
    for i in range(s):
        a, b = w.vertices[i], w.vertices[(i + 1) % s]
        if a not in facets[i] or b not in facets[i]:
            raise InvalidCycle(f"facet {list(facets[i])} does not contain both {a} and {b}")


def is_special(cx: SimplicialComplex, w: CycleWitness) -> bool:
    validate_cycle(cx, w)
    on_cycle = set(w.vertices)
    return all(len(on_cycle.intersection(f)) <= 2 for f in w.facets)


def iter_special_cycles(cx: SimplicialComplex, min_length: int = 2) -> Iterator[CycleWitness]:
    """Every special cycle once, in canonical orientation.

    Canonical: the first vertex is the least cycle vertex; for length >= 3 the
    second vertex is smaller than the last; for length 2 the first facet comes
    first in the complex's facet order.
    """
    facets = [frozenset(f) for f in cx.facets]
    by_vertex: dict[int, list[int]] = {}
    for j, f in enumerate(facets):
        for v in f:
            by_vertex.setdefault(v, []).append(j)
    budget = Budget("special cycle search")

    def extend(path_v: list[int], path_f: list[int], used_v: set[int]) -> Iterator[CycleWitness]:
        budget.tick()
        start, last = path_v[0], path_v[-1]
        for j in by_vertex.get(last, ()):
            if j in path_f:
                continue
            f = facets[j]
            # a new facet may only meet the cycle in its two endpoints
            if len(f & used_v) != 1 and not (start in f and len(f & used_v) == 2):
                continue
            if start in f and len(path_v) >= 2:
                s = len(path_v)
                if s >= min_length and (s > 2 or path_f[0] < j) and (s == 2 or path_v[1] < last):
                    yield CycleWitness(tuple(path_v), tuple(cx.facets[i] for i in path_f + [j]))
                # a facet holding the start vertex cannot be an interior facet
                continue
            for w in sorted(f):
                if w <= start or w in used_v:
                    continue
                # the new vertex must avoid every earlier facet of the path
                if any(w in facets[i] for i in path_f):
                    continue
                path_v.append(w)
                path_f.append(j)
                used_v.add(w)
                yield from extend(path_v, path_f, used_v)
                used_v.discard(w)
                path_f.pop()
                path_v.pop()

    for v in sorted(by_vertex):
        yield from extend([v], [], {v})


def _key(w: CycleWitness) -> tuple:
    return (w.vertices, w.facets)


def find_special_cycle(
    cx: SimplicialComplex, parity: str = "odd", min_length: int = 3
) -> CycleWitness | None:
    """Lexicographically least special cycle (by vertex sequence, then facets)."""
    if min_length < 2:
        raise ValueError("min_length must be at least 2")
    if parity not in ("odd", "any"):
        raise ValueError("parity must be 'odd' or 'any'")
    best = None
    for w in iter_special_cycles(cx, min_length):
        if parity == "odd" and w.length % 2 == 0:
            continue
        if best is None or _key(w) < _key(best):
            best = w
    return best


def has_special_cycle(cx: SimplicialComplex, parity: str = "odd", min_length: int = 3) -> bool:
    for w in iter_special_cycles(cx, min_length):
        if parity == "any" or w.length % 2 == 1:
            return True
    return False


def is_balanced(cx: SimplicialComplex) -> bool:
    return not has_special_cycle(cx, "odd", 3)


def is_totally_balanced(cx: SimplicialComplex) -> bool:
    return not has_special_cycle(cx, "any", 3)


def cycle_indicator(n: int, w: CycleWitness) -> tuple[int, ...]:
    on = set(w.vertices)
    return tuple(int(v in on) for v in range(1, n + 1))


def cycle_facet_indices(cx: SimplicialComplex, w: CycleWitness) -> list[int]:
    return [cx.facet_index(f) for f in w.facets]


def witness_from_sequence(seq: Sequence) -> CycleWitness:
    """``[v1, F1, v2, F2, ..., vs, Fs]`` (closing vertex optional) to a witness."""
    seq = list(seq)
    if len(seq) % 2 == 1:
        seq = seq[:-1]
    return CycleWitness(tuple(seq[0::2]), tuple(tuple(sorted(f)) for f in seq[1::2]))
