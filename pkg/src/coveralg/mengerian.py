"""Min-max (Mengerian) checks on the facet hypergraph.

For a weight vector c the min side is the least c-weight of a transversal
(vertex cover) and the max side is the largest number of facets, counted with
multiplicity, that fit under c.  A complex is Mengerian when both agree for
every c in N^n; here that is only ever checked on a finite grid unless a
theorem certifies it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import cycles, structure
from .complex_core import ComplexError, SimplicialComplex, minimal_transversals, minimal_vertex_covers
from .covers import box, max_packing
from .limits import Budget, check


@dataclass(frozen=True)
class MinMaxReport:
    c: tuple[int, ...]
    min_value: int
    max_value: int
    min_witness: tuple[int, ...]   # 0/1 transversal indicator a
    max_witness: tuple[int, ...]   # facet multiplicities b, in facet order

    @property
    def gap(self) -> int:
        return self.min_value - self.max_value

    def to_dict(self) -> dict:
        return {
            "c": list(self.c),
            "min": self.min_value,
            "max": self.max_value,
            "gap": self.gap,
            "min_witness": list(self.min_witness),
            "max_witness": list(self.max_witness),
        }


def _indicator(n: int, s: Iterable[int]) -> tuple[int, ...]:
    on = set(s)
    return tuple(int(v in on) for v in range(1, n + 1))


def min_max_gap(cx: SimplicialComplex, c: Iterable[int]) -> MinMaxReport:
    c = tuple(int(x) for x in c)
    if len(c) != cx.n or any(x < 0 for x in c):
        raise ComplexError(f"weight vector must be nonnegative of length {cx.n}")
    trans = minimal_vertex_covers(cx)
    weights = [sum(c[v - 1] for v in t) for t in trans]
    best = min(range(len(trans)), key=lambda i: (weights[i], i))
    value, b = max_packing(cx.facets, c)
    report = MinMaxReport(c, weights[best], value, _indicator(cx.n, trans[best]), b)
    _check_feasible(cx, report)
    return report


def _check_feasible(cx: SimplicialComplex, r: MinMaxReport) -> None:
    a = r.min_witness
    assert all(sum(a[v - 1] for v in f) >= 1 for f in cx.facets), "min witness is not a transversal"
    load = [0] * cx.n
    for f, mult in zip(cx.facets, r.max_witness):
        for v in f:
            load[v - 1] += mult
    assert all(x <= y for x, y in zip(load, r.c)), "max witness exceeds capacity"
    assert r.max_value <= r.min_value, "weak duality violated"


@dataclass(frozen=True)
class MengerianVerdict:
    status: str  # "no-gap-up-to" | "gap" | "certified-mengerian"
    bound: int
    witness: MinMaxReport | None = None
    reason: str | None = None

    def to_dict(self) -> dict:
        out = {"status": self.status, "bound": self.bound}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if self.reason:
            out["reason"] = self.reason
        return out


def grid_order(n: int, bound: int) -> np.ndarray:
    """{0..bound}^n sorted by (max entry, entry sum, lexicographic)."""
    g = box([bound] * n)
    keys = [g[:, i] for i in range(n - 1, -1, -1)] + [g.sum(axis=1), g.max(axis=1)]
    return g[np.lexsort(keys)]


def first_gap(cx: SimplicialComplex, bound: int) -> MinMaxReport | None:
    """Least c in {0..bound}^n (by ``grid_order``) where min exceeds max."""
    trans = minimal_vertex_covers(cx)
    t = np.zeros((len(trans), cx.n), dtype=np.int64)
    for r, s in enumerate(trans):
        t[r, [v - 1 for v in s]] = 1
    grid = grid_order(cx.n, bound)
    mins = (grid @ t.T).min(axis=1)
    # min <= 1 forces max == min: a positive-weight min means some facet sits inside supp(c)
    for row in np.nonzero(mins >= 2)[0]:
        c = tuple(int(x) for x in grid[row])
        value, _ = max_packing(cx.facets, c, target=int(mins[row]))
        if value < mins[row]:
            return min_max_gap(cx, c)
    return None


def is_mengerian_bounded(cx: SimplicialComplex, bound: int = 2, certify: bool = True) -> MengerianVerdict:
    if bound < 1:
        raise ValueError("bound must be at least 1")
    if certify:
        if structure.is_forest(cx):
            return MengerianVerdict("certified-mengerian", bound, reason="forest")
        if cycles.is_balanced(cx):
            return MengerianVerdict("certified-mengerian", bound, reason="no special odd cycle")
    gap = first_gap(cx, bound)
    if gap is not None:
        return MengerianVerdict("gap", bound, gap)
    return MengerianVerdict("no-gap-up-to", bound)


# -- Koenig property -------------------------------------------------------------


def _min_hitting_set(edges: Sequence[frozenset]) -> int:
    verts = sorted(set().union(*edges))
    for r in range(len(verts) + 1):
        for s in itertools.combinations(verts, r):
            ss = set(s)
            if all(e & ss for e in edges):
                return r
    raise AssertionError("unreachable")


def _max_disjoint(edges: Sequence[frozenset]) -> int:
    best = 0

    def go(i: int, used: frozenset, count: int):
        nonlocal best
        if count + (len(edges) - i) <= best:
            return
        if i == len(edges):
            best = max(best, count)
            return
        if not (edges[i] & used):
            go(i + 1, used | edges[i], count + 1)
        go(i + 1, used, count)

    go(0, frozenset(), 0)
    return best


def koenig_numbers(cx: SimplicialComplex) -> tuple[int, int]:
    """(minimum transversal size, maximum number of pairwise disjoint facets)."""
    check("max_vertices", cx.n, "Koenig numbers")
    check("max_facets", cx.m, "Koenig numbers")
    edges = [frozenset(f) for f in cx.facets]
    return _min_hitting_set(edges), _max_disjoint(edges)


def hereditary_koenig(cx: SimplicialComplex) -> bool:
    """Koenig equality for every partial substructure.

    A substructure keeps any nonempty set of facets and deletes any set of
    vertices from them; substructures where a facet becomes empty are skipped.
    """
    check("koenig_size", cx.m, "hereditary Koenig facet subsets")
    check("koenig_size", cx.n, "hereditary Koenig vertex deletions")
    budget = Budget("hereditary Koenig")
    seen: set[frozenset] = set()
    support = cx.support()
    for r in range(1, cx.m + 1):
        for chosen in itertools.combinations(cx.facets, r):
            for d in range(len(support) + 1):
                for removed in itertools.combinations(support, d):
                    budget.tick()
                    rem = set(removed)
                    edges = [frozenset(f) - rem for f in chosen]
                    if any(not e for e in edges):
                        continue
                    key = frozenset(edges)
                    if key in seen:
                        continue
                    seen.add(key)
                    uniq = sorted(key, key=sorted)
                    if _min_hitting_set(uniq) != _max_disjoint(uniq):
                        return False
    return True


def transversal_weights(cx: SimplicialComplex, c: Sequence[int]) -> list[int]:
    """Weights of all minimal transversals (used by tests as a plain oracle)."""
    return [sum(c[v - 1] for v in t) for t in minimal_transversals(cx.n, cx.facets)]
