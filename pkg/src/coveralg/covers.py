"""k-covers, their orders and decompositions, and generators of the cover algebra.

A vector ``c`` in N^n is a k-cover when every facet has weight at least k.
Its order is the largest such k.  The algebra generators in degree k are the
indecomposable k-covers; they are searched exhaustively up to a degree bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import cycles, structure
from .complex_core import ComplexError, SimplicialComplex, minimal_vertex_covers, polarize
from .limits import Budget, check

CoverVector = tuple[int, ...]


def _vec(cx: SimplicialComplex, c: Iterable[int]) -> CoverVector:
    c = tuple(int(x) for x in c)
    if len(c) != cx.n:
        raise ComplexError(f"cover vector has length {len(c)}, complex has {cx.n} vertices")
    if any(x < 0 for x in c):
        raise ComplexError("cover vectors are nonnegative")
    return c


def incidence_array(cx: SimplicialComplex) -> np.ndarray:
    """Facet-by-vertex 0/1 array."""
    a = np.zeros((cx.m, cx.n), dtype=np.int64)
    for r, f in enumerate(cx.facets):
        a[r, [v - 1 for v in f]] = 1
    return a


def cover_order(cx: SimplicialComplex, c: Iterable[int]) -> int:
    c = _vec(cx, c)
    return min(sum(c[v - 1] for v in f) for f in cx.facets)


def is_k_cover(cx: SimplicialComplex, c: Iterable[int], k: int) -> bool:
    return cover_order(cx, c) >= k


def box(upper: Sequence[int]) -> np.ndarray:
    """All integer vectors 0 <= a <= upper, in lexicographic order."""
    size = math.prod(u + 1 for u in upper)
    check("search_size", size, "integer box enumeration")
    if not upper:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices(tuple(u + 1 for u in upper), dtype=np.int64)
    return grids.reshape(len(upper), -1).T


# -- packing minimal covers --------------------------------------------------


def max_packing(
    sets: Sequence[Sequence[int]], capacity: Sequence[int], target: int | None = None
) -> tuple[int, tuple[int, ...]]:
    """Maximize sum(b) subject to sum_j b_j * 1_{S_j} <= capacity.

    ``sets`` hold 1-based vertices.  Branch and bound, trying larger
    multiplicities first.  With ``target`` the search stops at the first
    packing reaching it.  Otherwise a second pass returns the
    lexicographically smallest optimal ``b``.
    """
    cap = list(capacity)
    idx = [[v - 1 for v in s] for s in sets]
    m = len(idx)
    budget = Budget("packing search")
    suffix_union = [set() for _ in range(m + 1)]
    suffix_min = [math.inf] * (m + 1)
    for j in range(m - 1, -1, -1):
        suffix_union[j] = suffix_union[j + 1] | set(idx[j])
        suffix_min[j] = min(suffix_min[j + 1], len(idx[j]))

    def upper(j: int) -> int:
        if j >= m:
            return 0
        if suffix_min[j] == 0:
            return math.inf
        return sum(cap[v] for v in suffix_union[j]) // suffix_min[j]

    best = [-1, None]
    b = [0] * m

    def dfs(j: int, total: int, goal: int | None, ascending: bool) -> bool:
        budget.tick()
        if j == m:
            if total > best[0]:
                best[0], best[1] = total, tuple(b)
            return goal is not None and total >= goal
        bound = total + upper(j)
        if goal is not None:
            if bound < goal:
                return False
        elif bound <= best[0]:
            return False
        hi = min((cap[v] for v in idx[j]), default=0)
        order = range(0, hi + 1) if ascending else range(hi, -1, -1)
        for x in order:
            b[j] = x
            for v in idx[j]:
                cap[v] -= x
            done = dfs(j + 1, total + x, goal, ascending)
            for v in idx[j]:
                cap[v] += x
            b[j] = 0
            if done:
                return True
        return False

    if target is not None:
        dfs(0, 0, target, False)
        return best[0], best[1]
    dfs(0, 0, None, False)
    value = best[0]
    best[0], best[1] = -1, None
    dfs(0, 0, value, True)
    return best[0], best[1]


def sigma(cx: SimplicialComplex, c: Iterable[int]) -> int:
    """Largest k such that c dominates a sum of k minimal vertex covers."""
    c = _vec(cx, c)
    return max_packing(minimal_vertex_covers(cx), c)[0]


# -- decompositions -----------------------------------------------------------


@dataclass(frozen=True)
class CoverDecomposition:
    parts: tuple[CoverVector, ...]
    claimed_orders: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "decomposable": True,
            "parts": [list(p) for p in self.parts],
            "orders": list(self.claimed_orders),
        }


@dataclass(frozen=True)
class NotDecomposable:
    sigma: int
    k: int

    def to_dict(self) -> dict:
        return {"decomposable": False, "sigma": self.sigma, "k": self.k}


def decompose_cover(cx: SimplicialComplex, c: Iterable[int], k: int) -> CoverDecomposition | NotDecomposable:
    """Write c as a sum of k 1-covers when possible.

    The parts are indicators of minimal vertex covers; whatever is left of c
    is added to the last part.
    """
    c = _vec(cx, c)
    if k < 1:
        raise ValueError("k must be at least 1")
    if cover_order(cx, c) < k:
        raise ComplexError(f"{list(c)} is not a {k}-cover")
    mins = minimal_vertex_covers(cx)
    value, b = max_packing(mins, c, target=k)
    if value < k:
        return NotDecomposable(sigma(cx, c), k)
    chosen = [s for s, mult in zip(mins, b) for _ in range(mult)][:k]
    parts = []
    for s in chosen:
        on = set(s)
        parts.append([int(v in on) for v in cx.vertices])
    used = np.sum(parts, axis=0)
    parts[-1] = list(np.array(parts[-1]) + (np.array(c) - used))
    parts_t = tuple(tuple(int(x) for x in p) for p in parts)
    return CoverDecomposition(parts_t, (1,) * k)


def is_decomposition(cx: SimplicialComplex, c: Sequence[int], dec: CoverDecomposition) -> bool:
    total = [sum(col) for col in zip(*dec.parts)]
    if total != list(c) or sum(dec.claimed_orders) < 1:
        return False
    return all(cover_order(cx, p) >= o for p, o in zip(dec.parts, dec.claimed_orders))


# -- minimal covers and generators --------------------------------------------


def minimal_k_covers(cx: SimplicialComplex, k: int) -> list[CoverVector]:
    """All componentwise-minimal k-covers, sorted lexicographically.

    Minimal k-covers have entries at most k, so the search runs over the box
    {0..k}^n.  A vector is minimal iff each positive entry lies on a facet of
    weight exactly k, which is re-checked on the output.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    inc = incidence_array(cx)
    grid = box([k] * cx.n)
    sums = grid @ inc.T
    is_cover = sums.min(axis=1) >= k
    grid, sums = grid[is_cover], sums[is_cover]
    tight = (sums == k).astype(np.int64) @ inc
    minimal = np.all((grid == 0) | (tight > 0), axis=1)
    out = [tuple(int(x) for x in row) for row in grid[minimal]]
    for c in out:
        assert max(c) <= k
        for i, x in enumerate(c):
            if x:
                lowered = c[:i] + (x - 1,) + c[i + 1 :]
                assert cover_order(cx, lowered) < k, "minimality post-check failed"
    return out


def is_minimal_k_cover(cx: SimplicialComplex, c: Sequence[int], k: int) -> bool:
    c = _vec(cx, c)
    if cover_order(cx, c) < k:
        return False
    return all(
        cover_order(cx, c[:i] + (x - 1,) + c[i + 1 :]) < k for i, x in enumerate(c) if x
    )


def find_split(cx: SimplicialComplex, c: Iterable[int], k: int) -> tuple[CoverVector, CoverVector] | None:
    """Least a (lexicographically) with 0 != a != c and o(a) + o(c - a) >= k."""
    c = _vec(cx, c)
    if k < 1:
        raise ValueError("k must be at least 1")
    if cover_order(cx, c) < k:
        raise ComplexError(f"{list(c)} is not a {k}-cover")
    inc = incidence_array(cx)
    a = box(c)[1:-1]
    if len(a) == 0:
        return None
    cv = np.array(c, dtype=np.int64)
    oa = (a @ inc.T).min(axis=1)
    ob = ((cv - a) @ inc.T).min(axis=1)
    hits = np.nonzero(oa + ob >= k)[0]
    if len(hits) == 0:
        return None
    first = a[hits[0]]
    return tuple(int(x) for x in first), tuple(int(x) for x in cv - first)


def is_indecomposable(cx: SimplicialComplex, c: Iterable[int], k: int) -> bool:
    return find_split(cx, c, k) is None


@dataclass(frozen=True)
class GeneratorSet:
    generators: tuple[tuple[CoverVector, int], ...]
    search_bound: int

    def degrees(self) -> set[int]:
        return {k for _, k in self.generators}

    def to_dict(self) -> dict:
        return {
            "search_bound": self.search_bound,
            "generators": [{"k": k, "c": list(c)} for c, k in self.generators],
        }


def generators_in_degree(cx: SimplicialComplex, k: int) -> list[CoverVector]:
    return [c for c in minimal_k_covers(cx, k) if is_indecomposable(cx, c, k)]


def generator_set(cx: SimplicialComplex, max_k: int) -> GeneratorSet:
    if max_k < 1:
        raise ValueError("max_k must be at least 1")
    gens = []
    for k in range(1, max_k + 1):
        gens.extend((c, k) for c in generators_in_degree(cx, k))
    return GeneratorSet(tuple(gens), max_k)


def higher_generator(cx: SimplicialComplex, max_k: int) -> tuple[CoverVector, int] | None:
    """Least generator of degree 2..max_k, lowest degree first."""
    for k in range(2, max_k + 1):
        for c in minimal_k_covers(cx, k):
            if is_indecomposable(cx, c, k):
                return c, k
    return None


def d_A(cx: SimplicialComplex, max_k: int) -> int:
    """Largest generator degree found up to ``max_k`` (a lower bound in general)."""
    return max(generator_set(cx, max_k).degrees())


@dataclass(frozen=True)
class GradingVerdict:
    status: str  # "standard-up-to" | "not-standard" | "certified-standard"
    max_k: int
    witness: CoverVector | None = None
    witness_degree: int | None = None
    reason: str | None = None

    def to_dict(self) -> dict:
        out = {"status": self.status, "max_k": self.max_k}
        if self.witness is not None:
            out["witness"] = {"k": self.witness_degree, "c": list(self.witness)}
        if self.reason:
            out["reason"] = self.reason
        return out


def is_standard_graded(cx: SimplicialComplex, max_k: int = 4, certify: bool = True) -> GradingVerdict:
    """Bounded standard-gradedness, with theorem certificates when they apply.

    Forests and complexes without special odd cycles have standard graded
    cover algebras; for those no search is run when ``certify`` is set.
    """
    if max_k < 2:
        raise ValueError("max_k must be at least 2")
    if certify:
        if structure.is_forest(cx):
            return GradingVerdict("certified-standard", max_k, reason="forest")
        if cycles.is_balanced(cx):
            return GradingVerdict("certified-standard", max_k, reason="no special odd cycle")
    hit = higher_generator(cx, max_k)
    if hit is not None:
        return GradingVerdict("not-standard", max_k, hit[0], hit[1])
    return GradingVerdict("standard-up-to", max_k)


# -- partitions into vertex covers ----------------------------------------------


def partition_into_covers(cx: SimplicialComplex, k: int) -> list[tuple[int, ...]] | None:
    """Split {1..n} into k disjoint blocks, each meeting every facet.

    Vertices are placed in increasing order; a vertex opens at most one new
    block, so blocks come out ordered by their least element.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if any(len(f) < k for f in cx.facets):
        return None
    n = cx.n
    containing = [[j for j, f in enumerate(cx.facets) if v in f] for v in range(1, n + 1)]
    # blocks touched per facet, and unplaced vertices per facet
    touched = [[0] * k for _ in cx.facets]
    ntouched = [0] * cx.m
    free = [len(f) for f in cx.facets]
    assign = [0] * n
    budget = Budget("cover partition search")

    def place(v: int, used: int) -> bool:
        budget.tick()
        if v == n:
            return all(t == k for t in ntouched)
        for blk in range(min(used + 1, k)):
            ok = True
            for j in containing[v]:
                free[j] -= 1
                if touched[j][blk] == 0:
                    ntouched[j] += 1
                touched[j][blk] += 1
            for j in containing[v]:
                if ntouched[j] + free[j] < k:
                    ok = False
            if ok:
                assign[v] = blk
                if place(v + 1, max(used, blk + 1)):
                    return True
            for j in containing[v]:
                touched[j][blk] -= 1
                if touched[j][blk] == 0:
                    ntouched[j] -= 1
                free[j] += 1
        return False

    if not place(0, 0):
        return None
    blocks = [tuple(v + 1 for v in range(n) if assign[v] == b) for b in range(k)]
    if any(not blk for blk in blocks):
        return None
    return blocks


def s_value(cx: SimplicialComplex) -> int:
    """Size of the smallest facet."""
    return min(len(f) for f in cx.facets)


def is_totally_decomposable(cx: SimplicialComplex) -> list[tuple[int, ...]] | None:
    return partition_into_covers(cx, s_value(cx))


def polarized_partition(cx: SimplicialComplex, c: Sequence[int], k: int):
    """Partition of the polarized vertex set into k vertex covers of the polarization.

    Returns ``(blocks, labels)`` with blocks of flat indices, or ``(None, labels)``.
    """
    pol, labels = polarize(cx, c)
    return partition_into_covers(pol, k), labels


def covers_from_partition(n: int, blocks: Sequence[Sequence[int]], labels) -> list[CoverVector]:
    """Count, for each block, the copies of each base vertex it contains."""
    out = []
    for blk in blocks:
        vec = [0] * n
        for flat in blk:
            vec[labels[flat - 1].base - 1] += 1
        out.append(tuple(vec))
    return out


def partition_from_decomposition(parts: Sequence[Sequence[int]], labels) -> list[tuple[int, ...]]:
    """Block h takes copies c_1i+...+c_(h-1)i+1 .. c_1i+...+c_hi of each vertex i."""
    flat = {(pv.base, pv.copy): k for k, pv in enumerate(labels, start=1)}
    n = len(parts[0])
    offset = [0] * n
    blocks = []
    for part in parts:
        blk = []
        for i in range(n):
            for j in range(offset[i] + 1, offset[i] + part[i] + 1):
                blk.append(flat[(i + 1, j)])
            offset[i] += part[i]
        blocks.append(tuple(sorted(blk)))
    return blocks


def is_cover_partition(cx: SimplicialComplex, blocks: Sequence[Sequence[int]]) -> bool:
    seen = [v for b in blocks for v in b]
    if sorted(seen) != list(cx.vertices):
        return False
    return all(all(set(b) & set(f) for f in cx.facets) for b in blocks)


# -- codimension-1 connected quasi-forests ----------------------------


@dataclass(frozen=True)
class Codim1Check:
    quasi_forest: bool
    preconditions: structure.Codim1Preconditions
    applicable: bool
    forest: bool | None
    standard_up_to_bound: bool | None
    witness: tuple[CoverVector, int] | None
    confirmed: bool | None
    max_k: int

    def to_dict(self) -> dict:
        return {
            "quasi_forest": self.quasi_forest,
            "preconditions": self.preconditions.to_dict(),
            "applicable": self.applicable,
            "forest": self.forest,
            "standard_up_to_bound": self.standard_up_to_bound,
            "witness": None if self.witness is None else {"k": self.witness[1], "c": list(self.witness[0])},
            "confirmed": self.confirmed,
            "max_k": self.max_k,
        }


def check_codim1_quasi_forest(cx: SimplicialComplex, max_k: int = 3) -> Codim1Check:
    """For quasi-forests meeting both preconditions: forest iff standard graded.

    The right-hand side is tested by bounded generator search, so
    ``confirmed`` means the bounded search agrees with the forest test.
    """
    qf = structure.is_quasi_forest(cx)
    pre = structure.codim1_preconditions(cx)
    if not (qf and pre.hold):
        return Codim1Check(qf, pre, False, None, None, None, None, max_k)
    forest = structure.is_forest(cx)
    hit = higher_generator(cx, max_k)
    standard = hit is None
    return Codim1Check(qf, pre, True, forest, standard, hit, forest == standard, max_k)
