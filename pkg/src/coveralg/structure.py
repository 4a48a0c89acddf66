"""Leaves, forests and quasi-forests, and chordality of graphs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from .complex_core import (
    ComplexError,
    Facet,
    SimplicialComplex,
    as_networkx,
    connected_components,
    is_connected,
    subcomplex,
)
from .limits import Budget, check


@dataclass(frozen=True)
class LeafReport:
    leaf_facets: tuple[Facet, ...]
    # leaf -> the least facet G witnessing the leaf condition (None for a lone facet)
    branch_witness: dict = field(hash=False)

    def to_dict(self) -> dict:
        return {
            "leaves": [list(f) for f in self.leaf_facets],
            "branches": [
                {"leaf": list(f), "branch": None if g is None else list(g)}
                for f, g in self.branch_witness.items()
            ],
        }


@dataclass(frozen=True)
class LeafOrder:
    order: tuple[Facet, ...]
    kind: str  # "leaf" or "good-leaf"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "order": [list(f) for f in self.order]}


def _facet_sets(cx: SimplicialComplex) -> list[frozenset]:
    return [frozenset(f) for f in cx.facets]


def branch(cx: SimplicialComplex, i: int) -> Facet | None:
    """Least facet G != F_i with H & F_i <= G & F_i for all H != F_i.

    Returns ``None`` when F_i is not a leaf; a lone facet is its own leaf
    without a branch, reported by :func:`is_leaf`.
    """
    sets = _facet_sets(cx)
    f = sets[i]
    cuts = [sets[j] & f for j in range(len(sets)) if j != i]
    for j in range(len(sets)):
        if j == i:
            continue
        g = sets[j] & f
        if all(h <= g for h in cuts):
            return cx.facets[j]
    return None


def is_leaf(cx: SimplicialComplex, i: int) -> bool:
    return cx.m == 1 or branch(cx, i) is not None


def leaves(cx: SimplicialComplex) -> LeafReport:
    found = []
    witness = {}
    for i, f in enumerate(cx.facets):
        if cx.m == 1:
            found.append(f)
            witness[f] = None
            continue
        g = branch(cx, i)
        if g is not None:
            found.append(f)
            witness[f] = g
    return LeafReport(tuple(found), witness)


def _good(sets: Sequence[frozenset], i: int) -> bool:
    f = sets[i]
    cuts = sorted({sets[j] & f for j in range(len(sets)) if j != i}, key=len)
    return all(a <= b for a, b in zip(cuts, cuts[1:]))


def is_good_leaf(cx: SimplicialComplex, facet: Iterable[int]) -> bool:
    """True iff the intersections of ``facet`` with the other facets form a chain."""
    return _good(_facet_sets(cx), cx.facet_index(facet))


def _peel(cx: SimplicialComplex, good: bool) -> LeafOrder | None:
    current = list(cx.facets)
    removed: list[Facet] = []
    while len(current) > 1:
        sub = SimplicialComplex(cx.n, tuple(current))
        sets = _facet_sets(sub)
        pick = None
        for i in range(len(current)):
            if (_good(sets, i) if good else branch(sub, i) is not None):
                pick = i
                break
        if pick is None:
            return None
        removed.append(current.pop(pick))
    removed.append(current[0])
    return LeafOrder(tuple(reversed(removed)), "good-leaf" if good else "leaf")


def good_leaf_order(cx: SimplicialComplex) -> LeafOrder | None:
    return _peel(cx, good=True)


def leaf_order(cx: SimplicialComplex) -> LeafOrder | None:
    return _peel(cx, good=False)


def is_leaf_order(cx: SimplicialComplex, order: Sequence[Facet], good: bool = False) -> bool:
    """Check that F_i is a (good) leaf of <F_1..F_i> for every i."""
    order = [tuple(sorted(f)) for f in order]
    if sorted(order) != sorted(cx.facets):
        return False
    for i in range(1, len(order)):
        sub = SimplicialComplex(cx.n, tuple(order[: i + 1]))
        ok = _good(_facet_sets(sub), i) if good else branch(sub, i) is not None
        if not ok:
            return False
    return True


def is_forest(cx: SimplicialComplex) -> bool:
    return good_leaf_order(cx) is not None


def every_subcomplex_has_leaf(cx: SimplicialComplex) -> bool:
    """The forest definition verbatim: brute force over all facet subsets."""
    check("max_facets", cx.m, "subcomplex enumeration")
    for r in range(1, cx.m + 1):
        for idx in itertools.combinations(range(cx.m), r):
            sub = subcomplex(cx, idx)
            if not any(is_leaf(sub, i) for i in range(sub.m)):
                return False
    return True


def is_tree(cx: SimplicialComplex) -> bool:
    return is_forest(cx) and is_connected(cx)


def is_quasi_forest(cx: SimplicialComplex) -> bool:
    return leaf_order(cx) is not None


def is_quasi_tree(cx: SimplicialComplex) -> bool:
    return is_quasi_forest(cx) and is_connected(cx)


def relation_forest(cx: SimplicialComplex) -> nx.Graph:
    """One relation forest on the facets of a quasi-forest.

    Peels the least-index leaf at each step and joins it to its least branch
    when the two meet.  Other leaf choices can give other forests.
    """
    if not is_quasi_forest(cx):
        raise ComplexError("relation forest needs a quasi-forest")
    t = nx.Graph(order_dependent=True)
    t.add_nodes_from(cx.facets)
    current = list(cx.facets)
    while len(current) > 1:
        sub = SimplicialComplex(cx.n, tuple(current))
        for i in range(len(current)):
            g = branch(sub, i)
            if g is not None:
                f = current.pop(i)
                if set(f) & set(g):
                    t.add_edge(f, g)
                break
        else:  # pragma: no cover - excluded by the quasi-forest check
            raise ComplexError("peeling got stuck")
    return t


@dataclass(frozen=True)
class Codim1Preconditions:
    connected_in_codim1_per_component: bool
    codim1_face_max_multiplicity: int
    non_pure_components: tuple[tuple[Facet, ...], ...] = ()

    @property
    def hold(self) -> bool:
        return self.connected_in_codim1_per_component and self.codim1_face_max_multiplicity <= 2

    def to_dict(self) -> dict:
        return {
            "connected_in_codim1_per_component": self.connected_in_codim1_per_component,
            "codim1_face_max_multiplicity": self.codim1_face_max_multiplicity,
            "non_pure_components": [[list(f) for f in comp] for comp in self.non_pure_components],
            "hold": self.hold,
        }


def codim1_preconditions(cx: SimplicialComplex) -> Codim1Preconditions:
    """Codimension-1 connectivity per component and codim-1 face multiplicity.

    Two facets are adjacent in codimension 1 when they have the same size
    ``d`` and share ``d - 1`` vertices, so a component mixing facet sizes is
    never connected in codimension 1; such components are listed in
    ``non_pure_components``.  Empty faces (of singleton facets) are ignored.
    """
    sets = _facet_sets(cx)
    connected = True
    non_pure = []
    for comp in connected_components(cx):
        if len({len(sets[i]) for i in comp}) > 1:
            non_pure.append(tuple(cx.facets[i] for i in comp))
        g = nx.Graph()
        g.add_nodes_from(comp)
        for i, j in itertools.combinations(comp, 2):
            if len(sets[i]) == len(sets[j]) and len(sets[i] & sets[j]) == len(sets[i]) - 1:
                g.add_edge(i, j)
        if not nx.is_connected(g):
            connected = False
    mult = 0
    for f in cx.facets:
        if len(f) < 2:
            continue
        for face in itertools.combinations(f, len(f) - 1):
            s = set(face)
            mult = max(mult, sum(1 for g in sets if s <= g))
    if mult == 0:
        mult = 1
    return Codim1Preconditions(connected, mult, tuple(non_pure))


# -- graphs -----------------------------------------------------------------


def _adjacency(g: SimplicialComplex) -> dict[int, set[int]]:
    graph = as_networkx(g)
    return {v: set(graph[v]) for v in graph}


def is_chordal(g: SimplicialComplex) -> list[int] | None:
    """A perfect elimination ordering (first eliminated first), or None.

    Repeatedly deletes the least simplicial vertex; any simplicial vertex may
    be deleted first in a chordal graph, so greedy elimination is exact.
    """
    adj = _adjacency(g)
    order = []
    while adj:
        for v in sorted(adj):
            nb = adj[v]
            if all(b in adj[a] for a, b in itertools.combinations(sorted(nb), 2)):
                break
        else:
            return None
        order.append(v)
        for u in adj[v]:
            adj[u].discard(v)
        del adj[v]
    return order


def is_perfect_elimination_ordering(g: SimplicialComplex, order: Sequence[int]) -> bool:
    adj = _adjacency(g)
    if sorted(order) != sorted(adj):
        return False
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in adj[v] if pos[u] > pos[v]]
        if any(b not in adj[a] for a, b in itertools.combinations(later, 2)):
            return False
    return True


def is_strong_ordering(g: SimplicialComplex, order: Sequence[int]) -> bool:
    """PEO plus: for i<j<k<l, v_i~v_k, v_i~v_l, v_j~v_k imply v_j~v_l."""
    if not is_perfect_elimination_ordering(g, order):
        return False
    adj = _adjacency(g)
    n = len(order)
    for i, j, k, l in itertools.combinations(range(n), 4):
        vi, vj, vk, vl = order[i], order[j], order[k], order[l]
        if vk in adj[vi] and vl in adj[vi] and vk in adj[vj] and vl not in adj[vj]:
            return False
    return True


def has_strong_peo(g: SimplicialComplex) -> list[int] | None:
    """Exhaustive search for a strong perfect elimination ordering.

    Orderings are built front to back; each new vertex must be simplicial in
    the graph on the still-unplaced vertices, and every quadruple that ends at
    the new vertex is checked as soon as it is complete.
    """
    adj = _adjacency(g)
    check("strong_peo_vertices", len(adj), "strong elimination ordering search")
    budget = Budget("strong elimination ordering search")
    verts = sorted(adj)
    order: list[int] = []

    def simplicial_in(v: int, rest: set[int]) -> bool:
        nb = [u for u in adj[v] if u in rest]
        return all(b in adj[a] for a, b in itertools.combinations(nb, 2))

    def quads_ok(order: list[int]) -> bool:
        # order[-1] plays v_l
        vl = order[-1]
        m = len(order) - 1
        for i, j, k in itertools.combinations(range(m), 3):
            vi, vj, vk = order[i], order[j], order[k]
            if vk in adj[vi] and vl in adj[vi] and vk in adj[vj] and vl not in adj[vj]:
                return False
        return True

    def search(rest: set[int]) -> bool:
        budget.tick()
        if not rest:
            return True
        for v in sorted(rest):
            if not simplicial_in(v, rest):
                continue
            order.append(v)
            if quads_ok(order):
                rest.discard(v)
                if search(rest):
                    return True
                rest.add(v)
            order.pop()
        return False

    return list(order) if search(set(verts)) else None


# -- M-sequences ------------------------------------------------------------


def is_M_sequence(monomials: Sequence[Sequence[int]]) -> bool:
    """Exhaustive check of the M-sequence condition over variable renumberings.

    For each m_i some ordering x_{i1} < ... < x_{ir} of its support must make
    every tail x_{ik}^{ak}...x_{ir}^{ar} divide each later m_j that x_{ik}
    divides.
    """
    mons = [tuple(m) for m in monomials]
    if not mons:
        raise ValueError("need at least one monomial")
    nvars = len(mons[0])
    if any(len(m) != nvars for m in mons):
        raise ValueError("monomials must have equal length")
    check("mseq_variables", nvars, "M-sequence renumbering search")
    for i, mi in enumerate(mons):
        later = mons[i + 1 :]
        supp = [v for v in range(nvars) if mi[v] > 0]
        if not any(_tails_divide(mi, perm, later) for perm in itertools.permutations(supp)):
            return False
    return True


def _tails_divide(mi: tuple[int, ...], perm: Sequence[int], later: Sequence[tuple[int, ...]]) -> bool:
    for k, var in enumerate(perm):
        tail = perm[k:]
        for mj in later:
            if mj[var] > 0 and any(mj[t] < mi[t] for t in tail):
                return False
    return True


def facet_monomial(n: int, facet: Iterable[int]) -> tuple[int, ...]:
    s = set(facet)
    return tuple(int(v in s) for v in range(1, n + 1))
