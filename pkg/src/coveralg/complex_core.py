"""Simplicial complexes given by their facets.

A complex on ``[n] = {1..n}`` is stored as an antichain of facets, each a
sorted tuple of 1-based vertices, with the facet list itself sorted.  The same
object doubles as the hypergraph of its facets.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from .limits import Budget, check

Facet = tuple[int, ...]


class ComplexError(ValueError):
    """Malformed complex input."""


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple[Facet, ...]
    # input sets that were not maximal and got dropped by the constructor
    dropped: tuple[Facet, ...] = field(default=(), compare=False, repr=False)

    @property
    def m(self) -> int:
        return len(self.facets)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    def is_graph(self) -> bool:
        return all(len(f) <= 2 for f in self.facets)

    def facet_index(self, facet: Iterable[int]) -> int:
        key = tuple(sorted(facet))
        try:
            return self.facets.index(key)
        except ValueError:
            raise ComplexError(f"{set(key)} is not a facet") from None

    def to_dict(self) -> dict:
        return {"n": self.n, "facets": [list(f) for f in self.facets]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "SimplicialComplex":
        try:
            n = data["n"]
            facets = data["facets"]
        except (KeyError, TypeError):
            raise ComplexError('complex JSON needs keys "n" and "facets"') from None
        if not isinstance(n, int) or isinstance(n, bool):
            raise ComplexError(f'"n" must be an integer, got {n!r}')
        if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
            raise ComplexError('"facets" must be a list of integer lists')
        for f in facets:
            for v in f:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise ComplexError(f"vertex {v!r} is not an integer")
        return new_complex(n, facets)

    @classmethod
    def from_json(cls, text: str) -> "SimplicialComplex":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ComplexError(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)

    def __str__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facets)
        return f"<{body}> on [{self.n}]"


@dataclass(frozen=True)
class PolarizedVertex:
    base: int
    copy: int


@dataclass(frozen=True)
class ZeroOneMatrix:
    entries: tuple[tuple[int, ...], ...]
    row_labels: tuple
    col_labels: tuple

    def __post_init__(self):
        if len(self.entries) != len(self.row_labels):
            raise ValueError("row label count does not match row count")
        for row in self.entries:
            if len(row) != len(self.col_labels):
                raise ValueError("column label count does not match column count")
            if any(x not in (0, 1) for x in row):
                raise ValueError("entries must be 0 or 1")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.col_labels)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "ZeroOneMatrix":
        cols = tuple(self.column(j) for j in range(self.cols))
        return ZeroOneMatrix(cols, self.col_labels, self.row_labels)

    def to_dict(self) -> dict:
        def lab(x):
            return list(x) if isinstance(x, tuple) else x

        return {
            "rows": [list(r) for r in self.entries],
            "row_labels": [lab(x) for x in self.row_labels],
            "col_labels": [lab(x) for x in self.col_labels],
        }


def new_complex(n: int, raw_facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build a complex keeping only the inclusion-maximal input sets."""
    if not isinstance(n, int) or n < 1:
        raise ComplexError(f"vertex count must be a positive integer, got {n!r}")
    sets = []
    for raw in raw_facets:
        s = frozenset(raw)
        if not s:
            raise ComplexError("facets must be nonempty")
        bad = [v for v in s if not 1 <= v <= n]
        if bad:
            raise ComplexError(f"facet {sorted(s)} has vertices outside 1..{n}: {sorted(bad)}")
        sets.append(s)
    if not sets:
        raise ComplexError("a complex needs at least one facet")
    unique = set(sets)
    maximal = [s for s in unique if not any(s < t for t in unique)]
    dropped = sorted(tuple(sorted(s)) for s in unique if s not in maximal)
    facets = tuple(sorted(tuple(sorted(s)) for s in maximal))
    return SimplicialComplex(n, facets, tuple(dropped))


def _masks(facets: Sequence[Facet]) -> list[int]:
    return [sum(1 << (v - 1) for v in f) for f in facets]


def _unmask(mask: int) -> Facet:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def minimal_transversals(n: int, edges: Sequence[Iterable[int]]) -> list[Facet]:
    """Inclusion-minimal hitting sets of ``edges`` (Berge's sequential method)."""
    trans = {0}
    budget = Budget("minimal transversals")
    for edge in _masks([tuple(e) for e in edges]):
        if edge == 0:
            return []
        nxt = set()
        for t in trans:
            if t & edge:
                nxt.add(t)
            else:
                e = edge
                while e:
                    low = e & -e
                    nxt.add(t | low)
                    e ^= low
        budget.tick(len(nxt))
        # keep only minimal sets; process by popcount so subsets come first
        kept: list[int] = []
        for t in sorted(nxt, key=int.bit_count):
            if not any(k & t == k for k in kept):
                kept.append(t)
        trans = set(kept)
    return sorted(_unmask(t) for t in trans)


def minimal_vertex_covers(cx: SimplicialComplex) -> list[Facet]:
    check("max_vertices", cx.n, "minimal vertex cover enumeration")
    check("max_facets", cx.m, "minimal vertex cover enumeration")
    return minimal_transversals(cx.n, cx.facets)


def dual(cx: SimplicialComplex) -> SimplicialComplex:
    """The complex whose facets are the minimal vertex covers of ``cx``."""
    return new_complex(cx.n, minimal_vertex_covers(cx))


def polarize(cx: SimplicialComplex, c: Sequence[int]) -> tuple[SimplicialComplex, list[PolarizedVertex]]:
    """Polarization of ``cx`` with respect to ``c``.

    Vertex ``x_ij`` (``1 <= j <= c_i``) gets the flat index of its position in
    the order (1,1),...,(1,c_1),(2,1),...; ``labels[k-1]`` is the polarized
    vertex with flat index ``k``.  The facets are the inclusion-minimal sets
    ``F^c``.
    """
    c = tuple(c)
    if len(c) != cx.n:
        raise ComplexError(f"vector has length {len(c)}, complex has {cx.n} vertices")
    if any(x < 0 for x in c):
        raise ComplexError("polarizing vector must be nonnegative")
    labels = [PolarizedVertex(i, j) for i in cx.vertices for j in range(1, c[i - 1] + 1)]
    flat = {pv: k for k, pv in enumerate(labels, start=1)}
    raw = []
    for f in cx.facets:
        fc = [flat[PolarizedVertex(i, j)] for i in f for j in range(1, c[i - 1] + 1)]
        if not fc:
            raise ComplexError(f"facet {list(f)} has empty polarization (weight 0 under c)")
        raw.append(frozenset(fc))
    # keep the inclusion-minimal F^c; they have the same covers as the full family
    minimal = [f for f in set(raw) if not any(g < f for g in raw)]
    return new_complex(len(labels), minimal), labels


def incidence_matrix(cx: SimplicialComplex, orientation: str = "rows-are-facets") -> ZeroOneMatrix:
    rows = tuple(tuple(int(v in f) for v in cx.vertices) for f in cx.facets)
    mat = ZeroOneMatrix(rows, cx.facets, tuple(cx.vertices))
    if orientation == "rows-are-facets":
        return mat
    if orientation == "rows-are-vertices":
        return mat.transpose()
    raise ValueError(f"unknown orientation {orientation!r}")


def one_skeleton(cx: SimplicialComplex) -> SimplicialComplex:
    raw: list[Facet] = []
    for f in cx.facets:
        if len(f) == 1:
            raw.append(f)
        raw.extend(itertools.combinations(f, 2))
    return new_complex(cx.n, raw)


def as_networkx(g: SimplicialComplex) -> nx.Graph:
    """Graph on the support of ``g`` whose edges are the 2-element facets."""
    if not g.is_graph():
        raise ComplexError("expected a graph (facets of size at most 2)")
    out = nx.Graph()
    out.add_nodes_from(g.support())
    out.add_edges_from(f for f in g.facets if len(f) == 2)
    return out


def clique_complex(g: SimplicialComplex) -> SimplicialComplex:
    """Facets are the maximal cliques of the graph ``g``."""
    graph = as_networkx(g)
    budget = Budget("maximal clique enumeration")
    cliques = []
    for q in nx.find_cliques(graph):
        budget.tick()
        cliques.append(q)
    return new_complex(g.n, cliques)


def subcomplex(cx: SimplicialComplex, facet_indices: Iterable[int]) -> SimplicialComplex:
    """Subcomplex spanned by the facets at the given (0-based) indices."""
    idx = sorted(set(facet_indices))
    if not idx:
        raise ComplexError("subcomplex needs at least one facet")
    if idx[0] < 0 or idx[-1] >= cx.m:
        raise ComplexError(f"facet index out of range 0..{cx.m - 1}")
    return SimplicialComplex(cx.n, tuple(cx.facets[i] for i in idx))


def remove_facet(cx: SimplicialComplex, facet: Iterable[int]) -> SimplicialComplex:
    i = cx.facet_index(facet)
    return subcomplex(cx, [j for j in range(cx.m) if j != i])


def connected_components(cx: SimplicialComplex) -> list[list[int]]:
    """Facet-index groups of the connected components (isolated vertices ignored)."""
    g = nx.Graph()
    g.add_nodes_from(range(cx.m))
    for i, j in itertools.combinations(range(cx.m), 2):
        if set(cx.facets[i]) & set(cx.facets[j]):
            g.add_edge(i, j)
    return sorted(sorted(comp) for comp in nx.connected_components(g))


def is_connected(cx: SimplicialComplex) -> bool:
    return len(connected_components(cx)) == 1


def random_complex(n: int, max_facets: int, rng: random.Random, max_size: int | None = None) -> SimplicialComplex:
    """A random complex on ``[n]`` with at most ``max_facets`` facets."""
    max_size = max_size or n
    k = rng.randint(1, max_facets)
    raw = []
    for _ in range(k):
        size = rng.randint(1, max_size)
        raw.append(rng.sample(range(1, n + 1), size))
    return new_complex(n, raw)
