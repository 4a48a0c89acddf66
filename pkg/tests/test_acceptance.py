"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line; the lines are repeated in
the pytest terminal summary.  Run standalone with ``python tests/test_acceptance.py``.
"""

import contextlib
import functools
import random
import sys
import time

import networkx as nx

from coveralg import covers, cycles, ideals, matrixops, mengerian, structure
from coveralg.complex_core import (
    as_networkx,
    clique_complex,
    dual,
    polarize,
    random_complex,
    remove_facet,
    subcomplex,
)
from coveralg.cycles import witness_from_sequence

from conftest import CRITERIA
from families import all_complexes, atlas_graphs, random_family
from fixtures import CONE, PATH_TREE, K4BAR, K4BAR_DUAL_FACETS, K4BAR_SUB, TRAMPOLINE


@contextlib.contextmanager
def criterion(number, title):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        line = f"FAIL  criterion {number}: {title} ({type(exc).__name__}: {exc})"
        print(line)
        CRITERIA.append(line)
        raise
    line = f"PASS  criterion {number}: {title} [{time.perf_counter() - start:.1f}s]"
    print(line)
    CRITERIA.append(line)


def subcomplexes(cx):
    for mask in range(1, 1 << cx.m):
        yield subcomplex(cx, [i for i in range(cx.m) if mask >> i & 1])


@functools.lru_cache(maxsize=None)
def family_tables():
    """Per-complex bounded searches over the exhaustive family, keyed by facets.

    Subcomplexes and facet deletions of family members are family members
    again, so every audit below reads from these tables.
    """
    fam = all_complexes(5, 5)
    higher = {cx.facets: covers.higher_generator(cx, 4) for cx in fam}
    degree2 = {cx.facets: bool(covers.generators_in_degree(cx, 2)) for cx in fam}
    d3 = {cx.facets: covers.d_A(cx, 3) for cx in fam}
    return fam, higher, degree2, d3


def test_criterion_1_k4bar():
    with criterion(1, "K4-bar example: dual, generators, Mengerian gap, symbolic powers"):
        assert set(dual(K4BAR).facets) == K4BAR_DUAL_FACETS and dual(K4BAR).m == 7
        assert covers.generator_set(K4BAR, 4).degrees() == {1}
        assert ((1, 1, 1, 1, 1, 1), 2) in covers.generator_set(dual(K4BAR), 2).generators
        v = mengerian.is_mengerian_bounded(K4BAR, 2)
        assert v.status == "gap"
        assert v.witness.c == (1,) * 6 and (v.witness.min_value, v.witness.max_value) == (2, 1)
        assert mengerian.is_mengerian_bounded(dual(K4BAR), 2).status == "no-gap-up-to"
        cmp = ideals.symbolic_equals_ordinary(K4BAR, 2)
        assert not cmp.equal and ideals.format_monomial(cmp.witness) == "x1*x2*x3*x4*x5*x6"


def test_criterion_2_subcomplex_cycle():
    with criterion(2, "K4-bar subcomplex: canonical special odd cycle and indecomposable 2-cover"):
        w = cycles.find_special_cycle(K4BAR_SUB, "odd")
        assert str(w) == "1,{1,2,3},3,{3,4,5},5,{1,5,6},1"
        c = cycles.cycle_indicator(K4BAR_SUB.n, w)
        assert c == (1, 0, 1, 0, 1, 0)
        assert covers.is_minimal_k_cover(K4BAR_SUB, c, 2)
        assert covers.is_indecomposable(K4BAR_SUB, c, 2)
        assert (c, 2) in covers.generator_set(K4BAR_SUB, 2).generators


def test_criterion_3_named_fixtures():
    with criterion(3, "cone, path tree and trampoline fixtures"):
        assert cycles.is_special(CONE, witness_from_sequence([1, {1, 2, 4}, 2, {2, 3, 4}, 3, {1, 3, 4}, 1]))
        assert not cycles.is_special(CONE, witness_from_sequence([1, {1, 2, 4}, 2, {2, 3, 4}, 4, {1, 3, 4}, 1]))
        assert structure.leaves(CONE).leaf_facets == ()
        assert not structure.is_quasi_forest(CONE)

        assert set(structure.leaves(PATH_TREE).leaf_facets) == {(1, 2, 3), (4, 5)}
        assert structure.is_tree(PATH_TREE)
        v = covers.is_standard_graded(PATH_TREE, 4)
        assert v.status == "certified-standard"

        assert structure.is_quasi_tree(TRAMPOLINE) and not structure.is_tree(TRAMPOLINE)
        assert not any(structure.is_good_leaf(TRAMPOLINE, f) for f in TRAMPOLINE.facets)
        assert covers.d_A(TRAMPOLINE, 3) == 2
        assert ((0, 0, 0, 1, 1, 1), 2) in covers.generator_set(TRAMPOLINE, 3).generators
        chk = covers.check_codim1_quasi_forest(TRAMPOLINE, 3)
        assert chk.preconditions.hold and chk.applicable and chk.confirmed


def test_criterion_4_exhaustive_audits():
    with criterion(4, "exhaustive audits over all 5572 complexes with n <= 5, <= 5 facets"):
        fam, higher, degree2, _ = family_tables()
        assert len(fam) == 5572
        for cx in fam:
            # (a) forest: leaf in every subcomplex, no special cycle of length >= 3, greedy canonical form
            forest = structure.every_subcomplex_has_leaf(cx)
            assert forest == cycles.is_totally_balanced(cx) == matrixops.is_greedy(cx) == structure.is_forest(cx), cx
            # (b) balanced vs generators of subcomplexes
            subs = [s.facets for s in subcomplexes(cx)]
            balanced = cycles.is_balanced(cx)
            assert balanced == (not any(degree2[s] for s in subs)) == (not any(higher[s] for s in subs)), cx
            # (c) bounded standard grading of A(cx) vs bounded Mengerian for the dual (max_k 3, bound 3)
            hit = higher[cx.facets]
            standard3 = hit is None or hit[1] > 3
            assert standard3 == (mengerian.first_gap(dual(cx), 3) is None), cx
            # (d) forests have good leaves
            if forest:
                assert any(structure.is_good_leaf(cx, f) for f in cx.facets), cx
            # (e) unimodular implies balanced
            if matrixops.is_unimodular(cx):
                assert balanced, cx
            # (f) dual involution
            assert dual(dual(cx)) == cx, cx


def test_criterion_5_good_leaf_degree():
    with criterion(5, "removing a good leaf keeps d_A(., 3)"):
        fam, _, _, d3 = family_tables()
        checked = 0
        for cx in fam:
            if cx.m < 2:
                continue
            for f in cx.facets:
                if structure.is_good_leaf(cx, f):
                    assert d3[cx.facets] == d3[remove_facet(cx, f).facets], (cx, f)
                    checked += 1
        assert checked > 1000


def test_criterion_6_oracle_equivalence():
    with criterion(6, "minimal k-covers equal symbolic power generators (200 complexes, k <= 3)"):
        for cx in random_family(200, seed=6, n_max=5, max_facets=5):
            for k in (1, 2, 3):
                assert sorted(covers.minimal_k_covers(cx, k)) == sorted(ideals.symbolic_power(cx, k).generators), (cx, k)


def test_criterion_7_graph_specializations():
    with criterion(7, "graphs: standard graded <=> bipartite <=> balanced; Dirac chordality check"):
        small = atlas_graphs(6)
        assert len(small) == 155
        for g in small:
            standard = covers.is_standard_graded(g, 4, certify=False).status == "standard-up-to"
            assert standard == nx.is_bipartite(as_networkx(g)) == cycles.is_balanced(g), g
        for g in atlas_graphs(7):
            chordal = structure.is_chordal(g) is not None
            assert chordal == nx.is_chordal(as_networkx(g)) == structure.is_quasi_forest(clique_complex(g)), g


def polar_triples(count, seed):
    """Mixed (complex, c, k) triples; half are built on a generator of degree >= 2."""
    rng = random.Random(seed)
    pool = [cx for cx in all_complexes(5, 5) if not cycles.is_balanced(cx)]
    out = []
    while len(out) < count:
        if len(out) % 2 == 0:
            cx = rng.choice(pool)
            hit = covers.higher_generator(cx, 3)
            if hit is None:
                continue
            c, k = hit
            if rng.random() < 0.3:
                c = tuple(x + rng.randint(0, 1) for x in c)
                k = rng.randint(1, covers.cover_order(cx, c))
        else:
            cx = random_complex(rng.randint(2, 5), 5, rng)
            c = tuple(rng.randint(0, 2) for _ in range(cx.n))
            o = covers.cover_order(cx, c)
            if o < 1:
                continue
            k = o if rng.random() < 0.7 else rng.randint(1, o)
        out.append((cx, c, k))
    return out


def test_criterion_8_polarization_lemma():
    with criterion(8, "decomposability <=> cover partition of the polarization (100 triples)"):
        outcomes = {True: 0, False: 0}
        for cx, c, k in polar_triples(100, seed=7):
            dec = covers.decompose_cover(cx, c, k)
            blocks, labels = covers.polarized_partition(cx, c, k)
            ok = isinstance(dec, covers.CoverDecomposition)
            outcomes[ok] += 1
            assert ok == (blocks is not None), (cx, c, k)
            if ok:
                pol, _ = polarize(cx, c)
                built = covers.partition_from_decomposition(dec.parts, labels)
                assert covers.is_cover_partition(pol, built)
                back = covers.covers_from_partition(cx.n, blocks, labels)
                assert [sum(col) for col in zip(*back)] == list(c)
                assert all(covers.cover_order(cx, p) >= 1 for p in back)
        assert outcomes[True] and outcomes[False], outcomes


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except BaseException:
                failed += 1
    sys.exit(1 if failed else 0)
