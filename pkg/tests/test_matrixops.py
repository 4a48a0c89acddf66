import itertools
import random

import numpy as np
import pytest

from coveralg import matrixops
from coveralg.complex_core import ZeroOneMatrix, incidence_matrix, new_complex, random_complex
from coveralg.cycles import find_special_cycle, is_balanced
from coveralg.limits import GuardExceeded, limits
from coveralg.structure import is_forest

from fixtures import CONE, K4BAR, SQUARE, TRIANGLE


def mat(rows):
    rows = tuple(tuple(r) for r in rows)
    return ZeroOneMatrix(rows, tuple(range(1, len(rows) + 1)), tuple(range(1, len(rows[0]) + 1)))


def test_prec():
    assert matrixops.prec((1, 0), (0, 1)) == -1
    assert matrixops.prec((0, 1), (1, 0)) == 1
    assert matrixops.prec((1, 1), (1, 1)) == 0
    with pytest.raises(ValueError):
        matrixops.prec((1,), (1, 0))


def test_delta_vector():
    assert matrixops.delta_vector([[1, 1], [1, 0]]) == (1, 2, 0)
    assert matrixops.delta_vector([[0, 0], [0, 0]]) == (0, 0, 0)
    assert matrixops.delta_vector([[1, 0], [0, 1]]) == (1, 0, 1)


def test_canonical_form_examples():
    res = matrixops.canonical_form(mat([[0, 1], [1, 0]]))
    assert res.matrix.entries == ((1, 0), (0, 1))
    assert matrixops.prec(matrixops.delta_vector([[0, 1], [1, 0]]), res.delta) < 0
    fixed = matrixops.canonical_form(mat([[1, 0], [0, 1]]))
    assert fixed.row_perm == (0, 1) and fixed.col_perm == (0, 1) and fixed.swaps == 0


def test_canonical_form_is_a_permutation_and_canonical():
    rng = random.Random(6)
    for _ in range(60):
        m = incidence_matrix(random_complex(rng.randint(2, 7), 6, rng))
        res = matrixops.canonical_form(m)
        assert matrixops.is_canonical(res.matrix.entries)
        assert res.matrix.entries == tuple(tuple(m.entries[r][c] for c in res.col_perm) for r in res.row_perm)


def test_special_cycle_has_banded_canonical_form():
    cx = new_complex(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    res = matrixops.canonical_form(incidence_matrix(cx))
    assert all(sum(r) == 2 for r in res.matrix.entries)
    assert all(sum(c) == 2 for c in zip(*res.matrix.entries))
    assert matrixops.contains_B(res.matrix) is not None


def test_contains_B():
    assert matrixops.contains_B([[1, 1], [1, 0]]) == (1, 2, 1, 2)
    assert matrixops.contains_B([[1, 0], [0, 1]]) is None
    canon = matrixops.canonical_form(incidence_matrix(CONE)).matrix
    assert matrixops.contains_B(canon) is not None


def test_greedy_iff_forest():
    rng = random.Random(13)
    for _ in range(80):
        cx = random_complex(rng.randint(2, 6), 6, rng)
        assert matrixops.is_greedy(cx) == is_forest(cx)


def test_det_matches_numpy():
    rng = random.Random(1)
    for _ in range(100):
        n = rng.randint(1, 6)
        a = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        assert matrixops.det(a) == round(np.linalg.det(np.array(a, dtype=float)))


def test_unimodular_examples():
    assert matrixops.is_unimodular(SQUARE)
    assert not matrixops.is_unimodular(TRIANGLE)
    rs, cs, d = matrixops.bad_minor(incidence_matrix(TRIANGLE).entries)
    assert abs(d) == 2
    assert matrixops.is_unimodular(new_complex(3, [(1, 2, 3)]))


def test_unimodular_implies_balanced():
    rng = random.Random(17)
    for _ in range(60):
        cx = random_complex(rng.randint(2, 6), 5, rng)
        if matrixops.is_unimodular(cx):
            assert is_balanced(cx)


def test_odd_cycle_minor_has_determinant_two():
    w = find_special_cycle(K4BAR, "odd")
    sub = [[int(v in f) for v in w.vertices] for f in w.facets]
    assert abs(matrixops.det(sub)) == 2


def test_unimodular_guard():
    with limits(unimodular_dim=3):
        with pytest.raises(GuardExceeded):
            matrixops.is_unimodular(K4BAR)
