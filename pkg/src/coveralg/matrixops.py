"""The rightmost-difference order, canonical matrix forms and unimodularity."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .complex_core import SimplicialComplex, ZeroOneMatrix, incidence_matrix
from .limits import check


class CanonicalizationError(RuntimeError):
    pass


def prec(a: Sequence[int], b: Sequence[int]) -> int:
    """-1 if a < b (rightmost nonzero entry of a-b negative), 1 if a > b, 0 if equal."""
    if len(a) != len(b):
        raise ValueError("vectors must have equal length")
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return -1 if x < y else 1
    return 0


def delta_vector(entries: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Anti-diagonal sums (delta_2, ..., delta_{m+n}) with 1-based indices."""
    m = len(entries)
    n = len(entries[0]) if m else 0
    out = [0] * max(m + n - 1, 0)
    for i, row in enumerate(entries):
        for j, x in enumerate(row):
            out[i + j] += x
    return tuple(out)


@dataclass(frozen=True)
class CanonicalizationResult:
    matrix: ZeroOneMatrix
    row_perm: tuple[int, ...]   # row r of the result is input row row_perm[r]
    col_perm: tuple[int, ...]
    delta: tuple[int, ...]
    swaps: int

    def to_dict(self) -> dict:
        return {
            **self.matrix.to_dict(),
            "row_perm": list(self.row_perm),
            "col_perm": list(self.col_perm),
            "delta": list(self.delta),
            "swaps": self.swaps,
        }


def canonical_form(mat: ZeroOneMatrix) -> CanonicalizationResult:
    """Sort rows and columns under ``prec`` by adjacent swaps until stable.

    Every swap of an out-of-order adjacent pair must strictly increase the
    delta vector under ``prec``; this is asserted, and is what guarantees
    termination.  Equal rows/columns are never swapped, so ties keep the input
    order.
    """
    a = [list(r) for r in mat.entries]
    rows, cols = len(a), mat.cols
    rp, cp = list(range(rows)), list(range(cols))
    delta = delta_vector(a)
    swaps = 0

    def bump():
        nonlocal delta, swaps
        new = delta_vector(a)
        if prec(delta, new) >= 0:
            raise CanonicalizationError("swap did not increase the delta vector")
        delta = new
        swaps += 1

    changed = True
    while changed:
        changed = False
        for i in range(rows - 1):
            if prec(a[i + 1], a[i]) < 0:
                a[i], a[i + 1] = a[i + 1], a[i]
                rp[i], rp[i + 1] = rp[i + 1], rp[i]
                bump()
                changed = True
        for j in range(cols - 1):
            cj = [r[j] for r in a]
            ck = [r[j + 1] for r in a]
            if prec(ck, cj) < 0:
                for r in a:
                    r[j], r[j + 1] = r[j + 1], r[j]
                cp[j], cp[j + 1] = cp[j + 1], cp[j]
                bump()
                changed = True
    out = ZeroOneMatrix(
        tuple(tuple(r) for r in a),
        tuple(mat.row_labels[i] for i in rp),
        tuple(mat.col_labels[j] for j in cp),
    )
    return CanonicalizationResult(out, tuple(rp), tuple(cp), delta, swaps)


def is_canonical(entries: Sequence[Sequence[int]]) -> bool:
    rows = [tuple(r) for r in entries]
    cols = list(zip(*rows)) if rows else []
    return all(prec(x, y) <= 0 for x, y in zip(rows, rows[1:])) and all(
        prec(x, y) <= 0 for x, y in zip(cols, cols[1:])
    )


def contains_B(mat: ZeroOneMatrix | Sequence[Sequence[int]]) -> tuple[int, int, int, int] | None:
    """Least (i1, i2, j1, j2), 1-based, with submatrix [[1,1],[1,0]]."""
    a = mat.entries if isinstance(mat, ZeroOneMatrix) else [tuple(r) for r in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    for i1 in range(m):
        for i2 in range(i1 + 1, m):
            for j1 in range(n):
                if not (a[i1][j1] and a[i2][j1]):
                    continue
                for j2 in range(j1 + 1, n):
                    if a[i1][j2] and not a[i2][j2]:
                        return (i1 + 1, i2 + 1, j1 + 1, j2 + 1)
    return None


def is_greedy(cx: SimplicialComplex) -> bool:
    """Canonical form of the facet-by-vertex incidence matrix has no B submatrix."""
    return contains_B(canonical_form(incidence_matrix(cx)).matrix) is None


def det(entries: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in entries]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def bad_minor(entries: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], tuple[int, ...], int] | None:
    """First square submatrix (rows, cols, det) with determinant outside {0, +-1}."""
    m = len(entries)
    n = len(entries[0]) if m else 0
    for r in range(2, min(m, n) + 1):
        for rs in itertools.combinations(range(m), r):
            for cs in itertools.combinations(range(n), r):
                d = det([[entries[i][j] for j in cs] for i in rs])
                if d not in (-1, 0, 1):
                    return rs, cs, d
    return None


def is_unimodular(cx: SimplicialComplex) -> bool:
    mat = incidence_matrix(cx)
    check("unimodular_dim", max(mat.rows, mat.cols), "square minor enumeration")
    return bad_minor(mat.entries) is None
