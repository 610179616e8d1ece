"""
Determinants over commutative rings.

hessenberg_det needs no division and is what the symmetric-function layer
uses, since every determinant there is lower Hessenberg. bareiss_det is the
fraction-free elimination for integral domains with exact division (XPoly,
QScalar). cofactor_det is the slow textbook expansion, kept for
cross-checking small sizes.
"""
from typing import Any, Callable, List, Sequence

from .ring import Ring

Matrix = Sequence[Sequence[Any]]


def build_matrix(size: int, entry: Callable[[int, int], Any]) -> List[List[Any]]:
    """Matrix with 1-based entry(i, j) callback."""
    return [[entry(i, j) for j in range(1, size + 1)] for i in range(1, size + 1)]


def hessenberg_matrix(
    size: int,
    first_column: Callable[[int], Any],
    band: Callable[[int, int], Any],
    superdiagonal: Callable[[int], Any],
    zero: Any,
) -> List[List[Any]]:
    """Lower Hessenberg matrix: column 1, entries (i, j >= 2) with j <= i, and (i, i+1)."""
    def entry(i: int, j: int) -> Any:
        if j == 1:
            return first_column(i)
        if j <= i:
            return band(i, j)
        if j == i + 1:
            return superdiagonal(i)
        return zero
    return build_matrix(size, entry)


def hessenberg_det(matrix: Matrix, ring: Ring) -> Any:
    """
    Determinant of a lower Hessenberg matrix (zero above the superdiagonal).

    D_k = sum_{j=1..k} (-1)^{k-j} a_{k,j} (a_{j,j+1} ... a_{k-1,k}) D_{j-1}, D_0 = 1.
    """
    size = len(matrix)
    for i in range(size):
        for j in range(i + 2, size):
            if not matrix[i][j].is_zero:
                raise ValueError(f"entry ({i + 1},{j + 1}) lies above the superdiagonal")
    minors = [ring.one]
    for k in range(1, size + 1):
        acc = ring.zero
        chain = ring.one
        for j in range(k, 0, -1):
            if j < k:
                chain = chain * matrix[j - 1][j]
            entry = matrix[k - 1][j - 1]
            if entry.is_zero or chain.is_zero:
                continue
            term = entry * chain * minors[j - 1]
            acc = acc + term if (k - j) % 2 == 0 else acc - term
        minors.append(acc)
    return minors[size]


def bareiss_det(matrix: Matrix, ring: Ring) -> Any:
    """Fraction-free Gaussian elimination; every division is exact."""
    rows = [list(row) for row in matrix]
    size = len(rows)
    if size == 0:
        return ring.one
    sign = 1
    previous = ring.one
    for k in range(size - 1):
        if rows[k][k].is_zero:
            pivot = next((i for i in range(k + 1, size) if not rows[i][k].is_zero), None)
            if pivot is None:
                return ring.zero
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]).exact_div(previous)
        previous = rows[k][k]
    det = rows[size - 1][size - 1]
    return det if sign > 0 else -det


def cofactor_det(matrix: Matrix, ring: Ring) -> Any:
    size = len(matrix)
    if size == 0:
        return ring.one
    if size == 1:
        return matrix[0][0]
    acc = ring.zero
    for j in range(size):
        entry = matrix[0][j]
        if entry.is_zero:
            continue
        minor = [row[:j] + row[j + 1:] for row in (list(r) for r in matrix[1:])]
        term = entry * cofactor_det(minor, ring)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc
