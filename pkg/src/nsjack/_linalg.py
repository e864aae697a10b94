"""Dense exact linear algebra over Fraction, sized for single homogeneous degrees."""

from fractions import Fraction
from typing import Sequence

from .errors import SingularParameterError


def inverse(matrix: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse; raises SingularParameterError if the matrix is singular."""
    n = len(matrix)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularParameterError(f"singular {n}x{n} system at column {col}")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = 1 / aug[col][col]
        row_c = [v * inv_p for v in aug[col]]
        aug[col] = row_c
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                row_r = aug[r]
                aug[r] = [a - factor * b for a, b in zip(row_r, row_c)]
    return [row[n:] for row in aug]


def solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve matrix * x = rhs for a square nonsingular matrix."""
    n = len(matrix)
    aug = [list(map(Fraction, row)) + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularParameterError(f"singular {n}x{n} system at column {col}")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = 1 / aug[col][col]
        row_c = [v * inv_p for v in aug[col]]
        aug[col] = row_c
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], row_c)]
    return [row[n] for row in aug]


def solve_least(columns: Sequence[Sequence[Fraction]], target: Sequence[Fraction]):
    """Coefficients c with sum_j c_j columns[j] = target, or None if target is outside the span.

    The columns must be linearly independent.
    """
    m = len(target)
    n = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(n)] + [Fraction(target[i])] for i in range(m)]
    pivots = []
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, m) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularParameterError("dependent spanning set")
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv_p = 1 / aug[row][col]
        aug[row] = [v * inv_p for v in aug[row]]
        for r in range(m):
            if r != row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    if any(aug[r][n] != 0 for r in range(row, m)):
        return None
    return [aug[i][n] for i in range(n)]


def matmul(a, b):
    return [[sum((a[i][t] * b[t][j] for t in range(len(b))), start=Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]
