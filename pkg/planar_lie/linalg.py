"""Exact linear algebra over Q(i), backed by sympy's ``DomainMatrix``."""

from __future__ import annotations

from collections.abc import Sequence

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from .coeffring import ONE, ZERO, GaussianRational

Vector = tuple[GaussianRational, ...]
Rows = Sequence[Sequence[GaussianRational]]


def to_domain_matrix(rows: Rows, ncols: int | None = None) -> DomainMatrix:
    nrows = len(rows)
    width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    return DomainMatrix([list(r) for r in rows], (nrows, width), QQ_I)


def to_rows(matrix: DomainMatrix) -> list[Vector]:
    return [tuple(row) for row in matrix.to_list()]


def identity(n: int) -> list[Vector]:
    return [tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)]


def rref(rows: Rows, ncols: int) -> tuple[list[Vector], tuple[int, ...]]:
    """Reduced row echelon form and pivot columns."""
    if not rows or ncols == 0:
        return [tuple(r) for r in rows], ()
    reduced, pivots = to_domain_matrix(rows, ncols).rref()
    return to_rows(reduced), tuple(pivots)


def rank(rows: Rows, ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def independent_columns(columns: Sequence[Vector], nrows: int) -> list[int]:
    """Indices of a maximal independent subset, greedy in input order."""
    if not columns:
        return []
    rows = [tuple(col[r] for col in columns) for r in range(nrows)]
    return list(rref(rows, len(columns))[1])


def solve_in_span(columns: Sequence[Vector], target: Vector) -> Vector | None:
    """Coordinates ``c`` with ``sum c_j * columns[j] == target``; columns independent."""
    n = len(columns)
    if n == 0:
        return () if not any(target) else None
    nrows = len(target)
    augmented = [tuple(col[r] for col in columns) + (target[r],) for r in range(nrows)]
    reduced, pivots = rref(augmented, n + 1)
    if n in pivots:
        return None
    coords = [ZERO] * n
    for row_index, column in enumerate(pivots):
        coords[column] = reduced[row_index][n]
    return tuple(coords)


def nullspace(rows: Rows, ncols: int) -> list[Vector]:
    """Basis of ``{v : rows @ v == 0}``."""
    if ncols == 0:
        return []
    if not rows:
        return identity(ncols)
    reduced, pivots = rref(rows, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    basis: list[Vector] = []
    for f in free:
        vec = [ZERO] * ncols
        vec[f] = ONE
        for row_index, column in enumerate(pivots):
            vec[column] = -reduced[row_index][f]
        basis.append(tuple(vec))
    return basis


def matmul(a: Rows, b: Rows) -> list[Vector]:
    n = len(b[0]) if b else 0
    return to_rows(to_domain_matrix(a, len(b)).matmul(to_domain_matrix(b, n)))


def matvec(a: Rows, v: Vector) -> Vector:
    return tuple(
        sum((a_ij * v_j for a_ij, v_j in zip(row, v, strict=True)), ZERO) for row in a
    )


def shifted(a: Rows, lam: GaussianRational) -> list[Vector]:
    """``a - lam * I``."""
    return [
        tuple(entry - lam if i == j else entry for j, entry in enumerate(row))
        for i, row in enumerate(a)
    ]


def matpow(a: Rows, k: int) -> list[Vector]:
    result = identity(len(a))
    for _ in range(k):
        result = matmul(result, a)
    return result


def charpoly(a: Rows) -> list[GaussianRational]:
    """Characteristic polynomial coefficients, leading coefficient first."""
    n = len(a)
    if n == 0:
        return [ONE]
    return list(to_domain_matrix(a, n).charpoly())
