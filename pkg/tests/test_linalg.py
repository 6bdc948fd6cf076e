import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from planar_lie.coeffring import ONE, ZERO, gq
from planar_lie.linalg import (
    charpoly,
    independent_columns,
    matmul,
    matpow,
    matvec,
    nullspace,
    rank,
    rref,
    shifted,
    solve_in_span,
)

small_ints = st.integers(-3, 3)


def _matrix(entries):
    return [tuple(gq(v) for v in row) for row in entries]


@st.composite
def int_matrices(draw, max_size=4):
    nrows = draw(st.integers(1, max_size))
    ncols = draw(st.integers(1, max_size))
    return [[draw(small_ints) for _ in range(ncols)] for _ in range(nrows)]


# --- Elimination ---


def test_rref_and_pivots():
    """rref returns the reduced form and the pivot columns."""
    reduced, pivots = rref(_matrix([[2, 4], [1, 2]]), 2)
    assert pivots == (0,)
    assert reduced[0] == (ONE, gq(2))
    assert reduced[1] == (ZERO, ZERO)


@given(int_matrices())
def test_rank_matches_floating_oracle(entries):
    """Exact rank agrees with numpy on small integer matrices."""
    ncols = len(entries[0])
    assert rank(_matrix(entries), ncols) == np.linalg.matrix_rank(np.array(entries, dtype=float))


def test_independent_columns_greedy_order():
    """Dependent columns are skipped in input order."""
    columns = [(ONE, ZERO), (gq(2), ZERO), (ZERO, ONE)]
    assert independent_columns(columns, 2) == [0, 2]
    assert independent_columns([], 2) == []


def test_solve_in_span():
    """Coordinates are exact; targets outside the span give None."""
    columns = [(ONE, ZERO, ONE), (ZERO, ONE, ONE)]
    assert solve_in_span(columns, (gq(2), gq(3), gq(5))) == (gq(2), gq(3))
    assert solve_in_span(columns, (ONE, ONE, ZERO)) is None
    assert solve_in_span([], (ZERO, ZERO)) == ()


@given(int_matrices())
def test_nullspace_vectors_are_annihilated(entries):
    """Every nullspace vector maps to zero and the dimensions add up."""
    m = _matrix(entries)
    ncols = len(entries[0])
    kernel = nullspace(m, ncols)
    assert len(kernel) + rank(m, ncols) == ncols
    for v in kernel:
        assert not any(matvec(m, v))


# --- Products and characteristic polynomials ---


def test_matmul_and_powers():
    """A nilpotent Jordan block squares to zero."""
    n = _matrix([[0, 1], [0, 0]])
    assert matmul(n, n) == _matrix([[0, 0], [0, 0]])
    assert matpow(n, 0) == _matrix([[1, 0], [0, 1]])


def test_shifted_subtracts_on_diagonal():
    """shifted(a, lam) == a - lam*I."""
    assert shifted(_matrix([[1, 2], [3, 4]]), gq(1)) == _matrix([[0, 2], [3, 3]])


def test_charpoly_leading_first():
    """charpoly of diag(1, 2) is t^2 - 3t + 2."""
    assert charpoly(_matrix([[1, 0], [0, 2]])) == [ONE, gq(-3), gq(2)]
    assert charpoly([]) == [ONE]


def test_charpoly_of_rotation_has_gaussian_roots():
    """The rotation generator has charpoly t^2 + 1."""
    assert charpoly(_matrix([[0, -1], [1, 0]])) == [ONE, ZERO, ONE]
