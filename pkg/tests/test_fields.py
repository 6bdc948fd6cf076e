import pytest
from hypothesis import given

from planar_lie.coeffring import ExpPoly
from planar_lie.exceptions import NotTriangular
from planar_lie.fields import (
    VectorField,
    bracket,
    format_field,
    is_triangular,
    line_bracket,
    project_y,
)
from tests.strategies import scalars, triangular_fields, vector_fields

x = ExpPoly.x()
y = ExpPoly.y()
DX = VectorField.dx()
DY = VectorField.dy()

# --- Brackets of coordinate fields ---


def test_bracket_of_euler_and_translations():
    """[x*Dx, Dx] = -Dx and [Dy, y^2*Dx] = 2*y*Dx."""
    assert bracket(VectorField(x), DX) == -DX
    assert bracket(DY, VectorField(y * y)) == VectorField(2 * y)


def test_bracket_leaving_a_span():
    """[x*Dy, y*Dx] = x*Dx - y*Dy."""
    result = bracket(VectorField(ExpPoly.zero(), x), VectorField(y))
    assert result == VectorField(x, -y)
    assert format_field(result) == "x*Dx - y*Dy"


def test_bracket_with_exponentials():
    """[x*Dx + Dy, exp(2y)*Dx] = exp(2y)*Dx."""
    e2 = ExpPoly.exp(yfreq=2)
    assert bracket(VectorField(x, ExpPoly.const(1)), VectorField(e2)) == VectorField(e2)


# --- Formatting ---


@pytest.mark.parametrize(
    "field, text",
    [
        (VectorField.zero(), "0*Dx"),
        (DX, "Dx"),
        (-DY, "-Dy"),
        (VectorField(y, ExpPoly.const(1)), "y*Dx + Dy"),
        (VectorField(x + y * y), "(y^2 + x)*Dx"),
        (VectorField(ExpPoly.const(3) * y * y), "3*y^2*Dx"),
        (VectorField(ExpPoly.zero(), -y), "-y*Dy"),
    ],
)
def test_format_field(field, text):
    """Fields print as P*Dx + Q*Dy with parenthesised sums."""
    assert format_field(field) == text
    assert str(field) == text


# --- Triangular fields and the projection ---


def test_is_triangular_and_projection():
    """project_y keeps eta(y) and rejects x-dependent Dy coefficients."""
    v = VectorField(x * y, y * y)
    assert is_triangular(v)
    assert project_y(v) == y * y
    with pytest.raises(NotTriangular):
        project_y(VectorField(ExpPoly.zero(), x))


@given(triangular_fields(), triangular_fields())
def test_projection_is_a_homomorphism(v, w):
    """Projecting a bracket of triangular fields brackets the projections."""
    assert project_y(bracket(v, w)) == line_bracket(project_y(v), project_y(w))


# --- Algebraic laws ---


@given(vector_fields(), vector_fields())
def test_antisymmetry(v, w):
    """[v, w] == -[w, v] and [v, v] == 0."""
    assert bracket(v, w) == -bracket(w, v)
    assert not bracket(v, v)


@given(vector_fields(), vector_fields(), vector_fields(), scalars)
def test_bilinearity(u, v, w, c):
    """The bracket is linear in its first slot (hence in both)."""
    assert bracket(u * c + v, w) == bracket(u, w) * c + bracket(v, w)


@given(
    vector_fields(max_terms=3, max_degree=3),
    vector_fields(max_terms=3, max_degree=3),
    vector_fields(max_terms=3, max_degree=3),
)
def test_jacobi_identity(u, v, w):
    """[u, [v, w]] + [v, [w, u]] + [w, [u, v]] == 0 exactly."""
    total = (
        bracket(u, bracket(v, w))
        + bracket(v, bracket(w, u))
        + bracket(w, bracket(u, v))
    )
    assert not total
