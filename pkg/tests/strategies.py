"""Hypothesis strategies for exponential polynomials and vector fields."""

from hypothesis import strategies as st

from planar_lie.coeffring import ExpMonomial, ExpPoly, parse_scalar
from planar_lie.fields import VectorField

FREQUENCIES = [parse_scalar(s) for s in ("0", "1", "-1", "2", "1/2", "i", "-i", "1+i", "-3/2")]
COEFFICIENTS = [parse_scalar(s) for s in ("1", "-1", "2", "1/3", "-5/2", "i", "2-i")]

scalars = st.sampled_from(COEFFICIENTS)


@st.composite
def monomials(draw, max_degree=4, y_only=False):
    return ExpMonomial(
        0 if y_only else draw(st.integers(0, max_degree)),
        draw(st.integers(0, max_degree)),
        FREQUENCIES[0] if y_only else draw(st.sampled_from(FREQUENCIES)),
        draw(st.sampled_from(FREQUENCIES)),
    )


@st.composite
def exppolys(draw, max_terms=6, max_degree=4, y_only=False):
    pairs = draw(
        st.lists(
            st.tuples(monomials(max_degree, y_only), scalars),
            max_size=max_terms,
        )
    )
    return ExpPoly._accumulate(pairs)


@st.composite
def vector_fields(draw, max_terms=6, max_degree=4):
    return VectorField(
        draw(exppolys(max_terms, max_degree)), draw(exppolys(max_terms, max_degree))
    )


@st.composite
def triangular_fields(draw, max_terms=4, max_degree=3):
    return VectorField(
        draw(exppolys(max_terms, max_degree)),
        draw(exppolys(max_terms, max_degree, y_only=True)),
    )


@st.composite
def shearable_fields(draw, max_terms=4, max_degree=3):
    """Fields without x-exponentials, closed under every x-shear."""

    def _no_x_exp(p):
        return ExpPoly._accumulate(
            (ExpMonomial(m.xdeg, m.ydeg, FREQUENCIES[0], m.yfreq), c) for m, c in p.terms.items()
        )

    return VectorField(
        _no_x_exp(draw(exppolys(max_terms, max_degree))),
        _no_x_exp(draw(exppolys(max_terms, max_degree))),
    )
