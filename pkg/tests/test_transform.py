import pytest
from hypothesis import given
from hypothesis import strategies as st

from planar_lie.algebra import make_span, same_span
from planar_lie.coeffring import ExpPoly, gq, parse_scalar
from planar_lie.exceptions import InvalidInputError, RingEscape
from planar_lie.fields import VectorField, bracket
from planar_lie.transform import (
    AffineY,
    ShearX,
    Swap,
    TransformChain,
    affine_y,
    as_chain,
    pushforward,
    pushforward_algebra,
    shear_x,
    solve_antiderivative,
)
from tests.strategies import exppolys, shearable_fields, vector_fields

x = ExpPoly.x()
y = ExpPoly.y()
DX = VectorField.dx()
DY = VectorField.dy()

nonzero = st.sampled_from([parse_scalar(s) for s in ("1", "2", "-1/2", "i", "1-i")])
y_polys = exppolys(max_terms=3, max_degree=3, y_only=True).map(
    lambda p: ExpPoly._accumulate(
        (m, c) for m, c in p.terms.items() if not m.yfreq
    )
)


@st.composite
def chains(draw):
    steps = []
    for _ in range(draw(st.integers(0, 3))):
        if draw(st.booleans()):
            steps.append(ShearX(draw(nonzero), draw(y_polys)))
        else:
            steps.append(AffineY(draw(nonzero), draw(st.sampled_from([gq(0), gq(1), gq(-2)]))))
    return TransformChain(tuple(steps))


# --- Individual moves ---


def test_shear_straightens_sheared_translation():
    """x -> x - y^2/2 sends y*Dx + Dy to Dy and fixes Dx."""
    shear = shear_x(1, y * y * parse_scalar("-1/2"))
    assert shear.pushforward(VectorField(y, ExpPoly.const(1))) == DY
    assert shear.pushforward(DX) == DX


def test_shear_rescales_x():
    """x -> 2*x doubles Dx and leaves x*Dx alone."""
    shear = shear_x(2)
    assert pushforward(shear, DX) == DX * 2
    assert pushforward(shear, VectorField(x)) == VectorField(x)


def test_affine_y_moves():
    """y -> 2*y doubles Dy; y -> y + 1 shifts polynomial coefficients."""
    assert affine_y(2).pushforward(DY) == DY * 2
    assert affine_y(1, 1).pushforward(VectorField(y)) == VectorField(y - 1)
    assert affine_y(2).pushforward(VectorField(ExpPoly.exp(yfreq=2))) == VectorField(
        ExpPoly.exp(yfreq=1)
    )


def test_swap_exchanges_coordinates():
    """Swap sends x*Dx to y*Dy and is its own inverse."""
    assert Swap().pushforward(VectorField(x)) == VectorField(ExpPoly.zero(), y)
    assert Swap().inverse() == Swap()


def test_identity_detection():
    """Only the trivial shear and affine maps are identities."""
    assert ShearX().is_identity
    assert AffineY().is_identity
    assert not shear_x(1, y).is_identity
    assert not Swap().is_identity


# --- Invalid moves ---


def test_degenerate_moves_are_rejected():
    """alpha and beta must be invertible and offsets depend on y only."""
    with pytest.raises(InvalidInputError, match="alpha != 0"):
        shear_x(0)
    with pytest.raises(InvalidInputError, match="beta != 0"):
        affine_y(0)
    with pytest.raises(InvalidInputError, match="y only"):
        shear_x(1, x)


def test_ring_escapes():
    """Shifting inside an exponential leaves the coefficient ring."""
    with pytest.raises(RingEscape):
        shear_x(1, y).pushforward(VectorField(ExpPoly.exp(xfreq=1)))
    with pytest.raises(RingEscape):
        affine_y(1, 1).pushforward(VectorField(ExpPoly.exp(yfreq=1)))


# --- Chains and serialisation ---


def test_chain_json_round_trip():
    """to_json and from_json agree on every kind."""
    chain = TransformChain((shear_x(2, y * y), affine_y("1/2", -1), Swap()))
    data = chain.to_json()
    assert data == [
        {"kind": "ShearX", "alpha": "2", "f": "y^2"},
        {"kind": "AffineY", "beta": "1/2", "c": "-1"},
        {"kind": "Swap"},
    ]
    assert TransformChain.from_json(data) == chain


def test_chain_from_json_defaults():
    """Omitted parameters default to the identity."""
    assert TransformChain.from_json([{"kind": "ShearX"}, {"kind": "AffineY"}]) == TransformChain(
        (ShearX(), AffineY())
    )


@pytest.mark.parametrize(
    "data, message",
    [
        ([{"alpha": "1"}], "Malformed transform step"),
        (["ShearX"], "Malformed transform step"),
        ([{"kind": "Rotate"}], "Unknown transform kind 'Rotate'"),
    ],
)
def test_chain_from_json_rejects_bad_steps(data, message):
    """Malformed chains raise InvalidInputError."""
    with pytest.raises(InvalidInputError, match=message):
        TransformChain.from_json(data)


def test_chain_composition_helpers():
    """then appends steps; as_chain wraps a single move."""
    chain = as_chain(shear_x(2))
    assert len(chain) == 1
    longer = chain.then(Swap()).then(TransformChain((affine_y(2),)))
    assert [type(s) for s in longer] == [ShearX, Swap, AffineY]


def test_pushforward_algebra_keeps_basis_order(span_of):
    """Basis order and dimension survive a pushforward."""
    g = span_of("y*Dx + Dy\nDx\n")
    pushed = pushforward_algebra(shear_x(1, y * y * parse_scalar("-1/2")), g)
    assert pushed.basis == (DY, DX)
    assert same_span(pushed, make_span([DX, DY]))


# --- Antiderivatives ---


@pytest.mark.parametrize(
    "h, expected",
    [
        ("y", "1/2*y^2"),
        ("exp(2*y)", "1/2*exp(2*y)"),
        ("y*exp(y)", "-exp(y) + y*exp(y)"),
    ],
)
def test_solve_antiderivative(h, expected):
    """d/dy of the result gives back h with zero integration constant."""
    from planar_lie.expr import parse_exppoly

    result = solve_antiderivative(parse_exppoly(h))
    assert result == parse_exppoly(expected)
    assert result.diff("y") == parse_exppoly(h)


def test_solve_antiderivative_rejects_x():
    """Only functions of y can be integrated."""
    with pytest.raises(InvalidInputError):
        solve_antiderivative(x)


@given(exppolys(max_terms=4, max_degree=3, y_only=True))
def test_antiderivative_property(h):
    """The derivative of the antiderivative is the integrand."""
    assert solve_antiderivative(h).diff("y") == h


# --- Structural laws ---


@given(shearable_fields(), shearable_fields(), nonzero, y_polys)
def test_shear_preserves_brackets(v, w, alpha, f):
    """Pushforward by a diffeomorphism is a Lie algebra homomorphism."""
    shear = ShearX(alpha, f)
    assert shear.pushforward(bracket(v, w)) == bracket(shear.pushforward(v), shear.pushforward(w))


@given(vector_fields(max_terms=4, max_degree=3), vector_fields(max_terms=4, max_degree=3), nonzero)
def test_scaling_and_swap_preserve_brackets(v, w, beta):
    """y -> beta*y and the coordinate swap respect brackets."""
    for move in (AffineY(beta), Swap()):
        assert move.pushforward(bracket(v, w)) == bracket(move.pushforward(v), move.pushforward(w))


@given(chains(), shearable_fields())
def test_chain_inverse_round_trip(chain, v):
    """A chain followed by its inverse is the identity on fields it can push."""
    try:
        pushed = chain.pushforward(v)
    except RingEscape:
        return
    assert chain.inverse().pushforward(pushed) == v
