import pytest
from hypothesis import given
from hypothesis import strategies as st

from planar_lie.coeffring import ExpPoly, parse_scalar
from planar_lie.exceptions import ExprSyntaxError, MixedBasis, RingViolation
from planar_lie.expr import (
    parse_algebra_file,
    parse_exppoly,
    parse_field,
    print_field,
    tokenize,
)
from planar_lie.fields import VectorField
from planar_lie.utils.constants import (
    MAX_DEGREE,
    MAX_EXPONENT,
    MAX_NESTING,
    MAX_NUMBER_DIGITS,
    MAX_TERMS,
)
from tests.constants import BAD_SYNTAX_FILE, COMMENTED_FILE, EMPTY_FILE
from tests.strategies import exppolys, vector_fields

x = ExpPoly.x()
y = ExpPoly.y()
DX = VectorField.dx()
DY = VectorField.dy()

# --- Tokenizer ---


def test_tokenize_positions():
    """Tokens carry 1-based line and column numbers."""
    tokens = list(tokenize("2*exp(y)\n  Dx", line=4))
    assert [(t.kind, t.text, t.line, t.column) for t in tokens] == [
        ("NUMBER", "2", 4, 1),
        ("OP", "*", 4, 2),
        ("NAME", "exp", 4, 3),
        ("OP", "(", 4, 6),
        ("NAME", "y", 4, 7),
        ("OP", ")", 4, 8),
        ("NAME", "Dx", 5, 3),
        ("EOF", "", 5, 5),
    ]


# --- Parsing fields ---


@pytest.mark.parametrize(
    "text, expected",
    [
        ("Dx", DX),
        ("-Dy", -DY),
        ("(y^2 + x)*Dx", VectorField(y * y + x)),
        ("x*(Dx + Dy)", VectorField(x, x)),
        ("-(Dx - Dy)", VectorField(ExpPoly.const(-1), ExpPoly.const(1))),
        ("1/2*i*Dx", VectorField(ExpPoly.const(parse_scalar("1/2*i")))),
        ("2*exp(x - y)*Dy", VectorField(ExpPoly.zero(), 2 * ExpPoly.exp(1, -1))),
        ("exp(i*y)*Dx", VectorField(ExpPoly.exp(yfreq=parse_scalar("i")))),
        ("0*Dx", VectorField.zero()),
        ("Dx - Dx", VectorField.zero()),
        ("y * Dx   +   Dy", VectorField(y, ExpPoly.const(1))),
    ],
)
def test_parse_field(text, expected):
    """Fields are expanded into P*Dx + Q*Dy."""
    assert parse_field(text) == expected


def test_parse_exppoly():
    """Coefficient expressions are parsed without a basis symbol."""
    assert parse_exppoly("(x + 1)^2") == (x + 1) ** 2
    assert parse_exppoly("0") == ExpPoly.zero()
    assert parse_exppoly(b"y*exp(2*y)") == y * ExpPoly.exp(yfreq=2)


# --- Syntax errors ---


@pytest.mark.parametrize(
    "text, message, column",
    [
        ("z*Dx", "Unknown identifier 'z'", 1),
        ("Dx $", "Unexpected character '\\$'", 4),
        ("(x*Dx", "Expected '\\)', found 'end of input'", 6),
        ("x**Dx", "Unexpected '\\*'", 3),
        ("Dx )", "Unexpected '\\)'", 4),
        ("1/0*Dx", "Zero denominator", 3),
        ("1/x*Dx", "Expected a denominator", 3),
        ("y^-1*Dx", "Exponent must be a non-negative integer", 3),
        (f"y^{MAX_EXPONENT + 1}*Dx", f"Exponent exceeds {MAX_EXPONENT}", 3),
        ("x + Dx", "Summand without Dx or Dy", 1),
        ("x + y", "Summand without Dx or Dy", 1),
        ("0", "Expression has no Dx or Dy", 1),
        ("", "Unexpected 'end of input'", 1),
    ],
)
def test_parse_field_errors(text, message, column):
    """Malformed fields raise ExprSyntaxError with a position."""
    with pytest.raises(ExprSyntaxError, match=message) as excinfo:
        parse_field(text)
    assert (excinfo.value.line, excinfo.value.column) == (1, column)


@pytest.mark.parametrize(
    "text",
    ["exp(Dx)*Dy", "exp(x*y)*Dx", "exp(1)*Dx", "exp(exp(y))*Dx", "exp(y^2)*Dx"],
)
def test_exp_argument_must_be_linear(text):
    """exp accepts linear forms in x and y only."""
    with pytest.raises(RingViolation):
        parse_field(text)


@pytest.mark.parametrize("text", ["Dx*Dy", "Dx^2", "(Dx + y)*Dy"])
def test_basis_symbols_cannot_be_multiplied(text):
    """Every summand carries at most one basis symbol."""
    with pytest.raises(MixedBasis):
        parse_field(text)


def test_coefficient_expression_rejects_basis_symbols():
    """parse_exppoly refuses Dx and Dy."""
    with pytest.raises(ExprSyntaxError, match="contains Dx or Dy"):
        parse_exppoly("x*Dx")


# --- Resource limits ---


def test_nesting_limit():
    """Parenthesis depth is bounded."""
    depth = MAX_NESTING + 1
    with pytest.raises(ExprSyntaxError, match=f"Nesting deeper than {MAX_NESTING}"):
        parse_field("(" * depth + "Dx" + ")" * depth)
    assert parse_field("(" * 10 + "Dx" + ")" * 10) == DX


def test_degree_limit():
    """Expanded degrees are bounded."""
    factors = "*".join([f"x^{MAX_EXPONENT}"] * (MAX_DEGREE // MAX_EXPONENT + 1))
    with pytest.raises(ExprSyntaxError, match=f"Degree exceeds {MAX_DEGREE}"):
        parse_field(f"{factors}*Dx")


def test_number_length_limit():
    """Integer literals are bounded in length."""
    digits = "9" * (MAX_NUMBER_DIGITS + 1)
    with pytest.raises(ExprSyntaxError, match="Number longer than") as excinfo:
        parse_field(f"y + {digits}*Dx")
    assert excinfo.value.column == 5
    assert parse_field("9" * MAX_NUMBER_DIGITS + "*Dx") == VectorField(
        ExpPoly.const(int("9" * MAX_NUMBER_DIGITS))
    )


def test_term_count_limit():
    """Expansions with too many distinct monomials are rejected."""
    with pytest.raises(ExprSyntaxError, match=f"more than {MAX_TERMS} terms"):
        parse_field("(exp(y) + exp(i*y) + exp(x) + exp(i*x))^64*Dx")
    assert len(parse_field("(exp(y) + exp(i*y) + exp(x) + exp(i*x))^3*Dx").p.terms) == 20


# --- Algebra files ---


def test_parse_algebra_file_skips_comments_and_blank_lines():
    """One field per non-empty line; '#' starts a comment."""
    assert parse_algebra_file(COMMENTED_FILE) == [DY, DX, VectorField(y)]
    assert parse_algebra_file(EMPTY_FILE) == []


def test_parse_algebra_file_accepts_bytes():
    """Raw bytes are decoded as UTF-8."""
    assert parse_algebra_file(COMMENTED_FILE.encode("utf-8")) == [DY, DX, VectorField(y)]


def test_parse_algebra_file_reports_line_numbers():
    """Errors point at the offending line of the file."""
    with pytest.raises(ExprSyntaxError) as excinfo:
        parse_algebra_file(BAD_SYNTAX_FILE)
    assert (excinfo.value.line, excinfo.value.column) == (2, 3)


def test_parse_algebra_file_rejects_invalid_utf8():
    """Undecodable bytes are a positioned syntax error."""
    with pytest.raises(ExprSyntaxError, match="not valid UTF-8") as excinfo:
        parse_algebra_file(b"Dx\ny*\xffDy\n")
    assert (excinfo.value.line, excinfo.value.column) == (2, 3)


def test_parse_algebra_file_splits_on_newlines_only():
    """Form feeds and other Unicode separators are whitespace, not line breaks."""
    assert parse_algebra_file("Dx\x0c\nDy\x0b\n\x1ey*Dx\n") == [DX, DY, VectorField(y)]
    with pytest.raises(ExprSyntaxError) as excinfo:
        parse_algebra_file("Dx\x0c\nDy\x0b\n(Dx\n")
    assert excinfo.value.line == 3


# --- Printing ---


def test_print_field_examples():
    """Printing follows the canonical monomial order."""
    assert print_field(VectorField(x + y * y)) == "(y^2 + x)*Dx"
    assert print_field(VectorField.zero()) == "0*Dx"


@given(vector_fields())
def test_print_then_parse_is_identity(v):
    """Every printed field parses back to itself."""
    assert parse_field(print_field(v)) == v


@given(exppolys())
def test_exppoly_print_then_parse_is_identity(p):
    """Printed coefficients parse back to themselves."""
    assert parse_exppoly(str(p)) == p


# --- Fuzzing ---


@given(st.binary(max_size=64))
def test_arbitrary_bytes_only_raise_syntax_errors(data):
    """Garbage input never escapes as anything but ExprSyntaxError."""
    try:
        parse_algebra_file(data)
    except ExprSyntaxError:
        pass


@given(st.text(alphabet="xyiDexp0123456789+-*/^() \n#", max_size=40))
def test_grammar_like_text_only_raises_syntax_errors(text):
    """Near-miss expressions fail cleanly with a position."""
    try:
        parse_algebra_file(text)
    except ExprSyntaxError as e:
        assert e.line >= 1 and e.column >= 1


@given(st.integers(MAX_NUMBER_DIGITS + 1, 6000), st.sampled_from(["", "y + ", "(x*"]))
def test_long_numbers_only_raise_syntax_errors(length, prefix):
    """Huge literals fail as syntax errors instead of escaping int() limits."""
    with pytest.raises(ExprSyntaxError, match="Number longer than"):
        parse_algebra_file(prefix + "7" * length + "*Dx\n")
