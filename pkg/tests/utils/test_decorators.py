import pytest

from planar_lie.exceptions import InvalidInputError
from planar_lie.utils.decorators import required_args


class SourceReader:
    @required_args(["source", "family"], types={"source": (str, bytes), "family": str})
    def method(self, source, family, params=None):
        return source, family, params


def test_required_args_success():
    """Test that the decorator allows valid arguments."""
    obj = SourceReader()
    assert obj.method("Dx", "nilpotent") == ("Dx", "nilpotent", None)
    assert obj.method(source=b"Dx", family="rank1", params={"spectrum": "1"}) == (
        b"Dx",
        "rank1",
        {"spectrum": "1"},
    )


def test_required_args_missing_arg():
    """Test that a missing argument is re-raised as InvalidInputError."""
    obj = SourceReader()
    with pytest.raises(InvalidInputError, match="missing a required argument"):
        obj.method(source="Dx")


def test_required_args_none_value():
    """Test that None values for required arguments raise InvalidInputError."""
    obj = SourceReader()
    with pytest.raises(InvalidInputError, match="Argument 'source' cannot be None."):
        obj.method(source=None, family="spectral")

    with pytest.raises(InvalidInputError, match="Argument 'family' cannot be None."):
        obj.method(source="Dx", family=None)


@pytest.mark.parametrize("source", ["", b""])
def test_required_args_empty_value(source):
    """Test that empty strings and byte strings raise InvalidInputError."""
    obj = SourceReader()
    with pytest.raises(InvalidInputError, match="Argument 'source' cannot be empty."):
        obj.method(source=source, family="spectral")


def test_required_args_wrong_type():
    """Test that arguments with wrong types raise InvalidInputError."""
    obj = SourceReader()
    with pytest.raises(InvalidInputError, match="Argument 'source' must be of type"):
        obj.method(source=42, family="spectral")

    with pytest.raises(
        InvalidInputError, match="Argument 'family' must be of type <class 'str'>."
    ):
        obj.method(source="Dx", family=3)


def test_required_args_allow_zero_false():
    """Test that 0 and False are not considered empty."""

    @required_args(["max_order", "witness"], types={"max_order": int, "witness": bool})
    def func(max_order, witness):
        return max_order, witness

    assert func(0, False) == (0, False)


def test_required_args_list_validation():
    """Test validation for chains given as lists."""

    @required_args(["chain"], types={"chain": (str, list)})
    def func(chain):
        return chain

    assert func([{"kind": "Swap"}]) == [{"kind": "Swap"}]

    with pytest.raises(InvalidInputError, match="Argument 'chain' cannot be empty."):
        func([])

    with pytest.raises(InvalidInputError, match="Argument 'chain' must be of type"):
        func({"kind": "Swap"})
