import pytest

from planar_lie import InvalidInputError, InvalidParameters


def test_families(client):
    """Test that families are listed in catalog order."""
    families = client.catalog.families()
    assert families[0] == "abelian-rank2"
    assert families[-1] == "spectral"
    assert len(families) == 8


def test_emit_success(client):
    """Test emitting a family by its command-line name."""
    result = client.catalog.emit("nilpotent", {"N": 2})

    assert result["schema_version"] == "1"
    assert result["family"] == {"tag": "NilpotentNonAbelian", "params": {"N": 2}}
    assert result["basis"] == ["Dy", "Dx", "y*Dx", "y^2*Dx"]
    assert result["text"] == "Dy\nDx\ny*Dx\ny^2*Dx\n"
    assert result["verified"] is None
    assert result["recovered"] is None


def test_emit_by_tag_with_verify(client):
    """Test that verification classifies the emitted text back to its family."""
    result = client.catalog.emit("AbelianRank2", verify=True)

    assert result["basis"] == ["Dx", "Dy"]
    assert result["verified"] is True
    assert result["recovered"] == {"tag": "AbelianRank2", "params": {}}


def test_emit_verify_reports_recovered_family(client):
    """Test that a presentation of another family is reported, not raised."""
    result = client.catalog.emit("spectral", {"variant": 6, "S": "1:1"}, verify=True)

    assert result["verified"] is False
    assert result["recovered"]["tag"] == "SpectralType"
    assert result["recovered"]["params"]["variant"] == 2


@pytest.mark.parametrize(
    "family, params",
    [
        ("spectral", {"variant": 1, "S": "0:1"}),
        ("nilpotent", {"N": 0}),
        ("no-such-family", {}),
    ],
)
def test_emit_invalid_parameters(client, family, params):
    """Test that unknown families and failed side conditions raise InvalidParameters."""
    with pytest.raises(InvalidParameters):
        client.catalog.emit(family, params)


def test_emit_invalid_family_type(client):
    """Test that the family name must be a string."""
    with pytest.raises(InvalidInputError, match="Argument 'family' must be of type"):
        client.catalog.emit(3)


def test_audit_small_grid(client):
    """Test that audit returns serialisable diagnostics."""
    diagnostics = client.catalog.audit(max_order=1)
    assert isinstance(diagnostics, list)
    for entry in diagnostics:
        assert set(entry) >= {"family", "kind", "message"}
