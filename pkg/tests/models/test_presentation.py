"""
Tests for presentation documents.
"""

import json

import pytest

from grlie.models.presentation import (
    PresentationDocument,
    dump_presentation,
    load_presentation,
    parse_presentation,
)
from grlie.services.groups.exceptions import PresentationParseError
from grlie.services.groups.families import vP_plus

TORUS = {"name": "torus", "generators": ["a", "b"], "relators": [["a", "b", "a^-1", "b^-1"]]}

def test_parse_presentation():
    """Test a valid document."""
    G = parse_presentation(json.dumps(TORUS))
    assert G.name == "torus"
    assert G.generators == ("a", "b")
    assert G.relators[0].letters == ((0, 1), (1, 1), (0, -1), (1, -1))

def test_powers_expand():
    """Test that a^2 expands to two letters."""
    G = parse_presentation(json.dumps({"generators": ["a", "b"], "relators": [["a^2", "b"]]}))
    assert G.relators[0].letters == ((0, 1), (0, 1), (1, 1))

@pytest.mark.parametrize("document", [
    "{not json",
    json.dumps({"relators": []}),
    json.dumps({"generators": ["a", "a"]}),
    json.dumps({"generators": ["a"], "relators": [["c"]]}),
    json.dumps({"generators": ["a"], "relators": [["a^0"]]}),
    json.dumps({"generators": ["a"], "relators": [["a", "a^-1"]]}),
])
def test_invalid_documents(document):
    """Test that every malformed document is a parse error."""
    with pytest.raises(PresentationParseError):
        parse_presentation(document)

def test_document_round_trip():
    """Test that dumping and parsing keeps the relators."""
    G = vP_plus(4)
    H = parse_presentation(dump_presentation(G))
    assert H.generators == G.generators
    assert H.relators == G.relators
    assert PresentationDocument.from_group(G).name == G.name

def test_load_presentation(tmp_path):
    """Test that unnamed files take their name from the file stem."""
    data = dict(TORUS, name="")
    path = tmp_path / "z2.json"
    path.write_text(json.dumps(data))
    assert load_presentation(str(path)).name == "z2"
    with pytest.raises(PresentationParseError):
        load_presentation(str(tmp_path / "missing.json"))
