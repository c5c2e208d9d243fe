import json

import pytest
from pydantic import ValidationError

from starcat.document import Document, document_from
from starcat.errors import DocumentError
from starcat.scalars import RingId
from tests.helpers import mor, obj

SAMPLE = {
    "ring": "rational",
    "objects": {"X": {"weights": ["1"]}, "Y": {"weights": ["1/2", "3"]}},
    "morphisms": {
        "f": {"dom": "X", "cod": "Y", "matrix": [["1/2"], ["-2"]]}
    },
    "verdicts": {},
}


class TestParsing:
    """Test reading documents."""

    def test_resolve_morphism(self):
        """Test that weights and entries resolve to exact values."""
        document = Document.from_json(json.dumps(SAMPLE))
        f = document.resolve_morphism("f")
        assert f == mor([["1/2"], [-2]], cod=obj("1/2", 3))

    def test_missing_sections_default_to_empty(self):
        """Test that only the ring is required."""
        document = Document.from_json('{"ring": "gaussian"}')
        assert document.ring is RingId.GAUSSIAN
        assert document.resolve_all() == {}

    def test_unknown_object_raises_error(self):
        """Test that a dangling object reference is reported."""
        data = json.loads(json.dumps(SAMPLE))
        data["morphisms"]["f"]["cod"] = "Z"
        document = Document.model_validate(data)
        with pytest.raises(DocumentError, match="'Z'"):
            document.resolve_morphism("f")

    def test_unknown_morphism_raises_error(self):
        """Test that resolving an absent name fails."""
        document = Document.model_validate(SAMPLE)
        with pytest.raises(DocumentError):
            document.resolve_morphism("g")

    def test_bad_literal_raises_error(self):
        """Test that a malformed scalar is reported with its morphism."""
        data = json.loads(json.dumps(SAMPLE))
        data["morphisms"]["f"]["matrix"] = [["1/0"], ["2"]]
        document = Document.model_validate(data)
        with pytest.raises(DocumentError, match="'f'"):
            document.resolve_morphism("f")

    def test_nonpositive_weight_raises_error(self):
        """Test that objects need positive weights."""
        data = json.loads(json.dumps(SAMPLE))
        data["objects"]["X"]["weights"] = ["-1"]
        document = Document.model_validate(data)
        with pytest.raises(DocumentError):
            document.resolve_object("X")

    def test_shape_mismatch_raises_error(self):
        """Test that the matrix must fit its objects."""
        data = json.loads(json.dumps(SAMPLE))
        data["morphisms"]["f"]["matrix"] = [["1"]]
        document = Document.model_validate(data)
        with pytest.raises(DocumentError):
            document.resolve_all()

    def test_extra_keys_raise_error(self):
        """Test that unknown keys are rejected."""
        data = json.loads(json.dumps(SAMPLE))
        data["objects"]["X"]["weight"] = ["1"]
        with pytest.raises(ValidationError):
            Document.model_validate(data)

    def test_quaternion_literals(self):
        """Test entries with all four units."""
        document = Document.model_validate(
            {
                "ring": "quaternion",
                "objects": {"X": {"weights": ["1"]}},
                "morphisms": {
                    "q": {
                        "dom": "X",
                        "cod": "X",
                        "matrix": [["1+i-j+1/2*k"]],
                    }
                },
            }
        )
        q = document.resolve_morphism("q")
        assert q == mor([["1+i-j+1/2*k"]], ring=RingId.QUATERNION)


class TestEmission:
    """Test writing results into documents."""

    def test_equal_objects_are_reused(self):
        """Test that an object already present keeps its name."""
        document = Document.model_validate(SAMPLE)
        document.add_morphism("g", mor([[1, 1]], dom=obj("1/2", 3)))
        assert document.morphisms["g"].dom == "Y"
        assert document.morphisms["g"].cod == "X"

    def test_fresh_objects_get_suffixes(self):
        """Test the "#2" suffix for a second new object."""
        document = Document(ring=RingId.RATIONAL)
        document.add_morphism(
            "h", mor([[1]], dom=obj(2), cod=obj(3)), object_base="k(f)"
        )
        assert document.morphisms["h"].dom == "k(f)"
        assert document.morphisms["h"].cod == "k(f)#2"
        assert document.objects["k(f)#2"].weights == ["3"]

    def test_ring_mismatch_raises_error(self):
        """Test that morphisms must live over the document's ring."""
        document = Document(ring=RingId.GAUSSIAN)
        with pytest.raises(DocumentError):
            document.add_morphism("f", mor([[1]]))

    def test_to_json_is_canonical(self):
        """Test sorted keys, two-space indent and trailing newline."""
        text = document_from(RingId.RATIONAL, {"f": mor([["1/2"]])}).to_json()
        assert text.endswith("}\n")
        assert json.loads(text) == {
            "ring": "rational",
            "objects": {"X": {"weights": ["1"]}},
            "morphisms": {
                "f": {"dom": "X", "cod": "X", "matrix": [["1/2"]]}
            },
            "verdicts": {},
        }
        assert text.index('"morphisms"') < text.index('"objects"')

    def test_emitted_documents_resolve(self):
        """Test that a written document reads back to the same maps."""
        maps = {"a": mor([[1, "-1/3"]], dom=obj(2, 5)), "b": mor([[0]])}
        document = document_from(RingId.RATIONAL, maps)
        restored = Document.from_json(document.to_json())
        assert restored.resolve_all() == maps
