"""
The JSON document format shared by the CLI and the law suite.

A document names objects and morphisms over one ring; scalars are stored
as canonical literals. Results of CLI operations are appended under names
such as "kernel(f)" or "codilator(f).s1", and non-morphism results go into
the verdicts map.

Example:
    ```json
    {
      "ring": "rational",
      "objects": {"X": {"weights": ["1"]}},
      "morphisms": {"f": {"dom": "X", "cod": "X", "matrix": [["1/2"]]}},
      "verdicts": {}
    }
    ```
"""

import json
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from starcat.category import WMorphism, WObject
from starcat.errors import DocumentError, StarcatError
from starcat.scalars import RingId, format_scalar, parse_scalar


class ObjectSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    weights: list[str]


class MorphismSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    dom: str
    cod: str
    matrix: list[list[str]]


class Document(BaseModel):
    """
    Named objects, morphisms and verdicts over a single ring.

    Raises:
        pydantic.ValidationError: If the JSON does not match the schema
    """

    model_config = ConfigDict(extra="forbid")

    ring: RingId
    objects: dict[str, ObjectSpec] = Field(default_factory=dict)
    morphisms: dict[str, MorphismSpec] = Field(default_factory=dict)
    verdicts: dict[str, dict[str, Any]] = Field(default_factory=dict)

    # ========================================================================
    # Parsing
    # ========================================================================

    @classmethod
    def from_json(cls, text: str) -> "Document":
        """
        Parse a document from JSON text.

        Raises:
            json.JSONDecodeError: If the text is not JSON
            pydantic.ValidationError: If the JSON does not match the schema
        """
        return cls.model_validate(json.loads(text))

    def to_json(self) -> str:
        """Canonical form: sorted keys, two-space indent, trailing newline."""
        payload = self.model_dump(mode="json")
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    # ========================================================================
    # Resolution
    # ========================================================================

    def resolve_object(self, name: str) -> WObject:
        """
        Build the named object.

        Raises:
            DocumentError: If the name is unknown or a weight is invalid
        """
        spec = self.objects.get(name)
        if spec is None:
            raise DocumentError(f"unknown object {name!r}")
        try:
            weights = tuple(parse_scalar(w, self.ring) for w in spec.weights)
            return WObject(self.ring, weights)
        except StarcatError as exc:
            raise DocumentError(f"object {name!r}: {exc}") from exc

    def resolve_morphism(self, name: str) -> WMorphism:
        """
        Build the named morphism with its domain and codomain.

        Raises:
            DocumentError: If a reference does not resolve, a literal does
                not parse, or the matrix shape does not fit the objects
        """
        spec = self.morphisms.get(name)
        if spec is None:
            raise DocumentError(f"unknown morphism {name!r}")
        dom = self.resolve_object(spec.dom)
        cod = self.resolve_object(spec.cod)
        try:
            rows = tuple(
                tuple(parse_scalar(x, self.ring) for x in row)
                for row in spec.matrix
            )
            return WMorphism(dom, cod, rows)
        except StarcatError as exc:
            raise DocumentError(f"morphism {name!r}: {exc}") from exc

    def resolve_all(self) -> dict[str, WMorphism]:
        """Resolve every morphism, checking the whole document."""
        for name in self.objects:
            self.resolve_object(name)
        return {name: self.resolve_morphism(name) for name in self.morphisms}

    # ========================================================================
    # Emission
    # ========================================================================

    def _object_name(self, X: WObject, base: str) -> str:
        """An existing name for X, else a fresh one derived from base."""
        weights = [format_scalar(w) for w in X.weights]
        for name in sorted(self.objects):
            if self.objects[name].weights == weights:
                return name
        name, suffix = base, 2
        while name in self.objects:
            name = f"{base}#{suffix}"
            suffix += 1
        self.objects[name] = ObjectSpec(weights=weights)
        return name

    def add_morphism(
        self, name: str, f: WMorphism, object_base: str | None = None
    ) -> None:
        """
        Store f under name, reusing equal objects already in the document.

        New objects are named after object_base (default: name), with
        "#2", "#3", ... appended when needed.
        """
        if f.ring is not self.ring:
            raise DocumentError(
                f"cannot store a {f.ring.value} morphism in a "
                f"{self.ring.value} document"
            )
        base = name if object_base is None else object_base
        dom = self._object_name(f.dom, base)
        cod = self._object_name(f.cod, base)
        self.morphisms[name] = MorphismSpec(
            dom=dom,
            cod=cod,
            matrix=[[format_scalar(x) for x in row] for row in f.rows],
        )


def document_from(ring: RingId, morphisms: dict[str, WMorphism]) -> Document:
    """A fresh document holding the given morphisms, in name order."""
    document = Document(ring=ring)
    for name in sorted(morphisms):
        document.add_morphism(name, morphisms[name], object_base="X")
    return document
