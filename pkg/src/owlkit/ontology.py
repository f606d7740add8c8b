"""In-memory ontology: an indexed, deduplicated axiom store.

Mutation requires exclusive access (single writer); read accessors are safe
to call concurrently between mutations.
"""
from __future__ import annotations

from pathlib import Path

from .errors import UnsupportedFormatError
from .model import (
    IRI,
    OWLAxiom,
    OWLClass,
    OWLDataProperty,
    OWLEntity,
    OWLNamedIndividual,
    OWLObjectProperty,
    signature_of,
)
from .vocab import STANDARD_PREFIXES


class Ontology:
    """A set of axioms with insertion-ordered iteration and per-kind and
    per-entity indexes.

    Duplicate axioms (structural equality) are silently dropped, matching
    the set-of-axioms reading of an ontology; iteration order is insertion
    order so serialization is reproducible.
    """

    def __init__(self, iri: IRI | None = None):
        self.iri = iri
        self.prefixes: dict[str, str] = dict(STANDARD_PREFIXES)
        self.imports: list[IRI] = []
        self._axioms: list[OWLAxiom] = []
        self._axiom_set: set[OWLAxiom] = set()
        self._by_kind: dict[type, list[OWLAxiom]] = {}
        self._by_entity: dict[OWLEntity, list[OWLAxiom]] = {}

    # -- mutation -----------------------------------------------------------

    def add_axiom(self, axiom: OWLAxiom) -> bool:
        """Add an axiom; returns False when it was already present."""
        if axiom in self._axiom_set:
            return False
        self._axioms.append(axiom)
        self._axiom_set.add(axiom)
        self._by_kind.setdefault(type(axiom), []).append(axiom)
        for entity in signature_of(axiom):
            self._by_entity.setdefault(entity, []).append(axiom)
        return True

    def remove_axiom(self, axiom: OWLAxiom) -> bool:
        """Remove an axiom; returns False when it was absent."""
        if axiom not in self._axiom_set:
            return False
        self._axioms.remove(axiom)
        self._axiom_set.remove(axiom)
        kind_list = self._by_kind[type(axiom)]
        kind_list.remove(axiom)
        if not kind_list:
            del self._by_kind[type(axiom)]
        for entity in signature_of(axiom):
            entity_list = self._by_entity[entity]
            entity_list.remove(axiom)
            if not entity_list:
                del self._by_entity[entity]
        return True

    def set_prefix(self, name: str, namespace: str) -> None:
        self.prefixes[name] = namespace

    # -- axiom access -------------------------------------------------------

    def axioms(self) -> list[OWLAxiom]:
        return list(self._axioms)

    def __len__(self) -> int:
        return len(self._axioms)

    def __contains__(self, axiom: OWLAxiom) -> bool:
        return axiom in self._axiom_set

    def axioms_of_kind(self, kind: type) -> list[OWLAxiom]:
        return list(self._by_kind.get(kind, []))

    def axioms_about(self, entity: OWLEntity) -> list[OWLAxiom]:
        return list(self._by_entity.get(entity, []))

    # -- signature accessors --------------------------------------------------

    def _signature_of_kind(self, kind: type) -> list:
        seen: dict[OWLEntity, None] = {}
        for axiom in self._axioms:
            for entity in _ordered_signature(axiom):
                if isinstance(entity, kind):
                    seen.setdefault(entity)
        return list(seen)

    def classes_in_signature(self) -> list[OWLClass]:
        return self._signature_of_kind(OWLClass)

    def object_properties_in_signature(self) -> list[OWLObjectProperty]:
        return self._signature_of_kind(OWLObjectProperty)

    def data_properties_in_signature(self) -> list[OWLDataProperty]:
        return self._signature_of_kind(OWLDataProperty)

    def individuals_in_signature(self) -> list[OWLNamedIndividual]:
        return self._signature_of_kind(OWLNamedIndividual)

    def same_axioms(self, other: "Ontology") -> bool:
        """Axiom-set equality, ignoring order and prefix bookkeeping."""
        return self._axiom_set == other._axiom_set

    # -- persistence ----------------------------------------------------------

    def save(self, path: str | Path, fmt: str = "functional") -> None:
        """Write the ontology to disk; UTF-8 with LF line endings."""
        if fmt == "functional":
            from .functional import serialize_functional
            text = serialize_functional(self)
        elif fmt == "turtle":
            from .rdf import serialize_turtle
            text = serialize_turtle(self)
        else:
            raise UnsupportedFormatError(
                f"unsupported save format {fmt!r}; supported formats are "
                f"'functional' and 'turtle'")
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def load_ontology(path: str | Path, fmt: str = "functional") -> Ontology:
    """Read an ontology document; only functional-style syntax parses."""
    if fmt != "functional":
        raise UnsupportedFormatError(
            f"unsupported load format {fmt!r}; only 'functional' can be read")
    from .functional import parse_functional
    with open(path, "r", encoding="utf-8") as fh:
        return parse_functional(fh.read())


def _ordered_signature(axiom: OWLAxiom):
    # signature_of returns a set; re-walk to keep first-occurrence order
    from .model import _walk
    seen = set()
    for entity in _walk(axiom):
        if entity not in seen:
            seen.add(entity)
            yield entity
