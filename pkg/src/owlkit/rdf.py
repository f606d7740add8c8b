"""OWL-to-RDF triple mapping and a deterministic Turtle writer.

Complex class expressions map through fresh blank nodes (owl:Restriction,
owl:intersectionOf lists, ...); rules have no triple encoding and raise
:class:`UnmappableAxiomError`.  Blank-node labels are ``_:b{n}`` with a
per-invocation counter starting at 0 so output is reproducible.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Union

from .errors import UnmappableAxiomError
from .functional import shorten, _escape
from .model import (
    IRI,
    DataAllValuesFrom,
    DataHasValue,
    DataOneOf,
    DataSomeValuesFrom,
    DatatypeRestriction,
    ObjectAllValuesFrom,
    ObjectComplementOf,
    ObjectExactCardinality,
    ObjectHasValue,
    ObjectIntersectionOf,
    ObjectInverseOf,
    ObjectMaxCardinality,
    ObjectMinCardinality,
    ObjectOneOf,
    ObjectSomeValuesFrom,
    ObjectUnionOf,
    OWLAnnotationAssertionAxiom,
    OWLAnnotationProperty,
    OWLAxiom,
    OWLClass,
    OWLClassAssertionAxiom,
    OWLDataProperty,
    OWLDataPropertyAssertionAxiom,
    OWLDataPropertyDomainAxiom,
    OWLDataPropertyRangeAxiom,
    OWLDatatype,
    OWLDeclarationAxiom,
    OWLDisjointClassesAxiom,
    OWLEquivalentClassesAxiom,
    OWLFunctionalObjectPropertyAxiom,
    OWLInverseObjectPropertiesAxiom,
    OWLLiteral,
    OWLNamedIndividual,
    OWLObjectProperty,
    OWLObjectPropertyAssertionAxiom,
    OWLObjectPropertyDomainAxiom,
    OWLObjectPropertyRangeAxiom,
    OWLSubClassOfAxiom,
    OWLSubObjectPropertyOfAxiom,
    OWL_THING,
    SWRLRule,
)
from .ontology import Ontology
from .vocab import (
    OWL_NAMED_INDIVIDUAL_IRI,
    OWL_NS,
    RDF_NS,
    RDFS_NS,
    RDF_TYPE_IRI,
    XSD_NS,
    XSD_STRING_IRI,
)

logger = logging.getLogger(__name__)

_RDF_TYPE = IRI(RDF_TYPE_IRI)
_RDF_FIRST = IRI(RDF_NS + "first")
_RDF_REST = IRI(RDF_NS + "rest")
_RDF_NIL = IRI(RDF_NS + "nil")
_RDFS_SUBCLASSOF = IRI(RDFS_NS + "subClassOf")
_RDFS_SUBPROPERTYOF = IRI(RDFS_NS + "subPropertyOf")
_RDFS_DOMAIN = IRI(RDFS_NS + "domain")
_RDFS_RANGE = IRI(RDFS_NS + "range")
_RDFS_DATATYPE = IRI(RDFS_NS + "Datatype")

_OWL = {name: IRI(OWL_NS + name) for name in (
    "Class", "ObjectProperty", "DatatypeProperty", "NamedIndividual",
    "AnnotationProperty", "Restriction", "FunctionalProperty",
    "AllDisjointClasses", "equivalentClass", "disjointWith", "inverseOf",
    "intersectionOf", "unionOf", "complementOf", "oneOf", "members",
    "onProperty", "onClass", "someValuesFrom", "allValuesFrom", "hasValue",
    "minCardinality", "maxCardinality", "cardinality",
    "minQualifiedCardinality", "maxQualifiedCardinality",
    "qualifiedCardinality", "onDatatype", "withRestrictions",
)}

_XSD_NONNEG = OWLDatatype(IRI(XSD_NS + "nonNegativeInteger"))


@dataclass(frozen=True)
class BlankNode:
    label: str

    def __str__(self) -> str:
        return "_:" + self.label


Term = Union[IRI, BlankNode, OWLLiteral]


@dataclass(frozen=True)
class Triple:
    subject: Union[IRI, BlankNode]
    predicate: IRI
    object: Term


class TripleMapper:
    """Maps axioms to triples; blank-node labels are unique per mapper."""

    def __init__(self):
        self._counter = 0
        self.triples: list[Triple] = []

    def fresh_bnode(self) -> BlankNode:
        node = BlankNode(f"b{self._counter}")
        self._counter += 1
        return node

    def emit(self, s, p, o) -> None:
        self.triples.append(Triple(s, p, o))

    def take(self) -> list[Triple]:
        out, self.triples = self.triples, []
        return out

    # -- class expressions -> node -------------------------------------------

    def ce_node(self, ce) -> Term:
        if isinstance(ce, OWLClass):
            return ce.iri
        node = self.fresh_bnode()
        if isinstance(ce, ObjectIntersectionOf):
            self.emit(node, _RDF_TYPE, _OWL["Class"])
            self.emit(node, _OWL["intersectionOf"],
                      self.rdf_list([self.ce_node(op) for op in ce.operands]))
        elif isinstance(ce, ObjectUnionOf):
            self.emit(node, _RDF_TYPE, _OWL["Class"])
            self.emit(node, _OWL["unionOf"],
                      self.rdf_list([self.ce_node(op) for op in ce.operands]))
        elif isinstance(ce, ObjectComplementOf):
            self.emit(node, _RDF_TYPE, _OWL["Class"])
            self.emit(node, _OWL["complementOf"], self.ce_node(ce.operand))
        elif isinstance(ce, ObjectOneOf):
            self.emit(node, _RDF_TYPE, _OWL["Class"])
            self.emit(node, _OWL["oneOf"],
                      self.rdf_list([i.iri for i in ce.individuals]))
        elif isinstance(ce, ObjectSomeValuesFrom):
            self.emit(node, _RDF_TYPE, _OWL["Restriction"])
            self.emit(node, _OWL["onProperty"], self.pe_node(ce.property))
            self.emit(node, _OWL["someValuesFrom"], self.ce_node(ce.filler))
        elif isinstance(ce, ObjectAllValuesFrom):
            self.emit(node, _RDF_TYPE, _OWL["Restriction"])
            self.emit(node, _OWL["onProperty"], self.pe_node(ce.property))
            self.emit(node, _OWL["allValuesFrom"], self.ce_node(ce.filler))
        elif isinstance(ce, ObjectHasValue):
            self.emit(node, _RDF_TYPE, _OWL["Restriction"])
            self.emit(node, _OWL["onProperty"], self.pe_node(ce.property))
            self.emit(node, _OWL["hasValue"], ce.individual.iri)
        elif isinstance(ce, (ObjectMinCardinality, ObjectMaxCardinality,
                             ObjectExactCardinality)):
            flavor = {ObjectMinCardinality: "min",
                      ObjectMaxCardinality: "max",
                      ObjectExactCardinality: ""}[type(ce)]
            self.emit(node, _RDF_TYPE, _OWL["Restriction"])
            self.emit(node, _OWL["onProperty"], self.pe_node(ce.property))
            count = OWLLiteral(str(ce.cardinality), _XSD_NONNEG)
            if ce.filler == OWL_THING:
                key = flavor + "Cardinality" if flavor else "cardinality"
                self.emit(node, _OWL[key], count)
            else:
                key = (flavor + "QualifiedCardinality" if flavor
                       else "qualifiedCardinality")
                self.emit(node, _OWL[key], count)
                self.emit(node, _OWL["onClass"], self.ce_node(ce.filler))
        elif isinstance(ce, DataSomeValuesFrom):
            self.emit(node, _RDF_TYPE, _OWL["Restriction"])
            self.emit(node, _OWL["onProperty"], ce.property.iri)
            self.emit(node, _OWL["someValuesFrom"], self.dr_node(ce.range))
        elif isinstance(ce, DataAllValuesFrom):
            self.emit(node, _RDF_TYPE, _OWL["Restriction"])
            self.emit(node, _OWL["onProperty"], ce.property.iri)
            self.emit(node, _OWL["allValuesFrom"], self.dr_node(ce.range))
        elif isinstance(ce, DataHasValue):
            self.emit(node, _RDF_TYPE, _OWL["Restriction"])
            self.emit(node, _OWL["onProperty"], ce.property.iri)
            self.emit(node, _OWL["hasValue"], ce.literal)
        else:
            raise UnmappableAxiomError(f"no RDF mapping for {type(ce).__name__}")
        return node

    def pe_node(self, pe) -> Term:
        if isinstance(pe, ObjectInverseOf):
            node = self.fresh_bnode()
            self.emit(node, _OWL["inverseOf"], pe.property.iri)
            return node
        return pe.iri

    def dr_node(self, dr) -> Term:
        if isinstance(dr, OWLDatatype):
            return dr.iri
        node = self.fresh_bnode()
        self.emit(node, _RDF_TYPE, _RDFS_DATATYPE)
        if isinstance(dr, DatatypeRestriction):
            self.emit(node, _OWL["onDatatype"], dr.base.iri)
            facet_nodes = []
            for fr in dr.facets:
                fnode = self.fresh_bnode()
                self.emit(fnode, IRI(fr.facet.iri), fr.literal)
                facet_nodes.append(fnode)
            self.emit(node, _OWL["withRestrictions"], self.rdf_list(facet_nodes))
        elif isinstance(dr, DataOneOf):
            self.emit(node, _OWL["oneOf"], self.rdf_list(list(dr.literals)))
        else:
            raise UnmappableAxiomError(f"no RDF mapping for {type(dr).__name__}")
        return node

    def rdf_list(self, items: list[Term]) -> Term:
        if not items:
            return _RDF_NIL
        head = self.fresh_bnode()
        node = head
        for k, item in enumerate(items):
            self.emit(node, _RDF_FIRST, item)
            if k + 1 < len(items):
                nxt = self.fresh_bnode()
                self.emit(node, _RDF_REST, nxt)
                node = nxt
            else:
                self.emit(node, _RDF_REST, _RDF_NIL)
        return head

    # -- axioms ---------------------------------------------------------------

    def map_axiom(self, ax: OWLAxiom) -> list[Triple]:
        self._dispatch(ax)
        return self.take()

    def _dispatch(self, ax) -> None:
        if isinstance(ax, OWLDeclarationAxiom):
            kind = {
                OWLClass: _OWL["Class"],
                OWLObjectProperty: _OWL["ObjectProperty"],
                OWLDataProperty: _OWL["DatatypeProperty"],
                OWLNamedIndividual: _OWL["NamedIndividual"],
                OWLDatatype: _RDFS_DATATYPE,
                OWLAnnotationProperty: _OWL["AnnotationProperty"],
            }[type(ax.entity)]
            self.emit(ax.entity.iri, _RDF_TYPE, kind)
        elif isinstance(ax, OWLClassAssertionAxiom):
            self.emit(ax.individual.iri, _RDF_TYPE,
                      self.ce_node(ax.class_expression))
        elif isinstance(ax, OWLObjectPropertyAssertionAxiom):
            if isinstance(ax.property, ObjectInverseOf):
                self.emit(ax.object.iri, ax.property.property.iri, ax.subject.iri)
            else:
                self.emit(ax.subject.iri, ax.property.iri, ax.object.iri)
        elif isinstance(ax, OWLDataPropertyAssertionAxiom):
            self.emit(ax.subject.iri, ax.property.iri, ax.literal)
        elif isinstance(ax, OWLSubClassOfAxiom):
            self.emit(self.ce_node(ax.sub_class), _RDFS_SUBCLASSOF,
                      self.ce_node(ax.super_class))
        elif isinstance(ax, OWLEquivalentClassesAxiom):
            for left, right in zip(ax.operands, ax.operands[1:]):
                self.emit(self.ce_node(left), _OWL["equivalentClass"],
                          self.ce_node(right))
        elif isinstance(ax, OWLDisjointClassesAxiom):
            if len(ax.operands) == 2:
                self.emit(self.ce_node(ax.operands[0]), _OWL["disjointWith"],
                          self.ce_node(ax.operands[1]))
            else:
                node = self.fresh_bnode()
                self.emit(node, _RDF_TYPE, _OWL["AllDisjointClasses"])
                self.emit(node, _OWL["members"],
                          self.rdf_list([self.ce_node(op) for op in ax.operands]))
        elif isinstance(ax, OWLSubObjectPropertyOfAxiom):
            self.emit(self.pe_node(ax.sub_property), _RDFS_SUBPROPERTYOF,
                      self.pe_node(ax.super_property))
        elif isinstance(ax, OWLInverseObjectPropertiesAxiom):
            self.emit(ax.first.iri, _OWL["inverseOf"], ax.second.iri)
        elif isinstance(ax, OWLObjectPropertyDomainAxiom):
            self.emit(self.pe_node(ax.property), _RDFS_DOMAIN,
                      self.ce_node(ax.domain))
        elif isinstance(ax, OWLObjectPropertyRangeAxiom):
            self.emit(self.pe_node(ax.property), _RDFS_RANGE,
                      self.ce_node(ax.range))
        elif isinstance(ax, OWLFunctionalObjectPropertyAxiom):
            self.emit(self.pe_node(ax.property), _RDF_TYPE,
                      _OWL["FunctionalProperty"])
        elif isinstance(ax, OWLDataPropertyDomainAxiom):
            self.emit(ax.property.iri, _RDFS_DOMAIN, self.ce_node(ax.domain))
        elif isinstance(ax, OWLDataPropertyRangeAxiom):
            self.emit(ax.property.iri, _RDFS_RANGE, self.dr_node(ax.range))
        elif isinstance(ax, OWLAnnotationAssertionAxiom):
            self.emit(ax.subject, ax.property.iri, ax.value)
        elif isinstance(ax, SWRLRule):
            raise UnmappableAxiomError("rules have no RDF triple encoding")
        else:
            raise UnmappableAxiomError(
                f"no RDF mapping for {type(ax).__name__}")


def map_axiom_to_triples(axiom: OWLAxiom) -> list[Triple]:
    """Map one axiom to triples with a fresh blank-node counter."""
    return TripleMapper().map_axiom(axiom)


def map_ontology_to_triples(onto: Ontology, strict: bool = True) -> list[Triple]:
    """Map a whole ontology; one shared blank-node counter.

    Every individual in the signature additionally receives an
    ``rdf:type owl:NamedIndividual`` triple, which keeps queries that rely
    on "every individual has a type triple" well-defined.  Rules raise in
    strict mode and are skipped (with a warning) otherwise.  Exact duplicate
    triples are dropped, first occurrence wins.
    """
    mapper = TripleMapper()
    skipped = 0
    for ax in onto.axioms():
        try:
            mapper._dispatch(ax)
        except UnmappableAxiomError:
            if strict:
                raise
            skipped += 1
    for individual in onto.individuals_in_signature():
        mapper.emit(individual.iri, _RDF_TYPE, IRI(OWL_NAMED_INDIVIDUAL_IRI))
    if skipped:
        logger.warning("skipped %d axiom(s) with no RDF mapping", skipped)
    seen: set[Triple] = set()
    out: list[Triple] = []
    for t in mapper.take():
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


# ---------------------------------------------------------------------------
# Turtle
# ---------------------------------------------------------------------------

def _turtle_term(term: Term, prefixes: dict[str, str]) -> str:
    if isinstance(term, IRI):
        return shorten(term, prefixes)
    if isinstance(term, BlankNode):
        return str(term)
    text = f'"{_escape(term.lexical)}"'
    if term.datatype.iri.text != XSD_STRING_IRI:
        text += "^^" + shorten(term.datatype.iri, prefixes)
    return text


def serialize_turtle(onto: Ontology, strict: bool = True) -> str:
    """Write the ontology's triples as Turtle, one triple per line,
    grouped by subject in first-appearance order."""
    triples = map_ontology_to_triples(onto, strict=strict)
    lines = [f"@prefix {name}: <{ns}> ." for name, ns in onto.prefixes.items()]
    lines.append("")
    groups: dict[str, list[Triple]] = {}
    for t in triples:
        key = _turtle_term(t.subject, onto.prefixes)
        groups.setdefault(key, []).append(t)
    for subject, group in groups.items():
        for t in group:
            pred = _turtle_term(t.predicate, onto.prefixes)
            obj = _turtle_term(t.object, onto.prefixes)
            lines.append(f"{subject} {pred} {obj} .")
    return "\n".join(lines) + "\n"
