"""Namespace constants and reserved vocabulary IRIs."""
from __future__ import annotations

from enum import Enum

OWL_NS = "http://www.w3.org/2002/07/owl#"
RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"
SWRL_VAR_NS = "urn:swrl#"

#: Prefix bindings every ontology starts with.
STANDARD_PREFIXES = {
    "owl": OWL_NS,
    "rdf": RDF_NS,
    "rdfs": RDFS_NS,
    "xsd": XSD_NS,
}

OWL_THING_IRI = OWL_NS + "Thing"
OWL_NOTHING_IRI = OWL_NS + "Nothing"
OWL_NAMED_INDIVIDUAL_IRI = OWL_NS + "NamedIndividual"
RDF_TYPE_IRI = RDF_NS + "type"

XSD_STRING_IRI = XSD_NS + "string"
XSD_BOOLEAN_IRI = XSD_NS + "boolean"
XSD_INTEGER_IRI = XSD_NS + "integer"
XSD_DOUBLE_IRI = XSD_NS + "double"
XSD_FLOAT_IRI = XSD_NS + "float"
XSD_DECIMAL_IRI = XSD_NS + "decimal"

#: Datatypes whose literals carry a parsed numeric value.
NUMERIC_DATATYPE_IRIS = frozenset({
    XSD_INTEGER_IRI,
    XSD_DOUBLE_IRI,
    XSD_FLOAT_IRI,
    XSD_DECIMAL_IRI,
})


class Facet(Enum):
    """Numeric constraining facets allowed in datatype restrictions."""

    MIN_INCLUSIVE = (XSD_NS + "minInclusive", ">=", "≥")
    MIN_EXCLUSIVE = (XSD_NS + "minExclusive", ">", ">")
    MAX_INCLUSIVE = (XSD_NS + "maxInclusive", "<=", "≤")
    MAX_EXCLUSIVE = (XSD_NS + "maxExclusive", "<", "<")

    def __init__(self, iri: str, ascii_symbol: str, dl_symbol: str):
        self.iri = iri
        self.ascii_symbol = ascii_symbol
        self.dl_symbol = dl_symbol

    @classmethod
    def from_iri(cls, iri: str) -> "Facet":
        for facet in cls:
            if facet.iri == iri:
                return facet
        raise KeyError(iri)

    @classmethod
    def from_symbol(cls, symbol: str) -> "Facet":
        for facet in cls:
            if symbol in (facet.ascii_symbol, facet.dl_symbol):
                return facet
        raise KeyError(symbol)
