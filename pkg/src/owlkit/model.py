"""OWL 2 structural data model.

Entities, literals, class expressions, data ranges, axioms, and rules are
immutable values with structural equality, mirroring the OWL 2 structural
view of an ontology.  All values hash consistently with equality and are
safe to share between threads.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, singledispatch
from typing import Iterator, Union

from .errors import IriParseError, RuleSafetyError
from .vocab import (
    Facet,
    NUMERIC_DATATYPE_IRIS,
    OWL_NOTHING_IRI,
    OWL_THING_IRI,
    XSD_DOUBLE_IRI,
    XSD_INTEGER_IRI,
    XSD_STRING_IRI,
)


# ---------------------------------------------------------------------------
# IRIs and entities
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IRI:
    """An internationalized resource identifier.

    Equality is exact string equality of the full form.  When the text
    contains a ``#`` or ``/``, the suffix after the last such separator is
    the remainder and the rest (separator included) the namespace.
    """

    text: str

    def __post_init__(self):
        if not self.text:
            raise IriParseError("IRI must be non-empty")
        if any(c.isspace() for c in self.text):
            raise IriParseError(f"IRI may not contain whitespace: {self.text!r}")
        cut = max(self.text.rfind("#"), self.text.rfind("/"))
        if cut >= 0 and cut == len(self.text) - 1:
            raise IriParseError(f"IRI has an empty remainder: {self.text!r}")

    @cached_property
    def _split(self) -> tuple[str | None, str]:
        cut = max(self.text.rfind("#"), self.text.rfind("/"))
        if cut < 0:
            return None, self.text
        return self.text[:cut + 1], self.text[cut + 1:]

    @property
    def namespace(self) -> str | None:
        return self._split[0]

    @property
    def remainder(self) -> str:
        return self._split[1]

    def __str__(self) -> str:
        return self.text


def make_iri(text: str) -> IRI:
    """Build an :class:`IRI`, rejecting empty or whitespace-bearing input."""
    return IRI(text)


class OWLClassExpression:
    """Marker base for class expressions."""

    __slots__ = ()


class OWLDataRange:
    """Marker base for data ranges."""

    __slots__ = ()


@dataclass(frozen=True)
class OWLEntity:
    """A named term of the ontology signature; kind is the concrete class."""

    iri: IRI

    def __str__(self) -> str:
        return self.iri.text


@dataclass(frozen=True)
class OWLClass(OWLEntity, OWLClassExpression):
    pass


@dataclass(frozen=True)
class OWLObjectProperty(OWLEntity):
    pass


@dataclass(frozen=True)
class OWLDataProperty(OWLEntity):
    pass


@dataclass(frozen=True)
class OWLNamedIndividual(OWLEntity):
    pass


@dataclass(frozen=True)
class OWLDatatype(OWLEntity, OWLDataRange):
    pass


@dataclass(frozen=True)
class OWLAnnotationProperty(OWLEntity):
    pass


OWL_THING = OWLClass(IRI(OWL_THING_IRI))
OWL_NOTHING = OWLClass(IRI(OWL_NOTHING_IRI))

XSD_STRING = OWLDatatype(IRI(XSD_STRING_IRI))
XSD_INTEGER = OWLDatatype(IRI(XSD_INTEGER_IRI))
XSD_DOUBLE = OWLDatatype(IRI(XSD_DOUBLE_IRI))


# ---------------------------------------------------------------------------
# Literals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OWLLiteral:
    """A typed literal; equality is the (lexical form, datatype) pair.

    For the recognized numeric XSD datatypes the lexical form is parsed at
    construction and exposed as :attr:`value`; a lexical form that does not
    parse is rejected so stored numeric values always round-trip.
    """

    lexical: str
    datatype: OWLDatatype = XSD_STRING

    def __post_init__(self):
        if self.is_numeric:
            self._parse_numeric()  # raises on bad lexical forms

    @property
    def is_numeric(self) -> bool:
        return self.datatype.iri.text in NUMERIC_DATATYPE_IRIS

    def _parse_numeric(self) -> int | float:
        try:
            if self.datatype == XSD_INTEGER:
                return int(self.lexical)
            return float(self.lexical)
        except ValueError:
            raise ValueError(
                f"invalid {self.datatype.iri.remainder} lexical form: "
                f"{self.lexical!r}") from None

    @cached_property
    def value(self) -> int | float | str:
        """Parsed numeric value for numeric datatypes, else the lexical form."""
        if self.is_numeric:
            v = self._parse_numeric()
            if isinstance(v, float) and not math.isfinite(v):
                return v
            return v
        return self.lexical

    def __str__(self) -> str:
        return f'"{self.lexical}"^^{self.datatype.iri.remainder}'


def make_literal(value: int | float | str) -> OWLLiteral:
    """Wrap a plain Python value: int -> xsd:integer, float -> xsd:double,
    str -> xsd:string."""
    if isinstance(value, bool):
        raise TypeError("boolean literals are not supported")
    if isinstance(value, int):
        return OWLLiteral(str(value), XSD_INTEGER)
    if isinstance(value, float):
        return OWLLiteral(repr(value), XSD_DOUBLE)
    return OWLLiteral(value, XSD_STRING)


# ---------------------------------------------------------------------------
# Property expressions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ObjectInverseOf:
    """The inverse of a named object property."""

    property: OWLObjectProperty

    def __post_init__(self):
        if not isinstance(self.property, OWLObjectProperty):
            raise TypeError("ObjectInverseOf wraps a named object property")


ObjectPropertyExpression = Union[OWLObjectProperty, ObjectInverseOf]


def inverse_of(pe: ObjectPropertyExpression) -> ObjectPropertyExpression:
    """Invert a property expression; double inversion yields the original."""
    if isinstance(pe, ObjectInverseOf):
        return pe.property
    return ObjectInverseOf(pe)


def named_property(pe: ObjectPropertyExpression) -> OWLObjectProperty:
    return pe.property if isinstance(pe, ObjectInverseOf) else pe


# ---------------------------------------------------------------------------
# Class expressions
# ---------------------------------------------------------------------------

def _operand_tuple(obj, attr, minimum):
    items = tuple(getattr(obj, attr))
    object.__setattr__(obj, attr, items)
    if len(items) < minimum:
        raise ValueError(
            f"{type(obj).__name__} needs at least {minimum} {attr}, "
            f"got {len(items)}")


@dataclass(frozen=True)
class ObjectIntersectionOf(OWLClassExpression):
    operands: tuple[OWLClassExpression, ...]

    def __post_init__(self):
        _operand_tuple(self, "operands", 2)


@dataclass(frozen=True)
class ObjectUnionOf(OWLClassExpression):
    operands: tuple[OWLClassExpression, ...]

    def __post_init__(self):
        _operand_tuple(self, "operands", 2)


@dataclass(frozen=True)
class ObjectComplementOf(OWLClassExpression):
    operand: OWLClassExpression


@dataclass(frozen=True)
class ObjectSomeValuesFrom(OWLClassExpression):
    property: ObjectPropertyExpression
    filler: OWLClassExpression


@dataclass(frozen=True)
class ObjectAllValuesFrom(OWLClassExpression):
    property: ObjectPropertyExpression
    filler: OWLClassExpression


@dataclass(frozen=True)
class ObjectHasValue(OWLClassExpression):
    property: ObjectPropertyExpression
    individual: OWLNamedIndividual


@dataclass(frozen=True)
class ObjectOneOf(OWLClassExpression):
    individuals: tuple[OWLNamedIndividual, ...]

    def __post_init__(self):
        _operand_tuple(self, "individuals", 1)


class _CardinalityRestriction(OWLClassExpression):
    __slots__ = ()


@dataclass(frozen=True)
class ObjectMinCardinality(_CardinalityRestriction):
    cardinality: int
    property: ObjectPropertyExpression
    filler: OWLClassExpression = OWL_THING

    def __post_init__(self):
        if self.cardinality < 0:
            raise ValueError("cardinality must be non-negative")


@dataclass(frozen=True)
class ObjectMaxCardinality(_CardinalityRestriction):
    cardinality: int
    property: ObjectPropertyExpression
    filler: OWLClassExpression = OWL_THING

    def __post_init__(self):
        if self.cardinality < 0:
            raise ValueError("cardinality must be non-negative")


@dataclass(frozen=True)
class ObjectExactCardinality(_CardinalityRestriction):
    cardinality: int
    property: ObjectPropertyExpression
    filler: OWLClassExpression = OWL_THING

    def __post_init__(self):
        if self.cardinality < 0:
            raise ValueError("cardinality must be non-negative")


@dataclass(frozen=True)
class DataSomeValuesFrom(OWLClassExpression):
    property: OWLDataProperty
    range: OWLDataRange


@dataclass(frozen=True)
class DataAllValuesFrom(OWLClassExpression):
    property: OWLDataProperty
    range: OWLDataRange


@dataclass(frozen=True)
class DataHasValue(OWLClassExpression):
    property: OWLDataProperty
    literal: OWLLiteral


# ---------------------------------------------------------------------------
# Data ranges beyond plain datatypes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FacetRestriction:
    facet: Facet
    literal: OWLLiteral


@dataclass(frozen=True)
class DatatypeRestriction(OWLDataRange):
    base: OWLDatatype
    facets: tuple[FacetRestriction, ...]

    def __post_init__(self):
        _operand_tuple(self, "facets", 1)
        if self.base.iri.text in NUMERIC_DATATYPE_IRIS:
            for fr in self.facets:
                if not fr.literal.is_numeric:
                    raise ValueError(
                        f"facet literal {fr.literal} is not numeric but the "
                        f"base datatype {self.base.iri.remainder} is")


@dataclass(frozen=True)
class DataOneOf(OWLDataRange):
    literals: tuple[OWLLiteral, ...]

    def __post_init__(self):
        _operand_tuple(self, "literals", 1)


# ---------------------------------------------------------------------------
# SWRL rules
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SWRLVariable:
    name: str

    def __str__(self) -> str:
        return "?" + self.name


SWRLArgument = Union[SWRLVariable, OWLNamedIndividual]


@dataclass(frozen=True)
class SWRLClassAtom:
    class_expression: OWLClassExpression
    argument: SWRLArgument


@dataclass(frozen=True)
class SWRLObjectPropertyAtom:
    property: OWLObjectProperty
    source: SWRLArgument
    target: SWRLArgument


@dataclass(frozen=True)
class SWRLDataPropertyAtom:
    property: OWLDataProperty
    argument: SWRLArgument
    value: Union[OWLLiteral, SWRLVariable]


SWRLAtom = Union[SWRLClassAtom, SWRLObjectPropertyAtom, SWRLDataPropertyAtom]


def _atom_variables(atom: SWRLAtom) -> Iterator[SWRLVariable]:
    if isinstance(atom, SWRLClassAtom):
        args = [atom.argument]
    elif isinstance(atom, SWRLObjectPropertyAtom):
        args = [atom.source, atom.target]
    else:
        args = [atom.argument, atom.value]
    for a in args:
        if isinstance(a, SWRLVariable):
            yield a


# ---------------------------------------------------------------------------
# Axioms
# ---------------------------------------------------------------------------

class OWLAxiom:
    """Marker base for axioms."""

    __slots__ = ()


@dataclass(frozen=True)
class OWLDeclarationAxiom(OWLAxiom):
    entity: OWLEntity


@dataclass(frozen=True)
class OWLSubClassOfAxiom(OWLAxiom):
    sub_class: OWLClassExpression
    super_class: OWLClassExpression


@dataclass(frozen=True)
class OWLEquivalentClassesAxiom(OWLAxiom):
    operands: tuple[OWLClassExpression, ...]

    def __post_init__(self):
        _operand_tuple(self, "operands", 2)


@dataclass(frozen=True)
class OWLDisjointClassesAxiom(OWLAxiom):
    operands: tuple[OWLClassExpression, ...]

    def __post_init__(self):
        _operand_tuple(self, "operands", 2)


@dataclass(frozen=True)
class OWLClassAssertionAxiom(OWLAxiom):
    individual: OWLNamedIndividual
    class_expression: OWLClassExpression


@dataclass(frozen=True)
class OWLObjectPropertyAssertionAxiom(OWLAxiom):
    subject: OWLNamedIndividual
    property: ObjectPropertyExpression
    object: OWLNamedIndividual


@dataclass(frozen=True)
class OWLDataPropertyAssertionAxiom(OWLAxiom):
    subject: OWLNamedIndividual
    property: OWLDataProperty
    literal: OWLLiteral


@dataclass(frozen=True)
class OWLSubObjectPropertyOfAxiom(OWLAxiom):
    sub_property: ObjectPropertyExpression
    super_property: ObjectPropertyExpression


@dataclass(frozen=True)
class OWLInverseObjectPropertiesAxiom(OWLAxiom):
    first: OWLObjectProperty
    second: OWLObjectProperty


@dataclass(frozen=True)
class OWLObjectPropertyDomainAxiom(OWLAxiom):
    property: ObjectPropertyExpression
    domain: OWLClassExpression


@dataclass(frozen=True)
class OWLObjectPropertyRangeAxiom(OWLAxiom):
    property: ObjectPropertyExpression
    range: OWLClassExpression


@dataclass(frozen=True)
class OWLFunctionalObjectPropertyAxiom(OWLAxiom):
    property: ObjectPropertyExpression


@dataclass(frozen=True)
class OWLDataPropertyDomainAxiom(OWLAxiom):
    property: OWLDataProperty
    domain: OWLClassExpression


@dataclass(frozen=True)
class OWLDataPropertyRangeAxiom(OWLAxiom):
    property: OWLDataProperty
    range: OWLDataRange


@dataclass(frozen=True)
class OWLAnnotationAssertionAxiom(OWLAxiom):
    subject: IRI
    property: OWLAnnotationProperty
    value: Union[OWLLiteral, IRI]


@dataclass(frozen=True)
class SWRLRule(OWLAxiom):
    """A Horn-style rule; every head variable must also occur in the body."""

    body: tuple[SWRLAtom, ...]
    head: tuple[SWRLAtom, ...]

    def __post_init__(self):
        object.__setattr__(self, "body", tuple(self.body))
        object.__setattr__(self, "head", tuple(self.head))
        bound = {v for atom in self.body for v in _atom_variables(atom)}
        for atom in self.head:
            for v in _atom_variables(atom):
                if v not in bound:
                    raise RuleSafetyError(
                        f"head variable ?{v.name} does not occur in the body")


# ---------------------------------------------------------------------------
# Signatures
# ---------------------------------------------------------------------------

@singledispatch
def _walk(obj) -> Iterator[OWLEntity]:
    raise TypeError(f"cannot compute a signature for {type(obj).__name__}")


@_walk.register(OWLEntity)
def _(e):
    yield e


@_walk.register(OWLLiteral)
def _(lit):
    yield lit.datatype


@_walk.register(ObjectInverseOf)
def _(pe):
    yield pe.property


@_walk.register(ObjectIntersectionOf)
@_walk.register(ObjectUnionOf)
def _(ce):
    for op in ce.operands:
        yield from _walk(op)


@_walk.register(ObjectComplementOf)
def _(ce):
    yield from _walk(ce.operand)


@_walk.register(ObjectSomeValuesFrom)
@_walk.register(ObjectAllValuesFrom)
def _(ce):
    yield from _walk(ce.property)
    yield from _walk(ce.filler)


@_walk.register(ObjectHasValue)
def _(ce):
    yield from _walk(ce.property)
    yield ce.individual


@_walk.register(ObjectOneOf)
def _(ce):
    yield from ce.individuals


@_walk.register(ObjectMinCardinality)
@_walk.register(ObjectMaxCardinality)
@_walk.register(ObjectExactCardinality)
def _(ce):
    yield from _walk(ce.property)
    yield from _walk(ce.filler)


@_walk.register(DataSomeValuesFrom)
@_walk.register(DataAllValuesFrom)
def _(ce):
    yield ce.property
    yield from _walk(ce.range)


@_walk.register(DataHasValue)
def _(ce):
    yield ce.property
    yield from _walk(ce.literal)


@_walk.register(DatatypeRestriction)
def _(dr):
    yield dr.base
    for fr in dr.facets:
        yield from _walk(fr.literal)


@_walk.register(DataOneOf)
def _(dr):
    for lit in dr.literals:
        yield from _walk(lit)


@_walk.register(SWRLVariable)
def _(v):
    return
    yield


@_walk.register(SWRLClassAtom)
def _(atom):
    yield from _walk(atom.class_expression)
    yield from _walk(atom.argument)


@_walk.register(SWRLObjectPropertyAtom)
def _(atom):
    yield atom.property
    yield from _walk(atom.source)
    yield from _walk(atom.target)


@_walk.register(SWRLDataPropertyAtom)
def _(atom):
    yield atom.property
    yield from _walk(atom.argument)
    yield from _walk(atom.value)


@_walk.register(OWLDeclarationAxiom)
def _(ax):
    yield ax.entity


@_walk.register(OWLSubClassOfAxiom)
def _(ax):
    yield from _walk(ax.sub_class)
    yield from _walk(ax.super_class)


@_walk.register(OWLEquivalentClassesAxiom)
@_walk.register(OWLDisjointClassesAxiom)
def _(ax):
    for op in ax.operands:
        yield from _walk(op)


@_walk.register(OWLClassAssertionAxiom)
def _(ax):
    yield ax.individual
    yield from _walk(ax.class_expression)


@_walk.register(OWLObjectPropertyAssertionAxiom)
def _(ax):
    yield ax.subject
    yield from _walk(ax.property)
    yield ax.object


@_walk.register(OWLDataPropertyAssertionAxiom)
def _(ax):
    yield ax.subject
    yield ax.property
    yield from _walk(ax.literal)


@_walk.register(OWLSubObjectPropertyOfAxiom)
def _(ax):
    yield from _walk(ax.sub_property)
    yield from _walk(ax.super_property)


@_walk.register(OWLInverseObjectPropertiesAxiom)
def _(ax):
    yield ax.first
    yield ax.second


@_walk.register(OWLObjectPropertyDomainAxiom)
def _(ax):
    yield from _walk(ax.property)
    yield from _walk(ax.domain)


@_walk.register(OWLObjectPropertyRangeAxiom)
def _(ax):
    yield from _walk(ax.property)
    yield from _walk(ax.range)


@_walk.register(OWLFunctionalObjectPropertyAxiom)
def _(ax):
    yield from _walk(ax.property)


@_walk.register(OWLDataPropertyDomainAxiom)
def _(ax):
    yield ax.property
    yield from _walk(ax.domain)


@_walk.register(OWLDataPropertyRangeAxiom)
def _(ax):
    yield ax.property
    yield from _walk(ax.range)


@_walk.register(OWLAnnotationAssertionAxiom)
def _(ax):
    yield ax.property
    if isinstance(ax.value, OWLLiteral):
        yield from _walk(ax.value)


@_walk.register(SWRLRule)
def _(ax):
    for atom in ax.body:
        yield from _walk(atom)
    for atom in ax.head:
        yield from _walk(atom)


def signature_of(obj: OWLAxiom | OWLClassExpression) -> set[OWLEntity]:
    """All entities syntactically occurring in an axiom or expression."""
    return set(_walk(obj))


# ---------------------------------------------------------------------------
# Structural validation
# ---------------------------------------------------------------------------

def validate_expression(ce: OWLClassExpression) -> list[str]:
    """Check the structural rules the public constructors enforce.

    Guards expressions arriving from deserialization or other back doors;
    returns human-readable violations (empty list means valid) instead of
    raising.
    """
    violations: list[str] = []
    _validate(ce, violations)
    return violations


def _validate(node, out: list[str]) -> None:
    if isinstance(node, (ObjectIntersectionOf, ObjectUnionOf)):
        n = len(node.operands)
        if n < 2:
            out.append(f"{type(node).__name__} has {n} operand(s), needs >= 2")
        for op in node.operands:
            _validate(op, out)
    elif isinstance(node, ObjectComplementOf):
        _validate(node.operand, out)
    elif isinstance(node, (ObjectSomeValuesFrom, ObjectAllValuesFrom)):
        _validate(node.filler, out)
    elif isinstance(node, _CardinalityRestriction):
        if node.cardinality < 0:
            out.append(
                f"{type(node).__name__} has negative cardinality "
                f"{node.cardinality}")
        _validate(node.filler, out)
    elif isinstance(node, ObjectOneOf):
        if not node.individuals:
            out.append("ObjectOneOf has no individuals")
