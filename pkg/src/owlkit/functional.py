"""Functional-style syntax: lexer, recursive-descent parser, and printer.

The grammar covers exactly the constructors of the data model; any other
functional-syntax production raises :class:`UnsupportedConstructError`
rather than being skipped.  Comments run from ``#`` to end of line outside
strings and IRIs.  The printer emits one axiom per line with canonical
single spaces, so parse(serialize(o)) reproduces the axiom set exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import singledispatch

from .errors import ParseError, UnknownPrefixError, UnsupportedConstructError
from .model import (
    IRI,
    DataAllValuesFrom,
    DataHasValue,
    DataOneOf,
    DataSomeValuesFrom,
    DatatypeRestriction,
    FacetRestriction,
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
    OWLClass,
    OWLClassAssertionAxiom,
    OWLClassExpression,
    OWLDataProperty,
    OWLDataPropertyAssertionAxiom,
    OWLDataPropertyDomainAxiom,
    OWLDataPropertyRangeAxiom,
    OWLDatatype,
    OWLDeclarationAxiom,
    OWLDisjointClassesAxiom,
    OWLEntity,
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
    SWRLClassAtom,
    SWRLDataPropertyAtom,
    SWRLObjectPropertyAtom,
    SWRLRule,
    SWRLVariable,
)
from .ontology import Ontology
from .vocab import SWRL_VAR_NS, XSD_STRING_IRI, Facet

# ---------------------------------------------------------------------------
# Lexer
# ---------------------------------------------------------------------------

LPAREN = "LPAREN"
RPAREN = "RPAREN"
EQUALS = "EQUALS"
IDENT = "IDENT"
PNAME = "PNAME"
IRIREF = "IRIREF"
STRING = "STRING"
INTEGER = "INTEGER"
DTYPE_SEP = "DTYPE_SEP"
EOF = "EOF"

_ESCAPES = {'"': '"', "\\": "\\", "n": "\n", "t": "\t"}
_UNESCAPES = {'"': '\\"', "\\": "\\\\", "\n": "\\n", "\t": "\\t"}


@dataclass
class Token:
    kind: str
    value: object
    line: int
    column: int

    def describe(self) -> str:
        if self.kind == EOF:
            return "end of input"
        if self.kind == PNAME:
            prefix, local = self.value
            return f"{prefix}:{local}"
        return str(self.value)


def _is_ident_start(c: str) -> bool:
    return c.isalpha() or c == "_"


def _is_ident_char(c: str) -> bool:
    return c.isalnum() or c in "_.-"


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(text)

    def err(msg):
        raise ParseError(msg, line, col)

    while i < n:
        c = text[i]
        if c == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if c.isspace():
            i += 1
            col += 1
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_line, start_col = line, col
        if c == "(":
            tokens.append(Token(LPAREN, "(", line, col))
            i += 1
            col += 1
        elif c == ")":
            tokens.append(Token(RPAREN, ")", line, col))
            i += 1
            col += 1
        elif c == "=":
            tokens.append(Token(EQUALS, "=", line, col))
            i += 1
            col += 1
        elif c == "^":
            if i + 1 < n and text[i + 1] == "^":
                tokens.append(Token(DTYPE_SEP, "^^", line, col))
                i += 2
                col += 2
            else:
                err("stray '^'")
        elif c == "<":
            j = text.find(">", i + 1)
            if j < 0:
                err("unterminated IRI reference")
            tokens.append(Token(IRIREF, text[i + 1:j], line, col))
            col += j - i + 1
            i = j + 1
        elif c == '"':
            i += 1
            col += 1
            chars: list[str] = []
            while True:
                if i >= n:
                    err("unterminated string literal")
                c = text[i]
                if c == '"':
                    i += 1
                    col += 1
                    break
                if c == "\\":
                    if i + 1 >= n or text[i + 1] not in _ESCAPES:
                        err(f"unsupported escape sequence in string")
                    chars.append(_ESCAPES[text[i + 1]])
                    i += 2
                    col += 2
                    continue
                if c == "\n":
                    err("newline inside string literal")
                chars.append(c)
                i += 1
                col += 1
            tokens.append(Token(STRING, "".join(chars), start_line, start_col))
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token(INTEGER, int(text[i:j]), line, col))
            col += j - i
            i = j
        elif _is_ident_start(c) or c == ":":
            j = i
            while j < n and _is_ident_char(text[j]):
                j += 1
            name = text[i:j]
            col += j - i
            i = j
            if i < n and text[i] == ":":
                # prefixed name; local part may be empty (prefix declarations)
                i += 1
                col += 1
                k = i
                while k < n and _is_ident_char(text[k]):
                    k += 1
                local = text[i:k]
                col += k - i
                i = k
                tokens.append(Token(PNAME, (name, local), start_line, start_col))
            elif not name:
                err(f"unexpected character {c!r}")
            else:
                tokens.append(Token(IDENT, name, start_line, start_col))
        else:
            err(f"unexpected character {c!r}")
    tokens.append(Token(EOF, None, line, col))
    return tokens


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

_DECLARATION_KINDS = {
    "Class": OWLClass,
    "ObjectProperty": OWLObjectProperty,
    "DataProperty": OWLDataProperty,
    "NamedIndividual": OWLNamedIndividual,
    "Datatype": OWLDatatype,
    "AnnotationProperty": OWLAnnotationProperty,
}


class _Parser:
    def __init__(self, tokens: list[Token], prefixes: dict[str, str]):
        self.tokens = tokens
        self.pos = 0
        self.prefixes = prefixes

    # token plumbing ---------------------------------------------------------

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != EOF:
            self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {what}", tok.line, tok.column,
                             token=tok.describe())
        return self.advance()

    def fail(self, message: str) -> ParseError:
        tok = self.peek()
        return ParseError(message, tok.line, tok.column, token=tok.describe())

    # IRIs and entities --------------------------------------------------------

    def resolve(self, tok: Token) -> IRI:
        if tok.kind == IRIREF:
            return IRI(tok.value)
        prefix, local = tok.value
        if prefix not in self.prefixes:
            raise UnknownPrefixError(f"undeclared prefix {prefix!r}",
                                     tok.line, tok.column)
        return IRI(self.prefixes[prefix] + local)

    def iri(self, what: str = "an IRI") -> IRI:
        tok = self.peek()
        if tok.kind not in (IRIREF, PNAME):
            raise self.fail(f"expected {what}")
        return self.resolve(self.advance())

    def entity(self, cls, what: str):
        return cls(self.iri(what))

    # class expressions --------------------------------------------------------

    def class_expression(self) -> OWLClassExpression:
        tok = self.peek()
        if tok.kind in (IRIREF, PNAME):
            return OWLClass(self.resolve(self.advance()))
        if tok.kind == IDENT:
            name = tok.value
            handler = getattr(self, f"_ce_{name}", None)
            if handler is None:
                raise UnsupportedConstructError(
                    f"unsupported class expression constructor {name!r}",
                    tok.line, tok.column)
            self.advance()
            self.expect(LPAREN, "'('")
            ce = handler()
            self.expect(RPAREN, "')'")
            return ce
        raise self.fail("expected a class expression")

    def _ce_list(self, minimum=2) -> list[OWLClassExpression]:
        out = [self.class_expression()]
        while self.peek().kind != RPAREN:
            out.append(self.class_expression())
        if len(out) < minimum:
            raise self.fail(f"expected at least {minimum} operands")
        return out

    def _ce_ObjectIntersectionOf(self):
        return ObjectIntersectionOf(self._ce_list())

    def _ce_ObjectUnionOf(self):
        return ObjectUnionOf(self._ce_list())

    def _ce_ObjectComplementOf(self):
        return ObjectComplementOf(self.class_expression())

    def _ce_ObjectSomeValuesFrom(self):
        return ObjectSomeValuesFrom(self.object_property_expression(),
                                    self.class_expression())

    def _ce_ObjectAllValuesFrom(self):
        return ObjectAllValuesFrom(self.object_property_expression(),
                                   self.class_expression())

    def _ce_ObjectHasValue(self):
        return ObjectHasValue(self.object_property_expression(),
                              self.entity(OWLNamedIndividual, "an individual"))

    def _ce_ObjectOneOf(self):
        individuals = [self.entity(OWLNamedIndividual, "an individual")]
        while self.peek().kind != RPAREN:
            individuals.append(self.entity(OWLNamedIndividual, "an individual"))
        return ObjectOneOf(individuals)

    def _cardinality(self, cls):
        tok = self.expect(INTEGER, "a non-negative integer")
        pe = self.object_property_expression()
        filler = OWL_THING
        if self.peek().kind != RPAREN:
            filler = self.class_expression()
        return cls(tok.value, pe, filler)

    def _ce_ObjectMinCardinality(self):
        return self._cardinality(ObjectMinCardinality)

    def _ce_ObjectMaxCardinality(self):
        return self._cardinality(ObjectMaxCardinality)

    def _ce_ObjectExactCardinality(self):
        return self._cardinality(ObjectExactCardinality)

    def _ce_DataSomeValuesFrom(self):
        return DataSomeValuesFrom(self.entity(OWLDataProperty, "a data property"),
                                  self.data_range())

    def _ce_DataAllValuesFrom(self):
        return DataAllValuesFrom(self.entity(OWLDataProperty, "a data property"),
                                 self.data_range())

    def _ce_DataHasValue(self):
        return DataHasValue(self.entity(OWLDataProperty, "a data property"),
                            self.literal())

    # property expressions, ranges, literals ------------------------------------

    def object_property_expression(self):
        tok = self.peek()
        if tok.kind == IDENT and tok.value == "ObjectInverseOf":
            self.advance()
            self.expect(LPAREN, "'('")
            prop = self.entity(OWLObjectProperty, "an object property")
            self.expect(RPAREN, "')'")
            return ObjectInverseOf(prop)
        return self.entity(OWLObjectProperty, "an object property")

    def data_range(self):
        tok = self.peek()
        if tok.kind in (IRIREF, PNAME):
            return OWLDatatype(self.resolve(self.advance()))
        if tok.kind == IDENT and tok.value == "DatatypeRestriction":
            self.advance()
            self.expect(LPAREN, "'('")
            base = self.entity(OWLDatatype, "a datatype")
            facets = []
            while self.peek().kind != RPAREN:
                facet_iri = self.iri("a constraining facet")
                try:
                    facet = Facet.from_iri(facet_iri.text)
                except KeyError:
                    raise UnsupportedConstructError(
                        f"unsupported constraining facet <{facet_iri}>",
                        tok.line, tok.column) from None
                facets.append(FacetRestriction(facet, self.literal()))
            self.expect(RPAREN, "')'")
            return DatatypeRestriction(base, facets)
        if tok.kind == IDENT and tok.value == "DataOneOf":
            self.advance()
            self.expect(LPAREN, "'('")
            literals = [self.literal()]
            while self.peek().kind != RPAREN:
                literals.append(self.literal())
            self.expect(RPAREN, "')'")
            return DataOneOf(literals)
        if tok.kind == IDENT:
            raise UnsupportedConstructError(
                f"unsupported data range constructor {tok.value!r}",
                tok.line, tok.column)
        raise self.fail("expected a data range")

    def literal(self) -> OWLLiteral:
        tok = self.expect(STRING, "a literal")
        if self.peek().kind == DTYPE_SEP:
            self.advance()
            datatype = self.entity(OWLDatatype, "a datatype")
        else:
            datatype = OWLDatatype(IRI(XSD_STRING_IRI))
        try:
            return OWLLiteral(tok.value, datatype)
        except ValueError as exc:
            raise ParseError(str(exc), tok.line, tok.column) from None

    # axioms ----------------------------------------------------------------

    def axiom(self):
        tok = self.peek()
        if tok.kind != IDENT:
            raise self.fail("expected an axiom")
        handler = getattr(self, f"_ax_{tok.value}", None)
        if handler is None:
            raise UnsupportedConstructError(
                f"unsupported axiom constructor {tok.value!r}",
                tok.line, tok.column)
        self.advance()
        self.expect(LPAREN, "'('")
        ax = handler()
        self.expect(RPAREN, "')'")
        return ax

    def _ax_Declaration(self):
        tok = self.peek()
        if tok.kind != IDENT or tok.value not in _DECLARATION_KINDS:
            raise self.fail("expected an entity kind")
        cls = _DECLARATION_KINDS[self.advance().value]
        self.expect(LPAREN, "'('")
        entity = cls(self.iri("an entity IRI"))
        self.expect(RPAREN, "')'")
        return OWLDeclarationAxiom(entity)

    def _ax_SubClassOf(self):
        return OWLSubClassOfAxiom(self.class_expression(), self.class_expression())

    def _ax_EquivalentClasses(self):
        return OWLEquivalentClassesAxiom(self._ce_list())

    def _ax_DisjointClasses(self):
        return OWLDisjointClassesAxiom(self._ce_list())

    def _ax_ClassAssertion(self):
        ce = self.class_expression()
        individual = self.entity(OWLNamedIndividual, "an individual")
        return OWLClassAssertionAxiom(individual, ce)

    def _ax_ObjectPropertyAssertion(self):
        pe = self.object_property_expression()
        return OWLObjectPropertyAssertionAxiom(
            self.entity(OWLNamedIndividual, "an individual"), pe,
            self.entity(OWLNamedIndividual, "an individual"))

    def _ax_DataPropertyAssertion(self):
        dp = self.entity(OWLDataProperty, "a data property")
        return OWLDataPropertyAssertionAxiom(
            self.entity(OWLNamedIndividual, "an individual"), dp, self.literal())

    def _ax_SubObjectPropertyOf(self):
        return OWLSubObjectPropertyOfAxiom(self.object_property_expression(),
                                           self.object_property_expression())

    def _ax_InverseObjectProperties(self):
        return OWLInverseObjectPropertiesAxiom(
            self.entity(OWLObjectProperty, "an object property"),
            self.entity(OWLObjectProperty, "an object property"))

    def _ax_ObjectPropertyDomain(self):
        return OWLObjectPropertyDomainAxiom(self.object_property_expression(),
                                            self.class_expression())

    def _ax_ObjectPropertyRange(self):
        return OWLObjectPropertyRangeAxiom(self.object_property_expression(),
                                           self.class_expression())

    def _ax_FunctionalObjectProperty(self):
        return OWLFunctionalObjectPropertyAxiom(self.object_property_expression())

    def _ax_DataPropertyDomain(self):
        return OWLDataPropertyDomainAxiom(
            self.entity(OWLDataProperty, "a data property"),
            self.class_expression())

    def _ax_DataPropertyRange(self):
        return OWLDataPropertyRangeAxiom(
            self.entity(OWLDataProperty, "a data property"), self.data_range())

    def _ax_AnnotationAssertion(self):
        prop = self.entity(OWLAnnotationProperty, "an annotation property")
        subject = self.iri("an annotation subject IRI")
        tok = self.peek()
        if tok.kind == STRING:
            value = self.literal()
        else:
            value = self.iri("an annotation value")
        return OWLAnnotationAssertionAxiom(subject, prop, value)

    def _ax_DLSafeRule(self):
        self._expect_ident("Body")
        self.expect(LPAREN, "'('")
        body = self._atoms()
        self.expect(RPAREN, "')'")
        self._expect_ident("Head")
        self.expect(LPAREN, "'('")
        head = self._atoms()
        self.expect(RPAREN, "')'")
        return SWRLRule(body, head)

    def _expect_ident(self, name: str):
        tok = self.peek()
        if tok.kind != IDENT or tok.value != name:
            raise self.fail(f"expected {name!r}")
        self.advance()

    def _atoms(self):
        atoms = []
        while self.peek().kind != RPAREN:
            atoms.append(self._atom())
        return atoms

    def _atom(self):
        tok = self.peek()
        if tok.kind != IDENT:
            raise self.fail("expected a rule atom")
        name = self.advance().value
        self.expect(LPAREN, "'('")
        if name == "ClassAtom":
            atom = SWRLClassAtom(self.class_expression(), self._i_arg())
        elif name == "ObjectPropertyAtom":
            atom = SWRLObjectPropertyAtom(
                self.entity(OWLObjectProperty, "an object property"),
                self._i_arg(), self._i_arg())
        elif name == "DataPropertyAtom":
            prop = self.entity(OWLDataProperty, "a data property")
            arg = self._i_arg()
            if self.peek().kind == STRING:
                value = self.literal()
            else:
                value = self._variable()
            atom = SWRLDataPropertyAtom(prop, arg, value)
        else:
            raise UnsupportedConstructError(
                f"unsupported rule atom {name!r}", tok.line, tok.column)
        self.expect(RPAREN, "')'")
        return atom

    def _variable(self) -> SWRLVariable:
        self._expect_ident("Variable")
        self.expect(LPAREN, "'('")
        iri = self.iri("a variable IRI")
        self.expect(RPAREN, "')'")
        return SWRLVariable(iri.remainder)

    def _i_arg(self):
        tok = self.peek()
        if tok.kind == IDENT and tok.value == "Variable":
            return self._variable()
        return self.entity(OWLNamedIndividual, "an individual or variable")

    # document ----------------------------------------------------------------

    def document(self) -> Ontology:
        onto = Ontology()
        while self.peek().kind == IDENT and self.peek().value == "Prefix":
            self.advance()
            self.expect(LPAREN, "'('")
            tok = self.expect(PNAME, "a prefix name")
            prefix, local = tok.value
            if local:
                raise ParseError("prefix declarations bind 'name:' only",
                                 tok.line, tok.column)
            self.expect(EQUALS, "'='")
            ns = self.expect(IRIREF, "a namespace IRI")
            self.expect(RPAREN, "')'")
            onto.prefixes[prefix] = ns.value
            self.prefixes[prefix] = ns.value
        self._expect_ident("Ontology")
        self.expect(LPAREN, "'('")
        if self.peek().kind == IRIREF:
            onto.iri = IRI(self.advance().value)
            if self.peek().kind == IRIREF:
                tok = self.peek()
                raise UnsupportedConstructError(
                    "version IRIs are not supported", tok.line, tok.column)
        while self.peek().kind != RPAREN:
            if self.peek().kind == IDENT and self.peek().value == "Import":
                self.advance()
                self.expect(LPAREN, "'('")
                onto.imports.append(IRI(self.expect(IRIREF, "an IRI").value))
                self.expect(RPAREN, "')'")
            else:
                onto.add_axiom(self.axiom())
        self.expect(RPAREN, "')'")
        tok = self.peek()
        if tok.kind != EOF:
            raise ParseError("trailing content after ontology document",
                             tok.line, tok.column, token=tok.describe())
        return onto


def parse_functional(text: str) -> Ontology:
    """Parse a functional-style syntax document into an ontology."""
    parser = _Parser(tokenize(text), {})
    # standard prefixes resolve even when a document omits their declarations
    from .vocab import STANDARD_PREFIXES
    for name, ns in STANDARD_PREFIXES.items():
        parser.prefixes.setdefault(name, ns)
    return parser.document()


def parse_axiom(text: str, prefixes: dict[str, str] | None = None):
    """Parse a single axiom; used by tools that splice axioms into documents."""
    from .vocab import STANDARD_PREFIXES
    table = dict(STANDARD_PREFIXES)
    if prefixes:
        table.update(prefixes)
    parser = _Parser(tokenize(text), table)
    ax = parser.axiom()
    tok = parser.peek()
    if tok.kind != EOF:
        raise ParseError("trailing content after axiom", tok.line, tok.column,
                         token=tok.describe())
    return ax


# ---------------------------------------------------------------------------
# Printer
# ---------------------------------------------------------------------------

_LOCAL_OK = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_.-"


def _local_name_ok(local: str) -> bool:
    if not local or local[0].isdigit() or local[0] in ".-":
        return False
    return all(c in _LOCAL_OK for c in local)


def shorten(iri: IRI, prefixes: dict[str, str]) -> str:
    """Abbreviate an IRI against a prefix map, else fall back to ``<...>``."""
    for name, ns in prefixes.items():
        if iri.text.startswith(ns):
            local = iri.text[len(ns):]
            if _local_name_ok(local):
                return f"{name}:{local}"
    return f"<{iri.text}>"


def _escape(text: str) -> str:
    return "".join(_UNESCAPES.get(c, c) for c in text)


class _Printer:
    def __init__(self, prefixes: dict[str, str]):
        self.prefixes = prefixes

    def name(self, entity_or_iri) -> str:
        iri = entity_or_iri.iri if isinstance(entity_or_iri, OWLEntity) else entity_or_iri
        return shorten(iri, self.prefixes)

    def literal(self, lit: OWLLiteral) -> str:
        text = f'"{_escape(lit.lexical)}"'
        if lit.datatype.iri.text != XSD_STRING_IRI:
            text += "^^" + self.name(lit.datatype)
        return text

    def pe(self, pe) -> str:
        if isinstance(pe, ObjectInverseOf):
            return f"ObjectInverseOf({self.name(pe.property)})"
        return self.name(pe)

    def ce(self, ce) -> str:
        if isinstance(ce, OWLClass):
            return self.name(ce)
        if isinstance(ce, ObjectIntersectionOf):
            return "ObjectIntersectionOf(" + " ".join(map(self.ce, ce.operands)) + ")"
        if isinstance(ce, ObjectUnionOf):
            return "ObjectUnionOf(" + " ".join(map(self.ce, ce.operands)) + ")"
        if isinstance(ce, ObjectComplementOf):
            return f"ObjectComplementOf({self.ce(ce.operand)})"
        if isinstance(ce, ObjectSomeValuesFrom):
            return f"ObjectSomeValuesFrom({self.pe(ce.property)} {self.ce(ce.filler)})"
        if isinstance(ce, ObjectAllValuesFrom):
            return f"ObjectAllValuesFrom({self.pe(ce.property)} {self.ce(ce.filler)})"
        if isinstance(ce, ObjectHasValue):
            return f"ObjectHasValue({self.pe(ce.property)} {self.name(ce.individual)})"
        if isinstance(ce, ObjectOneOf):
            return "ObjectOneOf(" + " ".join(map(self.name, ce.individuals)) + ")"
        if isinstance(ce, (ObjectMinCardinality, ObjectMaxCardinality,
                           ObjectExactCardinality)):
            parts = [str(ce.cardinality), self.pe(ce.property)]
            if ce.filler != OWL_THING:
                parts.append(self.ce(ce.filler))
            return f"{type(ce).__name__}(" + " ".join(parts) + ")"
        if isinstance(ce, DataSomeValuesFrom):
            return f"DataSomeValuesFrom({self.name(ce.property)} {self.dr(ce.range)})"
        if isinstance(ce, DataAllValuesFrom):
            return f"DataAllValuesFrom({self.name(ce.property)} {self.dr(ce.range)})"
        if isinstance(ce, DataHasValue):
            return f"DataHasValue({self.name(ce.property)} {self.literal(ce.literal)})"
        raise TypeError(f"cannot print {type(ce).__name__}")

    def dr(self, dr) -> str:
        if isinstance(dr, OWLDatatype):
            return self.name(dr)
        if isinstance(dr, DatatypeRestriction):
            parts = [self.name(dr.base)]
            for fr in dr.facets:
                parts.append(shorten(IRI(fr.facet.iri), self.prefixes))
                parts.append(self.literal(fr.literal))
            return "DatatypeRestriction(" + " ".join(parts) + ")"
        if isinstance(dr, DataOneOf):
            return "DataOneOf(" + " ".join(map(self.literal, dr.literals)) + ")"
        raise TypeError(f"cannot print {type(dr).__name__}")

    def atom(self, atom) -> str:
        if isinstance(atom, SWRLClassAtom):
            return f"ClassAtom({self.ce(atom.class_expression)} {self.arg(atom.argument)})"
        if isinstance(atom, SWRLObjectPropertyAtom):
            return (f"ObjectPropertyAtom({self.name(atom.property)} "
                    f"{self.arg(atom.source)} {self.arg(atom.target)})")
        return (f"DataPropertyAtom({self.name(atom.property)} "
                f"{self.arg(atom.argument)} "
                f"{self.arg(atom.value) if isinstance(atom.value, SWRLVariable) else self.literal(atom.value)})")

    def arg(self, arg) -> str:
        if isinstance(arg, SWRLVariable):
            return f"Variable(<{SWRL_VAR_NS}{arg.name}>)"
        return self.name(arg)

    def axiom(self, ax) -> str:
        return _print_axiom(ax, self)


@singledispatch
def _print_axiom(ax, p: _Printer) -> str:
    raise TypeError(f"cannot print {type(ax).__name__}")


@_print_axiom.register
def _(ax: OWLDeclarationAxiom, p):
    kind = {
        OWLClass: "Class",
        OWLObjectProperty: "ObjectProperty",
        OWLDataProperty: "DataProperty",
        OWLNamedIndividual: "NamedIndividual",
        OWLDatatype: "Datatype",
        OWLAnnotationProperty: "AnnotationProperty",
    }[type(ax.entity)]
    return f"Declaration({kind}({p.name(ax.entity)}))"


@_print_axiom.register
def _(ax: OWLSubClassOfAxiom, p):
    return f"SubClassOf({p.ce(ax.sub_class)} {p.ce(ax.super_class)})"


@_print_axiom.register
def _(ax: OWLEquivalentClassesAxiom, p):
    return "EquivalentClasses(" + " ".join(map(p.ce, ax.operands)) + ")"


@_print_axiom.register
def _(ax: OWLDisjointClassesAxiom, p):
    return "DisjointClasses(" + " ".join(map(p.ce, ax.operands)) + ")"


@_print_axiom.register
def _(ax: OWLClassAssertionAxiom, p):
    return f"ClassAssertion({p.ce(ax.class_expression)} {p.name(ax.individual)})"


@_print_axiom.register
def _(ax: OWLObjectPropertyAssertionAxiom, p):
    return (f"ObjectPropertyAssertion({p.pe(ax.property)} "
            f"{p.name(ax.subject)} {p.name(ax.object)})")


@_print_axiom.register
def _(ax: OWLDataPropertyAssertionAxiom, p):
    return (f"DataPropertyAssertion({p.name(ax.property)} "
            f"{p.name(ax.subject)} {p.literal(ax.literal)})")


@_print_axiom.register
def _(ax: OWLSubObjectPropertyOfAxiom, p):
    return f"SubObjectPropertyOf({p.pe(ax.sub_property)} {p.pe(ax.super_property)})"


@_print_axiom.register
def _(ax: OWLInverseObjectPropertiesAxiom, p):
    return f"InverseObjectProperties({p.name(ax.first)} {p.name(ax.second)})"


@_print_axiom.register
def _(ax: OWLObjectPropertyDomainAxiom, p):
    return f"ObjectPropertyDomain({p.pe(ax.property)} {p.ce(ax.domain)})"


@_print_axiom.register
def _(ax: OWLObjectPropertyRangeAxiom, p):
    return f"ObjectPropertyRange({p.pe(ax.property)} {p.ce(ax.range)})"


@_print_axiom.register
def _(ax: OWLFunctionalObjectPropertyAxiom, p):
    return f"FunctionalObjectProperty({p.pe(ax.property)})"


@_print_axiom.register
def _(ax: OWLDataPropertyDomainAxiom, p):
    return f"DataPropertyDomain({p.name(ax.property)} {p.ce(ax.domain)})"


@_print_axiom.register
def _(ax: OWLDataPropertyRangeAxiom, p):
    return f"DataPropertyRange({p.name(ax.property)} {p.dr(ax.range)})"


@_print_axiom.register
def _(ax: OWLAnnotationAssertionAxiom, p):
    value = p.literal(ax.value) if isinstance(ax.value, OWLLiteral) else p.name(ax.value)
    return f"AnnotationAssertion({p.name(ax.property)} {p.name(ax.subject)} {value})"


@_print_axiom.register
def _(ax: SWRLRule, p):
    body = " ".join(p.atom(a) for a in ax.body)
    head = " ".join(p.atom(a) for a in ax.head)
    return f"DLSafeRule(Body({body}) Head({head}))"


def serialize_axiom(ax, prefixes: dict[str, str] | None = None) -> str:
    """Render one axiom in functional-style syntax."""
    from .vocab import STANDARD_PREFIXES
    table = dict(STANDARD_PREFIXES)
    if prefixes:
        table.update(prefixes)
    return _Printer(table).axiom(ax)


def serialize_functional(onto: Ontology) -> str:
    """Render a whole ontology document; reparsing reproduces the axiom set."""
    printer = _Printer(onto.prefixes)
    lines = [f"Prefix({name}:=<{ns}>)" for name, ns in onto.prefixes.items()]
    header = "Ontology("
    if onto.iri is not None:
        header += f"<{onto.iri.text}>"
    lines.append(header)
    for imported in onto.imports:
        lines.append(f"Import(<{imported.text}>)")
    for ax in onto.axioms():
        lines.append(printer.axiom(ax))
    lines.append(")")
    return "\n".join(lines) + "\n"
