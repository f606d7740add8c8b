"""Class-expression syntax: DL and Manchester renderers and parsers,
plus the string rule parser.

Both notations share one canonical form: operands of a binary connective
are parenthesized unless they are plain names or enumerations, and a
quantifier filler is parenthesized unless atomic.  Parsing flattens nested
same-operator intersections/unions (see :func:`normalize`), which is the
only normalization the round-trip is defined modulo.

A singleton enumeration directly after ``∃ r.`` reads as a has-value
restriction; an enumeration filler is kept distinct by parenthesizing it,
``∃ r.({a})``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError, UnknownPrefixError
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
    OWLClass,
    OWLClassExpression,
    OWLDataProperty,
    OWLDataRange,
    OWLDatatype,
    OWLLiteral,
    OWLNamedIndividual,
    OWLObjectProperty,
    OWL_NOTHING,
    OWL_THING,
    SWRLClassAtom,
    SWRLDataPropertyAtom,
    SWRLObjectPropertyAtom,
    SWRLRule,
    SWRLVariable,
)
from .vocab import (
    Facet,
    STANDARD_PREFIXES,
    XSD_DOUBLE_IRI,
    XSD_INTEGER_IRI,
    XSD_NS,
    XSD_STRING_IRI,
)

_XSD_INTEGER = OWLDatatype(IRI(XSD_INTEGER_IRI))
_XSD_DOUBLE = OWLDatatype(IRI(XSD_DOUBLE_IRI))
_XSD_STRING = OWLDatatype(IRI(XSD_STRING_IRI))


# ---------------------------------------------------------------------------
# Prefix context
# ---------------------------------------------------------------------------

@dataclass
class PrefixContext:
    """Resolution context for names in expression syntax.

    Bare names resolve against the default namespace, prefixed names
    against the prefix table, and ``<...>`` IRIs are always accepted.
    """

    default_ns: str | None = None
    prefixes: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        for name, ns in STANDARD_PREFIXES.items():
            self.prefixes.setdefault(name, ns)

    @classmethod
    def from_ontology(cls, onto, default_ns: str | None = None) -> "PrefixContext":
        if default_ns is None:
            default_ns = onto.prefixes.get("")
        return cls(default_ns=default_ns, prefixes=dict(onto.prefixes))

    def resolve_bare(self, name: str) -> IRI:
        if self.default_ns is None:
            raise UnknownPrefixError(
                f"cannot resolve bare name {name!r}: no default namespace")
        return IRI(self.default_ns + name)

    def resolve_prefixed(self, prefix: str, local: str) -> IRI:
        if prefix not in self.prefixes:
            raise UnknownPrefixError(f"undeclared prefix {prefix!r}")
        return IRI(self.prefixes[prefix] + local)

    def shorten(self, iri: IRI) -> str:
        text = iri.text
        if self.default_ns and text.startswith(self.default_ns):
            local = text[len(self.default_ns):]
            if _simple_name(local):
                return local
        for name, ns in self.prefixes.items():
            if name and text.startswith(ns):
                local = text[len(ns):]
                if _simple_name(local):
                    return f"{name}:{local}"
        return f"<{text}>"


def _simple_name(name: str) -> bool:
    return (bool(name) and (name[0].isalpha() or name[0] == "_")
            and all(c.isalnum() or c == "_" for c in name))


# ---------------------------------------------------------------------------
# Expression lexer (shared by the DL, Manchester, and rule parsers)
# ---------------------------------------------------------------------------

NAME, PNAME, IRIREF, NUMBER, STRING, SYMBOL, VAR, EOF = (
    "NAME", "PNAME", "IRIREF", "NUMBER", "STRING", "SYMBOL", "VAR", "EOF")

_DL_ESCAPES = {
    "sqcap": "⊓", "sqcup": "⊔", "exists": "∃", "forall": "∀",
    "neg": "¬", "top": "⊤", "bot": "⊥",
}
_GLYPHS = set("⊓⊔¬∃∀⊤⊥≥≤⁻(){}[],.=<>^")
_TWO_CHAR = ("->", "^^", ">=", "<=")
_ESCAPE_MAP = {'"': '"', "\\": "\\", "n": "\n", "t": "\t"}


@dataclass
class Tok:
    kind: str
    value: object
    column: int

    def describe(self) -> str:
        if self.kind == EOF:
            return "end of input"
        if self.kind == PNAME:
            return f"{self.value[0]}:{self.value[1]}"
        if self.kind == VAR:
            return f"?{self.value}"
        return str(self.value)


def _lex(text: str) -> list[Tok]:
    tokens: list[Tok] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        col = i + 1
        if c.isspace():
            i += 1
            continue
        if text.startswith(_TWO_CHAR, i):
            for sym in _TWO_CHAR:
                if text.startswith(sym, i):
                    tokens.append(Tok(SYMBOL, sym, col))
                    i += len(sym)
                    break
            continue
        if c == "\\":
            j = i + 1
            while j < n and text[j].isalpha():
                j += 1
            word = text[i + 1:j]
            if word not in _DL_ESCAPES:
                raise ParseError(f"unknown escape \\{word}", column=col)
            tokens.append(Tok(SYMBOL, _DL_ESCAPES[word], col))
            i = j
            continue
        if c == "<":
            # an IRI reference only when a '>' closes it with no whitespace
            # in between; otherwise '<' is the facet comparison symbol
            j = text.find(">", i + 1)
            if j > i + 1 and not any(ch.isspace() for ch in text[i + 1:j]):
                tokens.append(Tok(IRIREF, text[i + 1:j], col))
                i = j + 1
            else:
                tokens.append(Tok(SYMBOL, "<", col))
                i += 1
            continue
        if c == '"':
            i += 1
            chars: list[str] = []
            while True:
                if i >= n:
                    raise ParseError("unterminated string literal", column=col)
                if text[i] == '"':
                    i += 1
                    break
                if text[i] == "\\":
                    if i + 1 >= n or text[i + 1] not in _ESCAPE_MAP:
                        raise ParseError("unsupported escape in string",
                                         column=i + 1)
                    chars.append(_ESCAPE_MAP[text[i + 1]])
                    i += 2
                    continue
                chars.append(text[i])
                i += 1
            tokens.append(Tok(STRING, "".join(chars), col))
            continue
        if c == "?":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            if j == i + 1:
                raise ParseError("expected a variable name after '?'", column=col)
            tokens.append(Tok(VAR, text[i + 1:j], col))
            i = j
            continue
        if c.isdigit() or (c == "-" and i + 1 < n and text[i + 1].isdigit()):
            j = i + 1
            while j < n and (text[j].isdigit() or text[j] in ".eE"
                             or (text[j] in "+-" and text[j - 1] in "eE")):
                j += 1
            tokens.append(Tok(NUMBER, text[i:j], col))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            name = text[i:j]
            if j < n and text[j] == ":":
                k = j + 1
                while k < n and (text[k].isalnum() or text[k] == "_"):
                    k += 1
                tokens.append(Tok(PNAME, (name, text[j + 1:k]), col))
                i = k
            else:
                tokens.append(Tok(NAME, name, col))
            i = max(i, j)
            continue
        if c in _GLYPHS:
            tokens.append(Tok(SYMBOL, c, col))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", column=col)
    tokens.append(Tok(EOF, None, len(text) + 1))
    return tokens


# ---------------------------------------------------------------------------
# Parser base
# ---------------------------------------------------------------------------

class _ExprParser:
    def __init__(self, tokens: list[Tok], ctx: PrefixContext):
        self.tokens = tokens
        self.pos = 0
        self.ctx = ctx

    def peek(self, ahead: int = 0) -> Tok:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self) -> Tok:
        tok = self.tokens[self.pos]
        if tok.kind != EOF:
            self.pos += 1
        return tok

    def at_symbol(self, *symbols: str) -> bool:
        tok = self.peek()
        return tok.kind == SYMBOL and tok.value in symbols

    def eat_symbol(self, symbol: str, what: str | None = None) -> None:
        if not self.at_symbol(symbol):
            tok = self.peek()
            raise ParseError(f"expected {what or symbol!r}", column=tok.column,
                             token=tok.describe())
        self.advance()

    def fail(self, message: str) -> ParseError:
        tok = self.peek()
        return ParseError(message, column=tok.column, token=tok.describe())

    def expect_eof(self) -> None:
        tok = self.peek()
        if tok.kind != EOF:
            raise ParseError("trailing content", column=tok.column,
                             token=tok.describe())

    def resolve(self, tok: Tok) -> IRI:
        try:
            if tok.kind == IRIREF:
                return IRI(tok.value)
            if tok.kind == PNAME:
                return self.ctx.resolve_prefixed(*tok.value)
            return self.ctx.resolve_bare(tok.value)
        except UnknownPrefixError as exc:
            raise ParseError(str(exc), column=tok.column) from None

    def name_iri(self, what: str) -> IRI:
        tok = self.peek()
        if tok.kind not in (NAME, PNAME, IRIREF):
            raise self.fail(f"expected {what}")
        return self.resolve(self.advance())

    def number_literal(self) -> OWLLiteral:
        tok = self.advance()
        lexical = tok.value
        datatype = _XSD_DOUBLE if any(c in lexical for c in ".eE") else _XSD_INTEGER
        try:
            return OWLLiteral(lexical, datatype)
        except ValueError as exc:
            raise ParseError(str(exc), column=tok.column) from None

    def literal(self) -> OWLLiteral:
        tok = self.peek()
        if tok.kind == NUMBER:
            return self.number_literal()
        if tok.kind == STRING:
            self.advance()
            datatype = _XSD_STRING
            if self.at_symbol("^^"):
                self.advance()
                datatype = OWLDatatype(self.name_iri("a datatype"))
            try:
                return OWLLiteral(tok.value, datatype)
            except ValueError as exc:
                raise ParseError(str(exc), column=tok.column) from None
        raise self.fail("expected a literal")

    def facet_block(self, base: OWLDatatype, symbols: dict[str, Facet]) -> DatatypeRestriction:
        self.eat_symbol("[")
        facets = []
        while True:
            tok = self.peek()
            if tok.kind != SYMBOL or tok.value not in symbols:
                raise self.fail("expected a facet comparison")
            facet = symbols[self.advance().value]
            facets.append(FacetRestriction(facet, self.literal()))
            if self.at_symbol(","):
                self.advance()
                continue
            break
        self.eat_symbol("]")
        try:
            return DatatypeRestriction(base, facets)
        except ValueError as exc:
            raise ParseError(str(exc), column=self.peek().column) from None

    def is_datatype_iri(self, iri: IRI) -> bool:
        return iri.text.startswith(XSD_NS)


_MANCHESTER_FACETS = {">=": Facet.MIN_INCLUSIVE, ">": Facet.MIN_EXCLUSIVE,
                      "<=": Facet.MAX_INCLUSIVE, "<": Facet.MAX_EXCLUSIVE}
_DL_FACETS = {"≥": Facet.MIN_INCLUSIVE, ">": Facet.MIN_EXCLUSIVE,
              "≤": Facet.MAX_INCLUSIVE, "<": Facet.MAX_EXCLUSIVE}


# ---------------------------------------------------------------------------
# DL syntax
# ---------------------------------------------------------------------------

class _DLParser(_ExprParser):
    def expression(self) -> OWLClassExpression:
        operands = [self.intersection()]
        while self.at_symbol("⊔"):
            self.advance()
            operands.append(self.intersection())
        return _nary(ObjectUnionOf, operands)

    def intersection(self) -> OWLClassExpression:
        operands = [self.unary()]
        while self.at_symbol("⊓"):
            self.advance()
            operands.append(self.unary())
        return _nary(ObjectIntersectionOf, operands)

    def unary(self) -> OWLClassExpression:
        if self.at_symbol("¬"):
            self.advance()
            return ObjectComplementOf(self.unary())
        if self.at_symbol("∃", "∀"):
            quantifier = self.advance().value
            prop = self.role()
            self.eat_symbol(".", "'.' between role and filler")
            return self.quantified_filler(quantifier, prop)
        if self.at_symbol("≥", "≤", "="):
            symbol = self.advance().value
            tok = self.peek()
            if tok.kind != NUMBER or not tok.value.isdigit():
                raise self.fail("expected a non-negative integer")
            self.advance()
            n = int(tok.value)
            prop = self.role()
            self.eat_symbol(".", "'.' between role and filler")
            filler = self.class_filler()
            cls = {"≥": ObjectMinCardinality, "≤": ObjectMaxCardinality,
                   "=": ObjectExactCardinality}[symbol]
            return cls(n, prop, filler)
        return self.atomic()

    def role(self):
        prop = OWLObjectProperty(self.name_iri("a property name"))
        if self.at_symbol("⁻"):
            self.advance()
            return ObjectInverseOf(prop)
        return prop

    def quantified_filler(self, quantifier: str, prop) -> OWLClassExpression:
        # data or object restriction is decided by the filler's shape
        tok = self.peek()
        if tok.kind in (NAME, PNAME, IRIREF):
            iri = self.resolve(tok)
            if self.is_datatype_iri(iri):
                return self.data_restriction(quantifier, prop,
                                             collapse_has_value=quantifier == "∃")
        if tok.kind == SYMBOL and tok.value == "{":
            inner = self.peek(1)
            if inner.kind in (NUMBER, STRING):
                return self.data_restriction(quantifier, prop,
                                             collapse_has_value=quantifier == "∃")
            self.advance()
            individuals = self.individual_list()
            self.eat_symbol("}")
            if quantifier == "∃" and len(individuals) == 1:
                return ObjectHasValue(prop, individuals[0])
            filler = ObjectOneOf(individuals)
            return (ObjectSomeValuesFrom if quantifier == "∃"
                    else ObjectAllValuesFrom)(prop, filler)
        if (tok.kind == SYMBOL and tok.value == "("
                and self.peek(1).kind == SYMBOL and self.peek(1).value == "{"
                and self.peek(2).kind in (NUMBER, STRING)):
            # parenthesized literal enumeration: an explicit DataOneOf
            # filler, kept distinct from the has-value collapse
            self.advance()
            restriction = self.data_restriction(quantifier, prop,
                                                collapse_has_value=False)
            self.eat_symbol(")")
            return restriction
        filler = self.class_filler()
        return (ObjectSomeValuesFrom if quantifier == "∃"
                else ObjectAllValuesFrom)(prop, filler)

    def data_restriction(self, quantifier: str, prop,
                         collapse_has_value: bool) -> OWLClassExpression:
        dp = OWLDataProperty(prop.iri if isinstance(prop, OWLObjectProperty)
                             else prop.property.iri)
        if isinstance(prop, ObjectInverseOf):
            raise self.fail("a data property cannot be inverted")
        tok = self.peek()
        if tok.kind == SYMBOL and tok.value == "{":
            self.advance()
            literals = [self.literal()]
            while self.at_symbol(","):
                self.advance()
                literals.append(self.literal())
            self.eat_symbol("}")
            if collapse_has_value and len(literals) == 1:
                return DataHasValue(dp, literals[0])
            rng: OWLDataRange = DataOneOf(literals)
        else:
            base = OWLDatatype(self.name_iri("a datatype"))
            if self.at_symbol("["):
                rng = self.facet_block(base, _DL_FACETS)
            else:
                rng = base
        return (DataSomeValuesFrom if quantifier == "∃"
                else DataAllValuesFrom)(dp, rng)

    def class_filler(self) -> OWLClassExpression:
        return self.unary()

    def atomic(self) -> OWLClassExpression:
        tok = self.peek()
        if tok.kind == SYMBOL and tok.value == "⊤":
            self.advance()
            return OWL_THING
        if tok.kind == SYMBOL and tok.value == "⊥":
            self.advance()
            return OWL_NOTHING
        if tok.kind == SYMBOL and tok.value == "(":
            self.advance()
            inner = self.inner_parenthesized()
            self.eat_symbol(")")
            return inner
        if tok.kind == SYMBOL and tok.value == "{":
            self.advance()
            individuals = self.individual_list()
            self.eat_symbol("}")
            return ObjectOneOf(individuals)
        if tok.kind in (NAME, PNAME, IRIREF):
            return OWLClass(self.resolve(self.advance()))
        raise self.fail("expected a class expression")

    def inner_parenthesized(self) -> OWLClassExpression:
        # '({a})' as a quantifier filler stays an enumeration; the
        # unparenthesized form is the has-value reading
        tok = self.peek()
        if tok.kind == SYMBOL and tok.value == "{" and self.peek(1).kind in (NUMBER, STRING):
            raise self.fail("literal enumerations are only valid as "
                            "quantifier fillers")
        return self.expression()

    def individual_list(self) -> list[OWLNamedIndividual]:
        individuals = [OWLNamedIndividual(self.name_iri("an individual"))]
        while self.at_symbol(","):
            self.advance()
            individuals.append(OWLNamedIndividual(self.name_iri("an individual")))
        return individuals


def parse_dl(text: str, ctx: PrefixContext) -> OWLClassExpression:
    """Parse DL notation; inverse of :func:`render_dl` up to flattening.

    ``A ⊓ (B ⊓ C)`` parses to one three-operand intersection (see
    :func:`normalize`)."""
    parser = _DLParser(_lex(text), ctx)
    ce = parser.expression()
    parser.expect_eof()
    return normalize(ce)


def render_dl(ce: OWLClassExpression, ctx: PrefixContext) -> str:
    """Render to DL notation: ⊓ ⊔ ¬ ∃ ∀ ⊤ ⊥, ``≥ n r.C``, ``{a}``, ``r⁻``."""
    return _RendererDL(ctx).render(ce)


class _RendererDL:
    def __init__(self, ctx: PrefixContext):
        self.ctx = ctx

    def name(self, entity) -> str:
        return self.ctx.shorten(entity.iri)

    def pe(self, pe) -> str:
        if isinstance(pe, ObjectInverseOf):
            return self.name(pe.property) + "⁻"
        return self.name(pe)

    def is_atomic(self, ce) -> bool:
        return isinstance(ce, (OWLClass, ObjectOneOf))

    def wrap(self, ce) -> str:
        text = self.render(ce)
        return text if self.is_atomic(ce) else f"({text})"

    def filler(self, ce) -> str:
        if isinstance(ce, ObjectOneOf) and len(ce.individuals) == 1:
            return f"({self.render(ce)})"
        return self.wrap(ce)

    def data_filler(self, rng, collapse_context: bool) -> str:
        if isinstance(rng, OWLDatatype):
            return self.name(rng)
        if isinstance(rng, DatatypeRestriction):
            facets = ", ".join(
                f"{fr.facet.dl_symbol} {self.literal(fr.literal)}"
                for fr in rng.facets)
            return f"{self.name(rng.base)}[{facets}]"
        body = "{" + ", ".join(self.literal(lit) for lit in rng.literals) + "}"
        if collapse_context and len(rng.literals) == 1:
            return f"({body})"
        return body

    def literal(self, lit: OWLLiteral) -> str:
        return _render_value_literal(lit, self.ctx)

    def render(self, ce) -> str:
        if isinstance(ce, OWLClass):
            if ce == OWL_THING:
                return "⊤"
            if ce == OWL_NOTHING:
                return "⊥"
            return self.name(ce)
        if isinstance(ce, ObjectIntersectionOf):
            return " ⊓ ".join(self.wrap(op) for op in ce.operands)
        if isinstance(ce, ObjectUnionOf):
            return " ⊔ ".join(self.wrap(op) for op in ce.operands)
        if isinstance(ce, ObjectComplementOf):
            return "¬" + self.wrap(ce.operand)
        if isinstance(ce, ObjectSomeValuesFrom):
            return f"∃ {self.pe(ce.property)}.{self.filler(ce.filler)}"
        if isinstance(ce, ObjectAllValuesFrom):
            return f"∀ {self.pe(ce.property)}.{self.wrap(ce.filler)}"
        if isinstance(ce, ObjectHasValue):
            return f"∃ {self.pe(ce.property)}.{{{self.name(ce.individual)}}}"
        if isinstance(ce, ObjectOneOf):
            return "{" + ", ".join(self.name(i) for i in ce.individuals) + "}"
        if isinstance(ce, ObjectMinCardinality):
            return f"≥ {ce.cardinality} {self.pe(ce.property)}.{self.wrap(ce.filler)}"
        if isinstance(ce, ObjectMaxCardinality):
            return f"≤ {ce.cardinality} {self.pe(ce.property)}.{self.wrap(ce.filler)}"
        if isinstance(ce, ObjectExactCardinality):
            return f"= {ce.cardinality} {self.pe(ce.property)}.{self.wrap(ce.filler)}"
        if isinstance(ce, DataSomeValuesFrom):
            return f"∃ {self.name(ce.property)}.{self.data_filler(ce.range, True)}"
        if isinstance(ce, DataAllValuesFrom):
            return f"∀ {self.name(ce.property)}.{self.data_filler(ce.range, False)}"
        if isinstance(ce, DataHasValue):
            return f"∃ {self.name(ce.property)}.{{{self.literal(ce.literal)}}}"
        raise TypeError(f"cannot render {type(ce).__name__}")


# ---------------------------------------------------------------------------
# Manchester syntax
# ---------------------------------------------------------------------------

_KEYWORDS = {"and", "or", "not", "some", "only", "value", "min", "max",
             "exactly", "inverse"}
_RESTRICTION_KEYWORDS = {"some", "only", "value", "min", "max", "exactly"}


class _ManchesterParser(_ExprParser):
    def expression(self) -> OWLClassExpression:
        operands = [self.conjunction()]
        while self.at_keyword("or"):
            self.advance()
            operands.append(self.conjunction())
        return _nary(ObjectUnionOf, operands)

    def conjunction(self) -> OWLClassExpression:
        operands = [self.unary()]
        while self.at_keyword("and"):
            self.advance()
            operands.append(self.unary())
        return _nary(ObjectIntersectionOf, operands)

    def at_keyword(self, *names: str) -> bool:
        tok = self.peek()
        return tok.kind == NAME and tok.value in names

    def unary(self) -> OWLClassExpression:
        if self.at_keyword("not"):
            self.advance()
            return ObjectComplementOf(self.unary())
        if self.at_keyword("inverse"):
            self.advance()
            prop = ObjectInverseOf(OWLObjectProperty(self.name_iri("a property")))
            return self.restriction(prop)
        tok = self.peek()
        if tok.kind in (NAME, PNAME, IRIREF) and not (
                tok.kind == NAME and tok.value in _KEYWORDS):
            nxt = self.peek(1)
            if nxt.kind == NAME and nxt.value in _RESTRICTION_KEYWORDS:
                prop = OWLObjectProperty(self.resolve(self.advance()))
                return self.restriction(prop)
        return self.atomic()

    def restriction(self, prop) -> OWLClassExpression:
        keyword_tok = self.peek()
        if keyword_tok.kind != NAME or keyword_tok.value not in _RESTRICTION_KEYWORDS:
            raise self.fail("expected a restriction keyword")
        keyword = self.advance().value
        if keyword in ("some", "only"):
            return self.some_only(prop, keyword)
        if keyword == "value":
            tok = self.peek()
            if tok.kind in (NUMBER, STRING):
                if isinstance(prop, ObjectInverseOf):
                    raise self.fail("a data property cannot be inverted")
                return DataHasValue(OWLDataProperty(prop.iri), self.literal())
            return ObjectHasValue(prop,
                                  OWLNamedIndividual(self.name_iri("an individual")))
        # min / max / exactly
        tok = self.peek()
        if tok.kind != NUMBER or not tok.value.isdigit():
            raise self.fail("expected a non-negative integer")
        self.advance()
        n = int(tok.value)
        filler = OWL_THING
        if self.starts_primary():
            filler = self.class_filler("cardinality filler")
        cls = {"min": ObjectMinCardinality, "max": ObjectMaxCardinality,
               "exactly": ObjectExactCardinality}[keyword]
        return cls(n, prop, filler)

    def starts_primary(self) -> bool:
        tok = self.peek()
        if tok.kind in (PNAME, IRIREF):
            return True
        if tok.kind == NAME:
            return tok.value not in _KEYWORDS or tok.value in ("not", "inverse")
        return tok.kind == SYMBOL and tok.value in ("(", "{")

    def some_only(self, prop, keyword: str) -> OWLClassExpression:
        tok = self.peek()
        if tok.kind in (NAME, PNAME, IRIREF) and not (
                tok.kind == NAME and tok.value in _KEYWORDS):
            iri = self.resolve(tok)
            if self.is_datatype_iri(iri):
                return self.data_restriction(prop, keyword)
        if tok.kind == SYMBOL and tok.value == "{" and \
                self.peek(1).kind in (NUMBER, STRING):
            return self.data_restriction(prop, keyword)
        filler = self.class_filler(f"filler of '{keyword}'")
        cls = ObjectSomeValuesFrom if keyword == "some" else ObjectAllValuesFrom
        return cls(prop, filler)

    def data_restriction(self, prop, keyword: str) -> OWLClassExpression:
        if isinstance(prop, ObjectInverseOf):
            raise self.fail("a data property cannot be inverted")
        dp = OWLDataProperty(prop.iri)
        tok = self.peek()
        if tok.kind == SYMBOL and tok.value == "{":
            self.advance()
            literals = [self.literal()]
            while self.at_symbol(","):
                self.advance()
                literals.append(self.literal())
            self.eat_symbol("}")
            rng: OWLDataRange = DataOneOf(literals)
        else:
            base = OWLDatatype(self.name_iri("a datatype"))
            if self.at_symbol("["):
                rng = self.facet_block(base, _MANCHESTER_FACETS)
            else:
                rng = base
        cls = DataSomeValuesFrom if keyword == "some" else DataAllValuesFrom
        return cls(dp, rng)

    def class_filler(self, what: str) -> OWLClassExpression:
        if not self.starts_primary():
            raise self.fail(f"expected {what}")
        return self.unary()

    def atomic(self) -> OWLClassExpression:
        tok = self.peek()
        if tok.kind == SYMBOL and tok.value == "(":
            self.advance()
            inner = self.expression()
            self.eat_symbol(")")
            return inner
        if tok.kind == SYMBOL and tok.value == "{":
            self.advance()
            individuals = [OWLNamedIndividual(self.name_iri("an individual"))]
            while self.at_symbol(","):
                self.advance()
                individuals.append(
                    OWLNamedIndividual(self.name_iri("an individual")))
            self.eat_symbol("}")
            return ObjectOneOf(individuals)
        if tok.kind in (NAME, PNAME, IRIREF):
            if tok.kind == NAME and tok.value in _KEYWORDS:
                raise self.fail("expected a class expression")
            return OWLClass(self.resolve(self.advance()))
        raise self.fail("expected a class expression")


def parse_manchester(text: str, ctx: PrefixContext) -> OWLClassExpression:
    """Parse Manchester notation; keywords are case-sensitive.  Nested
    same-operator conjunctions/disjunctions flatten, as in :func:`parse_dl`."""
    parser = _ManchesterParser(_lex(text), ctx)
    ce = parser.expression()
    parser.expect_eof()
    return normalize(ce)


def render_manchester(ce: OWLClassExpression, ctx: PrefixContext) -> str:
    """Render with the ``and``/``or``/``not``/``some``/... keyword set."""
    return _RendererManchester(ctx).render(ce)


class _RendererManchester:
    def __init__(self, ctx: PrefixContext):
        self.ctx = ctx

    def name(self, entity) -> str:
        return self.ctx.shorten(entity.iri)

    def pe(self, pe) -> str:
        if isinstance(pe, ObjectInverseOf):
            return "inverse " + self.name(pe.property)
        return self.name(pe)

    def is_atomic(self, ce) -> bool:
        return isinstance(ce, (OWLClass, ObjectOneOf))

    def wrap(self, ce) -> str:
        text = self.render(ce)
        return text if self.is_atomic(ce) else f"({text})"

    def data_range(self, rng) -> str:
        if isinstance(rng, OWLDatatype):
            return self.name(rng)
        if isinstance(rng, DatatypeRestriction):
            facets = ", ".join(
                f"{fr.facet.ascii_symbol} {self.literal(fr.literal)}"
                for fr in rng.facets)
            return f"{self.name(rng.base)}[{facets}]"
        return "{" + ", ".join(self.literal(lit) for lit in rng.literals) + "}"

    def literal(self, lit: OWLLiteral) -> str:
        return _render_value_literal(lit, self.ctx)

    def render(self, ce) -> str:
        if isinstance(ce, OWLClass):
            if ce == OWL_THING:
                return "owl:Thing"
            if ce == OWL_NOTHING:
                return "owl:Nothing"
            return self.name(ce)
        if isinstance(ce, ObjectIntersectionOf):
            return " and ".join(self.wrap(op) for op in ce.operands)
        if isinstance(ce, ObjectUnionOf):
            return " or ".join(self.wrap(op) for op in ce.operands)
        if isinstance(ce, ObjectComplementOf):
            return "not " + self.wrap(ce.operand)
        if isinstance(ce, ObjectSomeValuesFrom):
            return f"{self.pe(ce.property)} some {self.wrap(ce.filler)}"
        if isinstance(ce, ObjectAllValuesFrom):
            return f"{self.pe(ce.property)} only {self.wrap(ce.filler)}"
        if isinstance(ce, ObjectHasValue):
            return f"{self.pe(ce.property)} value {self.name(ce.individual)}"
        if isinstance(ce, ObjectOneOf):
            return "{" + ", ".join(self.name(i) for i in ce.individuals) + "}"
        if isinstance(ce, (ObjectMinCardinality, ObjectMaxCardinality,
                           ObjectExactCardinality)):
            keyword = {ObjectMinCardinality: "min", ObjectMaxCardinality: "max",
                       ObjectExactCardinality: "exactly"}[type(ce)]
            text = f"{self.pe(ce.property)} {keyword} {ce.cardinality}"
            if ce.filler != OWL_THING:
                text += f" {self.wrap(ce.filler)}"
            return text
        if isinstance(ce, DataSomeValuesFrom):
            return f"{self.name(ce.property)} some {self.data_range(ce.range)}"
        if isinstance(ce, DataAllValuesFrom):
            return f"{self.name(ce.property)} only {self.data_range(ce.range)}"
        if isinstance(ce, DataHasValue):
            return f"{self.name(ce.property)} value {self.literal(ce.literal)}"
        raise TypeError(f"cannot render {type(ce).__name__}")


def _render_value_literal(lit: OWLLiteral, ctx: PrefixContext) -> str:
    # numbers render bare when reparsing recovers the same datatype
    if lit.datatype == _XSD_INTEGER:
        return lit.lexical
    if lit.datatype == _XSD_DOUBLE and any(c in lit.lexical for c in ".eE"):
        return lit.lexical
    escaped = lit.lexical.replace("\\", "\\\\").replace('"', '\\"') \
        .replace("\n", "\\n").replace("\t", "\\t")
    text = f'"{escaped}"'
    if lit.datatype != _XSD_STRING:
        text += "^^" + ctx.shorten(lit.datatype.iri)
    return text


def _nary(cls, operands):
    if len(operands) == 1:
        return operands[0]
    return cls(operands)


# ---------------------------------------------------------------------------
# Normalization
# ---------------------------------------------------------------------------

def normalize(ce: OWLClassExpression) -> OWLClassExpression:
    """Flatten nested same-operator intersections/unions, preserving order.

    ``A ⊓ (B ⊓ C)`` and its flat three-operand form are the same expression
    after parsing; round-trip equality is defined modulo this flattening.
    """
    if isinstance(ce, (ObjectIntersectionOf, ObjectUnionOf)):
        cls = type(ce)
        flat: list[OWLClassExpression] = []
        for op in ce.operands:
            op = normalize(op)
            if isinstance(op, cls):
                flat.extend(op.operands)
            else:
                flat.append(op)
        return cls(flat)
    if isinstance(ce, ObjectComplementOf):
        return ObjectComplementOf(normalize(ce.operand))
    if isinstance(ce, ObjectSomeValuesFrom):
        return ObjectSomeValuesFrom(ce.property, normalize(ce.filler))
    if isinstance(ce, ObjectAllValuesFrom):
        return ObjectAllValuesFrom(ce.property, normalize(ce.filler))
    if isinstance(ce, (ObjectMinCardinality, ObjectMaxCardinality,
                       ObjectExactCardinality)):
        return type(ce)(ce.cardinality, ce.property, normalize(ce.filler))
    return ce


# ---------------------------------------------------------------------------
# Rules
# ---------------------------------------------------------------------------

class _RuleParser(_ManchesterParser):
    def rule(self) -> SWRLRule:
        body = self.atoms()
        self.eat_symbol("->")
        head = self.atoms()
        self.expect_eof()
        return SWRLRule(body, head)

    def atoms(self) -> list:
        atoms = [self.atom()]
        while self.at_symbol("^"):
            self.advance()
            atoms.append(self.atom())
        return atoms

    def atom(self):
        tok = self.peek()
        if tok.kind == SYMBOL and tok.value == "(":
            self.advance()
            ce = self.expression()
            self.eat_symbol(")")
            self.eat_symbol("(")
            arg = self.i_arg()
            self.eat_symbol(")")
            return SWRLClassAtom(ce, arg)
        if tok.kind not in (NAME, PNAME, IRIREF):
            raise self.fail("expected a rule atom")
        iri = self.resolve(self.advance())
        self.eat_symbol("(")
        first = self.i_arg()
        if self.at_symbol(","):
            self.advance()
            second = self.peek()
            if second.kind in (NUMBER, STRING):
                atom = SWRLDataPropertyAtom(OWLDataProperty(iri), first,
                                            self.literal())
            else:
                atom = SWRLObjectPropertyAtom(OWLObjectProperty(iri), first,
                                              self.i_arg())
            self.eat_symbol(")")
            return atom
        self.eat_symbol(")")
        return SWRLClassAtom(OWLClass(iri), first)

    def i_arg(self):
        tok = self.peek()
        if tok.kind == VAR:
            self.advance()
            return SWRLVariable(tok.value)
        return OWLNamedIndividual(self.name_iri("an individual or ?variable"))


def parse_swrl(text: str, ctx: PrefixContext) -> SWRLRule:
    """Parse ``body -> head`` rules of ``^``-separated atoms.

    Atoms are ``C(?x)`` (C a name or a parenthesized Manchester class
    expression), ``p(?x, ?y)``, and ``d(?x, 42)``; a two-argument atom whose
    second argument is a variable or individual reads as an object-property
    atom.  Head variables must occur in the body.
    """
    return _RuleParser(_lex(text), ctx).rule()


def render_swrl(rule: SWRLRule, ctx: PrefixContext) -> str:
    """Canonical text form of a rule, matching :func:`parse_swrl`."""

    def arg(a):
        return str(a) if isinstance(a, SWRLVariable) else ctx.shorten(a.iri)

    def atom(a):
        if isinstance(a, SWRLClassAtom):
            ce = a.class_expression
            if isinstance(ce, OWLClass):
                return f"{ctx.shorten(ce.iri)}({arg(a.argument)})"
            return f"({render_manchester(ce, ctx)})({arg(a.argument)})"
        if isinstance(a, SWRLObjectPropertyAtom):
            return f"{ctx.shorten(a.property.iri)}({arg(a.source)}, {arg(a.target)})"
        value = (str(a.value) if isinstance(a.value, SWRLVariable)
                 else _render_value_literal(a.value, ctx))
        return f"{ctx.shorten(a.property.iri)}({arg(a.argument)}, {value})"

    body = " ^ ".join(atom(a) for a in rule.body)
    head = " ^ ".join(atom(a) for a in rule.head)
    return f"{body} -> {head}"
