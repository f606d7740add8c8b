"""Class-expression to SPARQL SELECT transpiler and a small evaluator.

The transpiler targets the standard RDF encoding of assertions (see
:mod:`owlkit.rdf`).  ``owl:Thing`` compiles to ``?x rdf:type ?cN``, so it
is well-defined against graphs where every individual carries at least one
type triple; the ontology-level RDF mapping guarantees that by typing each
individual as ``owl:NamedIndividual``.

The evaluator implements just the emitted subset (BGPs, UNION, FILTER NOT
EXISTS, VALUES, count subselects with HAVING, comparison filters) and is
used to cross-check queries against the closed-world reasoner.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Union

from .errors import UnsupportedQueryError
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
    OWLClass,
    OWLClassExpression,
    OWLDatatype,
    OWLLiteral,
    OWL_NOTHING,
    OWL_THING,
)
from .rdf import Triple
from .vocab import RDF_NS, RDF_TYPE_IRI, XSD_NS, XSD_STRING_IRI

_RDF_TYPE = IRI(RDF_TYPE_IRI)


# ---------------------------------------------------------------------------
# Structured query form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return "?" + self.name


Term = Union[Var, IRI, OWLLiteral]


@dataclass(frozen=True)
class TriplePattern:
    subject: Term
    predicate: Term
    object: Term


@dataclass(frozen=True)
class UnionBlock:
    branches: tuple[tuple, ...]


@dataclass(frozen=True)
class NotExists:
    patterns: tuple


@dataclass(frozen=True)
class ValuesBlock:
    var: Var
    values: tuple[IRI, ...]


@dataclass(frozen=True)
class CountSubselect:
    group_var: Var
    count_var: Var
    counted_var: Var
    patterns: tuple
    comparator: str
    cardinality: int


@dataclass(frozen=True)
class Comparison:
    var: Var
    op: str
    literal: OWLLiteral


@dataclass(frozen=True)
class DatatypeIs:
    var: Var
    datatype: IRI


@dataclass(frozen=True)
class InValues:
    var: Var
    literals: tuple[OWLLiteral, ...]


@dataclass(frozen=True)
class NotExpr:
    operand: object


@dataclass(frozen=True)
class AndExpr:
    operands: tuple


@dataclass(frozen=True)
class FilterExpr:
    expression: object


@dataclass(frozen=True)
class SparqlQuery:
    """A SELECT DISTINCT query; the text regenerates from the structured
    pattern list, so identical structures give byte-identical text."""

    var: str
    patterns: tuple

    @cached_property
    def text(self) -> str:
        lines = [
            f"PREFIX rdf: <{RDF_NS}>",
            f"PREFIX xsd: <{XSD_NS}>",
            f"SELECT DISTINCT ?{self.var} WHERE {{",
        ]
        for pattern in self.patterns:
            lines.append("  " + _render(pattern))
        lines.append("}")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.text


def _render_term(term: Term) -> str:
    if isinstance(term, Var):
        return str(term)
    if isinstance(term, IRI):
        if term.text == RDF_TYPE_IRI:
            return "rdf:type"
        return f"<{term.text}>"
    text = '"' + term.lexical.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if term.datatype.iri.text != XSD_STRING_IRI:
        ns, local = term.datatype.iri.namespace, term.datatype.iri.remainder
        text += "^^" + (f"xsd:{local}" if ns == XSD_NS else f"<{term.datatype.iri}>")
    return text


def _render_group(patterns) -> str:
    return " ".join(_render(p) for p in patterns)


def _render(pattern) -> str:
    if isinstance(pattern, TriplePattern):
        return (f"{_render_term(pattern.subject)} {_render_term(pattern.predicate)} "
                f"{_render_term(pattern.object)} .")
    if isinstance(pattern, UnionBlock):
        return " UNION ".join("{ " + _render_group(b) + " }"
                              for b in pattern.branches)
    if isinstance(pattern, NotExists):
        return "FILTER NOT EXISTS { " + _render_group(pattern.patterns) + " }"
    if isinstance(pattern, ValuesBlock):
        values = " ".join(f"<{v.text}>" for v in pattern.values)
        return f"VALUES {pattern.var} {{ {values} }}"
    if isinstance(pattern, CountSubselect):
        return (f"{{ SELECT {pattern.group_var} (COUNT(DISTINCT "
                f"{pattern.counted_var}) AS {pattern.count_var}) WHERE {{ "
                f"{_render_group(pattern.patterns)} }} GROUP BY "
                f"{pattern.group_var} HAVING({pattern.count_var} "
                f"{pattern.comparator} {pattern.cardinality}) }}")
    if isinstance(pattern, FilterExpr):
        return f"FILTER({_render_expr(pattern.expression)})"
    raise UnsupportedQueryError(f"cannot render {type(pattern).__name__}")


def _render_expr(expr) -> str:
    if isinstance(expr, Comparison):
        return f"{expr.var} {expr.op} {_render_term(expr.literal)}"
    if isinstance(expr, DatatypeIs):
        ns, local = expr.datatype.namespace, expr.datatype.remainder
        dt = f"xsd:{local}" if ns == XSD_NS else f"<{expr.datatype}>"
        return f"DATATYPE({expr.var}) = {dt}"
    if isinstance(expr, InValues):
        values = ", ".join(_render_term(lit) for lit in expr.literals)
        return f"{expr.var} IN ({values})"
    if isinstance(expr, NotExpr):
        return f"!({_render_expr(expr.operand)})"
    if isinstance(expr, AndExpr):
        return " && ".join(f"({_render_expr(op)})" for op in expr.operands)
    raise UnsupportedQueryError(f"cannot render {type(expr).__name__}")


# ---------------------------------------------------------------------------
# Transpiler
# ---------------------------------------------------------------------------

class _Transpiler:
    def __init__(self):
        self._y = 0
        self._c = 0

    def fresh_value_var(self) -> Var:
        var = Var(f"y{self._y}")
        self._y += 1
        return var

    def fresh_class_var(self) -> Var:
        var = Var(f"c{self._c}")
        self._c += 1
        return var

    def edge(self, subject: Var, pe, obj: Term) -> TriplePattern:
        if isinstance(pe, ObjectInverseOf):
            return TriplePattern(obj, pe.property.iri, subject)
        return TriplePattern(subject, pe.iri, obj)

    def typed(self, var: Var) -> TriplePattern:
        return TriplePattern(var, _RDF_TYPE, self.fresh_class_var())

    def compile(self, ce, var: Var) -> list:
        if isinstance(ce, OWLClass):
            if ce == OWL_THING:
                return [self.typed(var)]
            return [TriplePattern(var, _RDF_TYPE, ce.iri)]
        if isinstance(ce, ObjectIntersectionOf):
            out = []
            for op in ce.operands:
                out.extend(self.compile(op, var))
            return out
        if isinstance(ce, ObjectUnionOf):
            return [UnionBlock(tuple(tuple(self.compile(op, var))
                                     for op in ce.operands))]
        if isinstance(ce, ObjectComplementOf):
            return [self.typed(var),
                    NotExists(tuple(self.compile(ce.operand, var)))]
        if isinstance(ce, ObjectSomeValuesFrom):
            y = self.fresh_value_var()
            return [self.edge(var, ce.property, y)] + self.compile(ce.filler, y)
        if isinstance(ce, ObjectAllValuesFrom):
            y = self.fresh_value_var()
            inner = [self.edge(var, ce.property, y),
                     NotExists(tuple(self.compile(ce.filler, y)))]
            return [self.typed(var), NotExists(tuple(inner))]
        if isinstance(ce, ObjectHasValue):
            return [self.edge(var, ce.property, ce.individual.iri)]
        if isinstance(ce, ObjectOneOf):
            return [ValuesBlock(var, tuple(i.iri for i in ce.individuals))]
        if isinstance(ce, (ObjectMinCardinality, ObjectMaxCardinality,
                           ObjectExactCardinality)):
            comparator = {ObjectMinCardinality: ">=",
                          ObjectMaxCardinality: "<=",
                          ObjectExactCardinality: "="}[type(ce)]
            counting = self.counting_block(ce, var, comparator)
            if isinstance(ce, ObjectMaxCardinality) or ce.cardinality == 0:
                # individuals with zero qualifying successors never form a
                # group, so they come from an explicit second branch
                y = self.fresh_value_var()
                zero = (self.typed(var),
                        NotExists(tuple([self.edge(var, ce.property, y)]
                                        + self.compile(ce.filler, y))))
                return [UnionBlock(((counting,), zero))]
            return [counting]
        if isinstance(ce, DataSomeValuesFrom):
            v = self.fresh_value_var()
            return ([TriplePattern(var, ce.property.iri, v)]
                    + [FilterExpr(e) for e in self.range_exprs(v, ce.range)])
        if isinstance(ce, DataAllValuesFrom):
            v = self.fresh_value_var()
            exprs = self.range_exprs(v, ce.range)
            negated = NotExpr(exprs[0] if len(exprs) == 1 else AndExpr(tuple(exprs)))
            inner = (TriplePattern(var, ce.property.iri, v), FilterExpr(negated))
            return [self.typed(var), NotExists(inner)]
        if isinstance(ce, DataHasValue):
            return [TriplePattern(var, ce.property.iri, ce.literal)]
        raise UnsupportedQueryError(
            f"no SPARQL mapping for {type(ce).__name__}")

    def counting_block(self, ce, var: Var, comparator: str) -> CountSubselect:
        y = self.fresh_value_var()
        c = self.fresh_class_var()
        inner = [self.edge(var, ce.property, y)] + self.compile(ce.filler, y)
        return CountSubselect(var, c, y, tuple(inner), comparator,
                              ce.cardinality)

    def range_exprs(self, v: Var, rng) -> list:
        if isinstance(rng, OWLDatatype):
            return [DatatypeIs(v, rng.iri)]
        if isinstance(rng, DatatypeRestriction):
            return [Comparison(v, fr.facet.ascii_symbol, fr.literal)
                    for fr in rng.facets]
        if isinstance(rng, DataOneOf):
            return [InValues(v, tuple(rng.literals))]
        raise UnsupportedQueryError(
            f"no SPARQL mapping for {type(rng).__name__}")


def to_sparql(ce: OWLClassExpression, var: str = "x") -> SparqlQuery:
    """Transpile a class expression to a SELECT DISTINCT query over the
    standard RDF encoding of assertions.

    Variable names follow a deterministic pre-order counter, so equal
    inputs give byte-identical query text.
    """
    if isinstance(ce, OWLClass) and ce == OWL_NOTHING:
        return SparqlQuery(var, (TriplePattern(Var(var), _RDF_TYPE,
                                               OWL_NOTHING.iri),))
    patterns = _Transpiler().compile(ce, Var(var))
    return SparqlQuery(var, tuple(patterns))


# ---------------------------------------------------------------------------
# Evaluator
# ---------------------------------------------------------------------------

def eval_query(query: SparqlQuery, triples: list[Triple]) -> set[IRI]:
    """Evaluate a transpiled query over a triple list; returns the set of
    IRIs bound to the projected variable."""
    bindings = _eval_patterns(query.patterns, [{}], triples)
    out: set[IRI] = set()
    for b in bindings:
        value = b.get(query.var)
        if isinstance(value, IRI):
            out.add(value)
    return out


def _eval_patterns(patterns, bindings: list[dict], triples) -> list[dict]:
    for pattern in patterns:
        bindings = _eval_pattern(pattern, bindings, triples)
        if not bindings:
            return []
    return bindings


def _dedupe(bindings: list[dict]) -> list[dict]:
    seen = set()
    out = []
    for b in bindings:
        key = frozenset(b.items())
        if key not in seen:
            seen.add(key)
            out.append(b)
    return out


def _eval_pattern(pattern, bindings, triples) -> list[dict]:
    if isinstance(pattern, TriplePattern):
        out = []
        for b in bindings:
            for t in triples:
                merged = _match_triple(pattern, t, b)
                if merged is not None:
                    out.append(merged)
        return _dedupe(out)
    if isinstance(pattern, UnionBlock):
        out = []
        for branch in pattern.branches:
            out.extend(_eval_patterns(branch, list(bindings), triples))
        return _dedupe(out)
    if isinstance(pattern, NotExists):
        return [b for b in bindings
                if not _eval_patterns(pattern.patterns, [dict(b)], triples)]
    if isinstance(pattern, ValuesBlock):
        out = []
        for b in bindings:
            bound = b.get(pattern.var.name)
            if bound is None:
                for value in pattern.values:
                    nb = dict(b)
                    nb[pattern.var.name] = value
                    out.append(nb)
            elif bound in pattern.values:
                out.append(b)
        return _dedupe(out)
    if isinstance(pattern, CountSubselect):
        groups: dict[object, set] = {}
        for inner in _eval_patterns(pattern.patterns, [{}], triples):
            g = inner.get(pattern.group_var.name)
            y = inner.get(pattern.counted_var.name)
            if g is None or y is None:
                continue
            groups.setdefault(g, set()).add(y)
        satisfied = {g for g, ys in groups.items()
                     if _compare_counts(len(ys), pattern.comparator,
                                        pattern.cardinality)}
        out = []
        for b in bindings:
            bound = b.get(pattern.group_var.name)
            if bound is None:
                for g in satisfied:
                    nb = dict(b)
                    nb[pattern.group_var.name] = g
                    out.append(nb)
            elif bound in satisfied:
                out.append(b)
        return _dedupe(out)
    if isinstance(pattern, FilterExpr):
        return [b for b in bindings if _expr_true(pattern.expression, b)]
    raise UnsupportedQueryError(f"cannot evaluate {type(pattern).__name__}")


def _match_triple(pattern: TriplePattern, t: Triple, binding: dict) -> dict | None:
    merged = dict(binding)
    for term, value in ((pattern.subject, t.subject),
                        (pattern.predicate, t.predicate),
                        (pattern.object, t.object)):
        if isinstance(term, Var):
            bound = merged.get(term.name)
            if bound is None:
                merged[term.name] = value
            elif bound != value:
                return None
        elif term != value:
            return None
    return merged


def _compare_counts(count: int, comparator: str, n: int) -> bool:
    if comparator == ">=":
        return count >= n
    if comparator == "<=":
        return count <= n
    return count == n


def _literals_equal(a: OWLLiteral, b: OWLLiteral) -> bool:
    if a.is_numeric and b.is_numeric:
        return a.value == b.value
    return a == b


def _expr_true(expr, binding: dict) -> bool:
    if isinstance(expr, Comparison):
        value = binding.get(expr.var.name)
        if not isinstance(value, OWLLiteral):
            return False
        if expr.op == "=":
            return _literals_equal(value, expr.literal)
        if not (value.is_numeric and expr.literal.is_numeric):
            return False  # order comparison on non-numbers is a type error
        lhs, rhs = value.value, expr.literal.value
        return {"<": lhs < rhs, "<=": lhs <= rhs,
                ">": lhs > rhs, ">=": lhs >= rhs}[expr.op]
    if isinstance(expr, DatatypeIs):
        value = binding.get(expr.var.name)
        return (isinstance(value, OWLLiteral)
                and value.datatype.iri == expr.datatype)
    if isinstance(expr, InValues):
        value = binding.get(expr.var.name)
        if not isinstance(value, OWLLiteral):
            return False
        return any(_literals_equal(value, lit) for lit in expr.literals)
    if isinstance(expr, NotExpr):
        return not _expr_true(expr.operand, binding)
    if isinstance(expr, AndExpr):
        return all(_expr_true(op, binding) for op in expr.operands)
    raise UnsupportedQueryError(f"cannot evaluate {type(expr).__name__}")
