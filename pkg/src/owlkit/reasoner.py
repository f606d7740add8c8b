"""Native closed-world structural reasoner.

Retrieval is evaluated against an immutable :class:`Snapshot` of the
ontology: asserted facts plus reflexive-transitive told-subsumption
closures and a successor index saturated by subproperties and inverses.
Complement and universal restrictions range over the known individual
universe (closed world, unique names); domain/range axioms do not generate
inferred types.  Rebuild the snapshot after mutating the ontology.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UnknownIndividualError
from .model import (
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
    ObjectPropertyExpression,
    ObjectSomeValuesFrom,
    ObjectUnionOf,
    OWLClass,
    OWLClassAssertionAxiom,
    OWLClassExpression,
    OWLDataProperty,
    OWLDataPropertyAssertionAxiom,
    OWLDisjointClassesAxiom,
    OWLEquivalentClassesAxiom,
    OWLInverseObjectPropertiesAxiom,
    OWLLiteral,
    OWLNamedIndividual,
    OWLObjectProperty,
    OWLObjectPropertyAssertionAxiom,
    OWLSubClassOfAxiom,
    OWLSubObjectPropertyOfAxiom,
    OWL_NOTHING,
    OWL_THING,
    inverse_of,
)
from .ontology import Ontology


@dataclass(frozen=True)
class ReasonerConfig:
    """Retrieval knobs.

    infer_hierarchy: propagate instances up the told class hierarchy.
    universal_vacuous: individuals with no successors satisfy ``∀r.C``
    (and the data analogue).
    """

    infer_hierarchy: bool = True
    universal_vacuous: bool = True


@dataclass
class Snapshot:
    config: ReasonerConfig
    universe: list[OWLNamedIndividual]
    classes: list[OWLClass]                      # known named classes
    supers: dict[OWLClass, frozenset[OWLClass]]  # reflexive-transitive
    asserted_types: dict[OWLNamedIndividual, set[OWLClass]]
    inferred_instances: dict[OWLClass, set[OWLNamedIndividual]]
    asserted_instances: dict[OWLClass, set[OWLNamedIndividual]]
    succ: dict[tuple[OWLNamedIndividual, OWLObjectProperty], set[OWLNamedIndividual]]
    pred: dict[tuple[OWLNamedIndividual, OWLObjectProperty], set[OWLNamedIndividual]]
    data: dict[tuple[OWLNamedIndividual, OWLDataProperty], set[OWLLiteral]]
    disjoint_axioms: list[OWLDisjointClassesAxiom]
    _universe_set: set[OWLNamedIndividual] = field(default_factory=set)

    def __post_init__(self):
        self._universe_set = set(self.universe)

    def known(self, individual: OWLNamedIndividual) -> bool:
        return individual in self._universe_set

    def successors(self, individual, pe: ObjectPropertyExpression):
        if isinstance(pe, ObjectInverseOf):
            return self.pred.get((individual, pe.property), set())
        return self.succ.get((individual, pe), set())

    def literals(self, individual, dp: OWLDataProperty):
        return self.data.get((individual, dp), set())


def _transitive_closure(nodes, edges):
    """Reflexive-transitive reachability per node, by BFS."""
    closure = {}
    for start in nodes:
        reached = {start}
        frontier = [start]
        while frontier:
            node = frontier.pop()
            for nxt in edges.get(node, ()):
                if nxt not in reached:
                    reached.add(nxt)
                    frontier.append(nxt)
        closure[start] = reached
    return closure


def build_snapshot(onto: Ontology, config: ReasonerConfig | None = None) -> Snapshot:
    """Compute all closures to fixpoint; subsumption cycles are allowed and
    collapse into equivalences."""
    config = config or ReasonerConfig()
    universe = onto.individuals_in_signature()
    classes = list(onto.classes_in_signature())
    for reserved in (OWL_THING, OWL_NOTHING):
        if reserved not in classes:
            classes.append(reserved)

    # told class hierarchy over named classes
    class_edges: dict[OWLClass, set[OWLClass]] = {}
    for ax in onto.axioms_of_kind(OWLSubClassOfAxiom):
        if isinstance(ax.sub_class, OWLClass) and isinstance(ax.super_class, OWLClass):
            class_edges.setdefault(ax.sub_class, set()).add(ax.super_class)
    for ax in onto.axioms_of_kind(OWLEquivalentClassesAxiom):
        named = [op for op in ax.operands if isinstance(op, OWLClass)]
        for a in named:
            for b in named:
                if a != b:
                    class_edges.setdefault(a, set()).add(b)
    supers = {
        c: frozenset(reach | {OWL_THING})
        for c, reach in _transitive_closure(classes, class_edges).items()
    }
    supers[OWL_NOTHING] = frozenset(classes)

    # property expressions: named properties and their inverses
    prop_edges: dict[object, set] = {}

    def prop_edge(a, b):
        prop_edges.setdefault(a, set()).add(b)

    properties = set(onto.object_properties_in_signature())
    for ax in onto.axioms_of_kind(OWLSubObjectPropertyOfAxiom):
        prop_edge(ax.sub_property, ax.super_property)
        prop_edge(inverse_of(ax.sub_property), inverse_of(ax.super_property))
    for ax in onto.axioms_of_kind(OWLInverseObjectPropertiesAxiom):
        prop_edge(ax.first, inverse_of(ax.second))
        prop_edge(inverse_of(ax.second), ax.first)
        prop_edge(inverse_of(ax.first), ax.second)
        prop_edge(ax.second, inverse_of(ax.first))
    prop_nodes = {pe for p in properties for pe in (p, inverse_of(p))}
    prop_nodes.update(prop_edges.keys())
    for targets in list(prop_edges.values()):
        prop_nodes.update(targets)
    super_props = _transitive_closure(prop_nodes, prop_edges)

    # successor index, saturated through the property closure
    succ: dict[tuple, set] = {}
    pred: dict[tuple, set] = {}

    def add_edge(s, p: OWLObjectProperty, o):
        succ.setdefault((s, p), set()).add(o)
        pred.setdefault((o, p), set()).add(s)

    for ax in onto.axioms_of_kind(OWLObjectPropertyAssertionAxiom):
        if isinstance(ax.property, ObjectInverseOf):
            base = (ax.object, ax.property.property, ax.subject)
        else:
            base = (ax.subject, ax.property, ax.object)
        s, p, o = base
        for q in super_props.get(p, {p}):
            if isinstance(q, ObjectInverseOf):
                add_edge(o, q.property, s)
            else:
                add_edge(s, q, o)

    data: dict[tuple, set] = {}
    for ax in onto.axioms_of_kind(OWLDataPropertyAssertionAxiom):
        data.setdefault((ax.subject, ax.property), set()).add(ax.literal)

    asserted_types: dict[OWLNamedIndividual, set[OWLClass]] = {}
    asserted_instances: dict[OWLClass, set[OWLNamedIndividual]] = {}
    inferred_instances: dict[OWLClass, set[OWLNamedIndividual]] = {}
    for ax in onto.axioms_of_kind(OWLClassAssertionAxiom):
        if isinstance(ax.class_expression, OWLClass):
            cls = ax.class_expression
            asserted_types.setdefault(ax.individual, set()).add(cls)
            asserted_instances.setdefault(cls, set()).add(ax.individual)
            for sup in supers.get(cls, {cls, OWL_THING}):
                inferred_instances.setdefault(sup, set()).add(ax.individual)

    return Snapshot(
        config=config,
        universe=universe,
        classes=classes,
        supers=supers,
        asserted_types=asserted_types,
        inferred_instances=inferred_instances,
        asserted_instances=asserted_instances,
        succ=succ,
        pred=pred,
        data=data,
        disjoint_axioms=list(onto.axioms_of_kind(OWLDisjointClassesAxiom)),
    )


# ---------------------------------------------------------------------------
# Data range checks (shared with the embedding reasoner)
# ---------------------------------------------------------------------------

def literal_in_range(literal: OWLLiteral, rng) -> bool:
    """Closed-world data range membership.

    A bare datatype matches on exact datatype; facet comparisons are
    value-based over the numeric value regardless of exact datatype, the
    same semantics the query evaluator applies to FILTER comparisons.
    """
    if isinstance(rng, DatatypeRestriction):
        if not literal.is_numeric:
            return False
        for fr in rng.facets:
            bound = fr.literal.value
            value = literal.value
            ok = {
                ">=": value >= bound, ">": value > bound,
                "<=": value <= bound, "<": value < bound,
            }[fr.facet.ascii_symbol]
            if not ok:
                return False
        return True
    if isinstance(rng, DataOneOf):
        return any(_literal_values_equal(literal, lit) for lit in rng.literals)
    # plain datatype
    return literal.datatype == rng


def _literal_values_equal(a: OWLLiteral, b: OWLLiteral) -> bool:
    if a.is_numeric and b.is_numeric:
        return a.value == b.value
    return a == b


# ---------------------------------------------------------------------------
# Queries
# ---------------------------------------------------------------------------

def instances(snapshot: Snapshot, ce: OWLClassExpression) -> set[OWLNamedIndividual]:
    """All universe members belonging to the class expression under the
    closed-world semantics pinned by :class:`ReasonerConfig`."""
    universe = snapshot._universe_set
    cfg = snapshot.config

    def ev(node) -> set[OWLNamedIndividual]:
        if isinstance(node, OWLClass):
            if node == OWL_THING:
                return set(universe)
            if node == OWL_NOTHING:
                return set()
            table = (snapshot.inferred_instances if cfg.infer_hierarchy
                     else snapshot.asserted_instances)
            return set(table.get(node, set()))
        if isinstance(node, ObjectIntersectionOf):
            out = ev(node.operands[0])
            for op in node.operands[1:]:
                out &= ev(op)
            return out
        if isinstance(node, ObjectUnionOf):
            out = ev(node.operands[0])
            for op in node.operands[1:]:
                out |= ev(op)
            return out
        if isinstance(node, ObjectComplementOf):
            return universe - ev(node.operand)
        if isinstance(node, ObjectSomeValuesFrom):
            filler = ev(node.filler)
            return {x for x in universe
                    if snapshot.successors(x, node.property) & filler}
        if isinstance(node, ObjectAllValuesFrom):
            filler = ev(node.filler)
            out = set()
            for x in universe:
                succ = snapshot.successors(x, node.property)
                if not succ:
                    if cfg.universal_vacuous:
                        out.add(x)
                elif succ <= filler:
                    out.add(x)
            return out
        if isinstance(node, ObjectHasValue):
            return {x for x in universe
                    if node.individual in snapshot.successors(x, node.property)}
        if isinstance(node, ObjectOneOf):
            return set(node.individuals) & universe
        if isinstance(node, (ObjectMinCardinality, ObjectMaxCardinality,
                             ObjectExactCardinality)):
            filler = ev(node.filler)
            out = set()
            for x in universe:
                count = len(snapshot.successors(x, node.property) & filler)
                if isinstance(node, ObjectMinCardinality):
                    keep = count >= node.cardinality
                elif isinstance(node, ObjectMaxCardinality):
                    keep = count <= node.cardinality
                else:
                    keep = count == node.cardinality
                if keep:
                    out.add(x)
            return out
        if isinstance(node, DataSomeValuesFrom):
            return {x for x in universe
                    if any(literal_in_range(lit, node.range)
                           for lit in snapshot.literals(x, node.property))}
        if isinstance(node, DataAllValuesFrom):
            out = set()
            for x in universe:
                lits = snapshot.literals(x, node.property)
                if not lits:
                    if cfg.universal_vacuous:
                        out.add(x)
                elif all(literal_in_range(lit, node.range) for lit in lits):
                    out.add(x)
            return out
        if isinstance(node, DataHasValue):
            return {x for x in universe
                    if node.literal in snapshot.literals(x, node.property)}
        raise TypeError(f"cannot evaluate {type(node).__name__}")

    return ev(ce)


def _require_known(snapshot: Snapshot, individual: OWLNamedIndividual) -> None:
    if not snapshot.known(individual):
        raise UnknownIndividualError(f"unknown individual <{individual.iri}>")


def types(snapshot: Snapshot, individual: OWLNamedIndividual,
          direct: bool = False) -> set[OWLClass]:
    """Upward closure of the asserted named types; ``direct`` keeps only its
    minimal elements."""
    _require_known(snapshot, individual)
    closure: set[OWLClass] = set()
    for asserted in snapshot.asserted_types.get(individual, set()):
        closure |= snapshot.supers.get(asserted, frozenset({asserted, OWL_THING}))
    if not direct:
        return closure

    def strictly_below(d, c):
        return (c in snapshot.supers.get(d, frozenset())
                and d not in snapshot.supers.get(c, frozenset()))

    return {c for c in closure
            if not any(strictly_below(d, c) for d in closure if d != c)}


def _strict_sub(snapshot, d, c) -> bool:
    return (c in snapshot.supers.get(d, frozenset())
            and d not in snapshot.supers.get(c, frozenset()))


def sub_classes(snapshot: Snapshot, cls: OWLClass,
                direct: bool = False) -> set[OWLClass]:
    subs = {d for d in snapshot.classes if d != cls and _strict_sub(snapshot, d, cls)}
    if not direct:
        return subs
    return {d for d in subs
            if not any(_strict_sub(snapshot, d, e) and _strict_sub(snapshot, e, cls)
                       for e in snapshot.classes)}


def super_classes(snapshot: Snapshot, cls: OWLClass,
                  direct: bool = False) -> set[OWLClass]:
    sups = {d for d in snapshot.classes if d != cls and _strict_sub(snapshot, cls, d)}
    if not direct:
        return sups
    return {d for d in sups
            if not any(_strict_sub(snapshot, cls, e) and _strict_sub(snapshot, e, d)
                       for e in snapshot.classes)}


def equivalent_classes(snapshot: Snapshot, cls: OWLClass) -> set[OWLClass]:
    mine = snapshot.supers.get(cls, frozenset())
    return {d for d in snapshot.classes
            if d != cls and d in mine and cls in snapshot.supers.get(d, frozenset())}


def object_property_values(snapshot: Snapshot, individual: OWLNamedIndividual,
                           pe: ObjectPropertyExpression) -> set[OWLNamedIndividual]:
    _require_known(snapshot, individual)
    return set(snapshot.successors(individual, pe))


def data_property_values(snapshot: Snapshot, individual: OWLNamedIndividual,
                         dp: OWLDataProperty) -> set[OWLLiteral]:
    _require_known(snapshot, individual)
    return set(snapshot.literals(individual, dp))


def disjointness_violations(snapshot: Snapshot) -> list[tuple]:
    """Triples (individual, left class, right class) for every declared
    disjointness whose member expressions share an instance."""
    violations = []
    for ax in snapshot.disjoint_axioms:
        ops = ax.operands
        for i in range(len(ops)):
            for j in range(i + 1, len(ops)):
                shared = instances(snapshot, ops[i]) & instances(snapshot, ops[j])
                for x in snapshot.universe:
                    if x in shared:
                        violations.append((x, ops[i], ops[j]))
    return violations


class StructuralReasoner:
    """Object-style facade: builds a snapshot once and answers queries."""

    def __init__(self, onto: Ontology, config: ReasonerConfig | None = None):
        self.config = config or ReasonerConfig()
        self.snapshot = build_snapshot(onto, self.config)

    def instances(self, ce: OWLClassExpression):
        return instances(self.snapshot, ce)

    def types(self, individual, direct: bool = False):
        return types(self.snapshot, individual, direct)

    def sub_classes(self, cls, direct: bool = False):
        return sub_classes(self.snapshot, cls, direct)

    def super_classes(self, cls, direct: bool = False):
        return super_classes(self.snapshot, cls, direct)

    def equivalent_classes(self, cls):
        return equivalent_classes(self.snapshot, cls)

    def object_property_values(self, individual, pe):
        return object_property_values(self.snapshot, individual, pe)

    def data_property_values(self, individual, dp):
        return data_property_values(self.snapshot, individual, dp)

    def disjointness_violations(self):
        return disjointness_violations(self.snapshot)
