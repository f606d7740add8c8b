"""OWL-to-RDF mapping and Turtle output."""
import pytest

from owlkit.errors import UnmappableAxiomError
from owlkit.model import (
    IRI,
    ObjectSomeValuesFrom,
    OWLClass,
    OWLClassAssertionAxiom,
    OWLDataPropertyAssertionAxiom,
    OWLNamedIndividual,
    OWLObjectProperty,
    OWLSubClassOfAxiom,
    SWRLClassAtom,
    SWRLRule,
    SWRLVariable,
    make_literal,
)
from owlkit.ontology import Ontology
from owlkit.rdf import (
    BlankNode,
    map_axiom_to_triples,
    map_ontology_to_triples,
    serialize_turtle,
)
from owlkit.vocab import OWL_NS, RDF_TYPE_IRI

from family import NS, alkid, has_age, male, markus

RDF_TYPE = IRI(RDF_TYPE_IRI)


class TestAxiomMapping:
    def test_class_assertion_single_triple(self):
        triples = map_axiom_to_triples(OWLClassAssertionAxiom(alkid, male))
        assert len(triples) == 1
        t = triples[0]
        assert (t.subject, t.predicate, t.object) == (alkid.iri, RDF_TYPE, male.iri)

    def test_data_assertion_typed_literal(self):
        lit = make_literal(42)
        triples = map_axiom_to_triples(
            OWLDataPropertyAssertionAxiom(markus, has_age, lit))
        assert len(triples) == 1
        assert triples[0].object == lit

    def test_subclass_with_restriction_is_four_triples(self):
        # per the standard mapping: subClassOf + Restriction typing
        # + onProperty + someValuesFrom
        father = OWLClass(IRI(NS + "father"))
        has_child = OWLObjectProperty(IRI(NS + "hasChild"))
        person = OWLClass(IRI(NS + "person"))
        ax = OWLSubClassOfAxiom(father, ObjectSomeValuesFrom(has_child, person))
        triples = map_axiom_to_triples(ax)
        assert len(triples) == 4
        bnodes = {t.subject for t in triples if isinstance(t.subject, BlankNode)}
        assert len(bnodes) == 1
        predicates = {t.predicate.text for t in triples}
        assert OWL_NS + "onProperty" in predicates
        assert OWL_NS + "someValuesFrom" in predicates

    def test_blank_node_counter_restarts_per_invocation(self):
        father = OWLClass(IRI(NS + "father"))
        has_child = OWLObjectProperty(IRI(NS + "hasChild"))
        ax = OWLSubClassOfAxiom(father, ObjectSomeValuesFrom(has_child, father))
        first = map_axiom_to_triples(ax)
        second = map_axiom_to_triples(ax)
        assert first == second
        assert any(t.object == BlankNode("b0") for t in first)

    def test_rules_are_unmappable(self):
        rule = SWRLRule(body=[SWRLClassAtom(male, SWRLVariable("x"))],
                        head=[SWRLClassAtom(male, SWRLVariable("x"))])
        with pytest.raises(UnmappableAxiomError):
            map_axiom_to_triples(rule)


class TestOntologyMapping:
    def test_fixture_triple_count(self, family):
        # every fixture axiom is over named terms, so each maps to exactly
        # one triple; the synthesized NamedIndividual typings deduplicate
        # against the individual declarations
        triples = map_ontology_to_triples(family)
        assert len(triples) == len(family.axioms()) == 36

    def test_abox_one_triple_per_assertion_plus_declaration(self, family):
        from owlkit.model import (OWLClassAssertionAxiom as CA,
                                  OWLObjectPropertyAssertionAxiom as OPA,
                                  OWLDataPropertyAssertionAxiom as DPA,
                                  OWLDeclarationAxiom as Decl)
        abox = Ontology()
        for ax in family.axioms():
            if isinstance(ax, (CA, OPA, DPA, Decl)):
                abox.add_axiom(ax)
        triples = map_ontology_to_triples(abox)
        assert len(triples) == len(abox.axioms())

    def test_every_individual_gets_named_individual_typing(self):
        onto = Ontology()
        a = OWLNamedIndividual(IRI(NS + "a"))
        onto.add_axiom(OWLClassAssertionAxiom(a, male))
        triples = map_ontology_to_triples(onto)
        assert any(t.subject == a.iri and t.predicate == RDF_TYPE
                   and t.object == IRI(OWL_NS + "NamedIndividual")
                   for t in triples)

    def test_strict_mode_raises_on_rules(self, family):
        family.add_axiom(SWRLRule(body=[SWRLClassAtom(male, SWRLVariable("x"))],
                                  head=[SWRLClassAtom(male, SWRLVariable("x"))]))
        with pytest.raises(UnmappableAxiomError):
            map_ontology_to_triples(family)
        relaxed = map_ontology_to_triples(family, strict=False)
        assert relaxed  # rule skipped, everything else mapped


class TestTurtle:
    def test_assertions_one_line_each(self, family):
        text = serialize_turtle(family)
        lines = [l for l in text.splitlines() if l and not l.startswith("@prefix")]
        assert "f:markus rdf:type f:male ." in lines
        assert 'f:markus f:hasAge "41"^^xsd:integer .' in lines

    def test_empty_ontology_is_header_only(self):
        text = serialize_turtle(Ontology())
        body = [l for l in text.splitlines() if l and not l.startswith("@prefix")]
        assert body == []

    def test_quote_in_literal_escaped(self):
        onto = Ontology()
        name = OWLClass(IRI(NS + "c"))
        onto.set_prefix("f", NS)
        from owlkit.model import OWLDataProperty
        d = OWLDataProperty(IRI(NS + "d"))
        onto.add_axiom(OWLDataPropertyAssertionAxiom(
            markus, d, make_literal('say "hi"\n')))
        text = serialize_turtle(onto)
        assert '"say \\"hi\\"\\n"' in text

    def test_subject_grouping_is_first_appearance_order(self, family):
        text = serialize_turtle(family)
        lines = [l for l in text.splitlines() if l and not l.startswith("@prefix")]
        subjects = [l.split()[0] for l in lines]
        seen = []
        for s in subjects:
            if s not in seen:
                seen.append(s)
        # consecutive grouping: each subject forms one contiguous block
        blocks = []
        for s in subjects:
            if not blocks or blocks[-1] != s:
                blocks.append(s)
        assert blocks == seen
