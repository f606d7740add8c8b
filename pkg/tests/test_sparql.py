"""SPARQL transpilation and the subset evaluator, cross-checked against the
closed-world reasoner on the RDF mapping of ABoxes."""
import random

import pytest

from owlkit.model import (
    IRI,
    DataSomeValuesFrom,
    DatatypeRestriction,
    FacetRestriction,
    ObjectComplementOf,
    ObjectHasValue,
    ObjectIntersectionOf,
    ObjectMinCardinality,
    ObjectUnionOf,
    OWL_NOTHING,
    OWL_THING,
    make_literal,
)
from owlkit.rdf import map_ontology_to_triples
from owlkit.reasoner import ReasonerConfig, build_snapshot, instances
from owlkit.sparql import eval_query, to_sparql
from owlkit.vocab import Facet, XSD_INTEGER_IRI

from family import NS, anna, build_family_ontology, female, has_age, has_child, male
from generators import Vocab, random_abox, random_ce


def family_triples():
    return map_ontology_to_triples(build_family_ontology())


class TestQueryText:
    def test_named_class_query(self):
        query = to_sparql(male)
        assert query.text.endswith(
            "SELECT DISTINCT ?x WHERE {\n"
            "  ?x rdf:type <http://example.com/family#male> .\n"
            "}")

    def test_has_value_direct_triple(self):
        query = to_sparql(ObjectHasValue(has_child, anna))
        assert ("?x <http://example.com/family#hasChild> "
                "<http://example.com/family#anna> .") in query.text

    def test_min_cardinality_group_by_having(self):
        query = to_sparql(ObjectMinCardinality(2, has_child, OWL_THING))
        assert "GROUP BY ?x" in query.text
        assert "HAVING(?c0 >= 2)" in query.text
        assert "COUNT(DISTINCT ?y0)" in query.text

    def test_data_facet_filter(self):
        from owlkit.model import OWLDatatype
        rng = DatatypeRestriction(
            OWLDatatype(IRI(XSD_INTEGER_IRI)),
            [FacetRestriction(Facet.MIN_INCLUSIVE, make_literal(18))])
        query = to_sparql(DataSomeValuesFrom(has_age, rng))
        assert 'FILTER(?y0 >= "18"^^xsd:integer)' in query.text

    def test_text_is_deterministic(self):
        ce = ObjectIntersectionOf([male, ObjectComplementOf(female)])
        assert to_sparql(ce).text == to_sparql(ce).text
        assert to_sparql(ce) == to_sparql(ce)

    def test_text_regenerates_from_structure(self):
        ce = ObjectUnionOf([male, female])
        query = to_sparql(ce)
        from owlkit.sparql import SparqlQuery
        rebuilt = SparqlQuery(query.var, query.patterns)
        assert rebuilt.text == query.text


class TestEvaluator:
    def test_named_class_on_fixture(self):
        got = eval_query(to_sparql(male), family_triples())
        assert got == {IRI(NS + "markus"), IRI(NS + "heinz")}

    def test_empty_triples(self):
        assert eval_query(to_sparql(male), []) == set()

    def test_bottom_is_empty(self):
        assert eval_query(to_sparql(OWL_NOTHING), family_triples()) == set()

    def test_constructs_outside_the_subset_rejected(self):
        from owlkit.errors import UnsupportedQueryError
        from owlkit.sparql import SparqlQuery
        bogus = SparqlQuery("x", ("OPTIONAL { ?x ?p ?o }",))
        with pytest.raises(UnsupportedQueryError):
            eval_query(bogus, family_triples())
        with pytest.raises(UnsupportedQueryError):
            bogus.text  # noqa: B018 - rendering must reject it too

    def test_top_is_all_individuals_on_abox_graph(self):
        # the ⊤ pattern matches any subject with a type triple, so it is
        # evaluated against assertion-level graphs (class/property
        # declarations would add schema subjects)
        from owlkit.model import (OWLClassAssertionAxiom,
                                  OWLObjectPropertyAssertionAxiom,
                                  OWLDataPropertyAssertionAxiom,
                                  OWLDeclarationAxiom, OWLNamedIndividual)
        from owlkit.ontology import Ontology
        family = build_family_ontology()
        abox = Ontology()
        for ax in family.axioms():
            keep = isinstance(ax, (OWLClassAssertionAxiom,
                                   OWLObjectPropertyAssertionAxiom,
                                   OWLDataPropertyAssertionAxiom))
            if keep or (isinstance(ax, OWLDeclarationAxiom)
                        and isinstance(ax.entity, OWLNamedIndividual)):
                abox.add_axiom(ax)
        got = eval_query(to_sparql(OWL_THING), map_ontology_to_triples(abox))
        assert got == {IRI(NS + n) for n in
                       ("markus", "michelle", "anna", "heinz", "stefan", "eva")}


class TestOracleAgreement:
    def _check(self, onto, ce):
        triples = map_ontology_to_triples(onto)
        got = eval_query(to_sparql(ce), triples)
        snap = build_snapshot(onto, ReasonerConfig(infer_hierarchy=False))
        expected = {x.iri for x in instances(snap, ce)}
        assert got == expected, f"{to_sparql(ce).text}"

    def test_random_abox_pairs(self):
        rng = random.Random(77)
        for _ in range(40):
            vocab = Vocab(n_inds=rng.randrange(3, 8))
            onto = random_abox(rng, vocab, rng.randrange(4, 16))
            for _ in range(3):
                self._check(onto, random_ce(rng, vocab, 3))

    def test_de_morgan_consistency(self):
        rng = random.Random(5)
        vocab = Vocab(n_inds=6)
        onto = random_abox(rng, vocab, 12)
        triples = map_ontology_to_triples(onto)
        for _ in range(20):
            c = random_ce(rng, vocab, 2)
            d = random_ce(rng, vocab, 2)
            left = eval_query(to_sparql(
                ObjectComplementOf(ObjectUnionOf([c, d]))), triples)
            right = eval_query(to_sparql(ObjectIntersectionOf(
                [ObjectComplementOf(c), ObjectComplementOf(d)])), triples)
            assert left == right

    def test_max_cardinality_includes_zero_successor_individuals(self):
        from owlkit.model import ObjectMaxCardinality
        rng = random.Random(9)
        vocab = Vocab(n_inds=5)
        onto = random_abox(rng, vocab, 8)
        self._check(onto, ObjectMaxCardinality(1, vocab.props[0],
                                               vocab.classes[0]))
        self._check(onto, ObjectMinCardinality(0, vocab.props[0],
                                               vocab.classes[0]))
