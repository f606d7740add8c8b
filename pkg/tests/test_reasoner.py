"""Closed-world reasoner: snapshot closures, retrieval, hierarchy queries,
and agreement with the brute-force oracle."""
import random

import pytest

from owlkit.errors import UnknownIndividualError
from owlkit.model import (
    IRI,
    ObjectComplementOf,
    ObjectExactCardinality,
    ObjectIntersectionOf,
    ObjectInverseOf,
    ObjectMaxCardinality,
    ObjectMinCardinality,
    ObjectSomeValuesFrom,
    ObjectUnionOf,
    OWLClass,
    OWLClassAssertionAxiom,
    OWLDisjointClassesAxiom,
    OWLEquivalentClassesAxiom,
    OWLSubClassOfAxiom,
    OWL_NOTHING,
    OWL_THING,
)
from owlkit.ontology import Ontology
from owlkit.reasoner import (
    ReasonerConfig,
    StructuralReasoner,
    build_snapshot,
    disjointness_violations,
    equivalent_classes,
    instances,
    sub_classes,
    super_classes,
    types,
)

from family import (
    NS,
    alkid,
    anna,
    child,
    eva,
    female,
    has_child,
    has_parent,
    has_son,
    heinz,
    male,
    markus,
    michelle,
    person,
    stefan,
)
from generators import Vocab, random_ce, random_reasoning_ontology
from oracle import naive_instances


@pytest.fixture
def snapshot(family):
    return build_snapshot(family, ReasonerConfig())


class TestSnapshot:
    def test_person_subsumes_fixture_classes(self, snapshot):
        assert sub_classes(snapshot, person) >= {male, female, child}

    def test_empty_ontology_universe(self):
        snap = build_snapshot(Ontology())
        assert snap.universe == []

    def test_subsumption_cycle_becomes_equivalence(self):
        onto = Ontology()
        a, b = OWLClass(IRI(NS + "A")), OWLClass(IRI(NS + "B"))
        onto.add_axiom(OWLSubClassOfAxiom(a, b))
        onto.add_axiom(OWLSubClassOfAxiom(b, a))
        snap = build_snapshot(onto)
        assert equivalent_classes(snap, a) == {b}
        assert equivalent_classes(snap, b) == {a}

    def test_successor_inverse_symmetry(self, snapshot):
        for x in snapshot.universe:
            for p in (has_child, has_son, has_parent):
                for y in snapshot.successors(x, p):
                    assert x in snapshot.successors(y, ObjectInverseOf(p))


class TestInstances:
    def test_male_after_edit_includes_alkid(self, family):
        family.add_axiom(OWLClassAssertionAxiom(alkid, male))
        reasoner = StructuralReasoner(family)
        assert alkid in reasoner.instances(male)
        assert reasoner.instances(male) == {markus, heinz, alkid}

    def test_contradiction_is_empty(self, snapshot):
        for cls in (male, person, child):
            assert instances(snapshot, ObjectIntersectionOf(
                [cls, ObjectComplementOf(cls)])) == set()

    def test_exists_has_child_female(self, snapshot, family):
        # oracle-computed expectation
        expected = naive_instances(family,
                                   ObjectSomeValuesFrom(has_child, female))
        got = instances(snapshot, ObjectSomeValuesFrom(has_child, female))
        assert got == expected == {heinz}

    def test_subproperty_feeds_parent_query(self, snapshot):
        # markus hasSon stefan, and hasSon ⊑ hasChild
        assert stefan in snapshot.successors(markus, has_child)
        assert instances(snapshot, ObjectMinCardinality(2, has_child)) == {markus}

    def test_hierarchy_flag(self, family):
        with_h = StructuralReasoner(family, ReasonerConfig(infer_hierarchy=True))
        without_h = StructuralReasoner(family,
                                       ReasonerConfig(infer_hierarchy=False))
        assert with_h.instances(person) == {markus, michelle, anna, heinz,
                                            stefan, eva}
        assert without_h.instances(person) == set()

    def test_universal_vacuous_flag(self, family):
        ce = ObjectSomeValuesFrom(
            has_child, OWL_THING)
        from owlkit.model import ObjectAllValuesFrom
        forall = ObjectAllValuesFrom(has_child, female)
        vacuous = StructuralReasoner(family,
                                     ReasonerConfig(universal_vacuous=True))
        strict = StructuralReasoner(family,
                                    ReasonerConfig(universal_vacuous=False))
        has_edge = vacuous.instances(ce)
        assert vacuous.instances(forall) - strict.instances(forall) == \
            set(vacuous.snapshot.universe) - has_edge
        assert heinz in strict.instances(forall)  # eva is female


class TestTypes:
    def test_closure_includes_superclasses(self, family):
        family.add_axiom(OWLClassAssertionAxiom(alkid, male))
        reasoner = StructuralReasoner(family)
        assert reasoner.types(alkid) >= {male, person}

    def test_direct_types_are_minimal(self, family):
        family.add_axiom(OWLClassAssertionAxiom(alkid, male))
        reasoner = StructuralReasoner(family)
        assert reasoner.types(alkid, direct=True) == {male}

    def test_unknown_individual(self, snapshot):
        with pytest.raises(UnknownIndividualError):
            types(snapshot, alkid)


class TestHierarchy:
    def test_direct_superclass(self, snapshot):
        assert super_classes(snapshot, male, direct=True) == {person}

    def test_thing_has_all_named_subclasses(self, snapshot):
        assert sub_classes(snapshot, OWL_THING) == \
            {person, male, female, child, OWL_NOTHING}

    def test_equivalences_exclude_self(self):
        onto = Ontology()
        a, b = OWLClass(IRI(NS + "A")), OWLClass(IRI(NS + "B"))
        onto.add_axiom(OWLEquivalentClassesAxiom([a, b]))
        snap = build_snapshot(onto)
        assert equivalent_classes(snap, a) == {b}

    def test_direct_skips_intermediate(self):
        onto = Ontology()
        a, b, c = (OWLClass(IRI(NS + n)) for n in "ABC")
        onto.add_axiom(OWLSubClassOfAxiom(a, b))
        onto.add_axiom(OWLSubClassOfAxiom(b, c))
        snap = build_snapshot(onto)
        assert sub_classes(snap, c, direct=True) == {b}
        assert sub_classes(snap, c) == {a, b, OWL_NOTHING}


class TestPropertyValues:
    def test_saturated_child_lookup(self, family):
        reasoner = StructuralReasoner(family)
        assert reasoner.object_property_values(markus, has_child) == {anna, stefan}

    def test_inverse_lookup_gives_parents(self, family):
        reasoner = StructuralReasoner(family)
        assert reasoner.object_property_values(
            anna, ObjectInverseOf(has_child)) == {markus, michelle}
        assert reasoner.object_property_values(eva, has_parent) == {heinz}
        assert reasoner.object_property_values(heinz, has_child) == {eva}

    def test_data_values_absent_is_empty(self, family):
        from owlkit.model import OWLDataProperty
        reasoner = StructuralReasoner(family)
        other = OWLDataProperty(IRI(NS + "shoeSize"))
        assert reasoner.data_property_values(markus, other) == set()

    def test_unknown_individual_raises(self, family):
        reasoner = StructuralReasoner(family)
        with pytest.raises(UnknownIndividualError):
            reasoner.object_property_values(alkid, has_child)


class TestDisjointness:
    def test_direct_violation(self, family):
        family.add_axiom(OWLClassAssertionAxiom(anna, male))
        family.add_axiom(OWLClassAssertionAxiom(anna, female))
        violations = disjointness_violations(build_snapshot(family))
        assert (anna, male, female) in violations

    def test_no_axioms_no_violations(self):
        onto = Ontology()
        onto.add_axiom(OWLClassAssertionAxiom(anna, male))
        assert disjointness_violations(build_snapshot(onto)) == []

    def test_violation_via_superclass(self):
        onto = Ontology()
        place = OWLClass(IRI(NS + "place"))
        onto.add_axiom(OWLSubClassOfAxiom(male, person))
        onto.add_axiom(OWLDisjointClassesAxiom([person, place]))
        onto.add_axiom(OWLClassAssertionAxiom(markus, male))
        onto.add_axiom(OWLClassAssertionAxiom(markus, place))
        violations = disjointness_violations(build_snapshot(onto))
        assert violations == [(markus, person, place)]


class TestAlgebraicLaws:
    def test_boolean_laws_on_random_inputs(self):
        rng = random.Random(42)
        for _ in range(30):
            vocab = Vocab(n_inds=10)
            onto = random_reasoning_ontology(rng, vocab)
            snap = build_snapshot(onto)
            c = random_ce(rng, vocab, 2)
            d = random_ce(rng, vocab, 2)
            universe = set(snap.universe)
            assert instances(snap, ObjectComplementOf(ObjectComplementOf(c))) \
                == instances(snap, c)
            assert instances(snap, ObjectIntersectionOf([c, d])) == \
                instances(snap, c) & instances(snap, d)
            assert instances(snap, ObjectComplementOf(ObjectUnionOf([c, d]))) \
                == instances(snap, ObjectIntersectionOf(
                    [ObjectComplementOf(c), ObjectComplementOf(d)]))
            assert instances(snap, ObjectComplementOf(ObjectIntersectionOf([c, d]))) \
                == instances(snap, ObjectUnionOf(
                    [ObjectComplementOf(c), ObjectComplementOf(d)]))

    def test_cardinality_coherence(self):
        rng = random.Random(7)
        vocab = Vocab(n_inds=10)
        onto = random_reasoning_ontology(rng, vocab)
        snap = build_snapshot(onto)
        for n in range(3):
            pe = vocab.props[0]
            filler = vocab.classes[0]
            exact = instances(snap, ObjectExactCardinality(n, pe, filler))
            low = instances(snap, ObjectMinCardinality(n, pe, filler))
            high = instances(snap, ObjectMaxCardinality(n, pe, filler))
            assert exact == low & high

    def test_monotonicity_for_positive_expressions(self):
        # adding a class assertion never shrinks complement/∀/max-free CEs
        rng = random.Random(19)
        vocab = Vocab(n_inds=8)

        def positive_ce(depth):
            if depth == 0:
                return rng.choice(vocab.classes)
            kind = rng.randrange(4)
            if kind == 0:
                return ObjectIntersectionOf([positive_ce(depth - 1),
                                             positive_ce(depth - 1)])
            if kind == 1:
                return ObjectUnionOf([positive_ce(depth - 1),
                                      positive_ce(depth - 1)])
            if kind == 2:
                return ObjectSomeValuesFrom(rng.choice(vocab.props),
                                            positive_ce(depth - 1))
            return ObjectMinCardinality(rng.randrange(3),
                                        rng.choice(vocab.props),
                                        positive_ce(depth - 1))

        for _ in range(20):
            onto = random_reasoning_ontology(rng, vocab)
            ce = positive_ce(3)
            before = instances(build_snapshot(onto), ce)
            onto.add_axiom(OWLClassAssertionAxiom(rng.choice(vocab.individuals),
                                                  rng.choice(vocab.classes)))
            after = instances(build_snapshot(onto), ce)
            assert before <= after

    def test_vacuous_forall_superset_law(self):
        rng = random.Random(4)
        vocab = Vocab(n_inds=10)
        from owlkit.model import ObjectAllValuesFrom
        for _ in range(10):
            onto = random_reasoning_ontology(rng, vocab)
            snap = build_snapshot(onto, ReasonerConfig(universal_vacuous=True))
            pe = rng.choice(vocab.props)
            c = random_ce(rng, vocab, 2)
            no_succ = set(snap.universe) - instances(
                snap, ObjectSomeValuesFrom(pe, OWL_THING))
            assert instances(snap, ObjectAllValuesFrom(pe, c)) >= no_succ


class TestOracleAgreement:
    def test_indexed_matches_naive_on_random_pairs(self):
        rng = random.Random(1234)
        checked = 0
        for _ in range(60):
            vocab = Vocab(n_inds=rng.randrange(3, 9))
            onto = random_reasoning_ontology(rng, vocab)
            config = ReasonerConfig(
                infer_hierarchy=bool(rng.randrange(2)),
                universal_vacuous=bool(rng.randrange(2)))
            snap = build_snapshot(onto, config)
            for _ in range(4):
                ce = random_ce(rng, vocab, 3)
                expected = naive_instances(
                    onto, ce, infer_hierarchy=config.infer_hierarchy,
                    universal_vacuous=config.universal_vacuous)
                assert instances(snap, ce) == expected
                checked += 1
        assert checked == 240
