"""Embedding reasoner: training determinism, gradients, fuzzy retrieval,
and the crisp reduction to exact closed-world retrieval."""
import random

import numpy as np
import pytest

from owlkit.ebr import (
    EmbeddingModel,
    TYPE_RELATION,
    TrainingConfig,
    data_index_of,
    extract_triples,
    gradient_check,
    membership,
    retrieval_metrics,
    retrieve,
    sigmoid,
    train,
)
from owlkit.errors import EmptyTripleSetError, UnknownSymbolError
from owlkit.model import (
    ObjectComplementOf,
    ObjectIntersectionOf,
    ObjectSomeValuesFrom,
    OWLClass,
    OWLClassAssertionAxiom,
    OWL_NOTHING,
    OWL_THING,
    IRI,
)
from owlkit.ontology import Ontology
from owlkit.reasoner import build_snapshot, instances

from family import NS, anna, build_family_ontology, female, has_child, male
from generators import Vocab, random_ce, random_reasoning_ontology


class CrispModel:
    """Score stub driving σ(score) to exactly 0/1 from a reasoner snapshot."""

    BIG = 1000.0

    def __init__(self, snapshot):
        self.snapshot = snapshot
        self.by_iri = {x.iri.text: x for x in snapshot.universe}
        self.class_instances = {}

    def knows_entity(self, name):
        return True

    def knows_relation(self, name):
        return True

    def _instances(self, class_iri):
        if class_iri not in self.class_instances:
            cls = OWLClass(IRI(class_iri))
            self.class_instances[class_iri] = instances(self.snapshot, cls)
        return self.class_instances[class_iri]

    def score(self, head, relation, tail):
        if relation == TYPE_RELATION:
            x = self.by_iri.get(head)
            hit = x is not None and x in self._instances(tail)
        else:
            x = self.by_iri.get(head)
            y = self.by_iri.get(tail)
            from owlkit.model import OWLObjectProperty
            prop = OWLObjectProperty(IRI(relation))
            hit = (x is not None and y is not None
                   and y in self.snapshot.successors(x, prop))
        return self.BIG if hit else -self.BIG

    def probability(self, head, relation, tail):
        return sigmoid(self.score(head, relation, tail))


class TestExtractTriples:
    def test_fixture_counts(self, family):
        triples, skipped = extract_triples(family)
        type_triples = [t for t in triples if t[1] == TYPE_RELATION]
        assert len(type_triples) == 6
        assert len(triples) == 10  # 6 class + 4 role assertions
        assert skipped == 0

    def test_empty_ontology(self):
        assert extract_triples(Ontology()) == ([], 0)

    def test_complex_assertion_skipped(self, family):
        family.add_axiom(OWLClassAssertionAxiom(
            anna, ObjectIntersectionOf([male, female])))
        triples, skipped = extract_triples(family)
        assert skipped == 1
        assert len(triples) == 10


class TestTraining:
    def test_loss_decreases_on_fixture(self, family):
        triples, _ = extract_triples(family)
        model, losses = train(triples, TrainingConfig(seed=7, epochs=60))
        assert losses[-1] < losses[0]

    def test_zero_epochs_keeps_initialization(self, family):
        triples, _ = extract_triples(family)
        config = TrainingConfig(seed=5, epochs=0)
        model, losses = train(triples, config)
        assert losses == []
        rng = np.random.default_rng(5)
        expected_ent = rng.uniform(-0.1, 0.1,
                                   (len(model.entity_ids), config.dim))
        assert np.array_equal(model.entity_vecs, expected_ent)

    def test_same_seed_bitwise_identical(self, family):
        triples, _ = extract_triples(family)
        config = TrainingConfig(seed=11, epochs=20)
        first, _ = train(triples, config)
        second, _ = train(triples, config)
        assert np.array_equal(first.entity_vecs, second.entity_vecs)
        assert np.array_equal(first.relation_vecs, second.relation_vecs)
        assert first.entity_ids == second.entity_ids

    def test_different_seed_differs(self, family):
        triples, _ = extract_triples(family)
        first, _ = train(triples, TrainingConfig(seed=1, epochs=5))
        second, _ = train(triples, TrainingConfig(seed=2, epochs=5))
        assert not np.array_equal(first.entity_vecs, second.entity_vecs)

    def test_empty_triples_rejected(self):
        with pytest.raises(EmptyTripleSetError):
            train([], TrainingConfig())

    def test_vectors_stay_finite(self, family):
        triples, _ = extract_triples(family)
        model, _ = train(triples, TrainingConfig(seed=3, epochs=50,
                                                 learning_rate=0.5))
        assert np.all(np.isfinite(model.entity_vecs))
        assert np.all(np.isfinite(model.relation_vecs))

    def test_config_validation(self):
        with pytest.raises(ValueError):
            TrainingConfig(dim=0)
        with pytest.raises(ValueError):
            TrainingConfig(learning_rate=0)
        with pytest.raises(ValueError):
            TrainingConfig(epochs=-1)
        with pytest.raises(ValueError):
            TrainingConfig(negatives=0)


class TestGradientCheck:
    def _random_model(self, rng):
        n, m, d = 4, 2, 8
        entity_ids = {f"e{i}": i for i in range(n)}
        relation_ids = {f"r{i}": i for i in range(m)}
        gen = np.random.default_rng(rng.randrange(2**32))
        return EmbeddingModel(entity_ids, relation_ids,
                              gen.normal(0, 0.5, (n, d)),
                              gen.normal(0, 0.5, (m, d)))

    def test_hundred_random_probes(self):
        rng = random.Random(2)
        for i in range(100):
            model = self._random_model(rng)
            triple = (f"e{rng.randrange(4)}", f"r{rng.randrange(2)}",
                      f"e{rng.randrange(4)}")
            label = rng.choice([0.0, 1.0])
            error = gradient_check(model, triple, label=label)
            assert error <= 1e-4, f"probe {i}: {error}"

    def test_zero_vectors_pass_trivially(self):
        model = EmbeddingModel({"a": 0, "b": 1}, {"r": 0},
                               np.zeros((2, 4)), np.zeros((1, 4)))
        assert gradient_check(model, ("a", "r", "b")) == 0.0


class TestModelIO:
    def test_save_load_roundtrip(self, family, tmp_path):
        triples, _ = extract_triples(family)
        model, _ = train(triples, TrainingConfig(seed=7, epochs=10))
        path = tmp_path / "model.ebr"
        model.save(path)
        assert path.read_text().startswith("EBR1 d=32\n")
        loaded = EmbeddingModel.load(path)
        assert loaded.entity_ids == model.entity_ids
        assert np.array_equal(loaded.entity_vecs, model.entity_vecs)
        assert np.array_equal(loaded.relation_vecs, model.relation_vecs)

    def test_bad_header_rejected(self, tmp_path):
        path = tmp_path / "bad.ebr"
        path.write_text("nope\n")
        with pytest.raises(ValueError):
            EmbeddingModel.load(path)


class TestMembership:
    def test_top_is_all_ones_bottom_all_zeros(self, family):
        snap = build_snapshot(family)
        model = CrispModel(snap)
        mu_top = membership(model, OWL_THING, snap.universe)
        mu_bot = membership(model, OWL_NOTHING, snap.universe)
        assert set(mu_top.values()) == {1.0}
        assert set(mu_bot.values()) == {0.0}

    def test_complement_law(self, family):
        triples, _ = extract_triples(family)
        model, _ = train(triples, TrainingConfig(seed=7, epochs=5))
        snap = build_snapshot(family)
        mu = membership(model, male, snap.universe)
        mu_not = membership(model, ObjectComplementOf(male), snap.universe)
        for x in snap.universe:
            assert mu[x] + mu_not[x] == pytest.approx(1.0)

    def test_values_in_unit_interval_and_fuzzy_laws(self, family):
        triples, _ = extract_triples(family)
        model, _ = train(triples, TrainingConfig(seed=7, epochs=5))
        snap = build_snapshot(family)
        ce = ObjectSomeValuesFrom(has_child, female)
        mu = membership(model, ce, snap.universe)
        assert all(0.0 <= v <= 1.0 for v in mu.values())
        both = membership(model, ObjectIntersectionOf([ce, ce]), snap.universe)
        assert both == mu  # min(μ, μ) = μ

    def test_de_morgan_under_min_max_complement(self, family):
        from owlkit.model import ObjectUnionOf
        triples, _ = extract_triples(family)
        model, _ = train(triples, TrainingConfig(seed=13, epochs=5))
        snap = build_snapshot(family)
        ce = ObjectSomeValuesFrom(has_child, female)
        left = membership(model, ObjectComplementOf(ObjectUnionOf([male, ce])),
                          snap.universe)
        right = membership(model, ObjectIntersectionOf(
            [ObjectComplementOf(male), ObjectComplementOf(ce)]), snap.universe)
        assert left == right  # 1−max(a,b) = min(1−a, 1−b), exactly
        left = membership(model,
                          ObjectComplementOf(ObjectIntersectionOf([male, ce])),
                          snap.universe)
        right = membership(model, ObjectUnionOf(
            [ObjectComplementOf(male), ObjectComplementOf(ce)]), snap.universe)
        assert left == right

    def test_unknown_symbol_raises(self, family):
        triples, _ = extract_triples(family)
        model, _ = train(triples, TrainingConfig(seed=7, epochs=1))
        snap = build_snapshot(family)
        ghost = OWLClass(IRI(NS + "ghost"))
        with pytest.raises(UnknownSymbolError):
            membership(model, ghost, snap.universe)


class TestRetrieve:
    def test_bottom_empty_for_positive_gamma(self, family):
        snap = build_snapshot(family)
        model = CrispModel(snap)
        assert retrieve(model, OWL_NOTHING, snap.universe, gamma=0.1) == set()

    def test_gamma_zero_returns_universe(self, family):
        snap = build_snapshot(family)
        model = CrispModel(snap)
        assert retrieve(model, OWL_NOTHING, snap.universe, gamma=0.0) == \
            set(snap.universe)

    def test_crisp_reduction_on_random_expressions(self):
        rng = random.Random(31)
        for _ in range(20):
            vocab = Vocab(n_inds=7)
            onto = random_reasoning_ontology(rng, vocab)
            snap = build_snapshot(onto)
            model = CrispModel(snap)
            for _ in range(5):
                ce = random_ce(rng, vocab, 3)
                if _uses_data(ce):
                    continue
                exact = instances(snap, ce)
                approx = retrieve(model, ce, snap.universe, gamma=0.5)
                assert approx == exact

    def test_fixture_f1_is_perfect_for_crisp_model(self, family):
        snap = build_snapshot(family)
        model = CrispModel(snap)
        got = retrieve(model, male, snap.universe)
        precision, recall, f1 = retrieval_metrics(got, instances(snap, male))
        assert (precision, recall, f1) == (1.0, 1.0, 1.0)

    def test_data_restrictions_evaluate_crisply(self, family):
        from owlkit.model import DataSomeValuesFrom, DatatypeRestriction, \
            FacetRestriction, OWLDatatype, make_literal
        from owlkit.vocab import Facet, XSD_INTEGER_IRI
        snap = build_snapshot(family)
        model = CrispModel(snap)
        adult = DataSomeValuesFrom(
            build_family_ontology().data_properties_in_signature()[0],
            DatatypeRestriction(OWLDatatype(IRI(XSD_INTEGER_IRI)),
                                [FacetRestriction(Facet.MIN_INCLUSIVE,
                                                  make_literal(18))]))
        got = retrieve(model, adult, snap.universe,
                       data_values=data_index_of(family))
        assert got == instances(snap, adult)


def _uses_data(ce) -> bool:
    from owlkit.model import (DataAllValuesFrom, DataHasValue,
                              DataSomeValuesFrom)
    if isinstance(ce, (DataAllValuesFrom, DataHasValue, DataSomeValuesFrom)):
        return True
    for attr in ("operands", "operand", "filler"):
        value = getattr(ce, attr, None)
        if value is None:
            continue
        if isinstance(value, tuple):
            if any(_uses_data(op) for op in value):
                return True
        elif _uses_data(value):
            return True
    return False
