"""Embedding-based reasoner: bilinear link prediction plus fuzzy retrieval.

A diagonal-bilinear scorer ``score(h, r, t) = Σ_i h_i·r_i·t_i`` is trained
with per-example SGD on binary cross-entropy over sigmoid scores; classes
share the entity table and class membership uses the reserved ``type``
relation.  Retrieval evaluates class expressions with Gödel fuzzy
semantics (min/max/1−μ) over membership scores and thresholds the result;
with 0/1 memberships this reduces exactly to closed-world set evaluation,
which is the correctness anchor for the fuzzy algebra.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptyTripleSetError, UnknownSymbolError
from .model import (
    DataAllValuesFrom,
    DataHasValue,
    DataSomeValuesFrom,
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
    OWLClassAssertionAxiom,
    OWLClassExpression,
    OWLNamedIndividual,
    OWLObjectPropertyAssertionAxiom,
    OWLDataPropertyAssertionAxiom,
    OWL_NOTHING,
    OWL_THING,
)
from .ontology import Ontology
from .reasoner import literal_in_range

#: Reserved relation linking an individual to a class it belongs to.
TYPE_RELATION = "type"


def sigmoid(x: float) -> float:
    if x >= 0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


@dataclass(frozen=True)
class TrainingConfig:
    dim: int = 32
    learning_rate: float = 0.05
    epochs: int = 200
    negatives: int = 5
    seed: int = 0

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be positive")
        if self.epochs < 0:
            raise ValueError("epochs must be >= 0")
        if self.negatives < 1:
            raise ValueError("negatives must be >= 1")


class EmbeddingModel:
    """Entity and relation vectors with the diagonal-bilinear scorer."""

    def __init__(self, entity_ids: dict[str, int], relation_ids: dict[str, int],
                 entity_vecs: np.ndarray, relation_vecs: np.ndarray):
        self.entity_ids = entity_ids
        self.relation_ids = relation_ids
        self.entity_vecs = entity_vecs
        self.relation_vecs = relation_vecs

    @property
    def dim(self) -> int:
        return self.entity_vecs.shape[1]

    def knows_entity(self, name: str) -> bool:
        return name in self.entity_ids

    def knows_relation(self, name: str) -> bool:
        return name in self.relation_ids

    def _entity(self, name: str) -> np.ndarray:
        try:
            return self.entity_vecs[self.entity_ids[name]]
        except KeyError:
            raise UnknownSymbolError(f"entity {name!r} was not embedded") from None

    def _relation(self, name: str) -> np.ndarray:
        try:
            return self.relation_vecs[self.relation_ids[name]]
        except KeyError:
            raise UnknownSymbolError(f"relation {name!r} was not embedded") from None

    def score(self, head: str, relation: str, tail: str) -> float:
        return float(np.sum(self._entity(head) * self._relation(relation)
                            * self._entity(tail)))

    def probability(self, head: str, relation: str, tail: str) -> float:
        return sigmoid(self.score(head, relation, tail))

    # -- persistence ----------------------------------------------------------

    def save(self, path) -> None:
        """Write the model as a tab-separated text table.

        Layout (version EBR1)::

            EBR1 d=<dim>
            entities <n>
            <entity-iri>\\t<v1>\\t...\\t<vd>     (n rows)
            relations <m>
            <relation-name>\\t<v1>\\t...\\t<vd>  (m rows)

        Floats use shortest round-trip repr, so load() is bit-exact.
        """
        lines = [f"EBR1 d={self.dim}", f"entities {len(self.entity_ids)}"]
        for name, idx in self.entity_ids.items():
            vec = "\t".join(repr(float(v)) for v in self.entity_vecs[idx])
            lines.append(f"{name}\t{vec}")
        lines.append(f"relations {len(self.relation_ids)}")
        for name, idx in self.relation_ids.items():
            vec = "\t".join(repr(float(v)) for v in self.relation_vecs[idx])
            lines.append(f"{name}\t{vec}")
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")

    @classmethod
    def load(cls, path) -> "EmbeddingModel":
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
        if not lines or not lines[0].startswith("EBR1 d="):
            raise ValueError("not an EBR1 model file")
        dim = int(lines[0].split("=", 1)[1])
        pos = 1

        def read_table(header: str):
            nonlocal pos
            kind, count = lines[pos].split()
            if kind != header:
                raise ValueError(f"expected {header!r} section")
            pos += 1
            ids: dict[str, int] = {}
            rows = []
            for _ in range(int(count)):
                parts = lines[pos].split("\t")
                if len(parts) != dim + 1:
                    raise ValueError(f"bad row width at line {pos + 1}")
                ids[parts[0]] = len(rows)
                rows.append([float(v) for v in parts[1:]])
                pos += 1
            return ids, np.array(rows, dtype=np.float64).reshape(len(rows), dim)

        entity_ids, entity_vecs = read_table("entities")
        relation_ids, relation_vecs = read_table("relations")
        return cls(entity_ids, relation_ids, entity_vecs, relation_vecs)


def extract_triples(onto: Ontology) -> tuple[list[tuple[str, str, str]], int]:
    """Assertion triples for training: class assertions over named classes
    become ``type`` links, property assertions become role links.

    Returns (triples, skipped) where skipped counts assertions with complex
    class expressions, which have no embedding."""
    triples: list[tuple[str, str, str]] = []
    skipped = 0
    for ax in onto.axioms():
        if isinstance(ax, OWLClassAssertionAxiom):
            if isinstance(ax.class_expression, OWLClass):
                triples.append((ax.individual.iri.text, TYPE_RELATION,
                                ax.class_expression.iri.text))
            else:
                skipped += 1
        elif isinstance(ax, OWLObjectPropertyAssertionAxiom):
            if isinstance(ax.property, ObjectInverseOf):
                triples.append((ax.object.iri.text, ax.property.property.iri.text,
                                ax.subject.iri.text))
            else:
                triples.append((ax.subject.iri.text, ax.property.iri.text,
                                ax.object.iri.text))
    return triples, skipped


def _bce_loss(p: float, y: float) -> float:
    eps = 1e-12
    p = min(max(p, eps), 1.0 - eps)
    return -(y * math.log(p) + (1.0 - y) * math.log(1.0 - p))


def train(triples: list[tuple[str, str, str]],
          config: TrainingConfig) -> tuple[EmbeddingModel, list[float]]:
    """Seeded SGD over the triples; deterministic given the seed.

    Entity and relation ids follow first appearance, vectors start uniform
    in [-0.1, 0.1], and each positive draws ``negatives`` corruptions of
    head or tail (uniformly; hitting a true triple is accepted noise).
    Returns the model and the per-epoch mean loss trace.
    """
    if not triples:
        raise EmptyTripleSetError("training needs at least one triple")
    entity_ids: dict[str, int] = {}
    relation_ids: dict[str, int] = {}
    for h, r, t in triples:
        entity_ids.setdefault(h, len(entity_ids))
        relation_ids.setdefault(r, len(relation_ids))
        entity_ids.setdefault(t, len(entity_ids))

    rng = np.random.default_rng(config.seed)
    ent = rng.uniform(-0.1, 0.1, (len(entity_ids), config.dim))
    rel = rng.uniform(-0.1, 0.1, (len(relation_ids), config.dim))
    encoded = [(entity_ids[h], relation_ids[r], entity_ids[t])
               for h, r, t in triples]

    n_entities = len(entity_ids)
    lr = config.learning_rate
    losses: list[float] = []
    for _ in range(config.epochs):
        total = 0.0
        count = 0
        for h, r, t in encoded:
            examples = [(h, r, t, 1.0)]
            for _ in range(config.negatives):
                corrupt = int(rng.integers(n_entities))
                if int(rng.integers(2)) == 0:
                    examples.append((corrupt, r, t, 0.0))
                else:
                    examples.append((h, r, corrupt, 0.0))
            for eh, er, et, y in examples:
                hv, rv, tv = ent[eh], rel[er], ent[et]
                p = sigmoid(float(np.sum(hv * rv * tv)))
                total += _bce_loss(p, y)
                count += 1
                g = p - y
                grad_h = g * rv * tv
                grad_r = g * hv * tv
                grad_t = g * hv * rv
                if eh == et:
                    ent[eh] -= lr * (grad_h + grad_t)
                else:
                    ent[eh] -= lr * grad_h
                    ent[et] -= lr * grad_t
                rel[er] -= lr * grad_r
        losses.append(total / count)
    model = EmbeddingModel(entity_ids, relation_ids, ent, rel)
    return model, losses


def gradient_check(model: EmbeddingModel, triple: tuple[str, str, str],
                   eps: float = 1e-5, label: float = 1.0) -> float:
    """Max relative error between the analytic cross-entropy gradient and
    central finite differences, over every coordinate of h, r, and t."""
    h, r, t = triple
    hv = model._entity(h).copy()
    rv = model._relation(r).copy()
    tv = model._entity(t).copy()

    def loss(a, b, c):
        return _bce_loss(sigmoid(float(np.sum(a * b * c))), label)

    p = sigmoid(float(np.sum(hv * rv * tv)))
    g = p - label
    analytic = [g * rv * tv, g * hv * tv, g * hv * rv]
    vectors = [hv, rv, tv]
    worst = 0.0
    for which, vec in enumerate(vectors):
        for i in range(len(vec)):
            original = vec[i]
            vec[i] = original + eps
            upper = loss(*vectors)
            vec[i] = original - eps
            lower = loss(*vectors)
            vec[i] = original
            numeric = (upper - lower) / (2.0 * eps)
            a = analytic[which][i]
            denom = max(abs(a), abs(numeric))
            if denom > 1e-8:
                worst = max(worst, abs(a - numeric) / denom)
    return worst


# ---------------------------------------------------------------------------
# Fuzzy retrieval
# ---------------------------------------------------------------------------

def data_index_of(onto: Ontology) -> dict:
    """(individual, data property) -> literal set, for crisp data checks."""
    index: dict = {}
    for ax in onto.axioms_of_kind(OWLDataPropertyAssertionAxiom):
        index.setdefault((ax.subject, ax.property), set()).add(ax.literal)
    return index


def _check_symbols(model, ce: OWLClassExpression) -> None:
    from .model import signature_of, OWLObjectProperty

    for entity in signature_of(ce):
        if isinstance(entity, OWLClass):
            if entity in (OWL_THING, OWL_NOTHING):
                continue
            if not model.knows_entity(entity.iri.text):
                raise UnknownSymbolError(f"class <{entity.iri}> was not embedded")
        elif isinstance(entity, OWLObjectProperty):
            if not model.knows_relation(entity.iri.text):
                raise UnknownSymbolError(f"property <{entity.iri}> was not embedded")


def membership(model, ce: OWLClassExpression,
               universe: list[OWLNamedIndividual],
               data_values: dict | None = None) -> dict[OWLNamedIndividual, float]:
    """Fuzzy membership of every universe member in the class expression.

    Gödel operators: ⊓ -> min, ⊔ -> max, ¬ -> 1−μ; ``∃r.C`` maxes
    min(edge, filler) over the universe and ``∀r.C`` is its dual.
    Enumerations and cardinalities are crisp (0.5 threshold inside
    counting), and data restrictions evaluate crisply from asserted
    literals since literals are not embedded.
    """
    _check_symbols(model, ce)
    data_values = data_values or {}
    names = {x: x.iri.text for x in universe}

    def edge(x, pe, y) -> float:
        if isinstance(pe, ObjectInverseOf):
            return model.probability(names[y], pe.property.iri.text, names[x])
        return model.probability(names[x], pe.iri.text, names[y])

    def ev(node) -> dict[OWLNamedIndividual, float]:
        if isinstance(node, OWLClass):
            if node == OWL_THING:
                return {x: 1.0 for x in universe}
            if node == OWL_NOTHING:
                return {x: 0.0 for x in universe}
            return {x: model.probability(names[x], TYPE_RELATION, node.iri.text)
                    for x in universe}
        if isinstance(node, ObjectIntersectionOf):
            maps = [ev(op) for op in node.operands]
            return {x: min(m[x] for m in maps) for x in universe}
        if isinstance(node, ObjectUnionOf):
            maps = [ev(op) for op in node.operands]
            return {x: max(m[x] for m in maps) for x in universe}
        if isinstance(node, ObjectComplementOf):
            inner = ev(node.operand)
            return {x: 1.0 - inner[x] for x in universe}
        if isinstance(node, ObjectSomeValuesFrom):
            filler = ev(node.filler)
            return {x: max((min(edge(x, node.property, y), filler[y])
                            for y in universe), default=0.0)
                    for x in universe}
        if isinstance(node, ObjectAllValuesFrom):
            filler = ev(node.filler)
            return {x: min((max(1.0 - edge(x, node.property, y), filler[y])
                            for y in universe), default=1.0)
                    for x in universe}
        if isinstance(node, ObjectHasValue):
            target = node.individual.iri.text
            if not model.knows_entity(target):
                raise UnknownSymbolError(f"individual <{target}> was not embedded")
            out = {}
            for x in universe:
                if isinstance(node.property, ObjectInverseOf):
                    out[x] = model.probability(target, node.property.property.iri.text,
                                               names[x])
                else:
                    out[x] = model.probability(names[x], node.property.iri.text,
                                               target)
            return out
        if isinstance(node, ObjectOneOf):
            listed = set(node.individuals)
            return {x: 1.0 if x in listed else 0.0 for x in universe}
        if isinstance(node, (ObjectMinCardinality, ObjectMaxCardinality,
                             ObjectExactCardinality)):
            filler = ev(node.filler)
            out = {}
            for x in universe:
                qualifying = sum(
                    1 for y in universe
                    if min(edge(x, node.property, y), filler[y]) >= 0.5)
                if isinstance(node, ObjectMinCardinality):
                    ok = qualifying >= node.cardinality
                elif isinstance(node, ObjectMaxCardinality):
                    ok = qualifying <= node.cardinality
                else:
                    ok = qualifying == node.cardinality
                out[x] = 1.0 if ok else 0.0
            return out
        if isinstance(node, (DataSomeValuesFrom, DataAllValuesFrom, DataHasValue)):
            out = {}
            for x in universe:
                lits = data_values.get((x, node.property), set())
                if isinstance(node, DataSomeValuesFrom):
                    ok = any(literal_in_range(lit, node.range) for lit in lits)
                elif isinstance(node, DataAllValuesFrom):
                    ok = (all(literal_in_range(lit, node.range) for lit in lits)
                          if lits else True)
                else:
                    ok = node.literal in lits
                out[x] = 1.0 if ok else 0.0
            return out
        raise TypeError(f"cannot evaluate {type(node).__name__}")

    result = ev(ce)
    assert all(0.0 <= mu <= 1.0 for mu in result.values())
    return result


def retrieve(model, ce: OWLClassExpression, universe: list[OWLNamedIndividual],
             gamma: float = 0.5,
             data_values: dict | None = None) -> set[OWLNamedIndividual]:
    """Individuals whose membership reaches the threshold ``gamma``."""
    scores = membership(model, ce, universe, data_values)
    return {x for x, mu in scores.items() if mu >= gamma}


def retrieval_metrics(predicted: set, actual: set) -> tuple[float, float, float]:
    """Precision, recall, and F1 of a retrieved set against the exact one."""
    tp = len(predicted & actual)
    precision = tp / len(predicted) if predicted else (1.0 if not actual else 0.0)
    recall = tp / len(actual) if actual else 1.0
    f1 = (2 * precision * recall / (precision + recall)
          if precision + recall else 0.0)
    return precision, recall, f1
