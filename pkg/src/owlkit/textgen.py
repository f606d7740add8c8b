"""Ontology generation from natural-language text.

A chat-completion client extracts ``(subject | predicate | object)`` lines,
entities are typed from a predefined set or by model-invented classes, and
the triples materialize into assertion axioms; numeric objects become data
property assertions.  With the deterministic mock client the whole pipeline
is reproducible, which is what the golden tests pin down.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import requests

from .errors import ClientError, ExtractionEmptyError
from .model import (
    IRI,
    OWLClass,
    OWLClassAssertionAxiom,
    OWLDataProperty,
    OWLDataPropertyAssertionAxiom,
    OWLDeclarationAxiom,
    OWLNamedIndividual,
    OWLObjectProperty,
    OWLObjectPropertyAssertionAxiom,
    OWL_THING,
    make_literal,
)
from .ontology import Ontology

logger = logging.getLogger(__name__)

TEMPERATURE = 0  # fixed; reproducibility beats creativity here
API_KEY_ENV = "OWLKIT_LLM_API_KEY"
BASE_URL_ENV = "OWLKIT_LLM_BASE_URL"

_TRIPLE_LINE = re.compile(r"^\s*\(\s*(.+?)\s*\|\s*(.+?)\s*\|\s*(.+?)\s*\)\s*$")
_TYPING_LINE = re.compile(r"^\s*(.+?)\s*:\s*(.+?)\s*$")
_NUMBER = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")


@dataclass(frozen=True)
class ExtractionTriple:
    subject: str
    predicate: str
    object: str | int | float

    def __post_init__(self):
        if not self.subject or not self.predicate:
            raise ValueError("subject and predicate must be non-empty")


@dataclass(frozen=True)
class GenerationConfig:
    namespace: str = "http://example.org/generated#"
    predefined_classes: tuple[str, ...] = ()
    allow_llm_classes: bool = True
    model: str = "default"
    max_retries: int = 2
    prompt_dir: str | None = None

    def __post_init__(self):
        if not self.predefined_classes and not self.allow_llm_classes:
            raise ValueError(
                "need predefined classes or allow_llm_classes=True")


# ---------------------------------------------------------------------------
# Clients
# ---------------------------------------------------------------------------

class HttpChatClient:
    """Chat-completion client: POST {model, temperature, messages} as JSON,
    bearer token from the environment, 30 s timeout."""

    def __init__(self, base_url: str | None = None, model: str = "default",
                 timeout: float = 30.0):
        self.base_url = base_url or os.environ.get(BASE_URL_ENV)
        if not self.base_url:
            raise ClientError(f"no base URL; set {BASE_URL_ENV} or pass one")
        self.model = model
        self.timeout = timeout

    def send(self, prompt: str) -> str:
        headers = {"Content-Type": "application/json"}
        api_key = os.environ.get(API_KEY_ENV)
        if api_key:
            headers["Authorization"] = f"Bearer {api_key}"
        payload = {
            "model": self.model,
            "temperature": TEMPERATURE,
            "messages": [{"role": "user", "content": prompt}],
        }
        try:
            response = requests.post(self.base_url, json=payload,
                                      headers=headers, timeout=self.timeout)
            response.raise_for_status()
            body = response.json()
            return body["choices"][0]["message"]["content"]
        except requests.RequestException as exc:
            raise ClientError(f"chat completion request failed: {exc}") from exc
        except (KeyError, IndexError, ValueError) as exc:
            raise ClientError(f"malformed chat completion response: {exc}") from exc


def prompt_digest(prompt: str) -> str:
    return hashlib.sha256(prompt.encode("utf-8")).hexdigest()


class MockClient:
    """Deterministic stand-in keyed by the SHA-256 of the prompt."""

    def __init__(self, responses: dict[str, str]):
        self.responses = dict(responses)

    @classmethod
    def from_transcript(cls, path: str | Path) -> "MockClient":
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        return cls(data["responses"])

    def send(self, prompt: str) -> str:
        digest = prompt_digest(prompt)
        if digest not in self.responses:
            raise ClientError(f"no recorded response for prompt {digest[:12]}…")
        return self.responses[digest]


class RecordingClient:
    """Wraps a live client and records a transcript for later mock replay."""

    def __init__(self, inner):
        self.inner = inner
        self.responses: dict[str, str] = {}

    def send(self, prompt: str) -> str:
        text = self.inner.send(prompt)
        self.responses[prompt_digest(prompt)] = text
        return text

    def save_transcript(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            json.dump({"responses": self.responses}, fh, indent=2, sort_keys=True)
            fh.write("\n")


# ---------------------------------------------------------------------------
# Prompts
# ---------------------------------------------------------------------------

def _load_template(name: str, config: GenerationConfig) -> str:
    if config.prompt_dir:
        return Path(config.prompt_dir, name).read_text(encoding="utf-8")
    return (resources.files("owlkit") / "prompts" / name).read_text(encoding="utf-8")


def build_extraction_prompt(text: str, config: GenerationConfig) -> str:
    return _load_template("extraction_v1.txt", config).format(text=text)


def build_typing_prompt(entities: list[str], config: GenerationConfig) -> str:
    if config.predefined_classes:
        instructions = ("Allowed types: "
                        + ", ".join(config.predefined_classes)
                        + ". Use exactly one of them per entity.")
    else:
        instructions = "Invent a short CamelCase type name for each entity."
    return _load_template("typing_v1.txt", config).format(
        instructions=instructions, entities="\n".join(entities))


# ---------------------------------------------------------------------------
# Pipeline stages
# ---------------------------------------------------------------------------

def _parse_object(text: str) -> str | int | float:
    if _NUMBER.match(text):
        if re.search(r"[.eE]", text):
            return float(text)
        return int(text)
    return text


def is_numeric_object(text: str) -> bool:
    """The decimal-number lexical test deciding data vs object assertions."""
    return bool(_NUMBER.match(text))


def extract_triples(text: str, client, config: GenerationConfig) -> list[ExtractionTriple]:
    """Prompt for ``(s | p | o)`` lines; malformed lines are skipped with a
    warning, and a completion with zero parseable lines is retried up to
    ``config.max_retries`` times before giving up."""
    if not text.strip():
        raise ValueError("input text must be non-empty")
    prompt = build_extraction_prompt(text, config)
    attempts = 1 + config.max_retries
    for attempt in range(attempts):
        completion = client.send(prompt)
        triples: list[ExtractionTriple] = []
        malformed = 0
        for line in completion.splitlines():
            if not line.strip():
                continue
            match = _TRIPLE_LINE.match(line)
            if not match:
                malformed += 1
                continue
            subject, predicate, obj = match.groups()
            triples.append(ExtractionTriple(subject, predicate, _parse_object(obj)))
        if malformed:
            logger.warning("skipped %d malformed extraction line(s)", malformed)
        if triples:
            return triples
        logger.warning("extraction attempt %d/%d produced no triples",
                       attempt + 1, attempts)
    raise ExtractionEmptyError(
        f"no parseable triples after {attempts} attempt(s)")


def assign_types(entities: list[str], client,
                 config: GenerationConfig) -> dict[str, OWLClass]:
    """Type each entity; answers outside a predefined set (and entities the
    completion never mentions) fall back to owl:Thing."""
    if not entities:
        raise ValueError("entities must be non-empty")
    completion = client.send(build_typing_prompt(entities, config))
    answers: dict[str, str] = {}
    for line in completion.splitlines():
        match = _TYPING_LINE.match(line)
        if match:
            answers[match.group(1)] = match.group(2)
    typing: dict[str, OWLClass] = {}
    allowed = {c: c for c in config.predefined_classes}
    for entity in entities:
        answer = answers.get(entity)
        if answer is None:
            typing[entity] = OWL_THING
        elif config.predefined_classes:
            if answer in allowed:
                typing[entity] = OWLClass(IRI(config.namespace
                                              + sanitize_class(answer)))
            else:
                typing[entity] = OWL_THING
        else:
            typing[entity] = OWLClass(IRI(config.namespace
                                          + sanitize_class(answer)))
    return typing


def sanitize_individual(surface: str) -> str:
    name = re.sub(r"\s+", "_", surface.strip().lower())
    name = re.sub(r"[^a-z0-9_]", "", name)
    return name or "unnamed"


def sanitize_property(surface: str) -> str:
    words = re.sub(r"[^A-Za-z0-9 ]", " ", surface).split()
    if not words:
        return "relatedTo"
    return words[0].lower() + "".join(w.capitalize() for w in words[1:])


def sanitize_class(surface: str) -> str:
    words = re.sub(r"[^A-Za-z0-9 ]", " ", surface).split()
    if not words:
        return "Thing"
    return "".join(w[0].upper() + w[1:] for w in words)


def triples_to_axioms(triples: list[ExtractionTriple],
                      typing: dict[str, OWLClass],
                      config: GenerationConfig) -> list:
    """Materialize axioms: declarations for every minted entity, one class
    assertion per entity, then one property assertion per triple.

    Two surface forms that sanitize identically merge into one individual.
    """
    ns = config.namespace
    individuals: dict[str, OWLNamedIndividual] = {}
    object_props: dict[str, OWLObjectProperty] = {}
    data_props: dict[str, OWLDataProperty] = {}
    entity_order: list[str] = []

    def individual(surface: str) -> OWLNamedIndividual:
        ind = OWLNamedIndividual(IRI(ns + sanitize_individual(surface)))
        if surface not in individuals:
            individuals[surface] = ind
            entity_order.append(surface)
        return ind

    assertions = []
    for triple in triples:
        subject = individual(triple.subject)
        if isinstance(triple.object, (int, float)):
            prop = data_props.setdefault(
                triple.predicate,
                OWLDataProperty(IRI(ns + sanitize_property(triple.predicate))))
            literal = make_literal(triple.object)
            assertions.append(OWLDataPropertyAssertionAxiom(subject, prop, literal))
        else:
            prop = object_props.setdefault(
                triple.predicate,
                OWLObjectProperty(IRI(ns + sanitize_property(triple.predicate))))
            target = individual(triple.object)
            assertions.append(OWLObjectPropertyAssertionAxiom(subject, prop, target))

    class_assertions = []
    classes: dict[OWLClass, None] = {}
    minted: dict[OWLNamedIndividual, None] = {}
    for surface in entity_order:
        ind = individuals[surface]
        cls = typing.get(surface, OWL_THING)
        if ind not in minted:
            minted[ind] = None
            class_assertions.append(OWLClassAssertionAxiom(ind, cls))
            if cls != OWL_THING:
                classes.setdefault(cls)

    axioms: list = []
    axioms.extend(OWLDeclarationAxiom(c) for c in classes)
    axioms.extend(OWLDeclarationAxiom(p) for p in object_props.values())
    axioms.extend(OWLDeclarationAxiom(p) for p in data_props.values())
    axioms.extend(OWLDeclarationAxiom(i) for i in minted)
    axioms.extend(class_assertions)
    axioms.extend(assertions)
    return axioms


def generate_ontology(text: str, client, config: GenerationConfig) -> Ontology:
    """Full pipeline: extract, type, materialize.  Fails without a partial
    result when the client errors mid-way."""
    triples = extract_triples(text, client, config)
    entities: list[str] = []
    seen = set()
    for triple in triples:
        for surface in ([triple.subject]
                        + ([triple.object] if isinstance(triple.object, str) else [])):
            if surface not in seen:
                seen.add(surface)
                entities.append(surface)
    typing = assign_types(entities, client, config) if entities else {}
    axioms = triples_to_axioms(triples, typing, config)
    onto = Ontology(iri=IRI(config.namespace.rstrip("#/")))
    onto.set_prefix("", config.namespace)
    for ax in axioms:
        onto.add_axiom(ax)
    return onto
