"""owlkit: a self-contained OWL 2 ontology engineering toolkit.

Structural data model, functional-syntax and Turtle serialization, DL and
Manchester class-expression converters, SPARQL transpilation, closed-world
and embedding-based instance retrieval, and text-to-ontology generation.
"""

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
    OWL_NOTHING,
    OWL_THING,
    SWRLClassAtom,
    SWRLDataPropertyAtom,
    SWRLObjectPropertyAtom,
    SWRLRule,
    SWRLVariable,
    inverse_of,
    make_iri,
    make_literal,
    signature_of,
    validate_expression,
)
from .ontology import Ontology, load_ontology
from .functional import parse_functional, serialize_functional
from .rdf import (
    BlankNode,
    Triple,
    map_axiom_to_triples,
    map_ontology_to_triples,
    serialize_turtle,
)
from .syntax import (
    PrefixContext,
    normalize,
    parse_dl,
    parse_manchester,
    parse_swrl,
    render_dl,
    render_manchester,
    render_swrl,
)
from .sparql import SparqlQuery, eval_query, to_sparql
from .reasoner import (
    ReasonerConfig,
    Snapshot,
    StructuralReasoner,
    build_snapshot,
    disjointness_violations,
    instances,
)
from .ebr import (
    EmbeddingModel,
    TrainingConfig,
    gradient_check,
    membership,
    retrieve,
    train,
)
from .textgen import (
    ExtractionTriple,
    GenerationConfig,
    HttpChatClient,
    MockClient,
    generate_ontology,
)

__version__ = "0.1.0"
