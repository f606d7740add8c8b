"""Transpile class expressions to SPARQL and sanity-check the queries with
the built-in subset evaluator over the ontology's RDF triples."""
from owlkit import (
    IRI,
    Ontology,
    OWLClass,
    OWLClassAssertionAxiom,
    OWLDeclarationAxiom,
    OWLNamedIndividual,
    OWLObjectProperty,
    OWLObjectPropertyAssertionAxiom,
    PrefixContext,
    eval_query,
    map_ontology_to_triples,
    parse_manchester,
    to_sparql,
)

NS = "http://example.com/family#"
ctx = PrefixContext(default_ns=NS)

female = OWLClass(IRI(NS + "female"))
has_child = OWLObjectProperty(IRI(NS + "hasChild"))
people = {name: OWLNamedIndividual(IRI(NS + name))
          for name in ("markus", "michelle", "anna", "heinz")}

onto = Ontology()
onto.set_prefix("", NS)
for ind in people.values():
    onto.add_axiom(OWLDeclarationAxiom(ind))
onto.add_axiom(OWLClassAssertionAxiom(people["michelle"], female))
onto.add_axiom(OWLClassAssertionAxiom(people["anna"], female))
onto.add_axiom(OWLObjectPropertyAssertionAxiom(people["markus"], has_child,
                                               people["anna"]))
onto.add_axiom(OWLObjectPropertyAssertionAxiom(people["heinz"], has_child,
                                               people["markus"]))

triples = map_ontology_to_triples(onto)
print(f"{len(triples)} triples in the RDF mapping\n")

for text in ("female", "hasChild some female", "not female",
             "hasChild max 0"):
    query = to_sparql(parse_manchester(text, ctx))
    answers = sorted(iri.remainder for iri in eval_query(query, triples))
    print(f"-- {text}")
    print(query.text)
    print("=>", answers)
    print()
