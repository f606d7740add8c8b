"""Build an ontology in code, edit it, and save it in both formats.

Walks through the basic workflow: mint entities, assert axioms, inspect
the signature, and write functional syntax plus Turtle next to this script.
"""
from pathlib import Path

from owlkit import (
    IRI,
    Ontology,
    OWLClass,
    OWLClassAssertionAxiom,
    OWLDataProperty,
    OWLDataPropertyAssertionAxiom,
    OWLDeclarationAxiom,
    OWLNamedIndividual,
    OWLObjectProperty,
    OWLObjectPropertyAssertionAxiom,
    OWLSubClassOfAxiom,
    make_literal,
)

NS = "http://example.com/father#"

person = OWLClass(IRI(NS + "person"))
male = OWLClass(IRI(NS + "male"))
has_child = OWLObjectProperty(IRI(NS + "hasChild"))
has_age = OWLDataProperty(IRI(NS + "hasAge"))
markus = OWLNamedIndividual(IRI(NS + "markus"))
anna = OWLNamedIndividual(IRI(NS + "anna"))

onto = Ontology(iri=IRI(NS.rstrip("#")))
onto.set_prefix("", NS)

for entity in (person, male, has_child, has_age, markus, anna):
    onto.add_axiom(OWLDeclarationAxiom(entity))
onto.add_axiom(OWLSubClassOfAxiom(male, person))
onto.add_axiom(OWLClassAssertionAxiom(markus, male))
onto.add_axiom(OWLObjectPropertyAssertionAxiom(markus, has_child, anna))
onto.add_axiom(OWLDataPropertyAssertionAxiom(markus, has_age, make_literal(41)))

print(f"{len(onto)} axioms")
print("classes:", [c.iri.remainder for c in onto.classes_in_signature()])
print("individuals:", [i.iri.remainder for i in onto.individuals_in_signature()])

# the paper-style edit: add a freshly minted individual with a type
alkid = OWLNamedIndividual(IRI(NS + "alkid"))
added = onto.add_axiom(OWLClassAssertionAxiom(alkid, male))
print("added alkid:male ->", added)
print("adding it again ->", onto.add_axiom(OWLClassAssertionAxiom(alkid, male)))

out_dir = Path(__file__).parent
onto.save(out_dir / "father.ofn", "functional")
onto.save(out_dir / "father.ttl", "turtle")
print("wrote father.ofn and father.ttl")
print((out_dir / "father.ofn").read_text())
