"""Closed-world retrieval over a small family ontology: hierarchy
propagation, property saturation, complex expressions, and the effect of
the reasoner flags."""
from owlkit import (
    IRI,
    Ontology,
    OWLClass,
    OWLClassAssertionAxiom,
    OWLDeclarationAxiom,
    OWLDisjointClassesAxiom,
    OWLInverseObjectPropertiesAxiom,
    OWLNamedIndividual,
    OWLObjectProperty,
    OWLObjectPropertyAssertionAxiom,
    OWLSubClassOfAxiom,
    OWLSubObjectPropertyOfAxiom,
    PrefixContext,
    ReasonerConfig,
    StructuralReasoner,
    parse_manchester,
)

NS = "http://example.com/family#"
cls = {n: OWLClass(IRI(NS + n)) for n in ("person", "male", "female", "child")}
prop = {n: OWLObjectProperty(IRI(NS + n))
        for n in ("hasChild", "hasSon", "hasParent")}
ind = {n: OWLNamedIndividual(IRI(NS + n))
       for n in ("markus", "michelle", "anna", "heinz", "stefan", "eva")}

onto = Ontology(iri=IRI(NS.rstrip("#")))
onto.set_prefix("", NS)
for entity in (*cls.values(), *prop.values(), *ind.values()):
    onto.add_axiom(OWLDeclarationAxiom(entity))
for sub in ("male", "female", "child"):
    onto.add_axiom(OWLSubClassOfAxiom(cls[sub], cls["person"]))
onto.add_axiom(OWLDisjointClassesAxiom([cls["male"], cls["female"]]))
onto.add_axiom(OWLSubObjectPropertyOfAxiom(prop["hasSon"], prop["hasChild"]))
onto.add_axiom(OWLInverseObjectPropertiesAxiom(prop["hasChild"],
                                               prop["hasParent"]))
for name, c in (("markus", "male"), ("michelle", "female"), ("anna", "child"),
                ("heinz", "male"), ("stefan", "child"), ("eva", "female")):
    onto.add_axiom(OWLClassAssertionAxiom(ind[name], cls[c]))
onto.add_axiom(OWLObjectPropertyAssertionAxiom(ind["markus"], prop["hasChild"],
                                               ind["anna"]))
onto.add_axiom(OWLObjectPropertyAssertionAxiom(ind["markus"], prop["hasSon"],
                                               ind["stefan"]))
onto.add_axiom(OWLObjectPropertyAssertionAxiom(ind["eva"], prop["hasParent"],
                                               ind["heinz"]))

ctx = PrefixContext.from_ontology(onto)
reasoner = StructuralReasoner(onto)

def show(text):
    ce = parse_manchester(text, ctx)
    names = sorted(x.iri.remainder for x in reasoner.instances(ce))
    print(f"{text:40} -> {names}")

show("male")
show("person")
show("hasChild some child")
show("hasChild some female")       # heinz, via the hasParent inverse
show("hasChild min 2")             # markus, hasSon counts as hasChild
show("person and not (hasChild some owl:Thing)")

print()
print("types(stefan):", sorted(c.iri.remainder for c in reasoner.types(ind["stefan"])))
print("direct types:", sorted(c.iri.remainder
                              for c in reasoner.types(ind["stefan"], direct=True)))
print("subclasses of person:",
      sorted(c.iri.remainder for c in reasoner.sub_classes(cls["person"])))
print("markus children:",
      sorted(x.iri.remainder
             for x in reasoner.object_property_values(ind["markus"],
                                                      prop["hasChild"])))

# asserted types only, no hierarchy propagation
flat = StructuralReasoner(onto, ReasonerConfig(infer_hierarchy=False))
print()
print("person without hierarchy:",
      sorted(x.iri.remainder for x in flat.instances(cls["person"])))

# contradictory typing shows up as a disjointness violation
onto.add_axiom(OWLClassAssertionAxiom(ind["anna"], cls["male"]))
onto.add_axiom(OWLClassAssertionAxiom(ind["anna"], cls["female"]))
violations = StructuralReasoner(onto).disjointness_violations()
print("violations:", [(x.iri.remainder, c.iri.remainder, d.iri.remainder)
                      for x, c, d in violations])
