"""Parse a functional-style document from a string and round-trip it.

Shows the parser's error reporting as well: a broken document produces a
position-annotated message instead of a silent skip.
"""
from owlkit import parse_functional, serialize_functional
from owlkit.errors import ParseError

DOC = """\
Prefix(f:=<http://example.com/family#>)
Ontology(<http://example.com/family>
Declaration(Class(f:person))
Declaration(Class(f:father))
# fathers are exactly the males with at least one person child
EquivalentClasses(f:father ObjectIntersectionOf(f:male ObjectSomeValuesFrom(f:hasChild f:person)))
ClassAssertion(f:father f:markus)
DataPropertyAssertion(f:hasAge f:markus "41"^^xsd:integer)
DLSafeRule(Body(ClassAtom(f:father Variable(<urn:swrl#x>))) Head(ClassAtom(f:person Variable(<urn:swrl#x>))))
)
"""

onto = parse_functional(DOC)
print(f"parsed {len(onto)} axioms")

text = serialize_functional(onto)
again = parse_functional(text)
print("round-trip preserves the axiom set:", again.same_axioms(onto))
print()
print(text)

broken = "Ontology(\nSubClassOf(f:male)\n)"
try:
    parse_functional(broken)
except ParseError as exc:
    print("broken document rejected:", exc)
