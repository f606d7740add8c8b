"""Data model: IRIs, literals, expressions, axioms, signatures."""
import random

import pytest
from hypothesis import given, strategies as st

from owlkit.errors import IriParseError, RuleSafetyError
from owlkit.model import (
    ObjectComplementOf,
    ObjectIntersectionOf,
    ObjectInverseOf,
    ObjectMinCardinality,
    ObjectSomeValuesFrom,
    ObjectUnionOf,
    OWLClass,
    OWLClassAssertionAxiom,
    OWLDataProperty,
    OWLDataPropertyAssertionAxiom,
    OWLDatatype,
    OWLDeclarationAxiom,
    OWLLiteral,
    OWLNamedIndividual,
    OWLObjectProperty,
    OWLSubClassOfAxiom,
    OWL_THING,
    SWRLClassAtom,
    SWRLObjectPropertyAtom,
    SWRLRule,
    SWRLVariable,
    inverse_of,
    make_iri,
    make_literal,
    signature_of,
    validate_expression,
)
from owlkit.vocab import XSD_DOUBLE_IRI, XSD_INTEGER_IRI

from generators import Vocab, random_ce

NS = "http://example.com/family#"


class TestIri:
    def test_split_on_hash(self):
        iri = make_iri("http://example.com/father#male")
        assert iri.remainder == "male"
        assert iri.namespace == "http://example.com/father#"

    def test_split_on_last_slash(self):
        iri = make_iri("http://example.com/a/b")
        assert iri.remainder == "b"
        assert iri.namespace == "http://example.com/a/"

    def test_no_separator_keeps_full_form(self):
        iri = make_iri("urn:a:b")
        assert iri.remainder == "urn:a:b"
        assert iri.namespace is None

    @pytest.mark.parametrize("bad", ["", "http://x/", "http://x#",
                                     "http://x y", "a b", "\thttp://x"])
    def test_rejected(self, bad):
        with pytest.raises(IriParseError):
            make_iri(bad)

    def test_equality_is_exact_text(self):
        assert make_iri("http://x#a") == make_iri("http://x#a")
        assert make_iri("http://x#a") != make_iri("http://x#b")
        assert hash(make_iri("http://x#a")) == hash(make_iri("http://x#a"))


class TestEntities:
    def test_equality_needs_matching_kind(self):
        iri = make_iri(NS + "p")
        assert OWLClass(iri) == OWLClass(iri)
        assert OWLClass(iri) != OWLObjectProperty(iri)
        assert OWLClass(iri) != OWLNamedIndividual(iri)

    def test_reserved_classes_are_plain_classes(self):
        assert isinstance(OWL_THING, OWLClass)
        assert OWL_THING.iri.remainder == "Thing"

    def test_double_inverse_normalizes(self):
        p = OWLObjectProperty(make_iri(NS + "hasChild"))
        assert inverse_of(inverse_of(p)) == p
        assert inverse_of(p) == ObjectInverseOf(p)

    def test_inverse_wraps_named_only(self):
        p = OWLObjectProperty(make_iri(NS + "hasChild"))
        with pytest.raises(TypeError):
            ObjectInverseOf(ObjectInverseOf(p))


class TestLiterals:
    def test_integer_value_roundtrip(self):
        lit = OWLLiteral("42", OWLDatatype(make_iri(XSD_INTEGER_IRI)))
        assert lit.value == 42

    def test_double_value_roundtrip(self):
        lit = OWLLiteral("2.5", OWLDatatype(make_iri(XSD_DOUBLE_IRI)))
        assert lit.value == 2.5

    def test_bad_numeric_lexical_rejected(self):
        with pytest.raises(ValueError):
            OWLLiteral("4x", OWLDatatype(make_iri(XSD_INTEGER_IRI)))

    def test_equality_is_lexical_datatype_pair(self):
        integer = OWLDatatype(make_iri(XSD_INTEGER_IRI))
        double = OWLDatatype(make_iri(XSD_DOUBLE_IRI))
        assert OWLLiteral("42", integer) == OWLLiteral("42", integer)
        assert OWLLiteral("42", integer) != OWLLiteral("42", double)
        assert OWLLiteral("042", integer) != OWLLiteral("42", integer)

    @given(st.integers(min_value=-10**12, max_value=10**12))
    def test_int_literals_roundtrip(self, value):
        assert make_literal(value).value == value

    @given(st.floats(allow_nan=False, allow_infinity=False, width=64))
    def test_float_literals_roundtrip(self, value):
        assert make_literal(value).value == value


class TestConstructors:
    def test_nary_needs_two_operands(self):
        c = OWLClass(make_iri(NS + "c"))
        with pytest.raises(ValueError):
            ObjectIntersectionOf([c])
        with pytest.raises(ValueError):
            ObjectUnionOf([c])

    def test_negative_cardinality_rejected(self):
        p = OWLObjectProperty(make_iri(NS + "p"))
        with pytest.raises(ValueError):
            ObjectMinCardinality(-1, p, OWL_THING)

    def test_operand_order_preserved(self):
        a, b = OWLClass(make_iri(NS + "a")), OWLClass(make_iri(NS + "b"))
        assert ObjectIntersectionOf([a, b]) != ObjectIntersectionOf([b, a])

    def test_structural_equality_and_hash(self):
        p = OWLObjectProperty(make_iri(NS + "p"))
        c = OWLClass(make_iri(NS + "c"))
        left = ObjectSomeValuesFrom(p, ObjectComplementOf(c))
        right = ObjectSomeValuesFrom(p, ObjectComplementOf(c))
        assert left == right
        assert hash(left) == hash(right)
        assert len({left, right}) == 1


def _backdoor(cls, **fields):
    """Build a node bypassing the validating constructor, the way broken
    deserialized input would arrive."""
    node = object.__new__(cls)
    for name, value in fields.items():
        object.__setattr__(node, name, value)
    return node


class TestValidateExpression:
    def test_short_intersection_flagged(self):
        c = OWLClass(make_iri(NS + "c"))
        bad = _backdoor(ObjectIntersectionOf, operands=(c,))
        violations = validate_expression(bad)
        assert len(violations) == 1
        assert "2" in violations[0]

    def test_zero_cardinality_is_legal(self):
        p = OWLObjectProperty(make_iri(NS + "p"))
        assert validate_expression(ObjectMinCardinality(0, p, OWL_THING)) == []

    def test_negative_cardinality_flagged(self):
        p = OWLObjectProperty(make_iri(NS + "p"))
        bad = _backdoor(ObjectMinCardinality, cardinality=-2, property=p,
                        filler=OWL_THING)
        assert any("negative" in v for v in validate_expression(bad))

    def test_nested_violation_found(self):
        c = OWLClass(make_iri(NS + "c"))
        p = OWLObjectProperty(make_iri(NS + "p"))
        bad = ObjectSomeValuesFrom(p, _backdoor(ObjectUnionOf, operands=(c,)))
        assert validate_expression(bad)

    def test_generated_expressions_validate(self):
        rng = random.Random(11)
        vocab = Vocab()
        for _ in range(200):
            ce = random_ce(rng, vocab, 5)
            assert validate_expression(ce) == []


class TestSignature:
    def test_class_assertion_signature(self):
        male = OWLClass(make_iri(NS + "male"))
        alkid = OWLNamedIndividual(make_iri(NS + "alkid"))
        assert signature_of(OWLClassAssertionAxiom(alkid, male)) == {male, alkid}

    def test_declaration_signature(self):
        c = OWLClass(make_iri(NS + "c"))
        assert signature_of(OWLDeclarationAxiom(c)) == {c}

    def test_subclass_of_complex_signature(self):
        # oracle: collect entities by a straight recursive walk of the term
        c, d, e = (OWLClass(make_iri(NS + n)) for n in "cde")
        r = OWLObjectProperty(make_iri(NS + "r"))
        ax = OWLSubClassOfAxiom(
            ObjectIntersectionOf([c, ObjectSomeValuesFrom(r, d)]), e)

        def walk(term, out):
            if isinstance(term, (OWLClass, OWLObjectProperty)):
                out.add(term)
            elif isinstance(term, ObjectIntersectionOf):
                for op in term.operands:
                    walk(op, out)
            elif isinstance(term, ObjectSomeValuesFrom):
                walk(term.property, out)
                walk(term.filler, out)
            return out

        expected = walk(ax.sub_class, set()) | walk(ax.super_class, set())
        assert signature_of(ax) == expected == {c, d, e, r}

    def test_data_assertion_includes_datatype(self):
        anna = OWLNamedIndividual(make_iri(NS + "anna"))
        age = OWLDataProperty(make_iri(NS + "hasAge"))
        lit = make_literal(42)
        sig = signature_of(OWLDataPropertyAssertionAxiom(anna, age, lit))
        assert {anna, age, lit.datatype} == sig

    def test_subterm_signature_contained(self):
        rng = random.Random(5)
        vocab = Vocab()
        for _ in range(100):
            ce = random_ce(rng, vocab, 3)
            inner = ObjectComplementOf(ce)
            assert signature_of(ce) <= signature_of(inner)


class TestRules:
    def test_safety_enforced(self):
        c = OWLClass(make_iri(NS + "c"))
        p = OWLObjectProperty(make_iri(NS + "p"))
        x, z = SWRLVariable("x"), SWRLVariable("z")
        with pytest.raises(RuleSafetyError):
            SWRLRule(body=[SWRLClassAtom(c, x)],
                     head=[SWRLObjectPropertyAtom(p, x, z)])

    def test_tautology_allowed(self):
        c = OWLClass(make_iri(NS + "c"))
        x = SWRLVariable("x")
        rule = SWRLRule(body=[SWRLClassAtom(c, x)], head=[SWRLClassAtom(c, x)])
        assert rule.body == rule.head

    def test_ground_head_allowed(self):
        c = OWLClass(make_iri(NS + "c"))
        anna = OWLNamedIndividual(make_iri(NS + "anna"))
        SWRLRule(body=[SWRLClassAtom(c, SWRLVariable("x"))],
                 head=[SWRLClassAtom(c, anna)])
