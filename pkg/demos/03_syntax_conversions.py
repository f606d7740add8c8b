"""Convert class expressions between Manchester, DL, and the typed AST,
and parse a string rule."""
from owlkit import (
    PrefixContext,
    parse_dl,
    parse_manchester,
    parse_swrl,
    render_dl,
    render_manchester,
    render_swrl,
)

ctx = PrefixContext(default_ns="http://example.com/family#")

examples = [
    "male and (hasChild some person)",
    "not child",
    "hasChild max 0 person",
    "female or (hasChild min 2 (person and not male))",
    "hasAge some xsd:integer[>= 18]",
    "hasChild value anna",
]

for text in examples:
    ce = parse_manchester(text, ctx)
    dl = render_dl(ce, ctx)
    back = parse_dl(dl, ctx)
    print(f"{text!r}")
    print(f"   DL          {dl}")
    print(f"   Manchester  {render_manchester(ce, ctx)}")
    print(f"   DL reparse matches: {back == ce}")
    print()

rule = parse_swrl("male(?x) ^ hasChild(?x, ?y) -> parentOf(?x, ?y)", ctx)
print("rule body atoms:", len(rule.body), "head atoms:", len(rule.head))
print("echoed:", render_swrl(rule, ctx))
