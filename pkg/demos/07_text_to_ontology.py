"""Generate an ontology from text with a deterministic mock extraction
client.

A live run needs OWLKIT_LLM_BASE_URL (and usually OWLKIT_LLM_API_KEY) set
and an HttpChatClient in place of the mock; everything downstream of the
client is identical.
"""
from owlkit import GenerationConfig, MockClient, generate_ontology
from owlkit.functional import serialize_functional
from owlkit.textgen import (
    build_extraction_prompt,
    build_typing_prompt,
    prompt_digest,
)

TEXT = ("Marie Curie discovered radium. Marie Curie won the Nobel Prize. "
        "Marie Curie was born in 1867.")

config = GenerationConfig()

# the mock answers are keyed by the SHA-256 of the exact prompt, so a
# recorded transcript replays only against the prompts it was made for
extraction_answer = (
    "(Marie Curie | discovered | Radium)\n"
    "(Marie Curie | won | Nobel Prize)\n"
    "(Marie Curie | birth year | 1867)")
typing_answer = (
    "Marie Curie: Scientist\n"
    "Radium: ChemicalElement\n"
    "Nobel Prize: Award")
client = MockClient({
    prompt_digest(build_extraction_prompt(TEXT, config)): extraction_answer,
    prompt_digest(build_typing_prompt(
        ["Marie Curie", "Radium", "Nobel Prize"], config)): typing_answer,
})

onto = generate_ontology(TEXT, client, config)
print(f"generated {len(onto)} axioms; individuals:",
      [x.iri.remainder for x in onto.individuals_in_signature()])
print()
print(serialize_functional(onto))
