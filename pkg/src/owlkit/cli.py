"""Command-line front door.

Thin adapters over the library: every subcommand's output is exactly what
the corresponding library call returns.  Exit codes: 0 success, 1 domain
error, 2 usage error.  Diagnostics go to stderr, payload to stdout or the
requested output file.
"""
from __future__ import annotations

import argparse
import sys

from .ebr import (
    EmbeddingModel,
    TrainingConfig,
    data_index_of,
    extract_triples,
    retrieve,
    train,
)
from .errors import OwlkitError
from .model import OWLClass
from .ontology import load_ontology
from .reasoner import (
    ReasonerConfig,
    StructuralReasoner,
    equivalent_classes,
    sub_classes,
    super_classes,
)
from .sparql import to_sparql
from .syntax import (
    PrefixContext,
    parse_dl,
    parse_manchester,
    parse_swrl,
    render_dl,
    render_manchester,
    render_swrl,
)
from .textgen import GenerationConfig, HttpChatClient, MockClient, generate_ontology


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="owlkit",
        description="OWL 2 toolkit: convert, render, reason, and generate")
    sub = parser.add_subparsers(dest="command", required=True)

    convert = sub.add_parser("convert", help="re-serialize an ontology")
    convert.add_argument("--in", dest="input", required=True)
    convert.add_argument("--from", dest="from_format", default="functional",
                         choices=["functional"])
    convert.add_argument("--out", dest="output", required=True)
    convert.add_argument("--to", dest="to_format", required=True,
                         choices=["functional", "turtle"])

    render = sub.add_parser("render", help="convert a class expression")
    render.add_argument("--expr", required=True)
    render.add_argument("--from", dest="from_syntax", required=True,
                        choices=["manchester", "dl"])
    render.add_argument("--to", dest="to_syntax", required=True,
                        choices=["manchester", "dl", "sparql"])
    render.add_argument("--prefix", action="append", default=[],
                        metavar="NAME=NS")
    render.add_argument("--default-ns", dest="default_ns")

    reason = sub.add_parser("reason", help="retrieve instances of an expression")
    reason.add_argument("--in", dest="input", required=True)
    reason.add_argument("--query", required=True)
    reason.add_argument("--syntax", default="manchester",
                        choices=["manchester", "dl"])
    reason.add_argument("--no-hierarchy", action="store_true")
    reason.add_argument("--no-vacuous-forall", action="store_true")

    hierarchy = sub.add_parser("hierarchy", help="query the class hierarchy")
    hierarchy.add_argument("--in", dest="input", required=True)
    hierarchy.add_argument("--class", dest="class_name", required=True)
    hierarchy.add_argument("--direction", required=True,
                           choices=["sub", "super", "equiv"])
    hierarchy.add_argument("--direct", action="store_true")

    stats = sub.add_parser("stats", help="signature counts")
    stats.add_argument("--in", dest="input", required=True)

    ebr_train = sub.add_parser("ebr-train", help="train the embedding reasoner")
    ebr_train.add_argument("--in", dest="input", required=True)
    ebr_train.add_argument("--out", dest="output", required=True)
    ebr_train.add_argument("--seed", type=int, default=0)
    ebr_train.add_argument("--dim", type=int, default=32)
    ebr_train.add_argument("--epochs", type=int, default=200)

    ebr_query = sub.add_parser("ebr-query", help="approximate retrieval")
    ebr_query.add_argument("--model", required=True)
    ebr_query.add_argument("--in", dest="input", required=True)
    ebr_query.add_argument("--query", required=True)
    ebr_query.add_argument("--gamma", type=float, default=0.5)
    ebr_query.add_argument("--syntax", default="manchester",
                           choices=["manchester", "dl"])

    generate = sub.add_parser("generate", help="build an ontology from text")
    generate.add_argument("--text", required=True)
    generate.add_argument("--out", dest="output", required=True)
    generate.add_argument("--mock", help="recorded transcript instead of HTTP")

    swrl = sub.add_parser("swrl-parse", help="parse a rule string")
    swrl.add_argument("--rule", required=True)
    swrl.add_argument("--prefix", action="append", default=[],
                      metavar="NAME=NS")
    swrl.add_argument("--default-ns", dest="default_ns",
                      default="http://example.org/default#")

    return parser


def _context_from_flags(args) -> PrefixContext:
    ctx = PrefixContext(default_ns=args.default_ns)
    for binding in args.prefix:
        name, sep, ns = binding.partition("=")
        if not sep:
            raise OwlkitError(f"bad --prefix binding {binding!r}, want NAME=NS")
        ctx.prefixes[name] = ns
    return ctx


def _parse_expression(text: str, syntax: str, ctx: PrefixContext):
    return (parse_manchester if syntax == "manchester" else parse_dl)(text, ctx)


def _print_sorted_iris(entities) -> None:
    for iri_text in sorted(e.iri.text for e in entities):
        print(iri_text)


def cmd_convert(args) -> int:
    onto = load_ontology(args.input, args.from_format)
    onto.save(args.output, args.to_format)
    return 0


def cmd_render(args) -> int:
    ctx = _context_from_flags(args)
    ce = _parse_expression(args.expr, args.from_syntax, ctx)
    if args.to_syntax == "manchester":
        print(render_manchester(ce, ctx))
    elif args.to_syntax == "dl":
        print(render_dl(ce, ctx))
    else:
        print(to_sparql(ce).text)
    return 0


def cmd_reason(args) -> int:
    onto = load_ontology(args.input)
    ctx = PrefixContext.from_ontology(onto)
    ce = _parse_expression(args.query, args.syntax, ctx)
    config = ReasonerConfig(infer_hierarchy=not args.no_hierarchy,
                            universal_vacuous=not args.no_vacuous_forall)
    reasoner = StructuralReasoner(onto, config)
    _print_sorted_iris(reasoner.instances(ce))
    return 0


def cmd_hierarchy(args) -> int:
    onto = load_ontology(args.input)
    ctx = PrefixContext.from_ontology(onto)
    name = args.class_name
    if name.startswith("<") and name.endswith(">"):
        from .model import IRI
        cls = OWLClass(IRI(name[1:-1]))
    elif ":" in name:
        prefix, _, local = name.partition(":")
        cls = OWLClass(ctx.resolve_prefixed(prefix, local))
    else:
        cls = OWLClass(ctx.resolve_bare(name))
    reasoner = StructuralReasoner(onto)
    if args.direction == "sub":
        result = sub_classes(reasoner.snapshot, cls, args.direct)
    elif args.direction == "super":
        result = super_classes(reasoner.snapshot, cls, args.direct)
    else:
        result = equivalent_classes(reasoner.snapshot, cls)
    _print_sorted_iris(result)
    return 0


def cmd_stats(args) -> int:
    onto = load_ontology(args.input)
    print(f"classes: {len(onto.classes_in_signature())}")
    print(f"object properties: {len(onto.object_properties_in_signature())}")
    print(f"data properties: {len(onto.data_properties_in_signature())}")
    print(f"individuals: {len(onto.individuals_in_signature())}")
    print(f"axioms: {len(onto)}")
    return 0


def cmd_ebr_train(args) -> int:
    onto = load_ontology(args.input)
    triples, skipped = extract_triples(onto)
    if skipped:
        print(f"skipped {skipped} complex-class assertion(s)", file=sys.stderr)
    config = TrainingConfig(dim=args.dim, epochs=args.epochs, seed=args.seed)
    model, losses = train(triples, config)
    model.save(args.output)
    if losses:
        print(f"mean loss: first epoch {losses[0]:.6f}, "
              f"last epoch {losses[-1]:.6f}", file=sys.stderr)
    return 0


def cmd_ebr_query(args) -> int:
    model = EmbeddingModel.load(args.model)
    onto = load_ontology(args.input)
    ctx = PrefixContext.from_ontology(onto)
    ce = _parse_expression(args.query, args.syntax, ctx)
    universe = onto.individuals_in_signature()
    result = retrieve(model, ce, universe, gamma=args.gamma,
                      data_values=data_index_of(onto))
    _print_sorted_iris(result)
    return 0


def cmd_generate(args) -> int:
    with open(args.text, "r", encoding="utf-8") as fh:
        text = fh.read()
    config = GenerationConfig()
    if args.mock:
        client = MockClient.from_transcript(args.mock)
    else:
        client = HttpChatClient(model=config.model)
    onto = generate_ontology(text, client, config)
    onto.save(args.output, "functional")
    return 0


def cmd_swrl_parse(args) -> int:
    ctx = _context_from_flags(args)
    rule = parse_swrl(args.rule, ctx)
    print(render_swrl(rule, ctx))
    return 0


_COMMANDS = {
    "convert": cmd_convert,
    "render": cmd_render,
    "reason": cmd_reason,
    "hierarchy": cmd_hierarchy,
    "stats": cmd_stats,
    "ebr-train": cmd_ebr_train,
    "ebr-query": cmd_ebr_query,
    "generate": cmd_generate,
    "swrl-parse": cmd_swrl_parse,
}


def run(argv: list[str]) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (OwlkitError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
