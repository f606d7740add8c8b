"""CLI: golden outputs, exit-code contract, thin-adapter equivalence."""
from owlkit.cli import run

from conftest import FAMILY_PATH, GOLDEN_DIR

FAMILY = str(FAMILY_PATH)


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGolden:
    def test_reason_male(self, capsys):
        code, out, err = invoke(capsys, "reason", "--in", FAMILY,
                                "--query", "male", "--syntax", "manchester")
        assert code == 0
        assert out == (GOLDEN_DIR / "reason_male.txt").read_text()

    def test_render_manchester_to_dl(self, capsys):
        code, out, _ = invoke(capsys, "render",
                              "--expr", "male and (hasChild some person)",
                              "--from", "manchester", "--to", "dl",
                              "--default-ns", "http://example.com/family#")
        assert code == 0
        assert out == (GOLDEN_DIR / "render_dl.txt").read_text()
        assert out.strip() == "male ⊓ (∃ hasChild.person)"

    def test_stats(self, capsys):
        code, out, _ = invoke(capsys, "stats", "--in", FAMILY)
        assert code == 0
        assert out == (GOLDEN_DIR / "stats_family.txt").read_text()

    def test_convert_functional_is_byte_stable(self, capsys, tmp_path):
        out_path = tmp_path / "fam.ofn"
        code, _, _ = invoke(capsys, "convert", "--in", FAMILY,
                            "--from", "functional",
                            "--to", "functional", "--out", str(out_path))
        assert code == 0
        assert out_path.read_bytes() == FAMILY_PATH.read_bytes()

    def test_convert_turtle_matches_golden(self, capsys, tmp_path):
        out_path = tmp_path / "fam.ttl"
        code, _, _ = invoke(capsys, "convert", "--in", FAMILY,
                            "--from", "functional",
                            "--to", "turtle", "--out", str(out_path))
        assert code == 0
        assert out_path.read_bytes() == (GOLDEN_DIR / "family.ttl").read_bytes()


class TestExitCodes:
    def test_success_is_zero(self, capsys):
        code, _, _ = invoke(capsys, "stats", "--in", FAMILY)
        assert code == 0

    def test_domain_error_is_one(self, capsys):
        code, out, err = invoke(capsys, "reason", "--in", "no-such-file.ofn",
                                "--query", "male")
        assert code == 1
        assert out == ""
        assert "error:" in err

    def test_parse_error_is_one(self, capsys):
        code, _, err = invoke(capsys, "render", "--expr", "male and and",
                              "--from", "manchester", "--to", "dl",
                              "--default-ns", "http://example.com/family#")
        assert code == 1
        assert "error:" in err

    def test_usage_error_is_two(self, capsys):
        code, _, _ = invoke(capsys, "reason", "--in", FAMILY,
                            "--query", "male", "--frobnicate")
        assert code == 2

    def test_unknown_subcommand_is_two(self, capsys):
        code, _, _ = invoke(capsys, "explode")
        assert code == 2


class TestThinAdapter:
    def test_reason_equals_library_output(self, capsys):
        from owlkit.ontology import load_ontology
        from owlkit.reasoner import StructuralReasoner
        from owlkit.syntax import PrefixContext, parse_manchester
        _, out, _ = invoke(capsys, "reason", "--in", FAMILY, "--query",
                           "hasChild some female")
        onto = load_ontology(FAMILY)
        ce = parse_manchester("hasChild some female",
                              PrefixContext.from_ontology(onto))
        expected = StructuralReasoner(onto).instances(ce)
        assert out == "".join(f"{x.iri.text}\n"
                              for x in sorted(expected, key=lambda e: e.iri.text))

    def test_render_sparql_equals_library_text(self, capsys):
        from owlkit.sparql import to_sparql
        from owlkit.syntax import PrefixContext, parse_manchester
        _, out, _ = invoke(capsys, "render", "--expr", "male",
                           "--from", "manchester", "--to", "sparql",
                           "--default-ns", "http://example.com/family#")
        ctx = PrefixContext(default_ns="http://example.com/family#")
        assert out == to_sparql(parse_manchester("male", ctx)).text + "\n"


class TestOtherCommands:
    def test_hierarchy_direct_super(self, capsys):
        code, out, _ = invoke(capsys, "hierarchy", "--in", FAMILY,
                              "--class", "male", "--direction", "super",
                              "--direct")
        assert code == 0
        assert out == "http://example.com/family#person\n"

    def test_hierarchy_sub_of_thing(self, capsys):
        code, out, _ = invoke(capsys, "hierarchy", "--in", FAMILY,
                              "--class", "owl:Thing", "--direction", "sub")
        assert code == 0
        assert "http://example.com/family#person" in out

    def test_hierarchy_equiv(self, capsys, tmp_path):
        doc = ("Prefix(x:=<http://x#>)\nOntology(\n"
               "EquivalentClasses(x:A x:B)\n)\n")
        path = tmp_path / "eq.ofn"
        path.write_text(doc)
        code, out, _ = invoke(capsys, "hierarchy", "--in", str(path),
                              "--class", "x:A", "--direction", "equiv")
        assert code == 0
        assert out == "http://x#B\n"

    def test_render_with_repeatable_prefix_flags(self, capsys):
        code, out, _ = invoke(capsys, "render", "--expr",
                              "a:male and b:tall",
                              "--from", "manchester", "--to", "dl",
                              "--prefix", "a=http://a.example/ns#",
                              "--prefix", "b=http://b.example/ns#")
        assert code == 0
        assert out.strip() == "a:male ⊓ b:tall"

    def test_reason_flags_change_semantics(self, capsys):
        _, with_h, _ = invoke(capsys, "reason", "--in", FAMILY,
                              "--query", "person")
        _, without_h, _ = invoke(capsys, "reason", "--in", FAMILY,
                                 "--query", "person", "--no-hierarchy")
        assert with_h != ""
        assert without_h == ""

    def test_dl_syntax_query(self, capsys):
        code, out, _ = invoke(capsys, "reason", "--in", FAMILY,
                              "--query", "∃ hasChild.female", "--syntax", "dl")
        assert code == 0
        assert out == "http://example.com/family#heinz\n"

    def test_swrl_parse_echo(self, capsys):
        code, out, _ = invoke(capsys, "swrl-parse", "--rule",
                              "male(?x) ^ hasChild(?x, ?y) -> parentOf(?x, ?y)")
        assert code == 0
        assert out.strip() == "male(?x) ^ hasChild(?x, ?y) -> parentOf(?x, ?y)"

    def test_swrl_parse_error(self, capsys):
        code, _, err = invoke(capsys, "swrl-parse", "--rule",
                              "p(?x, ?y) -> q(?z, ?y)")
        assert code == 1
        assert "error:" in err

    def test_ebr_train_and_query(self, capsys, tmp_path):
        model_path = tmp_path / "model.ebr"
        code, out, err = invoke(capsys, "ebr-train", "--in", FAMILY,
                                "--out", str(model_path), "--seed", "7",
                                "--dim", "16", "--epochs", "30")
        assert code == 0
        assert model_path.exists()
        assert "mean loss" in err
        code, out, _ = invoke(capsys, "ebr-query", "--model", str(model_path),
                              "--in", FAMILY, "--query", "male",
                              "--gamma", "0.0")
        assert code == 0
        assert len(out.splitlines()) == 6  # gamma 0 returns the universe

    def test_generate_with_mock(self, capsys, tmp_path, data_dir):
        out_path = tmp_path / "generated.ofn"
        code, _, _ = invoke(capsys, "generate",
                            "--text", str(data_dir / "textgen_input.txt"),
                            "--out", str(out_path),
                            "--mock", str(data_dir / "textgen_transcript.json"))
        assert code == 0
        assert out_path.read_text() == \
            (data_dir / "textgen_golden.ofn").read_text()
