/**
 * Scripting bindings over the owlkit core.
 *
 * The classic five-line workflow runs verbatim:
 *
 *     const onto = new Ontology("path/to/father_ontology.owl");
 *     const male = new OWLClass("http://example.com/father#male");
 *     const alkid = new OWLNamedIndividual("http://example.com/father#alkid");
 *     onto.add_axiom(new OWLClassAssertionAxiom(alkid, male));
 *     onto.save("updated_father_ontology.owl", "functional");
 *
 * There is no ontology logic on this side: documents are held in the
 * functional-syntax wire format and every operation (canonicalization,
 * equality, conversion, reasoning) is delegated to the CLI, so bound
 * results are byte-identical to the CLI's.
 */
import { spawnSync } from "node:child_process";
import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";
import { fileURLToPath } from "node:url";

const HERE = path.dirname(fileURLToPath(import.meta.url));
// src/ (or dist/) -> frontend/ -> repository root, where the core lives
const CORE_SRC = path.resolve(HERE, "..", "..", "src");

const SUPPORTED_FORMATS = ["functional", "turtle"];

/** Run an owlkit CLI subcommand; throws the CLI's stderr on failure. */
export function runCli(args: string[]): string {
  const python = process.env.OWLKIT_PYTHON ?? "python3";
  const pythonPath = [process.env.OWLKIT_PYTHONPATH ?? CORE_SRC,
                      process.env.PYTHONPATH ?? ""]
    .filter((p) => p.length > 0)
    .join(path.delimiter);
  const result = spawnSync(python, ["-m", "owlkit", ...args], {
    encoding: "utf-8",
    env: { ...process.env, PYTHONPATH: pythonPath },
  });
  if (result.error) {
    throw result.error;
  }
  if (result.status !== 0) {
    throw new Error(result.stderr.trim() || `owlkit exited ${result.status}`);
  }
  return result.stdout;
}

function withTempDir<T>(body: (dir: string) => T): T {
  const dir = fs.mkdtempSync(path.join(os.tmpdir(), "owlkit-bindings-"));
  try {
    return body(dir);
  } finally {
    fs.rmSync(dir, { recursive: true, force: true });
  }
}

/** Canonicalize a functional-syntax document through `owlkit convert`. */
function canonicalize(document: string, to: string = "functional"): string {
  return withTempDir((dir) => {
    const input = path.join(dir, "in.ofn");
    const output = path.join(dir, "out.ofn");
    fs.writeFileSync(input, document, "utf-8");
    runCli(["convert", "--in", input, "--from", "functional",
            "--to", to, "--out", output]);
    return fs.readFileSync(output, "utf-8");
  });
}

export class OWLClass {
  constructor(readonly iri: string) {}
}

export class OWLNamedIndividual {
  constructor(readonly iri: string) {}
}

export class OWLClassAssertionAxiom {
  constructor(readonly individual: OWLNamedIndividual,
              readonly cls: OWLClass) {}

  /** The axiom in the functional-syntax wire format (class first). */
  toFunctional(): string {
    return `ClassAssertion(<${this.cls.iri}> <${this.individual.iri}>)`;
  }
}

export class Ontology {
  private canonical: string;
  private closed = false;

  constructor(pathOrText: string, options?: { text?: boolean }) {
    const document = options?.text
      ? pathOrText
      : fs.readFileSync(pathOrText, "utf-8");
    this.canonical = canonicalize(document);
  }

  private guard(): void {
    if (this.closed) {
      throw new Error("ontology handle is closed");
    }
  }

  /** Current canonical functional-syntax text of the ontology. */
  get text(): string {
    this.guard();
    return this.canonical;
  }

  /**
   * Add an axiom; returns false when the core already holds a structurally
   * equal one.  The axiom line is spliced into the document and the result
   * re-canonicalized, so set semantics come from the core, not from here.
   */
  add_axiom(axiom: OWLClassAssertionAxiom): boolean {
    this.guard();
    const closing = this.canonical.lastIndexOf("\n)");
    if (closing < 0) {
      throw new Error("malformed ontology document");
    }
    const spliced = this.canonical.slice(0, closing)
      + "\n" + axiom.toFunctional()
      + this.canonical.slice(closing);
    const updated = canonicalize(spliced);
    if (updated === this.canonical) {
      return false;
    }
    this.canonical = updated;
    return true;
  }

  /** Write the ontology; rdf_format is "functional" or "turtle". */
  save(filePath: string, rdf_format: string = "functional"): void {
    this.guard();
    if (!SUPPORTED_FORMATS.includes(rdf_format)) {
      throw new Error(
        `unsupported rdf_format ${JSON.stringify(rdf_format)}; ` +
        `supported formats: ${SUPPORTED_FORMATS.join(", ")}`);
    }
    const payload = rdf_format === "functional"
      ? this.canonical
      : canonicalize(this.canonical, "turtle");
    fs.writeFileSync(filePath, payload, "utf-8");
  }

  close(): void {
    this.closed = true;
  }

  /** Internal: run a CLI subcommand against the current document. */
  withDocument<T>(body: (documentPath: string) => T): T {
    this.guard();
    return withTempDir((dir) => {
      const file = path.join(dir, "current.ofn");
      fs.writeFileSync(file, this.canonical, "utf-8");
      return body(file);
    });
  }
}

export class Reasoner {
  constructor(private readonly ontology: Ontology) {}

  /**
   * Instances of a class expression, sorted by IRI — exactly the CLI's
   * `reason` output on the ontology's current state.
   */
  instances(expression: string, syntax: string = "manchester"): string[] {
    return this.ontology.withDocument((file) => {
      const out = runCli(["reason", "--in", file, "--query", expression,
                          "--syntax", syntax]);
      return out.split("\n").filter((line) => line.length > 0);
    });
  }
}
