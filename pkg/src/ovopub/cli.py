"""``ovo`` command line: build, validate, hash, verify, closure, query, dedupe, exemplar."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .builder import BuildError
from .exemplar import CORPUS_README, build_exemplar
from .integrity import hash_ovopub, read_sidecar, sidecar_path, write_sidecar
from .manifest import ManifestError, build_from_manifest, parse_manifest
from .model import ValidationReport, Violation, RuleCode, group_by_graph, validate
from .nquads import ParseError, parse_nquads, serialize_nquads
from .querylang import QuerySyntaxError, format_bindings, parse_query
from .store import BOTH, FORWARD, INVERSE, StoreError, bgp_query, find_cardinal_groups, load, membership_closure
from .terms import Iri, TermError

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_MISMATCH = 4

log = logging.getLogger("ovopub")


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise CliError(EXIT_USAGE, f"{path}: not UTF-8 text ({exc.reason})")
    except OSError as exc:
        raise CliError(EXIT_IO, f"{path}: {exc.strerror or exc}")


def _read_quads(path: str):
    text = _read_text(path)
    try:
        return parse_nquads(text)
    except ParseError as exc:
        raise CliError(EXIT_USAGE, f"{path}: {exc}")


def _write(path: Path, text: str):
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise CliError(EXIT_IO, f"{path}: {exc.strerror or exc}")


def _iri_arg(value: str) -> Iri:
    value = value.strip()
    if value.startswith("<") and value.endswith(">"):
        value = value[1:-1]
    try:
        return Iri(value)
    except TermError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _load_store(paths):
    quads = []
    for path in paths:
        quads += _read_quads(path)
    try:
        return load(quads)
    except StoreError as exc:
        raise CliError(EXIT_USAGE, str(exc))


def _named_graphs(quads):
    groups = group_by_graph(quads)
    default = groups.pop(None, [])
    return default, sorted(groups.items(), key=lambda kv: kv[0].value)


# -- commands ------------------------------------------------------------------

def cmd_build(args) -> int:
    try:
        manifest = parse_manifest(_read_text(args.manifest))
        seed = int(args.seed, 16) if args.seed is not None else None
        graph = build_from_manifest(manifest, seed)
    except ManifestError as exc:
        raise CliError(EXIT_USAGE, f"{args.manifest}: {exc}")
    except BuildError as exc:
        raise CliError(EXIT_USAGE, f"{args.manifest}: {exc}")
    except ValueError as exc:
        raise CliError(EXIT_USAGE, f"{args.manifest}: {exc}")
    out = Path(args.out)
    _write(out, serialize_nquads(graph.quads, sorted=True))
    try:
        write_sidecar(sidecar_path(out), hash_ovopub(graph))
    except OSError as exc:
        raise CliError(EXIT_IO, f"{sidecar_path(out)}: {exc.strerror or exc}")
    print(graph.iri.value)
    return EXIT_OK


def cmd_validate(args) -> int:
    reports = []
    for path in args.paths:
        default, graphs = _named_graphs(_read_quads(path))
        for name, quads in graphs:
            reports.append(validate(quads, name))
        if default:
            stray = ValidationReport(None)
            for q in default:
                stray.violations.append(Violation(
                    RuleCode.DefaultGraphStatement,
                    "statement is in the default graph, not an ovopub graph", q))
            reports.append(stray)
    if args.json:
        records = [r for rep in reports for r in rep.to_records()]
        if records:
            print(json.dumps(records, indent=2, ensure_ascii=False))
    else:
        for rep in reports:
            for line in rep.to_lines():
                print(line)
    return EXIT_INVALID if any(not r.ok for r in reports) else EXIT_OK


def cmd_hash(args) -> int:
    for path in args.paths:
        default, graphs = _named_graphs(_read_quads(path))
        if default:
            log.warning("%s: %d default-graph statement(s) not hashed", path, len(default))
        for name, quads in graphs:
            print(f"{hash_ovopub(quads).render()}\t{name.value}")
    return EXIT_OK


def cmd_verify(args) -> int:
    _, graphs = _named_graphs(_read_quads(args.path))
    side = args.sidecar or sidecar_path(args.path)
    try:
        expected = read_sidecar(side)
    except OSError as exc:
        raise CliError(EXIT_IO, f"{side}: {exc.strerror or exc}")
    except ValueError as exc:
        raise CliError(EXIT_USAGE, f"{side}: {exc}")
    if None in expected:
        if len(expected) != 1 or len(graphs) != 1:
            raise CliError(EXIT_MISMATCH,
                           f"{side}: a bare digest needs a file with exactly one graph "
                           f"(found {len(graphs)})")
        expected = {graphs[0][0]: expected[None]}
    ok = True
    actual = dict(graphs)
    for name in sorted(set(actual) | set(expected), key=lambda i: i.value):
        if name not in expected:
            print(f"UNLISTED\t{name.value}")
            ok = False
        elif name not in actual:
            print(f"MISSING\t{name.value}")
            ok = False
        else:
            digest = hash_ovopub(actual[name])
            if digest != expected[name]:
                print(f"MISMATCH\t{name.value}\t{digest.render()}")
                ok = False
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_closure(args) -> int:
    store = _load_store(args.paths)
    scope = membership_closure(store, args.roots, direction=args.direction)
    for iri in sorted(scope.resources | scope.graphs, key=lambda i: i.value):
        print(f"G\t{iri.value}" if iri in scope.graphs else iri.value)
    return EXIT_OK


def cmd_query(args) -> int:
    text = _read_text(args.query)
    try:
        query = parse_query(text)
    except QuerySyntaxError as exc:
        raise CliError(EXIT_USAGE, f"{args.query}: {exc}")
    store = _load_store(args.paths)
    sources = query.sources + list(args.roots or [])
    scope = membership_closure(store, sources) if sources else None
    bindings = bgp_query(store, query.patterns, scope)
    sys.stdout.write(format_bindings(bindings, query.variables()))
    return EXIT_OK


def cmd_dedupe(args) -> int:
    store = _load_store(args.paths)
    for key, names in find_cardinal_groups(store):
        print(f"{key.render()}\t{','.join(n.value for n in names)}")
    return EXIT_OK


def cmd_exemplar(args) -> int:
    out = Path(args.out)
    for name, graph in build_exemplar().items():
        _write(out / f"{name}.nq", serialize_nquads(graph.quads, sorted=True))
        _write(out / f"{name}.sha256", hash_ovopub(graph).render() + "\n")
    _write(out / "README.md", CORPUS_README)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ovo", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=["nquads"], default="nquads",
                       help="serialization of input and output files")
        p.set_defaults(func=func)
        return p

    p = add("build", cmd_build, "build an ovopub from a manifest")
    p.add_argument("manifest")
    p.add_argument("--out", required=True, help="N-Quads output path; a .sha256 sidecar is written next to it")
    p.add_argument("--seed", help="hex seed for the random IRI policy")

    p = add("validate", cmd_validate, "check every graph against the ovopub rules")
    p.add_argument("paths", nargs="+")
    p.add_argument("--json", action="store_true", help="print a structured report")

    p = add("hash", cmd_hash, "print the digest of each graph")
    p.add_argument("paths", nargs="+")

    p = add("verify", cmd_verify, "check graphs against a digest sidecar")
    p.add_argument("path")
    p.add_argument("sidecar", nargs="?", help="defaults to <name>.sha256")

    p = add("closure", cmd_closure, "print the membership closure of the given roots")
    p.add_argument("paths", nargs="+")
    p.add_argument("--from", dest="roots", action="append", type=_iri_arg, required=True,
                   metavar="IRI", help="root IRI (repeatable)")
    p.add_argument("--direction", choices=[FORWARD, INVERSE, BOTH], default=FORWARD)

    p = add("query", cmd_query, "run a pattern query, optionally scoped")
    p.add_argument("paths", nargs="+")
    p.add_argument("-q", "--query", required=True, help="query file in the pattern language")
    p.add_argument("--from", dest="roots", action="append", type=_iri_arg, metavar="IRI",
                   help="extra FROM root (repeatable)")

    p = add("dedupe", cmd_dedupe, "group assertion ovopubs by cardinal key")
    p.add_argument("paths", nargs="+")

    p = add("exemplar", cmd_exemplar, "write the six-ovopub exemplar corpus")
    p.add_argument("--out", required=True)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="ovo: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"ovo: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
