"""Declarative build manifests.

A manifest is ``key: value`` lines; ``#`` starts a comment line::

    kind: assertion
    policy: content <http://example.org/ovopub>
    creator: <https://orcid.org/0000-0000-0000-0000>
    creator: "A. Curator"
    date: 2013-06-01T12:00:00Z
    rights: <http://creativecommons.org/licenses/by/4.0/>
    label: "Protein interaction"@en
    triple: <http://example.org/a> <http://example.org/p> <http://example.org/b>

Records take one or more ``triple:`` lines, collections ``member:`` lines.
``policy`` is ``explicit <iri>``, ``content <base>`` or ``random <base>``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .builder import (BuildError, ContentAddressed, Explicit, IriPolicy, Random, build_assertion, build_collection,
                      build_record)
from .model import OvopubGraph, OvopubKind, Provenance
from .nquads import ParseError, _LineReader, parse_term
from .terms import Iri, Literal, Triple

_SINGLE = ("kind", "policy", "date", "rights", "label", "identifier", "description")
_REPEATED = ("creator", "triple", "member")


class ManifestError(ParseError):
    pass


@dataclass
class Manifest:
    kind: OvopubKind
    policy: tuple[str, Iri]
    creators: list = field(default_factory=list)
    date: str = ""
    rights: Optional[Iri] = None
    label: Optional[Literal] = None
    identifier: Optional[str] = None
    description: Optional[Literal] = None
    triples: list[Triple] = field(default_factory=list)
    members: list[Iri] = field(default_factory=list)

    def provenance(self) -> Provenance:
        return Provenance(self.creators, self.date, self.rights, self.label,
                          self.identifier, self.description)

    def iri_policy(self, seed: Optional[int] = None) -> IriPolicy:
        mode, iri = self.policy
        if mode == "explicit":
            return Explicit(iri)
        if mode == "content":
            return ContentAddressed(iri)
        if seed is None:
            raise BuildError("random IRI policy needs a seed")
        return Random(iri, random.Random(seed))


def _triple(value: str, lineno: int) -> Triple:
    reader = _LineReader(value, lineno, strict=True)
    terms = []
    while True:
        reader.skip_ws()
        if reader.at_end():
            break
        terms.append(reader.read_term("a term", literal_ok=True))
    if len(terms) != 3:
        raise ManifestError(lineno, 1, f"triple needs 3 terms, got {len(terms)}")
    if not isinstance(terms[0], Iri) or not isinstance(terms[1], Iri):
        raise ManifestError(lineno, 1, "triple subject and predicate must be IRIs")
    return Triple(*terms)


def _iri(value: str, lineno: int) -> Iri:
    term = parse_term(value, lineno)
    if not isinstance(term, Iri):
        raise ManifestError(lineno, 1, "expected an IRI")
    return term


def parse_manifest(text: str) -> Manifest:
    seen: dict[str, int] = {}
    fields: dict = {"creators": [], "triples": [], "members": []}
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        key, value = key.strip().lower(), value.strip()
        if not sep or key not in _SINGLE + _REPEATED:
            raise ManifestError(lineno, 1, f"unknown manifest line {line!r}")
        if key in _SINGLE:
            if key in seen:
                raise ManifestError(lineno, 1, f"{key} given twice (first on line {seen[key]})")
            seen[key] = lineno
        try:
            if key == "kind":
                try:
                    fields["kind"] = OvopubKind(value.lower())
                except ValueError:
                    raise ManifestError(lineno, 1, f"unknown kind {value!r}") from None
            elif key == "policy":
                mode, _, arg = value.partition(" ")
                if mode not in ("explicit", "content", "random"):
                    raise ManifestError(lineno, 1, f"unknown IRI policy {mode!r}")
                fields["policy"] = (mode, _iri(arg, lineno))
            elif key == "creator":
                term = parse_term(value, lineno)
                fields["creators"].append(term)
            elif key == "date":
                fields["date"] = value.strip('"')
            elif key == "rights":
                fields["rights"] = _iri(value, lineno)
            elif key in ("label", "description"):
                term = parse_term(value, lineno)
                if not isinstance(term, Literal):
                    raise ManifestError(lineno, 1, f"{key} must be a literal")
                fields[key] = term
            elif key == "identifier":
                term = parse_term(value, lineno) if value.startswith('"') else Literal(value)
                fields["identifier"] = term.lexical
            elif key == "triple":
                fields["triples"].append(_triple(value, lineno))
            elif key == "member":
                fields["members"].append(_iri(value, lineno))
        except ManifestError:
            raise
        except ParseError as exc:
            raise ManifestError(exc.line, exc.column, exc.reason) from None
    for required in ("kind", "policy", "date", "rights"):
        if required not in fields:
            raise ManifestError(0, 0, f"missing required field {required!r}")
    if not fields["creators"]:
        raise ManifestError(0, 0, "missing required field 'creator'")
    kind = fields["kind"]
    if kind is OvopubKind.ASSERTION and len(fields["triples"]) != 1:
        raise ManifestError(0, 0, "an assertion manifest needs exactly one triple")
    if kind is OvopubKind.RECORD and not fields["triples"]:
        raise ManifestError(0, 0, "a record manifest needs at least one triple")
    if kind is OvopubKind.COLLECTION and (not fields["members"] or fields["triples"]):
        raise ManifestError(0, 0, "a collection manifest needs member lines and no triples")
    if kind is not OvopubKind.COLLECTION and fields["members"]:
        raise ManifestError(0, 0, f"member lines are not allowed in a {kind.value} manifest")
    return Manifest(**fields)


def build_from_manifest(manifest: Manifest, seed: Optional[int] = None) -> OvopubGraph:
    """Run the builder the manifest describes. Raises BuildError/ValueError on bad content."""
    prov = manifest.provenance()
    policy = manifest.iri_policy(seed)
    if manifest.kind is OvopubKind.ASSERTION:
        return build_assertion(manifest.triples[0], prov, policy)
    if manifest.kind is OvopubKind.RECORD:
        return build_record(manifest.triples, prov, policy)
    return build_collection(manifest.members, prov, policy)
