"""Construct conformant ovopubs and the chaining/aggregation composites."""
from __future__ import annotations

import hashlib
import random
import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .model import (
    AssertionPayload,
    CollectionPayload,
    OvopubGraph,
    OvopubKind,
    Provenance,
    RecordPayload,
    RecordStatement,
    canonical_quads,
    connected_components,
)
from .nquads import serialize_quad
from .terms import Iri, Literal, Quad, Triple
from .vocab import AGGREGATES, GENID_MARKER, RDF_OBJECT, RDF_PREDICATE, RDF_SUBJECT, RDF_TYPE, RDFS_MEMBER


class BuildError(ValueError):
    """Raised when builder input cannot produce a conformant ovopub."""

    def __init__(self, message: str, component_count: Optional[int] = None):
        super().__init__(message)
        self.component_count = component_count


# -- IRI minting -------------------------------------------------------------

@dataclass(frozen=True)
class Explicit:
    """Use exactly this IRI."""

    iri: Iri

    def mint(self, kind: OvopubKind, payload_lines: Sequence[str]) -> Iri:
        return self.iri if isinstance(self.iri, Iri) else Iri(self.iri)


@dataclass(frozen=True)
class ContentAddressed:
    """``base/<sha256 hex>`` over the ovopub kind and its canonical payload.

    Provenance is not hashed, so the same content republished by someone
    else mints the same IRI.
    """

    base: Iri

    def mint(self, kind: OvopubKind, payload_lines: Sequence[str]) -> Iri:
        h = hashlib.sha256(kind.value.encode("utf-8") + b"\n")
        for line in sorted(payload_lines):
            h.update(line.encode("utf-8") + b"\n")
        return Iri(f"{_base(self.base)}/{h.hexdigest()}")


@dataclass(frozen=True)
class Random:
    """``base/<128-bit random hex>`` drawn from a caller-supplied generator."""

    base: Iri
    rng: random.Random = field(compare=False)

    def mint(self, kind: OvopubKind, payload_lines: Sequence[str]) -> Iri:
        return Iri(f"{_base(self.base)}/{self.rng.getrandbits(128):032x}")


IriPolicy = Union[Explicit, ContentAddressed, Random]


def _base(base) -> str:
    value = base.value if isinstance(base, Iri) else str(base)
    return value.rstrip("/")


def _line(t: Triple) -> str:
    return serialize_quad(Quad(t.subject, t.predicate, t.object))


def _check_triple(t: Triple):
    s, p, o = t
    if not isinstance(s, Iri):
        raise BuildError(f"subject must be an IRI, got {s!r}")
    if not isinstance(p, Iri):
        raise BuildError(f"predicate must be an IRI, got {p!r}")
    if not isinstance(o, (Iri, Literal)):
        raise BuildError(f"object must be an IRI or literal, got {o!r}")
    for term in (s, p, o):
        if isinstance(term, Iri) and GENID_MARKER in term.value:
            raise BuildError(f"blank node (skolem) term not allowed: {term.value}")


def _finish(x: Iri, kind: OvopubKind, body: list[Triple], prov: Provenance, payload) -> OvopubGraph:
    triples = [Triple(x, RDF_TYPE, kind.type_iri), *body, *prov.triples(x)]
    quads = canonical_quads(Quad(s, p, o, x) for s, p, o in triples)
    return OvopubGraph(x, kind, quads, payload, prov)


# -- the three kinds ---------------------------------------------------------

def build_assertion(triple: Triple, prov: Provenance, policy: IriPolicy) -> OvopubGraph:
    """Assertion ovopub: the triple, plus its reification from the ovopub IRI."""
    triple = Triple(*triple)
    _check_triple(triple)
    x = policy.mint(OvopubKind.ASSERTION, [_line(triple)])
    s, p, o = triple
    body = [
        Triple(x, RDF_SUBJECT, s),
        Triple(x, RDF_PREDICATE, p),
        Triple(x, RDF_OBJECT, o),
        triple,
    ]
    return _finish(x, OvopubKind.ASSERTION, body, prov, AssertionPayload(triple))


def statement_node(x: Iri, ordinal: int) -> Iri:
    return Iri(f"{x.value}#st{ordinal}")


def record_body(x: Iri, triples: Sequence[Triple]) -> tuple[list[Triple], RecordPayload]:
    """Member links, statement-node reifications and raw triples for a record.

    Does not check connectivity.
    """
    body, statements = [], []
    for i, t in enumerate(triples, start=1):
        node = statement_node(x, i)
        body += [
            Triple(x, RDFS_MEMBER, node),
            Triple(node, RDF_SUBJECT, t.subject),
            Triple(node, RDF_PREDICATE, t.predicate),
            Triple(node, RDF_OBJECT, t.object),
            t,
        ]
        statements.append(RecordStatement(node, t))
    return body, RecordPayload(tuple(statements))


def build_record(triples: Sequence[Triple], prov: Provenance, policy: IriPolicy) -> OvopubGraph:
    """Record ovopub over one connected network of statements.

    Each statement gets a skolem node ``<ovopub>#st<i>`` linked by
    rdfs:member and reified with rdf:subject/predicate/object.
    """
    unique = list(dict.fromkeys(Triple(*t) for t in triples))
    if not unique:
        raise BuildError("a record needs at least one statement")
    if len(unique) < len(triples):
        warnings.warn(f"dropped {len(triples) - len(unique)} duplicate statement(s)", stacklevel=2)
    for t in unique:
        _check_triple(t)
    n = connected_components(unique)
    if n != 1:
        raise BuildError(f"record statements form {n} connected components, expected 1",
                         component_count=n)
    x = policy.mint(OvopubKind.RECORD, [_line(t) for t in unique])
    body, payload = record_body(x, unique)
    return _finish(x, OvopubKind.RECORD, body, prov, payload)


def build_collection(members: Sequence[Iri], prov: Provenance, policy: IriPolicy) -> OvopubGraph:
    """Collection ovopub linking each member with rdfs:member."""
    members = [m if isinstance(m, Iri) else Iri(m) for m in members]
    if not members:
        raise BuildError("a collection needs at least one member")
    unique = sorted(set(members), key=lambda m: m.value)
    if len(unique) < len(members):
        warnings.warn(f"dropped {len(members) - len(unique)} duplicate member(s)", stacklevel=2)
    x = policy.mint(OvopubKind.COLLECTION, [m.n3() for m in unique])
    body = [Triple(x, RDFS_MEMBER, m) for m in unique]
    return _finish(x, OvopubKind.COLLECTION, body, prov, CollectionPayload(tuple(unique)))


# -- composite patterns ------------------------------------------------------

@dataclass(frozen=True)
class ChainSpec:
    left: Iri
    predicate: Iri
    right: Iri


@dataclass(frozen=True)
class AggregationSpec:
    canonical: Triple
    sources: tuple[Iri, ...]
    link_predicate: Iri = AGGREGATES

    def __post_init__(self):
        sources = tuple(self.sources)
        if not sources:
            raise BuildError("aggregation needs at least one source")
        if len(set(sources)) != len(sources):
            raise BuildError("aggregation sources must be pairwise distinct")
        object.__setattr__(self, "sources", sources)


def chain(spec: ChainSpec, prov: Provenance, policy: IriPolicy) -> OvopubGraph:
    """Assertion linking two ovopubs; carries its own provenance only."""
    if spec.left == spec.right:
        warnings.warn(f"chain links {spec.left.value} to itself", stacklevel=2)
    return build_assertion(Triple(spec.left, spec.predicate, spec.right), prov, policy)


def aggregate(spec: AggregationSpec, prov: Provenance, policy: IriPolicy,
              record_policy: Optional[IriPolicy] = None) -> tuple[OvopubGraph, OvopubGraph]:
    """Assertion for the canonical statement plus a star record linking it to every source.

    ``record_policy`` defaults to ``policy``; an :class:`Explicit` policy cannot
    name both graphs, so it requires a separate ``record_policy``.
    """
    if record_policy is None:
        if isinstance(policy, Explicit):
            raise BuildError("an Explicit policy needs a separate record_policy")
        record_policy = policy
    assertion = build_assertion(spec.canonical, prov, policy)
    star = [Triple(assertion.iri, spec.link_predicate, src) for src in spec.sources]
    record = build_record(star, prov, record_policy)
    return assertion, record

