"""Ovopub kinds, provenance, payloads and the conformance validator."""
from __future__ import annotations

import enum
import json
from collections import defaultdict
from dataclasses import dataclass, field
from datetime import datetime
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .terms import Iri, Literal, Quad, Term, Triple, is_datetime_lexical, term_sort_key
from .vocab import (
    ASSERTION_OVOPUB,
    COLLECTION_OVOPUB,
    DC_CREATOR,
    DC_DATE,
    DC_DESCRIPTION,
    DC_IDENTIFIER,
    DC_RIGHTS,
    GENID_MARKER,
    PROVENANCE_PREDICATES,
    RDF_OBJECT,
    RDF_PREDICATE,
    RDF_SUBJECT,
    RDF_TYPE,
    RDFS_LABEL,
    RDFS_MEMBER,
    RECORD_OVOPUB,
    XSD_DATETIME,
    XSD_STRING,
)


class OvopubKind(enum.Enum):
    ASSERTION = "assertion"
    RECORD = "record"
    COLLECTION = "collection"

    @property
    def type_iri(self) -> Iri:
        return _KIND_TYPES[self]

    @classmethod
    def from_type(cls, iri: Iri) -> Optional["OvopubKind"]:
        return _TYPE_KINDS.get(iri)


_KIND_TYPES = {
    OvopubKind.ASSERTION: ASSERTION_OVOPUB,
    OvopubKind.RECORD: RECORD_OVOPUB,
    OvopubKind.COLLECTION: COLLECTION_OVOPUB,
}
_TYPE_KINDS = {v: k for k, v in _KIND_TYPES.items()}


class RuleCode(str, enum.Enum):
    MissingType = "MissingType"
    MultipleTypes = "MultipleTypes"
    UnknownType = "UnknownType"
    MissingCreator = "MissingCreator"
    MissingDate = "MissingDate"
    MultipleDate = "MultipleDate"
    BadDateLexical = "BadDateLexical"
    MissingRights = "MissingRights"
    RightsNotIri = "RightsNotIri"
    AssertionArity = "AssertionArity"
    AssertionRawTripleMissing = "AssertionRawTripleMissing"
    RecordEmpty = "RecordEmpty"
    RecordNotConnected = "RecordNotConnected"
    RecordMemberNotReified = "RecordMemberNotReified"
    CollectionEmpty = "CollectionEmpty"
    CollectionForeignTriple = "CollectionForeignTriple"
    GraphNameMismatch = "GraphNameMismatch"
    DefaultGraphStatement = "DefaultGraphStatement"
    BlankNodePresent = "BlankNodePresent"

    def __str__(self) -> str:
        return self.value


_TYPING_CODES = frozenset({RuleCode.MissingType, RuleCode.MultipleTypes, RuleCode.UnknownType})


class Violation(NamedTuple):
    code: RuleCode
    message: str
    quad: Optional[Quad] = None


@dataclass
class ValidationReport:
    subject: Optional[Iri]
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    @property
    def codes(self) -> list[RuleCode]:
        return [v.code for v in self.violations]

    def add(self, code: RuleCode, message: str, quad: Optional[Quad] = None):
        self.violations.append(Violation(code, message, quad))

    def to_lines(self) -> list[str]:
        """Render as ``CODE<TAB>graph-iri<TAB>message`` lines."""
        name = self.subject.value if self.subject is not None else "-"
        return [f"{v.code}\t{name}\t{v.message}" for v in self.violations]

    def to_records(self) -> list[dict]:
        from .nquads import serialize_quad

        name = self.subject.value if self.subject is not None else None
        return [
            {
                "code": v.code.value,
                "graph": name,
                "message": v.message,
                "quad": serialize_quad(v.quad) if v.quad is not None else None,
            }
            for v in self.violations
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_records(), indent=2, ensure_ascii=False)


class InvalidOvopub(ValueError):
    """Raised when a graph that must be a conformant ovopub is not."""

    def __init__(self, report: ValidationReport):
        codes = ", ".join(sorted({c.value for c in report.codes}))
        super().__init__(f"{report.subject}: not a valid ovopub ({codes})")
        self.report = report


# -- provenance and payloads -------------------------------------------------

Creator = Union[Iri, Literal]


def _as_creator(value) -> Creator:
    if isinstance(value, (Iri, Literal)):
        return value
    if isinstance(value, str):
        return Literal(value)
    raise TypeError(f"creator must be an Iri, Literal or str, not {type(value).__name__}")


def _as_text(value, name: str) -> Optional[Literal]:
    if value is None or isinstance(value, Literal):
        return value
    if isinstance(value, str):
        return Literal(value)
    if isinstance(value, tuple) and len(value) == 2:
        text, lang = value
        return Literal(text, language=lang) if lang else Literal(text)
    raise TypeError(f"{name} must be a Literal, str or (text, language) pair")


@dataclass(frozen=True)
class Provenance:
    """Who made an ovopub, when, and under which license.

    Creators may be IRIs or plain strings; strings become xsd:string literals.
    ``date`` accepts an xsd:dateTime lexical form or a ``datetime``. Creators
    are kept in canonical term order so equal provenance compares equal.
    """

    creators: tuple[Creator, ...]
    date: str
    rights: Iri
    label: Optional[Literal] = None
    identifier: Optional[str] = None
    description: Optional[Literal] = None

    def __post_init__(self):
        creators = self.creators
        if isinstance(creators, (str, Iri, Literal)):
            creators = (creators,)
        creators = tuple(sorted({_as_creator(c) for c in creators}, key=term_sort_key))
        if not creators:
            raise ValueError("provenance needs at least one creator")
        for c in creators:
            if isinstance(c, Literal) and c.datatype != XSD_STRING:
                raise ValueError(f"creator literal must be an xsd:string: {c!r}")
        date = self.date
        if isinstance(date, datetime):
            date = date.isoformat()
        if not is_datetime_lexical(date):
            raise ValueError(f"creation date is not an xsd:dateTime: {date!r}")
        rights = self.rights
        if isinstance(rights, str):
            rights = Iri(rights)
        if not isinstance(rights, Iri):
            raise ValueError("rights must be an IRI")
        object.__setattr__(self, "creators", creators)
        object.__setattr__(self, "date", date)
        object.__setattr__(self, "rights", rights)
        object.__setattr__(self, "label", _as_text(self.label, "label"))
        object.__setattr__(self, "description", _as_text(self.description, "description"))

    def triples(self, subject: Iri) -> list[Triple]:
        out = [Triple(subject, DC_CREATOR, c) for c in self.creators]
        out.append(Triple(subject, DC_DATE, Literal(self.date, XSD_DATETIME)))
        out.append(Triple(subject, DC_RIGHTS, self.rights))
        if self.label is not None:
            out.append(Triple(subject, RDFS_LABEL, self.label))
        if self.identifier is not None:
            out.append(Triple(subject, DC_IDENTIFIER, Literal(self.identifier)))
        if self.description is not None:
            out.append(Triple(subject, DC_DESCRIPTION, self.description))
        return out


@dataclass(frozen=True)
class AssertionPayload:
    triple: Triple


class RecordStatement(NamedTuple):
    node: Iri
    triple: Triple


@dataclass(frozen=True)
class RecordPayload:
    statements: tuple[RecordStatement, ...]

    @property
    def triples(self) -> list[Triple]:
        return [st.triple for st in self.statements]


@dataclass(frozen=True)
class CollectionPayload:
    members: tuple[Iri, ...]


Payload = Union[AssertionPayload, RecordPayload, CollectionPayload]


@dataclass(frozen=True)
class OvopubGraph:
    """A parsed ovopub: its name, kind, quads (canonical order), payload and provenance."""

    iri: Iri
    kind: OvopubKind
    quads: tuple[Quad, ...]
    payload: Payload
    provenance: Provenance

    def __len__(self) -> int:
        return len(self.quads)


def canonical_quads(quads: Iterable[Quad]) -> tuple[Quad, ...]:
    """Deduplicate and order quads by their N-Quads line."""
    from .nquads import serialize_quad

    return tuple(sorted(set(quads), key=serialize_quad))


# -- structure helpers -------------------------------------------------------

def connected_components(triples: Sequence[Triple]) -> int:
    """Number of connected components of the undirected graph whose vertices
    are the subjects and objects of ``triples`` and whose edges are the triples."""
    parent: dict[Term, Term] = {}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for s, _, o in triples:
        parent.setdefault(s, s)
        parent.setdefault(o, o)
        rs, ro = find(s), find(o)
        if rs != ro:
            parent[rs] = ro
    return sum(1 for v in parent if parent[v] == v)


def _is_skolem(term) -> bool:
    return isinstance(term, Iri) and GENID_MARKER in term.value


def _ordinal_key(graph: Iri):
    prefix = graph.value + "#st"

    def key(node: Iri):
        tail = node.value[len(prefix):]
        if node.value.startswith(prefix) and tail.isdigit():
            return (0, int(tail), "")
        return (1, 0, node.value)

    return key


class _Index:
    """Triples of one graph, keyed by (subject, predicate)."""

    def __init__(self, quads: Sequence[Quad]):
        self.sp: dict[tuple, list[Quad]] = defaultdict(list)
        self.triples = set()
        for q in quads:
            self.sp[(q.subject, q.predicate)].append(q)
            self.triples.add(q.triple)

    def objects(self, s, p) -> list[Term]:
        return [q.object for q in self.sp.get((s, p), ())]

    def quads(self, s, p) -> list[Quad]:
        return self.sp.get((s, p), [])


# -- classification and validation ------------------------------------------

def _check_typing(x: Iri, idx: _Index, report: ValidationReport) -> Optional[OvopubKind]:
    types = idx.quads(x, RDF_TYPE)
    if not types:
        report.add(RuleCode.MissingType, "no rdf:type statement about the ovopub", None)
        return None
    kinds = []
    for q in types:
        kind = OvopubKind.from_type(q.object) if isinstance(q.object, Iri) else None
        if kind is None:
            report.add(RuleCode.UnknownType, f"unrecognised ovopub type {q.object.n3()}", q)
        else:
            kinds.append(kind)
    if len(kinds) > 1:
        names = ", ".join(sorted(k.value for k in kinds))
        report.add(RuleCode.MultipleTypes, f"typed as more than one ovopub kind: {names}", types[0])
        return None
    if report.violations and any(v.code in _TYPING_CODES for v in report.violations):
        return None
    return kinds[0] if kinds else None


def _check_provenance(x: Iri, idx: _Index, report: ValidationReport):
    creators = idx.quads(x, DC_CREATOR)
    if not creators:
        report.add(RuleCode.MissingCreator, "no dc:creator")
    for q in creators:
        o = q.object
        if isinstance(o, Literal) and o.datatype != XSD_STRING:
            report.add(RuleCode.MissingCreator,
                       "dc:creator must be an IRI or an xsd:string literal", q)

    dates = idx.quads(x, DC_DATE)
    if not dates:
        report.add(RuleCode.MissingDate, "no dc:date")
    elif len(dates) > 1:
        report.add(RuleCode.MultipleDate, f"{len(dates)} dc:date values, expected one", dates[1])
    for q in dates:
        o = q.object
        if not (isinstance(o, Literal) and o.datatype == XSD_DATETIME):
            report.add(RuleCode.BadDateLexical, "dc:date must be an xsd:dateTime literal", q)

    rights = idx.quads(x, DC_RIGHTS)
    if not rights:
        report.add(RuleCode.MissingRights, "no dc:rights")
    for q in rights:
        if not isinstance(q.object, Iri):
            report.add(RuleCode.RightsNotIri, "dc:rights must be the IRI of a license", q)
    if len(rights) > 1:
        report.add(RuleCode.RightsNotIri,
                   f"{len(rights)} dc:rights values, expected exactly one license IRI", rights[1])


def _provenance_quads(x: Iri, quads: Sequence[Quad]) -> set[Quad]:
    return {q for q in quads if q.subject == x and q.predicate in PROVENANCE_PREDICATES}


def _reified(node: Iri, idx: _Index) -> Optional[Triple]:
    """The triple a statement node reifies, if it has exactly one of each link."""
    parts = [idx.objects(node, p) for p in (RDF_SUBJECT, RDF_PREDICATE, RDF_OBJECT)]
    if any(len(p) != 1 for p in parts):
        return None
    (s,), (p,), (o,) = parts
    if not isinstance(s, Iri) or not isinstance(p, Iri):
        return None
    return Triple(s, p, o)


def _check_assertion(x, quads, idx, report) -> Optional[AssertionPayload]:
    parts = {p: idx.quads(x, p) for p in (RDF_SUBJECT, RDF_PREDICATE, RDF_OBJECT)}
    bad = [p for p, qs in parts.items() if len(qs) != 1]
    if bad:
        detail = ", ".join(f"{len(parts[p])} {p.value.rsplit('#', 1)[-1]}" for p in bad)
        report.add(RuleCode.AssertionArity,
                   f"assertion must reify exactly one statement ({detail})")
        return None
    triple = _reified(x, idx)
    if triple is None:
        report.add(RuleCode.AssertionArity,
                   "reified subject and predicate must be IRIs", parts[RDF_SUBJECT][0])
        return None
    if triple not in idx.triples:
        report.add(RuleCode.AssertionRawTripleMissing,
                   "the reified statement itself is not in the graph")
    allowed = _provenance_quads(x, quads)
    allowed.update(q for qs in parts.values() for q in qs)
    for q in quads:
        if q in allowed or (q.subject == x and q.predicate == RDF_TYPE) or q.triple == triple:
            continue
        report.add(RuleCode.AssertionArity, "assertion carries an extra statement", q)
    return AssertionPayload(triple)


def _check_record(x, quads, idx, report) -> Optional[RecordPayload]:
    members = idx.quads(x, RDFS_MEMBER)
    if not members:
        report.add(RuleCode.RecordEmpty, "record has no rdfs:member statements")
    statements = []
    accounted = _provenance_quads(x, quads)
    accounted.update(members)
    for q in members:
        node = q.object
        triple = _reified(node, idx) if isinstance(node, Iri) else None
        if triple is None:
            report.add(RuleCode.RecordMemberNotReified,
                       "member is not a statement node with one subject, predicate and object", q)
            continue
        if triple not in idx.triples:
            report.add(RuleCode.RecordMemberNotReified,
                       "member reifies a statement that is not in the graph", q)
            continue
        statements.append(RecordStatement(node, triple))
        for p in (RDF_SUBJECT, RDF_PREDICATE, RDF_OBJECT):
            accounted.update(idx.quads(node, p))
    payload_triples = {st.triple for st in statements}
    for q in quads:
        if q in accounted or q.triple in payload_triples:
            continue
        if q.subject == x and q.predicate == RDF_TYPE:
            continue
        report.add(RuleCode.RecordMemberNotReified,
                   "statement is not linked to the record through a member node", q)
    if statements:
        n = connected_components([st.triple for st in statements])
        if n != 1:
            report.add(RuleCode.RecordNotConnected,
                       f"record statements form {n} connected components, expected 1")
    if not members:
        return None
    statements.sort(key=lambda st: _ordinal_key(x)(st.node))
    return RecordPayload(tuple(statements))


def _check_collection(x, quads, idx, report) -> Optional[CollectionPayload]:
    members = idx.quads(x, RDFS_MEMBER)
    if not members:
        report.add(RuleCode.CollectionEmpty, "collection has no rdfs:member statements")
    allowed = _provenance_quads(x, quads)
    out = []
    for q in members:
        if isinstance(q.object, Iri):
            allowed.add(q)
            out.append(q.object)
    for q in quads:
        if q in allowed or (q.subject == x and q.predicate == RDF_TYPE):
            continue
        report.add(RuleCode.CollectionForeignTriple,
                   "collection may only hold membership, typing and provenance", q)
    return CollectionPayload(tuple(sorted(set(out), key=lambda i: i.value)))


_KIND_CHECKS = {
    OvopubKind.ASSERTION: _check_assertion,
    OvopubKind.RECORD: _check_record,
    OvopubKind.COLLECTION: _check_collection,
}


def _run(quads: Sequence[Quad], graph: Iri):
    report = ValidationReport(graph)
    own = [q for q in quads if q.graph == graph]
    for q in quads:
        if q.graph is not None and q.graph != graph:
            report.add(RuleCode.GraphNameMismatch,
                       f"statement belongs to graph {q.graph.n3()}", q)
    idx = _Index(own)
    kind = _check_typing(graph, idx, report)
    _check_provenance(graph, idx, report)
    payload = None
    if kind is not None:
        payload = _KIND_CHECKS[kind](graph, own, idx, report)
    for q in quads:
        if any(_is_skolem(t) for t in q):
            report.add(RuleCode.BlankNodePresent, "statement uses a blank node", q)
    for q in quads:
        if q.graph is None:
            report.add(RuleCode.DefaultGraphStatement,
                       "statement is in the default graph, not the ovopub graph", q)
    return report, kind, own, payload


def validate(quads: Iterable[Quad], graph: Iri) -> ValidationReport:
    """Check ``quads`` against every ovopub conformance rule.

    All violations are collected; an empty report means the graph is a
    conformant ovopub.
    """
    report, *_ = _run(list(quads), graph)
    return report


def classify(quads: Iterable[Quad], graph: Iri) -> OvopubKind:
    """Kind named by the graph's single ovopub rdf:type statement.

    Raises :class:`InvalidOvopub` carrying the typing violations when the
    type is missing, ambiguous or unknown.
    """
    quads = [q for q in quads if q.graph == graph]
    report = ValidationReport(graph)
    kind = _check_typing(graph, _Index(quads), report)
    if kind is None:
        raise InvalidOvopub(report)
    return kind


def _single_text(idx: _Index, x: Iri, predicate: Iri) -> Optional[Literal]:
    values = [o for o in idx.objects(x, predicate) if isinstance(o, Literal)]
    return min(values, key=term_sort_key) if values else None


def extract(quads: Iterable[Quad], graph: Iri) -> OvopubGraph:
    """Parse a conformant graph into an :class:`OvopubGraph`.

    Raises :class:`InvalidOvopub` if the graph does not validate.
    """
    report, kind, own, payload = _run(list(quads), graph)
    if not report.ok:
        raise InvalidOvopub(report)
    idx = _Index(own)
    (date,) = idx.objects(graph, DC_DATE)
    (rights,) = idx.objects(graph, DC_RIGHTS)
    identifier = _single_text(idx, graph, DC_IDENTIFIER)
    prov = Provenance(
        creators=tuple(idx.objects(graph, DC_CREATOR)),
        date=date.lexical,
        rights=rights,
        label=_single_text(idx, graph, RDFS_LABEL),
        identifier=identifier.lexical if identifier is not None else None,
        description=_single_text(idx, graph, DC_DESCRIPTION),
    )
    return OvopubGraph(graph, kind, canonical_quads(own), payload, prov)


def group_by_graph(quads: Iterable[Quad]) -> dict[Optional[Iri], list[Quad]]:
    """Split quads by graph name, preserving document order within each graph."""
    out: dict[Optional[Iri], list[Quad]] = defaultdict(list)
    for q in quads:
        out[q.graph].append(q)
    return dict(out)
