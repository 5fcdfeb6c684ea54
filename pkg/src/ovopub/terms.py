"""RDF term model: IRIs, literals, triples and quads.

Blank nodes have no representation here. Anything that needs an anonymous
node mints a skolem IRI instead, which keeps canonical serialization a plain
sort over lines.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

XSD_STRING = "http://www.w3.org/2001/XMLSchema#string"
XSD_DATETIME = "http://www.w3.org/2001/XMLSchema#dateTime"
RDF_LANGSTRING = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString"

_SCHEME = re.compile(r"[A-Za-z][A-Za-z0-9+.\-]*:")
# Characters IRIREF forbids in N-Quads, plus everything up to and including space.
_IRI_FORBIDDEN = re.compile(r'[\x00-\x20<>"{}|^`\\]')
_LANGTAG = re.compile(r"[a-zA-Z]+(-[a-zA-Z0-9]+)*\Z")
_DATETIME = re.compile(
    r"-?(?P<year>\d{4,})-(?P<month>\d{2})-(?P<day>\d{2})"
    r"T(?P<hour>\d{2}):(?P<minute>\d{2}):(?P<second>\d{2})(\.\d+)?"
    r"(Z|[+\-](?P<tzh>\d{2}):(?P<tzm>\d{2}))?\Z"
)


class TermError(ValueError):
    """Raised when a term would violate its structural invariants."""


def is_datetime_lexical(text: str) -> bool:
    """True when ``text`` is an xsd:dateTime lexical form (YYYY-MM-DDThh:mm:ss[.f][zone])."""
    m = _DATETIME.match(text)
    if m is None:
        return False
    month, day = int(m["month"]), int(m["day"])
    hour, minute, second = int(m["hour"]), int(m["minute"]), int(m["second"])
    if not (1 <= month <= 12 and 1 <= day <= 31):
        return False
    if hour == 24:
        if minute or second:
            return False
    elif hour > 23 or minute > 59 or second > 59:
        return False
    if m["tzh"] is not None and (int(m["tzh"]) > 14 or int(m["tzm"]) > 59):
        return False
    return True


@dataclass(frozen=True, slots=True)
class Iri:
    value: str

    def __post_init__(self):
        if not isinstance(self.value, str) or not self.value:
            raise TermError("IRI must be a non-empty string")
        if _IRI_FORBIDDEN.search(self.value):
            raise TermError(f"IRI contains a forbidden character: {self.value!r}")
        if not _SCHEME.match(self.value):
            raise TermError(f"IRI has no scheme: {self.value!r}")

    def __str__(self) -> str:
        return self.value

    def n3(self) -> str:
        return f"<{self.value}>"


@dataclass(frozen=True, slots=True, init=False)
class Literal:
    """A literal with a datatype IRI, or a language tag (datatype rdf:langString).

    ``Literal("x")`` is an xsd:string; ``Literal("chat", language="fr")`` is a
    language-tagged string.
    """

    lexical: str
    datatype: Iri
    language: Optional[str]

    def __init__(self, lexical: str, datatype: Union[Iri, str, None] = None,
                 language: Optional[str] = None):
        if not isinstance(lexical, str):
            raise TermError("literal lexical form must be a string")
        if isinstance(datatype, str):
            datatype = Iri(datatype)
        if language is not None:
            if not _LANGTAG.match(language):
                raise TermError(f"malformed language tag: {language!r}")
            if datatype is None:
                datatype = Iri(RDF_LANGSTRING)
            elif datatype.value != RDF_LANGSTRING:
                raise TermError("a language tag requires datatype rdf:langString")
        elif datatype is None:
            datatype = Iri(XSD_STRING)
        elif datatype.value == RDF_LANGSTRING:
            raise TermError("rdf:langString literal needs a language tag")
        if datatype.value == XSD_DATETIME and not is_datetime_lexical(lexical):
            raise TermError(f"malformed xsd:dateTime lexical form: {lexical!r}")
        object.__setattr__(self, "lexical", lexical)
        object.__setattr__(self, "datatype", datatype)
        object.__setattr__(self, "language", language)

    def __str__(self) -> str:
        return self.lexical

    def n3(self) -> str:
        from .nquads import serialize_term

        return serialize_term(self)


Term = Union[Iri, Literal]


class Triple(NamedTuple):
    subject: Iri
    predicate: Iri
    object: Term


class Quad(NamedTuple):
    """A statement plus the graph it lives in; ``graph`` is None for the default graph."""

    subject: Iri
    predicate: Iri
    object: Term
    graph: Optional[Iri] = None

    @property
    def triple(self) -> Triple:
        return Triple(self.subject, self.predicate, self.object)


DEFAULT_GRAPH = None


def term_sort_key(term: Term) -> tuple[int, str]:
    from .nquads import serialize_term

    return (0 if isinstance(term, Iri) else 1, serialize_term(term))


def compare_terms(a: Term, b: Term) -> int:
    """Total order over terms: IRIs before literals, then code-point order of
    the N-Quads form. Returns -1, 0 or 1."""
    ka, kb = term_sort_key(a), term_sort_key(b)
    return (ka > kb) - (ka < kb)
