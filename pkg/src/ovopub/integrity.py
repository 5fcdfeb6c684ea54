"""Canonical form, integrity digests, cardinal keys and integrity ovopubs."""
from __future__ import annotations

import hashlib
import hmac
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Union

from .builder import IriPolicy, build_assertion
from .model import OvopubGraph, OvopubKind, Provenance
from .nquads import serialize_nquads, serialize_quad
from .terms import Iri, Literal, Quad, Triple
from .vocab import HAS_DIGEST

PREFIX = "sha256:"
_RENDERED = re.compile(r"sha256:([0-9a-f]{64})\Z")

GraphLike = Union[OvopubGraph, Iterable[Quad]]


@dataclass(frozen=True, order=True)
class Digest:
    value: bytes
    algorithm: str = "sha-256"

    def __post_init__(self):
        if self.algorithm != "sha-256" or len(self.value) != 32:
            raise ValueError("digest must be 32 bytes of sha-256")

    @property
    def hex(self) -> str:
        return self.value.hex()

    def render(self) -> str:
        return PREFIX + self.value.hex()

    __str__ = render

    @classmethod
    def parse(cls, text: str) -> "Digest":
        m = _RENDERED.match(text.strip())
        if m is None:
            raise ValueError(f"not a rendered sha256 digest: {text!r}")
        return cls(bytes.fromhex(m.group(1)))

    @classmethod
    def of(cls, data: bytes) -> "Digest":
        return cls(hashlib.sha256(data).digest())


class CardinalKey(Digest):
    """Digest of a payload triple's N-Quads line; equal keys mean identical statements."""


def _quads(graph: GraphLike) -> Iterable[Quad]:
    return graph.quads if isinstance(graph, OvopubGraph) else graph


def canonicalize(graph: GraphLike) -> str:
    """Sorted, de-duplicated N-Quads text of the graph, LF-terminated."""
    return serialize_nquads(set(_quads(graph)), sorted=True)


def hash_ovopub(graph: GraphLike) -> Digest:
    return Digest.of(canonicalize(graph).encode("utf-8"))


def payload_line(triple: Triple) -> str:
    return serialize_quad(Quad(*triple)) + "\n"


def cardinal_key(graph: OvopubGraph) -> CardinalKey:
    """Key over the payload triple alone, serialized in the default graph."""
    if graph.kind is not OvopubKind.ASSERTION:
        raise ValueError(f"cardinal keys are defined for assertions, not {graph.kind.value}s")
    line = payload_line(graph.payload.triple)
    return CardinalKey(hashlib.sha256(line.encode("utf-8")).digest())


def verify(graph: GraphLike, expected: Digest) -> bool:
    return hmac.compare_digest(hash_ovopub(graph).value, expected.value)


def emit_integrity_ovopub(target: Iri, digest: Digest, prov: Provenance,
                          policy: IriPolicy) -> OvopubGraph:
    """Assertion recording ``target``'s digest, kept outside the hashed graph."""
    triple = Triple(target, HAS_DIGEST, Literal(digest.render()))
    return build_assertion(triple, prov, policy)


def digest_from_integrity_ovopub(graph: OvopubGraph) -> Digest:
    if graph.kind is not OvopubKind.ASSERTION or graph.payload.triple.predicate != HAS_DIGEST:
        raise ValueError(f"{graph.iri} does not record a digest")
    return Digest.parse(graph.payload.triple.object.lexical)


# -- sidecar files -------------------------------------------------------------

def sidecar_path(path: Union[str, Path]) -> Path:
    return Path(path).with_suffix(".sha256")


def write_sidecar(path: Union[str, Path], digest: Digest):
    Path(path).write_text(digest.render() + "\n", encoding="utf-8", newline="\n")


def read_sidecar(path: Union[str, Path]) -> dict[Union[Iri, None], Digest]:
    """Read ``sha256:<hex>`` lines, optionally followed by a tab and the graph IRI.

    A bare digest line is keyed by None and stands for the file's only graph.
    """
    out: dict[Union[Iri, None], Digest] = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        if not raw.strip():
            continue
        digest_text, _, name = raw.partition("\t")
        key = Iri(name.strip()) if name.strip() else None
        if key in out:
            raise ValueError(f"duplicate sidecar entry for {key}")
        out[key] = Digest.parse(digest_text)
    return out
