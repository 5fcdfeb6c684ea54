"""Six-ovopub corpus modelled on an iRefIndex entry for BioGRID:464511.

Only the identifier "BioGRID:464511" comes from the source record. Every
protein, method, publication, group, agent and predicate IRI below is a
synthetic placeholder in the ``http://example.org/ovopub/exemplar/``
namespace.
"""
from __future__ import annotations

from .builder import ChainSpec, Explicit, build_assertion, build_collection, build_record, chain
from .model import OvopubGraph, Provenance
from .terms import Iri, Triple
from .vocab import CC_BY

EX = "http://example.org/ovopub/exemplar/"
BIOGRID_ID = "BioGRID:464511"


def ex(local: str) -> Iri:
    return Iri(EX + local)


OVOPUB_IRIS = {name: ex(f"ovopub/{name}") for name in "BCDEFG"}

PROTEIN_1 = ex("placeholder/protein-1")
PROTEIN_2 = ex("placeholder/protein-2")
INTERACTION = ex("placeholder/biogrid-interaction-464511")
METHOD = ex("placeholder/detection-method")
PUBLICATION = ex("placeholder/publication")
INTERACTION_GROUP = ex("placeholder/irefindex-interaction-group")
SIMILARITY_GROUP = ex("placeholder/irefindex-similarity-group")
IREFINDEX_RELEASE = ex("placeholder/irefindex-release")

INTERACTS_WITH = ex("vocab/interacts-with")
HAS_PARTICIPANT = ex("vocab/has-participant")
DETECTION_METHOD = ex("vocab/detection-method")
PUBLISHED_IN = ex("vocab/published-in")
IN_GROUP = ex("vocab/in-group")
PART_OF = ex("vocab/part-of")
HAS_SOURCE = ex("vocab/has-source")

CURATOR = ex("agent/curator")
BIOGRID = ex("agent/biogrid")
IREFINDEX = ex("agent/irefindex")

# Members of collection G; record E is deliberately left out.
COLLECTED = ("B", "C", "D", "F")


def _prov(creator: Iri, date: str, label: str, identifier: str | None = None) -> Provenance:
    return Provenance((creator,), date, CC_BY, label=(label, "en"), identifier=identifier)


def build_exemplar() -> dict[str, OvopubGraph]:
    """Ovopubs B through G, keyed by their letter."""
    o = OVOPUB_IRIS
    out = {}
    out["B"] = build_assertion(
        Triple(PROTEIN_1, INTERACTS_WITH, PROTEIN_2),
        _prov(CURATOR, "2013-05-01T09:00:00Z", "protein-protein interaction"),
        Explicit(o["B"]),
    )
    out["C"] = build_record(
        [
            Triple(INTERACTION, HAS_PARTICIPANT, PROTEIN_1),
            Triple(INTERACTION, HAS_PARTICIPANT, PROTEIN_2),
            Triple(INTERACTION, DETECTION_METHOD, METHOD),
            Triple(INTERACTION, PUBLISHED_IN, PUBLICATION),
        ],
        _prov(BIOGRID, "2013-04-01T00:00:00Z", "BioGRID interaction record", BIOGRID_ID),
        Explicit(o["C"]),
    )
    out["D"] = build_record(
        [
            Triple(INTERACTION, IN_GROUP, INTERACTION_GROUP),
            Triple(INTERACTION_GROUP, PART_OF, IREFINDEX_RELEASE),
        ],
        _prov(IREFINDEX, "2013-04-15T00:00:00Z", "iRefIndex interaction group membership"),
        Explicit(o["D"]),
    )
    out["E"] = build_record(
        [
            Triple(PROTEIN_1, IN_GROUP, SIMILARITY_GROUP),
            Triple(PROTEIN_2, IN_GROUP, SIMILARITY_GROUP),
        ],
        _prov(IREFINDEX, "2013-04-15T00:00:00Z", "iRefIndex similarity group membership"),
        Explicit(o["E"]),
    )
    out["F"] = chain(
        ChainSpec(o["B"], HAS_SOURCE, o["C"]),
        _prov(CURATOR, "2013-05-01T09:05:00Z", "source of the interaction assertion"),
        Explicit(o["F"]),
    )
    out["G"] = build_collection(
        [o[name] for name in COLLECTED],
        _prov(CURATOR, "2013-05-02T10:00:00Z", "selected interaction ovopubs"),
        Explicit(o["G"]),
    )
    return out


CORPUS_README = f"""\
Exemplar ovopub corpus
======================

Six ovopubs modelled on an iRefIndex entry for {BIOGRID_ID}:

  B  assertion   interaction between two proteins
  C  record      the BioGRID interaction record (dc:identifier "{BIOGRID_ID}")
  D  record      membership of the interaction in an iRefIndex interaction group
  E  record      membership of both proteins in an iRefIndex similarity group
  F  assertion   links B to its source record C
  G  collection  {", ".join(COLLECTED)}

Only the identifier "{BIOGRID_ID}" is real. All other IRIs (proteins, method,
publication, groups, agents and predicates) are synthetic placeholders under
{EX}

Each <letter>.nq file holds one ovopub; <letter>.sha256 is its digest.
"""
