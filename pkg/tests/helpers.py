"""Shared test helpers: example IRIs and seeded random term generators."""
import random

from ovopub import Iri, Literal, Quad, Triple
from ovopub.vocab import XSD_INTEGER

EX = "http://example.org/t/"


def ex(local: str) -> Iri:
    return Iri(EX + local)


_IRI_ALPHABET = "abcdefghijklmnopqrstuvwxyz0123456789-._~/#?=&%é日"
_LIT_POOL = (
    [chr(c) for c in range(0, 0x20)] + ['"', "\\", "\x7f", " ", "\x85", "é", "日", "😀"]
    + list("abc XYZ019 <>@^_:.")
)
_DATATYPES = [
    None,
    XSD_INTEGER,
    Iri("http://www.w3.org/2001/XMLSchema#boolean"),
    Iri("http://example.org/dt/custom"),
]
_LANGS = ["en", "fr", "en-GB", "zh-Hant-TW", "de-1996"]


def random_iri(rng: random.Random, pool: int = 0) -> Iri:
    if pool:
        return Iri(f"{EX}n{rng.randrange(pool)}")
    n = rng.randint(1, 12)
    return Iri(EX + "".join(rng.choice(_IRI_ALPHABET) for _ in range(n)))


def random_literal(rng: random.Random) -> Literal:
    text = "".join(rng.choice(_LIT_POOL) for _ in range(rng.randint(0, 10)))
    roll = rng.random()
    if roll < 0.3:
        return Literal(text, language=rng.choice(_LANGS))
    return Literal(text, rng.choice(_DATATYPES))


def random_term(rng: random.Random) -> object:
    return random_iri(rng) if rng.random() < 0.5 else random_literal(rng)


def random_quad(rng: random.Random, default_graph_rate: float = 0.2) -> Quad:
    g = None if rng.random() < default_graph_rate else random_iri(rng)
    return Quad(random_iri(rng), random_iri(rng), random_term(rng), g)


def random_triple(rng: random.Random, pool: int = 0) -> Triple:
    obj = random_iri(rng, pool) if pool else random_term(rng)
    return Triple(random_iri(rng, pool), random_iri(rng, 5) if pool else random_iri(rng), obj)


# -- golden ovopubs and one mutant per rule code ---------------------------------

def golden_ovopubs():
    """A valid assertion, record and collection with fixed IRIs and provenance."""
    from ovopub import Explicit, Provenance, build_assertion, build_collection, build_record
    from ovopub.vocab import CC_BY

    prov = Provenance((ex("alice"), "Alice"), "2013-06-01T12:00:00Z", CC_BY,
                      label=("golden", "en"), identifier="G:1")
    a = build_assertion(Triple(ex("E"), ex("P1"), ex("F")), prov, Explicit(ex("ovo/a")))
    r = build_record([Triple(ex("E"), ex("P1"), ex("F")), Triple(ex("F"), ex("P2"), Literal("g"))],
                     prov, Explicit(ex("ovo/r")))
    c = build_collection([ex("ovo/a"), ex("ovo/r")], prov, Explicit(ex("ovo/c")))
    return {"assertion": a, "record": r, "collection": c}


def _replace(quads, old_pred, new_obj, subject=None):
    out = []
    for q in quads:
        if q.predicate == old_pred and (subject is None or q.subject == subject):
            q = Quad(q.subject, q.predicate, new_obj, q.graph)
        out.append(q)
    return out


def rule_mutants():
    """Map each RuleCode to (quads, graph) of a minimal mutant of a golden ovopub."""
    from ovopub import RuleCode as R
    from ovopub.builder import record_body
    from ovopub.vocab import (COLLECTION_OVOPUB, DC_CREATOR, DC_DATE, DC_RIGHTS, GENID_BASE,
                              RDF_PREDICATE, RDF_TYPE, RDFS_MEMBER, XSD_DATETIME)

    g = golden_ovopubs()
    a, r, c = g["assertion"], g["record"], g["collection"]
    aq, rq, cq = list(a.quads), list(r.quads), list(c.quads)
    ax, rx, cx = a.iri, r.iri, c.iri

    def without(quads, pred, subject=None):
        return [q for q in quads if not (q.predicate == pred and (subject is None or q.subject == subject))]

    raw = a.payload.triple
    # A record whose two statements share no vertex.
    disc_body, _ = record_body(rx, [Triple(ex("a"), ex("p"), ex("b")), Triple(ex("c"), ex("p"), ex("d"))])
    disconnected = [q for q in rq if q.subject == rx and q.predicate != RDFS_MEMBER] + [
        Quad(*t, rx) for t in disc_body]
    record_nodes = {q.object for q in rq if q.predicate == RDFS_MEMBER}
    first_node = min(record_nodes, key=lambda n: n.value)

    return {
        R.MissingType: (without(aq, RDF_TYPE), ax),
        R.MultipleTypes: (aq + [Quad(ax, RDF_TYPE, COLLECTION_OVOPUB, ax)], ax),
        R.UnknownType: (_replace(aq, RDF_TYPE, ex("SomethingElse")), ax),
        R.MissingCreator: (without(aq, DC_CREATOR), ax),
        R.MissingDate: (without(aq, DC_DATE), ax),
        R.MultipleDate: (aq + [Quad(ax, DC_DATE, Literal("2014-01-01T00:00:00Z", XSD_DATETIME), ax)], ax),
        R.BadDateLexical: (_replace(aq, DC_DATE, Literal("yesterday")), ax),
        R.MissingRights: (without(aq, DC_RIGHTS), ax),
        R.RightsNotIri: (_replace(aq, DC_RIGHTS, Literal("CC-BY")), ax),
        R.AssertionArity: (without(aq, RDF_PREDICATE, ax), ax),
        R.AssertionRawTripleMissing: ([q for q in aq if q.triple != raw], ax),
        R.RecordEmpty: ([q for q in rq if q.subject == rx and q.predicate != RDFS_MEMBER], rx),
        R.RecordNotConnected: (disconnected, rx),
        R.RecordMemberNotReified: (without(rq, RDF_PREDICATE, first_node), rx),
        R.CollectionEmpty: (without(cq, RDFS_MEMBER), cx),
        R.CollectionForeignTriple: (cq + [Quad(ex("x"), ex("p"), ex("y"), cx)], cx),
        R.GraphNameMismatch: (aq + [Quad(ax, DC_CREATOR, ex("bob"), ex("elsewhere"))], ax),
        R.DefaultGraphStatement: (aq + [Quad(ax, DC_CREATOR, ex("bob"), None)], ax),
        R.BlankNodePresent: (aq + [Quad(ax, DC_CREATOR, Iri(GENID_BASE + "b0"), ax)], ax),
    }
