import random
import warnings

import pytest

from helpers import ex, random_triple
from ovopub import (
    AggregationSpec,
    BuildError,
    ChainSpec,
    ContentAddressed,
    Explicit,
    Literal,
    OvopubKind,
    Provenance,
    Quad,
    Random,
    Triple,
    aggregate,
    build_assertion,
    build_collection,
    build_record,
    chain,
    connected_components,
    extract,
    validate,
)
from ovopub.vocab import (ASSERTION_OVOPUB, CC_BY, DC_CREATOR, DC_DATE, DC_RIGHTS, IS_RELATED_TO,
                          RDF_OBJECT, RDF_PREDICATE, RDF_SUBJECT, RDF_TYPE, RDFS_MEMBER, XSD_DATETIME)

BASE = ex("ovopub")


def test_assertion_has_exactly_the_mandated_quads(prov):
    s, p, o = ex("s"), ex("p"), ex("o")
    x = ex("A")
    g = build_assertion(Triple(s, p, o), prov, Explicit(x))
    expected = {
        Quad(x, RDF_TYPE, ASSERTION_OVOPUB, x),
        Quad(x, RDF_SUBJECT, s, x),
        Quad(x, RDF_PREDICATE, p, x),
        Quad(x, RDF_OBJECT, o, x),
        Quad(s, p, o, x),
        Quad(x, DC_CREATOR, ex("alice"), x),
        Quad(x, DC_DATE, Literal("2013-06-01T12:00:00Z", XSD_DATETIME), x),
        Quad(x, DC_RIGHTS, CC_BY, x),
    }
    assert len(g.quads) == 8
    assert set(g.quads) == expected
    assert validate(g.quads, g.iri).ok


def test_content_addressing_is_deterministic(prov, other_prov):
    t = Triple(ex("s"), ex("p"), Literal("1"))
    a = build_assertion(t, prov, ContentAddressed(BASE))
    b = build_assertion(t, prov, ContentAddressed(BASE))
    c = build_assertion(t, other_prov, ContentAddressed(BASE))
    assert a.iri == b.iri == c.iri
    assert a.iri.value.startswith(BASE.value + "/")
    assert len(a.iri.value.rsplit("/", 1)[1]) == 64
    d = build_assertion(Triple(ex("s"), ex("p"), Literal("2")), prov, ContentAddressed(BASE))
    assert d.iri != a.iri


def test_content_address_depends_on_kind(prov):
    t = Triple(ex("s"), ex("p"), ex("o"))
    assert build_assertion(t, prov, ContentAddressed(BASE)).iri != build_record([t], prov, ContentAddressed(BASE)).iri


def test_random_policy_is_reproducible_with_seed(prov):
    t = Triple(ex("s"), ex("p"), ex("o"))
    a = build_assertion(t, prov, Random(BASE, random.Random(42)))
    b = build_assertion(t, prov, Random(BASE, random.Random(42)))
    c = build_assertion(t, prov, Random(BASE, random.Random(43)))
    assert a.iri == b.iri != c.iri
    assert len(a.iri.value.rsplit("/", 1)[1]) == 32


def test_literal_subject_rejected(prov):
    with pytest.raises(BuildError):
        build_assertion(Triple(Literal("s"), ex("p"), ex("o")), prov, Explicit(ex("A")))


def test_blank_node_term_rejected(prov):
    from ovopub.vocab import GENID_BASE
    from ovopub import Iri

    with pytest.raises(BuildError):
        build_assertion(Triple(Iri(GENID_BASE + "x"), ex("p"), ex("o")), prov, Explicit(ex("A")))


def test_one_statement_record_has_nine_quads(prov):
    g = build_record([Triple(ex("s"), ex("p"), ex("o"))], prov, Explicit(ex("R")))
    assert len(g.quads) == 9
    assert validate(g.quads, g.iri).ok


def test_two_statement_record(prov):
    E, F, G = ex("E"), ex("F"), ex("G")
    a = build_record([Triple(E, ex("P1"), F), Triple(F, ex("P2"), G)], prov, Explicit(ex("A")))
    members = [q for q in a.quads if q.predicate == RDFS_MEMBER]
    assert len(members) == 2
    assert Quad(E, ex("P1"), F, a.iri) in a.quads and Quad(F, ex("P2"), G, a.iri) in a.quads
    assert connected_components(a.payload.triples) == 1
    assert validate(a.quads, a.iri).ok


def test_disconnected_record_rejected_with_count(prov):
    with pytest.raises(BuildError) as err:
        build_record([Triple(ex("a"), ex("p"), ex("b")), Triple(ex("c"), ex("p"), ex("d"))],
                     prov, Explicit(ex("R")))
    assert err.value.component_count == 2


def test_empty_record_rejected(prov):
    with pytest.raises(BuildError):
        build_record([], prov, Explicit(ex("R")))


def test_collection_of_four(prov):
    members = [ex(n) for n in "ABCD"]
    e = build_collection(members, prov, Explicit(ex("collE")))
    assert e.kind is OvopubKind.COLLECTION
    assert {q.object for q in e.quads if q.predicate == RDFS_MEMBER} == set(members)
    assert validate(e.quads, e.iri).ok


def test_single_member_collection(prov):
    c = build_collection([ex("A")], prov, Explicit(ex("C")))
    assert sum(q.predicate == RDFS_MEMBER for q in c.quads) == 1


def test_duplicate_members_deduplicated_with_warning(prov):
    with pytest.warns(UserWarning, match="duplicate"):
        c = build_collection([ex("A"), ex("B"), ex("A")], prov, Explicit(ex("C")))
    assert sum(q.predicate == RDFS_MEMBER for q in c.quads) == 2


def test_chain_related_to(prov, other_prov):
    a = build_record([Triple(ex("E"), ex("P1"), ex("F"))], other_prov, Explicit(ex("A")))
    d = chain(ChainSpec(a.iri, IS_RELATED_TO, ex("B")), prov, Explicit(ex("D")))
    assert d.kind is OvopubKind.ASSERTION
    assert d.payload.triple == Triple(ex("A"), IS_RELATED_TO, ex("B"))
    assert d.provenance == prov
    assert all(q.graph == d.iri for q in d.quads)
    assert validate(d.quads, d.iri).ok


def test_chain_has_source(prov):
    d = chain(ChainSpec(ex("A"), ex("has-source"), ex("B")), prov, Explicit(ex("D")))
    assert len(d.quads) == 8 and validate(d.quads, d.iri).ok


def test_self_chain_warns(prov):
    with pytest.warns(UserWarning):
        chain(ChainSpec(ex("A"), ex("p"), ex("A")), prov, Explicit(ex("D")))


def test_aggregate_three_sources(prov):
    spec = AggregationSpec(Triple(ex("s"), ex("p"), ex("o")), (ex("S1"), ex("S2"), ex("S3")))
    assertion, record = aggregate(spec, prov, ContentAddressed(BASE))
    assert record.kind is OvopubKind.RECORD
    star = record.payload.triples
    assert len(star) == 3
    assert {t.subject for t in star} == {assertion.iri}
    assert connected_components(star) == 1
    assert validate(record.quads, record.iri).ok and validate(assertion.quads, assertion.iri).ok


def test_aggregate_single_source(prov):
    spec = AggregationSpec(Triple(ex("s"), ex("p"), ex("o")), (ex("S1"),))
    _, record = aggregate(spec, prov, ContentAddressed(BASE))
    assert len(record.payload.statements) == 1 and validate(record.quads, record.iri).ok


def test_aggregate_explicit_needs_record_policy(prov):
    spec = AggregationSpec(Triple(ex("s"), ex("p"), ex("o")), (ex("S1"),))
    with pytest.raises(BuildError):
        aggregate(spec, prov, Explicit(ex("A")))
    a, r = aggregate(spec, prov, Explicit(ex("A")), Explicit(ex("R")))
    assert (a.iri, r.iri) == (ex("A"), ex("R"))


def test_aggregation_sources_distinct():
    with pytest.raises(BuildError):
        AggregationSpec(Triple(ex("s"), ex("p"), ex("o")), (ex("S1"), ex("S1")))


# -- properties ------------------------------------------------------------------------

def _random_prov(rng):
    creators = tuple(ex(f"who{rng.randrange(5)}") for _ in range(rng.randint(1, 3)))
    return Provenance(creators, f"20{rng.randint(10, 30)}-0{rng.randint(1, 9)}-1{rng.randint(0, 9)}T00:00:00Z",
                      CC_BY, label=("t", "en") if rng.random() < 0.5 else None,
                      identifier="id" if rng.random() < 0.5 else None,
                      description=("d", "fr") if rng.random() < 0.5 else None)


def _optional_count(p):
    return sum(v is not None for v in (p.label, p.identifier, p.description))


def test_builders_always_validate_and_round_trip():
    rng = random.Random(1)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for i in range(200):
            p = _random_prov(rng)
            prov_quads = len(p.creators) + 2 + _optional_count(p)
            t = random_triple(rng)
            a = build_assertion(t, p, ContentAddressed(BASE))
            assert len(a.quads) == 5 + len(p.creators) + 2 + _optional_count(p)
            # A chain-shaped record is always connected.
            nodes = [ex(f"v{rng.randrange(1000)}") for _ in range(rng.randint(2, 6))]
            triples = list(dict.fromkeys(Triple(u, ex("e"), v) for u, v in zip(nodes, nodes[1:])))
            r = build_record(triples, p, ContentAddressed(BASE))
            assert len(r.quads) == 1 + 5 * len(triples) + prov_quads
            members = [ex(f"m{rng.randrange(20)}") for _ in range(rng.randint(1, 6))]
            c = build_collection(members, p, ContentAddressed(BASE))
            assert len(c.quads) == 1 + len(set(members)) + prov_quads
            for g in (a, r, c):
                assert validate(g.quads, g.iri).ok
                assert extract(g.quads, g.iri) == g


def test_chain_emits_nothing_into_member_graphs(prov):
    d = chain(ChainSpec(ex("L"), ex("p"), ex("R")), prov, ContentAddressed(BASE))
    assert not any(q.graph in (ex("L"), ex("R")) for q in d.quads)
