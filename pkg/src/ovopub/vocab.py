"""Vocabulary constants used by ovopubs."""
from .terms import Iri

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
XSD = "http://www.w3.org/2001/XMLSchema#"
DC = "http://purl.org/dc/terms/"
SIO = "http://semanticscience.org/resource/"
# Namespace for terms this package mints itself.
OVO = "http://example.org/ovopub/vocab#"

OVOPUB = Iri(SIO + "SIO_001300")
ASSERTION_OVOPUB = Iri(SIO + "SIO_001301")
RECORD_OVOPUB = Iri(SIO + "SIO_001302")
COLLECTION_OVOPUB = Iri(SIO + "SIO_001303")
IS_TRANSITIVELY_RELATED_TO = Iri(SIO + "SIO_001247")
IS_RELATED_TO = Iri(SIO + "SIO_000001")

RDF_TYPE = Iri(RDF + "type")
RDF_SUBJECT = Iri(RDF + "subject")
RDF_PREDICATE = Iri(RDF + "predicate")
RDF_OBJECT = Iri(RDF + "object")
RDF_LANGSTRING = Iri(RDF + "langString")

RDFS_MEMBER = Iri(RDFS + "member")
RDFS_LABEL = Iri(RDFS + "label")

DC_CREATOR = Iri(DC + "creator")
DC_DATE = Iri(DC + "date")
DC_RIGHTS = Iri(DC + "rights")
DC_IDENTIFIER = Iri(DC + "identifier")
DC_DESCRIPTION = Iri(DC + "description")

XSD_STRING = Iri(XSD + "string")
XSD_DATETIME = Iri(XSD + "dateTime")
XSD_INTEGER = Iri(XSD + "integer")

AGGREGATES = Iri(OVO + "aggregates")
HAS_DIGEST = Iri(OVO + "hasDigest")

CC_BY = Iri("http://creativecommons.org/licenses/by/4.0/")

REIFICATION = (RDF_SUBJECT, RDF_PREDICATE, RDF_OBJECT)
PROVENANCE_PREDICATES = frozenset(
    {DC_CREATOR, DC_DATE, DC_RIGHTS, RDFS_LABEL, DC_IDENTIFIER, DC_DESCRIPTION}
)
# Sub-properties of sio:is-transitively-related-to followed by scope closure.
CLOSURE_PREDICATES = (RDFS_MEMBER, RDF_SUBJECT, RDF_PREDICATE, RDF_OBJECT)

# Well-known skolem path; IRIs containing it stand in for blank nodes.
GENID_MARKER = "/.well-known/genid/"
GENID_BASE = "http://example.org/ovopub" + GENID_MARKER
