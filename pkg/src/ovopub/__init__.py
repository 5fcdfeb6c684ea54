"""Ovopubs: single named graphs that carry statements plus minimal provenance."""

__version__ = "0.1.0"

from .builder import (
    AggregationSpec,
    BuildError,
    ChainSpec,
    ContentAddressed,
    Explicit,
    Random,
    aggregate,
    build_assertion,
    build_collection,
    build_record,
    chain,
)
from .integrity import (
    CardinalKey,
    Digest,
    canonicalize,
    cardinal_key,
    emit_integrity_ovopub,
    hash_ovopub,
    verify,
)
from .model import (
    InvalidOvopub,
    OvopubGraph,
    OvopubKind,
    Provenance,
    RuleCode,
    ValidationReport,
    classify,
    connected_components,
    extract,
    validate,
)
from .nquads import ParseError, parse_nquads, serialize_nquads
from .store import (
    WILDCARD,
    Pattern,
    Scope,
    Store,
    Variable,
    bgp_query,
    find_cardinal_groups,
    load,
    match,
    membership_closure,
    transitive_reach,
)
from .terms import DEFAULT_GRAPH, Iri, Literal, Quad, Triple, compare_terms
