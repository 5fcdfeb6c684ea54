"""Indexed quad store with membership closure and graph-scoped queries."""
from __future__ import annotations

import logging
from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .integrity import CardinalKey, cardinal_key
from .model import InvalidOvopub, OvopubKind, classify, extract
from .nquads import serialize_quad
from .terms import Iri, Quad, Term
from .vocab import CLOSURE_PREDICATES

log = logging.getLogger(__name__)

FORWARD = "forward"
INVERSE = "inverse"
BOTH = "both"
_DIRECTIONS = (FORWARD, INVERSE, BOTH)


class Variable(NamedTuple):
    name: str

    def __str__(self) -> str:
        return "?" + self.name


class _Wildcard:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "WILDCARD"


WILDCARD = _Wildcard()

Slot = Union[Term, Variable, _Wildcard]


class Pattern(NamedTuple):
    subject: Slot = WILDCARD
    predicate: Slot = WILDCARD
    object: Slot = WILDCARD
    graph: Slot = WILDCARD

    def variables(self) -> list[str]:
        return list(dict.fromkeys(s.name for s in self if isinstance(s, Variable)))


Binding = dict


@dataclass(frozen=True)
class Scope:
    """Graphs and resources selected by a membership closure."""

    graphs: frozenset
    resources: frozenset

    def __contains__(self, item) -> bool:
        return item in self.resources or item in self.graphs

    def __le__(self, other: "Scope") -> bool:
        return self.graphs <= other.graphs and self.resources <= other.resources


class StoreError(ValueError):
    pass


class Store:
    """Immutable set of named-graph quads with graph-partitioned indexes.

    Use :func:`load` to build one. Every index lists its quads in canonical
    (N-Quads line) order, so every query answer is deterministic.
    """

    def __init__(self, quads: Iterable[Quad] = ()):
        unique = set()
        for q in quads:
            if q.graph is None:
                raise StoreError(f"default-graph statement cannot be stored: {serialize_quad(q)}")
            unique.add(q)
        self._quads = tuple(sorted(unique, key=serialize_quad))
        self._set = frozenset(unique)
        self._by_graph = defaultdict(list)
        self._by_gs = defaultdict(list)
        self._by_gp = defaultdict(list)
        self._by_go = defaultdict(list)
        self._by_s = defaultdict(list)
        self._by_p = defaultdict(list)
        self._by_o = defaultdict(list)
        for q in self._quads:
            s, p, o, g = q
            self._by_graph[g].append(q)
            self._by_gs[g, s].append(q)
            self._by_gp[g, p].append(q)
            self._by_go[g, o].append(q)
            self._by_s[s].append(q)
            self._by_p[p].append(q)
            self._by_o[o].append(q)
        self._kinds: dict[Iri, Optional[OvopubKind]] = {}

    def __len__(self) -> int:
        return len(self._quads)

    def __iter__(self):
        return iter(self._quads)

    def __contains__(self, quad) -> bool:
        return quad in self._set

    def __eq__(self, other) -> bool:
        return isinstance(other, Store) and self._set == other._set

    __hash__ = None

    def __repr__(self) -> str:
        return f"<Store {len(self._quads)} quads in {len(self._by_graph)} graphs>"

    @property
    def quads(self) -> tuple[Quad, ...]:
        return self._quads

    def graphs(self) -> frozenset:
        return frozenset(self._by_graph)

    def graph(self, name: Iri) -> list[Quad]:
        return list(self._by_graph.get(name, ()))

    def kind(self, name: Iri) -> Optional[OvopubKind]:
        """Ovopub kind of a graph, or None if it is not typed as exactly one kind."""
        if name not in self._kinds:
            try:
                self._kinds[name] = classify(self._by_graph.get(name, ()), name)
            except InvalidOvopub:
                self._kinds[name] = None
        return self._kinds[name]

    def candidates(self, s=None, p=None, o=None, g=None) -> Sequence[Quad]:
        """Smallest index bucket consistent with the bound positions."""
        if g is not None:
            if s is not None:
                return self._by_gs.get((g, s), ())
            if o is not None:
                return self._by_go.get((g, o), ())
            if p is not None:
                return self._by_gp.get((g, p), ())
            return self._by_graph.get(g, ())
        if s is not None:
            return self._by_s.get(s, ())
        if o is not None:
            return self._by_o.get(o, ())
        if p is not None:
            return self._by_p.get(p, ())
        return self._quads


def load(quads: Iterable[Quad]) -> Store:
    """Build a store; duplicates collapse and default-graph quads are rejected."""
    return Store(quads)


# -- closure -----------------------------------------------------------------

def membership_closure(store: Store, roots: Iterable[Iri], direction: str = FORWARD) -> Scope:
    """Everything reachable from ``roots`` over rdfs:member and the three
    reification links, in any graph of the store.

    Each reached IRI that names a graph in the store puts that graph in scope.
    ``direction`` selects forward edges (default), inverse edges, or both.
    """
    if direction not in _DIRECTIONS:
        raise ValueError(f"direction must be one of {_DIRECTIONS}")
    preds = frozenset(CLOSURE_PREDICATES)
    known = store.graphs()
    seen = set(roots)
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        nxt = []
        if direction != INVERSE:
            nxt += [q.object for q in store.candidates(s=x) if q.predicate in preds]
        if direction != FORWARD:
            nxt += [q.subject for q in store.candidates(o=x) if q.predicate in preds]
        for y in nxt:
            if isinstance(y, Iri) and y not in seen:
                seen.add(y)
                queue.append(y)
    return Scope(graphs=frozenset(seen & known), resources=frozenset(seen))


# -- matching ----------------------------------------------------------------

def _bound(slot):
    return None if isinstance(slot, (Variable, _Wildcard)) else slot


def _unify(pattern: Pattern, quad: Quad, binding: Optional[dict] = None) -> Optional[dict]:
    out = dict(binding) if binding else {}
    for slot, value in zip(pattern, quad):
        if isinstance(slot, _Wildcard):
            continue
        if isinstance(slot, Variable):
            prev = out.get(slot.name)
            if prev is None:
                out[slot.name] = value
            elif prev != value:
                return None
        elif slot != value:
            return None
    return out


def _substitute(pattern: Pattern, binding: dict) -> Pattern:
    return Pattern(*(binding.get(s.name, s) if isinstance(s, Variable) else s for s in pattern))


def _scan(store: Store, pattern: Pattern, scope: Optional[Scope]):
    s, p, o, g = (_bound(x) for x in pattern)
    if g is not None and not isinstance(g, Iri):
        return
    if g is not None and scope is not None and g not in scope.graphs:
        return
    for q in store.candidates(s, p, o, g):
        if scope is not None and q.graph not in scope.graphs:
            continue
        yield q


def match(store: Store, pattern: Pattern, scope: Optional[Scope] = None) -> list[Binding]:
    """Bindings for every quad matching ``pattern`` inside ``scope`` (all graphs if None)."""
    out = []
    for q in _scan(store, pattern, scope):
        b = _unify(pattern, q)
        if b is not None:
            out.append(b)
    return out


def match_quads(store: Store, pattern: Pattern, scope: Optional[Scope] = None) -> list[Quad]:
    """The witnessing quads for :func:`match`, in the same order."""
    return [q for q in _scan(store, pattern, scope) if _unify(pattern, q) is not None]


def bgp_query(store: Store, patterns: Sequence[Pattern], scope: Optional[Scope] = None) -> list[Binding]:
    """Conjunctive query: join the patterns on shared variable names.

    Evaluated as an index nested-loop join in the given pattern order.
    """
    results: list[dict] = [{}]
    for pattern in patterns:
        nxt = []
        for b in results:
            bound = _substitute(pattern, b)
            for q in _scan(store, bound, scope):
                merged = _unify(pattern, q, b)
                if merged is not None:
                    nxt.append(merged)
        results = nxt
        if not results:
            break
    return results


def transitive_reach(store: Store, start: Term, predicate: Iri, scope: Optional[Scope] = None,
                     inverse: bool = False) -> set[Term]:
    """Terms reachable from ``start`` by one or more ``predicate`` hops.

    ``start`` itself is included only when a cycle leads back to it.
    """
    adj = defaultdict(list)
    for q in store.candidates(p=predicate):
        if scope is not None and q.graph not in scope.graphs:
            continue
        if inverse:
            adj[q.object].append(q.subject)
        else:
            adj[q.subject].append(q.object)
    reached = set()
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in adj.get(x, ()):
            if y not in reached:
                reached.add(y)
                queue.append(y)
    return reached


# -- cardinal groups -----------------------------------------------------------

def find_cardinal_groups(store: Store) -> list[tuple[CardinalKey, tuple[Iri, ...]]]:
    """Group the store's valid assertion ovopubs by cardinal key, ordered by key.

    Graphs typed as assertions that fail validation are logged and skipped.
    """
    groups = defaultdict(list)
    for name in sorted(store.graphs(), key=lambda i: i.value):
        if store.kind(name) is not OvopubKind.ASSERTION:
            continue
        try:
            graph = extract(store.graph(name), name)
        except InvalidOvopub as exc:
            log.warning("skipping invalid assertion %s: %s", name.value, exc)
            continue
        groups[cardinal_key(graph)].append(name)
    return [(key, tuple(groups[key])) for key in sorted(groups)]
