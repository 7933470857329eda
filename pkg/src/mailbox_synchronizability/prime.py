# -*- coding: utf-8 -*-
"""Recognizing prime exchanges with finitely many abstract P-graphs.

A P-graph has one vertex per message (or per merged group of messages)
labeled with the processes whose send events (S) and receive events (R)
it holds; an edge means some event of the source precedes some event of
the target on a common process.
"""
import logging
from typing import Dict
from typing import FrozenSet
from typing import Iterable
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Sequence
from typing import Set
from typing import Tuple

import networkx as nx

from .exceptions import AbstractionInvariantError
from .fsa import Arc
from .fsa import Nfa
from .fsa import State
from .model import ProcessId
from .model import SigmaSymbol
from .settings import DEFAULT_STATE_GUARD

logger = logging.getLogger(__name__)

Labels = Tuple[FrozenSet[ProcessId], FrozenSet[ProcessId]]


class PGraph(NamedTuple):
    """Vertices are 0..n-1; labels[v] is (senders, receivers)."""

    labels: Tuple[Labels, ...] = ()
    edges: FrozenSet[Tuple[int, int]] = frozenset()

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    def send_label(self, vertex: int) -> FrozenSet[ProcessId]:
        return self.labels[vertex][0]

    def receive_label(self, vertex: int) -> FrozenSet[ProcessId]:
        return self.labels[vertex][1]

    def digraph(self) -> "nx.DiGraph[int]":
        graph: "nx.DiGraph[int]" = nx.DiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges)
        return graph

    def describe_vertex(self, vertex: int) -> str:
        senders = ",".join(sorted(self.send_label(vertex)))
        receivers = ",".join(sorted(self.receive_label(vertex)))
        return f"S:{{{senders}}} R:{{{receivers}}}"

    def describe(self) -> str:
        vertices = " ".join(
            f"{v}[{self.describe_vertex(v)}]" for v in range(self.vertex_count)
        )
        edges = " ".join(f"{a}->{b}" for a, b in sorted(self.edges))
        return f"{vertices} | {edges}" if edges else vertices or "empty"


EMPTY_PGRAPH = PGraph()


def pstep_full(graph: PGraph, symbol: SigmaSymbol) -> PGraph:
    """Append the vertex of one more message of the exchange."""
    p, q = symbol.sender, symbol.receiver
    added = graph.vertex_count
    edges: Set[Tuple[int, int]] = set(graph.edges)
    for vertex, (senders, receivers) in enumerate(graph.labels):
        if p in senders:
            edges.add((vertex, added))
        if p in receivers:
            edges.add((added, vertex))
        if symbol.is_matched and (q in senders or q in receivers):
            edges.add((vertex, added))
    new_labels = (frozenset({p}), frozenset({q}) if symbol.is_matched else frozenset())
    return PGraph(graph.labels + (new_labels,), frozenset(edges))


def pgraph_of_word(word: Iterable[SigmaSymbol]) -> PGraph:
    graph = EMPTY_PGRAPH
    for symbol in word:
        graph = pstep_full(graph, symbol)
    return graph


def is_prime_oracle(word: Sequence[SigmaSymbol]) -> bool:
    """Nonempty and the full P-graph of the word is strongly connected."""
    if not word:
        return False
    return bool(nx.is_strongly_connected(pgraph_of_word(word).digraph()))


def _chain_extremes(
    carriers: List[int], closure: "nx.DiGraph[int]", process: ProcessId, kind: str
) -> Tuple[int, int]:
    """Minimum and maximum of vertices that must be totally ordered by reachability."""
    for index, first in enumerate(carriers):
        for second in carriers[index + 1 :]:
            if not closure.has_edge(first, second) and not closure.has_edge(second, first):
                raise AbstractionInvariantError(
                    f"{kind}-carriers of '{process}' are not totally ordered"
                )
    ancestors = {v: sum(1 for c in carriers if closure.has_edge(c, v)) for v in carriers}
    ordered = sorted(carriers, key=ancestors.__getitem__)
    return ordered[0], ordered[-1]


def alpha_with_origins(graph: PGraph) -> Tuple[PGraph, Dict[int, Optional[int]]]:
    """Abstract a P-graph: merge components, erase redundant labels, sweep inner labelless vertices.

    Returns the abstract graph, whose edges are closed under transitivity,
    and where every original vertex ended up (None if swept).
    """
    condensed = nx.condensation(graph.digraph())
    closure = nx.transitive_closure_dag(condensed)
    senders: Dict[int, Set[ProcessId]] = {c: set() for c in condensed.nodes}
    receivers: Dict[int, Set[ProcessId]] = {c: set() for c in condensed.nodes}
    for vertex, (s_label, r_label) in enumerate(graph.labels):
        component = condensed.graph["mapping"][vertex]
        senders[component].update(s_label)
        receivers[component].update(r_label)

    processes = sorted(set().union(*senders.values(), *receivers.values()))
    for process in processes:
        carriers = sorted(c for c in condensed.nodes if process in senders[c])
        if carriers:
            _, top = _chain_extremes(carriers, closure, process, "S")
            for carrier in carriers:
                if carrier != top:
                    senders[carrier].discard(process)
        carriers = sorted(c for c in condensed.nodes if process in receivers[c])
        if carriers:
            bottom, top = _chain_extremes(carriers, closure, process, "R")
            for carrier in carriers:
                if carrier not in (bottom, top):
                    receivers[carrier].discard(process)

    retained = [
        c
        for c in condensed.nodes
        if senders[c]
        or receivers[c]
        or closure.in_degree(c) == 0
        or closure.out_degree(c) == 0
    ]
    kept = set(retained)
    labeled_key = {
        c: (
            0,
            tuple(sorted(senders[c])),
            tuple(sorted(receivers[c])),
            sum(1 for a in closure.predecessors(c) if a in kept),
        )
        for c in retained
        if senders[c] or receivers[c]
    }

    def sort_key(component: int) -> Tuple[object, ...]:
        if component in labeled_key:
            return labeled_key[component]
        below = tuple(sorted(labeled_key[d] for d in closure.successors(component) if d in labeled_key))
        above = tuple(sorted(labeled_key[a] for a in closure.predecessors(component) if a in labeled_key))
        return (1, below, above)

    order = sorted(retained, key=sort_key)
    renumber = {component: index for index, component in enumerate(order)}
    abstract = PGraph(
        tuple((frozenset(senders[c]), frozenset(receivers[c])) for c in order),
        frozenset(
            (renumber[a], renumber[b]) for a, b in closure.edges if a in kept and b in kept
        ),
    )
    origins: Dict[int, Optional[int]] = {
        vertex: renumber.get(condensed.graph["mapping"][vertex])
        for vertex in range(graph.vertex_count)
    }
    return abstract, origins


def alpha(graph: PGraph) -> PGraph:
    return alpha_with_origins(graph)[0]


def prime_step(graph: PGraph, symbol: SigmaSymbol) -> PGraph:
    return alpha(pstep_full(graph, symbol))


def abstraction_guard(processes: Iterable[ProcessId], state_guard: int = DEFAULT_STATE_GUARD) -> int:
    """The bound 2^(6|P|^2) on abstract P-graphs, clamped to state_guard."""
    count = len(frozenset(processes))
    return min(2 ** (6 * count * count), state_guard)


def prime_nfa(
    alphabet: Iterable[SigmaSymbol], state_guard: int = DEFAULT_STATE_GUARD
) -> Nfa:
    """Deterministic recognizer of the words whose MSC is a prime exchange."""
    symbols = tuple(sorted(frozenset(alphabet)))
    processes = {s.sender for s in symbols} | {s.receiver for s in symbols}

    def successors(state: State) -> Iterable[Arc]:
        for symbol in symbols:
            yield symbol, prime_step(state, symbol)  # type: ignore[arg-type]

    return Nfa(
        symbols,
        [EMPTY_PGRAPH],
        successors,
        lambda state: state.vertex_count == 1,  # type: ignore[attr-defined]
        name="prime recognizer",
        state_guard=abstraction_guard(processes, state_guard),
        describe=lambda state: state.describe(),  # type: ignore[attr-defined]
    )
