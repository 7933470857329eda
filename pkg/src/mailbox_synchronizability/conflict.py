# -*- coding: utf-8 -*-
"""Conflict graphs of MSCs and what they tell about causal delivery and primality."""
from enum import Enum
from itertools import combinations
import logging
from typing import Dict
from typing import FrozenSet
from typing import Iterable
from typing import Iterator
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Set
from typing import Tuple

import networkx as nx

from .exceptions import NotAnExchangeError
from .model import ProcessId
from .model import SigmaWord
from .msc import EventId
from .msc import MessageSequenceChart
from .msc import MessageVertex
from .msc import exchange_word
from .msc import is_exchange
from .msc import is_k_exchange
from .msc import sub_msc

logger = logging.getLogger(__name__)


class EventKind(str, Enum):
    SEND = "S"
    RECEIVE = "R"


class EdgeLabel(str, Enum):
    SS = "SS"
    SR = "SR"
    RS = "RS"
    RR = "RR"

    @classmethod
    def of(cls, first: EventKind, second: EventKind) -> "EdgeLabel":
        return cls(first.value + second.value)

    @property
    def source_kind(self) -> EventKind:
        return EventKind(self.value[0])

    @property
    def target_kind(self) -> EventKind:
        return EventKind(self.value[1])


class ConflictEdge(NamedTuple):
    source: EventId
    label: EdgeLabel
    target: EventId


EventNode = Tuple[EventId, EventKind]


class ConflictGraph(NamedTuple):
    """One vertex per message, identified by its send event."""

    msc: MessageSequenceChart
    vertices: Tuple[MessageVertex, ...]
    edges: FrozenSet[ConflictEdge]

    def has_edge(self, source: EventId, label: EdgeLabel, target: EventId) -> bool:
        return ConflictEdge(source, label, target) in self.edges

    def as_digraph(self, self_loops: bool = True) -> "nx.DiGraph[EventId]":
        graph: "nx.DiGraph[EventId]" = nx.DiGraph()
        graph.add_nodes_from(vertex.id for vertex in self.vertices)
        graph.add_edges_from(
            (edge.source, edge.target)
            for edge in self.edges
            if self_loops or edge.source != edge.target
        )
        return graph


class ExtendedConflictGraph(NamedTuple):
    base: ConflictGraph
    edges: FrozenSet[ConflictEdge]

    def has_edge(self, source: EventId, label: EdgeLabel, target: EventId) -> bool:
        return ConflictEdge(source, label, target) in self.edges

    def extended_only(self) -> FrozenSet[ConflictEdge]:
        return self.edges - self.base.edges

    def as_graph(self) -> ConflictGraph:
        return ConflictGraph(self.base.msc, self.base.vertices, self.edges)


def _event_of(vertex: MessageVertex, kind: EventKind) -> Optional[EventId]:
    if kind == EventKind.SEND:
        return vertex.send_event
    return vertex.receive_event


def conflict_graph(msc: MessageSequenceChart) -> ConflictGraph:
    """An XY edge from v to w whenever the X event of v precedes the Y event of w on one process."""
    vertices = msc.vertices()
    edges: Set[ConflictEdge] = set()
    for first in vertices:
        for second in vertices:
            for x in EventKind:
                for y in EventKind:
                    source_event = _event_of(first, x)
                    target_event = _event_of(second, y)
                    if source_event is None or target_event is None:
                        continue
                    if msc.po_precedes(source_event, target_event):
                        edges.add(ConflictEdge(first.id, EdgeLabel.of(x, y), second.id))
    return ConflictGraph(msc, vertices, frozenset(edges))


def event_graph(graph: ConflictGraph) -> "nx.DiGraph[EventNode]":
    """Dependencies between the send and receive events of the messages.

    Holds the given edges, every matched send before its receive, same-receiver
    receive order imposed on the sends, and matched sends before unmatched
    sends to the same receiver.
    """
    dependencies: "nx.DiGraph[EventNode]" = nx.DiGraph()
    for vertex in graph.vertices:
        dependencies.add_node((vertex.id, EventKind.SEND))
        if vertex.is_matched:
            dependencies.add_node((vertex.id, EventKind.RECEIVE))
            dependencies.add_edge(
                (vertex.id, EventKind.SEND), (vertex.id, EventKind.RECEIVE)
            )
    for edge in graph.edges:
        dependencies.add_edge(
            (edge.source, edge.label.source_kind), (edge.target, edge.label.target_kind)
        )
    msc = graph.msc
    for first in graph.vertices:
        for second in graph.vertices:
            if first.id == second.id or first.receiver != second.receiver:
                continue
            if not first.is_matched:
                continue
            if second.is_matched:
                if first.receive_event is None or second.receive_event is None:
                    raise NotImplementedError("'receive_event' should never be None here")
                if msc.po_precedes(first.receive_event, second.receive_event):
                    dependencies.add_edge(
                        (first.id, EventKind.SEND), (second.id, EventKind.SEND)
                    )
            else:
                dependencies.add_edge(
                    (first.id, EventKind.SEND), (second.id, EventKind.SEND)
                )
    return dependencies


def extended_closure(graph: ConflictGraph) -> ExtendedConflictGraph:
    closure = nx.transitive_closure(event_graph(graph), reflexive=False)
    edges = frozenset(
        ConflictEdge(source[0], EdgeLabel.of(source[1], target[1]), target[0])
        for source, target in closure.edges
    )
    return ExtendedConflictGraph(graph, edges | graph.edges)


class BufferState(NamedTuple):
    """Per process r: the senders and the receivers causally after an unmatched message to r.

    Stored as (r, p) pairs meaning p belongs to the set of r.
    """

    send_pairs: FrozenSet[Tuple[ProcessId, ProcessId]] = frozenset()
    receive_pairs: FrozenSet[Tuple[ProcessId, ProcessId]] = frozenset()

    @classmethod
    def empty(cls) -> "BufferState":
        return cls(frozenset(), frozenset())

    @classmethod
    def from_sets(
        cls,
        send_sets: Dict[ProcessId, Iterable[ProcessId]],
        receive_sets: Dict[ProcessId, Iterable[ProcessId]],
    ) -> "BufferState":
        return cls(
            frozenset((r, p) for r, members in send_sets.items() for p in members),
            frozenset((r, p) for r, members in receive_sets.items() for p in members),
        )

    def send_set(self, process: ProcessId) -> FrozenSet[ProcessId]:
        return frozenset(p for r, p in self.send_pairs if r == process)

    def receive_set(self, process: ProcessId) -> FrozenSet[ProcessId]:
        return frozenset(p for r, p in self.receive_pairs if r == process)

    def processes(self) -> FrozenSet[ProcessId]:
        return frozenset(r for r, _ in self.send_pairs | self.receive_pairs)

    def is_good(self) -> bool:
        return all(r != p for r, p in self.receive_pairs)

    def is_empty(self) -> bool:
        return not self.send_pairs and not self.receive_pairs

    def issubset(self, other: "BufferState") -> bool:
        return self.send_pairs <= other.send_pairs and self.receive_pairs <= other.receive_pairs

    def describe(self) -> str:
        parts = []
        for process in sorted(self.processes()):
            senders = ",".join(sorted(self.send_set(process)))
            receivers = ",".join(sorted(self.receive_set(process)))
            parts.append(f"{process}:S{{{senders}}}R{{{receivers}}}")
        return " ".join(parts) if parts else "empty"


def buffer_state(msc: MessageSequenceChart) -> BufferState:
    extended = extended_closure(conflict_graph(msc))
    by_id = {vertex.id: vertex for vertex in extended.base.vertices}
    send_pairs: Set[Tuple[ProcessId, ProcessId]] = set()
    receive_pairs: Set[Tuple[ProcessId, ProcessId]] = set()
    for vertex in extended.base.vertices:
        if not vertex.is_matched:
            send_pairs.add((vertex.receiver, vertex.sender))
    for edge in extended.edges:
        if edge.label != EdgeLabel.SS:
            continue
        origin = by_id[edge.source]
        if origin.is_matched:
            continue
        reached = by_id[edge.target]
        send_pairs.add((origin.receiver, reached.sender))
        if reached.is_matched:
            receive_pairs.add((origin.receiver, reached.receiver))
    return BufferState(frozenset(send_pairs), frozenset(receive_pairs))


class AcyclicityVerdicts(NamedTuple):
    no_send_self_loop: bool
    no_cycle: bool


def acyclicity_verdicts(msc: MessageSequenceChart) -> AcyclicityVerdicts:
    """Both readings of extended-graph acyclicity."""
    graph = conflict_graph(msc)
    extended = extended_closure(graph)
    no_send_self_loop = not any(
        edge.label == EdgeLabel.SS and edge.source == edge.target
        for edge in extended.edges
    )
    no_cycle = nx.is_directed_acyclic_graph(event_graph(graph))
    if no_send_self_loop != no_cycle:
        logger.warning(
            "acyclicity readings disagree on %r: no SS self-loop=%s, no cycle=%s",
            msc,
            no_send_self_loop,
            no_cycle,
        )
    return AcyclicityVerdicts(no_send_self_loop, no_cycle)


def check_causal(msc: MessageSequenceChart) -> bool:
    """Causal delivery: a good buffer state and an acyclic extended conflict graph."""
    if not buffer_state(msc).is_good():
        return False
    return acyclicity_verdicts(msc).no_cycle


class Condensation(NamedTuple):
    """Strongly connected components in topological order and the edges between them."""

    components: Tuple[Tuple[EventId, ...], ...]
    edges: FrozenSet[Tuple[int, int]]


def sccs(graph: ConflictGraph) -> Condensation:
    digraph = graph.as_digraph()
    if digraph.number_of_nodes() == 0:
        return Condensation((), frozenset())
    condensed = nx.condensation(digraph)
    members = {
        node: tuple(sorted(condensed.nodes[node]["members"])) for node in condensed.nodes
    }
    order = list(
        nx.lexicographical_topological_sort(condensed, key=lambda node: members[node][0])
    )
    position = {node: index for index, node in enumerate(order)}
    return Condensation(
        tuple(members[node] for node in order),
        frozenset((position[a], position[b]) for a, b in condensed.edges),
    )


def is_prime_msc(msc: MessageSequenceChart) -> bool:
    """A nonempty exchange whose conflict graph is strongly connected."""
    if not is_exchange(msc):
        raise NotAnExchangeError("primality is defined for exchanges only")
    if msc.is_empty:
        return False
    return bool(nx.is_strongly_connected(conflict_graph(msc).as_digraph()))


def is_k_synchronizable_msc(msc: MessageSequenceChart, k: int) -> bool:
    """Every strongly connected component is an exchange with at most k sends."""
    if msc.is_empty:
        return True
    if k == 0:
        return False
    for component in sccs(conflict_graph(msc)).components:
        if not is_k_exchange(sub_msc(msc, component), k):
            return False
    return True


def _prefix_closed_subsets(msc: MessageSequenceChart) -> Iterator[FrozenSet[EventId]]:
    """Nonempty proper sets of messages whose events form a prefix on every process."""
    vertices = [vertex.id for vertex in msc.vertices()]
    for size in range(1, len(vertices)):
        for chosen in combinations(vertices, size):
            if _is_prefix_closed(msc, frozenset(chosen)):
                yield frozenset(chosen)


def _owned_events(msc: MessageSequenceChart, chosen: FrozenSet[EventId]) -> Set[EventId]:
    events: Set[EventId] = set(chosen)
    for vertex in chosen:
        receive_event = msc.receive_of(vertex)
        if receive_event is not None:
            events.add(receive_event)
    return events


def _is_prefix_closed(msc: MessageSequenceChart, chosen: FrozenSet[EventId]) -> bool:
    events = _owned_events(msc, chosen)
    for process in msc.processes():
        left_prefix = False
        for event in msc.process_events(process):
            if event not in events:
                left_prefix = True
            elif left_prefix:
                return False
    return True


def _remainder(msc: MessageSequenceChart, chosen: FrozenSet[EventId]) -> MessageSequenceChart:
    return sub_msc(msc, [v.id for v in msc.vertices() if v.id not in chosen])


def is_prime_by_split_search(msc: MessageSequenceChart) -> bool:
    """Brute force: no split into two nonempty exchanges exists."""
    if not is_exchange(msc):
        raise NotAnExchangeError("primality is defined for exchanges only")
    if msc.is_empty:
        return False
    for chosen in _prefix_closed_subsets(msc):
        if is_exchange(sub_msc(msc, chosen)) and is_exchange(_remainder(msc, chosen)):
            return False
    return True


def is_k_synchronizable_by_chop_search(msc: MessageSequenceChart, k: int) -> bool:
    """Brute force: peel off k-exchange prefixes until nothing is left."""
    if msc.is_empty:
        return True
    if is_k_exchange(msc, k):
        return True
    for chosen in _prefix_closed_subsets(msc):
        if is_k_exchange(sub_msc(msc, chosen), k) and is_k_synchronizable_by_chop_search(
            _remainder(msc, chosen), k
        ):
            return True
    return False


def harvest_exchanges(msc: MessageSequenceChart) -> List[SigmaWord]:
    """Chop an MSC into the words of its strongly connected exchanges, in topological order.

    Sends keep their order in the MSC. Empty when some component is not an exchange.
    """
    words: List[SigmaWord] = []
    for component in sccs(conflict_graph(msc)).components:
        part = sub_msc(msc, component)
        if not is_exchange(part):
            return []
        words.append(exchange_word(part, order=tuple(part.events)))
    return words
