# -*- coding: utf-8 -*-
"""Message sequence charts and the exchange predicates on them."""
from typing import Dict
from typing import FrozenSet
from typing import Iterable
from typing import Iterator
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Sequence
from typing import Set
from typing import Tuple

from domain_model import DomainModel
import networkx as nx

from .exceptions import MalformedMscError
from .exceptions import NotAnExchangeError
from .exceptions import OracleCapExceededError
from .exceptions import UnmatchedReceiveError
from .model import Action
from .model import ProcessId
from .model import SigmaSymbol
from .model import SigmaWord
from .model import SymbolKind
from .model import exchange_actions
from .settings import DEFAULT_LINEARIZATION_CAP
from .settings import DEFAULT_ORACLE_EVENT_CAP

EventId = int
SrcPair = Tuple[EventId, EventId]


class MessageVertex(NamedTuple):
    """One message of an MSC; its id is the id of its send event."""

    id: EventId
    send_event: EventId
    receive_event: Optional[EventId]
    sender: ProcessId
    receiver: ProcessId
    payload: str

    @property
    def is_matched(self) -> bool:
        return self.receive_event is not None


class MessageSequenceChart(DomainModel):
    """Events numbered 0..n-1 with their actions and the send/receive pairing.

    Process order is the id order of the events executed by the same process.

    Args:
        labels: the action of every event, indexed by event id
        src: (send event, receive event) pairs
    """

    def __init__(
        self,
        labels: Optional[Sequence[Action]] = None,
        src: Optional[Iterable[SrcPair]] = None,
    ):
        super().__init__()
        self.labels: Tuple[Action, ...] = tuple(labels or ())
        self.src: FrozenSet[SrcPair] = frozenset(src or ())
        self._receive_of: Dict[EventId, EventId] = dict(self.src)
        self._send_of: Dict[EventId, EventId] = {r: s for s, r in self.src}
        self._by_process: Dict[ProcessId, List[EventId]] = {}
        for event, action in enumerate(self.labels):
            self._by_process.setdefault(action.process, []).append(event)

    def validate_internals(self, autopopulate: bool = True) -> None:
        super().validate_internals(autopopulate=autopopulate)
        if len(self._receive_of) != len(self.src) or len(self._send_of) != len(
            self.src
        ):
            raise MalformedMscError("an event appears in two message pairs")
        for send_event, receive_event in sorted(self.src):
            self._validate_pair(send_event, receive_event)
        for event, action in enumerate(self.labels):
            if not action.is_send and event not in self._send_of:
                raise UnmatchedReceiveError(event)
        if not nx.is_directed_acyclic_graph(self.order_graph()):
            raise MalformedMscError("process and message orders form a cycle")

    def _validate_pair(self, send_event: EventId, receive_event: EventId) -> None:
        for event in (send_event, receive_event):
            if not 0 <= event < len(self.labels):
                raise MalformedMscError(f"event {event} does not exist")
        sent = self.labels[send_event]
        received = self.labels[receive_event]
        if not sent.is_send or received.is_send:
            raise MalformedMscError(
                f"pair ({send_event}, {receive_event}) is not a send followed by a receive"
            )
        if (sent.sender, sent.receiver, sent.payload) != (
            received.sender,
            received.receiver,
            received.payload,
        ):
            raise MalformedMscError(
                f"pair ({send_event}, {receive_event}) disagrees on its message"
            )

    @property
    def events(self) -> range:
        return range(len(self.labels))

    @property
    def is_empty(self) -> bool:
        return len(self.labels) == 0

    def processes(self) -> Tuple[ProcessId, ...]:
        return tuple(sorted(self._by_process))

    def process_events(self, process: ProcessId) -> Tuple[EventId, ...]:
        return tuple(self._by_process.get(process, ()))

    def receive_of(self, send_event: EventId) -> Optional[EventId]:
        return self._receive_of.get(send_event)

    def send_of(self, receive_event: EventId) -> EventId:
        if receive_event not in self._send_of:
            raise NotImplementedError(
                f"'send_of({receive_event})' should never be missing here"
            )
        return self._send_of[receive_event]

    def po_precedes(self, first: EventId, second: EventId) -> bool:
        return (
            first < second
            and self.labels[first].process == self.labels[second].process
        )

    def send_events(self) -> Tuple[EventId, ...]:
        return tuple(e for e, action in enumerate(self.labels) if action.is_send)

    def vertices(self) -> Tuple[MessageVertex, ...]:
        return tuple(
            MessageVertex(
                event,
                event,
                self._receive_of.get(event),
                self.labels[event].sender,
                self.labels[event].receiver,
                self.labels[event].payload,
            )
            for event in self.send_events()
        )

    def order_graph(self) -> "nx.DiGraph[EventId]":
        """Immediate process-order edges plus message edges."""
        graph: "nx.DiGraph[EventId]" = nx.DiGraph()
        graph.add_nodes_from(self.events)
        for events in self._by_process.values():
            graph.add_edges_from(zip(events, events[1:]))
        graph.add_edges_from(self.src)
        return graph

    def as_tuple(self) -> Tuple[Tuple[Action, ...], FrozenSet[SrcPair]]:
        return (self.labels, self.src)

    def __eq__(self, other: object) -> bool:
        if self.__class__ != other.__class__:
            return False
        if not isinstance(other, MessageSequenceChart):
            raise NotImplementedError(
                "'other' object should always be of type MessageSequenceChart here."
            )
        return self.as_tuple() == other.as_tuple()

    def __hash__(self) -> int:
        # pylint is wrong, you MUST define the __hash__ function in every class.
        return hash(self.as_tuple())

    def __repr__(self) -> str:
        return f"MessageSequenceChart(labels={self.labels!r}, src={sorted(self.src)!r})"


EMPTY_MSC = MessageSequenceChart()


def msc_of_execution(actions: Sequence[Action]) -> MessageSequenceChart:
    """Pair the l-th receive at q from p with the l-th send from p to q."""
    sends: Dict[Tuple[ProcessId, ProcessId], List[EventId]] = {}
    received: Dict[Tuple[ProcessId, ProcessId], int] = {}
    src: Set[SrcPair] = set()
    for event, action in enumerate(actions):
        channel = (action.sender, action.receiver)
        if action.is_send:
            sends.setdefault(channel, []).append(event)
            continue
        rank = received.get(channel, 0)
        candidates = sends.get(channel, [])
        if rank >= len(candidates):
            raise UnmatchedReceiveError(event)
        partner = candidates[rank]
        if actions[partner].payload != action.payload:
            raise MalformedMscError(
                f"receive at position {event} expects '{action.payload}' but its partner sent '{actions[partner].payload}'"
            )
        received[channel] = rank + 1
        src.add((partner, event))
    msc = MessageSequenceChart(actions, src)
    msc.validate_internals()
    return msc


def msc_of_word(word: Sequence[SigmaSymbol]) -> MessageSequenceChart:
    """All sends in symbol order, then the receives of the matched symbols.

    Each matched symbol pairs its own send with its own receive.
    """
    src: Set[SrcPair] = set()
    next_receive = len(word)
    for index, symbol in enumerate(word):
        if symbol.is_matched:
            src.add((index, next_receive))
            next_receive += 1
    msc = MessageSequenceChart(exchange_actions(word), src)
    msc.validate_internals()
    return msc


def concat(first: MessageSequenceChart, second: MessageSequenceChart) -> MessageSequenceChart:
    offset = len(first.labels)
    src = set(first.src)
    src.update((s + offset, r + offset) for s, r in second.src)
    msc = MessageSequenceChart(first.labels + second.labels, src)
    msc.validate_internals()
    return msc


def sub_msc(
    msc: MessageSequenceChart, vertex_ids: Iterable[EventId]
) -> MessageSequenceChart:
    """The sub-MSC induced by some messages, keeping relative event order."""
    kept: Set[EventId] = set()
    for vertex in vertex_ids:
        if not msc.labels[vertex].is_send:
            raise MalformedMscError(f"event {vertex} is not a send")
        kept.add(vertex)
        receive_event = msc.receive_of(vertex)
        if receive_event is not None:
            kept.add(receive_event)
    order = sorted(kept)
    renumber = {event: index for index, event in enumerate(order)}
    src = {
        (renumber[s], renumber[r]) for s, r in msc.src if s in kept and r in kept
    }
    return MessageSequenceChart([msc.labels[e] for e in order], src)


def linearization_orders(
    msc: MessageSequenceChart, cap: int = DEFAULT_LINEARIZATION_CAP
) -> Iterator[Tuple[EventId, ...]]:
    graph = msc.order_graph()
    for count, order in enumerate(nx.all_topological_sorts(graph), start=1):
        if count > cap:
            raise OracleCapExceededError("linearizations", cap)
        yield tuple(order)


def linearizations(
    msc: MessageSequenceChart, cap: int = DEFAULT_LINEARIZATION_CAP
) -> Tuple[Tuple[Action, ...], ...]:
    if msc.is_empty:
        return ((),)
    return tuple(
        tuple(msc.labels[e] for e in order) for order in linearization_orders(msc, cap)
    )


def satisfies_causal_delivery_oracle(
    msc: MessageSequenceChart,
    event_cap: int = DEFAULT_ORACLE_EVENT_CAP,
    linearization_cap: int = DEFAULT_LINEARIZATION_CAP,
) -> bool:
    """Search for a linearization in which sends to one process are received in order.

    A send may be followed by a later send to the same process only if both
    are matched and received in the same order, or if the later one is
    unmatched.
    """
    if len(msc.labels) > event_cap:
        raise OracleCapExceededError("causal delivery oracle", event_cap)
    graph = msc.order_graph()
    remaining = {event: graph.in_degree(event) for event in msc.events}
    placed: Set[EventId] = set()
    sends_to: Dict[ProcessId, List[EventId]] = {}
    visited = [0]

    def allowed(event: EventId) -> bool:
        action = msc.labels[event]
        if action.is_send:
            if msc.receive_of(event) is None:
                return True
            return all(
                msc.receive_of(earlier) is not None
                for earlier in sends_to.get(action.receiver, [])
            )
        partner = msc.send_of(event)
        for earlier in sends_to.get(action.receiver, []):
            if earlier == partner:
                break
            if msc.receive_of(earlier) not in placed:
                return False
        return True

    def search() -> bool:
        if len(placed) == len(msc.labels):
            return True
        visited[0] += 1
        if visited[0] > linearization_cap:
            raise OracleCapExceededError("causal delivery oracle", linearization_cap)
        for event in msc.events:
            if event in placed or remaining[event] != 0 or not allowed(event):
                continue
            action = msc.labels[event]
            placed.add(event)
            if action.is_send:
                sends_to.setdefault(action.receiver, []).append(event)
            for successor in graph.successors(event):
                remaining[successor] -= 1
            found = search()
            for successor in graph.successors(event):
                remaining[successor] += 1
            if action.is_send:
                sends_to[action.receiver].pop()
            placed.discard(event)
            if found:
                return True
        return False

    return search()


def is_exchange(msc: MessageSequenceChart) -> bool:
    """True when no process receives before it sends."""
    for process in msc.processes():
        seen_receive = False
        for event in msc.process_events(process):
            if not msc.labels[event].is_send:
                seen_receive = True
            elif seen_receive:
                return False
    return True


def is_k_exchange(msc: MessageSequenceChart, k: int) -> bool:
    sends = len(msc.send_events())
    receives = len(msc.labels) - sends
    return is_exchange(msc) and sends <= k and receives <= k


def canonical_form(
    msc: MessageSequenceChart,
) -> Tuple[
    Tuple[Tuple[ProcessId, Tuple[Action, ...]], ...],
    Tuple[Tuple[Tuple[ProcessId, int], Tuple[ProcessId, int]], ...],
]:
    """Events keyed by (process, position on process)."""
    position: Dict[EventId, Tuple[ProcessId, int]] = {}
    timelines = []
    for process in msc.processes():
        events = msc.process_events(process)
        for index, event in enumerate(events):
            position[event] = (process, index)
        timelines.append((process, tuple(msc.labels[e] for e in events)))
    pairs = tuple(sorted((position[s], position[r]) for s, r in msc.src))
    return tuple(timelines), pairs


def msc_isomorphic(first: MessageSequenceChart, second: MessageSequenceChart) -> bool:
    return canonical_form(first) == canonical_form(second)


def exchange_word(
    msc: MessageSequenceChart, order: Optional[Sequence[EventId]] = None
) -> SigmaWord:
    """Encode an exchange as a word.

    Without an explicit order the sends are ordered so that every process
    receives its messages in the order of their symbols.
    """
    if not is_exchange(msc):
        raise NotAnExchangeError("a process receives before it sends")
    if order is None:
        order = _encoding_order(msc)
    word: List[SigmaSymbol] = []
    for event in order:
        action = msc.labels[event]
        if not action.is_send:
            continue
        kind = SymbolKind.UNMATCHED if msc.receive_of(event) is None else SymbolKind.MATCHED
        word.append(SigmaSymbol(kind, action.sender, action.receiver, action.payload))
    return tuple(word)


def _encoding_order(msc: MessageSequenceChart) -> Tuple[EventId, ...]:
    graph: "nx.DiGraph[EventId]" = nx.DiGraph()
    graph.add_nodes_from(msc.send_events())
    for process in msc.processes():
        events = msc.process_events(process)
        sends = [e for e in events if msc.labels[e].is_send]
        graph.add_edges_from(zip(sends, sends[1:]))
        partners = [msc.send_of(e) for e in events if not msc.labels[e].is_send]
        graph.add_edges_from(zip(partners, partners[1:]))
    try:
        return tuple(nx.lexicographical_topological_sort(graph))
    except nx.NetworkXUnfeasible:
        raise NotAnExchangeError(  # pylint: disable=raise-missing-from
            "the receive orders contradict every send order"
        )
