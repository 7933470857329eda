# -*- coding: utf-8 -*-
"""Automata for exchanges: control-state pairing, causal delivery, feasibility and reachability."""
from collections import deque
import logging
from typing import Deque
from typing import Dict
from typing import FrozenSet
from typing import Iterable
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Set
from typing import Tuple

from .conflict import BufferState
from .exceptions import NodeGuardExceededError
from .fsa import Arc
from .fsa import Nfa
from .fsa import State
from .fsa import intersect
from .fsa import shortest_word
from .fsa import union
from .model import GlobalAutomaton
from .model import GlobalState
from .model import ProcessId
from .model import SigmaSymbol
from .model import SigmaWord
from .model import SymbolKind
from .model import System
from .model import global_product
from .settings import AnalysisSettings
from .settings import DEFAULT_STATE_GUARD
from .settings import resolve_settings

logger = logging.getLogger(__name__)


class AsrState(NamedTuple):
    send_side: GlobalState
    recv_side: GlobalState

    def describe(self) -> str:
        return f"({','.join(self.send_side)})|({','.join(self.recv_side)})"


def build_asr(
    product: GlobalAutomaton,
    l_in: GlobalState,
    l_mid: GlobalState,
    l_fin: Optional[GlobalState] = None,
    state_guard: int = DEFAULT_STATE_GUARD,
) -> Nfa:
    """Reads the sends of a word from l_in to l_mid and its receives from l_mid to l_fin.

    An unmatched symbol moves the send side only; a matched symbol moves the
    send side by its send and the receive side by its receive. With l_fin
    None any receive-side state is final.
    """
    for state in (l_in, l_mid) + ((l_fin,) if l_fin is not None else ()):
        product.require_state(state)

    def successors(state: State) -> Iterable[Arc]:
        current: AsrState = state  # type: ignore[assignment]
        for transition in product.sends_from(current.send_side):
            action = transition.action
            yield (
                SigmaSymbol(SymbolKind.UNMATCHED, action.sender, action.receiver, action.payload),
                AsrState(transition.target, current.recv_side),
            )
            for receipt in product.receives_from(current.recv_side):
                other = receipt.action
                if (other.sender, other.receiver, other.payload) != (
                    action.sender,
                    action.receiver,
                    action.payload,
                ):
                    continue
                yield (
                    SigmaSymbol(SymbolKind.MATCHED, action.sender, action.receiver, action.payload),
                    AsrState(transition.target, receipt.target),
                )

    def is_final(state: State) -> bool:
        current: AsrState = state  # type: ignore[assignment]
        return current.send_side == l_mid and (l_fin is None or current.recv_side == l_fin)

    return Nfa(
        product.alphabet,
        [AsrState(l_in, l_mid)],
        successors,
        is_final,
        name="control automaton",
        state_guard=state_guard,
        describe=lambda state: state.describe(),  # type: ignore[attr-defined]
    )


class CausalState(NamedTuple):
    """A buffer state plus, per process r, the processes whose receives are causally after an unmatched message to r.

    The second component starts as the receive sets of the initial buffer
    state and grows as messages chain receives together.
    """

    buffers: BufferState
    prefix_receivers: FrozenSet[Tuple[ProcessId, ProcessId]]

    @classmethod
    def start(cls, initial: BufferState) -> "CausalState":
        return cls(initial, initial.receive_pairs)

    def prefix_receiver_set(self, process: ProcessId) -> FrozenSet[ProcessId]:
        return frozenset(p for r, p in self.prefix_receivers if r == process)

    def describe(self) -> str:
        return self.buffers.describe()


def cd_step(state: CausalState, symbol: SigmaSymbol) -> CausalState:
    """Update the buffer state after one more message of the exchange.

    The receive sets of the buffer state the exchange started from are not
    a separate argument: they seed ``state.prefix_receivers`` through
    ``CausalState.start`` and only grow from there.
    """
    buffers = state.buffers
    p, q = symbol.sender, symbol.receiver
    candidates = buffers.processes() | {r for r, _ in state.prefix_receivers} | {q}
    send_pairs: Set[Tuple[ProcessId, ProcessId]] = set(buffers.send_pairs)
    receive_pairs: Set[Tuple[ProcessId, ProcessId]] = set(buffers.receive_pairs)
    prefix_receivers: Set[Tuple[ProcessId, ProcessId]] = set(state.prefix_receivers)
    if not symbol.is_matched:
        for r in candidates:
            if (
                q == r
                or q in buffers.receive_set(r)
                or p in state.prefix_receiver_set(r)
            ):
                send_pairs.add((r, p))
        return CausalState(
            BufferState(frozenset(send_pairs), buffers.receive_pairs),
            state.prefix_receivers,
        )
    senders_of_q = buffers.send_set(q)
    receivers_of_q = buffers.receive_set(q)
    prefix_of_q = state.prefix_receiver_set(q)
    for r in candidates:
        sender_joins = p in state.prefix_receiver_set(r) or q in buffers.receive_set(r)
        if not sender_joins and p not in buffers.send_set(r):
            continue
        if sender_joins:
            send_pairs.add((r, p))
        send_pairs.update((r, s) for s in senders_of_q)
        receive_pairs.add((r, q))
        receive_pairs.update((r, s) for s in receivers_of_q)
        prefix_receivers.update((r, s) for s in prefix_of_q)
    return CausalState(
        BufferState(frozenset(send_pairs), frozenset(receive_pairs)),
        frozenset(prefix_receivers),
    )


def run_causal(initial: BufferState, word: Iterable[SigmaSymbol]) -> CausalState:
    state = CausalState.start(initial)
    for symbol in word:
        state = cd_step(state, symbol)
    return state


def build_cd(
    initial: BufferState,
    final: Optional[BufferState],
    alphabet: Iterable[SigmaSymbol],
    state_guard: int = DEFAULT_STATE_GUARD,
) -> Nfa:
    """Deterministic automaton of cd_step runs from initial ending in final.

    With final None every good buffer state is final. Buffer states only
    grow, so runs that leave the good states, or outgrow final, are cut.
    """
    symbols = tuple(sorted(frozenset(alphabet)))

    def alive(state: CausalState) -> bool:
        if final is None:
            return state.buffers.is_good()
        if not final.is_good():
            return state.buffers.issubset(final)
        return state.buffers.is_good() and state.buffers.issubset(final)

    def successors(state: State) -> Iterable[Arc]:
        for symbol in symbols:
            following = cd_step(state, symbol)  # type: ignore[arg-type]
            if alive(following):
                yield symbol, following

    def is_final(state: State) -> bool:
        current: CausalState = state  # type: ignore[assignment]
        if final is None:
            return current.buffers.is_good()
        return current.buffers == final

    start = CausalState.start(initial)
    return Nfa(
        symbols,
        [start] if alive(start) else [],
        successors,
        is_final,
        name="causal exchange automaton",
        state_guard=state_guard,
        describe=lambda state: state.describe(),  # type: ignore[attr-defined]
    )


def feasible(
    product: GlobalAutomaton,
    l_in: GlobalState,
    l_fin: Optional[GlobalState],
    b_in: BufferState,
    b_fin: Optional[BufferState],
    state_guard: int = DEFAULT_STATE_GUARD,
) -> Nfa:
    """Words of exchanges leading from (l_in, b_in) to (l_fin, b_fin), one control automaton per middle state."""
    causal = build_cd(b_in, b_fin, product.alphabet, state_guard)
    return union(
        *(
            intersect(build_asr(product, l_in, mid, l_fin, state_guard), causal, state_guard)
            for mid in product.states
        )
    )


class ReachNode(NamedTuple):
    control: GlobalState
    buffers: BufferState

    def describe(self) -> str:
        return f"({','.join(self.control)}) {self.buffers.describe()}"


def _target_of(state: State) -> ReachNode:
    _, (asr_state, causal_state) = state  # type: ignore[misc]
    return ReachNode(asr_state.recv_side, causal_state.buffers)


class ReachGraph:
    """Reachable (control, buffer state) pairs and the exchanges between them."""

    def __init__(
        self,
        system: System,
        product: GlobalAutomaton,
        root: ReachNode,
        state_guard: int = DEFAULT_STATE_GUARD,
    ) -> None:
        self.system = system
        self.product = product
        self.root = root
        self.state_guard = state_guard
        self.nodes: List[ReachNode] = [root]
        self.edges: Dict[ReachNode, Tuple[ReachNode, ...]] = {}
        self._node_languages: Dict[ReachNode, Nfa] = {}
        self._edge_languages: Dict[Tuple[ReachNode, ReachNode], Nfa] = {}

    def node_language(self, node: ReachNode) -> Nfa:
        """Every exchange executable from the node; final states carry their target node."""
        language = self._node_languages.get(node)
        if language is None:
            language = feasible(
                self.product, node.control, None, node.buffers, None, self.state_guard
            )
            self._node_languages[node] = language
        return language

    def edge_language(self, source: ReachNode, target: ReachNode) -> Nfa:
        key = (source, target)
        language = self._edge_languages.get(key)
        if language is None:
            language = feasible(
                self.product,
                source.control,
                target.control,
                source.buffers,
                target.buffers,
                self.state_guard,
            )
            self._edge_languages[key] = language
        return language

    def targets_after(self, node: ReachNode, word: SigmaWord) -> Tuple[ReachNode, ...]:
        """Nodes reached from node by the exchange encoded by word."""
        language = self.node_language(node)
        reached = {
            _target_of(state) for state in language.run(word) if language.is_final(state)
        }
        return tuple(sorted(reached))

    def successors(self, node: ReachNode) -> Tuple[ReachNode, ...]:
        return self.edges.get(node, ())

    def context_words(self, node: ReachNode) -> Tuple[SigmaWord, ...]:
        """Exchanges along a shortest path of edges from the root to node."""
        parents: Dict[ReachNode, Optional[ReachNode]] = {self.root: None}
        queue: Deque[ReachNode] = deque([self.root])
        while queue and node not in parents:
            current = queue.popleft()
            for target in self.successors(current):
                if target not in parents:
                    parents[target] = current
                    queue.append(target)
        if node not in parents:
            raise NotImplementedError(f"'{node.describe()}' should never be unreachable here")
        words: List[SigmaWord] = []
        cursor = node
        while parents[cursor] is not None:
            previous = parents[cursor]
            if previous is None:
                raise NotImplementedError("'previous' should never be None here")
            word = shortest_word(self.edge_language(previous, cursor))
            if word is None:
                raise NotImplementedError("'word' should never be None for an edge")
            words.append(word)
            cursor = previous
        return tuple(reversed(words))

    def language(self) -> Nfa:
        """Recognizer of every reachable exchange."""
        return union(*(self.node_language(node) for node in self.nodes))


def reach_fixpoint(
    system: System, settings: Optional[AnalysisSettings] = None
) -> ReachGraph:
    """Worklist over (control, buffer state) pairs from the initial control with empty buffers."""
    settings = resolve_settings(settings)
    state_guard = settings.bound("state_guard")
    node_guard = settings.bound("node_guard")
    product = global_product(system, state_guard)
    root = ReachNode(product.initial, BufferState.empty())
    graph = ReachGraph(system, product, root, state_guard)
    seen: Set[ReachNode] = {root}
    queue: Deque[ReachNode] = deque([root])
    while queue:
        node = queue.popleft()
        language = graph.node_language(node)
        targets = sorted({_target_of(state) for state in language.finals()})
        graph.edges[node] = tuple(targets)
        for target in targets:
            if target in seen:
                continue
            if len(seen) >= node_guard:
                raise NodeGuardExceededError("reach fixpoint", node_guard)
            seen.add(target)
            graph.nodes.append(target)
            queue.append(target)
    logger.info(
        "reach fixpoint of %s: %d nodes, %d edges",
        system.name,
        len(graph.nodes),
        sum(len(targets) for targets in graph.edges.values()),
    )
    return graph


def reach_language(
    system: System, settings: Optional[AnalysisSettings] = None
) -> Nfa:
    return reach_fixpoint(system, settings).language()
