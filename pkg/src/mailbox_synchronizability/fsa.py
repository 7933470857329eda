# -*- coding: utf-8 -*-
"""Finite automata over exchange symbols, materialized lazily from a successor function."""
from collections import deque
import logging
from typing import Callable
from typing import Deque
from typing import Dict
from typing import FrozenSet
from typing import Hashable
from typing import Iterable
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Sequence
from typing import Set
from typing import Tuple
from typing import Union

import networkx as nx

from .exceptions import AlphabetMismatchError
from .exceptions import EnumerationCapExceededError
from .exceptions import StateGuardExceededError
from .model import SigmaSymbol
from .model import SigmaWord
from .settings import DEFAULT_ENUMERATE_CAP
from .settings import DEFAULT_STATE_GUARD

logger = logging.getLogger(__name__)

State = Hashable
Arc = Tuple[SigmaSymbol, State]
Successors = Callable[[State], Iterable[Arc]]


class Nfa:
    """A nondeterministic automaton whose states are discovered on demand.

    Args:
        alphabet: the symbols the automaton reads
        initial: the initial states
        successors: maps a state to its outgoing (symbol, target) arcs
        is_final: the acceptance predicate
        name: used in log lines and guard errors
        state_guard: maximum number of states that may be materialized
        describe: renders a state for DOT export
    """

    def __init__(
        self,
        alphabet: Iterable[SigmaSymbol],
        initial: Iterable[State],
        successors: Successors,
        is_final: Callable[[State], bool],
        name: str = "automaton",
        state_guard: int = DEFAULT_STATE_GUARD,
        describe: Callable[[State], str] = str,
    ) -> None:
        self.alphabet: FrozenSet[SigmaSymbol] = frozenset(alphabet)
        self.symbols: Tuple[SigmaSymbol, ...] = tuple(sorted(self.alphabet))
        self.initial: Tuple[State, ...] = tuple(dict.fromkeys(initial))
        self.name = name
        self.state_guard = state_guard
        self.describe = describe
        self._successors = successors
        self._is_final = is_final
        self._arcs: Dict[State, Tuple[Arc, ...]] = {}
        self._by_symbol: Dict[State, Dict[SigmaSymbol, Tuple[State, ...]]] = {}
        self._reachable: Optional[Tuple[State, ...]] = None

    @classmethod
    def from_transitions(
        cls,
        alphabet: Iterable[SigmaSymbol],
        initial: Iterable[State],
        finals: Iterable[State],
        transitions: Iterable[Tuple[State, SigmaSymbol, State]],
        name: str = "automaton",
    ) -> "Nfa":
        outgoing: Dict[State, List[Arc]] = {}
        for source, symbol, target in transitions:
            outgoing.setdefault(source, []).append((symbol, target))
        final_states = frozenset(finals)
        return cls(
            alphabet,
            initial,
            lambda state: outgoing.get(state, ()),
            lambda state: state in final_states,
            name=name,
        )

    @classmethod
    def universal(cls, alphabet: Iterable[SigmaSymbol]) -> "Nfa":
        symbols = tuple(sorted(frozenset(alphabet)))
        return cls(
            symbols,
            [0],
            lambda state: tuple((symbol, 0) for symbol in symbols),
            lambda state: True,
            name="universal",
        )

    @classmethod
    def empty(cls, alphabet: Iterable[SigmaSymbol]) -> "Nfa":
        return cls(alphabet, (), lambda state: (), lambda state: False, name="empty")

    def arcs(self, state: State) -> Tuple[Arc, ...]:
        cached = self._arcs.get(state)
        if cached is not None:
            return cached
        if len(self._arcs) >= self.state_guard:
            raise StateGuardExceededError(self.name, self.state_guard)
        arcs = tuple(dict.fromkeys(self._successors(state)))
        self._arcs[state] = arcs
        return arcs

    def targets(self, state: State, symbol: SigmaSymbol) -> Tuple[State, ...]:
        table = self._by_symbol.get(state)
        if table is None:
            grouped: Dict[SigmaSymbol, List[State]] = {}
            for arc_symbol, target in self.arcs(state):
                grouped.setdefault(arc_symbol, []).append(target)
            table = {key: tuple(value) for key, value in grouped.items()}
            self._by_symbol[state] = table
        return table.get(symbol, ())

    def is_final(self, state: State) -> bool:
        return bool(self._is_final(state))

    def reachable_states(self) -> Tuple[State, ...]:
        """Breadth-first discovery order from the initial states."""
        if self._reachable is None:
            seen: Set[State] = set(self.initial)
            order: List[State] = list(self.initial)
            queue: Deque[State] = deque(self.initial)
            while queue:
                state = queue.popleft()
                for _, target in self.arcs(state):
                    if target not in seen:
                        seen.add(target)
                        order.append(target)
                        queue.append(target)
            self._reachable = tuple(order)
            logger.debug("%s: %d reachable states", self.name, len(order))
        return self._reachable

    def transitions(self) -> Tuple[Tuple[State, SigmaSymbol, State], ...]:
        return tuple(
            (state, symbol, target)
            for state in self.reachable_states()
            for symbol, target in self.arcs(state)
        )

    def finals(self) -> Tuple[State, ...]:
        return tuple(s for s in self.reachable_states() if self.is_final(s))

    def co_reachable_states(self) -> FrozenSet[State]:
        """Reachable states from which some final state can be reached."""
        predecessors: Dict[State, List[State]] = {}
        for source, _, target in self.transitions():
            predecessors.setdefault(target, []).append(source)
        alive: Set[State] = set(self.finals())
        queue: Deque[State] = deque(alive)
        while queue:
            state = queue.popleft()
            for source in predecessors.get(state, ()):
                if source not in alive:
                    alive.add(source)
                    queue.append(source)
        return frozenset(alive)

    def trimmed_graph(self) -> "nx.MultiDiGraph[State]":
        """The useful part: reachable and co-reachable states, arcs keyed by symbol."""
        useful = self.co_reachable_states()
        graph: "nx.MultiDiGraph[State]" = nx.MultiDiGraph()
        graph.add_nodes_from(s for s in self.reachable_states() if s in useful)
        for source, symbol, target in self.transitions():
            if source in useful and target in useful:
                graph.add_edge(source, target, key=symbol)
        return graph

    def run(self, word: Sequence[SigmaSymbol]) -> FrozenSet[State]:
        """States reached after reading the word."""
        current: Set[State] = set(self.initial)
        for symbol in word:
            current = {t for state in current for t in self.targets(state, symbol)}
            if not current:
                break
        return frozenset(current)

    def accepts(self, word: Sequence[SigmaSymbol]) -> bool:
        return any(self.is_final(state) for state in self.run(word))

    def __repr__(self) -> str:
        return f"Nfa(name={self.name!r}, symbols={len(self.symbols)})"


def _check_alphabets(automata: Sequence[Nfa]) -> None:
    for automaton in automata[1:]:
        if automaton.alphabet != automata[0].alphabet:
            raise AlphabetMismatchError(
                f"'{automata[0].name}' and '{automaton.name}' read different alphabets"
            )


def intersect(first: Nfa, second: Nfa, state_guard: int = DEFAULT_STATE_GUARD) -> Nfa:
    """Product automaton built lazily from the pairs of initial states."""
    _check_alphabets([first, second])

    def successors(state: State) -> Iterable[Arc]:
        left, right = state  # type: ignore[misc]
        for symbol, left_target in first.arcs(left):
            for right_target in second.targets(right, symbol):
                yield symbol, (left_target, right_target)

    return Nfa(
        first.alphabet,
        [(a, b) for a in first.initial for b in second.initial],
        successors,
        lambda state: first.is_final(state[0]) and second.is_final(state[1]),  # type: ignore[index]
        name=f"({first.name} & {second.name})",
        state_guard=state_guard,
        describe=lambda state: f"{first.describe(state[0])} | {second.describe(state[1])}",  # type: ignore[index]
    )


def union(*automata: Nfa) -> Nfa:
    """Disjoint union; states are tagged with the index of their automaton."""
    if not automata:
        raise NotImplementedError("'automata' should never be empty here")
    _check_alphabets(automata)

    def successors(state: State) -> Iterable[Arc]:
        index, inner = state  # type: ignore[misc]
        for symbol, target in automata[index].arcs(inner):
            yield symbol, (index, target)

    return Nfa(
        automata[0].alphabet,
        [(index, s) for index, automaton in enumerate(automata) for s in automaton.initial],
        successors,
        lambda state: automata[state[0]].is_final(state[1]),  # type: ignore[index]
        name="union",
        state_guard=max(automaton.state_guard for automaton in automata),
        describe=lambda state: f"{state[0]}:{automata[state[0]].describe(state[1])}",  # type: ignore[index]
    )


class EmptyLanguage(NamedTuple):
    pass


class FiniteLanguage(NamedTuple):
    max_len: int
    witness: SigmaWord


class InfiniteLanguage(NamedTuple):
    """Every prefix + loop^n + suffix is accepted."""

    prefix: SigmaWord
    loop: SigmaWord
    suffix: SigmaWord

    def pump(self, times: int) -> SigmaWord:
        return self.prefix + self.loop * times + self.suffix


LengthVerdict = Union[EmptyLanguage, FiniteLanguage, InfiniteLanguage]


def _edge_symbol(graph: "nx.MultiDiGraph[State]", source: State, target: State) -> SigmaSymbol:
    return min(graph[source][target])  # type: ignore[no-any-return]


def _shortest_path_word(
    graph: "nx.MultiDiGraph[State]", sources: Iterable[State], goal: Callable[[State], bool]
) -> Tuple[SigmaWord, State]:
    parents: Dict[State, Optional[Tuple[State, SigmaSymbol]]] = {}
    queue: Deque[State] = deque()
    for source in sources:
        if source not in parents:
            parents[source] = None
            queue.append(source)
    while queue:
        state = queue.popleft()
        if goal(state):
            word: List[SigmaSymbol] = []
            cursor = state
            while parents[cursor] is not None:
                previous, symbol = parents[cursor]  # type: ignore[misc]
                word.append(symbol)
                cursor = previous
            return tuple(reversed(word)), state
        for target in graph.successors(state):
            if target not in parents:
                parents[target] = (state, _edge_symbol(graph, state, target))
                queue.append(target)
    raise NotImplementedError("'goal' should never be unreachable here")


def longest_word(automaton: Nfa) -> LengthVerdict:
    graph = automaton.trimmed_graph()
    starts = [s for s in automaton.initial if s in graph]
    if not starts:
        return EmptyLanguage()
    try:
        cycle = nx.find_cycle(graph, source=starts)
    except nx.NetworkXNoCycle:
        cycle = None
    if cycle is not None:
        anchor = cycle[0][0]
        prefix, _ = _shortest_path_word(graph, starts, lambda state: state == anchor)
        loop = tuple(symbol for _, _, symbol in cycle)
        suffix, _ = _shortest_path_word(graph, [anchor], automaton.is_final)
        return InfiniteLanguage(prefix, loop, suffix)
    discovery = {state: index for index, state in enumerate(automaton.reachable_states())}
    best: Dict[State, Tuple[int, Optional[Tuple[State, SigmaSymbol]]]] = {
        state: (0, None) for state in starts
    }
    for state in nx.lexicographical_topological_sort(graph, key=discovery.__getitem__):
        if state not in best:
            continue
        length, _ = best[state]
        for _, target, symbol in sorted(
            graph.out_edges(state, keys=True), key=lambda edge: (discovery[edge[1]], edge[2])
        ):
            if target not in best or best[target][0] < length + 1:
                best[target] = (length + 1, (state, symbol))
    finals = [state for state in best if automaton.is_final(state)]
    end = max(finals, key=lambda state: (best[state][0], -discovery[state]))
    word: List[SigmaSymbol] = []
    cursor = end
    while best[cursor][1] is not None:
        previous, symbol = best[cursor][1]  # type: ignore[misc]
        word.append(symbol)
        cursor = previous
    witness = tuple(reversed(word))
    return FiniteLanguage(len(witness), witness)


def shortest_word(automaton: Nfa) -> Optional[SigmaWord]:
    graph = automaton.trimmed_graph()
    starts = [s for s in automaton.initial if s in graph]
    if not starts:
        return None
    word, _ = _shortest_path_word(graph, starts, automaton.is_final)
    return word


def enumerate_language(
    automaton: Nfa, max_len: int, cap: int = DEFAULT_ENUMERATE_CAP
) -> List[SigmaWord]:
    """Accepted words of length at most max_len, in length-lexicographic order."""
    useful = automaton.co_reachable_states()
    frontier: List[Tuple[SigmaWord, FrozenSet[State]]] = []
    start = frozenset(s for s in automaton.initial if s in useful)
    if start:
        frontier.append(((), start))
    accepted: List[SigmaWord] = []
    for length in range(max_len + 1):
        for word, states in frontier:
            if any(automaton.is_final(state) for state in states):
                accepted.append(word)
                if len(accepted) > cap:
                    raise EnumerationCapExceededError(automaton.name, cap)
        if length == max_len:
            break
        following: List[Tuple[SigmaWord, FrozenSet[State]]] = []
        for word, states in frontier:
            for symbol in automaton.symbols:
                targets = frozenset(
                    t for state in states for t in automaton.targets(state, symbol) if t in useful
                )
                if targets:
                    following.append((word + (symbol,), targets))
        if len(following) > cap:
            raise EnumerationCapExceededError(automaton.name, cap)
        frontier = following
    return accepted
