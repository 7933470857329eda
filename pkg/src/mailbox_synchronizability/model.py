# -*- coding: utf-8 -*-
"""Processes, actions, systems and their global control product.

Also defines the alphabet of exchange symbols: a matched symbol ``!?m(p->q)``
stands for a send together with its receive, an unmatched symbol ``!m(p->q)``
for a send whose message stays in the receiver's buffer.
"""
from collections import deque
from enum import Enum
import logging
from typing import Deque
from typing import Dict
from typing import FrozenSet
from typing import Iterable
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Sequence
from typing import Set
from typing import Tuple

from domain_model import DomainModel
from immutable_data_validation import validate_str

from .exceptions import DuplicateProcessError
from .exceptions import DuplicateStateError
from .exceptions import EmptySystemError
from .exceptions import ForeignActionError
from .exceptions import MissingInitialStateError
from .exceptions import SelfSendNotAllowedError
from .exceptions import StateGuardExceededError
from .exceptions import SystemDefinitionError
from .exceptions import UndeclaredPayloadError
from .exceptions import UndeclaredProcessError
from .exceptions import UnknownGlobalStateError
from .settings import DEFAULT_STATE_GUARD

logger = logging.getLogger(__name__)

ProcessId = str
Payload = str
LocalState = str
GlobalState = Tuple[LocalState, ...]


class ActionKind(str, Enum):
    SEND = "!"
    RECEIVE = "?"


class Action(NamedTuple):
    kind: ActionKind
    sender: ProcessId
    receiver: ProcessId
    payload: Payload

    @property
    def process(self) -> ProcessId:
        """The process executing the action."""
        if self.kind == ActionKind.SEND:
            return self.sender
        return self.receiver

    @property
    def is_send(self) -> bool:
        return self.kind == ActionKind.SEND


def send(payload: Payload, sender: ProcessId, receiver: ProcessId) -> Action:
    return Action(ActionKind.SEND, sender, receiver, payload)


def receive(payload: Payload, sender: ProcessId, receiver: ProcessId) -> Action:
    return Action(ActionKind.RECEIVE, sender, receiver, payload)


class LocalTransition(NamedTuple):
    source: LocalState
    action: Action
    target: LocalState


class LocalAutomaton(NamedTuple):
    """The transition system of one process; states keep declaration order."""

    name: ProcessId
    states: Tuple[LocalState, ...]
    initial: LocalState
    transitions: Tuple[LocalTransition, ...]


class SymbolKind(str, Enum):
    MATCHED = "!?"
    UNMATCHED = "!"


class SigmaSymbol(NamedTuple):
    kind: SymbolKind
    sender: ProcessId
    receiver: ProcessId
    payload: Payload

    @property
    def is_matched(self) -> bool:
        return self.kind == SymbolKind.MATCHED

    def send_action(self) -> Action:
        return send(self.payload, self.sender, self.receiver)

    def receive_action(self) -> Optional[Action]:
        if not self.is_matched:
            return None
        return receive(self.payload, self.sender, self.receiver)


SigmaWord = Tuple[SigmaSymbol, ...]


def matched(payload: Payload, sender: ProcessId, receiver: ProcessId) -> SigmaSymbol:
    return SigmaSymbol(SymbolKind.MATCHED, sender, receiver, payload)


def unmatched(payload: Payload, sender: ProcessId, receiver: ProcessId) -> SigmaSymbol:
    return SigmaSymbol(SymbolKind.UNMATCHED, sender, receiver, payload)


def sigma1(word: Sequence[SigmaSymbol]) -> Tuple[Action, ...]:
    """Every symbol becomes its send."""
    return tuple(symbol.send_action() for symbol in word)


def sigma2(word: Sequence[SigmaSymbol]) -> Tuple[Action, ...]:
    """Matched symbols become their receive, unmatched ones vanish."""
    receives: List[Action] = []
    for symbol in word:
        action = symbol.receive_action()
        if action is not None:
            receives.append(action)
    return tuple(receives)


def exchange_actions(word: Sequence[SigmaSymbol]) -> Tuple[Action, ...]:
    return sigma1(word) + sigma2(word)


class System(DomainModel):
    """A finite set of communicating processes.

    Args:
        name: a descriptive written name
        processes: one local automaton per process, in declared order
        payloads: the message set; derived from the transitions when omitted
        allow_self_sends: when False a process may not send to itself
    """

    def __init__(
        self,
        name: Optional[str] = None,
        processes: Optional[Sequence[LocalAutomaton]] = None,
        payloads: Optional[Iterable[Payload]] = None,
        allow_self_sends: bool = True,
    ):
        super().__init__()
        self.name = name
        self.processes: Tuple[LocalAutomaton, ...] = tuple(processes or ())
        if payloads is None:
            payloads = (
                transition.action.payload
                for automaton in self.processes
                for transition in automaton.transitions
            )
        self.payloads: FrozenSet[Payload] = frozenset(payloads)
        self.allow_self_sends = allow_self_sends

    def validate_internals(self, autopopulate: bool = True) -> None:
        super().validate_internals(autopopulate=autopopulate)
        self.name = validate_str(self.name, extra_error_msg="name", maximum_length=255)
        if len(self.processes) == 0:
            raise EmptySystemError()
        names = self.process_names
        if len(set(names)) != len(names):
            raise DuplicateProcessError(f"duplicate process in {list(names)}")
        for automaton in self.processes:
            self._validate_automaton(automaton, set(names))

    def _validate_automaton(
        self, automaton: LocalAutomaton, declared: Set[ProcessId]
    ) -> None:
        if len(set(automaton.states)) != len(automaton.states):
            raise DuplicateStateError(
                f"process '{automaton.name}' declares a state twice"
            )
        if automaton.initial not in automaton.states:
            raise MissingInitialStateError(
                f"process '{automaton.name}' has no initial state"
            )
        for source, action, target in automaton.transitions:
            for state in (source, target):
                if state not in automaton.states:
                    raise SystemDefinitionError(
                        f"process '{automaton.name}' uses unknown state '{state}'"
                    )
            for process in (action.sender, action.receiver):
                if process not in declared:
                    raise UndeclaredProcessError(process)
            if action.payload not in self.payloads:
                raise UndeclaredPayloadError(action.payload)
            if action.process != automaton.name:
                raise ForeignActionError(
                    f"process '{automaton.name}' cannot execute {action.kind.value}{action.payload}({action.sender}->{action.receiver})"
                )
            if not self.allow_self_sends and action.sender == action.receiver:
                raise SelfSendNotAllowedError(
                    f"process '{automaton.name}' sends to itself"
                )

    @property
    def process_names(self) -> Tuple[ProcessId, ...]:
        return tuple(automaton.name for automaton in self.processes)

    def automaton(self, process: ProcessId) -> LocalAutomaton:
        for candidate in self.processes:
            if candidate.name == process:
                return candidate
        raise UndeclaredProcessError(process)

    def index_of(self, process: ProcessId) -> int:
        try:
            return self.process_names.index(process)
        except ValueError:
            raise UndeclaredProcessError(process)  # pylint: disable=raise-missing-from

    @property
    def initial_state(self) -> GlobalState:
        return tuple(automaton.initial for automaton in self.processes)

    def as_tuple(
        self,
    ) -> Tuple[Optional[str], Tuple[LocalAutomaton, ...], FrozenSet[Payload], bool]:
        return (self.name, self.processes, self.payloads, self.allow_self_sends)

    def __eq__(self, other: object) -> bool:
        if self.__class__ != other.__class__:
            return False
        if not isinstance(other, System):
            raise NotImplementedError(
                "'other' object should always be of type System here."
            )
        return self.as_tuple() == other.as_tuple()

    def __hash__(self) -> int:
        # pylint is wrong, you MUST define the __hash__ function in every class.
        return hash(self.as_tuple())


def sigma_alphabet(system: System) -> FrozenSet[SigmaSymbol]:
    """Both symbol kinds for every message some send transition can emit."""
    symbols: Set[SigmaSymbol] = set()
    for automaton in system.processes:
        for transition in automaton.transitions:
            action = transition.action
            if action.is_send:
                symbols.add(matched(action.payload, action.sender, action.receiver))
                symbols.add(unmatched(action.payload, action.sender, action.receiver))
    return frozenset(symbols)


class GlobalTransition(NamedTuple):
    source: GlobalState
    action: Action
    target: GlobalState


class GlobalAutomaton:
    """Control product of a system, trimmed to control-reachable states."""

    def __init__(
        self,
        system: System,
        states: Sequence[GlobalState],
        transitions: Sequence[GlobalTransition],
    ) -> None:
        self.system = system
        self.initial = system.initial_state
        self.states: Tuple[GlobalState, ...] = tuple(states)
        self.transitions: Tuple[GlobalTransition, ...] = tuple(transitions)
        self.alphabet = sigma_alphabet(system)
        self._known = frozenset(self.states)
        self._outgoing: Dict[GlobalState, List[GlobalTransition]] = {
            state: [] for state in self.states
        }
        for transition in self.transitions:
            self._outgoing[transition.source].append(transition)

    @property
    def process_names(self) -> Tuple[ProcessId, ...]:
        return self.system.process_names

    def has_state(self, state: GlobalState) -> bool:
        return state in self._known

    def require_state(self, state: GlobalState) -> GlobalState:
        if state not in self._known:
            raise UnknownGlobalStateError(
                f"{','.join(state)} is not a reachable global state"
            )
        return state

    def outgoing(self, state: GlobalState) -> Tuple[GlobalTransition, ...]:
        return tuple(self._outgoing.get(state, ()))

    def sends_from(self, state: GlobalState) -> Tuple[GlobalTransition, ...]:
        return tuple(t for t in self.outgoing(state) if t.action.is_send)

    def receives_from(self, state: GlobalState) -> Tuple[GlobalTransition, ...]:
        return tuple(t for t in self.outgoing(state) if not t.action.is_send)

    def run_actions(
        self, start: GlobalState, actions: Sequence[Action]
    ) -> FrozenSet[GlobalState]:
        """All control states reachable from start by the action sequence, buffers ignored."""
        current = {start}
        for action in actions:
            current = {
                transition.target
                for state in current
                for transition in self._outgoing.get(state, ())
                if transition.action == action
            }
            if not current:
                break
        return frozenset(current)


def global_product(
    system: System, state_guard: int = DEFAULT_STATE_GUARD
) -> GlobalAutomaton:
    """Breadth-first construction of the control product from the initial state."""
    initial = system.initial_state
    seen: Set[GlobalState] = {initial}
    order: List[GlobalState] = [initial]
    transitions: List[GlobalTransition] = []
    queue: Deque[GlobalState] = deque([initial])
    while queue:
        state = queue.popleft()
        for index, automaton in enumerate(system.processes):
            for source, action, target in automaton.transitions:
                if source != state[index]:
                    continue
                successor = state[:index] + (target,) + state[index + 1 :]
                transitions.append(GlobalTransition(state, action, successor))
                if successor in seen:
                    continue
                if len(seen) >= state_guard:
                    raise StateGuardExceededError("global product", state_guard)
                seen.add(successor)
                order.append(successor)
                queue.append(successor)
    logger.debug(
        "global product of %s: %d states, %d transitions",
        system.name,
        len(order),
        len(transitions),
    )
    return GlobalAutomaton(system, order, transitions)
