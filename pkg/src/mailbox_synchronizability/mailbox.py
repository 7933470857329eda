# -*- coding: utf-8 -*-
"""Running systems under mailbox semantics: one FIFO buffer per process."""
import logging
from typing import Dict
from typing import FrozenSet
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Sequence
from typing import Set
from typing import Tuple
from typing import Union

from .exceptions import ActionNotEnabledError
from .exceptions import BufferHeadMismatchError
from .exceptions import EmptyBufferError
from .exceptions import FrontierGuardExceededError
from .exceptions import NoControlTransitionError
from .model import Action
from .model import GlobalState
from .model import Payload
from .model import ProcessId
from .model import System
from .msc import MessageSequenceChart
from .msc import msc_isomorphic
from .msc import msc_of_execution
from .settings import DEFAULT_EXPLORE_ACTIONS
from .settings import DEFAULT_EXPLORE_BUFFER
from .settings import DEFAULT_FRONTIER_GUARD
from .settings import DEFAULT_LINEARIZATION_CAP

logger = logging.getLogger(__name__)


class BufferedMessage(NamedTuple):
    sender: ProcessId
    payload: Payload


Buffer = Tuple[BufferedMessage, ...]


class Configuration(NamedTuple):
    """Control state plus one buffer per process, in declared process order."""

    control: GlobalState
    buffers: Tuple[Tuple[ProcessId, Buffer], ...]

    def buffer(self, process: ProcessId) -> Buffer:
        for owner, contents in self.buffers:
            if owner == process:
                return contents
        raise NotImplementedError(f"'buffer({process})' should never be missing here")

    def with_buffer(self, process: ProcessId, contents: Buffer) -> "Configuration":
        return self._replace(
            buffers=tuple(
                (owner, contents if owner == process else current)
                for owner, current in self.buffers
            )
        )

    def max_buffer_length(self) -> int:
        return max((len(contents) for _, contents in self.buffers), default=0)


def initial_configuration(system: System) -> Configuration:
    return Configuration(
        system.initial_state, tuple((name, ()) for name in system.process_names)
    )


def successors(
    system: System, configuration: Configuration, action: Action
) -> Tuple[Configuration, ...]:
    """Every configuration the action can lead to, in transition declaration order."""
    index = system.index_of(action.process)
    automaton = system.processes[index]
    targets = [
        target
        for source, label, target in automaton.transitions
        if source == configuration.control[index] and label == action
    ]
    if not targets:
        raise NoControlTransitionError(
            f"process '{action.process}' has no transition on this action from state '{configuration.control[index]}'",
            action,
        )
    if action.is_send:
        contents = configuration.buffer(action.receiver) + (
            BufferedMessage(action.sender, action.payload),
        )
    else:
        current = configuration.buffer(action.receiver)
        if not current:
            raise EmptyBufferError(f"empty buffer at '{action.receiver}'", action)
        if current[0] != BufferedMessage(action.sender, action.payload):
            raise BufferHeadMismatchError(
                f"buffer head at '{action.receiver}' is {current[0].payload} from {current[0].sender}",
                action,
            )
        contents = current[1:]
    moved = configuration.with_buffer(action.receiver, contents)
    return tuple(
        moved._replace(
            control=moved.control[:index] + (target,) + moved.control[index + 1 :]
        )
        for target in dict.fromkeys(targets)
    )


def step(system: System, configuration: Configuration, action: Action) -> Configuration:
    """Fire an enabled action; the first declared transition wins on nondeterminism."""
    return successors(system, configuration, action)[0]


class Execution(NamedTuple):
    actions: Tuple[Action, ...]
    final: Configuration

    def replay(self, system: System) -> FrozenSet[Configuration]:
        """All configurations the actions can reach from the initial one."""
        return configurations_after(system, self.actions)


def configurations_after(
    system: System, actions: Sequence[Action]
) -> FrozenSet[Configuration]:
    current: List[Configuration] = [initial_configuration(system)]
    for position, action in enumerate(actions):
        current = _advance(system, current, action, position)
    return frozenset(current)


def _advance(
    system: System,
    current: Sequence[Configuration],
    action: Action,
    position: int,
) -> List[Configuration]:
    following: Dict[Configuration, None] = {}
    first_error: Optional[ActionNotEnabledError] = None
    for configuration in current:
        try:
            following.update(dict.fromkeys(successors(system, configuration, action)))
        except ActionNotEnabledError as e:
            if first_error is None:
                first_error = e
    if not following:
        if first_error is None:
            raise NotImplementedError("'first_error' should never be None here")
        raise type(first_error)(str(first_error), action, position)
    return list(following)


def run(system: System, actions: Sequence[Action]) -> Execution:
    """Fold the actions over the initial configuration.

    Nondeterministic control is tracked as a set of candidates; the error
    reported for a dead run is the one raised by the first candidate.
    """
    current: List[Configuration] = [initial_configuration(system)]
    for position, action in enumerate(actions):
        current = _advance(system, current, action, position)
    return Execution(tuple(actions), current[0])


def enabled_actions(
    system: System, configuration: Configuration, max_buffer: Optional[int] = None
) -> List[Tuple[Action, Configuration]]:
    enabled: List[Tuple[Action, Configuration]] = []
    for index, automaton in enumerate(system.processes):
        for source, action, target in automaton.transitions:
            if source != configuration.control[index]:
                continue
            if action.is_send:
                contents = configuration.buffer(action.receiver) + (
                    BufferedMessage(action.sender, action.payload),
                )
                if max_buffer is not None and len(contents) > max_buffer:
                    continue
            else:
                current = configuration.buffer(action.receiver)
                if not current or current[0] != BufferedMessage(
                    action.sender, action.payload
                ):
                    continue
                contents = current[1:]
            moved = configuration.with_buffer(action.receiver, contents)
            control = moved.control[:index] + (target,) + moved.control[index + 1 :]
            enabled.append((action, moved._replace(control=control)))
    return enabled


def _execution_key(execution: Execution) -> Tuple[int, Tuple[Action, ...], Configuration]:
    return (len(execution.actions), execution.actions, execution.final)


def explore(
    system: System,
    max_actions: int = DEFAULT_EXPLORE_ACTIONS,
    max_buffer: int = DEFAULT_EXPLORE_BUFFER,
    frontier_guard: int = DEFAULT_FRONTIER_GUARD,
) -> Tuple[Execution, ...]:
    """Every execution of at most max_actions actions that keeps each buffer within max_buffer."""
    empty = Execution((), initial_configuration(system))
    found: List[Execution] = [empty]
    frontier: List[Execution] = [empty]
    for _ in range(max_actions):
        following: List[Execution] = []
        for execution in frontier:
            for action, configuration in enabled_actions(
                system, execution.final, max_buffer
            ):
                following.append(
                    Execution(execution.actions + (action,), configuration)
                )
        if len(found) + len(following) > frontier_guard:
            raise FrontierGuardExceededError("explore", frontier_guard)
        found.extend(following)
        frontier = following
        if not frontier:
            break
    logger.debug(
        "explored %d executions of %s (actions<=%d, buffer<=%d)",
        len(found),
        system.name,
        max_actions,
        max_buffer,
    )
    return tuple(sorted(set(found), key=_execution_key))


class TraceFound(NamedTuple):
    execution: Execution


class TraceNotFound(NamedTuple):
    reason: str


TraceVerdict = Union[TraceFound, TraceNotFound]


def is_trace_bounded(
    system: System,
    msc: MessageSequenceChart,
    max_prefix_actions: int = DEFAULT_EXPLORE_ACTIONS,
    max_buffer: int = DEFAULT_EXPLORE_BUFFER,
    search_guard: int = DEFAULT_LINEARIZATION_CAP,
) -> TraceVerdict:
    """Look for an execution of the system whose MSC is isomorphic to msc.

    A trace belongs to the system iff one of its linearizations executes, so
    the search runs linearizations through the simulator and prunes as soon
    as an action is disabled. TraceNotFound means nothing was found within
    the bounds, not that the trace is impossible.
    """
    if len(msc.labels) > max_prefix_actions:
        return TraceNotFound(f"the MSC has more than {max_prefix_actions} events")
    graph = msc.order_graph()
    remaining = {event: graph.in_degree(event) for event in msc.events}
    placed: List[int] = []
    failed: Set[Tuple[FrozenSet[int], Configuration]] = set()
    visited = [0]

    def search(configuration: Configuration) -> Optional[Execution]:
        if len(placed) == len(msc.labels):
            actions = tuple(msc.labels[e] for e in placed)
            if msc_isomorphic(msc_of_execution(actions), msc):
                return Execution(actions, configuration)
            return None
        key = (frozenset(placed), configuration)
        if key in failed:
            return None
        visited[0] += 1
        if visited[0] > search_guard:
            raise _SearchExhausted()
        for event in msc.events:
            if event in placed or remaining[event] != 0:
                continue
            try:
                options = successors(system, configuration, msc.labels[event])
            except ActionNotEnabledError:
                continue
            placed.append(event)
            for successor in graph.successors(event):
                remaining[successor] -= 1
            for option in options:
                if option.max_buffer_length() > max_buffer:
                    continue
                result = search(option)
                if result is not None:
                    return result
            for successor in graph.successors(event):
                remaining[successor] += 1
            placed.pop()
        failed.add(key)
        return None

    try:
        execution = search(initial_configuration(system))
    except _SearchExhausted:
        return TraceNotFound(f"search guard of {search_guard} reached")
    if execution is None:
        return TraceNotFound("no linearization executes within the bounds")
    return TraceFound(execution)


class _SearchExhausted(Exception):
    pass
