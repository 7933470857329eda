# -*- coding: utf-8 -*-
"""Reading and writing systems, exchange words and action sequences.

System files are line based::

    system <name>
    process <pid>
      init <state>
      state <state>
      <state> -> <state> : ! <payload> to <pid>
      <state> -> <state> : ? <payload> from <pid>

``state`` lines are optional; they declare isolated states and fix the
declaration order. Everything after ``#`` on a line is a comment.
"""
import re
from typing import Iterable
from typing import List
from typing import Optional
from typing import Tuple

from .exceptions import DuplicateProcessError
from .exceptions import DuplicateStateError
from .exceptions import MissingInitialStateError
from .exceptions import SystemSyntaxError
from .exceptions import UnknownGlobalStateError
from .exceptions import WordSyntaxError
from .model import Action
from .model import ActionKind
from .model import GlobalAutomaton
from .model import GlobalState
from .model import LocalAutomaton
from .model import LocalState
from .model import LocalTransition
from .model import SigmaSymbol
from .model import SigmaWord
from .model import SymbolKind
from .model import System

IDENTIFIER = r"[A-Za-z0-9_][A-Za-z0-9_.']*"

_SYSTEM_LINE = re.compile(rf"^system\s+({IDENTIFIER})$")
_PROCESS_LINE = re.compile(rf"^process\s+({IDENTIFIER})$")
_INIT_LINE = re.compile(rf"^init\s+({IDENTIFIER})$")
_STATE_LINE = re.compile(rf"^state\s+({IDENTIFIER})$")
_TRANSITION_LINE = re.compile(
    rf"^({IDENTIFIER})\s*->\s*({IDENTIFIER})\s*:\s*([!?])\s*({IDENTIFIER})\s+(to|from)\s+({IDENTIFIER})$"
)
_SYMBOL_TOKEN = re.compile(rf"^(!\?|!)({IDENTIFIER})\(({IDENTIFIER})->({IDENTIFIER})\)$")
_ACTION_TOKEN = re.compile(rf"^([!?])({IDENTIFIER})\(({IDENTIFIER})->({IDENTIFIER})\)$")


class _ProcessDraft:
    def __init__(self, name: str, line: int) -> None:
        self.name = name
        self.line = line
        self.states: List[LocalState] = []
        self.initial: Optional[LocalState] = None
        self.transitions: List[LocalTransition] = []

    def mention(self, state: LocalState) -> None:
        if state not in self.states:
            self.states.append(state)

    def finish(self) -> LocalAutomaton:
        if self.initial is None:
            raise MissingInitialStateError(
                f"process '{self.name}' (line {self.line}) has no init line"
            )
        return LocalAutomaton(
            self.name, tuple(self.states), self.initial, tuple(self.transitions)
        )


def _strip_comment(raw: str) -> str:
    return raw.split("#", 1)[0].rstrip()


def parse_system(text: str, allow_self_sends: bool = True) -> System:
    """Parse and validate a system description."""
    name: Optional[str] = None
    drafts: List[_ProcessDraft] = []
    current: Optional[_ProcessDraft] = None
    for line_number, raw in enumerate(text.splitlines(), start=1):
        content = _strip_comment(raw)
        stripped = content.strip()
        if not stripped:
            continue
        column = len(content) - len(content.lstrip()) + 1
        if name is None:
            match = _SYSTEM_LINE.match(stripped)
            if match is None:
                raise SystemSyntaxError(
                    "expected 'system <name>'", line_number, column
                )
            name = match.group(1)
            continue
        match = _PROCESS_LINE.match(stripped)
        if match is not None:
            if any(draft.name == match.group(1) for draft in drafts):
                raise DuplicateProcessError(
                    f"line {line_number}: process '{match.group(1)}' declared twice"
                )
            current = _ProcessDraft(match.group(1), line_number)
            drafts.append(current)
            continue
        if current is None:
            raise SystemSyntaxError(
                "expected 'process <pid>'", line_number, column
            )
        _parse_process_line(current, stripped, line_number, column)
    if name is None:
        raise SystemSyntaxError("expected 'system <name>'", 1, 1)
    system = System(
        name=name,
        processes=[draft.finish() for draft in drafts],
        allow_self_sends=allow_self_sends,
    )
    system.validate_internals()
    return system


def _parse_process_line(
    draft: _ProcessDraft, stripped: str, line_number: int, column: int
) -> None:
    match = _INIT_LINE.match(stripped)
    if match is not None:
        if draft.initial is not None:
            raise DuplicateStateError(
                f"line {line_number}: process '{draft.name}' has two init lines"
            )
        draft.initial = match.group(1)
        draft.mention(draft.initial)
        return
    match = _STATE_LINE.match(stripped)
    if match is not None:
        if match.group(1) in draft.states:
            raise DuplicateStateError(
                f"line {line_number}: state '{match.group(1)}' of process '{draft.name}' declared twice"
            )
        draft.mention(match.group(1))
        return
    match = _TRANSITION_LINE.match(stripped)
    if match is None:
        raise SystemSyntaxError(
            f"cannot parse '{stripped}'", line_number, column
        )
    source, target, marker, payload, direction, peer = match.groups()
    if marker == "!":
        if direction != "to":
            raise SystemSyntaxError(
                "a send names its receiver with 'to'",
                line_number,
                column + stripped.index(direction),
            )
        action = Action(ActionKind.SEND, draft.name, peer, payload)
    else:
        if direction != "from":
            raise SystemSyntaxError(
                "a receive names its sender with 'from'",
                line_number,
                column + stripped.index(direction),
            )
        action = Action(ActionKind.RECEIVE, peer, draft.name, payload)
    draft.mention(source)
    draft.mention(target)
    draft.transitions.append(LocalTransition(source, action, target))


def _natural_order(automaton: LocalAutomaton) -> Tuple[LocalState, ...]:
    order: List[LocalState] = [automaton.initial]
    for source, _, target in automaton.transitions:
        for state in (source, target):
            if state not in order:
                order.append(state)
    return tuple(order)


def pretty_print_system(system: System) -> str:
    lines = [f"system {system.name}"]
    for automaton in system.processes:
        lines.append(f"process {automaton.name}")
        if _natural_order(automaton) != automaton.states:
            lines.extend(f"  state {state}" for state in automaton.states)
        lines.append(f"  init {automaton.initial}")
        for source, action, target in automaton.transitions:
            if action.is_send:
                label = f"! {action.payload} to {action.receiver}"
            else:
                label = f"? {action.payload} from {action.sender}"
            lines.append(f"  {source} -> {target} : {label}")
    return "\n".join(lines) + "\n"


def _check_context(
    system: Optional[System],
    index: int,
    token: str,
    sender: str,
    receiver: str,
    payload: str,
) -> None:
    if system is None:
        return
    for process in (sender, receiver):
        if process not in system.process_names:
            raise WordSyntaxError(f"unknown process '{process}'", index, token)
    if payload not in system.payloads:
        raise WordSyntaxError(f"unknown payload '{payload}'", index, token)


def parse_word(text: str, system: Optional[System] = None) -> SigmaWord:
    """Parse whitespace separated ``!?m(p->q)`` / ``!m(p->q)`` tokens."""
    symbols: List[SigmaSymbol] = []
    for index, token in enumerate(text.split(), start=1):
        match = _SYMBOL_TOKEN.match(token)
        if match is None:
            raise WordSyntaxError("expected '!?m(p->q)' or '!m(p->q)'", index, token)
        marker, payload, sender, receiver = match.groups()
        _check_context(system, index, token, sender, receiver, payload)
        symbols.append(SigmaSymbol(SymbolKind(marker), sender, receiver, payload))
    return tuple(symbols)


def parse_actions(text: str, system: Optional[System] = None) -> Tuple[Action, ...]:
    """Parse whitespace separated ``!m(p->q)`` / ``?m(p->q)`` tokens."""
    actions: List[Action] = []
    for index, token in enumerate(text.split(), start=1):
        match = _ACTION_TOKEN.match(token)
        if match is None:
            raise WordSyntaxError("expected '!m(p->q)' or '?m(p->q)'", index, token)
        marker, payload, sender, receiver = match.groups()
        _check_context(system, index, token, sender, receiver, payload)
        actions.append(Action(ActionKind(marker), sender, receiver, payload))
    return tuple(actions)


def format_symbol(symbol: SigmaSymbol) -> str:
    return f"{symbol.kind.value}{symbol.payload}({symbol.sender}->{symbol.receiver})"


def format_word(word: Iterable[SigmaSymbol]) -> str:
    return " ".join(format_symbol(symbol) for symbol in word)


def format_action(action: Action) -> str:
    return f"{action.kind.value}{action.payload}({action.sender}->{action.receiver})"


def format_actions(actions: Iterable[Action]) -> str:
    return " ".join(format_action(action) for action in actions)


def format_global_state(state: GlobalState) -> str:
    return ",".join(state)


def parse_global_state(text: str, product: GlobalAutomaton) -> GlobalState:
    """Comma separated local states in declared process order."""
    parts = tuple(part.strip() for part in text.split(","))
    if len(parts) != len(product.process_names):
        raise UnknownGlobalStateError(
            f"'{text}' has {len(parts)} components, expected {len(product.process_names)}"
        )
    return product.require_state(parts)

