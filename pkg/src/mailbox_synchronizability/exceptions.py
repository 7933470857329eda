# -*- coding: utf-8 -*-
"""Exceptions related to systems, exchanges and their analysis."""
from typing import Any
from typing import Optional
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .model import Action


class MailboxSynchronizabilityError(Exception):
    pass


class SystemDefinitionError(MailboxSynchronizabilityError):
    pass


class SystemSyntaxError(SystemDefinitionError):
    """The system text could not be tokenized or parsed."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class EmptySystemError(SystemDefinitionError):
    def __init__(self) -> None:
        super().__init__("no processes")


class UndeclaredProcessError(SystemDefinitionError):
    def __init__(self, process: str) -> None:
        super().__init__(f"process '{process}' is not declared")
        self.process = process


class UndeclaredPayloadError(SystemDefinitionError):
    def __init__(self, payload: str) -> None:
        super().__init__(f"payload '{payload}' is not declared")
        self.payload = payload


class DuplicateStateError(SystemDefinitionError):
    pass


class DuplicateProcessError(SystemDefinitionError):
    pass


class MissingInitialStateError(SystemDefinitionError):
    pass


class ForeignActionError(SystemDefinitionError):
    """A local transition carries an action executed by another process."""


class SelfSendNotAllowedError(SystemDefinitionError):
    pass


class WordSyntaxError(MailboxSynchronizabilityError):
    """A word or action-sequence token is malformed or names unknown entities."""

    def __init__(self, message: str, token_index: int, token: str) -> None:
        super().__init__(f"token {token_index} ('{token}'): {message}")
        self.token_index = token_index
        self.token = token


class UnknownGlobalStateError(MailboxSynchronizabilityError):
    pass


class ActionNotEnabledError(MailboxSynchronizabilityError):
    """The action cannot fire from the configuration it was applied to."""

    def __init__(
        self, message: str, action: "Action", position: Optional[int] = None
    ) -> None:
        if position is not None:
            message = f"action {position}: {message}"
        super().__init__(message)
        self.action = action
        self.position = position


class NoControlTransitionError(ActionNotEnabledError):
    pass


class EmptyBufferError(ActionNotEnabledError):
    pass


class BufferHeadMismatchError(ActionNotEnabledError):
    pass


class MalformedMscError(MailboxSynchronizabilityError):
    pass


class UnmatchedReceiveError(MalformedMscError):
    def __init__(self, position: int) -> None:
        super().__init__(f"receive at position {position} has no matching send")
        self.position = position


class NotAnExchangeError(MailboxSynchronizabilityError):
    pass


class GuardExceededError(MailboxSynchronizabilityError):
    """A configured size limit was hit while building or exploring something."""

    def __init__(self, stage: str, guard: int, detail: Any = None) -> None:
        super().__init__(f"{stage}: limit of {guard} exceeded")
        self.stage = stage
        self.guard = guard
        self.detail = detail


class StateGuardExceededError(GuardExceededError):
    pass


class NodeGuardExceededError(GuardExceededError):
    pass


class FrontierGuardExceededError(GuardExceededError):
    pass


class EnumerationCapExceededError(GuardExceededError):
    pass


class OracleCapExceededError(GuardExceededError):
    pass


class AlphabetMismatchError(MailboxSynchronizabilityError):
    pass


class AbstractionInvariantError(MailboxSynchronizabilityError):
    """Label carriers of a P-graph were found not to be totally ordered."""


class UnsupportedOutputFormatError(MailboxSynchronizabilityError):
    pass


class ReportFormatError(MailboxSynchronizabilityError):
    pass
