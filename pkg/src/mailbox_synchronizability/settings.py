# -*- coding: utf-8 -*-
"""Guards and exploration bounds shared by the analyses."""
from typing import Dict
from typing import Optional
from typing import Tuple

from domain_model import DomainModel
from immutable_data_validation import validate_int

DEFAULT_STATE_GUARD = 1_000_000
DEFAULT_NODE_GUARD = 100_000
DEFAULT_FRONTIER_GUARD = 1_000_000
DEFAULT_EXPLORE_ACTIONS = 8
DEFAULT_EXPLORE_BUFFER = 3
DEFAULT_ENUMERATE_CAP = 100_000
DEFAULT_ORACLE_EVENT_CAP = 10
DEFAULT_LINEARIZATION_CAP = 1_000_000


class AnalysisSettings(DomainModel):
    """Limits that turn state-space blow-ups into clean errors.

    Args:
        state_guard: maximum number of states any lazily built automaton may materialize
        node_guard: maximum number of nodes of the reachable-exchange graph
        frontier_guard: maximum number of executions kept by bounded exploration
        explore_actions: length bound for bounded exploration
        explore_buffer: per-process buffer bound for bounded exploration
        enumerate_cap: maximum number of words a language enumeration may return
        oracle_event_cap: maximum MSC size accepted by the linearization oracles
        linearization_cap: maximum number of linearizations enumerated
    """

    def __init__(
        self,
        state_guard: Optional[int] = DEFAULT_STATE_GUARD,
        node_guard: Optional[int] = DEFAULT_NODE_GUARD,
        frontier_guard: Optional[int] = DEFAULT_FRONTIER_GUARD,
        explore_actions: Optional[int] = DEFAULT_EXPLORE_ACTIONS,
        explore_buffer: Optional[int] = DEFAULT_EXPLORE_BUFFER,
        enumerate_cap: Optional[int] = DEFAULT_ENUMERATE_CAP,
        oracle_event_cap: Optional[int] = DEFAULT_ORACLE_EVENT_CAP,
        linearization_cap: Optional[int] = DEFAULT_LINEARIZATION_CAP,
    ):
        super().__init__()
        self.state_guard = state_guard
        self.node_guard = node_guard
        self.frontier_guard = frontier_guard
        self.explore_actions = explore_actions
        self.explore_buffer = explore_buffer
        self.enumerate_cap = enumerate_cap
        self.oracle_event_cap = oracle_event_cap
        self.linearization_cap = linearization_cap

    def validate_internals(self, autopopulate: bool = True) -> None:
        super().validate_internals(autopopulate=autopopulate)
        self.validate_guards()
        self.validate_exploration_bounds()

    def validate_guards(self) -> None:
        self.state_guard = validate_int(
            self.state_guard, extra_error_msg="state_guard", minimum=1
        )
        self.node_guard = validate_int(
            self.node_guard, extra_error_msg="node_guard", minimum=1
        )
        self.frontier_guard = validate_int(
            self.frontier_guard, extra_error_msg="frontier_guard", minimum=1
        )
        self.enumerate_cap = validate_int(
            self.enumerate_cap, extra_error_msg="enumerate_cap", minimum=1
        )
        self.oracle_event_cap = validate_int(
            self.oracle_event_cap, extra_error_msg="oracle_event_cap", minimum=1
        )
        self.linearization_cap = validate_int(
            self.linearization_cap, extra_error_msg="linearization_cap", minimum=1
        )

    def validate_exploration_bounds(self) -> None:
        self.explore_actions = validate_int(
            self.explore_actions, extra_error_msg="explore_actions", minimum=0
        )
        self.explore_buffer = validate_int(
            self.explore_buffer, extra_error_msg="explore_buffer", minimum=0
        )

    def as_tuple(self) -> Tuple[Optional[int], ...]:
        return (
            self.state_guard,
            self.node_guard,
            self.frontier_guard,
            self.explore_actions,
            self.explore_buffer,
            self.enumerate_cap,
            self.oracle_event_cap,
            self.linearization_cap,
        )

    def as_dict(self) -> Dict[str, Optional[int]]:
        return {
            "state_guard": self.state_guard,
            "node_guard": self.node_guard,
            "frontier_guard": self.frontier_guard,
            "explore_actions": self.explore_actions,
            "explore_buffer": self.explore_buffer,
            "enumerate_cap": self.enumerate_cap,
            "oracle_event_cap": self.oracle_event_cap,
            "linearization_cap": self.linearization_cap,
        }

    def __eq__(self, other: object) -> bool:
        if self.__class__ != other.__class__:
            return False
        if not isinstance(other, AnalysisSettings):
            raise NotImplementedError(
                "'other' object should always be of type AnalysisSettings here."
            )
        return self.as_tuple() == other.as_tuple()

    def __hash__(self) -> int:
        # pylint is wrong, you MUST define the __hash__ function in every class.
        return hash(self.as_tuple())

    def bound(self, name: str) -> int:
        """Return a validated guard or bound by attribute name."""
        value = getattr(self, name)
        if value is None:
            raise NotImplementedError(f"'{name}' should never be None here")
        return int(value)


def resolve_settings(settings: Optional[AnalysisSettings] = None) -> AnalysisSettings:
    if settings is None:
        settings = AnalysisSettings()
    settings.validate_internals()
    return settings
