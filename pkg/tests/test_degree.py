# -*- coding: utf-8 -*-
from mailbox_synchronizability import AnalysisSettings
from mailbox_synchronizability import BoundedCounterexample
from mailbox_synchronizability import BoundedFail
from mailbox_synchronizability import BoundedInconclusive
from mailbox_synchronizability import BoundedPass
from mailbox_synchronizability import check_k_bounded
from mailbox_synchronizability import concat
from mailbox_synchronizability import degree
from mailbox_synchronizability import Degree
from mailbox_synchronizability import degree_bound
from mailbox_synchronizability import explore
from mailbox_synchronizability import format_actions
from mailbox_synchronizability import GuardExceeded
from mailbox_synchronizability import harvest_exchanges
from mailbox_synchronizability import Inconclusive
from mailbox_synchronizability import is_prime_oracle
from mailbox_synchronizability import is_trace_bounded
from mailbox_synchronizability import msc_of_execution
from mailbox_synchronizability import msc_of_word
from mailbox_synchronizability import NotSynchronizable
from mailbox_synchronizability import parse_actions
from mailbox_synchronizability import reach_language
from mailbox_synchronizability import run
from mailbox_synchronizability import send
from mailbox_synchronizability import Synchronizable
from mailbox_synchronizability import synchronizable
from mailbox_synchronizability import System
from mailbox_synchronizability import theoretical_bound
from mailbox_synchronizability import theoretical_bound_for
from mailbox_synchronizability import TraceFound
from mailbox_synchronizability import Unbounded
from mailbox_synchronizability import UnboundedExchange
import pytest
from pytest import param

from .fixtures import CROSSING
from .fixtures import CROSSING_SYSTEM
from .fixtures import CROSSING_SYSTEM_DEGREE
from .fixtures import FLOOD
from .fixtures import GENERIC_ANALYSIS_SETTINGS_KWARGS
from .fixtures import PING_PONG
from .fixtures import RANDOM_SYSTEMS
from .fixtures import S1
from .fixtures import S1_DEGREE


def _settings(**overrides) -> AnalysisSettings:
    kwargs = dict(GENERIC_ANALYSIS_SETTINGS_KWARGS)
    kwargs.update(overrides)
    return AnalysisSettings(**kwargs)


def test_degree_bound__S1():
    verdict = degree_bound(S1, _settings())
    assert isinstance(verdict, Degree) is True
    assert verdict.k == S1_DEGREE
    assert len(verdict.witness) == S1_DEGREE
    assert verdict.source is not None
    assert verdict.target is not None


def test_degree_bound__witness_is_a_reachable_prime_exchange():
    verdict = degree_bound(S1, _settings())
    assert is_prime_oracle(verdict.witness)
    assert reach_language(S1, _settings()).accepts(verdict.witness)


def test_degree_bound__alternating_protocol():
    verdict = degree_bound(PING_PONG, _settings())
    assert isinstance(verdict, Degree) is True
    assert verdict.k == 1


def test_degree_bound__flood_is_unbounded():
    verdict = degree_bound(FLOOD, _settings(state_guard=1_000_000))
    assert isinstance(verdict, Unbounded) is True
    assert len(verdict.loop) > 0
    for times in range(1, 4):
        assert is_prime_oracle(verdict.pump(times))


def test_degree_bound__guard_exceeded():
    verdict = degree_bound(S1, _settings(state_guard=2))
    assert verdict == GuardExceeded("global product", 2)


@pytest.mark.parametrize(
    "state_count,process_count,expected",
    [
        param(1, 1, 256, id="smallest"),
        param(2, 1, 1024, id="two states"),
        param(1, 2, 2 ** 32, id="two processes"),
    ],
)
def test_theoretical_bound_for(state_count, process_count, expected):
    assert theoretical_bound_for(state_count, process_count) == expected


def test_theoretical_bound__counts_reachable_control_states():
    assert theoretical_bound(S1) == 18 * 18 * 2 ** 72
    assert theoretical_bound(S1) > S1_DEGREE


def test_check_k_bounded__S1_passes_for_its_degree():
    verdict = check_k_bounded(S1, S1_DEGREE, _settings())
    assert isinstance(verdict, BoundedPass) is True
    assert verdict.max_actions == 6
    assert verdict.max_buffer == 2
    assert verdict.explored > 1


def test_check_k_bounded__zero_fails_on_the_first_message():
    verdict = check_k_bounded(S1, 0, _settings())
    assert isinstance(verdict, BoundedFail) is True
    assert verdict.execution.actions == (send("a", "p", "r"),)


def test_check_k_bounded__flood_crossing_counterexample():
    verdict = check_k_bounded(FLOOD, 1, _settings(explore_actions=4, explore_buffer=2))
    assert isinstance(verdict, BoundedFail) is True
    assert format_actions(verdict.execution.actions) == "!m(p->q) !n(q->p) ?m(p->q) ?n(q->p)"


def test_check_k_bounded__inconclusive_when_exploration_is_too_large():
    verdict = check_k_bounded(FLOOD, 1, _settings(frontier_guard=3))
    assert verdict == BoundedInconclusive("explore", 3)


def test_synchronizable__S1(mocker):
    spied_check = mocker.spy(degree, "check_k_bounded")
    verdict = synchronizable(S1, _settings())
    assert isinstance(verdict, Synchronizable) is True
    assert verdict.k == S1_DEGREE
    assert verdict.max_actions == 6
    assert verdict.max_buffer == 2
    assert spied_check.call_count == 1


def test_synchronizable__flood_has_unbounded_exchanges(mocker):
    spied_check = mocker.spy(degree, "check_k_bounded")
    verdict = synchronizable(FLOOD, _settings(state_guard=1_000_000))
    assert isinstance(verdict, NotSynchronizable) is True
    assert isinstance(verdict.reason, UnboundedExchange) is True
    assert spied_check.call_count == 0


def test_synchronizable__bounded_counterexample(mocker):
    execution_actions = parse_actions("!a(p->r) !b(r->q)")
    mocker.patch.object(
        degree,
        "check_k_bounded",
        autospec=True,
        return_value=BoundedFail(1, run(S1, execution_actions)),
    )
    verdict = synchronizable(S1, _settings())
    assert verdict == NotSynchronizable(
        BoundedCounterexample(1, run(S1, execution_actions))
    )


def test_synchronizable__inconclusive():
    assert synchronizable(S1, _settings(state_guard=2)) == Inconclusive("global product", 2)


def test_degree_bound__crossing_messages_have_degree_two():
    verdict = degree_bound(CROSSING_SYSTEM, _settings())
    assert isinstance(verdict, Degree) is True
    assert verdict.k == CROSSING_SYSTEM_DEGREE
    assert sorted(verdict.witness) == sorted(CROSSING)
    assert is_prime_oracle(verdict.witness)


def test_check_k_bounded__crossing_messages_fail_below_their_degree():
    verdict = check_k_bounded(CROSSING_SYSTEM, CROSSING_SYSTEM_DEGREE - 1, _settings())
    assert isinstance(verdict, BoundedFail) is True
    assert format_actions(verdict.execution.actions) == "!m(p->q) !n(q->p) ?m(p->q) ?n(q->p)"


def test_synchronizable__crossing_messages_at_their_degree():
    verdict = synchronizable(CROSSING_SYSTEM, _settings())
    assert isinstance(verdict, Synchronizable) is True
    assert verdict.k == CROSSING_SYSTEM_DEGREE


def _assert_degree_matches_exploration(system: System, max_actions: int, max_buffer: int) -> None:
    settings = _settings(state_guard=1_000_000, node_guard=100_000, frontier_guard=1_000_000)
    verdict = degree_bound(system, settings)
    assert isinstance(verdict, GuardExceeded) is False, verdict
    language = reach_language(system, settings)
    largest = 0
    frontier_guard = settings.bound("frontier_guard")
    for execution in explore(system, max_actions, max_buffer, frontier_guard):
        for word in harvest_exchanges(msc_of_execution(execution.actions)):
            assert language.accepts(word), (system.name, format_actions(execution.actions))
            assert is_prime_oracle(word), (system.name, format_actions(execution.actions))
            largest = max(largest, len(word))
    if isinstance(verdict, Unbounded):
        for times in range(1, 4):
            assert is_prime_oracle(verdict.pump(times))
        return
    assert largest <= verdict.k, system.name
    assert verdict.k < theoretical_bound(system, settings)
    if verdict.k == 0:
        return
    msc = msc_of_word(())
    for part in verdict.context + (verdict.witness,):
        msc = concat(msc, msc_of_word(part))
    if isinstance(is_trace_bounded(system, msc, max_actions, max_buffer), TraceFound):
        # the witness run is among the explored executions
        assert largest == verdict.k, system.name


@pytest.mark.parametrize(
    "system",
    [
        param(S1, id="S1"),
        param(PING_PONG, id="ping pong"),
        param(CROSSING_SYSTEM, id="crossing"),
    ]
    + [param(system, id=system.name) for system in RANDOM_SYSTEMS[:3]],
)
def test_degree_bound__agrees_with_explored_exchanges(system):
    _assert_degree_matches_exploration(system, max_actions=6, max_buffer=2)


@pytest.mark.slow
@pytest.mark.parametrize("system", [param(system, id=system.name) for system in RANDOM_SYSTEMS])
def test_degree_bound__agrees_with_explored_exchanges_of_every_random_system(system):
    _assert_degree_matches_exploration(system, max_actions=7, max_buffer=2)
