# -*- coding: utf-8 -*-
from itertools import product as cartesian_product
from typing import Iterator
from typing import Tuple

from mailbox_synchronizability import buffer_state
from mailbox_synchronizability import BufferState
from mailbox_synchronizability import build_asr
from mailbox_synchronizability import build_cd
from mailbox_synchronizability import CausalState
from mailbox_synchronizability import cd_step
from mailbox_synchronizability import check_causal
from mailbox_synchronizability import concat
from mailbox_synchronizability import enumerate_language
from mailbox_synchronizability import explore
from mailbox_synchronizability import feasible
from mailbox_synchronizability import format_word
from mailbox_synchronizability import global_product
from mailbox_synchronizability import harvest_exchanges
from mailbox_synchronizability import is_trace_bounded
from mailbox_synchronizability import msc_of_execution
from mailbox_synchronizability import msc_of_word
from mailbox_synchronizability import parse_word
from mailbox_synchronizability import reach_fixpoint
from mailbox_synchronizability import reach_language
from mailbox_synchronizability import ReachNode
from mailbox_synchronizability import run_causal
from mailbox_synchronizability import SigmaWord
from mailbox_synchronizability import TraceFound
from mailbox_synchronizability import UnknownGlobalStateError
import pytest
from pytest import param

from .fixtures import MU4
from .fixtures import MU4_START_RECEIVE_SETS
from .fixtures import MU4_START_SEND_SETS
from .fixtures import S1
from .fixtures import S1_EXAMPLE_LANGUAGE

CONCATENATION_ALPHABET = parse_word("!m(p->q) !?a(q->p) !?b(r->q) !?c(p->r)")
# a lost message to r, a sender that joins after receiving, and receives chained back to x
SPLIT_ALPHABET = parse_word("!m(x->r) !?a(x->p) !n(p->x) !?b(p->r) !?c(r->x)")


def _words(max_len: int) -> Iterator[SigmaWord]:
    for length in range(max_len + 1):
        yield from cartesian_product(CONCATENATION_ALPHABET, repeat=length)


def _splits(max_len: int) -> Iterator[Tuple[SigmaWord, SigmaWord]]:
    for length in range(max_len + 1):
        for word in cartesian_product(SPLIT_ALPHABET, repeat=length):
            for cut in range(len(word) + 1):
                yield tuple(word[:cut]), tuple(word[cut:])


def _assert_causal_run_matches_concatenation(prefix: SigmaWord, suffix: SigmaWord) -> None:
    whole = concat(msc_of_word(prefix), msc_of_word(suffix))
    actual = run_causal(buffer_state(msc_of_word(prefix)), suffix).buffers
    assert actual == buffer_state(whole), (format_word(prefix), format_word(suffix))


def test_build_asr__S1_example_language():
    product = global_product(S1)
    automaton = build_asr(product, ("0", "0", "0"), ("2", "0", "1"), ("2", "1", "2"))
    words = [format_word(word) for word in enumerate_language(automaton, 4)]
    assert sorted(words) == sorted(S1_EXAMPLE_LANGUAGE)


def test_build_asr__any_receive_side_is_final_without_l_fin():
    product = global_product(S1)
    automaton = build_asr(product, ("0", "0", "0"), ("1", "0", "1"))
    words = [format_word(word) for word in enumerate_language(automaton, 3)]
    assert len(words) == 8
    assert "!?a(p->r) !?b(r->q)" in words
    assert "!b(r->q) !a(p->r)" in words


def test_build_asr__rejects_unknown_states():
    with pytest.raises(UnknownGlobalStateError):
        build_asr(global_product(S1), ("0", "0", "0"), ("7", "0", "0"))


@pytest.mark.parametrize(
    "steps,expected_send_sets,expected_receive_sets",
    [
        param(0, {"p5": {"p4"}}, {"p5": {"p3"}}, id="start"),
        param(1, {"p5": {"p4"}, "p2": {"p1"}}, {"p5": {"p3"}}, id="lost message to p2"),
        param(
            2,
            {"p5": {"p1", "p3", "p4"}, "p2": {"p1"}},
            {"p5": {"p2", "p3"}},
            id="p3 was a prefix receiver",
        ),
        param(
            3,
            {"p5": {"p1", "p3", "p4"}, "p2": {"p1"}},
            {"p5": {"p2", "p3", "p6"}},
            id="p4 already sent after the lost message",
        ),
        param(
            4,
            {"p5": {"p1", "p3", "p4"}, "p2": {"p1"}},
            {"p5": {"p2", "p3", "p6"}},
            id="p6 sent before receiving",
        ),
    ],
)
def test_cd_step__chain_of_messages(steps, expected_send_sets, expected_receive_sets):
    state = CausalState.start(BufferState.from_sets(MU4_START_SEND_SETS, MU4_START_RECEIVE_SETS))
    for symbol in MU4[:steps]:
        state = cd_step(state, symbol)
    assert state.buffers == BufferState.from_sets(expected_send_sets, expected_receive_sets)


def test_CausalState_start__seeds_prefix_receivers_with_the_start_receive_sets():
    start = BufferState.from_sets(MU4_START_SEND_SETS, MU4_START_RECEIVE_SETS)
    state = CausalState.start(start)
    assert state.buffers == start
    assert state.prefix_receiver_set("p5") == frozenset({"p3"})
    assert state.prefix_receiver_set("p2") == frozenset()


def test_cd_step__sender_after_a_prefix_receiver_joins():
    # the prefix lost m to r and then made p receive a; p's later message follows m
    prefix = parse_word("!m(x->r) !?a(x->p)")
    suffix = parse_word("!n(p->x)")
    start = buffer_state(msc_of_word(prefix))
    assert start == BufferState.from_sets({"r": {"x"}}, {"r": {"p"}})
    expected = BufferState.from_sets({"r": {"x", "p"}, "x": {"p"}}, {"r": {"p"}})
    assert run_causal(start, suffix).buffers == expected
    assert buffer_state(concat(msc_of_word(prefix), msc_of_word(suffix))) == expected


def test_run_causal__violation_through_a_prefix_receiver():
    prefix = parse_word("!m(r->q) !?a(r->p)")
    suffix = parse_word("!k(q->r) !?b(q->q) !?c(p->r)")
    whole = concat(msc_of_word(prefix), msc_of_word(suffix))
    assert not run_causal(buffer_state(msc_of_word(prefix)), suffix).buffers.is_good()
    assert not buffer_state(whole).is_good()
    assert check_causal(whole) is False


def test_run_causal__received_past_a_lost_message():
    state = run_causal(BufferState.empty(), parse_word("!m(p->q) !?n(p->q)"))
    assert not state.buffers.is_good()


def test_run_causal__other_sender_is_not_blocked():
    state = run_causal(BufferState.empty(), parse_word("!m(p->q) !?n(r->q)"))
    assert state.buffers == BufferState.from_sets({"q": {"p"}}, {})
    assert state.buffers == buffer_state(msc_of_word(parse_word("!m(p->q) !?n(r->q)")))


def test_run_causal__matches_concatenation_for_short_splits():
    for prefix, suffix in _splits(3):
        _assert_causal_run_matches_concatenation(prefix, suffix)


@pytest.mark.slow
def test_run_causal__matches_concatenation_for_all_splits_up_to_five_symbols():
    for prefix, suffix in _splits(5):
        _assert_causal_run_matches_concatenation(prefix, suffix)


def test_build_cd__accepts_exactly_the_good_runs():
    automaton = build_cd(BufferState.empty(), None, CONCATENATION_ALPHABET)
    for word in _words(3):
        expected = run_causal(BufferState.empty(), word).buffers.is_good()
        assert automaton.accepts(word) is expected, format_word(word)


def test_build_cd__fixed_final_buffer_state():
    final = BufferState.from_sets({"q": {"p"}}, {})
    automaton = build_cd(BufferState.empty(), final, CONCATENATION_ALPHABET)
    assert automaton.accepts(parse_word("!m(p->q)"))
    assert automaton.accepts(parse_word("!?a(q->p) !m(p->q)"))
    assert not automaton.accepts(parse_word("!?a(q->p)"))


def test_build_cd__bad_start_has_no_initial_state():
    bad = BufferState.from_sets({"q": {"p"}}, {"q": {"q"}})
    assert build_cd(bad, None, CONCATENATION_ALPHABET).initial == ()


def test_feasible__matched_exchanges_without_lost_messages():
    automaton = feasible(
        global_product(S1),
        ("0", "0", "0"),
        ("1", "1", "2"),
        BufferState.empty(),
        BufferState.empty(),
    )
    assert automaton.accepts(parse_word("!?a(p->r) !?b(r->q)"))
    assert automaton.accepts(parse_word("!?b(r->q) !?a(p->r)"))
    assert not automaton.accepts(parse_word("!?a(p->r)"))


def test_feasible__S1_example_words_are_causal():
    automaton = feasible(
        global_product(S1), ("0", "0", "0"), ("2", "1", "2"), BufferState.empty(), None
    )
    for word in S1_EXAMPLE_LANGUAGE:
        assert automaton.accepts(parse_word(word)), word


def test_reach_fixpoint__S1_nodes():
    graph = reach_fixpoint(S1)
    assert graph.root == ReachNode(("0", "0", "0"), BufferState.empty())
    assert graph.root in graph.successors(graph.root)
    assert any(node.control == ("2", "1", "2") for node in graph.nodes)
    assert graph.context_words(graph.root) == ()


def test_reach_fixpoint__context_words_lead_to_the_node():
    graph = reach_fixpoint(S1)
    for node in graph.nodes:
        reached = {graph.root}
        for word in graph.context_words(node):
            reached = {target for source in reached for target in graph.targets_after(source, word)}
        assert node in reached, node.describe()


def test_reach_language__contains_the_S1_example_words():
    language = reach_language(S1)
    for word in S1_EXAMPLE_LANGUAGE:
        assert language.accepts(parse_word(word)), word


def test_reach_language__contains_every_harvested_exchange():
    language = reach_language(S1)
    for execution in explore(S1, max_actions=8, max_buffer=3):
        for word in harvest_exchanges(msc_of_execution(execution.actions)):
            assert language.accepts(word), format_word(word)


def test_reach_fixpoint__accepted_exchanges_are_traces():
    graph = reach_fixpoint(S1)
    for node in graph.nodes:
        context = graph.context_words(node)
        for word in enumerate_language(graph.node_language(node), 3):
            msc = msc_of_word(())
            for part in context + (word,):
                msc = concat(msc, msc_of_word(part))
            verdict = is_trace_bounded(S1, msc, max_prefix_actions=32, max_buffer=8)
            assert isinstance(verdict, TraceFound), format_word(word)
