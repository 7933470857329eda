# -*- coding: utf-8 -*-
from itertools import product as cartesian_product

from mailbox_synchronizability import abstraction_guard
from mailbox_synchronizability import alpha
from mailbox_synchronizability import alpha_with_origins
from mailbox_synchronizability import EMPTY_PGRAPH
from mailbox_synchronizability import format_word
from mailbox_synchronizability import is_prime_by_split_search
from mailbox_synchronizability import is_prime_msc
from mailbox_synchronizability import is_prime_oracle
from mailbox_synchronizability import msc_of_word
from mailbox_synchronizability import parse_word
from mailbox_synchronizability import PGraph
from mailbox_synchronizability import pgraph_of_word
from mailbox_synchronizability import prime_nfa
from mailbox_synchronizability import prime_step
from mailbox_synchronizability import pstep_full
import pytest
from pytest import param

from .fixtures import CROSSING
from .fixtures import MU2

ALPHABETS = [
    param("!?a(p->q) !?b(q->p) !c(p->q) !?d(q->r)", id="two way with a lost message"),
    param("!?a(p->q) !?b(r->q) !?c(q->r) !d(r->p)", id="ring"),
    param("!?a(p->p) !?b(p->q) !c(q->p) !?d(q->q)", id="self sends"),
]


def _assert_recognizer_agrees_with_oracles(alphabet_text: str, max_len: int) -> None:
    alphabet = parse_word(alphabet_text)
    recognizer = prime_nfa(alphabet)
    for length in range(max_len + 1):
        for word in cartesian_product(alphabet, repeat=length):
            expected = is_prime_oracle(word)
            assert recognizer.accepts(word) is expected, format_word(word)
            msc = msc_of_word(word)
            assert is_prime_msc(msc) is expected, format_word(word)
            assert is_prime_by_split_search(msc) is expected, format_word(word)


def test_pstep_full__crossing_messages_point_both_ways():
    graph = pgraph_of_word(CROSSING)
    assert graph.labels == (
        (frozenset({"p"}), frozenset({"q"})),
        (frozenset({"q"}), frozenset({"p"})),
    )
    assert graph.edges == frozenset({(0, 1), (1, 0)})
    assert graph.describe_vertex(0) == "S:{p} R:{q}"


def test_pstep_full__lost_message_has_no_receive_label():
    graph = pstep_full(EMPTY_PGRAPH, parse_word("!m(p->q)")[0])
    assert graph == PGraph(((frozenset({"p"}), frozenset()),), frozenset())
    assert graph.describe() == "0[S:{p} R:{}]"


def test_pgraph_of_word__shared_receiver():
    graph = pgraph_of_word(MU2)
    assert graph.edges == frozenset({(0, 1)})


@pytest.mark.parametrize(
    "word,expected",
    [
        param("!?m(p->q) !?n(q->p)", True, id="crossing"),
        param("!?m1(p->q) !?m2(r->q)", False, id="shared receiver"),
        param("!m(p->q)", True, id="single lost message"),
        param("!?a(p->q) !b(q->p)", False, id="lost reply"),
        param("", False, id="empty"),
    ],
)
def test_is_prime_oracle(word, expected):
    assert is_prime_oracle(parse_word(word)) is expected


def test_alpha__merges_a_strongly_connected_graph():
    abstract, origins = alpha_with_origins(pgraph_of_word(CROSSING))
    assert abstract.vertex_count == 1
    assert abstract.labels == ((frozenset({"p", "q"}), frozenset({"p", "q"})),)
    assert origins == {0: 0, 1: 0}


def test_alpha__keeps_only_the_last_send_carrier():
    # p sends three independent lost messages; only the last keeps its label
    abstract = alpha(pgraph_of_word(parse_word("!a(p->q) !b(p->r) !c(p->s)")))
    assert abstract.vertex_count == 2
    assert sum(1 for senders, _ in abstract.labels if "p" in senders) == 1
    assert (0, 1) in abstract.edges or (1, 0) in abstract.edges


def test_alpha__is_idempotent():
    graph = alpha(pgraph_of_word(parse_word("!?a(p->q) !?b(r->q) !?c(q->r)")))
    assert alpha(graph) == graph


def test_prime_step__of_the_empty_graph():
    assert prime_step(EMPTY_PGRAPH, parse_word("!?m(p->q)")[0]).vertex_count == 1


@pytest.mark.parametrize(
    "processes,state_guard,expected",
    [
        param(["p"], 10 ** 9, 64, id="one process"),
        param(["p", "q"], 1_000, 1_000, id="clamped"),
        param(["p", "p"], 10 ** 9, 64, id="duplicates"),
    ],
)
def test_abstraction_guard(processes, state_guard, expected):
    assert abstraction_guard(processes, state_guard) == expected


def test_prime_nfa__examples():
    recognizer = prime_nfa(CROSSING + MU2)
    assert recognizer.accepts(CROSSING)
    assert not recognizer.accepts(MU2)
    assert not recognizer.accepts(())


@pytest.mark.parametrize("alphabet", ALPHABETS)
def test_prime_nfa__agrees_with_the_oracles_on_short_words(alphabet):
    _assert_recognizer_agrees_with_oracles(alphabet, 4)


@pytest.mark.slow
@pytest.mark.parametrize("alphabet", ALPHABETS)
def test_prime_nfa__agrees_with_the_oracles_up_to_six_symbols(alphabet):
    _assert_recognizer_agrees_with_oracles(alphabet, 6)
