# -*- coding: utf-8 -*-
from mailbox_synchronizability import alpha
from mailbox_synchronizability import conflict_graph
from mailbox_synchronizability import conflict_graph_to_dot
from mailbox_synchronizability import extended_closure
from mailbox_synchronizability import matched
from mailbox_synchronizability import msc_of_execution
from mailbox_synchronizability import msc_of_word
from mailbox_synchronizability import msc_to_dot
from mailbox_synchronizability import Nfa
from mailbox_synchronizability import nfa_to_dot
from mailbox_synchronizability import parse_actions
from mailbox_synchronizability import pgraph_of_word
from mailbox_synchronizability import pgraph_to_dot
from mailbox_synchronizability import reach_fixpoint
from mailbox_synchronizability import reach_graph_to_dot

from .fixtures import CROSSING
from .fixtures import MU2
from .fixtures import S1


def test_msc_to_dot__clusters_and_message_arcs():
    source = msc_to_dot(msc_of_execution(parse_actions("!m(p->q) ?m(p->q) !n(q->p)")))
    assert source.startswith("digraph msc {")
    assert "cluster_p" in source
    assert "cluster_q" in source
    assert "e0 -> e1" in source


def test_msc_to_dot__unmatched_send_points_nowhere():
    source = msc_to_dot(msc_of_execution(parse_actions("!m(p->q) ?m(p->q) !n(q->p)")))
    assert "lost2" in source
    assert "e2 -> lost2" in source
    assert "dashed" in source
    assert "lost0" not in source


def test_conflict_graph_to_dot__closure_edges_are_dashed():
    source = conflict_graph_to_dot(extended_closure(conflict_graph(msc_of_word(MU2))))
    assert source.startswith("digraph conflict {")
    assert "RR" in source
    assert "v0 -> v1" in source
    assert "dashed" in source


def test_conflict_graph_to_dot__crossing_messages():
    source = conflict_graph_to_dot(extended_closure(conflict_graph(msc_of_word(CROSSING))))
    assert "v0 -> v1" in source
    assert "v1 -> v0" in source


def test_nfa_to_dot__marks_initial_and_final_states():
    symbol = matched("m", "p", "q")
    automaton = Nfa.from_transitions([symbol], [0], [1], [(0, symbol, 1)])
    source = nfa_to_dot(automaton)
    assert "start -> s0" in source
    assert "peripheries=2" in source
    assert "s0 -> s1" in source
    assert "!?m(p->q)" in source


def test_pgraph_to_dot__vertex_labels():
    source = pgraph_to_dot(pgraph_of_word(CROSSING))
    assert "S:{p} R:{q}" in source
    assert "v0 -> v1" in source
    assert "v1 -> v0" in source


def test_pgraph_to_dot__of_an_abstraction():
    source = pgraph_to_dot(alpha(pgraph_of_word(CROSSING)))
    assert "S:{p,q} R:{p,q}" in source
    assert "v1" not in source


def test_reach_graph_to_dot__one_node_per_reach_node():
    graph = reach_fixpoint(S1)
    source = reach_graph_to_dot(graph)
    assert source.startswith("digraph reach {")
    assert "n0" in source
    assert "n0 -> n0" in source
    assert f"n{len(graph.nodes) - 1}" in source
