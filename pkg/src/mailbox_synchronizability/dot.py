# -*- coding: utf-8 -*-
"""GraphViz DOT sources for MSCs, conflict graphs, automata, reach graphs and P-graphs."""
from collections import defaultdict
from typing import DefaultDict
from typing import Dict
from typing import Hashable
from typing import List
from typing import Tuple

from graphviz import Digraph

from .conflict import ExtendedConflictGraph
from .exchange import ReachGraph
from .fsa import Nfa
from .msc import MessageSequenceChart
from .parsing import format_action
from .parsing import format_symbol
from .prime import PGraph

NODE_ATTR = {"fontname": "Monospace", "fontsize": "10"}
EDGE_ATTR = {"fontname": "Monospace", "fontsize": "9", "arrowsize": "0.5"}


def _digraph(name: str, rankdir: str = "LR") -> Digraph:
    return Digraph(
        name=name,
        graph_attr={"rankdir": rankdir},
        node_attr=NODE_ATTR,
        edge_attr=EDGE_ATTR,
    )


def msc_to_dot(msc: MessageSequenceChart) -> str:
    """One cluster per process; solid arcs join sends to receives, dashed arcs mark unmatched sends."""
    graph = _digraph("msc", rankdir="TB")
    for process in msc.processes():
        with graph.subgraph(name=f"cluster_{process}") as cluster:
            cluster.attr(label=process)
            events = msc.process_events(process)
            for event in events:
                cluster.node(f"e{event}", label=format_action(msc.labels[event]), shape="box")
            for first, second in zip(events, events[1:]):
                cluster.edge(f"e{first}", f"e{second}", arrowhead="none", color="gray")
    for send_event, receive_event in sorted(msc.src):
        graph.edge(f"e{send_event}", f"e{receive_event}")
    for vertex in msc.vertices():
        if vertex.is_matched:
            continue
        graph.node(f"lost{vertex.id}", label="", shape="point")
        graph.edge(f"e{vertex.id}", f"lost{vertex.id}", style="dashed", label=vertex.receiver)
    return str(graph.source)


def conflict_graph_to_dot(extended: ExtendedConflictGraph) -> str:
    """Base XY edges solid, edges only present in the closure dashed."""
    graph = _digraph("conflict")
    for vertex in extended.base.vertices:
        marker = "!?" if vertex.is_matched else "!"
        graph.node(
            f"v{vertex.id}",
            label=f"{marker}{vertex.payload}({vertex.sender}->{vertex.receiver})",
            shape="box",
            style="rounded",
        )
    solid: DefaultDict[Tuple[int, int], List[str]] = defaultdict(list)
    dashed: DefaultDict[Tuple[int, int], List[str]] = defaultdict(list)
    for edge in extended.base.edges:
        solid[(edge.source, edge.target)].append(edge.label.value)
    for edge in extended.extended_only():
        dashed[(edge.source, edge.target)].append(edge.label.value)
    for (source, target), labels in sorted(solid.items()):
        graph.edge(f"v{source}", f"v{target}", label="\n".join(sorted(labels)))
    for (source, target), labels in sorted(dashed.items()):
        graph.edge(f"v{source}", f"v{target}", label="\n".join(sorted(labels)), style="dashed")
    return str(graph.source)


def nfa_to_dot(automaton: Nfa) -> str:
    """The materialized automaton; parallel arcs share one edge with stacked labels."""
    graph = _digraph("automaton")
    number: Dict[Hashable, int] = {
        state: index for index, state in enumerate(automaton.reachable_states())
    }
    graph.node("start", label="", shape="point")
    for state in automaton.initial:
        graph.edge("start", f"s{number[state]}")
    for state, index in number.items():
        graph.node(
            f"s{index}",
            label=automaton.describe(state),
            shape="box",
            style="rounded",
            peripheries="2" if automaton.is_final(state) else "1",
        )
    by_pair: DefaultDict[Tuple[int, int], List[str]] = defaultdict(list)
    for source, symbol, target in automaton.transitions():
        by_pair[(number[source], number[target])].append(format_symbol(symbol))
    for (source, target), labels in sorted(by_pair.items()):
        graph.edge(f"s{source}", f"s{target}", label="\n".join(sorted(labels)))
    return str(graph.source)


def reach_graph_to_dot(reach: ReachGraph) -> str:
    """Nodes show their control state and nonempty buffer-state sets."""
    graph = _digraph("reach")
    number = {node: index for index, node in enumerate(reach.nodes)}
    for node, index in number.items():
        graph.node(
            f"n{index}",
            label=node.describe(),
            shape="box",
            peripheries="2" if node == reach.root else "1",
        )
    for node in reach.nodes:
        for target in reach.successors(node):
            graph.edge(f"n{number[node]}", f"n{number[target]}")
    return str(graph.source)


def pgraph_to_dot(pgraph: PGraph) -> str:
    graph = _digraph("pgraph")
    for vertex in range(pgraph.vertex_count):
        graph.node(f"v{vertex}", label=pgraph.describe_vertex(vertex), shape="box")
    for source, target in sorted(pgraph.edges):
        graph.edge(f"v{source}", f"v{target}")
    return str(graph.source)
