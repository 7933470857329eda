# -*- coding: utf-8 -*-
import random
from typing import Any
from typing import Dict
from typing import List

from mailbox_synchronizability import parse_system
from mailbox_synchronizability import parse_word

S1_TEXT = """\
system S1
process p
  init 0
  0 -> 1 : ! a to r
  1 -> 2 : ! c to q
process q
  init 0
  0 -> 1 : ? b from r
process r
  init 0
  0 -> 1 : ! b to q
  1 -> 2 : ? a from p
"""

S1 = parse_system(S1_TEXT)

# the three exchanges pairing (0,0,0)->(2,0,1) sends with (2,0,1)->(2,1,2) receives
S1_EXAMPLE_LANGUAGE = (
    "!?a(p->r) !c(p->q) !?b(r->q)",
    "!?a(p->r) !?b(r->q) !c(p->q)",
    "!?b(r->q) !?a(p->r) !c(p->q)",
)

S1_DEGREE = 1

# both processes may send forever and receive whatever the other sent
FLOOD_TEXT = """\
system flood
process p
  init 0
  0 -> 0 : ! m to q
  0 -> 0 : ? n from q
process q
  init 0
  0 -> 0 : ! n to p
  0 -> 0 : ? m from p
"""

FLOOD = parse_system(FLOOD_TEXT)

PING_PONG_TEXT = """\
system ping_pong
process client
  init idle
  idle -> waiting : ! ping to server
  waiting -> idle : ? pong from server
process server
  init ready
  ready -> busy : ? ping from client
  busy -> ready : ! pong to client
"""

PING_PONG = parse_system(PING_PONG_TEXT)

MU2 = parse_word("!?m1(p->q) !?m2(r->q)")
# messages crossing on two processes form a single strongly connected exchange
CROSSING = parse_word("!?m(p->q) !?n(q->p)")

# each process sends first and then waits for the other, so both messages cross
CROSSING_SYSTEM_TEXT = """\
system crossing
process p
  init 0
  0 -> 1 : ! m to q
  1 -> 2 : ? n from q
process q
  init 0
  0 -> 1 : ! n to p
  1 -> 2 : ? m from p
"""

CROSSING_SYSTEM = parse_system(CROSSING_SYSTEM_TEXT)
CROSSING_SYSTEM_DEGREE = 2

MU4_START_SEND_SETS: Dict[str, Any] = {"p5": {"p4"}}
MU4_START_RECEIVE_SETS: Dict[str, Any] = {"p5": {"p3"}}
MU4 = parse_word("!m3(p1->p2) !?m4(p3->p2) !?m5(p4->p6) !?m6(p6->p7)")

GENERIC_ANALYSIS_SETTINGS_KWARGS: Dict[str, Any] = {
    "state_guard": 10_000,
    "node_guard": 1_000,
    "frontier_guard": 100_000,
    "explore_actions": 6,
    "explore_buffer": 2,
    "enumerate_cap": 1_000,
    "oracle_event_cap": 8,
    "linearization_cap": 100_000,
}

GENERIC_CLI_CONFIG_KWARGS: Dict[str, Any] = {
    "state_guard": 10_000,
    "explore_actions": 6,
    "explore_buffer": 2,
    "enumerate_cap": 1_000,
    "output_format": "json",
}

RANDOM_PROCESSES = ("p", "q", "r")
RANDOM_PAYLOADS = ("a", "b")
RANDOM_SYSTEM_COUNT = 24


def random_system_text(seed: int) -> str:
    """Two or three processes, each with at most three states and three transitions."""
    rng = random.Random(seed)
    names = RANDOM_PROCESSES[: rng.randint(2, 3)]
    lines = [f"system random_{seed}"]
    for name in names:
        states = [str(index) for index in range(rng.randint(1, 3))]
        peers = [peer for peer in names if peer != name]
        transitions: List[str] = []
        for _ in range(rng.randint(1, 3)):
            source = rng.choice(states)
            target = rng.choice(states)
            payload = rng.choice(RANDOM_PAYLOADS)
            peer = rng.choice(peers)
            if rng.random() < 0.5:
                line = f"  {source} -> {target} : ! {payload} to {peer}"
            else:
                line = f"  {source} -> {target} : ? {payload} from {peer}"
            if line not in transitions:
                transitions.append(line)
        lines.extend([f"process {name}", "  init 0"] + transitions)
    return "\n".join(lines) + "\n"


RANDOM_SYSTEMS = [parse_system(random_system_text(seed)) for seed in range(RANDOM_SYSTEM_COUNT)]
