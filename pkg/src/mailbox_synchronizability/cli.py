# -*- coding: utf-8 -*-
"""Command-line front end: parsing, simulation, analyses and DOT export."""
import argparse
import json
import logging
from pathlib import Path
import sys
from typing import Any
from typing import Callable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from domain_model import DomainModel
from immutable_data_validation import validate_int
from immutable_data_validation import validate_str

from .conflict import acyclicity_verdicts
from .conflict import buffer_state
from .conflict import check_causal
from .conflict import conflict_graph
from .conflict import extended_closure
from .degree import Degree
from .degree import GuardExceeded
from .degree import Inconclusive
from .degree import NotSynchronizable
from .degree import Unbounded
from .degree import degree_bound
from .degree import synchronizable
from .degree import theoretical_bound
from .dot import conflict_graph_to_dot
from .dot import nfa_to_dot
from .dot import pgraph_to_dot
from .dot import reach_graph_to_dot
from .exceptions import ActionNotEnabledError
from .exceptions import GuardExceededError
from .exceptions import MalformedMscError
from .exceptions import SystemDefinitionError
from .exceptions import UnknownGlobalStateError
from .exceptions import UnsupportedOutputFormatError
from .exceptions import WordSyntaxError
from .exchange import build_asr
from .exchange import reach_fixpoint
from .fsa import enumerate_language
from .mailbox import Configuration
from .mailbox import explore
from .mailbox import run
from .model import System
from .model import global_product
from .msc import msc_of_word
from .parsing import format_actions
from .parsing import format_global_state
from .parsing import format_word
from .parsing import parse_actions
from .parsing import parse_global_state
from .parsing import parse_system
from .parsing import parse_word
from .parsing import pretty_print_system
from .prime import alpha
from .prime import pgraph_of_word
from .prime import prime_nfa
from .reports import buffer_state_to_dict
from .reports import execution_to_dict
from .reports import node_to_dict
from .reports import render_json
from .reports import render_text
from .settings import AnalysisSettings
from .settings import DEFAULT_ENUMERATE_CAP
from .settings import DEFAULT_EXPLORE_ACTIONS
from .settings import DEFAULT_EXPLORE_BUFFER
from .settings import DEFAULT_STATE_GUARD

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2
EXIT_GUARD_EXCEEDED = 3

OUTPUT_FORMATS = ("text", "json", "dot")
DEFAULT_ASR_MAX_LEN = 4


class CliConfig(DomainModel):
    """Options shared by the subcommands.

    Args:
        state_guard: maximum number of states of any automaton
        explore_actions: length bound for bounded exploration
        explore_buffer: per-process buffer bound for bounded exploration
        enumerate_cap: maximum number of words printed by an enumeration
        output_format: one of text, json or dot
    """

    def __init__(
        self,
        state_guard: Optional[int] = DEFAULT_STATE_GUARD,
        explore_actions: Optional[int] = DEFAULT_EXPLORE_ACTIONS,
        explore_buffer: Optional[int] = DEFAULT_EXPLORE_BUFFER,
        enumerate_cap: Optional[int] = DEFAULT_ENUMERATE_CAP,
        output_format: Optional[str] = "text",
    ):
        super().__init__()
        self.state_guard = state_guard
        self.explore_actions = explore_actions
        self.explore_buffer = explore_buffer
        self.enumerate_cap = enumerate_cap
        self.output_format = output_format

    def validate_internals(self, autopopulate: bool = True) -> None:
        super().validate_internals(autopopulate=autopopulate)
        self.state_guard = validate_int(
            self.state_guard, extra_error_msg="state_guard", minimum=1
        )
        self.enumerate_cap = validate_int(
            self.enumerate_cap, extra_error_msg="enumerate_cap", minimum=1
        )
        self.explore_actions = validate_int(
            self.explore_actions, extra_error_msg="explore_actions", minimum=0
        )
        self.explore_buffer = validate_int(
            self.explore_buffer, extra_error_msg="explore_buffer", minimum=0
        )
        self.output_format = validate_str(
            self.output_format, extra_error_msg="output_format"
        )
        if self.output_format not in OUTPUT_FORMATS:
            raise UnsupportedOutputFormatError(
                f"'{self.output_format}' is not one of {', '.join(OUTPUT_FORMATS)}"
            )

    def as_tuple(self) -> Tuple[Any, ...]:
        return (
            self.state_guard,
            self.explore_actions,
            self.explore_buffer,
            self.enumerate_cap,
            self.output_format,
        )

    def __eq__(self, other: object) -> bool:
        if self.__class__ != other.__class__:
            return False
        if not isinstance(other, CliConfig):
            raise NotImplementedError("'other' object should always be of type CliConfig here.")
        return self.as_tuple() == other.as_tuple()

    def __hash__(self) -> int:
        # pylint is wrong, you MUST define the __hash__ function in every class.
        return hash(self.as_tuple())

    def to_settings(self) -> AnalysisSettings:
        self.validate_internals()
        settings = AnalysisSettings(
            state_guard=self.state_guard,
            explore_actions=self.explore_actions,
            explore_buffer=self.explore_buffer,
            enumerate_cap=self.enumerate_cap,
        )
        settings.validate_internals()
        return settings


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _load_system(path: str) -> System:
    return parse_system(Path(path).read_text(encoding="utf-8"))


def _shown(text: str) -> str:
    return text if text else "(empty)"


def _emit(text: str) -> None:
    print(text, end="" if text.endswith("\n") else "\n")


def _emit_json(data: Any) -> None:
    _emit(json.dumps(data, indent=2, sort_keys=True))


def _describe_configuration(configuration: Configuration) -> List[str]:
    lines = [f"control: {format_global_state(configuration.control)}"]
    for owner, contents in configuration.buffers:
        shown = ", ".join(f"{m.payload} from {m.sender}" for m in contents)
        lines.append(f"buffer {owner}: {_shown(shown)}")
    return lines


def _cmd_parse(args: argparse.Namespace, config: CliConfig) -> int:
    system = _load_system(args.file)
    if config.output_format == "json":
        _emit_json(
            {
                "name": system.name,
                "processes": list(system.process_names),
                "payloads": sorted(system.payloads),
                "states": {
                    automaton.name: list(automaton.states) for automaton in system.processes
                },
            }
        )
    else:
        _emit(pretty_print_system(system))
    return EXIT_OK


def _cmd_simulate(args: argparse.Namespace, config: CliConfig) -> int:
    system = _load_system(args.file)
    execution = run(system, parse_actions(args.actions, system))
    if config.output_format == "json":
        _emit_json(execution_to_dict(execution))
    else:
        lines = [f"actions: {_shown(format_actions(execution.actions))}"]
        lines.extend(_describe_configuration(execution.final))
        _emit("\n".join(lines))
    return EXIT_OK


def _cmd_explore(args: argparse.Namespace, config: CliConfig) -> int:
    system = _load_system(args.file)
    settings = config.to_settings()
    executions = explore(
        system,
        settings.bound("explore_actions"),
        settings.bound("explore_buffer"),
        settings.bound("frontier_guard"),
    )
    if config.output_format == "json":
        _emit_json([execution_to_dict(execution) for execution in executions])
        return EXIT_OK
    lines = [
        f"{len(executions)} executions (at most {config.explore_actions} actions, buffers of {config.explore_buffer})"
    ]
    lines.extend(_shown(format_actions(execution.actions)) for execution in executions)
    _emit("\n".join(lines))
    return EXIT_OK


def _cmd_causal(args: argparse.Namespace, config: CliConfig) -> int:
    msc = msc_of_word(parse_word(args.msc_word))
    if config.output_format == "dot":
        _emit(conflict_graph_to_dot(extended_closure(conflict_graph(msc))))
        return EXIT_OK
    buffers = buffer_state(msc)
    verdicts = acyclicity_verdicts(msc)
    causal = check_causal(msc)
    if config.output_format == "json":
        _emit_json(
            {
                "causal_delivery": causal,
                "buffer_state": buffer_state_to_dict(buffers),
                "no_send_self_loop": verdicts.no_send_self_loop,
                "no_cycle": verdicts.no_cycle,
            }
        )
    else:
        _emit(
            "\n".join(
                [
                    "causal delivery" if causal else "no causal delivery",
                    f"buffer state: {buffers.describe()}",
                ]
            )
        )
    return EXIT_OK


def _cmd_prime(args: argparse.Namespace, config: CliConfig) -> int:
    word = parse_word(args.word)
    abstraction = alpha(pgraph_of_word(word))
    if config.output_format == "dot":
        _emit(pgraph_to_dot(abstraction))
        return EXIT_OK
    is_prime = prime_nfa(word, config.state_guard or DEFAULT_STATE_GUARD).accepts(word)
    if config.output_format == "json":
        _emit_json(
            {"word": format_word(word), "prime": is_prime, "abstraction": abstraction.describe()}
        )
    else:
        _emit("prime" if is_prime else "not prime")
    return EXIT_OK


def _cmd_asr(args: argparse.Namespace, config: CliConfig) -> int:
    system = _load_system(args.file)
    settings = config.to_settings()
    state_guard = settings.bound("state_guard")
    product = global_product(system, state_guard)
    automaton = build_asr(
        product,
        parse_global_state(args.l_in, product),
        parse_global_state(args.mid, product),
        parse_global_state(args.fin, product) if args.fin is not None else None,
        state_guard,
    )
    if config.output_format == "dot":
        _emit(nfa_to_dot(automaton))
        return EXIT_OK
    words = enumerate_language(automaton, args.max_len, settings.bound("enumerate_cap"))
    if config.output_format == "json":
        _emit_json({"max_len": args.max_len, "words": [format_word(w) for w in words]})
    else:
        _emit("\n".join(_shown(format_word(w)) for w in words) if words else "(no words)")
    return EXIT_OK


def _cmd_reach(args: argparse.Namespace, config: CliConfig) -> int:
    system = _load_system(args.file)
    graph = reach_fixpoint(system, config.to_settings())
    if config.output_format == "dot":
        _emit(reach_graph_to_dot(graph))
        return EXIT_OK
    number = {node: index for index, node in enumerate(graph.nodes)}
    edges = [
        (number[node], number[target]) for node in graph.nodes for target in graph.successors(node)
    ]
    if config.output_format == "json":
        _emit_json(
            {
                "nodes": [node_to_dict(node) for node in graph.nodes],
                "edges": [list(edge) for edge in edges],
            }
        )
        return EXIT_OK
    lines = [f"{len(graph.nodes)} nodes, {len(edges)} edges"]
    lines.extend(f"n{index}: {node.describe()}" for node, index in number.items())
    lines.extend(f"n{source} -> n{target}" for source, target in edges)
    _emit("\n".join(lines))
    return EXIT_OK


def _cmd_degree(args: argparse.Namespace, config: CliConfig) -> int:
    system = _load_system(args.file)
    settings = config.to_settings()
    verdict = degree_bound(system, settings)
    if isinstance(verdict, Degree):
        bound = theoretical_bound(system, settings)
        if verdict.k >= bound:
            raise NotImplementedError(f"'degree' should never reach the bound {bound}")
    _render(verdict, config)
    if isinstance(verdict, GuardExceeded):
        return EXIT_GUARD_EXCEEDED
    if isinstance(verdict, Unbounded):
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_synchronizable(args: argparse.Namespace, config: CliConfig) -> int:
    system = _load_system(args.file)
    verdict = synchronizable(system, config.to_settings())
    _render(verdict, config)
    if isinstance(verdict, Inconclusive):
        return EXIT_GUARD_EXCEEDED
    if isinstance(verdict, NotSynchronizable):
        return EXIT_NEGATIVE
    return EXIT_OK


def _render(verdict: Any, config: CliConfig) -> None:
    if config.output_format == "json":
        _emit(render_json(verdict, config.to_settings()))
    else:
        _emit(render_text(verdict))


Handler = Callable[[argparse.Namespace, CliConfig], int]


def _add_common(parser: argparse.ArgumentParser, with_dot: bool = False) -> None:
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--state-guard", type=_positive_int, default=DEFAULT_STATE_GUARD)
    parser.add_argument("--enumerate-cap", type=_positive_int, default=DEFAULT_ENUMERATE_CAP)
    if with_dot:
        parser.add_argument("--dot", action="store_true", help="print GraphViz DOT source")


def _add_exploration(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-actions", type=_non_negative_int, default=DEFAULT_EXPLORE_ACTIONS)
    parser.add_argument("--max-buffer", type=_non_negative_int, default=DEFAULT_EXPLORE_BUFFER)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mailbox-sync",
        description="Synchronizability analysis of communicating automata with mailbox buffers.",
    )
    parser.add_argument("--verbose", action="store_true", help="log at DEBUG level on stderr")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    sub = commands.add_parser("parse", help="parse a system file and print it back")
    sub.add_argument("file")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_parse)

    sub = commands.add_parser("simulate", help="run a sequence of actions")
    sub.add_argument("file")
    sub.add_argument("--actions", required=True, help='e.g. "!m(p->q) ?m(p->q)"')
    _add_common(sub)
    sub.set_defaults(handler=_cmd_simulate)

    sub = commands.add_parser("explore", help="list bounded executions")
    sub.add_argument("file")
    _add_common(sub)
    _add_exploration(sub)
    sub.set_defaults(handler=_cmd_explore)

    sub = commands.add_parser("causal", help="check causal delivery of an exchange")
    sub.add_argument("--msc-word", required=True)
    _add_common(sub, with_dot=True)
    sub.set_defaults(handler=_cmd_causal)

    sub = commands.add_parser("prime", help="decide whether an exchange is prime")
    sub.add_argument("--word", required=True)
    _add_common(sub, with_dot=True)
    sub.set_defaults(handler=_cmd_prime)

    sub = commands.add_parser("asr", help="words pairing sends and receives between control states")
    sub.add_argument("file")
    sub.add_argument("--in", dest="l_in", required=True, help="comma separated local states")
    sub.add_argument("--mid", required=True)
    sub.add_argument("--fin", default=None)
    sub.add_argument("--max-len", type=_non_negative_int, default=DEFAULT_ASR_MAX_LEN)
    _add_common(sub, with_dot=True)
    sub.set_defaults(handler=_cmd_asr)

    sub = commands.add_parser("reach", help="reachable control and buffer states")
    sub.add_argument("file")
    _add_common(sub, with_dot=True)
    sub.set_defaults(handler=_cmd_reach)

    sub = commands.add_parser("degree", help="synchronizability degree")
    sub.add_argument("file")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_degree)

    sub = commands.add_parser("synchronizable", help="degree plus a bounded k-synchronizability check")
    sub.add_argument("file")
    _add_common(sub)
    _add_exploration(sub)
    sub.set_defaults(handler=_cmd_synchronizable)
    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    output_format = "dot" if getattr(args, "dot", False) else args.format
    config = CliConfig(
        state_guard=args.state_guard,
        explore_actions=getattr(args, "max_actions", DEFAULT_EXPLORE_ACTIONS),
        explore_buffer=getattr(args, "max_buffer", DEFAULT_EXPLORE_BUFFER),
        enumerate_cap=args.enumerate_cap,
        output_format=output_format,
    )
    config.validate_internals()
    return config


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    handler: Handler = args.handler
    try:
        config = config_from_args(args)
        logger.debug("running %s with %s", args.command, config.as_tuple())
        return handler(args, config)
    except (
        SystemDefinitionError,
        WordSyntaxError,
        UnknownGlobalStateError,
        MalformedMscError,
        ActionNotEnabledError,
        UnsupportedOutputFormatError,
        OSError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except GuardExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_GUARD_EXCEEDED


if __name__ == "__main__":
    sys.exit(main())
