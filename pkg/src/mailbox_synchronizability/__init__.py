# -*- coding: utf-8 -*-
"""Synchronizability analysis of communicating automata under mailbox semantics."""
from .cli import CliConfig
from .cli import main
from .conflict import AcyclicityVerdicts
from .conflict import acyclicity_verdicts
from .conflict import BufferState
from .conflict import buffer_state
from .conflict import check_causal
from .conflict import Condensation
from .conflict import ConflictEdge
from .conflict import ConflictGraph
from .conflict import conflict_graph
from .conflict import EdgeLabel
from .conflict import EventKind
from .conflict import EventNode
from .conflict import event_graph
from .conflict import ExtendedConflictGraph
from .conflict import extended_closure
from .conflict import harvest_exchanges
from .conflict import is_k_synchronizable_by_chop_search
from .conflict import is_k_synchronizable_msc
from .conflict import is_prime_by_split_search
from .conflict import is_prime_msc
from .conflict import sccs
from .degree import BoundedCounterexample
from .degree import BoundedFail
from .degree import BoundedInconclusive
from .degree import BoundedPass
from .degree import BoundedVerdict
from .degree import check_k_bounded
from .degree import Degree
from .degree import DegreeVerdict
from .degree import degree_bound
from .degree import GuardExceeded
from .degree import Inconclusive
from .degree import NotSynchronizable
from .degree import Synchronizable
from .degree import synchronizable
from .degree import SyncVerdict
from .degree import theoretical_bound
from .degree import theoretical_bound_for
from .degree import Unbounded
from .degree import UnboundedExchange
from .dot import conflict_graph_to_dot
from .dot import msc_to_dot
from .dot import nfa_to_dot
from .dot import pgraph_to_dot
from .dot import reach_graph_to_dot
from .exceptions import AbstractionInvariantError
from .exceptions import ActionNotEnabledError
from .exceptions import AlphabetMismatchError
from .exceptions import BufferHeadMismatchError
from .exceptions import DuplicateProcessError
from .exceptions import DuplicateStateError
from .exceptions import EmptyBufferError
from .exceptions import EmptySystemError
from .exceptions import EnumerationCapExceededError
from .exceptions import ForeignActionError
from .exceptions import FrontierGuardExceededError
from .exceptions import GuardExceededError
from .exceptions import MailboxSynchronizabilityError
from .exceptions import MalformedMscError
from .exceptions import MissingInitialStateError
from .exceptions import NoControlTransitionError
from .exceptions import NodeGuardExceededError
from .exceptions import NotAnExchangeError
from .exceptions import OracleCapExceededError
from .exceptions import ReportFormatError
from .exceptions import SelfSendNotAllowedError
from .exceptions import StateGuardExceededError
from .exceptions import SystemDefinitionError
from .exceptions import SystemSyntaxError
from .exceptions import UndeclaredPayloadError
from .exceptions import UndeclaredProcessError
from .exceptions import UnknownGlobalStateError
from .exceptions import UnmatchedReceiveError
from .exceptions import UnsupportedOutputFormatError
from .exceptions import WordSyntaxError
from .exchange import AsrState
from .exchange import build_asr
from .exchange import build_cd
from .exchange import CausalState
from .exchange import cd_step
from .exchange import feasible
from .exchange import ReachGraph
from .exchange import ReachNode
from .exchange import reach_fixpoint
from .exchange import reach_language
from .exchange import run_causal
from .fsa import EmptyLanguage
from .fsa import enumerate_language
from .fsa import FiniteLanguage
from .fsa import InfiniteLanguage
from .fsa import intersect
from .fsa import LengthVerdict
from .fsa import longest_word
from .fsa import Nfa
from .fsa import shortest_word
from .fsa import union
from .mailbox import Buffer
from .mailbox import BufferedMessage
from .mailbox import Configuration
from .mailbox import configurations_after
from .mailbox import enabled_actions
from .mailbox import Execution
from .mailbox import explore
from .mailbox import initial_configuration
from .mailbox import is_trace_bounded
from .mailbox import run
from .mailbox import step
from .mailbox import TraceFound
from .mailbox import TraceNotFound
from .mailbox import TraceVerdict
from .model import Action
from .model import ActionKind
from .model import exchange_actions
from .model import GlobalAutomaton
from .model import GlobalState
from .model import GlobalTransition
from .model import global_product
from .model import LocalAutomaton
from .model import LocalState
from .model import LocalTransition
from .model import matched
from .model import Payload
from .model import ProcessId
from .model import receive
from .model import send
from .model import sigma1
from .model import sigma2
from .model import SigmaSymbol
from .model import SigmaWord
from .model import sigma_alphabet
from .model import SymbolKind
from .model import System
from .model import unmatched
from .msc import canonical_form
from .msc import concat
from .msc import EMPTY_MSC
from .msc import EventId
from .msc import exchange_word
from .msc import is_exchange
from .msc import is_k_exchange
from .msc import linearizations
from .msc import linearization_orders
from .msc import MessageSequenceChart
from .msc import MessageVertex
from .msc import msc_isomorphic
from .msc import msc_of_execution
from .msc import msc_of_word
from .msc import satisfies_causal_delivery_oracle
from .msc import SrcPair
from .msc import sub_msc
from .parsing import format_action
from .parsing import format_actions
from .parsing import format_global_state
from .parsing import format_symbol
from .parsing import format_word
from .parsing import parse_actions
from .parsing import parse_global_state
from .parsing import parse_system
from .parsing import parse_word
from .parsing import pretty_print_system
from .prime import abstraction_guard
from .prime import alpha
from .prime import alpha_with_origins
from .prime import EMPTY_PGRAPH
from .prime import is_prime_oracle
from .prime import PGraph
from .prime import pgraph_of_word
from .prime import prime_nfa
from .prime import prime_step
from .prime import pstep_full
from .reports import buffer_state_to_dict
from .reports import execution_from_dict
from .reports import execution_to_dict
from .reports import node_from_dict
from .reports import node_to_dict
from .reports import render_json
from .reports import render_text
from .reports import UP_TO_BOUNDS
from .reports import Verdict
from .reports import verdict_from_dict
from .reports import verdict_to_dict
from .settings import AnalysisSettings
from .settings import DEFAULT_ENUMERATE_CAP
from .settings import DEFAULT_EXPLORE_ACTIONS
from .settings import DEFAULT_EXPLORE_BUFFER
from .settings import DEFAULT_FRONTIER_GUARD
from .settings import DEFAULT_LINEARIZATION_CAP
from .settings import DEFAULT_NODE_GUARD
from .settings import DEFAULT_ORACLE_EVENT_CAP
from .settings import DEFAULT_STATE_GUARD
from .settings import resolve_settings

__all__ = [
    "MailboxSynchronizabilityError",
    "SystemDefinitionError",
    "SystemSyntaxError",
    "EmptySystemError",
    "UndeclaredProcessError",
    "UndeclaredPayloadError",
    "DuplicateStateError",
    "DuplicateProcessError",
    "MissingInitialStateError",
    "ForeignActionError",
    "SelfSendNotAllowedError",
    "WordSyntaxError",
    "UnknownGlobalStateError",
    "ActionNotEnabledError",
    "NoControlTransitionError",
    "EmptyBufferError",
    "BufferHeadMismatchError",
    "MalformedMscError",
    "UnmatchedReceiveError",
    "NotAnExchangeError",
    "GuardExceededError",
    "StateGuardExceededError",
    "NodeGuardExceededError",
    "FrontierGuardExceededError",
    "EnumerationCapExceededError",
    "OracleCapExceededError",
    "AlphabetMismatchError",
    "AbstractionInvariantError",
    "UnsupportedOutputFormatError",
    "ReportFormatError",
    "DEFAULT_STATE_GUARD",
    "DEFAULT_NODE_GUARD",
    "DEFAULT_FRONTIER_GUARD",
    "DEFAULT_EXPLORE_ACTIONS",
    "DEFAULT_EXPLORE_BUFFER",
    "DEFAULT_ENUMERATE_CAP",
    "DEFAULT_ORACLE_EVENT_CAP",
    "DEFAULT_LINEARIZATION_CAP",
    "AnalysisSettings",
    "resolve_settings",
    "ProcessId",
    "Payload",
    "LocalState",
    "GlobalState",
    "ActionKind",
    "Action",
    "send",
    "receive",
    "LocalTransition",
    "LocalAutomaton",
    "SymbolKind",
    "SigmaSymbol",
    "SigmaWord",
    "matched",
    "unmatched",
    "sigma1",
    "sigma2",
    "exchange_actions",
    "System",
    "sigma_alphabet",
    "GlobalTransition",
    "GlobalAutomaton",
    "global_product",
    "parse_system",
    "pretty_print_system",
    "parse_word",
    "parse_actions",
    "format_symbol",
    "format_word",
    "format_action",
    "format_actions",
    "format_global_state",
    "parse_global_state",
    "EventId",
    "SrcPair",
    "MessageVertex",
    "MessageSequenceChart",
    "EMPTY_MSC",
    "msc_of_execution",
    "msc_of_word",
    "concat",
    "sub_msc",
    "linearization_orders",
    "linearizations",
    "satisfies_causal_delivery_oracle",
    "is_exchange",
    "is_k_exchange",
    "canonical_form",
    "msc_isomorphic",
    "exchange_word",
    "BufferedMessage",
    "Buffer",
    "Configuration",
    "initial_configuration",
    "step",
    "Execution",
    "configurations_after",
    "run",
    "enabled_actions",
    "explore",
    "TraceFound",
    "TraceNotFound",
    "TraceVerdict",
    "is_trace_bounded",
    "EventKind",
    "EdgeLabel",
    "ConflictEdge",
    "EventNode",
    "ConflictGraph",
    "ExtendedConflictGraph",
    "conflict_graph",
    "event_graph",
    "extended_closure",
    "BufferState",
    "buffer_state",
    "AcyclicityVerdicts",
    "acyclicity_verdicts",
    "check_causal",
    "Condensation",
    "sccs",
    "is_prime_msc",
    "is_k_synchronizable_msc",
    "is_prime_by_split_search",
    "is_k_synchronizable_by_chop_search",
    "harvest_exchanges",
    "Nfa",
    "intersect",
    "union",
    "EmptyLanguage",
    "FiniteLanguage",
    "InfiniteLanguage",
    "LengthVerdict",
    "longest_word",
    "shortest_word",
    "enumerate_language",
    "AsrState",
    "build_asr",
    "CausalState",
    "cd_step",
    "run_causal",
    "build_cd",
    "feasible",
    "ReachNode",
    "ReachGraph",
    "reach_fixpoint",
    "reach_language",
    "PGraph",
    "EMPTY_PGRAPH",
    "pstep_full",
    "pgraph_of_word",
    "is_prime_oracle",
    "alpha_with_origins",
    "alpha",
    "prime_step",
    "abstraction_guard",
    "prime_nfa",
    "Degree",
    "Unbounded",
    "GuardExceeded",
    "DegreeVerdict",
    "degree_bound",
    "BoundedPass",
    "BoundedFail",
    "BoundedInconclusive",
    "BoundedVerdict",
    "check_k_bounded",
    "UnboundedExchange",
    "BoundedCounterexample",
    "Synchronizable",
    "NotSynchronizable",
    "Inconclusive",
    "SyncVerdict",
    "synchronizable",
    "theoretical_bound_for",
    "theoretical_bound",
    "Verdict",
    "UP_TO_BOUNDS",
    "buffer_state_to_dict",
    "node_to_dict",
    "node_from_dict",
    "execution_to_dict",
    "execution_from_dict",
    "verdict_to_dict",
    "verdict_from_dict",
    "render_json",
    "render_text",
    "msc_to_dot",
    "conflict_graph_to_dot",
    "nfa_to_dot",
    "reach_graph_to_dot",
    "pgraph_to_dot",
    "CliConfig",
    "main",
]
