# -*- coding: utf-8 -*-
"""Synchronizability degree: the largest prime exchange a system can reach."""
import logging
from typing import NamedTuple
from typing import Optional
from typing import Set
from typing import Tuple
from typing import Union

from .conflict import is_k_synchronizable_msc
from .exceptions import GuardExceededError
from .exchange import ReachNode
from .exchange import reach_fixpoint
from .fsa import FiniteLanguage
from .fsa import InfiniteLanguage
from .fsa import intersect
from .fsa import longest_word
from .mailbox import Execution
from .mailbox import explore
from .model import SigmaWord
from .model import System
from .model import global_product
from .msc import canonical_form
from .msc import msc_of_execution
from .prime import prime_nfa
from .settings import AnalysisSettings
from .settings import resolve_settings

logger = logging.getLogger(__name__)


class Degree(NamedTuple):
    """k is the size of the largest reachable prime exchange, witnessed from source to target."""

    k: int
    witness: SigmaWord = ()
    source: Optional[ReachNode] = None
    target: Optional[ReachNode] = None
    context: Tuple[SigmaWord, ...] = ()


class Unbounded(NamedTuple):
    """Reachable prime exchanges prefix + loop^n + suffix exist for every n."""

    prefix: SigmaWord
    loop: SigmaWord
    suffix: SigmaWord
    source: ReachNode
    context: Tuple[SigmaWord, ...] = ()

    def pump(self, times: int) -> SigmaWord:
        return self.prefix + self.loop * times + self.suffix


class GuardExceeded(NamedTuple):
    stage: str
    guard: int


DegreeVerdict = Union[Degree, Unbounded, GuardExceeded]


def degree_bound(
    system: System, settings: Optional[AnalysisSettings] = None
) -> DegreeVerdict:
    settings = resolve_settings(settings)
    try:
        return _degree_bound(system, settings)
    except GuardExceededError as e:
        logger.info("degree of %s: %s", system.name, e)
        return GuardExceeded(e.stage, e.guard)


def _degree_bound(system: System, settings: AnalysisSettings) -> DegreeVerdict:
    graph = reach_fixpoint(system, settings)
    state_guard = settings.bound("state_guard")
    primes = prime_nfa(graph.product.alphabet, state_guard)
    best = Degree(0)
    for node in graph.nodes:
        verdict = longest_word(intersect(graph.node_language(node), primes, state_guard))
        logger.debug("longest prime exchange from %s: %s", node.describe(), verdict)
        if isinstance(verdict, InfiniteLanguage):
            logger.info("degree of %s: unbounded", system.name)
            return Unbounded(
                verdict.prefix,
                verdict.loop,
                verdict.suffix,
                node,
                graph.context_words(node),
            )
        if isinstance(verdict, FiniteLanguage) and verdict.max_len > best.k:
            targets = graph.targets_after(node, verdict.witness)
            if not targets:
                raise NotImplementedError("'targets' should never be empty for an accepted word")
            best = Degree(
                verdict.max_len,
                verdict.witness,
                node,
                targets[0],
                graph.context_words(node),
            )
    logger.info("degree of %s: %d", system.name, best.k)
    return best


class BoundedPass(NamedTuple):
    """No violation among the explored executions; not a proof."""

    k: int
    explored: int
    max_actions: int
    max_buffer: int


class BoundedFail(NamedTuple):
    k: int
    execution: Execution


class BoundedInconclusive(NamedTuple):
    stage: str
    guard: int


BoundedVerdict = Union[BoundedPass, BoundedFail, BoundedInconclusive]


def check_k_bounded(
    system: System, k: int, settings: Optional[AnalysisSettings] = None
) -> BoundedVerdict:
    """Look for an explored execution whose MSC cannot be chopped into k-exchanges."""
    settings = resolve_settings(settings)
    max_actions = settings.bound("explore_actions")
    max_buffer = settings.bound("explore_buffer")
    try:
        executions = explore(
            system, max_actions, max_buffer, settings.bound("frontier_guard")
        )
    except GuardExceededError as e:
        return BoundedInconclusive(e.stage, e.guard)
    checked: Set[object] = set()
    for execution in executions:
        msc = msc_of_execution(execution.actions)
        form = canonical_form(msc)
        if form in checked:
            continue
        checked.add(form)
        if not is_k_synchronizable_msc(msc, k):
            logger.info(
                "%s is not %d-synchronizable: %d-action counterexample",
                system.name,
                k,
                len(execution.actions),
            )
            return BoundedFail(k, execution)
    return BoundedPass(k, len(executions), max_actions, max_buffer)


class UnboundedExchange(NamedTuple):
    degree: Unbounded


class BoundedCounterexample(NamedTuple):
    k: int
    execution: Execution


class Synchronizable(NamedTuple):
    """Degree k, with the fixed-k check passed only up to the exploration bounds."""

    k: int
    max_actions: int
    max_buffer: int
    degree: Degree


class NotSynchronizable(NamedTuple):
    reason: Union[UnboundedExchange, BoundedCounterexample]


class Inconclusive(NamedTuple):
    stage: str
    guard: int


SyncVerdict = Union[Synchronizable, NotSynchronizable, Inconclusive]


def synchronizable(
    system: System, settings: Optional[AnalysisSettings] = None
) -> SyncVerdict:
    settings = resolve_settings(settings)
    degree = degree_bound(system, settings)
    if isinstance(degree, GuardExceeded):
        return Inconclusive(degree.stage, degree.guard)
    if isinstance(degree, Unbounded):
        return NotSynchronizable(UnboundedExchange(degree))
    check = check_k_bounded(system, degree.k, settings)
    if isinstance(check, BoundedInconclusive):
        return Inconclusive(check.stage, check.guard)
    if isinstance(check, BoundedFail):
        return NotSynchronizable(BoundedCounterexample(check.k, check.execution))
    return Synchronizable(degree.k, check.max_actions, check.max_buffer, degree)


def theoretical_bound_for(state_count: int, process_count: int) -> int:
    return state_count * state_count * 2 ** (8 * process_count * process_count)


def theoretical_bound(system: System, settings: Optional[AnalysisSettings] = None) -> int:
    """Squared count of control-reachable global states times 2^(8 * processes^2)."""
    settings = resolve_settings(settings)
    product = global_product(system, settings.bound("state_guard"))
    return theoretical_bound_for(len(product.states), len(system.processes))
