# -*- coding: utf-8 -*-
"""Plain text and JSON reports of degree and synchronizability verdicts."""
import json
from typing import Any
from typing import Dict
from typing import List
from typing import Optional
from typing import Union

from .conflict import BufferState
from .degree import BoundedCounterexample
from .degree import Degree
from .degree import DegreeVerdict
from .degree import GuardExceeded
from .degree import Inconclusive
from .degree import NotSynchronizable
from .degree import Synchronizable
from .degree import SyncVerdict
from .degree import Unbounded
from .degree import UnboundedExchange
from .exceptions import ReportFormatError
from .exchange import ReachNode
from .mailbox import BufferedMessage
from .mailbox import Configuration
from .mailbox import Execution
from .parsing import format_actions
from .parsing import format_word
from .parsing import parse_actions
from .parsing import parse_word
from .settings import AnalysisSettings

Verdict = Union[DegreeVerdict, SyncVerdict]
UP_TO_BOUNDS = "verified up to bounds"


def buffer_state_to_dict(buffers: BufferState) -> Dict[str, Any]:
    processes = sorted(buffers.processes())
    return {
        "send_sets": {r: sorted(buffers.send_set(r)) for r in processes},
        "receive_sets": {r: sorted(buffers.receive_set(r)) for r in processes},
    }


def node_to_dict(node: Optional[ReachNode]) -> Optional[Dict[str, Any]]:
    if node is None:
        return None
    return {"control": list(node.control), **buffer_state_to_dict(node.buffers)}


def node_from_dict(data: Optional[Dict[str, Any]]) -> Optional[ReachNode]:
    if data is None:
        return None
    return ReachNode(
        tuple(data["control"]),
        BufferState.from_sets(data["send_sets"], data["receive_sets"]),
    )


def execution_to_dict(execution: Execution) -> Dict[str, Any]:
    return {
        "actions": format_actions(execution.actions),
        "control": list(execution.final.control),
        "buffers": [
            [owner, [[m.sender, m.payload] for m in contents]]
            for owner, contents in execution.final.buffers
        ],
    }


def execution_from_dict(data: Dict[str, Any]) -> Execution:
    return Execution(
        parse_actions(data["actions"]),
        Configuration(
            tuple(data["control"]),
            tuple(
                (owner, tuple(BufferedMessage(s, p) for s, p in contents))
                for owner, contents in data["buffers"]
            ),
        ),
    )


def _degree_to_dict(verdict: DegreeVerdict) -> Dict[str, Any]:
    if isinstance(verdict, Degree):
        return {
            "verdict": "degree",
            "k": verdict.k,
            "witness": format_word(verdict.witness),
            "source": node_to_dict(verdict.source),
            "target": node_to_dict(verdict.target),
            "context": [format_word(w) for w in verdict.context],
        }
    if isinstance(verdict, Unbounded):
        return {
            "verdict": "unbounded",
            "prefix": format_word(verdict.prefix),
            "loop": format_word(verdict.loop),
            "suffix": format_word(verdict.suffix),
            "source": node_to_dict(verdict.source),
            "context": [format_word(w) for w in verdict.context],
        }
    return {"verdict": "guard-exceeded", "stage": verdict.stage, "guard": verdict.guard}


def verdict_to_dict(
    verdict: Verdict, settings: Optional[AnalysisSettings] = None
) -> Dict[str, Any]:
    if isinstance(verdict, Synchronizable):
        data: Dict[str, Any] = {
            "verdict": "synchronizable",
            "k": verdict.k,
            "caveat": UP_TO_BOUNDS,
            "max_actions": verdict.max_actions,
            "max_buffer": verdict.max_buffer,
            "degree": _degree_to_dict(verdict.degree),
        }
    elif isinstance(verdict, NotSynchronizable):
        reason = verdict.reason
        if isinstance(reason, UnboundedExchange):
            data = {
                "verdict": "not-synchronizable",
                "reason": "unbounded-exchange",
                "degree": _degree_to_dict(reason.degree),
            }
        else:
            data = {
                "verdict": "not-synchronizable",
                "reason": "bounded-counterexample",
                "k": reason.k,
                "execution": execution_to_dict(reason.execution),
            }
    elif isinstance(verdict, Inconclusive):
        data = {"verdict": "inconclusive", "stage": verdict.stage, "guard": verdict.guard}
    else:
        data = _degree_to_dict(verdict)
    if settings is not None:
        data["settings"] = settings.as_dict()
    return data


def _degree_from_dict(data: Dict[str, Any]) -> DegreeVerdict:
    kind = data["verdict"]
    if kind == "degree":
        return Degree(
            data["k"],
            parse_word(data["witness"]),
            node_from_dict(data["source"]),
            node_from_dict(data["target"]),
            tuple(parse_word(w) for w in data["context"]),
        )
    if kind == "unbounded":
        source = node_from_dict(data["source"])
        if source is None:
            raise ReportFormatError("an unbounded verdict needs a source node")
        return Unbounded(
            parse_word(data["prefix"]),
            parse_word(data["loop"]),
            parse_word(data["suffix"]),
            source,
            tuple(parse_word(w) for w in data["context"]),
        )
    if kind == "guard-exceeded":
        return GuardExceeded(data["stage"], data["guard"])
    raise ReportFormatError(f"unknown degree verdict '{kind}'")


def verdict_from_dict(data: Dict[str, Any]) -> Verdict:
    try:
        kind = data["verdict"]
        if kind == "synchronizable":
            degree = _degree_from_dict(data["degree"])
            if not isinstance(degree, Degree):
                raise ReportFormatError("a synchronizable verdict needs a finite degree")
            return Synchronizable(data["k"], data["max_actions"], data["max_buffer"], degree)
        if kind == "not-synchronizable":
            if data["reason"] == "unbounded-exchange":
                unbounded = _degree_from_dict(data["degree"])
                if not isinstance(unbounded, Unbounded):
                    raise ReportFormatError("an unbounded-exchange reason needs an unbounded degree")
                return NotSynchronizable(UnboundedExchange(unbounded))
            if data["reason"] == "bounded-counterexample":
                return NotSynchronizable(
                    BoundedCounterexample(data["k"], execution_from_dict(data["execution"]))
                )
            raise ReportFormatError(f"unknown reason '{data['reason']}'")
        if kind == "inconclusive":
            return Inconclusive(data["stage"], data["guard"])
        return _degree_from_dict(data)
    except (KeyError, TypeError, ValueError) as e:
        raise ReportFormatError(f"malformed report: {e}")  # pylint: disable=raise-missing-from


def render_json(verdict: Verdict, settings: Optional[AnalysisSettings] = None) -> str:
    return json.dumps(verdict_to_dict(verdict, settings), indent=2, sort_keys=True)


def _quoted(word: str) -> str:
    return word if word else "(empty)"


def render_text(verdict: Verdict, settings: Optional[AnalysisSettings] = None) -> str:
    lines: List[str] = []
    if isinstance(verdict, Synchronizable):
        lines.append(
            f"synchronizable: degree {verdict.k} ({UP_TO_BOUNDS}: {verdict.max_actions} actions, buffers of {verdict.max_buffer})"
        )
        lines.extend(_degree_lines(verdict.degree))
    elif isinstance(verdict, NotSynchronizable):
        reason = verdict.reason
        if isinstance(reason, UnboundedExchange):
            lines.append("not synchronizable: prime exchanges of unbounded size")
            lines.extend(_degree_lines(reason.degree))
        else:
            lines.append(f"not synchronizable: counterexample to {reason.k}-synchronizability")
            lines.append(f"  execution: {_quoted(format_actions(reason.execution.actions))}")
    elif isinstance(verdict, Inconclusive):
        lines.append(f"inconclusive: {verdict.stage} exceeded its limit of {verdict.guard}")
    else:
        lines.extend(_degree_lines(verdict))
    if settings is not None:
        lines.append(
            "settings: " + ", ".join(f"{key}={value}" for key, value in settings.as_dict().items())
        )
    return "\n".join(lines) + "\n"


def _degree_lines(verdict: DegreeVerdict) -> List[str]:
    if isinstance(verdict, Degree):
        lines = [f"degree: {verdict.k}"]
        if verdict.source is not None:
            lines.append(f"  witness: {_quoted(format_word(verdict.witness))}")
            lines.append(f"  from: {verdict.source.describe()}")
            if verdict.target is not None:
                lines.append(f"  to: {verdict.target.describe()}")
            lines.append(
                f"  context: {_quoted(' | '.join(format_word(w) for w in verdict.context))}"
            )
        return lines
    if isinstance(verdict, Unbounded):
        return [
            "degree: unbounded",
            f"  prefix: {_quoted(format_word(verdict.prefix))}",
            f"  loop: {_quoted(format_word(verdict.loop))}",
            f"  suffix: {_quoted(format_word(verdict.suffix))}",
            f"  from: {verdict.source.describe()}",
            f"  context: {_quoted(' | '.join(format_word(w) for w in verdict.context))}",
        ]
    return [f"degree: {verdict.stage} exceeded its limit of {verdict.guard}"]
