"""The dialogue universal: evaluating associates against names.

An associate ``psi(answers, q)`` is consulted with the answers collected so far
and the question ``q`` about the output.  It either returns :class:`Ask` with a
batch of questions for the input name, or :class:`Give` with the final answer.
:func:`u_eval` runs that loop; one consultation is one loop.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Union

from .machines import Name, OperatorMachine, eval_op_logged


@dataclass(frozen=True)
class Ask:
    questions: tuple

    def __str__(self) -> str:
        return "? (" + ", ".join(map(_show, self.questions)) + ")"


@dataclass(frozen=True)
class Give:
    answer: Any

    def __str__(self) -> str:
        return f"! {_show(self.answer)}"


def _show(x: Any) -> str:
    return "*" if x is STAR else str(x)


class _Star:
    """The single question of a one-point question set."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "STAR"

    def __reduce__(self):
        return (_Star, ())


STAR = _Star()

Reply = Union[Ask, Give]
Associate = Callable[[tuple, Any], Reply]


@dataclass
class DialogueTrace:
    """Loop-by-loop record of one :func:`u_eval` run.

    ``rounds`` pairs the length of the answer list passed to the associate with
    its reply.  ``outcome`` is set iff the last reply was a :class:`Give`.
    """

    rounds: list = field(default_factory=list)
    gathered: tuple = ()
    outcome: Optional[Any] = None

    @property
    def converged(self) -> bool:
        return bool(self.rounds) and isinstance(self.rounds[-1][1], Give)

    def lines(self) -> list[str]:
        return [f"round {k}: {reply}" for k, (_, reply) in enumerate(self.rounds, start=1)]


def u_trace(psi: Associate, phi: Name, q: Any, max_loops: int) -> DialogueTrace:
    trace = DialogueTrace()
    answers: tuple = ()
    gathered: list = []
    for _ in range(max_loops):
        reply = psi(answers, q)
        trace.rounds.append((len(answers), reply))
        if isinstance(reply, Give):
            trace.outcome = reply.answer
            break
        batch = tuple(reply.questions)
        gathered.extend(batch)
        answers = answers + tuple(phi(x) for x in batch)
    trace.gathered = tuple(gathered)
    return trace


def u_eval(psi: Associate, phi: Name, q: Any, max_loops: int) -> Optional[Any]:
    """Answer of ``psi`` on ``phi`` at ``q``, or ``None`` if it still asks after ``max_loops`` loops."""
    if max_loops < 1:
        raise ValueError("max_loops must be at least 1")
    return u_trace(psi, phi, q, max_loops).outcome


def gather_queries(psi: Associate, phi: Name, q: Any, n: int) -> tuple:
    """All questions put to ``phi`` during the first ``n`` loops."""
    return u_trace(psi, phi, q, n).gathered


def query_modulus(psi: Associate, phi: Name, q: Any, max_loops: int) -> Optional[tuple]:
    """Questions asked on a converging run; they form a self-modulating certificate."""
    trace = u_trace(psi, phi, q, max_loops)
    return trace.gathered if trace.converged else None


def as_name(psi: Associate) -> Name:
    """View an associate as a name whose questions are ``(answers, q)`` pairs."""
    return lambda question: psi(*question)


def constant_associate(value: Any) -> Associate:
    return lambda answers, q: Give(value)


def build_associate(
    M: OperatorMachine,
    qs: Callable[[int], Any],
    default_answer: Any,
    fuel_schedule: Callable[[int], int] = lambda k: k,
) -> Associate:
    """Associate for the operator specified by ``M``.

    The answer list ``a`` is read as the values of the input name on
    ``qs(0), ..., qs(len(a) - 1)``; all other questions get ``default_answer``.
    ``M`` is run on that guess with fuel ``fuel_schedule(len(a))``.  A result is
    only returned when every question ``M`` logged lies in the known prefix;
    otherwise the next question of the enumeration is requested.
    """

    def psi(answers: tuple, q: Any) -> Reply:
        known: dict = {}
        for i, a in enumerate(answers):
            known.setdefault(qs(i), a)

        def guess(x: Any) -> Any:
            return known.get(x, default_answer)

        result, log = eval_op_logged(M, guess, q, fuel_schedule(len(answers)))
        if result is not None and all(x in known for x in log):
            return Give(result)
        return Ask((qs(len(answers)),))

    return psi


def d_swap(phi: Name) -> Associate:
    """Associate that runs the dialogue of its oracle ``psi`` against the fixed name ``phi``.

    Its input name is an associate ``psi`` viewed through :func:`as_name`; its
    answer list is the history of ``psi``'s replies.  Each loop replays that
    history to rebuild the answers ``phi`` gave, then either forwards
    ``psi``'s final answer or asks ``psi`` its next question.  Running it takes
    exactly one loop more than running ``psi`` on ``phi`` directly.
    """

    def swapped(history: tuple, q: Any) -> Reply:
        answers: tuple = ()
        for reply in history:
            if isinstance(reply, Give):
                return reply
            answers = answers + tuple(phi(x) for x in reply.questions)
        return Ask(((answers, q),))

    return swapped
