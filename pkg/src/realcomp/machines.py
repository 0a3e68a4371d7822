"""Effort-indexed partial computation.

A *fuel machine* is a total function ``N(n, s)`` returning a value or ``None``;
the effort ``n`` plays the part of a step bound, and ``N`` specifies the
multifunction ``s ↦ {t | ∃n: N(n, s) = t}``.  An *operator machine*
``M(n, oracle, q)`` does the same for operators on names: it answers the
question ``q`` about the output name while consulting the input name only
through ``oracle``.

``None`` stands for "no value at this effort"; bounded evaluation cannot tell
that apart from divergence, so callers escalate budgets instead.
"""

from __future__ import annotations

from typing import Any, Callable, Hashable, Iterable, Optional

from .mf import MultiFn
from .pairing import pair, unpair

Name = Callable[[Any], Any]
FuelMachine = Callable[[int, Any], Optional[Any]]
OperatorMachine = Callable[[int, Name, Any], Optional[Any]]
QueryLog = tuple


def eval_fuel(N: FuelMachine, s: Any, budget: int) -> Optional[Any]:
    """Value of ``N`` at the least effort ``n <= budget`` where it is defined."""
    for n in range(budget + 1):
        t = N(n, s)
        if t is not None:
            return t
    return None


def monotonize(N: FuelMachine) -> FuelMachine:
    """Return the machine answering at effort ``n`` with the first value ``N`` gives on ``0..n``."""

    def monotone(n: int, s: Any) -> Optional[Any]:
        return eval_fuel(N, s, n)

    return monotone


def phi_compose(N2: FuelMachine, N1: FuelMachine) -> FuelMachine:
    """Sequential composition; the effort is split with Cantor unpairing."""

    def composite(k: int, r: Any) -> Optional[Any]:
        n, m = unpair(k)
        s = N1(m, r)
        if s is None:
            return None
        return N2(n, s)

    return composite


def phi_multifn(N: FuelMachine, carrier_in: Iterable, carrier_out: Iterable, max_effort: int) -> MultiFn:
    """The specified multifunction of ``N``, restricted to efforts ``0..max_effort``."""
    cin = tuple(carrier_in)
    graph = {s: {N(n, s) for n in range(max_effort + 1)} - {None} for s in cin}
    return MultiFn.from_mapping(cin, carrier_out, graph)


def composite_effort_bound(max_effort: int) -> int:
    """Largest paired effort needed to reach every pair of component efforts ``<= max_effort``."""
    return pair(max_effort, max_effort)


class LoggingOracle:
    """Wraps a name and records every distinct question asked, in first-access order."""

    __slots__ = ("_name", "_seen")

    def __init__(self, name: Name):
        self._name = name
        self._seen: dict = {}

    def __call__(self, q: Hashable) -> Any:
        self._seen.setdefault(q, None)
        return self._name(q)

    @property
    def log(self) -> QueryLog:
        return tuple(self._seen)


def eval_op(M: OperatorMachine, phi: Name, q: Any, budget: int) -> Optional[Any]:
    return eval_op_logged(M, phi, q, budget)[0]


def eval_op_logged(M: OperatorMachine, phi: Name, q: Any, budget: int) -> tuple[Optional[Any], QueryLog]:
    """Run ``M`` at efforts ``0, 1, ..., budget`` until it answers.

    The returned log covers the oracle questions of every attempted effort, so
    it certifies the failures at lower efforts as well as the final answer: any
    name agreeing with ``phi`` on the log reproduces both result and log.
    """
    oracle = LoggingOracle(phi)
    for n in range(budget + 1):
        a = M(n, oracle, q)
        if a is not None:
            return a, oracle.log
    return None, oracle.log


# -- sample machines -----------------------------------------------------------


def search_machine(n: int, chi: Name, q: Any = None) -> Optional[int]:
    """Least ``k <= n`` with ``chi(k) == 0``; the question is ignored."""
    for k in range(n + 1):
        if chi(k) == 0:
            return k
    return None


def section_machine(n: int, phi: Name, q: int) -> Optional[int]:
    """Answers ``n`` once ``phi(n) == q``; its outputs are exactly the sections of ``phi``."""
    return n if phi(n) == q else None


def constant_machine(value: Any) -> OperatorMachine:
    def const(n: int, phi: Name, q: Any) -> Any:
        return value

    return const
