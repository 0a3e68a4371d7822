"""Sierpiński space, enumeration names of subsets of ℕ, and closed choice.

Enumeration convention, used for open and closed sets alike: an enumeration
value ``0`` emits nothing, a value ``k + 1`` emits ``k``.  An open set is the
set of emitted elements; a closed set is the complement of what its name emits.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .machines import Name, OperatorMachine, QueryLog, eval_op_logged
from .pairing import unpair
from .universal import STAR

SierpName = Callable[[int], bool]
SierpSeqName = Callable[[tuple], bool]


@dataclass(frozen=True)
class OpenEnumName:
    enum: Callable[[int], int]


@dataclass(frozen=True)
class ClosedEnumName:
    enum: Callable[[int], int]


def sierp_eval(phi: SierpName, fuel: int) -> bool:
    """True iff ``phi`` fires at some step below ``fuel``."""
    return any(phi(n) for n in range(fuel))


def open_to_sw(phi: OpenEnumName) -> SierpSeqName:
    """Sequence of Sierpiński names; slice ``i`` fires at step ``m`` iff step ``m`` emits ``i``."""
    return lambda im: phi.enum(im[1]) == im[0] + 1


def sw_to_on(psi: SierpSeqName) -> OpenEnumName:
    """Dovetail over (slice, step) pairs: step ``pair(i, m)`` emits ``i`` iff slice ``i`` fires at ``m``."""

    def enum(k: int) -> int:
        i, m = unpair(k)
        return i + 1 if psi((i, m)) else 0

    return OpenEnumName(enum)


def closed_complement(phi: Union[OpenEnumName, ClosedEnumName]) -> Union[ClosedEnumName, OpenEnumName]:
    """Complementation between open and closed subsets: the enumeration itself is kept."""
    if isinstance(phi, OpenEnumName):
        return ClosedEnumName(phi.enum)
    return OpenEnumName(phi.enum)


# -- decoding up to a fuel bound (tests and demos) ----------------------------------


def emitted(enum: Callable[[int], int], fuel: int) -> set[int]:
    return {v - 1 for v in (enum(m) for m in range(fuel)) if v > 0}


def open_members(phi: OpenEnumName, fuel: int) -> set[int]:
    return emitted(phi.enum, fuel)


def closed_excludes(phi: ClosedEnumName, fuel: int) -> set[int]:
    """Elements already known to be outside the closed set after ``fuel`` steps."""
    return emitted(phi.enum, fuel)


def sw_members(psi: SierpSeqName, indices: range, fuel: int) -> set[int]:
    return {i for i in indices if sierp_eval(lambda m: psi((i, m)), fuel)}


def finite_open_name(elements) -> OpenEnumName:
    """Name emitting each element of a finite set once, then zeros."""
    table = [k + 1 for k in sorted(set(elements))]
    return OpenEnumName(lambda m: table[m] if m < len(table) else 0)


# -- closed choice -----------------------------------------------------------------


class Verdict(enum.Enum):
    FOOLED = "fooled"
    NOT_A_REALIZER = "not a realizer"
    BUDGET_EXHAUSTED = "budget exhausted"
    ANSWER_CHANGED = "answer changed"


@dataclass(frozen=True)
class AdversaryReport:
    verdict: Verdict
    name: Optional[ClosedEnumName]
    first_answer: Optional[int]
    second_answer: Optional[int]
    log: QueryLog
    witness: Optional[int]  # an element of the fooling set, found by scanning

    def prefix(self, length: int = 16) -> list[int]:
        return [self.name.enum(m) for m in range(length)] if self.name else []


def singleton_zero(m: int) -> int:
    """Name of the closed set ``{0}``: its complement ``1, 2, 3, ...`` is emitted in order."""
    return m + 2


def choice_adversary(F: OperatorMachine, budget: int) -> AdversaryReport:
    """Defeat a candidate closed-choice realizer on ℕ.

    ``F`` must answer ``0`` on the name of ``{0}``.  Its query log ``q`` then
    certifies that answer, so ``F`` is run again on the name that copies the
    original on ``q`` and emits ``0`` everywhere else.  That name describes a
    non-empty set without ``0``, yet the certified answer is still ``0``.
    """
    first, log = eval_op_logged(F, singleton_zero, STAR, budget)
    if first is None:
        return AdversaryReport(Verdict.BUDGET_EXHAUSTED, None, None, None, log, None)
    if first != 0:
        return AdversaryReport(Verdict.NOT_A_REALIZER, None, first, None, log, None)

    logged = frozenset(log)

    def fooling(n: int) -> int:
        return singleton_zero(n) if n in logged else 1

    name = ClosedEnumName(fooling)
    second, _ = eval_op_logged(F, fooling, STAR, budget)
    # the complement is 0 plus the values emitted on the log; scan just past them
    excluded = {0} | {singleton_zero(m) - 1 for m in log}
    witness = next(n for n in range(max(excluded) + 2) if n not in excluded)
    if second is None:
        verdict = Verdict.BUDGET_EXHAUSTED
    elif second == 0:
        verdict = Verdict.FOOLED
    else:
        verdict = Verdict.ANSWER_CHANGED
    return AdversaryReport(verdict, name, first, second, log, witness)


# -- naive candidate realizers --------------------------------------------------------


def always_zero(n: int, phi: Name, q) -> int:
    return 0


def scan_candidate(k: int) -> OperatorMachine:
    """Reads the first ``k`` enumeration values (needs effort ``k``) and answers the least unexcluded number."""

    def scan(n: int, phi: Name, q) -> Optional[int]:
        if n < k:
            return None
        excluded = emitted(phi, k)
        return next(i for i in range(len(excluded) + 1) if i not in excluded)

    return scan


def candidate_by_name(label: str) -> OperatorMachine:
    if label == "always-zero":
        return always_zero
    if label.startswith("scan-"):
        try:
            k = int(label[len("scan-"):])
        except ValueError:
            raise ValueError(f"bad scan width in {label!r}") from None
        if k < 0:
            raise ValueError("scan width must be non-negative")
        return scan_candidate(k)
    raise ValueError(f"unknown candidate {label!r}")
