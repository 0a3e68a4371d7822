"""Represented spaces and the name-level constructions between them.

A :class:`SpaceDescriptor` records the question/answer enumerations of a
naming space and a ``names_point`` predicate.  The predicate is the
representation written as a test: runtime code only ever moves names around.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Optional, Sequence

from . import reals
from .machines import Name
from .metric import ZIGZAG
from .pairing import unpair
from .universal import STAR, Ask, Associate, Give, Reply, u_eval

Realizer = Callable[[Name], Name]


@dataclass(frozen=True)
class SpaceDescriptor:
    """A represented space.

    ``samples`` lists ``(point, name)`` pairs; function spaces use them to
    validate associates by sampling.
    """

    question_enum: Callable[[int], Any]
    answer_enum: Callable[[int], Any]
    names_point: Callable[[Name, Any], bool]
    samples: tuple = ()

    @property
    def default_answer(self) -> Any:
        return self.answer_enum(0)


@dataclass(frozen=True)
class Inl:
    value: Any


@dataclass(frozen=True)
class Inr:
    value: Any


class NoAnswer(Exception):
    """A partial name was asked a question it could not answer within its budget."""


def list_enum(elem_enum: Callable[[int], Any]) -> Callable[[int], tuple]:
    """Surjection from the naturals onto finite tuples over ``elem_enum``."""

    def decode(n: int) -> tuple:
        out = []
        while n > 0:
            head, n = unpair(n - 1)
            out.append(elem_enum(head))
        return tuple(out)

    return decode


# -- products --------------------------------------------------------------------


def pair_names(phi: Name, psi: Name, default_x: Any, default_y: Any) -> Name:
    """Embed a pair of names into the product naming space."""

    def paired(q: Any) -> tuple:
        if isinstance(q, Inl):
            return phi(q.value), default_y
        return default_x, psi(q.value)

    return paired


def fst(psi: Name) -> Name:
    return lambda q: psi(Inl(q))[0]


def snd(psi: Name) -> Name:
    return lambda q: psi(Inr(q))[1]


def fst_machine(n: int, psi: Name, q: Any) -> Any:
    """First projection as an operator machine; its log is the one question ``Inl(q)``."""
    return psi(Inl(q))[0]


def snd_machine(n: int, psi: Name, q: Any) -> Any:
    return psi(Inr(q))[1]


def fprd(F: Realizer, G: Realizer, default_x: Any, default_y: Any) -> Realizer:
    """Product of two realizers, acting componentwise on pair names.

    The defaults fill the unused half of each answer and belong to the output
    spaces.
    """
    return lambda psi: pair_names(F(fst(psi)), G(snd(psi)), default_x, default_y)


def product(X: SpaceDescriptor, Y: SpaceDescriptor) -> SpaceDescriptor:
    def question(n: int) -> Any:
        # evens go left, odds go right
        return Inl(X.question_enum(n // 2)) if n % 2 == 0 else Inr(Y.question_enum(n // 2))

    def answer(n: int) -> tuple:
        i, j = unpair(n)
        return X.answer_enum(i), Y.answer_enum(j)

    def names_point(psi: Name, point: tuple) -> bool:
        x, y = point
        return X.names_point(fst(psi), x) and Y.names_point(snd(psi), y)

    samples = tuple(
        ((x, y), pair_names(phi, chi, X.default_answer, Y.default_answer))
        for x, phi in X.samples
        for y, chi in Y.samples
    )
    return SpaceDescriptor(question, answer, names_point, samples)


# -- discrete spaces ---------------------------------------------------------------


def discrete_name(i: Any) -> Name:
    return lambda q: i


def discrete(count_enum: Callable[[int], Any], sample_size: int = 8) -> SpaceDescriptor:
    def names_point(phi: Name, i: Any) -> bool:
        return phi(STAR) == i

    samples = tuple((count_enum(k), discrete_name(count_enum(k))) for k in range(sample_size))
    return SpaceDescriptor(lambda n: STAR, count_enum, names_point, samples)


NATURALS = discrete(lambda n: n)


def discrete_function_machine(f: Callable[[Any], Any]) -> Callable[[int, Name, Any], Any]:
    """Realizer machine for any ``f`` out of a discrete space; it reads only ``STAR``."""
    return lambda n, phi, q: f(phi(STAR))


# -- real numbers ------------------------------------------------------------------


def real_space(max_exp: int = 20, sample_points: Sequence = ()) -> SpaceDescriptor:
    """The reals named by rational approximations, validated at accuracies ``2**-i, i <= max_exp``."""

    def names_point(phi: Name, x: Fraction) -> bool:
        try:
            return reals.names(phi, Fraction(x), max_exp)
        except NoAnswer:
            return False

    samples = tuple((Fraction(x), reals.rat_name(x)) for x in sample_points)
    return SpaceDescriptor(ZIGZAG, ZIGZAG, names_point, samples)


# -- sequence spaces ---------------------------------------------------------------


def slice_name(phi: Name, i: Any) -> Name:
    return lambda q: phi((i, q))


def bundle(slices: Callable[[Any], Name]) -> Name:
    return lambda iq: slices(iq[0])(iq[1])


def ptw(F: Realizer) -> Realizer:
    """Apply a realizer to every slice of a sequence name."""
    return lambda phi: bundle(lambda i: F(slice_name(phi, i)))


def seq_space(X: SpaceDescriptor, index_enum: Callable[[int], Any] = lambda n: n) -> SpaceDescriptor:
    """Sequences ``(x_i)`` indexed by ``index_enum``; questions are pairs ``(i, q)``.

    ``names_point`` accepts a finite tuple and checks the slices at the first
    ``len(point)`` indices.
    """

    def question(n: int) -> tuple:
        a, b = unpair(n)
        return index_enum(a), X.question_enum(b)

    def names_point(phi: Name, point: Sequence) -> bool:
        return all(X.names_point(slice_name(phi, index_enum(k)), x) for k, x in enumerate(point))

    return SpaceDescriptor(question, X.answer_enum, names_point)


# -- function spaces ----------------------------------------------------------------


def output_name(psi: Associate, phi: Name, max_loops: int) -> Name:
    """The output name ``q ↦ u_eval(psi, phi, q)``; raises :class:`NoAnswer` where the dialogue runs out."""

    def out(q: Any) -> Any:
        a = u_eval(psi, phi, q, max_loops)
        if a is None:
            raise NoAnswer(q)
        return a

    return out


def fun_space(X: SpaceDescriptor, Y: SpaceDescriptor, max_loops: int = 64) -> SpaceDescriptor:
    """Continuous functions ``X -> Y`` named by associates.

    ``names_point(psi, f)`` samples: for each ``(x, phi)`` in ``X.samples`` the
    output name of ``psi`` on ``phi`` must name ``f(x)`` in ``Y``.
    """

    def names_point(psi: Associate, f: Callable[[Any], Any]) -> bool:
        if not X.samples:
            raise ValueError("function-space validation needs sample points in the domain space")
        for x, phi in X.samples:
            try:
                if not Y.names_point(output_name(psi, phi, max_loops), f(x)):
                    return False
            except NoAnswer:
                return False
        return True

    answer_lists = list_enum(X.answer_enum)
    question_lists = list_enum(X.question_enum)

    def question(n: int) -> tuple:
        a, b = unpair(n)
        return answer_lists(a), Y.question_enum(b)

    def answer(n: int) -> Reply:
        if n % 2 == 0:
            return Ask(question_lists(n // 2))
        return Give(Y.answer_enum(n // 2))

    return SpaceDescriptor(question, answer, names_point)


def eval_realizer(max_loops: int = 64) -> Realizer:
    """Evaluation on ``Y^X × X``: a pair name of (associate, X-name) goes to a Y-name."""

    def evaluate(pair_name: Name) -> Name:
        psi = fst(pair_name)
        phi = snd(pair_name)
        return output_name(lambda a, q: psi((a, q)), phi, max_loops)

    return evaluate


def echo_associate(transform_question: Callable[[Any], Any] = lambda q: q,
                   transform_answer: Callable[[Any], Any] = lambda a: a) -> Associate:
    """Two-round associate: ask one derived question, then answer from its reply.

    With the default arguments it names the identity.
    """

    def psi(answers: tuple, q: Any) -> Reply:
        if not answers:
            return Ask((transform_question(q),))
        return Give(transform_answer(answers[0]))

    return psi


def doubling_associate() -> Associate:
    return echo_associate(lambda eps: eps / 2, lambda a: 2 * a)


# -- sequences as functions on discrete spaces -----------------------------------------


def seq_to_fun(phi: Name) -> Associate:
    def psi(answers: tuple, q: Any) -> Reply:
        if not answers:
            return Ask((STAR,))
        return Give(phi((answers[0], q)))

    return psi


def fun_to_seq(psi: Associate, max_loops: int) -> Callable[[tuple], Optional[Any]]:
    """Sequence name read off an associate; entries are ``None`` where the budget runs out."""
    return lambda iq: u_eval(psi, discrete_name(iq[0]), iq[1], max_loops)


def naming_to_seq(phi: Name) -> Name:
    """Identity-represented name ``Q -> A`` as a sequence of discrete names indexed by ``Q``."""
    return lambda qs: phi(qs[0])


def seq_to_naming(chi: Name) -> Name:
    return lambda q: chi((q, STAR))
