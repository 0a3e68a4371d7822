"""Multivalued functions over finite carriers.

A :class:`MultiFn` maps each input to the set of outputs it accepts; that set
may be empty.  A function ``f`` *chooses* through ``F`` if ``f(s) in F(s)``
whenever ``F(s)`` is non-empty.  Everything here is literal
set manipulation, which makes the module usable as a brute-force oracle for the
machine-level code in the rest of the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence


class CarrierMismatch(TypeError):
    """Raised when two multifunctions cannot be combined because their carriers differ."""


def _canon(values: Iterable[Hashable], carrier: Sequence[Hashable]) -> tuple:
    # carrier order is the canonical order; it need not be sortable
    wanted = set(values)
    unknown = wanted.difference(carrier)
    if unknown:
        raise ValueError(f"values {sorted(map(repr, unknown))} are not in the output carrier")
    return tuple(t for t in carrier if t in wanted)


@dataclass(frozen=True)
class MultiFn:
    """A multifunction ``carrier_in ⇉ carrier_out``.

    ``graph`` holds one ``(s, values)`` entry per input, in carrier order, with
    ``values`` a duplicate-free tuple in output-carrier order.  Build instances
    with :meth:`from_mapping` rather than by hand.
    """

    carrier_in: tuple
    carrier_out: tuple
    graph: tuple

    @classmethod
    def from_mapping(
        cls,
        carrier_in: Iterable[Hashable],
        carrier_out: Iterable[Hashable],
        mapping: Mapping[Hashable, Iterable[Hashable]],
    ) -> "MultiFn":
        """Inputs missing from ``mapping`` get the empty value set."""
        cin = tuple(carrier_in)
        cout = tuple(carrier_out)
        if len(set(cin)) != len(cin) or len(set(cout)) != len(cout):
            raise ValueError("carriers must not contain duplicates")
        stray = set(mapping).difference(cin)
        if stray:
            raise ValueError(f"inputs {sorted(map(repr, stray))} are not in the input carrier")
        graph = tuple((s, _canon(mapping.get(s, ()), cout)) for s in cin)
        return cls(cin, cout, graph)

    def __call__(self, s: Hashable) -> tuple:
        for key, values in self.graph:
            if key == s:
                return values
        raise KeyError(s)

    def as_dict(self) -> dict:
        return dict(self.graph)

    def dom(self) -> tuple:
        return tuple(s for s, values in self.graph if values)

    def is_total(self) -> bool:
        return all(values for _, values in self.graph)

    def is_singlevalued(self) -> bool:
        return all(len(values) <= 1 for _, values in self.graph)

    def is_cototal(self) -> bool:
        return invert(self).is_total()

    def __repr__(self) -> str:
        body = ", ".join(f"{s!r}: {set(v) if v else '∅'}" for s, v in self.graph)
        return f"MultiFn({{{body}}})"


def _check_chain(F: MultiFn, G: MultiFn) -> None:
    if G.carrier_out != F.carrier_in:
        raise CarrierMismatch(
            f"cannot compose: G lands in {G.carrier_out!r} but F starts at {F.carrier_in!r}"
        )


def _check_same(F: MultiFn, G: MultiFn) -> None:
    if F.carrier_in != G.carrier_in or F.carrier_out != G.carrier_out:
        raise CarrierMismatch("multifunctions do not share carriers")


def mf_compose(F: MultiFn, G: MultiFn) -> MultiFn:
    """Multifunction composition ``F ∘ G``.

    ``(F ∘ G)(r)`` is empty unless every element of ``G(r)`` lies in ``dom(F)``;
    otherwise it is the union of the ``F(s)`` over ``s ∈ G(r)``.
    """
    _check_chain(F, G)
    f = F.as_dict()
    graph = []
    for r, mids in G.graph:
        rows = [f[s] for s in mids]
        graph.append((r, _union(rows, F.carrier_out) if all(rows) else ()))
    return MultiFn(G.carrier_in, F.carrier_out, tuple(graph))


def rel_compose(F: MultiFn, G: MultiFn) -> MultiFn:
    """Relational composition: same as :func:`mf_compose` without the domain condition."""
    _check_chain(F, G)
    f = F.as_dict()
    graph = tuple((r, _union([f[s] for s in mids], F.carrier_out)) for r, mids in G.graph)
    return MultiFn(G.carrier_in, F.carrier_out, graph)


def _union(rows: list, carrier: tuple) -> tuple:
    # rows are already canonical, so the common cases need no re-sorting
    if not rows:
        return ()
    if len(rows) == 1:
        return rows[0]
    hit = set().union(*rows)
    return tuple(t for t in carrier if t in hit)


def tightens(F: MultiFn, G: MultiFn) -> bool:
    """True iff ``F`` is defined wherever ``G`` is and only allows values ``G`` allows there."""
    _check_same(F, G)
    f = F.as_dict()
    for s, allowed in G.graph:
        if not allowed:
            continue
        if not f[s] or not set(f[s]) <= set(allowed):
            return False
    return True


def lift_total(f: Callable[[Hashable], Hashable], carrier_in: Iterable, carrier_out: Iterable) -> MultiFn:
    cin = tuple(carrier_in)
    return MultiFn.from_mapping(cin, carrier_out, {s: (f(s),) for s in cin})


def lift_partial(f: Mapping[Hashable, Hashable], carrier_in: Iterable, carrier_out: Iterable) -> MultiFn:
    """Partial functions given as a dict; inputs absent from the dict are undefined."""
    return MultiFn.from_mapping(carrier_in, carrier_out, {s: (t,) for s, t in f.items()})


def invert(F: MultiFn) -> MultiFn:
    back: dict = {t: [] for t in F.carrier_out}
    for s, values in F.graph:
        for t in values:
            back[t].append(s)
    return MultiFn.from_mapping(F.carrier_out, F.carrier_in, back)


def is_choice(f: Callable[[Hashable], Hashable], F: MultiFn) -> bool:
    return all(f(s) in values for s, values in F.graph if values)


# -- enumeration helpers for exhaustive checks ---------------------------------


def subsets(carrier: Sequence) -> list[tuple]:
    return [c for k in range(len(carrier) + 1) for c in combinations(carrier, k)]


def all_multifns(carrier_in: Sequence, carrier_out: Sequence) -> Iterator[MultiFn]:
    """Every multifunction between two finite carriers, in a fixed order."""
    cin, cout = tuple(carrier_in), tuple(carrier_out)
    for rows in product(subsets(cout), repeat=len(cin)):
        yield MultiFn(cin, cout, tuple(zip(cin, rows)))


def all_functions(carrier_in: Sequence, carrier_out: Sequence) -> Iterator[dict]:
    cin = tuple(carrier_in)
    for values in product(tuple(carrier_out), repeat=len(cin)):
        yield dict(zip(cin, values))
