"""The Baire metric on naming spaces and dense-sequence names of reals.

Equality of names is undecidable, so :func:`baire_dist` never returns a bare
number: it reports either the exact distance ``2**-k`` together with the
witnessing disagreement, or a certified upper bound ``2**-cutoff``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .machines import Name
from .pairing import pair, unpair
from .reals import RealName, least_exp

MetricName = Callable[[int], int]


class ZigZagRationals:
    """Surjective enumeration of the rationals.

    ``0 ↦ 0``; for ``n >= 1`` write ``n - 1 = 2k + s`` and ``(a, b) = unpair(k)``;
    the value is ``(-1)**s * (a + 1) / (b + 1)``.  Non-reduced pairs repeat
    earlier values, which keeps the map total and its inverse closed-form.
    """

    def __call__(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("enumeration index must be non-negative")
        if n == 0:
            return Fraction(0)
        k, sign = divmod(n - 1, 2)
        a, b = unpair(k)
        value = Fraction(a + 1, b + 1)
        return -value if sign else value

    def index(self, q) -> int:
        """Least index of ``q``; that is the index of its reduced form."""
        q = Fraction(q)
        if q == 0:
            return 0
        k = pair(abs(q.numerator) - 1, q.denominator - 1)
        return 2 * k + (1 if q < 0 else 0) + 1


ZIGZAG = ZigZagRationals()


@dataclass(frozen=True)
class BaireDistance:
    """``exact`` means the distance is ``2**-exponent``; otherwise it is at most ``2**-exponent``."""

    exact: bool
    exponent: int

    @property
    def bound(self) -> Fraction:
        return Fraction(1, 1 << self.exponent)

    def __str__(self) -> str:
        if self.exact:
            return f"2^-{self.exponent} (exact)"
        return f"<= 2^-{self.exponent} (certified)"


def baire_dist(phi: Name, psi: Name, qs: Callable[[int], Any], cutoff: int) -> BaireDistance:
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    for n in range(cutoff):
        q = qs(n)
        if phi(q) != psi(q):
            return BaireDistance(True, n)
    return BaireDistance(False, cutoff)


def coincide_iff_close(phi: Name, psi: Name, qs: Callable[[int], Any], n: int) -> tuple[bool, bool]:
    """Return (agree on ``qs(0..n-1)``, baire distance certified ``<= 2**-n``)."""
    coincide = all(phi(qs(k)) == psi(qs(k)) for k in range(n))
    if n == 0:
        return coincide, True
    return coincide, not baire_dist(phi, psi, qs, n).exact


def rq_to_metric(phi: RealName, rat_enum: ZigZagRationals = ZIGZAG) -> MetricName:
    return lambda n: rat_enum.index(phi(Fraction(1, 1 << n)))


def metric_to_rq(mu: MetricName, rat_enum: Callable[[int], Fraction] = ZIGZAG) -> RealName:
    return lambda eps: rat_enum(mu(least_exp(eps)))


def metric_names(mu: MetricName, x: Fraction, max_n: int = 20,
                 rat_enum: Callable[[int], Fraction] = ZIGZAG) -> bool:
    """Check ``|x - r_mu(n)| <= 2**-n`` for ``n = 0..max_n``."""
    return all(abs(x - rat_enum(mu(n))) <= Fraction(1, 1 << n) for n in range(max_n + 1))
