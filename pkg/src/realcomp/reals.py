"""Exact real arithmetic on rational-approximation names.

A real ``x`` is named by any ``phi: Fraction -> Fraction`` with
``|x - phi(eps)| <= eps`` for every rational ``eps > 0``.  All arithmetic is
exact; no floats touch a name value.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable

RealName = Callable[[Fraction], Fraction]
EffCauchyName = Callable[[int, Fraction], Fraction]

ONE = Fraction(1)


def least_exp(eps: Fraction) -> int:
    """Least ``n >= 0`` with ``2**-n <= eps``."""
    if eps <= 0:
        raise ValueError("accuracy must be positive")
    if eps >= 1:
        return 0
    # 2**-n <= p/q  <=>  q <= p * 2**n
    p, q = eps.numerator, eps.denominator
    n = max(q.bit_length() - p.bit_length() - 1, 0)
    while q > p << n:
        n += 1
    return n


def rat_name(q) -> RealName:
    q = Fraction(q)
    return lambda eps: q


def add_realizer(phi1: RealName, phi2: RealName) -> RealName:
    def total(eps: Fraction) -> Fraction:
        half = eps / 2
        return phi1(half) + phi2(half)

    return total


def neg_realizer(phi: RealName) -> RealName:
    return lambda eps: -phi(eps)


def mul_realizer(phi1: RealName, phi2: RealName) -> RealName:
    """Product name.

    ``|phi_i(1)| + 1`` bounds ``|x_i|``.  With ``delta`` capped at 1 the
    approximation error of ``phi1(delta) * phi2(delta)`` is at most
    ``(|phi1(1)| + |phi2(1)| + 3) * delta``.
    """

    def product(eps: Fraction) -> Fraction:
        bound = abs(phi1(ONE)) + abs(phi2(ONE)) + 3
        delta = min(ONE, eps / bound)
        return phi1(delta) * phi2(delta)

    return product


def lim_eff_realizer(seq: EffCauchyName) -> RealName:
    """Limit of an efficiently Cauchy sequence (``|x_n - x_m| <= 2**-n + 2**-m``).

    Slice ``n`` is read at accuracy ``eps/2`` where ``2**-n <= eps/2``, so the
    slice error and the tail ``|x_n - lim|`` split ``eps`` evenly.  Off that
    domain the output means nothing.
    """

    def limit(eps: Fraction) -> Fraction:
        half = eps / 2
        return seq(least_exp(half), half)

    return limit


def names(phi: RealName, x: Fraction, max_exp: int = 20) -> bool:
    """Check ``|x - phi(2**-i)| <= 2**-i`` for ``i = 0..max_exp``."""
    for i in range(max_exp + 1):
        eps = Fraction(1, 1 << i)
        if abs(x - phi(eps)) > eps:
            return False
    return True


# -- builtin efficiently Cauchy sequences ---------------------------------------
#
# geom2: x_n = sum_{k<=n} 2**-k = 2 - 2**-n, so |x_n - 2| = 2**-n exactly.
# e1:    x_n = sum_{k<=n+2} 1/k!.  The tail from N = n+3 on is at most 2/N!,
#        and 2/(n+3)! <= 2**-n for all n >= 0, hence |x_n - e| <= 2**-n and the
#        efficient Cauchy bound follows from the triangle inequality.


def geom2_partial(n: int) -> Fraction:
    return 2 - Fraction(1, 1 << n)


@lru_cache(maxsize=None)
def e1_partial(n: int) -> Fraction:
    if n < 0:
        raise ValueError("index must be non-negative")
    if n == 0:
        return sum((Fraction(1, factorial(k)) for k in range(3)), Fraction(0))
    return e1_partial(n - 1) + Fraction(1, factorial(n + 2))


def _exact_sequence(partial: Callable[[int], Fraction]) -> EffCauchyName:
    return lambda n, eps: partial(n)


BUILTIN_SEQUENCES: dict[str, EffCauchyName] = {
    "geom2": _exact_sequence(geom2_partial),
    "e1": _exact_sequence(e1_partial),
}
