"""Cantor pairing on the naturals, used wherever two indices share one counter."""

from __future__ import annotations

from math import isqrt


def pair(n: int, m: int) -> int:
    return (n + m) * (n + m + 1) // 2 + m


def unpair(k: int) -> tuple[int, int]:
    """Inverse of :func:`pair`."""
    if k < 0:
        raise ValueError(f"cannot unpair negative index {k}")
    w = (isqrt(8 * k + 1) - 1) // 2
    m = k - w * (w + 1) // 2
    return w - m, m
