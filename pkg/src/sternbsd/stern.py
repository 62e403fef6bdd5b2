"""Stern's diatomic sequence.

s(0) = 0, s(1) = 1, s(2n) = s(n), s(2n+1) = s(n) + s(n+1), beginning
0, 1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, ...

Counts throughout this package are plain Python integers, so arithmetic
is exact at any size; there is no fixed-width storage that could
silently wrap.
"""

from __future__ import annotations

__all__ = ["stern", "stern_pair"]


def stern_pair(n: int) -> tuple[int, int]:
    """Return ``(s(n), s(n+1))`` in O(log n) arithmetic steps.

    Scans the binary digits of ``n`` from the most significant end,
    maintaining the pair of consecutive values: a 0 digit sends
    (s(m), s(m+1)) to (s(2m), s(2m+1)) = (a, a+b) and a 1 digit sends
    it to (s(2m+1), s(2m+2)) = (a+b, b).
    """
    if n < 0:
        raise ValueError(f"Stern sequence index must be >= 0, got {n}")
    a, b = 0, 1  # (s(0), s(1))
    if n:
        for bit in bin(n)[2:]:
            if bit == "0":
                b = a + b
            else:
                a = a + b
    return a, b


def stern(n: int) -> int:
    """Return the n-th Stern value s(n) for n >= 0."""
    return stern_pair(n)[0]
