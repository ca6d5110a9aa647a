"""Helpers for point subsets stored as Python ``int`` bitmasks.

Bit ``i`` set means point ``i`` is a member.  All functions are pure.
"""

from __future__ import annotations

from typing import Iterable, Iterator

EMPTY = 0


def bit(i: int) -> int:
    return 1 << i


def full(n: int) -> int:
    """Mask of the whole point set ``{0, ..., n-1}``."""
    return (1 << n) - 1


def from_points(points: Iterable[int]) -> int:
    mask = 0
    for p in points:
        mask |= 1 << p
    return mask


def members(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_points(mask: int) -> tuple[int, ...]:
    return tuple(members(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    """Index of the smallest member; ``mask`` must be non-empty."""
    return (mask & -mask).bit_length() - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def format_mask(mask: int) -> str:
    return "{" + ", ".join(map(str, members(mask))) + "}"
