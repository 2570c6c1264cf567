"""Bitmask encoding for subsets of the ground set {1, ..., n}.

Bit i-1 of a mask records whether element i is present.  Masks index
directly into dense rank tables, so the other modules work with plain
ints and convert to element tuples only at reporting boundaries.
"""

from __future__ import annotations

from typing import Iterable


def bit(element: int) -> int:
    return 1 << (element - 1)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(elements: Iterable[int], n: int) -> int:
    """Mask for a collection of elements, validating the 1..n range."""
    mask = 0
    for e in elements:
        if not 1 <= e <= n:
            raise ValueError(f"element {e} outside ground set 1..{n}")
        mask |= 1 << (e - 1)
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    """Ascending tuple of the elements present in ``mask``."""
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def complement(mask: int, n: int) -> int:
    return ~mask & full_mask(n)


def contains(mask: int, element: int) -> bool:
    return bool(mask >> (element - 1) & 1)


def iter_masks(n: int) -> range:
    """All subset masks of {1..n} in ascending numeric order."""
    return range(1 << n)
