"""
Bit-mask helpers shared by the graph algorithms.
"""

from typing import Iterable, Iterator, List


def mask_of(vertices: Iterable[int]) -> int:
    """
    Build a mask from vertex ids.

    Args:
        vertices (Iterable[int]): Vertex ids.

    Returns:
        int: Bit mask with one bit per id.
    """
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """
    Iterate set bit positions in ascending order.

    Args:
        mask (int): Bit mask.

    Yields:
        int: Positions of set bits.
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> List[int]:
    """Ascending list of set bit positions."""
    return list(iter_bits(mask))


def lowest(mask: int) -> int:
    """Position of the lowest set bit; mask must be nonzero."""
    return (mask & -mask).bit_length() - 1


def popcount(mask: int) -> int:
    """Number of set bits."""
    return mask.bit_count()


def full_mask(n: int) -> int:
    """Mask with bits 0..n-1 set."""
    return (1 << n) - 1
