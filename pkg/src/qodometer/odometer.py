"""The symbolic dyadic odometer and its images on block codes and BCF digits.

Sequences have finite support, so the all-ones point of the odometer (whose
image is all zeros) is not representable; the orbit of 0 never reaches it.
"""

from __future__ import annotations

from .expansions import BcfExpansion, BinaryWord, BlockSequence

__all__ = ["BitSequence", "odometer_D", "odometer_Dtilde", "odometric_substitution_O"]

BitSequence = BinaryWord


def odometer_D(w: BitSequence) -> BitSequence:
    """Add one with carry at position 1: 1^k 0 rest -> 0^k 1 rest."""
    bits = w.bits
    k = 0
    while k < len(bits) and bits[k] == 1:
        k += 1
    return BitSequence((0,) * k + (1,) + bits[k + 1:])


def odometer_Dtilde(s: BlockSequence) -> BlockSequence:
    """(k1, k2, rest) -> (0 repeated k1 times, k2 + 1, rest)."""
    blocks = s.blocks + (0, 0)
    k1, k2 = blocks[0], blocks[1]
    return BlockSequence((0,) * k1 + (k2 + 1,) + blocks[2:])


def odometric_substitution_O(e: BcfExpansion) -> BcfExpansion:
    """(a1, a2, rest) -> (2 repeated a1 - 2 times, a2 + 1, rest).

    On BCF digits this is the action of the Newman first-return map T.
    """
    head = e.head + (2, 2)
    a1, a2 = head[0], head[1]
    return BcfExpansion((2,) * (a1 - 2) + (a2 + 1,) + head[2:])
