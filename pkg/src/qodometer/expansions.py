"""Numeration systems on [0,1): continued fractions, backward continued
fractions (BCF), binary words and their block codes.

Every type is stored in a canonical finite form:

* ``CfExpansion``: digits >= 1, last digit >= 2, ``()`` is 0.
* ``BcfExpansion``: head digits >= 2 followed by an implicit tail of 2's;
  the head never ends in 2, ``()`` is 0 = [2, 2, 2, ...].
* ``BinaryWord``: 0.b1...bm followed by zeros; last stored bit is 1.
* ``BlockSequence``: block indices k_i (block b_k is k ones then a zero),
  followed by implicit b_0 blocks; last stored index > 0.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice, repeat, chain
from typing import Iterator, Sequence

from .arith import Dyadic, as_rational

__all__ = [
    "CfExpansion",
    "BcfExpansion",
    "BinaryWord",
    "BlockSequence",
    "cf_expand",
    "cf_eval",
    "bcf_expand",
    "bcf_eval",
    "cf_to_bcf",
    "bcf_to_cf",
    "binary_expand",
    "binary_prefix",
    "blocks_encode",
    "blocks_decode",
    "shift_h",
    "shift_h_inverse",
    "bcf_shift",
    "cf_shift",
    "parse_expansion",
]


def _unit_interval(x, name: str) -> Fraction:
    x = as_rational(x)
    if not 0 <= x < 1:
        raise ValueError(f"{name} needs 0 <= x < 1, got {x}")
    return x


@dataclass(frozen=True)
class CfExpansion:
    digits: tuple = ()

    def __post_init__(self):
        digits = tuple(int(m) for m in self.digits)
        if any(m < 1 for m in digits):
            raise ValueError(f"continued fraction digits must be >= 1: {digits}")
        # [..., m, 1] is the non-canonical twin of [..., m + 1]
        if len(digits) >= 2 and digits[-1] == 1:
            digits = digits[:-2] + (digits[-2] + 1,)
        if digits == (1,):
            raise ValueError("[1]c is the number 1, outside [0,1)")
        object.__setattr__(self, "digits", digits)

    def __str__(self):
        return "[" + ",".join(map(str, self.digits)) + "]c"

    def to_json(self):
        return {"cf": list(self.digits)}


@dataclass(frozen=True)
class BcfExpansion:
    head: tuple = ()

    def __post_init__(self):
        head = tuple(int(a) for a in self.head)
        if any(a < 2 for a in head):
            raise ValueError(f"backward continued fraction digits must be >= 2: {head}")
        end = len(head)
        while end and head[end - 1] == 2:
            end -= 1
        object.__setattr__(self, "head", head[:end])

    @classmethod
    def from_finite(cls, digits: Sequence[int]) -> BcfExpansion:
        """Convert the finite expansion [a1, ..., an] to [a1, ..., an + 1, 2, 2, ...]."""
        digits = list(digits)
        if not digits:
            raise ValueError("a finite backward continued fraction needs at least one digit")
        digits[-1] += 1
        return cls(tuple(digits))

    def digit_stream(self) -> Iterator[int]:
        return chain(self.head, repeat(2))

    def digits(self, n: int) -> list[int]:
        """First ``n`` digits of the infinite expansion."""
        return list(islice(self.digit_stream(), n))

    def __str__(self):
        return "[" + ",".join(map(str, self.head)) + ";2...]"

    def to_json(self):
        return {"bcf_head": list(self.head)}


@dataclass(frozen=True)
class BinaryWord:
    bits: tuple = ()

    def __post_init__(self):
        bits = self.bits
        if isinstance(bits, str):
            bits = tuple(int(b) for b in bits)
        bits = tuple(int(b) for b in bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"bits must be 0 or 1: {bits}")
        end = len(bits)
        while end and bits[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "bits", bits[:end])

    def __len__(self):
        return len(self.bits)

    def bitstring(self) -> str:
        return "".join(map(str, self.bits))

    def to_dyadic(self) -> Dyadic:
        return Dyadic.from_bits(self.bits)

    def __str__(self):
        return "0." + (self.bitstring() or "0")

    def to_json(self):
        return {"bits": self.bitstring()}


@dataclass(frozen=True)
class BlockSequence:
    blocks: tuple = ()

    def __post_init__(self):
        blocks = tuple(int(k) for k in self.blocks)
        if any(k < 0 for k in blocks):
            raise ValueError(f"block indices must be >= 0: {blocks}")
        end = len(blocks)
        while end and blocks[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "blocks", blocks[:end])

    def __str__(self):
        return "(" + " ".join(map(str, self.blocks)) + ")"

    def to_json(self):
        return {"blocks": list(self.blocks)}


# ---------------------------------------------------------------- continued fractions


def cf_expand(x) -> CfExpansion:
    """Classical continued fraction of a rational in [0,1) via the Gauss map."""
    x = _unit_interval(x, "cf_expand")
    p, q = x.numerator, x.denominator
    digits = []
    while p:
        digits.append(q // p)
        p, q = q % p, p
    return CfExpansion(tuple(digits))


def cf_eval(e: CfExpansion) -> Fraction:
    p, q = 0, 1
    for m in reversed(e.digits):
        # 1 / (m + p/q)
        p, q = q, m * q + p
    return Fraction(p, q)


def cf_shift(e: CfExpansion) -> CfExpansion:
    if not e.digits:
        raise ValueError("the empty continued fraction has no first digit")
    return CfExpansion(e.digits[1:])


# ---------------------------------------------------------------- backward continued fractions


def bcf_expand(x) -> BcfExpansion:
    """Backward continued fraction digits a_n = [1/(1 - x_n)] + 1, x_{n+1} = R(x_n).

    The recursion stops once the iterate hits the fixed point 0; the rest of
    the expansion is the implicit tail of 2's.
    """
    x = _unit_interval(x, "bcf_expand")
    p, q = x.numerator, x.denominator
    head = []
    while p:
        d = q - p
        head.append(q // d + 1)
        # R(p/q) = q/d - [q/d]; stays reduced because gcd(q, d) = 1
        p, q = q % d, d
    return BcfExpansion(tuple(head))


def bcf_eval(e: BcfExpansion) -> Fraction:
    p, q = 0, 1
    for a in reversed(e.head):
        # v = 1 - 1/(a - 1 + p/q) = ((a-2)q + p) / ((a-1)q + p)
        p, q = (a - 2) * q + p, (a - 1) * q + p
    return Fraction(p, q)


def bcf_shift(e: BcfExpansion) -> BcfExpansion:
    """Drop the first digit; the all-2 expansion is shift invariant."""
    return BcfExpansion(e.head[1:])


def cf_to_bcf(e: CfExpansion) -> BcfExpansion:
    """Pairs (m_odd, m_even) of the CF become (m_odd - 1) twos then m_even + 2."""
    digits = list(e.digits)
    if len(digits) % 2:
        digits[-1] -= 1
        digits.append(1)
    head = []
    for m_odd, m_even in zip(digits[0::2], digits[1::2]):
        head.extend([2] * (m_odd - 1))
        head.append(m_even + 2)
    return BcfExpansion(tuple(head))


def bcf_to_cf(e: BcfExpansion) -> CfExpansion:
    digits = []
    run = 0
    for a in e.head:
        if a == 2:
            run += 1
        else:
            digits.extend((run + 1, a - 2))
            run = 0
    # canonical heads end in a digit >= 3, so no run is left over
    assert run == 0
    return CfExpansion(tuple(digits))


# ---------------------------------------------------------------- binary words and blocks


def binary_expand(x) -> BinaryWord:
    if not isinstance(x, Dyadic):
        x = Dyadic.from_rational(x)
    if not 0 <= x.to_rational() < 1:
        raise ValueError(f"binary_expand needs 0 <= x < 1, got {x}")
    return BinaryWord(x.bits())


def binary_prefix(x, depth: int) -> tuple[str, bool]:
    """First ``depth`` binary digits of any rational in [0,1).

    Returns the digit string and whether the expansion was cut off.
    """
    x = _unit_interval(x, "binary_prefix")
    p, q = x.numerator, x.denominator
    out = []
    while p and len(out) < depth:
        p *= 2
        out.append("1" if p >= q else "0")
        if p >= q:
            p -= q
    return "".join(out), p != 0


def blocks_encode(w: BinaryWord) -> BlockSequence:
    blocks = []
    k = 0
    for b in w.bits:
        if b:
            k += 1
        else:
            blocks.append(k)
            k = 0
    if k:
        # the implicit zero tail closes the last block
        blocks.append(k)
    return BlockSequence(tuple(blocks))


def blocks_decode(s: BlockSequence) -> BinaryWord:
    bits = []
    for k in s.blocks:
        bits.extend([1] * k)
        bits.append(0)
    return BinaryWord(tuple(bits))


def shift_h(s: BlockSequence) -> BcfExpansion:
    return BcfExpansion(tuple(k + 2 for k in s.blocks))


def shift_h_inverse(e: BcfExpansion) -> BlockSequence:
    return BlockSequence(tuple(a - 2 for a in e.head))


# ---------------------------------------------------------------- text and JSON grammars

_CF_RE = re.compile(r"^\s*\[\s*([\d\s,]*)\]\s*c\s*$")
_BCF_RE = re.compile(r"^\s*\[\s*([\d\s,]*?)\s*(;\s*2\s*\.\.\.)?\s*\]\s*$")
_BLOCKS_RE = re.compile(r"^\s*\(\s*([\d\s]*)\)\s*$")
_BITS_RE = re.compile(r"^\s*0\.([01]*)\s*$")


def _ints(body: str, sep: str | None) -> tuple:
    parts = body.split(sep) if sep else body.split()
    return tuple(int(p) for p in parts if p.strip())


def parse_expansion(text: str):
    """Parse any of the text or JSON grammars into the matching expansion type.

    A BCF without the ``;2...`` marker is read as a finite expansion.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        obj = json.loads(stripped)
        if "cf" in obj:
            return CfExpansion(tuple(obj["cf"]))
        if "bcf_head" in obj:
            return BcfExpansion(tuple(obj["bcf_head"]))
        if "bits" in obj:
            return BinaryWord(obj["bits"])
        if "blocks" in obj:
            return BlockSequence(tuple(obj["blocks"]))
        raise ValueError(f"unknown expansion object {text!r}")
    m = _CF_RE.match(text)
    if m:
        return CfExpansion(_ints(m.group(1), ","))
    m = _BCF_RE.match(text)
    if m:
        digits = _ints(m.group(1), ",")
        if m.group(2):
            return BcfExpansion(digits)
        return BcfExpansion.from_finite(digits)
    m = _BLOCKS_RE.match(text)
    if m:
        return BlockSequence(_ints(m.group(1), None))
    m = _BITS_RE.match(text)
    if m:
        return BinaryWord(m.group(1))
    raise ValueError(f"cannot parse expansion {text!r}")
