"""Immutable bit vectors with exact GF(2) arithmetic.

Vectors are fixed-dimension sequences of 0/1 coordinates.  Addition is
coordinatewise XOR.  Equality and ordering are defined on the logical bit
sequence, so the integer packing used internally is not observable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Sequence


@total_ordering
@dataclass(frozen=True)
class GF2Vector:
    """A vector over GF(2) with coordinates numbered left to right.

    The coordinates are packed into ``value`` with the first coordinate as
    the most significant bit; for a fixed dimension this makes numeric order
    coincide with lexicographic order on the bit sequence.
    """

    dim: int
    value: int

    def __post_init__(self) -> None:
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.dim!r}")
        if not isinstance(self.value, int) or not 0 <= self.value < (1 << self.dim):
            raise ValueError(f"packed value {self.value!r} out of range for dimension {self.dim}")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> GF2Vector:
        """Build a vector from an explicit 0/1 coordinate sequence."""
        bits = tuple(bits)
        if not bits:
            raise ValueError("a vector needs at least one coordinate")
        value = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"coordinates must be 0 or 1, got {b!r}")
            value = (value << 1) | b
        return cls(len(bits), value)

    @classmethod
    def from_string(cls, text: str) -> GF2Vector:
        """Parse a vector from a string of '0' and '1' characters."""
        if not text or any(c not in "01" for c in text):
            raise ValueError(f"expected a nonempty string over 0/1, got {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def zero(cls, dim: int) -> GF2Vector:
        return cls(dim, 0)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> (self.dim - 1 - j)) & 1 for j in range(self.dim))

    def __str__(self) -> str:
        return format(self.value, f"0{self.dim}b")

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, GF2Vector):
            return NotImplemented
        # lexicographic on bit sequences; shorter prefixes sort first
        return str(self) < str(other)

    def __add__(self, other: GF2Vector) -> GF2Vector:
        return vec_add(self, other)


def vec_add(u: GF2Vector, v: GF2Vector) -> GF2Vector:
    """Coordinatewise XOR of two vectors of equal dimension."""
    if u.dim != v.dim:
        raise ValueError(f"dimension mismatch: {u.dim} vs {v.dim}")
    return GF2Vector(u.dim, u.value ^ v.value)


def vec_concat(parts: Iterable[GF2Vector]) -> GF2Vector:
    """Concatenate vectors left to right into one of the summed dimension."""
    parts = tuple(parts)
    if not parts:
        raise ValueError("cannot concatenate an empty sequence of vectors")
    dim = 0
    value = 0
    for p in parts:
        dim += p.dim
        value = (value << p.dim) | p.value
    return GF2Vector(dim, value)
