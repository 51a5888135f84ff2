"""Fixed-width bit vectors over a declared universe.

An arbitrary-precision int is the storage, so any number of attributes or
objects works; index 0 is the first declared element and, for attribute
sets, the lectically most significant one.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from .errors import DimensionError


class BitSet:
    """Immutable set of indices below a fixed width."""

    __slots__ = ("bits", "width")

    def __init__(self, bits: int, width: int):
        if width < 0:
            raise DimensionError(f"negative width {width}")
        if bits < 0 or bits >> width:
            raise DimensionError(f"bits 0x{bits:x} do not fit in width {width}")
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "width", width)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def empty(cls, width: int) -> "BitSet":
        return cls(0, width)

    @classmethod
    def full(cls, width: int) -> "BitSet":
        return cls((1 << width) - 1, width)

    @classmethod
    def of(cls, indices: Iterable[int], width: int) -> "BitSet":
        bits = 0
        for i in indices:
            if not 0 <= i < width:
                raise DimensionError(f"index {i} out of range for width {width}")
            bits |= 1 << i
        return cls(bits, width)

    def _check(self, other: "BitSet") -> None:
        if not isinstance(other, BitSet):
            raise TypeError(f"expected a BitSet, got {type(other).__name__}")
        if other.width != self.width:
            raise DimensionError(f"width mismatch: {self.width} vs {other.width}")

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.width and bool(self.bits >> index & 1)

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitSet)
            and self.bits == other.bits
            and self.width == other.width
        )

    def __hash__(self) -> int:
        return hash((self.bits, self.width))

    def __and__(self, other: "BitSet") -> "BitSet":
        self._check(other)
        return type(self)(self.bits & other.bits, self.width)

    def __or__(self, other: "BitSet") -> "BitSet":
        self._check(other)
        return type(self)(self.bits | other.bits, self.width)

    def __sub__(self, other: "BitSet") -> "BitSet":
        self._check(other)
        return type(self)(self.bits & ~other.bits, self.width)

    def __le__(self, other: "BitSet") -> bool:
        """Subset test."""
        self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "BitSet") -> bool:
        return self <= other and self.bits != other.bits

    def complement(self) -> "BitSet":
        return type(self)(~self.bits & (1 << self.width) - 1, self.width)

    def with_index(self, index: int) -> "BitSet":
        if not 0 <= index < self.width:
            raise DimensionError(f"index {index} out of range for width {self.width}")
        return type(self)(self.bits | 1 << index, self.width)

    def indices(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self)}, width={self.width})"


class AttributeSet(BitSet):
    """Subset of a context's attributes, in declaration order."""


class ObjectSet(BitSet):
    """Subset of a context's objects, in declaration order."""
