"""Lectic order and Next Closure, generic over any closure operator.

A closure operator is any callable AttributeSet -> AttributeSet that is
idempotent, extensive, and monotone; context double-derivation and
implication-set closure both qualify, so the same enumeration drives
concept mining and canonical-base construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .bitsets import AttributeSet, ObjectSet
from .context import FormalContext
from .errors import DimensionError

ClosureOperator = Callable[[AttributeSet], AttributeSet]


def lectic_less(a: AttributeSet, b: AttributeSet) -> bool:
    """True iff a is strictly before b: the first index where they differ is in b."""
    if a.width != b.width:
        raise DimensionError(f"width mismatch: {a.width} vs {b.width}")
    diff = a.bits ^ b.bits
    if not diff:
        return False
    return bool(b.bits & (diff & -diff))


def next_closure(current: AttributeSet, operator: ClosureOperator) -> AttributeSet | None:
    """The lectically smallest operator-closed set after `current`, or None past the top."""
    width = current.width
    bits = current.bits
    for m in range(width - 1, -1, -1):
        mask = 1 << m
        if bits & mask:
            bits &= ~mask
        else:
            closed = operator(AttributeSet(bits | mask, width))
            added = closed.bits & ~bits
            if not added & mask - 1:  # nothing new before position m
                return closed
    return None


def closed_sets(operator: ClosureOperator, width: int) -> Iterator[AttributeSet]:
    """All closed sets in lectic order, starting from the closure of the empty set."""
    current = operator(AttributeSet.empty(width))
    while current is not None:
        yield current
        current = next_closure(current, operator)


@dataclass(frozen=True)
class FormalConcept:
    """An extent/intent pair: each side derives to the other."""

    extent: ObjectSet
    intent: AttributeSet

    def __repr__(self) -> str:
        return f"FormalConcept(extent={list(self.extent)}, intent={list(self.intent)})"


def enumerate_concepts(ctx: FormalContext) -> Iterator[FormalConcept]:
    """All concepts of the context, streamed in lectic intent order."""
    for intent in closed_sets(ctx.close_attrs, ctx.attribute_count):
        yield FormalConcept(ctx.derive_attrs(intent), intent)
