"""Attribute implications, their closure, and the canonical base."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .bitsets import AttributeSet
from .closure import next_closure
from .context import FormalContext
from .errors import DimensionError, ParseError, UnknownAttributeError


@dataclass(frozen=True)
class Implication:
    """premise -> conclusion over one attribute universe.

    Stored normalized: the conclusion never repeats premise attributes.
    """

    premise: AttributeSet
    conclusion: AttributeSet

    def __post_init__(self):
        if self.premise.width != self.conclusion.width:
            raise DimensionError(
                f"premise width {self.premise.width} vs conclusion width {self.conclusion.width}"
            )
        object.__setattr__(self, "conclusion", self.conclusion - self.premise)

    @property
    def width(self) -> int:
        return self.premise.width

    def violated_by(self, attrs: AttributeSet) -> bool:
        """True iff a row with these attributes breaks the implication."""
        return self.premise <= attrs and not self.conclusion <= attrs

    def render(self, attribute_names: Sequence[str], arrow: str = "→") -> str:
        left = ", ".join(attribute_names[i] for i in self.premise)
        right = ", ".join(attribute_names[i] for i in self.conclusion)
        return f"{left} {arrow} {right}".strip()


class ImplicationSet:
    """Ordered list of implications over one attribute universe."""

    __slots__ = ("width", "implications")

    def __init__(self, width: int, implications: Iterable[Implication] = ()):
        implications = tuple(implications)
        seen = set()
        for imp in implications:
            if imp.width != width:
                raise DimensionError(f"implication width {imp.width} in a width-{width} set")
            key = (imp.premise.bits, imp.conclusion.bits)
            if key in seen:
                raise ValueError("duplicate implication")
            seen.add(key)
        object.__setattr__(self, "width", width)
        object.__setattr__(self, "implications", implications)

    def __setattr__(self, name, value):
        raise AttributeError("ImplicationSet is immutable")

    def __iter__(self) -> Iterator[Implication]:
        return iter(self.implications)

    def __len__(self) -> int:
        return len(self.implications)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ImplicationSet)
            and self.width == other.width
            and self.implications == other.implications
        )

    def __hash__(self):
        return hash((self.width, self.implications))

    def with_added(self, imp: Implication) -> "ImplicationSet":
        return ImplicationSet(self.width, self.implications + (imp,))

    def as_set(self) -> frozenset[tuple[int, int]]:
        """Normalized (premise, conclusion) pairs for order-insensitive comparison."""
        return frozenset((i.premise.bits, i.conclusion.bits) for i in self.implications)

    def closure(self, attrs: AttributeSet) -> AttributeSet:
        return lin_closure(self, attrs)


def holds(ctx: FormalContext, imp: Implication) -> bool:
    """True iff every object with the premise also has the conclusion."""
    if imp.width != ctx.attribute_count:
        raise DimensionError(
            f"implication width {imp.width} vs context with {ctx.attribute_count} attributes"
        )
    return imp.conclusion <= ctx.close_attrs(imp.premise)


def violating_objects(ctx: FormalContext, imp: Implication) -> tuple[str, ...]:
    """Names of the objects that break the implication."""
    if imp.width != ctx.attribute_count:
        raise DimensionError("implication width does not match context")
    return tuple(
        name
        for name, bits in zip(ctx.objects, ctx.rows)
        if imp.violated_by(AttributeSet(bits, imp.width))
    )


def lin_closure(impls: ImplicationSet, attrs: AttributeSet) -> AttributeSet:
    """Smallest superset of `attrs` closed under every implication.

    Plain fire-to-fixpoint; fine at desk scale and obviously correct.
    """
    if attrs.width != impls.width:
        raise DimensionError(f"set width {attrs.width} vs implications over width {impls.width}")
    bits = attrs.bits
    changed = True
    while changed:
        changed = False
        for imp in impls:
            if imp.premise.bits & ~bits == 0 and imp.conclusion.bits & ~bits:
                bits |= imp.conclusion.bits
                changed = True
    return AttributeSet(bits, attrs.width)


def follows(impls: ImplicationSet, imp: Implication) -> bool:
    """Armstrong derivability: the conclusion is forced once the premise is closed."""
    return imp.conclusion <= lin_closure(impls, imp.premise)


def canonical_base(ctx: FormalContext) -> ImplicationSet:
    """The minimum sound-and-complete implication set of the context.

    Premises are the pseudo-closed attribute sets, found by running Next
    Closure under the closure of the base built so far; for each one that
    is not already an intent, premise -> premise'' is emitted.
    """
    width = ctx.attribute_count
    base = ImplicationSet(width)
    current = AttributeSet.empty(width)
    full = AttributeSet.full(width)
    while current != full:
        closed = ctx.close_attrs(current)
        if closed != current:
            base = base.with_added(Implication(current, closed))
        nxt = next_closure(current, base.closure)
        if nxt is None:
            break
        current = nxt
    return base


# -- text and JSON forms ---------------------------------------------------------


def render_implications(
    impls: ImplicationSet, attribute_names: Sequence[str], dichotomized: bool = False
) -> str:
    """One `a, b -> c, d` line per implication; `not_x` prints as `!x` when dichotomized."""

    def token(i: int) -> str:
        name = attribute_names[i]
        if dichotomized and name.startswith("not_"):
            return "!" + name[4:]
        return name

    lines = ["#dichotomized"] if dichotomized else []
    for imp in impls:
        left = ", ".join(token(i) for i in imp.premise)
        right = ", ".join(token(i) for i in imp.conclusion)
        lines.append(f"{left} -> {right}".strip())
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ImplicationsFile:
    """Parsed implication lines before binding to a concrete universe."""

    dichotomized: bool
    rules: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...]


def parse_implications_file(text: str) -> ImplicationsFile:
    dichotomized = False
    rules = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line == "#dichotomized":
                dichotomized = True
            continue
        arrow = "->" if "->" in line else "→" if "→" in line else None
        if arrow is None:
            raise ParseError(f"no '->' in implication {line!r}", line=lineno)
        left, _, right = line.partition(arrow)

        def side(chunk: str) -> tuple[str, ...]:
            toks = []
            for tok in chunk.split(","):
                tok = tok.strip()
                if not tok:
                    continue
                toks.append("not_" + tok[1:] if tok.startswith("!") else tok)
            return tuple(toks)

        rules.append((side(left), side(right)))
    return ImplicationsFile(dichotomized, tuple(rules))


def bind_implications(parsed: ImplicationsFile, attribute_names: Sequence[str]) -> ImplicationSet:
    """Resolve parsed rules against a concrete attribute universe."""
    index = {name: i for i, name in enumerate(attribute_names)}
    width = len(attribute_names)
    out = []
    for left, right in parsed.rules:
        try:
            premise = AttributeSet.of((index[t] for t in left), width)
            conclusion = AttributeSet.of((index[t] for t in right), width)
        except KeyError as exc:
            raise UnknownAttributeError(f"unknown attribute {exc.args[0]!r}") from None
        out.append(Implication(premise, conclusion))
    return ImplicationSet(width, out)


def implications_to_json(impls: ImplicationSet) -> list[dict]:
    return [
        {"premise": list(i.premise), "conclusion": list(i.conclusion)} for i in impls
    ]


def implications_from_json(data, width: int) -> ImplicationSet:
    try:
        return ImplicationSet(
            width,
            [
                Implication(
                    AttributeSet.of((int(i) for i in entry["premise"]), width),
                    AttributeSet.of((int(i) for i in entry["conclusion"]), width),
                )
                for entry in data
            ],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed implications JSON: {exc}") from exc
