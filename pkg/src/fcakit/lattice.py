"""Concept lattices: order, covers, navigation, and diagram export."""
from __future__ import annotations

import json

from .bitsets import AttributeSet
from .closure import FormalConcept, enumerate_concepts
from .context import FormalContext
from .errors import NotFoundError, ParseError


class ConceptLattice:
    """All concepts of a context (or an upper part of them) plus cover edges.

    `concepts` is in lectic intent order; `covers` holds (child, parent)
    index pairs of the transitive reduction of extent inclusion, child
    being the more specific concept.
    """

    __slots__ = ("concepts", "covers", "object_names", "attribute_names", "_by_intent")

    def __init__(self, concepts, covers, object_names, attribute_names):
        object.__setattr__(self, "concepts", tuple(concepts))
        object.__setattr__(self, "covers", frozenset(covers))
        object.__setattr__(self, "object_names", tuple(object_names))
        object.__setattr__(self, "attribute_names", tuple(attribute_names))
        object.__setattr__(
            self, "_by_intent", {c.intent: i for i, c in enumerate(self.concepts)}
        )

    def __setattr__(self, name, value):
        raise AttributeError("ConceptLattice is immutable")

    def __len__(self) -> int:
        return len(self.concepts)

    def index_of(self, concept: FormalConcept) -> int:
        try:
            return self._by_intent[concept.intent]
        except KeyError:
            raise NotFoundError(f"concept with intent {list(concept.intent)} not in lattice") from None

    @property
    def top(self) -> FormalConcept:
        return max(self.concepts, key=lambda c: len(c.extent))

    @property
    def bottom(self) -> FormalConcept:
        return min(self.concepts, key=lambda c: len(c.extent))

    def parents(self, index: int) -> list[int]:
        return sorted(j for i, j in self.covers if i == index)

    def children(self, index: int) -> list[int]:
        return sorted(i for i, j in self.covers if j == index)


def _cover_pairs(concepts) -> set[tuple[int, int]]:
    """Transitive reduction of extent inclusion over the given concepts."""
    order = sorted(range(len(concepts)), key=lambda i: len(concepts[i].extent))
    covers: set[tuple[int, int]] = set()
    for i in range(len(concepts)):
        ext = concepts[i].extent
        uppers: list[int] = []
        for j in order:  # ascending extent size keeps minimal uppers first
            if concepts[j].extent.bits != ext.bits and ext <= concepts[j].extent:
                if not any(concepts[k].extent <= concepts[j].extent for k in uppers):
                    uppers.append(j)
        covers.update((i, j) for j in uppers)
    return covers


def build_lattice(ctx: FormalContext) -> ConceptLattice:
    """Every concept of the context with its cover (line-diagram) edges."""
    concepts = list(enumerate_concepts(ctx))
    return ConceptLattice(concepts, _cover_pairs(concepts), ctx.objects, ctx.attributes)


def concept_for(ctx: FormalContext, tags: AttributeSet) -> FormalConcept:
    """Most specific concept whose intent contains all of `tags`."""
    extent = ctx.derive_attrs(tags)
    return FormalConcept(extent, ctx.derive_objects(extent))


def neighbors(lat: ConceptLattice, concept: FormalConcept) -> tuple[list[FormalConcept], list[FormalConcept]]:
    """Cover parents (more general) and cover children (more specific)."""
    i = lat.index_of(concept)
    upper = [lat.concepts[j] for j in lat.parents(i)]
    lower = [lat.concepts[j] for j in lat.children(i)]
    return upper, lower


def top_part(ctx: FormalContext, depth: int) -> ConceptLattice:
    """Sublattice within `depth` cover steps below the top concept."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    full = build_lattice(ctx)
    keep = {full.index_of(full.top)}
    frontier = set(keep)
    for _ in range(depth):
        frontier = {i for i in range(len(full)) if any((i, j) in full.covers for j in frontier)}
        frontier -= keep
        if not frontier:
            break
        keep |= frontier
    kept = sorted(keep)
    remap = {old: new for new, old in enumerate(kept)}
    concepts = [full.concepts[i] for i in kept]
    covers = {(remap[i], remap[j]) for i, j in full.covers if i in keep and j in keep}
    return ConceptLattice(concepts, covers, full.object_names, full.attribute_names)


# -- export ---------------------------------------------------------------------


def reduced_labels(lat: ConceptLattice) -> tuple[dict[int, list[str]], dict[int, list[str]]]:
    """Attribute labels at their maximal concept, object labels at their minimal one."""
    attr_at: dict[int, list[str]] = {}
    obj_at: dict[int, list[str]] = {}
    for m, name in enumerate(lat.attribute_names):
        best = None
        for i, c in enumerate(lat.concepts):
            if m in c.intent and (best is None or len(lat.concepts[best].extent) < len(c.extent)):
                best = i
        if best is not None:
            attr_at.setdefault(best, []).append(name)
    for g, name in enumerate(lat.object_names):
        best = None
        for i, c in enumerate(lat.concepts):
            if g in c.extent and (best is None or len(lat.concepts[best].intent) < len(c.intent)):
                best = i
        if best is not None:
            obj_at.setdefault(best, []).append(name)
    return attr_at, obj_at


def lattice_to_json(lat: ConceptLattice) -> dict:
    return {
        "concepts": [
            {"extent": list(c.extent), "intent": list(c.intent)} for c in lat.concepts
        ],
        "covers": sorted([i, j] for i, j in lat.covers),
    }


def lattice_from_json(data, object_names, attribute_names) -> ConceptLattice:
    """Rebuild a lattice from the JSON wire form plus the declaration orders."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    try:
        concepts = [
            FormalConcept(
                extent=_objset(entry["extent"], len(object_names)),
                intent=_attrset(entry["intent"], len(attribute_names)),
            )
            for entry in data["concepts"]
        ]
        covers = {(int(i), int(j)) for i, j in data["covers"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed lattice JSON: {exc}") from exc
    return ConceptLattice(concepts, covers, object_names, attribute_names)


def _objset(indices, width):
    from .bitsets import ObjectSet

    return ObjectSet.of((int(i) for i in indices), width)


def _attrset(indices, width):
    return AttributeSet.of((int(i) for i in indices), width)


def lattice_to_dot(lat: ConceptLattice) -> str:
    """GraphViz digraph; edges point from child (specific) to parent (general)."""
    attr_at, obj_at = reduced_labels(lat)
    lines = ["digraph lattice {", "  node [shape=box];"]
    for i, c in enumerate(lat.concepts):
        attrs = ", ".join(attr_at.get(i, []))
        objs = ", ".join(obj_at.get(i, []))
        label = f"{attrs}\\n{objs}\\n{len(c.intent)}/{len(c.extent)}"
        lines.append(f'  c{i} [label="{label}"];')
    for i, j in sorted(lat.covers):
        lines.append(f"  c{i} -> c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_lattice(lat: ConceptLattice, fmt: str) -> str:
    if fmt == "dot":
        return lattice_to_dot(lat)
    if fmt == "json":
        return json.dumps(lattice_to_json(lat), indent=2) + "\n"
    raise ValueError(f"unknown lattice format {fmt!r}")
