"""Testing workflows on top of the engine: failure meta-reports, feature
navigation, and export of implication bases as pairwise-model constraints."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .closure import FormalConcept
from .context import FormalContext
from .errors import NamingError
from .implications import ImplicationSet
from .lattice import build_lattice, concept_for, neighbors, top_part


@dataclass(frozen=True)
class FailureCluster:
    shared_attrs: tuple[str, ...]
    tests: tuple[str, ...]


@dataclass(frozen=True)
class FailureReport:
    failure_attribute: str
    failed_context: FormalContext
    clusters: tuple[FailureCluster, ...]

    def to_json(self) -> dict:
        return {
            "failureAttr": self.failure_attribute,
            "clusters": [
                {"attrs": list(c.shared_attrs), "tests": list(c.tests)} for c in self.clusters
            ],
        }

    def render(self) -> str:
        lines = [f"failed tests grouped by shared attributes ({self.failure_attribute}):"]
        if not self.clusters:
            lines.append("  (no failed tests)")
        for c in self.clusters:
            attrs = ", ".join(c.shared_attrs) if c.shared_attrs else "(none)"
            lines.append(f"  {{{attrs}}}: {', '.join(c.tests)}")
        return "\n".join(lines) + "\n"


def failure_report(ctx: FormalContext, failure_attr: str, depth: int = 1) -> FailureReport:
    """Cluster the objects carrying `failure_attr` by their other shared attributes.

    Clusters are the intents of the top `depth` levels of the failed
    subcontext's lattice (failure column removed), most general first.
    """
    marker = ctx.attr_set([failure_attr])
    failed = ctx.derive_attrs(marker)
    sub = ctx.restrict_objects(failed).drop_attribute(failure_attr)
    if sub.object_count == 0:
        return FailureReport(failure_attr, sub, ())
    part = top_part(sub, depth)
    ranked = sorted(
        part.concepts,
        key=lambda c: (-len(c.extent), [i in c.intent for i in range(c.intent.width)]),
    )
    clusters = tuple(
        FailureCluster(sub.attribute_names(c.intent), sub.object_names(c.extent))
        for c in ranked
    )
    return FailureReport(failure_attr, sub, clusters)


@dataclass(frozen=True)
class FeatureNeighborhood:
    """A tag set's own concept plus its more general / more specific neighbors."""

    concept: FormalConcept
    upper: tuple[FormalConcept, ...]
    lower: tuple[FormalConcept, ...]
    object_names: tuple[str, ...]
    attribute_names: tuple[str, ...]

    def _concept_json(self, c: FormalConcept) -> dict:
        return {
            "features": [self.object_names[g] for g in c.extent],
            "tags": [self.attribute_names[m] for m in c.intent],
        }

    def to_json(self) -> dict:
        return {
            "concept": self._concept_json(self.concept),
            "upper": [self._concept_json(c) for c in self.upper],
            "lower": [self._concept_json(c) for c in self.lower],
        }

    def render(self) -> str:
        def line(c: FormalConcept) -> str:
            feats = ", ".join(self.object_names[g] for g in c.extent) or "(none)"
            tags = ", ".join(self.attribute_names[m] for m in c.intent) or "(none)"
            return f"[{tags}] features: {feats}"

        lines = ["match: " + line(self.concept)]
        lines += ["more general: " + line(c) for c in self.upper]
        lines += ["more specific: " + line(c) for c in self.lower]
        return "\n".join(lines) + "\n"


def feature_neighbors(ctx: FormalContext, tags: Sequence[str]) -> FeatureNeighborhood:
    """The feature group matching `tags` exactly, plus its closest neighbors."""
    tag_set = ctx.attr_set(tags)
    lat = build_lattice(ctx)
    node = concept_for(ctx, tag_set)
    upper, lower = neighbors(lat, node)
    return FeatureNeighborhood(node, tuple(upper), tuple(lower), ctx.objects, ctx.attributes)


@dataclass(frozen=True)
class PictModel:
    """Constraint lines for a pairwise-generation model."""

    lines: tuple[str, ...]

    def render(self) -> str:
        return "\n".join(self.lines) + ("\n" if self.lines else "")


def _pict_term(name: str) -> tuple[str, str]:
    if name.startswith("not_"):
        name, bit = name[4:], "0"
    else:
        bit = "1"
    if "]" in name:
        raise NamingError(f"attribute {name!r} cannot appear in a PICT constraint")
    return name, bit


def _pict_side(indices, attribute_names) -> str:
    terms = sorted(_pict_term(attribute_names[i]) for i in indices)
    return " AND ".join(f"[{name}] = {bit}" for name, bit in terms)


def export_pict(base: ImplicationSet, attribute_names: Sequence[str]) -> PictModel:
    """Render a base as PICT IF/THEN constraints; `not_x` becomes `[x] = 0`.

    Terms are name-sorted within each side; lines keep the base's order.
    Empty premises have no PICT constraint form and are rejected.
    """
    lines = []
    for imp in base:
        if not imp.premise:
            raise ValueError("implication with an empty premise has no PICT constraint form")
        lines.append(f"IF {_pict_side(imp.premise, attribute_names)} "
                     f"THEN {_pict_side(imp.conclusion, attribute_names)};")
    return PictModel(tuple(lines))


def report_to_json_text(report: FailureReport) -> str:
    return json.dumps(report.to_json(), indent=2) + "\n"
