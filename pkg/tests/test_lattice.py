import json
from random import Random

import pytest

from fcakit import (
    FormalContext,
    NotFoundError,
    build_lattice,
    concept_for,
    export_lattice,
    lattice_from_json,
    lattice_to_json,
    neighbors,
    top_part,
)
from fcakit.closure import FormalConcept
from fcakit.lattice import reduced_labels

from conftest import from_ref, names, obj_names, to_ref
from oracle import random_context, transitive_reduction


def concept_names(lat, ctx):
    return [(obj_names(ctx, c.extent), names(ctx, c.intent)) for c in lat.concepts]


class TestBuild:
    def test_fig_shape(self, fig):
        lat = build_lattice(fig)
        assert len(lat) == 9
        assert obj_names(fig, lat.top.extent) == {"1", "2", "3", "4"}
        assert names(fig, lat.top.intent) == set()
        assert obj_names(fig, lat.bottom.extent) == set()
        assert names(fig, lat.bottom.intent) == {"a", "b", "c", "d"}

    def test_one_concept_context(self):
        ctx = FormalContext([], [], [])
        lat = build_lattice(ctx)
        assert len(lat) == 1
        assert not lat.covers

    def test_fig_upper_covers_of_4(self, fig):
        lat = build_lattice(fig)
        square = concept_for(fig, fig.attr_set(["b", "c", "d"]))
        upper, _ = neighbors(lat, square)
        got = {(obj_names(fig, c.extent), names(fig, c.intent)) for c in upper}
        assert got == {
            (frozenset({"3", "4"}), frozenset({"b", "c"})),
            (frozenset({"1", "4"}), frozenset({"d"})),
        }

    def test_covers_match_brute_force_on_fixtures(self, fig, tst, fea):
        for ctx in (fig, tst, fea):
            lat = build_lattice(ctx)
            ref_cs = to_ref(ctx).concepts()
            # same lectic order on both sides makes indices comparable
            assert [frozenset(i) for _, i in ref_cs] == [names(ctx, c.intent) for c in lat.concepts]
            assert lat.covers == transitive_reduction(ref_cs)

    def test_covers_match_brute_force_random(self):
        rng = Random(31)
        for _ in range(60):
            ref = random_context(rng, 7, 7)
            ctx = from_ref(ref)
            lat = build_lattice(ctx)
            assert lat.covers == transitive_reduction(ref.concepts())

    def test_meet_and_join_land_in_lattice(self):
        rng = Random(32)
        for _ in range(25):
            ref = random_context(rng, 6, 6)
            ctx = from_ref(ref)
            lat = build_lattice(ctx)
            intents = {c.intent for c in lat.concepts}
            extents = {c.extent.bits for c in lat.concepts}
            concepts = list(lat.concepts)
            for _ in range(6):
                c1, c2 = rng.choice(concepts), rng.choice(concepts)
                meet_extent = c1.extent & c2.extent
                assert ctx.derive_objects(meet_extent) in intents or meet_extent.bits in extents
                # meet extent closes to a lattice extent
                meet_closed = ctx.derive_attrs(ctx.derive_objects(meet_extent))
                assert meet_closed.bits in extents
                join_intent = c1.intent & c2.intent
                join_closed = ctx.derive_objects(ctx.derive_attrs(join_intent))
                assert join_closed in intents


class TestConceptFor:
    def test_fea_https_login(self, fea):
        c = concept_for(fea, fea.attr_set(["https", "login"]))
        assert obj_names(fea, c.extent) == {"f1", "f3", "f5"}
        assert names(fea, c.intent) == {"https", "login"}

    def test_empty_tags_give_top(self, fig):
        c = concept_for(fig, fig.no_attrs())
        assert obj_names(fig, c.extent) == {"1", "2", "3", "4"}

    def test_fig_b(self, fig):
        c = concept_for(fig, fig.attr_set(["b"]))
        assert obj_names(fig, c.extent) == {"3", "4"}
        assert names(fig, c.intent) == {"b", "c"}

    def test_minimal_intent_containing_tags(self):
        rng = Random(33)
        for _ in range(30):
            ref = random_context(rng, 6, 6)
            ctx = from_ref(ref)
            lat = build_lattice(ctx)
            tags = ctx.attr_set(
                rng.sample(ref.attributes, rng.randint(0, len(ref.attributes)))
            )
            c = concept_for(ctx, tags)
            assert tags <= c.intent
            for other in lat.concepts:
                if tags <= other.intent:
                    assert c.intent <= other.intent


class TestNeighbors:
    def test_fea_neighborhood(self, fea):
        lat = build_lattice(fea)
        c = concept_for(fea, fea.attr_set(["https", "login"]))
        upper, lower = neighbors(lat, c)
        up = {names(fea, x.intent) for x in upper}
        down = {names(fea, x.intent) for x in lower}
        assert up == {frozenset({"https"}), frozenset({"login"})}
        assert down == {
            frozenset({"billing", "https", "login"}),
            frozenset({"https", "login", "static"}),
        }

    def test_top_has_no_upper(self, fig):
        lat = build_lattice(fig)
        upper, _ = neighbors(lat, lat.top)
        assert upper == []

    def test_unknown_concept(self, fig, num):
        lat = build_lattice(fig)
        alien = FormalConcept(num.object_set([]), fig.attr_set(["a", "b", "c"]))
        with pytest.raises(NotFoundError):
            neighbors(lat, alien)


class TestTopPart:
    def test_depth_zero_is_top_only(self, fig):
        part = top_part(fig, 0)
        assert len(part) == 1
        assert obj_names(fig, part.concepts[0].extent) == {"1", "2", "3", "4"}
        assert not part.covers

    def test_large_depth_is_whole_lattice(self, fig):
        full = build_lattice(fig)
        part = top_part(fig, 10)
        assert len(part) == len(full) == 9
        assert {c.intent for c in part.concepts} == {c.intent for c in full.concepts}
        part_pairs = {
            (part.concepts[i].intent, part.concepts[j].intent) for i, j in part.covers
        }
        full_pairs = {
            (full.concepts[i].intent, full.concepts[j].intent) for i, j in full.covers
        }
        assert part_pairs == full_pairs

    def test_tst_failed_subcontext_depth_one(self, tst):
        failed = tst.derive_attrs(tst.attr_set(["failed"]))
        sub = tst.restrict_objects(failed).drop_attribute("failed")
        part = top_part(sub, 1)
        got = {(obj_names(sub, c.extent), names(sub, c.intent)) for c in part.concepts}
        assert got == {
            (frozenset({"1", "3"}), frozenset({"login"})),
            (frozenset({"1"}), frozenset({"https", "login"})),
        }

    def test_negative_depth_rejected(self, fig):
        with pytest.raises(ValueError):
            top_part(fig, -1)


class TestExport:
    def test_fig_dot_counts(self, fig):
        lat = build_lattice(fig)
        dot = export_lattice(lat, "dot")
        assert dot.count("[label=") == 9
        assert dot.count(" -> ") == len(lat.covers) == 13

    def test_single_node_dot(self):
        lat = build_lattice(FormalContext([], [], []))
        dot = export_lattice(lat, "dot")
        assert dot.count("[label=") == 1
        assert " -> " not in dot

    def test_json_round_trip(self, fig):
        lat = build_lattice(fig)
        text = export_lattice(lat, "json")
        again = lattice_from_json(text, fig.objects, fig.attributes)
        assert again.concepts == lat.concepts
        assert again.covers == lat.covers
        assert lattice_to_json(again) == json.loads(text)

    def test_deterministic(self, fea):
        lat1 = export_lattice(build_lattice(fea), "dot")
        lat2 = export_lattice(build_lattice(fea), "dot")
        assert lat1 == lat2

    def test_reduced_labels(self, fig):
        lat = build_lattice(fig)
        attr_at, obj_at = reduced_labels(lat)
        placed_attrs = [a for labels in attr_at.values() for a in labels]
        placed_objs = [g for labels in obj_at.values() for g in labels]
        assert sorted(placed_attrs) == ["a", "b", "c", "d"]
        assert sorted(placed_objs) == ["1", "2", "3", "4"]
        # attribute b is introduced at ({3,4},{b,c})
        idx = next(i for i, c in enumerate(lat.concepts) if names(fig, c.intent) == {"b", "c"})
        assert "b" in attr_at[idx]
