import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))  # makes `oracle` importable

from fcakit import FormalContext
from fcakit.io import load_context

from oracle import RefContext

FIXTURES = os.path.join(os.path.dirname(__file__), os.pardir, "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, name)


@pytest.fixture(scope="session")
def fig() -> FormalContext:
    return load_context(fixture_path("figures.cxt"))


@pytest.fixture(scope="session")
def num() -> FormalContext:
    return load_context(fixture_path("numbers.cxt"))


@pytest.fixture(scope="session")
def tst() -> FormalContext:
    return load_context(fixture_path("testrun.cxt"))


@pytest.fixture(scope="session")
def fea() -> FormalContext:
    return load_context(fixture_path("features.cxt"))


@pytest.fixture(scope="session")
def geo() -> FormalContext:
    return load_context(fixture_path("geo.cxt"))


def to_ref(ctx: FormalContext) -> RefContext:
    """Re-express a package context in the oracle's name-set representation."""
    return RefContext(
        ctx.objects,
        ctx.attributes,
        {g: set(ctx.attribute_names(ctx.row(i))) for i, g in enumerate(ctx.objects)},
    )


def from_ref(ref: RefContext) -> FormalContext:
    return FormalContext.from_rows(
        ref.objects, ref.attributes, [ref.rows[g] for g in ref.objects]
    )


def names(ctx: FormalContext, attr_set) -> frozenset:
    return frozenset(ctx.attribute_names(attr_set))


def obj_names(ctx: FormalContext, object_set) -> frozenset:
    return frozenset(ctx.object_names(object_set))
