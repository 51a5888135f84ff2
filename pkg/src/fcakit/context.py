"""Formal contexts: objects, attributes, and an incidence relation.

A context is immutable once built; every "mutation" (adding an object, an
attribute, dichotomizing) returns a new value, so contexts can be shared
freely between threads and lattice builds.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .bitsets import AttributeSet, ObjectSet
from .errors import (
    DimensionError,
    NamingError,
    UnknownAttributeError,
    UnknownObjectError,
)


def _clean_names(names: Iterable[str], kind: str) -> tuple[str, ...]:
    out = []
    seen = set()
    for raw in names:
        name = str(raw).strip()
        if not name:
            raise NamingError(f"empty {kind} name")
        if name in seen:
            raise NamingError(f"duplicate {kind} name {name!r}")
        seen.add(name)
        out.append(name)
    return tuple(out)


class FormalContext:
    """The triple of objects, attributes, and per-object attribute rows."""

    __slots__ = ("objects", "attributes", "rows", "_columns", "_obj_index", "_attr_index")

    def __init__(self, objects: Iterable[str], attributes: Iterable[str], rows: Sequence[int]):
        objects = _clean_names(objects, "object")
        attributes = _clean_names(attributes, "attribute")
        rows = tuple(rows)
        if len(rows) != len(objects):
            raise DimensionError(f"{len(objects)} objects but {len(rows)} incidence rows")
        width = len(attributes)
        for name, bits in zip(objects, rows):
            if bits < 0 or bits >> width:
                raise DimensionError(f"row for object {name!r} wider than {width} attributes")
        columns = []
        for m in range(width):
            col = 0
            for g, bits in enumerate(rows):
                col |= (bits >> m & 1) << g
            columns.append(col)
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "attributes", attributes)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_columns", tuple(columns))
        object.__setattr__(self, "_obj_index", {g: i for i, g in enumerate(objects)})
        object.__setattr__(self, "_attr_index", {m: i for i, m in enumerate(attributes)})

    def __setattr__(self, name, value):
        raise AttributeError("FormalContext is immutable")

    @classmethod
    def from_rows(
        cls,
        objects: Iterable[str],
        attributes: Iterable[str],
        rows: Iterable[Iterable[str]],
    ) -> "FormalContext":
        """Build from rows given as collections of attribute names."""
        attributes = tuple(attributes)
        index = {str(m).strip(): i for i, m in enumerate(attributes)}
        packed = []
        for row in rows:
            bits = 0
            for name in row:
                name = str(name).strip()
                if name not in index:
                    raise UnknownAttributeError(f"unknown attribute {name!r}")
                bits |= 1 << index[name]
            packed.append(bits)
        return cls(objects, attributes, packed)

    # -- shape ---------------------------------------------------------------

    @property
    def object_count(self) -> int:
        return len(self.objects)

    @property
    def attribute_count(self) -> int:
        return len(self.attributes)

    def object_index(self, name: str) -> int:
        try:
            return self._obj_index[name]
        except KeyError:
            raise UnknownObjectError(f"unknown object {name!r}") from None

    def attribute_index(self, name: str) -> int:
        try:
            return self._attr_index[name]
        except KeyError:
            raise UnknownAttributeError(f"unknown attribute {name!r}") from None

    def row(self, g: int) -> AttributeSet:
        return AttributeSet(self.rows[g], self.attribute_count)

    def has(self, obj: str, attr: str) -> bool:
        return bool(self.rows[self.object_index(obj)] >> self.attribute_index(attr) & 1)

    # -- set construction and naming ------------------------------------------

    def attr_set(self, names: Iterable[str] = ()) -> AttributeSet:
        return AttributeSet.of((self.attribute_index(n) for n in names), self.attribute_count)

    def object_set(self, names: Iterable[str] = ()) -> ObjectSet:
        return ObjectSet.of((self.object_index(n) for n in names), self.object_count)

    def all_objects(self) -> ObjectSet:
        return ObjectSet.full(self.object_count)

    def no_attrs(self) -> AttributeSet:
        return AttributeSet.empty(self.attribute_count)

    def attribute_names(self, attrs: AttributeSet) -> tuple[str, ...]:
        self._check_attrs(attrs)
        return tuple(self.attributes[i] for i in attrs)

    def object_names(self, objs: ObjectSet) -> tuple[str, ...]:
        self._check_objects(objs)
        return tuple(self.objects[i] for i in objs)

    def _check_attrs(self, attrs: AttributeSet) -> None:
        if attrs.width != self.attribute_count:
            raise DimensionError(
                f"attribute set width {attrs.width} vs context with {self.attribute_count} attributes"
            )

    def _check_objects(self, objs: ObjectSet) -> None:
        if objs.width != self.object_count:
            raise DimensionError(
                f"object set width {objs.width} vs context with {self.object_count} objects"
            )

    # -- derivation ------------------------------------------------------------

    def derive_attrs(self, attrs: AttributeSet) -> ObjectSet:
        """Objects possessing every attribute of `attrs` (all objects for the empty set)."""
        self._check_attrs(attrs)
        bits = (1 << self.object_count) - 1
        for m in attrs:
            bits &= self._columns[m]
        return ObjectSet(bits, self.object_count)

    def derive_objects(self, objs: ObjectSet) -> AttributeSet:
        """Attributes shared by every object of `objs` (all attributes for the empty set)."""
        self._check_objects(objs)
        bits = (1 << self.attribute_count) - 1
        for g in objs:
            bits &= self.rows[g]
        return AttributeSet(bits, self.attribute_count)

    def close_attrs(self, attrs: AttributeSet) -> AttributeSet:
        """Double derivation: the smallest intent containing `attrs`."""
        return self.derive_objects(self.derive_attrs(attrs))

    # -- construction of variants ------------------------------------------------

    def dichotomize(self) -> "FormalContext":
        """Append a complemented copy not_<m> of every attribute m.

        Every output row has exactly one of m / not_m set, so implications
        over negated attributes become ordinary positive implications.
        """
        negated = tuple("not_" + m for m in self.attributes)
        clash = set(negated) & set(self.attributes)
        if clash:
            raise NamingError(f"dichotomization collides with existing attributes: {sorted(clash)}")
        width = self.attribute_count
        mask = (1 << width) - 1
        rows = [bits | (~bits & mask) << width for bits in self.rows]
        return FormalContext(self.objects, self.attributes + negated, rows)

    def extend_with_attribute(self, name: str) -> "FormalContext":
        """New context with one more attribute, absent for all objects."""
        name = str(name).strip()
        if name in self._attr_index:
            raise NamingError(f"attribute {name!r} already present")
        return FormalContext(self.objects, self.attributes + (name,), self.rows)

    def with_object(self, name: str, attrs: AttributeSet) -> "FormalContext":
        """New context with one more object row."""
        name = str(name).strip()
        if name in self._obj_index:
            raise NamingError(f"object {name!r} already present")
        self._check_attrs(attrs)
        return FormalContext(self.objects + (name,), self.attributes, self.rows + (attrs.bits,))

    def restrict_objects(self, objs: ObjectSet) -> "FormalContext":
        """Subcontext keeping only the given objects, in declaration order."""
        self._check_objects(objs)
        keep = list(objs)
        return FormalContext(
            (self.objects[g] for g in keep), self.attributes, [self.rows[g] for g in keep]
        )

    def drop_attribute(self, name: str) -> "FormalContext":
        """Subcontext without the named attribute column."""
        m = self.attribute_index(name)
        low = (1 << m) - 1
        rows = [bits & low | (bits >> m + 1) << m for bits in self.rows]
        return FormalContext(
            self.objects,
            self.attributes[:m] + self.attributes[m + 1 :],
            rows,
        )

    # -- value semantics ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FormalContext)
            and self.objects == other.objects
            and self.attributes == other.attributes
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.objects, self.attributes, self.rows))

    def __repr__(self) -> str:
        return f"FormalContext({self.object_count} objects, {self.attribute_count} attributes)"
