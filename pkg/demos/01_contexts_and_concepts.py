"""Build a formal context, derive, and enumerate its concepts.

The running example is the geometric-figures table: four shapes described
by four attributes. Derivation maps attribute sets to the objects carrying
them and back; a concept is a pair closed in both directions.
"""
import os

from fcakit import enumerate_concepts
from fcakit.io import load_context

HERE = os.path.dirname(__file__)
fig = load_context(os.path.join(HERE, "..", "fixtures", "figures.cxt"))

print("objects:   ", ", ".join(fig.objects))
print("attributes:", ", ".join(fig.attributes))

# Which figures have attribute b (four vertices)?
b = fig.attr_set(["b"])
print("\n{b}' =", fig.object_names(fig.derive_attrs(b)))

# What do figures 3 and 4 have in common?
common = fig.derive_objects(fig.object_set(["3", "4"]))
print("{3,4}' =", fig.attribute_names(common))

# Closing {b} adds everything implied by it.
print("{b}'' =", fig.attribute_names(fig.close_attrs(b)))

# Every concept, streamed in lectic intent order.
print("\nall concepts:")
for concept in enumerate_concepts(fig):
    extent = ", ".join(fig.object_names(concept.extent))
    intent = ", ".join(fig.attribute_names(concept.intent))
    print(f"  ({{{extent}}}, {{{intent}}})")
