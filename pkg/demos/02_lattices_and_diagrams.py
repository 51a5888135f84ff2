"""Concept lattices: covers, navigation, the top part, and DOT export."""
import os

from fcakit import build_lattice, concept_for, export_lattice, neighbors, top_part
from fcakit.io import load_context

HERE = os.path.dirname(__file__)
fig = load_context(os.path.join(HERE, "..", "fixtures", "figures.cxt"))

lat = build_lattice(fig)
print(f"{len(lat)} concepts, {len(lat.covers)} cover edges")
print("top:   ", fig.object_names(lat.top.extent))
print("bottom:", fig.attribute_names(lat.bottom.intent))

# Navigate around the square's concept.
square = concept_for(fig, fig.attr_set(["b", "c", "d"]))
upper, lower = neighbors(lat, square)
print("\nupper covers of the square concept:")
for c in upper:
    print("  ", fig.object_names(c.extent), fig.attribute_names(c.intent))

# Only the most general part of a big lattice is often enough.
part = top_part(fig, 1)
print(f"\ntop part (depth 1): {len(part)} concepts")

# DOT output draws the line diagram with reduced labels.
print("\n" + export_lattice(lat, "dot"))
