"""Implications: validity, the canonical base, and closure under a base.

Runs on the numbers context (even/prime/divided_by_three/odd/factorial
over 1, 2, 3, 5, 6, 8, 9, 12).
"""
import os

from fcakit import Implication, canonical_base, follows, holds, lin_closure, violating_objects
from fcakit.io import load_context

HERE = os.path.dirname(__file__)
num = load_context(os.path.join(HERE, "..", "fixtures", "numbers.cxt"))


def imp(premise, conclusion):
    return Implication(num.attr_set(premise), num.attr_set(conclusion))


print("factorial, odd → prime holds:", holds(num, imp(["factorial", "odd"], ["prime"])))
bad = imp(["odd"], ["prime"])
print("odd → prime holds:", holds(num, bad), "— broken by", violating_objects(num, bad))

base = canonical_base(num)
print(f"\ncanonical base ({len(base)} implications):")
for implication in base:
    print("  ", implication.render(num.attributes))

# The base decides any implication question by closure.
start = num.attr_set(["even", "prime"])
closed = lin_closure(base, start)
print("\nclosure of {even, prime}:", num.attribute_names(closed))
print("even, prime → factorial follows:", follows(base, imp(["even", "prime"], ["factorial"])))
print("even → factorial follows:", follows(base, imp(["even"], ["factorial"])))
