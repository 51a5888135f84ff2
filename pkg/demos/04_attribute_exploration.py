"""Attribute exploration: the numbers dialogue, step by step.

The engine proposes implications; the expert either accepts or supplies a
counterexample object. This script replays the full numbers walkthrough,
then runs the same exploration fully automatically against the final
context as a hidden oracle.
"""
import os

from fcakit import (
    Accept,
    Counterexample,
    answer,
    new_session,
    run_with_oracle,
    save_session,
)
from fcakit.io import load_context

HERE = os.path.dirname(__file__)
num = load_context(os.path.join(HERE, "..", "fixtures", "numbers.cxt"))

SCRIPT = [
    ("2", ["even", "factorial", "prime"]),
    ("5", ["odd", "prime"]),
    ("6", ["even", "factorial", "divided_by_three"]),
    ("1", ["factorial", "odd", "prime"]),
    ("9", ["divided_by_three", "odd"]),
    None,
    None,
    ("3", ["prime", "divided_by_three", "odd"]),
    None,
    ("8", ["even"]),
    None,
    ("12", ["even", "divided_by_three"]),
    None,
]

session = new_session(attributes=num.attributes)
for step, reply in enumerate(SCRIPT, 1):
    print(f"Q{step}: is it true that {session.question_text()} ?")
    if reply is None:
        print("    expert: yes")
        session = answer(session, Accept())
    else:
        name, attrs = reply
        print(f"    expert: no — {name} is a counterexample ({', '.join(attrs)})")
        session = answer(session, Counterexample(name, session.working_context.attr_set(attrs)))

base, final = session.results()
print(f"\naccepted base ({len(base)}):")
for implication in base:
    print("  ", implication.render(final.attributes))
print("final context objects:", ", ".join(final.objects))
print("session payload is", len(save_session(session)), "bytes of JSON")

# The same result, no human in the loop: answer from a hidden context.
auto_base, explored = run_with_oracle(new_session(attributes=num.attributes), num)
print("\noracle run found", len(auto_base), "implications over",
      explored.object_count, "examples")
