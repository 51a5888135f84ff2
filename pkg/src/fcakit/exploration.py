"""Attribute exploration as a resumable, expert-agnostic state machine.

The session walks candidate premises in lectic order; whenever the premise
is not yet an intent of the working context it asks the expert to either
accept the induced implication or supply a counterexample object. The run
ends with the canonical base of the explored domain plus a working context
that has the same base.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence, Union

from .bitsets import AttributeSet
from .closure import next_closure
from .context import FormalContext
from .errors import (
    DimensionError,
    FcaError,
    InvalidCounterexample,
    SessionError,
    SessionFormatError,
)
from .implications import Implication, ImplicationSet, holds
from .io import context_from_json, context_to_json

AWAITING = "awaiting_expert"
ADVANCING = "advancing"  # transient only; sessions at rest are awaiting or done
DONE = "done"

SAVE_VERSION = 1


@dataclass(frozen=True)
class Accept:
    """The expert confirms the pending implication."""


@dataclass(frozen=True)
class Counterexample:
    """A new object whose attributes break the pending implication."""

    name: str
    attrs: AttributeSet


ExpertAnswer = Union[Accept, Counterexample]


@dataclass(frozen=True)
class ExplorationSession:
    working_context: FormalContext
    accepted: ImplicationSet
    cursor: AttributeSet
    phase: str
    question: Implication | None
    transcript: tuple[tuple[Implication, ExpertAnswer], ...] = ()

    @property
    def attributes(self) -> tuple[str, ...]:
        return self.working_context.attributes

    @property
    def done(self) -> bool:
        return self.phase == DONE

    def question_text(self) -> str | None:
        if self.question is None:
            return None
        return self.question.render(self.attributes)

    def results(self) -> tuple[ImplicationSet, FormalContext]:
        if not self.done:
            raise SessionError("session is not finished")
        return self.accepted, self.working_context


def _advance(working: FormalContext, accepted: ImplicationSet, cursor: AttributeSet,
             transcript) -> ExplorationSession:
    """Walk the cursor forward until a question is pending or the universe is exhausted."""
    full = AttributeSet.full(working.attribute_count)
    while cursor != full:
        closed = working.close_attrs(cursor)
        if closed != cursor:
            return ExplorationSession(
                working, accepted, cursor, AWAITING, Implication(cursor, closed), transcript
            )
        nxt = next_closure(cursor, accepted.closure)
        if nxt is None:
            break
        cursor = nxt
    return ExplorationSession(working, accepted, full, DONE, None, transcript)


def new_session(
    initial: FormalContext | None = None,
    attributes: Sequence[str] | None = None,
) -> ExplorationSession:
    """Start exploring; `initial` seeds the working context (may be omitted or empty)."""
    if initial is None:
        if attributes is None:
            raise FcaError("either an initial context or an attribute list is required")
        initial = FormalContext((), attributes, ())
    elif attributes is not None and tuple(initial.attributes) != tuple(
        str(a).strip() for a in attributes
    ):
        raise FcaError(
            f"initial context attributes {list(initial.attributes)} "
            f"do not match requested {list(attributes)}"
        )
    width = initial.attribute_count
    return _advance(initial, ImplicationSet(width), AttributeSet.empty(width), ())


def current_question(session: ExplorationSession) -> Implication | None:
    return session.question


def answer(session: ExplorationSession, reply: ExpertAnswer) -> ExplorationSession:
    """Apply one expert answer and advance to the next question (or done)."""
    if session.done or session.question is None:
        raise SessionError("session is finished; no question to answer")
    question = session.question
    transcript = session.transcript + ((question, reply),)

    if isinstance(reply, Accept):
        accepted = session.accepted.with_added(question)
        cursor = next_closure(session.cursor, accepted.closure)
        if cursor is None:
            full = AttributeSet.full(session.working_context.attribute_count)
            return ExplorationSession(session.working_context, accepted, full, DONE, None, transcript)
        return _advance(session.working_context, accepted, cursor, transcript)

    if not isinstance(reply, Counterexample):
        raise TypeError(f"expected Accept or Counterexample, got {type(reply).__name__}")
    attrs = reply.attrs
    if attrs.width != session.working_context.attribute_count:
        raise DimensionError(
            f"counterexample width {attrs.width} vs {session.working_context.attribute_count} attributes"
        )
    if reply.name.strip() in session.working_context.objects:
        raise InvalidCounterexample(
            "duplicate_name", f"object {reply.name!r} is already in the working context"
        )
    if not question.violated_by(attrs):
        raise InvalidCounterexample(
            "does_not_violate",
            "counterexample must have the whole premise and miss part of the conclusion",
        )
    for imp in session.accepted:
        if imp.violated_by(attrs):
            raise InvalidCounterexample(
                "violates_accepted",
                f"counterexample contradicts accepted implication "
                f"{imp.render(session.attributes)}",
            )
    working = session.working_context.with_object(reply.name, attrs)
    closed = working.close_attrs(session.cursor)
    if closed != session.cursor:
        # same premise, freshly shrunk conclusion
        return ExplorationSession(
            working, session.accepted, session.cursor, AWAITING,
            Implication(session.cursor, closed), transcript,
        )
    cursor = next_closure(session.cursor, session.accepted.closure)
    if cursor is None:
        full = AttributeSet.full(working.attribute_count)
        return ExplorationSession(working, session.accepted, full, DONE, None, transcript)
    return _advance(working, session.accepted, cursor, transcript)


def run_with_oracle(
    session: ExplorationSession, hidden: FormalContext
) -> tuple[ImplicationSet, FormalContext]:
    """Drive the session to completion, answering from a hidden context.

    Questions holding in `hidden` are accepted; otherwise the violating
    hidden object with the smallest index is supplied.
    """
    if hidden.attributes != session.attributes:
        raise FcaError("hidden context attributes do not match the session")
    for name, bits in zip(session.working_context.objects, session.working_context.rows):
        if name not in hidden.objects:
            raise FcaError(f"working object {name!r} does not exist in the hidden context")
        if hidden.rows[hidden.object_index(name)] != bits:
            raise FcaError(f"working object {name!r} contradicts the hidden context")
    while not session.done:
        question = session.question
        assert question is not None
        if holds(hidden, question):
            session = answer(session, Accept())
        else:
            g = next(
                i for i, bits in enumerate(hidden.rows)
                if question.violated_by(AttributeSet(bits, hidden.attribute_count))
            )
            session = answer(session, Counterexample(hidden.objects[g], hidden.row(g)))
    return session.results()


# -- persistence ---------------------------------------------------------------


def _answer_to_json(reply: ExpertAnswer) -> dict:
    if isinstance(reply, Accept):
        return {"accept": True}
    return {"counterexample": {"name": reply.name, "attrs": list(reply.attrs)}}


def _implication_json(imp: Implication) -> dict:
    return {"premise": list(imp.premise), "conclusion": list(imp.conclusion)}


def save_session(session: ExplorationSession) -> str:
    doc = {
        "version": SAVE_VERSION,
        "attributes": list(session.attributes),
        "working": context_to_json(session.working_context),
        "accepted": [_implication_json(i) for i in session.accepted],
        "cursor": list(session.cursor),
        "phase": session.phase,
        "transcript": [
            {"question": _implication_json(q), "answer": _answer_to_json(a)}
            for q, a in session.transcript
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def load_session(payload: str | bytes) -> ExplorationSession:
    if isinstance(payload, bytes):
        payload = payload.decode("utf-8")
    try:
        doc = json.loads(payload)
    except json.JSONDecodeError as exc:
        raise SessionFormatError(f"corrupted session payload: {exc.msg}") from exc
    if not isinstance(doc, dict) or doc.get("version") != SAVE_VERSION:
        raise SessionFormatError(
            f"unsupported session version {doc.get('version') if isinstance(doc, dict) else None!r}"
        )
    try:
        working = context_from_json(doc["working"])
        width = working.attribute_count
        if list(working.attributes) != list(doc["attributes"]):
            raise SessionFormatError("attribute list does not match the working context")
        accepted = ImplicationSet(
            width,
            [
                Implication(
                    AttributeSet.of(entry["premise"], width),
                    AttributeSet.of(entry["conclusion"], width),
                )
                for entry in doc["accepted"]
            ],
        )
        cursor = AttributeSet.of(doc["cursor"], width)
        phase = doc["phase"]
        transcript = []
        for entry in doc["transcript"]:
            q = Implication(
                AttributeSet.of(entry["question"]["premise"], width),
                AttributeSet.of(entry["question"]["conclusion"], width),
            )
            ans = entry["answer"]
            if ans.get("accept"):
                reply: ExpertAnswer = Accept()
            else:
                ce = ans["counterexample"]
                reply = Counterexample(ce["name"], AttributeSet.of(ce["attrs"], width))
            transcript.append((q, reply))
    except SessionFormatError:
        raise
    except (KeyError, TypeError, ValueError, FcaError) as exc:
        raise SessionFormatError(f"corrupted session payload: {exc}") from exc
    if phase not in (AWAITING, DONE):
        raise SessionFormatError(f"bad phase {phase!r}")
    question = None
    if phase == AWAITING:
        closed = working.close_attrs(cursor)
        if closed == cursor:
            raise SessionFormatError("awaiting session whose cursor is already closed")
        question = Implication(cursor, closed)
    return ExplorationSession(working, accepted, cursor, phase, question, tuple(transcript))
