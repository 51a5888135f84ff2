/**
 * Exploration wizard state machine.
 *
 * The wizard owns one session: it shows the pending implication, lets the
 * expert accept it or draft a counterexample, and keeps the revision
 * counter in lockstep with the service. The counterexample form stays
 * disabled until the draft actually violates the pending question — the
 * same rule the server enforces — so a submit can only fail on races or
 * consistency with already-accepted implications.
 */
import type {
  AnswerRejection,
  QuestionJson,
  ServiceClient,
  SessionStateJson,
} from "./api.js";

export interface CounterexampleDraft {
  name: string;
  /** attribute name -> checked */
  checked: Record<string, boolean>;
}

export interface HistoryEntry {
  question: QuestionJson;
  answer: "accepted" | { name: string; attrs: string[] };
}

export interface WizardState {
  sessionId: string;
  revision: number;
  attributes: string[];
  phase: "awaiting_expert" | "done";
  pendingQuestion: QuestionJson | null;
  draft: CounterexampleDraft;
  history: HistoryEntry[];
  /** implications accepted so far (rendered premise/conclusion names) */
  accepted: { premise: string[]; conclusion: string[] }[];
  /** inline error from the last rejected submit, if any */
  error: string | null;
  /** true while an answer post is outstanding; blocks duplicate posts */
  inFlight: boolean;
}

export interface QuestionView {
  premiseText: string;
  conclusionText: string;
  questionText: string;
  acceptEnabled: boolean;
  /** one checkbox row per attribute of the universe */
  attributes: { name: string; checked: boolean }[];
  draftName: string;
  /** mirrors the server rule; the submit button is enabled only when true */
  submitEnabled: boolean;
  error: string | null;
  done: boolean;
  /** final base, rendered, when done */
  baseLines: string[];
}

function emptyDraft(attributes: string[]): CounterexampleDraft {
  const checked: Record<string, boolean> = {};
  for (const name of attributes) checked[name] = false;
  return { name: "", checked };
}

function renderImplications(
  state: SessionStateJson,
): { premise: string[]; conclusion: string[] }[] {
  return state.accepted.map((imp) => ({
    premise: imp.premise.map((i) => state.attributes[i]!),
    conclusion: imp.conclusion.map((i) => state.attributes[i]!),
  }));
}

/** Build wizard state from a service session payload. */
export function wizardStateFromServer(
  state: SessionStateJson,
  previous?: WizardState,
): WizardState {
  return {
    sessionId: state.id,
    revision: state.revision,
    attributes: state.attributes,
    phase: state.phase,
    pendingQuestion: state.question,
    draft: previous ? previous.draft : emptyDraft(state.attributes),
    history: previous ? previous.history : [],
    accepted: renderImplications(state),
    error: previous ? previous.error : null,
    inFlight: false,
  };
}

const fromServer = wizardStateFromServer;

/** Start exploring a fresh attribute universe. */
export async function startSession(
  api: ServiceClient,
  attributes: string[],
): Promise<WizardState> {
  const { status, body } = await api.createSession({ attributes });
  if (status !== 201) throw new Error(`session creation failed with ${status}`);
  return fromServer(body);
}

/** Attach to an existing session (e.g. after a page reload). */
export async function attachSession(
  api: ServiceClient,
  sessionId: string,
): Promise<WizardState> {
  const { status, body } = await api.getSession(sessionId);
  if (status !== 200) throw new Error(`session fetch failed with ${status}`);
  return fromServer(body);
}

export function draftAttributes(draft: CounterexampleDraft): string[] {
  return Object.keys(draft.checked).filter((name) => draft.checked[name]);
}

/**
 * Client-side mirror of the server's violation rule: the draft breaks the
 * pending implication iff it has every premise attribute and misses at
 * least one conclusion attribute.
 */
export function violatesPending(
  question: Pick<QuestionJson, "premise" | "conclusion">,
  attrs: Iterable<string>,
): boolean {
  const have = new Set(attrs);
  return (
    question.premise.every((name) => have.has(name)) &&
    !question.conclusion.every((name) => have.has(name))
  );
}

export function setDraftName(state: WizardState, name: string): WizardState {
  return { ...state, draft: { ...state.draft, name } };
}

export function toggleDraftAttribute(state: WizardState, attribute: string): WizardState {
  const checked = { ...state.draft.checked, [attribute]: !state.draft.checked[attribute] };
  return { ...state, draft: { ...state.draft, checked } };
}

export function renderQuestion(state: WizardState): QuestionView {
  const question = state.pendingQuestion;
  const violates =
    question !== null && violatesPending(question, draftAttributes(state.draft));
  return {
    premiseText: question ? question.premise.join(", ") : "",
    conclusionText: question ? question.conclusion.join(", ") : "",
    questionText: question ? question.text : "",
    acceptEnabled: question !== null && !state.inFlight,
    attributes: state.attributes.map((name) => ({
      name,
      checked: state.draft.checked[name] ?? false,
    })),
    draftName: state.draft.name,
    submitEnabled:
      question !== null && violates && state.draft.name.trim() !== "" && !state.inFlight,
    error: state.error,
    done: state.phase === "done",
    baseLines: state.accepted.map(
      (imp) => `${imp.premise.join(", ")} → ${imp.conclusion.join(", ")}`.trim(),
    ),
  };
}

/** Answer posts currently on the wire, keyed session#revision: at most one
 * post may be outstanding per revision, so a double click or a re-entrant
 * handler cannot race the server. A finished post (any HTTP status) clears
 * its slot — resubmitting a corrected draft after a 422 reuses the same
 * revision deliberately, and the server accepts at most one mutation per
 * revision either way. */
const outstanding = new Set<string>();

async function post(
  api: ServiceClient,
  state: WizardState,
  body: Parameters<ServiceClient["postAnswer"]>[2],
  entry: HistoryEntry,
): Promise<WizardState> {
  if (state.phase === "done" || state.pendingQuestion === null) {
    throw new Error("session is finished");
  }
  const slot = `${state.sessionId}#${state.revision}`;
  if (outstanding.has(slot)) {
    throw new Error("an answer for this revision is already in flight");
  }
  outstanding.add(slot);
  try {
    const { status, body: response } = await api.postAnswer(
      state.sessionId,
      state.revision,
      body,
    );
    if (status === 200) {
      const next = fromServer(response as SessionStateJson);
      return { ...next, history: [...state.history, entry], error: null };
    }
    if (status === 409) {
      // stale revision: refresh and let the expert re-decide; the draft survives
      const fresh = await api.getSession(state.sessionId);
      const next = fromServer(fresh.body, state);
      return { ...next, error: "someone else answered first; question refreshed" };
    }
    if (status === 422) {
      const rejection = response as AnswerRejection;
      return { ...state, inFlight: false, error: rejection.reason };
    }
    throw new Error(`answer failed with ${status}`);
  } finally {
    outstanding.delete(slot);
  }
}

/** Accept the pending implication. */
export async function submitAccept(
  api: ServiceClient,
  state: WizardState,
): Promise<WizardState> {
  const entry: HistoryEntry = { question: state.pendingQuestion!, answer: "accepted" };
  return post(api, state, { accept: true }, entry);
}

/** Submit the counterexample draft. The caller should have checked
 * `renderQuestion(state).submitEnabled`; the server re-validates anyway. */
export async function submitCounterexample(
  api: ServiceClient,
  state: WizardState,
): Promise<WizardState> {
  const attrs = draftAttributes(state.draft);
  const entry: HistoryEntry = {
    question: state.pendingQuestion!,
    answer: { name: state.draft.name, attrs },
  };
  return post(
    api,
    state,
    { counterexample: { name: state.draft.name, attrs } },
    entry,
  );
}
