import { afterAll, beforeAll, describe, expect, it } from "vitest";

import {
  ServiceClient,
  type AnswerRejection,
  type SessionStateJson,
} from "../src/api.js";
import {
  draftAttributes,
  renderQuestion,
  setDraftName,
  startSession,
  submitAccept,
  submitCounterexample,
  toggleDraftAttribute,
  violatesPending,
  wizardStateFromServer,
} from "../src/wizard.js";
import { startService, type RunningService } from "./service.js";

const NUM_ATTRS = ["even", "prime", "divided_by_three", "odd", "factorial"];

let service: RunningService;
let api: ServiceClient;

beforeAll(async () => {
  service = await startService();
  api = new ServiceClient(service.url);
});

afterAll(() => service.stop());

/** Deterministic PRNG so the 1000-draft run is reproducible. */
function lcg(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state * 1664525 + 1013904223) >>> 0;
    return state / 2 ** 32;
  };
}

describe("exploration wizard against the live service", () => {
  it("shows the first numbers question, takes the counterexample 2, shows the second", async () => {
    let state = await startSession(api, NUM_ATTRS);
    let view = renderQuestion(state);
    expect(view.premiseText).toBe("");
    expect(view.conclusionText).toBe("even, prime, divided_by_three, odd, factorial");
    expect(view.acceptEnabled).toBe(true);
    expect(view.submitEnabled).toBe(false); // empty draft violates nothing

    state = setDraftName(state, "2");
    for (const attr of ["even", "factorial", "prime"]) {
      state = toggleDraftAttribute(state, attr);
    }
    view = renderQuestion(state);
    expect(view.submitEnabled).toBe(true);

    state = await submitCounterexample(api, state);
    view = renderQuestion(state);
    expect(state.revision).toBe(1);
    expect(view.premiseText).toBe("");
    expect(view.conclusionText).toBe("even, prime, factorial");
    expect(state.history).toHaveLength(1);
  });

  it("agrees with the server's violation rule on 1000 random drafts", async () => {
    let state = await startSession(api, NUM_ATTRS);
    const rand = lcg(0xfca);
    let disagreements = 0;
    for (let i = 0; i < 1000; i++) {
      if (state.phase === "done" || state.pendingQuestion === null) {
        state = await startSession(api, NUM_ATTRS);
      }
      const question = state.pendingQuestion!;
      const attrs = NUM_ATTRS.filter(() => rand() < 0.5);
      const clientSaysViolates = violatesPending(question, attrs);

      const { status, body } = await api.postAnswer(state.sessionId, state.revision, {
        counterexample: { name: `draft${i}`, attrs },
      });
      let serverSaysViolates: boolean;
      if (status === 200) {
        serverSaysViolates = true;
        state = wizardStateFromServer(body as SessionStateJson);
      } else if (status === 422) {
        // does_not_violate is the server failing the same gate the client
        // prechecks; violates_accepted means the gate passed
        serverSaysViolates = (body as AnswerRejection).reason !== "does_not_violate";
      } else {
        throw new Error(`unexpected status ${status}`);
      }
      if (clientSaysViolates !== serverSaysViolates) disagreements++;
    }
    expect(disagreements).toBe(0);
  }, 120_000);

  it("runs the whole numbers dialogue to the 5-implication base", async () => {
    let state = await startSession(api, NUM_ATTRS);
    const script: (null | [string, string[]])[] = [
      ["2", ["even", "factorial", "prime"]],
      ["5", ["odd", "prime"]],
      ["6", ["even", "factorial", "divided_by_three"]],
      ["1", ["factorial", "odd", "prime"]],
      ["9", ["divided_by_three", "odd"]],
      null,
      null,
      ["3", ["prime", "divided_by_three", "odd"]],
      null,
      ["8", ["even"]],
      null,
      ["12", ["even", "divided_by_three"]],
      null,
    ];
    for (const step of script) {
      if (step === null) {
        state = await submitAccept(api, state);
      } else {
        const [name, attrs] = step;
        state = setDraftName({ ...state, draft: { name: "", checked: {} } }, name);
        for (const attr of attrs) state = toggleDraftAttribute(state, attr);
        state = await submitCounterexample(api, state);
      }
    }
    expect(state.phase).toBe("done");
    const view = renderQuestion(state);
    expect(view.done).toBe(true);
    expect(view.baseLines).toEqual([
      "odd, factorial → prime",
      "divided_by_three, factorial → even",
      "prime, divided_by_three → odd",
      "even, odd → prime, divided_by_three, factorial",
      "even, prime → factorial",
    ]);
    expect(state.history).toHaveLength(13);
  });

  it("surfaces a 422 reason inline and preserves the draft", async () => {
    let state = await startSession(api, NUM_ATTRS);
    state = setDraftName(state, "bogus");
    state = toggleDraftAttribute(state, "even");
    // bypass the disabled submit button: post a non-violating draft anyway
    const before = state.revision;
    const full = NUM_ATTRS.reduce(
      (draft, attr) => ({ ...draft, [attr]: true }),
      {} as Record<string, boolean>,
    );
    state = { ...state, draft: { name: "bogus", checked: full } };
    state = await submitCounterexample(api, state);
    expect(state.error).toBe("does_not_violate");
    expect(state.revision).toBe(before);
    expect(state.draft.name).toBe("bogus");
    expect(draftAttributes(state.draft)).toEqual(NUM_ATTRS);
  });

  it("recovers from a stale revision by refetching", async () => {
    let state = await startSession(api, NUM_ATTRS);
    // someone else answers behind the wizard's back
    await api.postAnswer(state.sessionId, state.revision, {
      counterexample: { name: "77", attrs: ["even", "factorial", "prime"] },
    });
    state = setDraftName(state, "5");
    for (const attr of ["odd", "prime"]) state = toggleDraftAttribute(state, attr);
    state = await submitCounterexample(api, state);
    expect(state.error).toMatch(/refreshed/);
    expect(state.revision).toBe(1);
    expect(state.draft.name).toBe("5"); // draft survives the refresh
    // resubmitting against the fresh revision now works
    state = await submitCounterexample(api, state);
    expect(state.error).toBeNull();
    expect(state.revision).toBe(2);
  });

  it("never issues two concurrent posts for one revision", async () => {
    const state = await startSession(api, NUM_ATTRS);
    const withDraft = {
      ...state,
      draft: {
        name: "2",
        checked: { even: true, factorial: true, prime: true, odd: false, divided_by_three: false },
      },
    };
    const first = submitCounterexample(api, withDraft);
    await expect(submitAccept(api, withDraft)).rejects.toThrow(/in flight/);
    const settled = await first;
    expect(settled.revision).toBe(1);
  });
});

describe("violation precheck (pure)", () => {
  const question = { premise: ["a"], conclusion: ["b", "c"] };

  it("requires the whole premise", () => {
    expect(violatesPending(question, [])).toBe(false);
    expect(violatesPending(question, ["b"])).toBe(false);
  });

  it("requires part of the conclusion to be missing", () => {
    expect(violatesPending(question, ["a", "b", "c"])).toBe(false);
    expect(violatesPending(question, ["a", "b"])).toBe(true);
    expect(violatesPending(question, ["a"])).toBe(true);
  });

  it("empty premise questions are violated by anything missing conclusion parts", () => {
    const q = { premise: [], conclusion: ["x"] };
    expect(violatesPending(q, [])).toBe(true);
    expect(violatesPending(q, ["x"])).toBe(false);
  });
});
