/**
 * Page wiring: exploration wizard, lattice viewer, and failure-report
 * browser, all speaking to the fcakit service.
 */
import { ServiceClient, type ContextJson } from "./api.js";
import { clear, el, errorPanel } from "./dom.js";
import { highlightedNodes, renderLattice, type LatticeView } from "./lattice.js";
import {
  renderQuestion,
  setDraftName,
  startSession,
  submitAccept,
  submitCounterexample,
  toggleDraftAttribute,
  type WizardState,
} from "./wizard.js";

const api = new ServiceClient("");

// ---- exploration wizard -----------------------------------------------------

let wizard: WizardState | null = null;

function drawWizard(): void {
  const root = document.getElementById("wizard")!;
  clear(root);
  if (!wizard) return;
  const view = renderQuestion(wizard);

  if (view.done) {
    root.append(
      el("h3", {}, ["Exploration finished"]),
      el(
        "ul",
        {},
        view.baseLines.map((line) => el("li", {}, [line])),
      ),
    );
    return;
  }

  root.append(
    el("h3", {}, ["Is the following implication valid?"]),
    el("p", { class: "question" }, [view.questionText]),
  );
  if (view.error) root.append(errorPanel(view.error));

  const accept = el("button", {}, ["Accept"]) as HTMLButtonElement;
  accept.disabled = !view.acceptEnabled;
  accept.onclick = async () => {
    wizard = await submitAccept(api, wizard!);
    drawWizard();
  };

  const name = el("input", { placeholder: "counterexample name", value: view.draftName });
  name.oninput = () => {
    wizard = setDraftName(wizard!, (name as HTMLInputElement).value);
    drawWizard();
  };
  const boxes = view.attributes.map((attr) => {
    const box = el("input", { type: "checkbox" }) as HTMLInputElement;
    box.checked = attr.checked;
    box.onchange = () => {
      wizard = toggleDraftAttribute(wizard!, attr.name);
      drawWizard();
    };
    return el("label", {}, [box, attr.name]);
  });
  const submit = el("button", {}, ["Add counterexample"]) as HTMLButtonElement;
  submit.disabled = !view.submitEnabled;
  submit.title = view.submitEnabled
    ? ""
    : "the object must have the whole premise and miss part of the conclusion";
  submit.onclick = async () => {
    wizard = await submitCounterexample(api, wizard!);
    drawWizard();
  };

  root.append(el("div", {}, [accept]), el("div", { class: "draft" }, [name, ...boxes, submit]));
}

document.getElementById("start-session")!.addEventListener("click", async () => {
  const raw = (document.getElementById("attributes") as HTMLInputElement).value;
  const attributes = raw.split(",").map((s) => s.trim()).filter(Boolean);
  wizard = await startSession(api, attributes);
  drawWizard();
});

// ---- lattice viewer -----------------------------------------------------------

function drawLattice(view: LatticeView, names: ContextJson): void {
  const root = document.getElementById("lattice")!;
  clear(root);
  const width = 900;
  const rowHeight = 90;
  const svgNs = "http://www.w3.org/2000/svg";
  const svg = document.createElementNS(svgNs, "svg");
  svg.setAttribute("width", String(width));
  svg.setAttribute("height", String(rowHeight * view.layers.length + 40));

  const position = (node: number): { x: number; y: number } => {
    const n = view.nodes[node]!;
    const layerSize = view.layers[n.layer]!.length;
    return {
      x: ((n.column + 1) * width) / (layerSize + 1),
      y: 30 + n.layer * rowHeight,
    };
  };

  for (const [child, parent] of view.edges) {
    const a = position(child);
    const b = position(parent);
    const line = document.createElementNS(svgNs, "line");
    line.setAttribute("x1", String(a.x));
    line.setAttribute("y1", String(a.y));
    line.setAttribute("x2", String(b.x));
    line.setAttribute("y2", String(b.y));
    line.setAttribute("stroke", "#888");
    svg.append(line);
  }
  for (const node of view.nodes) {
    const { x, y } = position(node.index);
    const circle = document.createElementNS(svgNs, "circle");
    circle.setAttribute("cx", String(x));
    circle.setAttribute("cy", String(y));
    circle.setAttribute("r", "9");
    circle.setAttribute("fill", node.highlighted ? "#d33" : "#3366cc");
    svg.append(circle);
    const label = document.createElementNS(svgNs, "text");
    label.setAttribute("x", String(x + 12));
    label.setAttribute("y", String(y - 6));
    label.textContent = node.attributeLabels.join(", ");
    svg.append(label);
    const objects = document.createElementNS(svgNs, "text");
    objects.setAttribute("x", String(x + 12));
    objects.setAttribute("y", String(y + 16));
    objects.textContent = node.objectLabels.join(", ");
    svg.append(objects);
  }
  root.append(svg);
  root.append(
    el("p", {}, [
      `${view.nodes.length} concepts, ${view.edges.length} covers` +
        (view.highlightAttribute
          ? `, ${highlightedNodes(view).length} highlighted by "${view.highlightAttribute}"`
          : ""),
    ]),
  );
}

document.getElementById("load-lattice")!.addEventListener("click", async () => {
  const root = document.getElementById("lattice")!;
  const id = (document.getElementById("context-id") as HTMLInputElement).value.trim();
  const highlight =
    (document.getElementById("highlight") as HTMLInputElement).value.trim() || undefined;
  try {
    const ctx = await api.getContext(id);
    if (ctx.status !== 200) throw new Error(`context fetch failed with ${ctx.status}`);
    const lattice = await api.getLattice(id);
    if (lattice.status !== 200) throw new Error(`lattice fetch failed with ${lattice.status}`);
    const view = renderLattice(
      lattice.body,
      ctx.body.objects,
      ctx.body.attributes,
      highlight,
    );
    drawLattice(view, ctx.body);
  } catch (err) {
    clear(root);
    root.append(errorPanel(String(err)));
  }
});

// ---- failure reports ------------------------------------------------------------

document.getElementById("load-report")!.addEventListener("click", async () => {
  const root = document.getElementById("report")!;
  clear(root);
  const contextId = (document.getElementById("report-context") as HTMLInputElement).value.trim();
  const failureAttr = (document.getElementById("failure-attr") as HTMLInputElement).value.trim();
  const { status, body } = await api.postFailureReport({ contextId, failureAttr });
  if (status !== 200) {
    root.append(errorPanel(`report failed with ${status}`));
    return;
  }
  root.append(
    el(
      "ul",
      {},
      body.clusters.map((cluster) =>
        el("li", {}, [
          `{${cluster.attrs.join(", ")}} — ${cluster.tests.join(", ")}`,
        ]),
      ),
    ),
  );
});
