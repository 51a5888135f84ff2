/**
 * Line-diagram view model: layered placement of the lattice JSON plus
 * reduced labeling and optional highlighting.
 *
 * The view performs no lattice math beyond layout — concepts and covers
 * arrive fully computed from the service and are mirrored verbatim;
 * highlighting only flags nodes, it never changes the topology.
 */
import type { LatticeJson } from "./api.js";

export interface LatticeNodeView {
  index: number;
  /** attributes introduced at this concept (reduced labeling) */
  attributeLabels: string[];
  /** objects introduced at this concept (reduced labeling) */
  objectLabels: string[];
  intent: number[];
  extent: number[];
  /** longest-path distance below the top concept */
  layer: number;
  /** position within the layer, in lectic intent order */
  column: number;
  highlighted: boolean;
}

export interface LatticeView {
  nodes: LatticeNodeView[];
  /** cover edges as [childIndex, parentIndex], exactly the service JSON */
  edges: [number, number][];
  /** node indices per layer, top layer first */
  layers: number[][];
  highlightAttribute: string | null;
}

/** Longest-path depth from the top node along cover edges. */
function layerOf(lattice: LatticeJson): number[] {
  const n = lattice.concepts.length;
  const parents: number[][] = Array.from({ length: n }, () => []);
  for (const [child, parent] of lattice.covers) parents[child]!.push(parent);
  const depth = new Array<number>(n).fill(-1);

  const visit = (i: number): number => {
    const known = depth[i];
    if (known !== undefined && known >= 0) return known;
    const ps = parents[i]!;
    const d = ps.length === 0 ? 0 : Math.max(...ps.map(visit)) + 1;
    depth[i] = d;
    return d;
  };
  for (let i = 0; i < n; i++) visit(i);
  return depth;
}

/**
 * Reduced labeling from the raw JSON: an attribute is written at the
 * concept with the largest extent whose intent contains it; an object at
 * the concept with the largest intent whose extent contains it.
 */
function reducedLabels(
  lattice: LatticeJson,
  objectNames: string[],
  attributeNames: string[],
): { attrAt: Map<number, string[]>; objAt: Map<number, string[]> } {
  const attrAt = new Map<number, string[]>();
  const objAt = new Map<number, string[]>();
  attributeNames.forEach((name, m) => {
    let best = -1;
    lattice.concepts.forEach((c, i) => {
      if (c.intent.includes(m)) {
        if (best < 0 || lattice.concepts[best]!.extent.length < c.extent.length) best = i;
      }
    });
    if (best >= 0) attrAt.set(best, [...(attrAt.get(best) ?? []), name]);
  });
  objectNames.forEach((name, g) => {
    let best = -1;
    lattice.concepts.forEach((c, i) => {
      if (c.extent.includes(g)) {
        if (best < 0 || lattice.concepts[best]!.intent.length < c.intent.length) best = i;
      }
    });
    if (best >= 0) objAt.set(best, [...(objAt.get(best) ?? []), name]);
  });
  return { attrAt, objAt };
}

export function renderLattice(
  lattice: LatticeJson,
  objectNames: string[],
  attributeNames: string[],
  highlightAttribute?: string,
): LatticeView {
  if (!Array.isArray(lattice.concepts) || !Array.isArray(lattice.covers)) {
    throw new Error("malformed lattice JSON: concepts/covers missing");
  }
  const highlightIndex =
    highlightAttribute === undefined ? -1 : attributeNames.indexOf(highlightAttribute);
  if (highlightAttribute !== undefined && highlightIndex < 0) {
    throw new Error(`unknown highlight attribute ${highlightAttribute}`);
  }
  const depths = layerOf(lattice);
  const { attrAt, objAt } = reducedLabels(lattice, objectNames, attributeNames);

  // The service emits concepts in lectic intent order, so ascending index
  // inside a layer is already the deterministic order the diagrams use.
  const layers: number[][] = [];
  lattice.concepts.forEach((_, i) => {
    const d = depths[i]!;
    while (layers.length <= d) layers.push([]);
    layers[d]!.push(i);
  });

  const column = new Array<number>(lattice.concepts.length).fill(0);
  for (const layer of layers) layer.forEach((node, pos) => (column[node] = pos));

  const nodes: LatticeNodeView[] = lattice.concepts.map((c, i) => ({
    index: i,
    attributeLabels: attrAt.get(i) ?? [],
    objectLabels: objAt.get(i) ?? [],
    intent: [...c.intent],
    extent: [...c.extent],
    layer: depths[i]!,
    column: column[i]!,
    highlighted: highlightIndex >= 0 && c.intent.includes(highlightIndex),
  }));

  return {
    nodes,
    edges: lattice.covers.map(([a, b]) => [a, b]),
    layers,
    highlightAttribute: highlightAttribute ?? null,
  };
}

export function highlightedNodes(view: LatticeView): number[] {
  return view.nodes.filter((n) => n.highlighted).map((n) => n.index);
}
