import { describe, expect, it } from "vitest";

import {
  displayedEdges,
  displayedNodes,
  initialState,
  legendClasses,
  reduce,
  type ViewState,
} from "../src/state.js";
import type { Neighborhood, VisualModel } from "../src/types.js";

/** The model the default rules produce for the shipped physics fixture. */
export const willeModel: VisualModel = {
  nodes: [
    { id: "ex:dispersionLaw", label: "dispersionLaw", class: "law" },
    { id: "ex:thm38", label: "thm38", class: "theorem" },
    { id: "ex:eqDispersion", label: "eqDispersion", class: "equation" },
    { id: "ex:momentumCompaction", label: "momentumCompaction", class: "domain-object" },
    { id: "ex:notationAlphaP", label: "notationAlphaP", class: "notation" },
  ],
  edges: [
    {
      id: "ex:dispersionLaw--expressed-by--ex:eqDispersion",
      from: "ex:dispersionLaw",
      to: "ex:eqDispersion",
      label: "is expressed by",
    },
    {
      id: "ex:thm38--about--ex:momentumCompaction",
      from: "ex:thm38",
      to: "ex:momentumCompaction",
      label: "is about",
    },
    {
      id: "ex:notationAlphaP--denotes--ex:momentumCompaction",
      from: "ex:notationAlphaP",
      to: "ex:momentumCompaction",
      label: "denotes",
    },
  ],
  trees: [],
  lists: [],
  texts: [],
  shapes: [],
};

function loaded(): ViewState {
  return reduce(initialState, { type: "model-loaded", model: willeModel });
}

describe("model loading", () => {
  it("shows every node and edge", () => {
    const state = loaded();
    expect(displayedNodes(state)).toHaveLength(5);
    expect(displayedEdges(state)).toHaveLength(3);
    expect(state.notice).toBeNull();
  });

  it("builds the legend from distinct style classes", () => {
    expect(legendClasses(loaded())).toEqual([
      "domain-object",
      "equation",
      "law",
      "notation",
      "theorem",
    ]);
  });

  it("reports an empty model", () => {
    const state = reduce(initialState, {
      type: "model-loaded",
      model: { ...willeModel, nodes: [], edges: [] },
    });
    expect(displayedNodes(state)).toHaveLength(0);
    expect(state.notice).toBe("no elements");
  });

  it("keeps nothing rendered on load failure", () => {
    const state = reduce(initialState, { type: "model-failed", message: "boom" });
    expect(state.model).toBeNull();
    expect(state.error).toBe("boom");
    expect(displayedNodes(state)).toHaveLength(0);
  });
});

describe("class filter", () => {
  it("filtering on theorem leaves exactly one node", () => {
    const state = reduce(loaded(), { type: "filter-set", classes: ["theorem"] });
    const nodes = displayedNodes(state);
    expect(nodes).toHaveLength(1);
    expect(nodes[0]!.id).toBe("ex:thm38");
  });

  it("an empty filter set shows everything", () => {
    let state = reduce(loaded(), { type: "filter-set", classes: ["theorem"] });
    state = reduce(state, { type: "filter-set", classes: [] });
    expect(displayedNodes(state)).toHaveLength(5);
  });

  it("hiding a node hides its incident edges", () => {
    const state = reduce(loaded(), {
      type: "filter-set",
      classes: ["theorem", "notation", "law", "equation"], // hides domain-object
    });
    const shown = new Set(displayedNodes(state).map((n) => n.id));
    expect(shown.has("ex:momentumCompaction")).toBe(false);
    const edges = displayedEdges(state);
    expect(edges).toHaveLength(1); // only law -> equation survives
    for (const edge of edges) {
      expect(shown.has(edge.from)).toBe(true);
      expect(shown.has(edge.to)).toBe(true);
    }
  });

  it("deselects a node its filter hides", () => {
    let state = reduce(loaded(), { type: "node-selected", id: "ex:thm38" });
    expect(state.selectedNodeId).toBe("ex:thm38");
    state = reduce(state, { type: "filter-set", classes: ["law"] });
    expect(state.selectedNodeId).toBeNull();
  });
});

describe("expand", () => {
  const neighborhood: Neighborhood = {
    nodes: [
      { id: "ex:thm38", label: "thm38", class: "theorem" },
      { id: "ex:momentumCompaction", label: "momentumCompaction", class: "domain-object" },
    ],
    edges: [
      {
        id: "ex:thm38--about--ex:momentumCompaction",
        from: "ex:thm38",
        to: "ex:momentumCompaction",
        label: "is about",
      },
    ],
  };

  it("is idempotent", () => {
    const once = reduce(loaded(), { type: "node-expanded", id: "ex:thm38", neighborhood });
    const twice = reduce(once, { type: "node-expanded", id: "ex:thm38", neighborhood });
    expect(twice).toBe(once); // same reference: literally no change
  });

  it("adds unseen neighbors to the model and the visible set", () => {
    const fresh: Neighborhood = {
      nodes: [{ id: "ex:new", label: "new", class: "lemma" }],
      edges: [],
    };
    const state = reduce(loaded(), { type: "node-expanded", id: "ex:thm38", neighborhood: fresh });
    expect(state.visibleNodeIds.has("ex:new")).toBe(true);
    expect(state.model!.nodes.map((n) => n.id)).toContain("ex:new");
  });

  it("keeps a filtered-out neighbor hidden while the filter is active", () => {
    let state = reduce(loaded(), { type: "filter-set", classes: ["theorem"] });
    const fresh: Neighborhood = {
      nodes: [{ id: "ex:new", label: "new", class: "lemma" }],
      edges: [],
    };
    state = reduce(state, { type: "node-expanded", id: "ex:thm38", neighborhood: fresh });
    expect(state.visibleNodeIds.has("ex:new")).toBe(true); // added
    expect(displayedNodes(state).map((n) => n.id)).toEqual(["ex:thm38"]); // but hidden
  });

  it("leaves state unchanged on a failed expand, beyond the toast", () => {
    const base = loaded();
    const state = reduce(base, { type: "expand-failed", id: "ex:thm38", status: 404 });
    expect(state.model).toBe(base.model);
    expect(state.visibleNodeIds).toEqual(base.visibleNodeIds);
    expect(state.notice).toContain("404");
  });

  it("ignores expansion of nodes that are not visible", () => {
    const base = loaded();
    const state = reduce(base, { type: "node-expanded", id: "ex:ghost", neighborhood });
    expect(state).toBe(base);
  });
});

describe("search", () => {
  it("records hits for highlighting", () => {
    let state = reduce(loaded(), { type: "search-started", query: "disp", seq: 1 });
    state = reduce(state, {
      type: "search-results",
      query: "disp",
      seq: 1,
      hits: ["ex:dispersionLaw", "ex:eqDispersion"],
    });
    expect(state.searchHits).toEqual(["ex:dispersionLaw", "ex:eqDispersion"]);
    expect(state.notice).toBeNull();
  });

  it("notices an empty result", () => {
    let state = reduce(loaded(), { type: "search-started", query: "zzz", seq: 1 });
    state = reduce(state, { type: "search-results", query: "zzz", seq: 1, hits: [] });
    expect(state.searchHits).toEqual([]);
    expect(state.notice).toBe("no matches");
  });

  it("discards stale responses", () => {
    let state = reduce(loaded(), { type: "search-started", query: "a", seq: 1 });
    state = reduce(state, { type: "search-started", query: "ab", seq: 2 });
    state = reduce(state, { type: "search-results", query: "a", seq: 1, hits: ["ex:thm38"] });
    expect(state.searchHits).toEqual([]); // seq 1 lost to seq 2
    state = reduce(state, { type: "search-results", query: "ab", seq: 2, hits: [] });
    expect(state.notice).toBe("no matches");
  });
});

describe("display invariant", () => {
  it("every displayed edge has both endpoints displayed, under any filter", () => {
    const classes = legendClasses(loaded());
    for (let mask = 0; mask < 1 << classes.length; mask++) {
      const selectedClasses = classes.filter((_, i) => (mask & (1 << i)) !== 0);
      const state = reduce(loaded(), { type: "filter-set", classes: selectedClasses });
      const shown = new Set(displayedNodes(state).map((n) => n.id));
      for (const edge of displayedEdges(state)) {
        expect(shown.has(edge.from)).toBe(true);
        expect(shown.has(edge.to)).toBe(true);
      }
    }
  });

  it("selection requires visibility", () => {
    const state = reduce(loaded(), { type: "node-selected", id: "ex:ghost" });
    expect(state.selectedNodeId).toBeNull();
  });
});
