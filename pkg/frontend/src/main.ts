/**
 * Browser bootstrap: fetches the model and class tree, keeps the reducer
 * state, and redraws the SVG scene after every action. All logic lives in
 * state.ts/scene.ts; this file only touches the DOM.
 */

import { ApiError, fetchClasses, fetchModel, fetchNeighborhood, fetchSearch } from "./api.js";
import { buildScene, layoutPositions } from "./scene.js";
import { initialState, legendClasses, reduce, type Action, type ViewState } from "./state.js";
import type { ClassTree } from "./types.js";
import type { Point } from "./layout.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 900;
const HEIGHT = 620;

let state: ViewState = initialState;
let positions: Map<string, Point> = new Map();
let searchCounter = 0;
let expandInFlight: string | null = null;

function dispatch(action: Action): void {
  const next = reduce(state, action);
  const modelChanged = next.model !== state.model;
  state = next;
  if (modelChanged) {
    positions = layoutPositions(state, WIDTH, HEIGHT);
    renderLegendAndFilters();
  }
  renderScene();
}

function element<K extends keyof HTMLElementTagNameMap>(tag: K, text?: string): HTMLElementTagNameMap[K] {
  const el = document.createElement(tag);
  if (text !== undefined) el.textContent = text;
  return el;
}

function renderScene(): void {
  const svg = document.getElementById("canvas")!;
  svg.replaceChildren();
  const scene = buildScene(state, positions);

  for (const line of scene.lines) {
    const l = document.createElementNS(SVG_NS, "line");
    l.setAttribute("x1", String(line.x1));
    l.setAttribute("y1", String(line.y1));
    l.setAttribute("x2", String(line.x2));
    l.setAttribute("y2", String(line.y2));
    l.setAttribute("class", "edge");
    svg.appendChild(l);
    const mid = document.createElementNS(SVG_NS, "text");
    mid.setAttribute("x", String((line.x1 + line.x2) / 2));
    mid.setAttribute("y", String((line.y1 + line.y2) / 2 - 4));
    mid.setAttribute("class", "edge-label");
    mid.textContent = line.label;
    svg.appendChild(mid);
  }

  for (const circle of scene.circles) {
    const group = document.createElementNS(SVG_NS, "g");
    const c = document.createElementNS(SVG_NS, "circle");
    c.setAttribute("cx", String(circle.x));
    c.setAttribute("cy", String(circle.y));
    c.setAttribute("r", circle.selected ? "16" : "12");
    c.setAttribute(
      "class",
      ["node", `class-${cssToken(circle.styleClass)}`, circle.selected ? "selected" : "", circle.highlighted ? "highlighted" : ""]
        .filter(Boolean)
        .join(" "),
    );
    c.addEventListener("click", () => selectAndExpand(circle.id));
    group.appendChild(c);
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(circle.x));
    label.setAttribute("y", String(circle.y - 18));
    label.setAttribute("class", "node-label");
    label.textContent = circle.label;
    group.appendChild(label);
    svg.appendChild(group);
  }

  const banner = document.getElementById("banner")!;
  banner.textContent = scene.error ?? "";
  banner.style.display = scene.error ? "block" : "none";
  const notice = document.getElementById("notice")!;
  notice.textContent = scene.notice ?? "";
  notice.style.display = scene.notice ? "block" : "none";

  if (scene.centerOn !== null) {
    svg.setAttribute(
      "viewBox",
      `${scene.centerOn.x - WIDTH / 2} ${scene.centerOn.y - HEIGHT / 2} ${WIDTH} ${HEIGHT}`,
    );
  } else {
    svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
  }
}

function cssToken(styleClass: string): string {
  return styleClass.replace(/[^a-z0-9-]/gi, "-");
}

function renderLegendAndFilters(): void {
  const legend = document.getElementById("legend")!;
  legend.replaceChildren();
  for (const cls of legendClasses(state)) {
    const row = element("label");
    row.className = "legend-row";
    const box = element("input");
    box.type = "checkbox";
    box.value = cls;
    box.checked = state.classFilter.size === 0 || state.classFilter.has(cls);
    box.addEventListener("change", applyFilter);
    const swatch = element("span");
    swatch.className = `swatch class-${cssToken(cls)}`;
    row.append(box, swatch, element("span", cls));
    legend.appendChild(row);
  }
}

function applyFilter(): void {
  const boxes = document.querySelectorAll<HTMLInputElement>("#legend input[type=checkbox]");
  const checked = [...boxes].filter((b) => b.checked).map((b) => b.value);
  // every box checked means "no filter"
  dispatch({ type: "filter-set", classes: checked.length === boxes.length ? [] : checked });
}

function selectAndExpand(id: string): void {
  dispatch({ type: "node-selected", id });
  if (expandInFlight !== null) return; // one in-flight expand at a time
  expandInFlight = id;
  fetchNeighborhood(id)
    .then((neighborhood) => dispatch({ type: "node-expanded", id, neighborhood }))
    .catch((err: unknown) => {
      const status = err instanceof ApiError ? err.status : 0;
      dispatch({ type: "expand-failed", id, status });
    })
    .finally(() => {
      expandInFlight = null;
    });
}

function runSearch(query: string): void {
  const seq = ++searchCounter;
  dispatch({ type: "search-started", query, seq });
  if (query === "") {
    dispatch({ type: "search-results", query, seq, hits: [] });
    return;
  }
  fetchSearch(query)
    .then((nodes) => dispatch({ type: "search-results", query, seq, hits: nodes.map((n) => n.id) }))
    .catch(() => dispatch({ type: "search-failed", seq, message: "search failed" }));
}

function renderClassTree(tree: ClassTree): void {
  const host = document.getElementById("class-tree")!;
  const rootList = element("ul");
  rootList.appendChild(buildTreeItem(tree, tree.root));
  host.replaceChildren(rootList);
}

function buildTreeItem(tree: ClassTree, id: string): HTMLLIElement {
  const item = element("li", id);
  const kids = tree.children[id] ?? [];
  if (kids.length > 0) {
    const ul = element("ul");
    for (const child of kids) ul.appendChild(buildTreeItem(tree, child));
    item.appendChild(ul);
  }
  return item;
}

async function bootstrap(): Promise<void> {
  document.getElementById("search")!.addEventListener("input", (event) => {
    runSearch((event.target as HTMLInputElement).value.trim());
  });
  try {
    const model = await fetchModel();
    dispatch({ type: "model-loaded", model });
  } catch (err) {
    dispatch({ type: "model-failed", message: "could not load /api/model" });
    return;
  }
  try {
    renderClassTree(await fetchClasses());
  } catch {
    // sidebar tree is non-fatal
  }
}

bootstrap();
