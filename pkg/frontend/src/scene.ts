/**
 * Pure scene derivation: turns (state, positions) into the flat lists the
 * DOM layer draws. Keeping this separate from the DOM means tests can
 * assert on the rendered scene headlessly.
 */

import { computeLayout, type Point } from "./layout.js";
import {
  displayedEdges,
  displayedNodes,
  legendClasses,
  type ViewState,
} from "./state.js";

export interface SceneCircle {
  id: string;
  label: string;
  styleClass: string;
  x: number;
  y: number;
  selected: boolean;
  highlighted: boolean;
}

export interface SceneLine {
  id: string;
  label: string;
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

export interface Scene {
  circles: SceneCircle[];
  lines: SceneLine[];
  legend: string[];
  notice: string | null;
  error: string | null;
  /** First search hit, for the viewport to center on. */
  centerOn: Point | null;
}

export function layoutPositions(state: ViewState, width: number, height: number): Map<string, Point> {
  if (state.model === null) return new Map();
  return computeLayout(state.model.nodes, state.model.edges, width, height);
}

export function buildScene(
  state: ViewState,
  positions: Map<string, Point>,
): Scene {
  const hits = new Set(state.searchHits);
  const circles: SceneCircle[] = [];
  for (const node of displayedNodes(state)) {
    const p = positions.get(node.id);
    if (p === undefined) continue;
    circles.push({
      id: node.id,
      label: node.label,
      styleClass: node.class,
      x: p.x,
      y: p.y,
      selected: node.id === state.selectedNodeId,
      highlighted: hits.has(node.id),
    });
  }
  const lines: SceneLine[] = [];
  for (const edge of displayedEdges(state)) {
    const a = positions.get(edge.from);
    const b = positions.get(edge.to);
    if (a === undefined || b === undefined) continue;
    lines.push({ id: edge.id, label: edge.label, x1: a.x, y1: a.y, x2: b.x, y2: b.y });
  }
  const first = state.searchHits[0];
  const centerOn = first !== undefined ? positions.get(first) ?? null : null;
  return {
    circles,
    lines,
    legend: legendClasses(state),
    notice: state.notice,
    error: state.error,
    centerOn,
  };
}
