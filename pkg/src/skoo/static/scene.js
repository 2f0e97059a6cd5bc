/**
 * Pure scene derivation: turns (state, positions) into the flat lists the
 * DOM layer draws. Keeping this separate from the DOM means tests can
 * assert on the rendered scene headlessly.
 */
import { computeLayout } from "./layout.js";
import { displayedEdges, displayedNodes, legendClasses, } from "./state.js";
export function layoutPositions(state, width, height) {
    if (state.model === null)
        return new Map();
    return computeLayout(state.model.nodes, state.model.edges, width, height);
}
export function buildScene(state, positions) {
    const hits = new Set(state.searchHits);
    const circles = [];
    for (const node of displayedNodes(state)) {
        const p = positions.get(node.id);
        if (p === undefined)
            continue;
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
    const lines = [];
    for (const edge of displayedEdges(state)) {
        const a = positions.get(edge.from);
        const b = positions.get(edge.to);
        if (a === undefined || b === undefined)
            continue;
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
