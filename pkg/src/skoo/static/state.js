/**
 * View state and its reducer.
 *
 * Every transition is a pure function of (state, action); fetched data
 * arrives inside actions, so the whole interaction model is testable
 * without a browser. Display rules are derived by selectors: a node is
 * displayed when it is visible and survives the class filter, and an edge
 * is displayed only when both endpoints are.
 */
export const initialState = {
    model: null,
    visibleNodeIds: new Set(),
    selectedNodeId: null,
    classFilter: new Set(),
    searchQuery: "",
    searchHits: [],
    searchSeq: 0,
    notice: null,
    error: null,
};
export function reduce(state, action) {
    switch (action.type) {
        case "model-loaded": {
            const ids = new Set(action.model.nodes.map((n) => n.id));
            return {
                ...initialState,
                model: action.model,
                visibleNodeIds: ids,
                notice: ids.size === 0 ? "no elements" : null,
            };
        }
        case "model-failed":
            // no partial render: model stays null, the banner carries the failure
            return { ...initialState, error: action.message };
        case "node-selected": {
            if (!state.visibleNodeIds.has(action.id))
                return state;
            return { ...state, selectedNodeId: action.id };
        }
        case "node-expanded": {
            if (state.model === null || !state.visibleNodeIds.has(action.id))
                return state;
            const model = mergeNeighborhood(state.model, action.neighborhood);
            const visible = new Set(state.visibleNodeIds);
            for (const node of action.neighborhood.nodes)
                visible.add(node.id);
            if (model === state.model && visible.size === state.visibleNodeIds.size) {
                return state; // expanding twice is a no-op
            }
            return { ...state, model, visibleNodeIds: visible };
        }
        case "expand-failed":
            return { ...state, notice: `expand failed (${action.status})` };
        case "filter-set": {
            const filter = new Set(action.classes);
            let selected = state.selectedNodeId;
            if (selected !== null && state.model !== null && filter.size > 0) {
                const node = state.model.nodes.find((n) => n.id === selected);
                if (node === undefined || !filter.has(node.class))
                    selected = null;
            }
            return { ...state, classFilter: filter, selectedNodeId: selected };
        }
        case "search-started":
            return { ...state, searchQuery: action.query, searchSeq: action.seq };
        case "search-results": {
            if (action.seq < state.searchSeq)
                return state; // stale response
            return {
                ...state,
                searchQuery: action.query,
                searchSeq: action.seq,
                searchHits: action.hits,
                notice: action.hits.length === 0 && action.query !== "" ? "no matches" : null,
            };
        }
        case "search-failed": {
            if (action.seq < state.searchSeq)
                return state;
            return { ...state, notice: action.message };
        }
    }
}
function mergeNeighborhood(model, neighborhood) {
    const knownNodes = new Set(model.nodes.map((n) => n.id));
    const knownEdges = new Set(model.edges.map((e) => e.id));
    const newNodes = neighborhood.nodes.filter((n) => !knownNodes.has(n.id));
    const newEdges = neighborhood.edges.filter((e) => !knownEdges.has(e.id));
    if (newNodes.length === 0 && newEdges.length === 0)
        return model;
    return {
        ...model,
        nodes: [...model.nodes, ...newNodes],
        edges: [...model.edges, ...newEdges],
    };
}
/** Nodes that pass both visibility and the class filter. */
export function displayedNodes(state) {
    if (state.model === null)
        return [];
    return state.model.nodes.filter((n) => state.visibleNodeIds.has(n.id) &&
        (state.classFilter.size === 0 || state.classFilter.has(n.class)));
}
/** Edges whose endpoints are both displayed; hiding a node hides its edges. */
export function displayedEdges(state) {
    if (state.model === null)
        return [];
    const shown = new Set(displayedNodes(state).map((n) => n.id));
    return state.model.edges.filter((e) => shown.has(e.from) && shown.has(e.to));
}
/** Distinct style classes of the whole model, for the legend. */
export function legendClasses(state) {
    if (state.model === null)
        return [];
    return [...new Set(state.model.nodes.map((n) => n.class))].sort();
}
