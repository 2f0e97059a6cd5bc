/** Wire types for the documents the server produces. */

export interface VisNode {
  id: string;
  label: string;
  class: string;
  payload?: string;
}

export interface VisEdge {
  id: string;
  from: string;
  to: string;
  label: string;
}

export interface VisualModel {
  nodes: VisNode[];
  edges: VisEdge[];
  trees: ClassTree[];
  lists: { id: string; items: string[] }[];
  texts: { id: string; content: string }[];
  shapes: { id: string; shape: string }[];
}

export interface ClassTree {
  id: string;
  root: string;
  children: Record<string, string[]>;
}

/** Body of GET /api/node/{id}: the node, then its neighbors. */
export interface Neighborhood {
  nodes: VisNode[];
  edges: VisEdge[];
}
