/** Typed fetch wrappers for the read-only server API. */

import type { ClassTree, Neighborhood, VisNode, VisualModel } from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

async function getJson<T>(base: string, path: string): Promise<T> {
  let response: Response;
  try {
    response = await fetch(base + path);
  } catch (cause) {
    throw new ApiError(0, `network failure for ${path}`);
  }
  if (!response.ok) {
    throw new ApiError(response.status, `${path} -> ${response.status}`);
  }
  return (await response.json()) as T;
}

export function fetchModel(base = ""): Promise<VisualModel> {
  return getJson<VisualModel>(base, "/api/model");
}

export function fetchClasses(base = ""): Promise<ClassTree> {
  return getJson<ClassTree>(base, "/api/classes");
}

export function fetchNeighborhood(id: string, base = ""): Promise<Neighborhood> {
  return getJson<Neighborhood>(base, `/api/node/${encodeURIComponent(id)}`);
}

export function fetchSearch(query: string, base = ""): Promise<VisNode[]> {
  return getJson<VisNode[]>(base, `/api/search?q=${encodeURIComponent(query)}`);
}
