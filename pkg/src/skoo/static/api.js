/** Typed fetch wrappers for the read-only server API. */
export class ApiError extends Error {
    status;
    constructor(status, message) {
        super(message);
        this.status = status;
    }
}
async function getJson(base, path) {
    let response;
    try {
        response = await fetch(base + path);
    }
    catch (cause) {
        throw new ApiError(0, `network failure for ${path}`);
    }
    if (!response.ok) {
        throw new ApiError(response.status, `${path} -> ${response.status}`);
    }
    return (await response.json());
}
export function fetchModel(base = "") {
    return getJson(base, "/api/model");
}
export function fetchClasses(base = "") {
    return getJson(base, "/api/classes");
}
export function fetchNeighborhood(id, base = "") {
    return getJson(base, `/api/node/${encodeURIComponent(id)}`);
}
export function fetchSearch(query, base = "") {
    return getJson(base, `/api/search?q=${encodeURIComponent(query)}`);
}
