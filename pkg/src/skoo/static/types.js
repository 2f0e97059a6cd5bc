/** Wire types for the documents the server produces. */
export {};
