"""Pure-Python closure kernel; the fallback when skoo._closure is not built.

Contract shared with the compiled kernel: given ``n`` nodes and directed
edges ``(sub, sup)``, return ``(comp_of, reach)`` where ``comp_of[v]`` is the
strongly-connected-component id of node ``v`` and ``reach[c]`` is an int
bitmask over component ids reachable from component ``c`` (reflexive).
Component ids are assigned in Tarjan completion order, so every successor
of a component has a smaller id than the component itself.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def closure_kernel(n: int, edges: Iterable[tuple[int, int]]) -> tuple[list[int], list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    edge_list = list(edges)
    for u, v in edge_list:
        adj[u].append(v)

    comp_of = _tarjan(n, adj)
    ncomp = max(comp_of, default=-1) + 1

    reach = [0] * ncomp
    for c in range(ncomp):
        reach[c] = 1 << c
    # Successor components carry smaller ids, so one ascending pass suffices.
    seen: set[tuple[int, int]] = set()
    for u, v in edge_list:
        cu, cv = comp_of[u], comp_of[v]
        if cu != cv and (cu, cv) not in seen:
            seen.add((cu, cv))
    for cu, cv in sorted(seen, key=lambda p: p[0]):
        reach[cu] |= reach[cv]
    return comp_of, reach


def _tarjan(n: int, adj: Sequence[Sequence[int]]) -> list[int]:
    index_of = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp_of = [-1] * n
    scc_stack: list[int] = []
    counter = 0
    ncomp = 0

    for root in range(n):
        if index_of[root] != -1:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        index_of[root] = low[root] = counter
        counter += 1
        scc_stack.append(root)
        on_stack[root] = True
        while work:
            v, ei = work[-1]
            if ei < len(adj[v]):
                work[-1] = (v, ei + 1)
                w = adj[v][ei]
                if index_of[w] == -1:
                    index_of[w] = low[w] = counter
                    counter += 1
                    scc_stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index_of[w] < low[v]:
                    low[v] = index_of[w]
                continue
            work.pop()
            if low[v] == index_of[v]:
                while True:
                    w = scc_stack.pop()
                    on_stack[w] = False
                    comp_of[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
    return comp_of
