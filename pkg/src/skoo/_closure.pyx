# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled closure kernel: Tarjan SCC condensation plus a bitset
transitive closure. Same contract as skoo._closure_py.closure_kernel."""

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memset


def closure_kernel(int n, edges):
    cdef list edge_list = list(edges)
    cdef Py_ssize_t m = len(edge_list)
    cdef int* esrc = NULL
    cdef int* edst = NULL
    cdef int* offsets = NULL
    cdef int* targets = NULL
    cdef int* fill = NULL
    cdef int* index_of = NULL
    cdef int* low = NULL
    cdef char* on_stack = NULL
    cdef int* comp_of = NULL
    cdef int* scc_stack = NULL
    cdef int* stack_v = NULL
    cdef int* stack_ei = NULL
    cdef unsigned long long* reach = NULL
    cdef Py_ssize_t i, words
    cdef int u, v, w, root, depth, counter, ncomp, scc_top, cu, cv, c
    cdef unsigned long long word

    if n == 0:
        return [], []

    try:
        esrc = <int*> malloc(max(m, 1) * sizeof(int))
        edst = <int*> malloc(max(m, 1) * sizeof(int))
        offsets = <int*> calloc(n + 1, sizeof(int))
        targets = <int*> malloc(max(m, 1) * sizeof(int))
        fill = <int*> malloc(n * sizeof(int))
        index_of = <int*> malloc(n * sizeof(int))
        low = <int*> malloc(n * sizeof(int))
        on_stack = <char*> calloc(n, sizeof(char))
        comp_of = <int*> malloc(n * sizeof(int))
        scc_stack = <int*> malloc(n * sizeof(int))
        stack_v = <int*> malloc(n * sizeof(int))
        stack_ei = <int*> malloc(n * sizeof(int))
        if (esrc == NULL or edst == NULL or offsets == NULL or targets == NULL
                or fill == NULL or index_of == NULL or low == NULL
                or on_stack == NULL or comp_of == NULL or scc_stack == NULL
                or stack_v == NULL or stack_ei == NULL):
            raise MemoryError()

        for i in range(m):
            pair = edge_list[i]
            esrc[i] = <int> pair[0]
            edst[i] = <int> pair[1]
            offsets[esrc[i] + 1] += 1
        for u in range(n):
            offsets[u + 1] += offsets[u]
        for u in range(n):
            fill[u] = offsets[u]
        for i in range(m):
            targets[fill[esrc[i]]] = edst[i]
            fill[esrc[i]] += 1

        memset(index_of, 0xff, n * sizeof(int))  # -1
        memset(comp_of, 0xff, n * sizeof(int))
        counter = 0
        ncomp = 0
        scc_top = 0

        for root in range(n):
            if index_of[root] != -1:
                continue
            depth = 0
            stack_v[0] = root
            stack_ei[0] = offsets[root]
            index_of[root] = counter
            low[root] = counter
            counter += 1
            scc_stack[scc_top] = root
            scc_top += 1
            on_stack[root] = 1
            while depth >= 0:
                v = stack_v[depth]
                if stack_ei[depth] < offsets[v + 1]:
                    w = targets[stack_ei[depth]]
                    stack_ei[depth] += 1
                    if index_of[w] == -1:
                        index_of[w] = counter
                        low[w] = counter
                        counter += 1
                        scc_stack[scc_top] = w
                        scc_top += 1
                        on_stack[w] = 1
                        depth += 1
                        stack_v[depth] = w
                        stack_ei[depth] = offsets[w]
                    elif on_stack[w] and index_of[w] < low[v]:
                        low[v] = index_of[w]
                    continue
                if low[v] == index_of[v]:
                    while True:
                        scc_top -= 1
                        w = scc_stack[scc_top]
                        on_stack[w] = 0
                        comp_of[w] = ncomp
                        if w == v:
                            break
                    ncomp += 1
                depth -= 1
                if depth >= 0:
                    u = stack_v[depth]
                    if low[v] < low[u]:
                        low[u] = low[v]

        words = (ncomp + 63) >> 6
        reach = <unsigned long long*> calloc(ncomp * words, sizeof(unsigned long long))
        if reach == NULL:
            raise MemoryError()
        for c in range(ncomp):
            reach[c * words + (c >> 6)] |= (<unsigned long long> 1) << (c & 63)
        # Successor components have smaller ids; one ascending pass closes.
        for i in range(m):
            esrc[i] = comp_of[esrc[i]]
            edst[i] = comp_of[edst[i]]
        # counting sort of condensation edges by source component
        memset(offsets, 0, (n + 1) * sizeof(int))
        for i in range(m):
            if esrc[i] != edst[i]:
                offsets[esrc[i] + 1] += 1
        for c in range(ncomp):
            offsets[c + 1] += offsets[c]
        for c in range(ncomp):
            fill[c] = offsets[c]
        for i in range(m):
            if esrc[i] != edst[i]:
                targets[fill[esrc[i]]] = edst[i]
                fill[esrc[i]] += 1
        for cu in range(ncomp):
            for i in range(offsets[cu], offsets[cu + 1]):
                cv = targets[i]
                for c in range(words):
                    reach[cu * words + c] |= reach[cv * words + c]

        comp_list = [0] * n
        for u in range(n):
            comp_list[u] = comp_of[u]
        masks = [0] * ncomp
        for c in range(ncomp):
            value = 0
            for i in range(words - 1, -1, -1):
                word = reach[c * words + i]
                value = (value << 64) | word
            masks[c] = value
        return comp_list, masks
    finally:
        free(esrc)
        free(edst)
        free(offsets)
        free(targets)
        free(fill)
        free(index_of)
        free(low)
        free(on_stack)
        free(comp_of)
        free(scc_stack)
        free(stack_v)
        free(stack_ei)
        free(reach)
