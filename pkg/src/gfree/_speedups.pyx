# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels; semantic twin of ``_kernel_py`` (same results, same
node accounting).  See that module for the conventions."""

from libc.stdlib cimport calloc, free, malloc
from libc.stdint cimport uint64_t

IMPLEMENTATION = "cython"

FOUND = 0
EXHAUSTED = 1
BUDGET = 2

DEF C_FOUND = 0
DEF C_EXHAUSTED = 1
DEF C_BUDGET = 2


cdef struct Anchored:
    uint64_t* masks
    int* start   # per-vertex offsets into masks, length nv+1
    int nv


cdef int _anchored_load(object anchored, Anchored* out) except -1:
    cdef int nv = len(anchored)
    cdef int total = 0
    cdef int i, j
    for a in anchored:
        total += len(a)
    out.masks = <uint64_t*> malloc((total if total else 1) * sizeof(uint64_t))
    out.start = <int*> malloc((nv + 1) * sizeof(int))
    if out.masks == NULL or out.start == NULL:
        raise MemoryError()
    out.nv = nv
    j = 0
    for i in range(nv):
        out.start[i] = j
        for m in anchored[i]:
            out.masks[j] = <uint64_t> m
            j += 1
    out.start[nv] = j
    return 0


cdef void _anchored_free(Anchored* a):
    free(a.masks)
    free(a.start)


cdef inline bint _feasible(Anchored* anc, int v, uint64_t class_mask) nogil:
    cdef int j
    cdef uint64_t m = class_mask
    for j in range(anc.start[v], anc.start[v + 1]):
        if anc.masks[j] & ~m == 0:
            return 0
    return 1


# ---------------------------------------------------------------------------
# partition search

cdef int _part_rec(int pos, int used, int n, int k, int* order,
                   Anchored* anc, uint64_t* class_masks, int* assign,
                   long long* nodes, long long max_nodes) nogil:
    cdef int v, c, limit, st
    cdef uint64_t bit, m
    if pos == n:
        return C_FOUND
    v = order[pos]
    bit = (<uint64_t> 1) << v
    limit = used + 1 if used < k else k
    for c in range(limit):
        nodes[0] += 1
        if nodes[0] > max_nodes:
            return C_BUDGET
        m = class_masks[c] | bit
        if not _feasible(anc, v, m):
            continue
        class_masks[c] = m
        assign[v] = c
        st = _part_rec(pos + 1, used + 1 if c == used else used, n, k,
                       order, anc, class_masks, assign, nodes, max_nodes)
        if st != C_EXHAUSTED:
            return st
        class_masks[c] = m & ~bit
        assign[v] = -1
    return C_EXHAUSTED


def search_partition(anchored, int k, order, long long max_nodes):
    cdef Anchored anc
    _anchored_load(anchored, &anc)
    cdef int n = len(order)
    cdef int nv = anc.nv
    cdef uint64_t* class_masks = <uint64_t*> calloc(k if k else 1, sizeof(uint64_t))
    cdef int* assign = <int*> malloc((nv if nv else 1) * sizeof(int))
    cdef int* order_c = <int*> malloc((n if n else 1) * sizeof(int))
    cdef long long nodes = 0
    cdef int i, st
    try:
        if class_masks == NULL or assign == NULL or order_c == NULL:
            raise MemoryError()
        for i in range(nv):
            assign[i] = -1
        for i in range(n):
            order_c[i] = order[i]
        st = _part_rec(0, 0, n, k, order_c, &anc, class_masks, assign,
                       &nodes, max_nodes)
        if st == C_FOUND:
            return (FOUND, [assign[i] for i in range(nv)], nodes)
        return (st, None, nodes)
    finally:
        _anchored_free(&anc)
        free(class_masks)
        free(assign)
        free(order_c)


# ---------------------------------------------------------------------------
# list coloring

cdef int _list_rec(int pos, int n, int* order, Anchored* anc,
                   int* list_start, int* list_colors,
                   uint64_t* class_masks, int* assign,
                   long long* nodes, long long max_nodes) nogil:
    cdef int v, c, j, st
    cdef uint64_t bit, m
    if pos == n:
        return C_FOUND
    v = order[pos]
    bit = (<uint64_t> 1) << v
    for j in range(list_start[v], list_start[v + 1]):
        c = list_colors[j]
        nodes[0] += 1
        if nodes[0] > max_nodes:
            return C_BUDGET
        m = class_masks[c] | bit
        if not _feasible(anc, v, m):
            continue
        class_masks[c] = m
        assign[v] = c
        st = _list_rec(pos + 1, n, order, anc, list_start, list_colors,
                       class_masks, assign, nodes, max_nodes)
        if st != C_EXHAUSTED:
            return st
        class_masks[c] = m & ~bit
        assign[v] = -1
    return C_EXHAUSTED


def search_list_coloring(anchored, lists, order, long long max_nodes):
    cdef Anchored anc
    _anchored_load(anchored, &anc)
    cdef int n = len(order)
    cdef int nv = anc.nv
    cdef int total = 0
    cdef int ncolors = 0
    for lv in lists:
        total += len(lv)
        for c0 in lv:
            if c0 + 1 > ncolors:
                ncolors = c0 + 1
    cdef int* list_start = <int*> malloc((nv + 1) * sizeof(int))
    cdef int* list_colors = <int*> malloc((total if total else 1) * sizeof(int))
    cdef uint64_t* class_masks = <uint64_t*> calloc(ncolors if ncolors else 1,
                                                    sizeof(uint64_t))
    cdef int* assign = <int*> malloc((nv if nv else 1) * sizeof(int))
    cdef int* order_c = <int*> malloc((n if n else 1) * sizeof(int))
    cdef long long nodes = 0
    cdef int i, j, st
    try:
        if (list_start == NULL or list_colors == NULL or class_masks == NULL
                or assign == NULL or order_c == NULL):
            raise MemoryError()
        j = 0
        for i in range(nv):
            list_start[i] = j
            for c0 in lists[i]:
                list_colors[j] = c0
                j += 1
        list_start[nv] = j
        for i in range(nv):
            assign[i] = -1
        for i in range(n):
            order_c[i] = order[i]
        st = _list_rec(0, n, order_c, &anc, list_start, list_colors,
                       class_masks, assign, &nodes, max_nodes)
        if st == C_FOUND:
            return (FOUND, [assign[i] for i in range(nv)], nodes)
        return (st, None, nodes)
    finally:
        _anchored_free(&anc)
        free(list_start)
        free(list_colors)
        free(class_masks)
        free(assign)
        free(order_c)


# ---------------------------------------------------------------------------
# choosability enumeration

cdef class _ChooseState:
    cdef Anchored anc
    cdef int n, k
    cdef int* order_c
    cdef int* flat          # n*k color ids; row i = L(v_i)
    cdef uint64_t* class_masks   # scratch, size n*k
    cdef int* assign             # scratch, size n
    cdef long long max_nodes, max_assignments
    cdef long long assignments, total_nodes
    cdef object witness

    def __cinit__(self, anchored, int n, int k, order,
                  long long max_nodes, long long max_assignments):
        cdef int i
        _anchored_load(anchored, &self.anc)
        self.n = n
        self.k = k
        self.order_c = <int*> malloc((n if n else 1) * sizeof(int))
        self.flat = <int*> malloc((n * k if n * k else 1) * sizeof(int))
        self.class_masks = <uint64_t*> malloc((n * k if n * k else 1)
                                              * sizeof(uint64_t))
        self.assign = <int*> malloc((n if n else 1) * sizeof(int))
        if (self.order_c == NULL or self.flat == NULL
                or self.class_masks == NULL or self.assign == NULL):
            raise MemoryError()
        for i in range(n):
            self.order_c[i] = order[i]
        self.max_nodes = max_nodes
        self.max_assignments = max_assignments
        self.assignments = 0
        self.total_nodes = 0
        self.witness = None

    def __dealloc__(self):
        _anchored_free(&self.anc)
        free(self.order_c)
        free(self.flat)
        free(self.class_masks)
        free(self.assign)

    cdef int _leaf_color_rec(self, int pos, long long* nodes) nogil:
        cdef int v, c, j, st
        cdef uint64_t bit, m
        if pos == self.n:
            return C_FOUND
        v = self.order_c[pos]
        bit = (<uint64_t> 1) << v
        for j in range(v * self.k, (v + 1) * self.k):
            c = self.flat[j]
            nodes[0] += 1
            if nodes[0] > self.max_nodes:
                return C_BUDGET
            m = self.class_masks[c] | bit
            if not _feasible(&self.anc, v, m):
                continue
            self.class_masks[c] = m
            self.assign[v] = c
            st = self._leaf_color_rec(pos + 1, nodes)
            if st != C_EXHAUSTED:
                return st
            self.class_masks[c] = m & ~bit
            self.assign[v] = -1
        return C_EXHAUSTED

    cdef int leaf(self):
        cdef long long nodes = 0
        cdef int i, st
        self.assignments += 1
        if self.assignments > self.max_assignments:
            return C_BUDGET
        for i in range(self.n * self.k):
            self.class_masks[i] = 0
        for i in range(self.n):
            self.assign[i] = -1
        st = self._leaf_color_rec(0, &nodes)
        self.total_nodes += nodes
        if st == C_BUDGET:
            return C_BUDGET
        if st == C_EXHAUSTED:
            self.witness = [
                [self.flat[i * self.k + j] for j in range(self.k)]
                for i in range(self.n)
            ]
            return C_EXHAUSTED
        return C_FOUND

    cdef int place(self, int i, list classes, int next_color):
        return self._split(i, 0, self.k, classes, [], [], next_color)

    cdef int _split(self, int i, int j, int remaining, list classes,
                    list new_classes, list taken, int next_color):
        cdef int st, t, f, cap, col
        cdef list cls, part, fresh
        if j == len(classes):
            fresh = []
            for f in range(remaining):
                fresh.append(next_color + f)
            row = taken + fresh
            for t in range(self.k):
                self.flat[i * self.k + t] = row[t]
            nc = new_classes + ([fresh] if fresh else [])
            if i + 1 == self.n:
                st = self.leaf()
            else:
                st = self.place(i + 1, nc, next_color + remaining)
            return st
        cls = classes[j]
        cap = len(cls)
        if remaining < cap:
            cap = remaining
        for t in range(cap + 1):
            part = list(new_classes)
            if t:
                part.append(cls[:t])
            if t < len(cls):
                part.append(cls[t:])
            st = self._split(i, j + 1, remaining - t, classes, part,
                             taken + cls[:t], next_color)
            if st != C_FOUND:
                return st
        return C_FOUND


def search_choosability(anchored, int n, int k, order,
                        long long max_nodes, long long max_assignments):
    if n == 0:
        return (FOUND, None, 0, 0)
    cdef _ChooseState state = _ChooseState(anchored, n, k, order,
                                           max_nodes, max_assignments)
    cdef int st = state.place(0, [], 0)
    if st == C_FOUND:
        return (FOUND, None, state.assignments, state.total_nodes)
    if st == C_EXHAUSTED:
        return (EXHAUSTED, state.witness, state.assignments, state.total_nodes)
    return (BUDGET, None, state.assignments, state.total_nodes)
