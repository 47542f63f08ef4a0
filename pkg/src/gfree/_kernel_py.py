"""Pure-Python search kernels.

These are the hot inner loops: partition search, list-coloring search, and
the canonical enumeration of list assignments for choosability.  A compiled
twin lives in ``_speedups.pyx``; both implementations must produce identical
results, including node counts, so that budgets behave the same whichever
one is loaded.

Conventions shared by both implementations:

* ``anchored[v]`` is the sequence of minimal bad vertex-set masks containing
  vertex ``v``.  Placing ``v`` in a class with mask ``m`` is feasible iff no
  such mask is a subset of ``m | 1<<v``.
* A *node* is one attempted (vertex, class/color) placement; searches report
  status 2 as soon as the node count exceeds the budget.
* Status codes: 0 = solution found, 1 = exhausted with no solution,
  2 = budget exceeded.
"""

from __future__ import annotations

IMPLEMENTATION = "python"

FOUND = 0
EXHAUSTED = 1
BUDGET = 2


def search_partition(anchored, k, order, max_nodes):
    """First k-class partition with every class free, in canonical branch
    order: vertices per ``order``, classes in index order, a new class only
    after all open ones (standard symmetry breaking).

    Returns ``(status, assignment_or_None, nodes)``.
    """
    n = len(order)
    class_masks = [0] * k
    assign = [-1] * len(anchored)
    nodes = 0

    def rec(pos, used):
        nonlocal nodes
        if pos == n:
            return FOUND
        v = order[pos]
        bit = 1 << v
        anc = anchored[v]
        limit = used + 1 if used < k else k
        for c in range(limit):
            nodes += 1
            if nodes > max_nodes:
                return BUDGET
            m = class_masks[c] | bit
            ok = True
            for f in anc:
                if not f & ~m:
                    ok = False
                    break
            if not ok:
                continue
            class_masks[c] = m
            assign[v] = c
            st = rec(pos + 1, used + 1 if c == used else used)
            if st != EXHAUSTED:
                return st
            class_masks[c] &= ~bit
            assign[v] = -1
        return EXHAUSTED

    st = rec(0, 0)
    return (st, list(assign) if st == FOUND else None, nodes)


def search_list_coloring(anchored, lists, order, max_nodes):
    """First list coloring (colors are fixed identities, tried in list order)
    with every color class free.  ``lists[v]`` is a sequence of dense color
    ids.  Returns ``(status, assignment_or_None, nodes)``.
    """
    n = len(order)
    ncolors = 0
    for lv in lists:
        for c in lv:
            if c + 1 > ncolors:
                ncolors = c + 1
    class_masks = [0] * ncolors
    assign = [-1] * len(anchored)
    nodes = 0

    def rec(pos):
        nonlocal nodes
        if pos == n:
            return FOUND
        v = order[pos]
        bit = 1 << v
        anc = anchored[v]
        for c in lists[v]:
            nodes += 1
            if nodes > max_nodes:
                return BUDGET
            m = class_masks[c] | bit
            ok = True
            for f in anc:
                if not f & ~m:
                    ok = False
                    break
            if not ok:
                continue
            class_masks[c] = m
            assign[v] = c
            st = rec(pos + 1)
            if st != EXHAUSTED:
                return st
            class_masks[c] = m & ~bit
            assign[v] = -1
        return EXHAUSTED

    st = rec(0)
    return (st, list(assign) if st == FOUND else None, nodes)


def search_choosability(anchored, n, k, order, max_nodes, max_assignments):
    """Decide k-choosability by enumerating list assignments up to color
    renaming and list-coloring each one.

    Colors are grouped into classes with identical membership signature over
    the vertices processed so far; for each vertex we choose how many colors
    to take from each class plus how many fresh ones, which enumerates exactly
    one representative per renaming orbit.  First counterexample (in this
    canonical order) wins.

    Returns ``(status, witness_lists_or_None, assignments, nodes)`` where
    status 0 means k-choosable, 1 means the witness assignment admits no
    coloring, and 2 means a budget was exceeded.  ``max_nodes`` bounds each
    per-assignment coloring search; ``max_assignments`` bounds the number of
    assignments tested.
    """
    lists: list[list[int]] = [[] for _ in range(n)]
    assignments = 0
    total_nodes = 0
    witness = None

    def leaf():
        nonlocal assignments, total_nodes, witness
        assignments += 1
        if assignments > max_assignments:
            return BUDGET
        st, _, nodes = search_list_coloring(anchored, lists, order, max_nodes)
        total_nodes += nodes
        if st == BUDGET:
            return BUDGET
        if st == EXHAUSTED:
            witness = [list(lv) for lv in lists]
            return EXHAUSTED
        return FOUND

    def place(i, classes, next_color):
        # choose (t_1..t_m, fresh) with sum k, 0 <= t_j <= |class_j|
        def split(j, remaining, new_classes, taken):
            nonlocal next_color
            if j == len(classes):
                fresh = []
                for _ in range(remaining):
                    fresh.append(next_color)
                    next_color += 1
                lists[i].extend(taken)
                lists[i].extend(fresh)
                nc = new_classes + ([fresh] if fresh else [])
                if i + 1 == n:
                    st = leaf()
                else:
                    st = place(i + 1, nc, next_color)
                del lists[i][:]
                next_color -= len(fresh)
                return st
            cls = classes[j]
            for t in range(min(len(cls), remaining) + 1):
                part = new_classes[:]
                if t:
                    part.append(cls[:t])
                if t < len(cls):
                    part.append(cls[t:])
                st = split(j + 1, remaining - t, part, taken + cls[:t])
                if st != FOUND:
                    return st
            return FOUND

        return split(0, k, [], [])

    if n == 0:
        return (FOUND, None, 0, 0)
    st = place(0, [], 0)
    if st == FOUND:
        return (FOUND, None, assignments, total_nodes)
    if st == EXHAUSTED:
        return (EXHAUSTED, witness, assignments, total_nodes)
    return (BUDGET, None, assignments, total_nodes)
