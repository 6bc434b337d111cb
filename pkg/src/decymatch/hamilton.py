"""Backtracking Hamiltonian path and cycle searches for small graphs.

Neighbors are tried in ascending order, so the first path found is the
lexicographically least vertex sequence from its start vertex and results are
reproducible. The budgeted variants count search-tree nodes and report
honestly whether the space was exhausted; worst case is exponential.
"""

from __future__ import annotations

import sys

from .core import Graph


class _BudgetExhausted(Exception):
    pass


def _ensure_recursion(n: int) -> None:
    need = 2 * n + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def ham_path_between(g: Graph, s: int, t: int, budget: int = 10**7):
    """Hamiltonian s-t path search with pruning.

    Returns (path, completed, nodes): path is the vertex list or None;
    completed is False when the node budget ran out before the space was
    exhausted (path is then None and the answer is unknown).
    """
    n = g.n
    if s == t or n == 0:
        raise ValueError("endpoints must be two distinct vertices")
    if n == 2:
        ok = g.has_edge(s, t)
        return ([s, t] if ok else None, True, 1)
    _ensure_recursion(n)
    adj = g.adj
    visited = bytearray(n)
    visited[s] = 1
    path = [s]
    nodes = 0

    def viable(current: int) -> bool:
        # an unvisited vertex other than t sits interior to the remaining
        # path, so it needs 2 connections among {current} + unvisited; t
        # needs 1; and everything left must be reachable from current
        for v in range(n):
            if visited[v]:
                continue
            avail = 0
            for w in adj[v]:
                if w == current or not visited[w]:
                    avail += 1
                    if avail == 2:
                        break
            if avail < (1 if v == t else 2):
                return False
        seen = bytearray(n)
        seen[current] = 1
        stack = [current]
        count = 0
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not visited[y] and not seen[y]:
                    seen[y] = 1
                    count += 1
                    stack.append(y)
        return count == n - len(path)

    def dfs(v: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _BudgetExhausted
        if len(path) == n:
            return v == t
        if not viable(v):
            return False
        for w in adj[v]:
            if visited[w]:
                continue
            if w == t and len(path) != n - 1:
                continue
            visited[w] = 1
            path.append(w)
            if dfs(w):
                return True
            visited[w] = 0
            path.pop()
        return False

    try:
        found = dfs(s)
    except _BudgetExhausted:
        return None, False, nodes
    return (list(path) if found else None, True, nodes)


def ham_cycle(g: Graph, budget: int = 10**7):
    """A Hamiltonian cycle as a vertex list (closure edge implied), or None.
    Same (cycle, completed, nodes) contract as ham_path_between."""
    n = g.n
    if n < 3:
        return None, True, 0
    _ensure_recursion(n)
    adj = g.adj
    start = 0
    visited = bytearray(n)
    visited[start] = 1
    path = [start]
    nodes = 0
    start_adj = set(adj[start])

    def dfs(v: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _BudgetExhausted
        if len(path) == n:
            return v in start_adj
        seen = bytearray(n)
        seen[v] = 1
        stack = [v]
        count = 0
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not visited[y] and not seen[y]:
                    seen[y] = 1
                    count += 1
                    stack.append(y)
        if count != n - len(path):
            return False
        for w in adj[v]:
            if not visited[w]:
                visited[w] = 1
                path.append(w)
                if dfs(w):
                    return True
                visited[w] = 0
                path.pop()
        return False

    try:
        found = dfs(start)
    except _BudgetExhausted:
        return None, False, nodes
    return (list(path) if found else None, True, nodes)


def ham_cycle_through_edge(g: Graph, e, budget: int = 10**7):
    """Hamiltonian cycle containing the edge e, or None; same contract."""
    from .core import norm_edge, remove_edges

    u, v = norm_edge(*e)
    if not g.has_edge(u, v):
        raise ValueError(f"edge {e} not in graph")
    if g.n == 3:
        w = next(x for x in range(3) if x not in (u, v))
        if g.has_edge(u, w) and g.has_edge(v, w):
            return [u, v, w], True, 1
        return None, True, 1
    reduced = remove_edges(g, [(u, v)])
    return ham_path_between(reduced, u, v, budget)


def all_ham_paths_in_subset(g: Graph, allowed, starts, ends) -> list[tuple[int, ...]]:
    """Every Hamiltonian path of the induced subgraph on `allowed` that starts
    in `starts` and ends in `ends`, in (start, sequence) lex order. Exhaustive,
    no budget; caller bounds the size."""
    allowed = set(allowed)
    total = len(allowed)
    adj = g.adj
    out: list[tuple[int, ...]] = []
    ends = set(ends)

    def rec(v, path, used):
        if len(path) == total:
            if v in ends and len(path) > 1:
                out.append(tuple(path))
            return
        for w in adj[v]:
            if w in allowed and w not in used:
                used.add(w)
                path.append(w)
                rec(w, path, used)
                path.pop()
                used.remove(w)

    for s in sorted(set(starts) & allowed):
        rec(s, [s], {s})
    return out
