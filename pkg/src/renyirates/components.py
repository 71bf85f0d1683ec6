"""Associated graph, strongly connected components, and reachability.

The associated graph of a non-negative matrix has an edge i -> j exactly
when the entry (i, j) is strictly positive.  Its SCC partition is the
canonical decomposition into irreducible blocks; components are returned
in topological order of the condensation DAG.  The reachable set from a
weight vector's support singles out the components that govern the
growth of u^T A^n 1.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import DimensionMismatch
from .nonneg import NonnegMatrix


@dataclass(frozen=True)
class ComponentDecomposition:
    """SCC partition with condensation edges and optional reachability."""

    components: tuple[tuple[int, ...], ...]
    component_of: tuple[int, ...]
    dag_edges: frozenset[tuple[int, int]]
    reachable: frozenset[int] | None = None

    @property
    def n_components(self) -> int:
        return len(self.components)


def associated_graph(a: NonnegMatrix) -> list[list[int]]:
    """Successor lists of the associated graph (strict positivity pattern)."""
    adj: list[list[int]] = [[] for _ in range(a.dim)]
    for i, j, _ in a.entries():
        adj[i].append(j)
    return adj


def _tarjan(adj: list[list[int]]) -> list[list[int]]:
    """Iterative Tarjan SCC; emits components in reverse topological order."""
    n = len(adj)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while pi < len(adj[v]):
                w = adj[v][pi]
                pi += 1
                if index[w] == -1:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])
    return comps


def strongly_connected_components(a: NonnegMatrix) -> ComponentDecomposition:
    """Canonical decomposition of the associated graph, topologically ordered."""
    adj = associated_graph(a)
    comps = _tarjan(adj)
    comps.reverse()  # Tarjan emits sinks first
    component_of = [0] * a.dim
    for cid, comp in enumerate(comps):
        for v in comp:
            component_of[v] = cid
    edges = set()
    for i, j, _ in a.entries():
        ci, cj = component_of[i], component_of[j]
        if ci != cj:
            edges.add((ci, cj))
    return ComponentDecomposition(
        components=tuple(tuple(c) for c in comps),
        component_of=tuple(component_of),
        dag_edges=frozenset(edges),
    )


def reachable_components(decomp: ComponentDecomposition, u: np.ndarray) -> frozenset[int]:
    """Component ids reachable (reflexively) from the support of u."""
    u = np.asarray(u, dtype=float)
    if u.shape[0] != len(decomp.component_of):
        raise DimensionMismatch("weight vector length does not match decomposition")
    succ: dict[int, list[int]] = {}
    for a, b in decomp.dag_edges:
        succ.setdefault(a, []).append(b)
    seen = {decomp.component_of[i] for i in np.flatnonzero(u > 0)}
    frontier = list(seen)
    while frontier:
        c = frontier.pop()
        for d in succ.get(c, ()):
            if d not in seen:
                seen.add(d)
                frontier.append(d)
    return frozenset(seen)


def with_reachability(decomp: ComponentDecomposition, u: np.ndarray) -> ComponentDecomposition:
    return replace(decomp, reachable=reachable_components(decomp, u))


def component_submatrix(a: NonnegMatrix, nodes) -> NonnegMatrix:
    """Principal submatrix on the given node set, in sorted index order."""
    return a.submatrix(sorted(nodes))
