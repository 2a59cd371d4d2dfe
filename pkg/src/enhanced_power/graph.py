"""Enhanced power graphs, universal vertices and K(G).

Two vertices (non-identity elements) are adjacent when the subgroup they
generate is cyclic. Since every cyclic subgroup lies in a maximal cyclic
subgroup, the graph is the union of cliques on the maximal cyclic subgroups,
which is how :func:`build_graph` constructs it.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .groups import (
    ElementSet,
    Group,
    GroupError,
    generated_subgroup,
    is_cyclic,
    prime_factors,
    unique_subgroup_order_p,
)

INFINITE = math.inf


def maximal_cyclic_subgroups(G: Group) -> list[ElementSet]:
    """Distinct maximal cyclic subgroups, ordered by least generator id."""
    M = G.cyclic_membership
    order = G.element_order
    # <g> is not maximal iff g lies in some <h> with |<h>| > |<g>|
    bigger = order[:, None] > order[None, :]
    dominated = (M & bigger).any(axis=0)
    out, seen = [], set()
    for g in np.flatnonzero(~dominated):
        S = ElementSet.from_bool(G, M[g])
        if S.mask not in seen:
            seen.add(S.mask)
            out.append(S)
    return out


@dataclass(frozen=True, eq=False)
class EPGraph:
    """Enhanced power graph on the non-identity elements of ``group``.

    ``adjacency`` is an ``n x n`` boolean matrix indexed by element id; row and
    column 0 (the identity) are unused and always false.
    """

    group: Group
    adjacency: np.ndarray

    @property
    def vertices(self) -> range:
        return range(1, self.group.n)

    def adjacent(self, x: int, y: int) -> bool:
        return bool(self.adjacency[x, y])

    def neighbors(self, x: int) -> list[int]:
        return np.flatnonzero(self.adjacency[x]).tolist()

    def degree(self, x: int) -> int:
        return int(self.adjacency[x].sum())

    def edges(self) -> list[tuple[int, int]]:
        xs, ys = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(xs.tolist(), ys.tolist()))

    @property
    def edge_count(self) -> int:
        return int(np.triu(self.adjacency, 1).sum())

    @cached_property
    def universal_vertices(self) -> list[int]:
        deg = self.adjacency.sum(axis=1)
        return [v for v in self.vertices if deg[v] == self.group.n - 2]


def build_graph(G: Group) -> EPGraph:
    if G.n < 2:
        raise GroupError("the enhanced power graph of the trivial group has no vertices")
    cached = G.__dict__.get("_epgraph")
    if cached is not None:
        return cached
    maxcyc = maximal_cyclic_subgroups(G)
    B = np.array([S.bool_array for S in maxcyc], dtype=np.float32)
    A = (B.T @ B) > 0
    A[0, :] = False
    A[:, 0] = False
    np.fill_diagonal(A, False)
    A.setflags(write=False)
    graph = EPGraph(G, A)
    G.__dict__["_epgraph"] = graph
    return graph


def adjacency_by_closure(G: Group) -> np.ndarray:
    """Adjacency straight from the definition: ``<x, y>`` generated and tested.

    Quadratic in ``|G|`` subgroup closures; a reference for small groups.
    """
    n = G.n
    A = np.zeros((n, n), dtype=bool)
    for x in range(1, n):
        for y in range(x + 1, n):
            if is_cyclic(generated_subgroup(G, [x, y]))[0]:
                A[x, y] = A[y, x] = True
    return A


@dataclass(frozen=True)
class KResult:
    members: ElementSet
    method: str
    trivial_group_convention: bool = False

    @property
    def order(self) -> int:
        return len(self.members)


def k_subgroup(G: Group, method: str = "universal") -> KResult:
    """K(G): universal vertices plus the identity, or the intersection of maximal cyclics."""
    if method not in ("universal", "intersection"):
        raise ValueError(f"unknown method {method!r}")
    if G.n == 1:
        return KResult(G.whole(), method, trivial_group_convention=True)
    if method == "universal":
        members = G.element_set([0, *build_graph(G).universal_vertices])
    else:
        mask = G.whole().mask
        for S in maximal_cyclic_subgroups(G):
            mask &= S.mask
        members = ElementSet(G, mask)
    return KResult(members, method)


def k_prime_divisors_structural(G: Group) -> set[int]:
    """Primes p for which G has a unique, central subgroup of order p."""
    return {p for p in prime_factors(G.n) if all(unique_subgroup_order_p(G, p))}


def diameter(graph: EPGraph) -> float | int:
    """Largest shortest-path distance, or ``INFINITE`` if disconnected.

    Runs a breadth-first search from every vertex at once by growing the
    reachability matrix one level at a time.
    """
    n = graph.group.n
    if n < 2:
        raise GroupError("diameter of an empty graph")
    step = graph.adjacency[1:, 1:].astype(np.float32)
    np.fill_diagonal(step, 1.0)
    reach = np.eye(n - 1, dtype=bool)
    d = 0
    while not reach.all():
        grown = (reach.astype(np.float32) @ step) > 0
        if (grown == reach).all():
            return INFINITE
        reach = grown
        d += 1
    return d


def distances_from(graph: EPGraph, source: int) -> dict[int, int]:
    """Plain single-source BFS distances over the vertices reachable from ``source``."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in graph.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def export_dot(graph: EPGraph, *, name: str | None = None, highlight_universal: bool = True) -> str:
    """Graphviz text for the graph, with nodes and edges in ascending id order."""
    G = graph.group
    title = name or f"Delta({G.name})"
    universal = set(graph.universal_vertices)
    lines = [f'graph "{title}" {{']
    for v in graph.vertices:
        attrs = f'label="{v} (o={G.element_order[v]})"'
        if highlight_universal and v in universal:
            attrs += ", style=filled, fillcolor=gold"
        lines.append(f"  {v} [{attrs}];")
    for x, y in graph.edges():
        lines.append(f"  {x} -- {y};")
    lines.append("}")
    return "\n".join(lines) + "\n"
