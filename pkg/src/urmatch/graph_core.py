"""Immutable simple graphs / digraphs and the structural queries shared by all algorithms.

Vertices are dense integer ids ``0..n-1``.  Every operation iterates vertices
and neighbors in ascending id order, so outputs are deterministic for a fixed
input.  Derived graphs (induced subgraphs, vertex deletions) are new values
that carry a map back to the original vertex ids.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable


def edge_key(u: int, v: int) -> tuple[int, int]:
    """Normalize an unordered vertex pair to ``(min, max)``."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no loops, no parallel edges.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``; ``adj`` is an
    ascending-sorted adjacency tuple.  Instances are immutable and hashable.
    Use :meth:`from_edges` to construct one.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        normalized: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            normalized.add(edge_key(u, v))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in normalized:
            nbrs[u].append(v)
            nbrs[v].append(u)
        adj = tuple(tuple(sorted(s)) for s in nbrs)
        return cls(n, frozenset(normalized), adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class Digraph:
    """Directed graph on dense integer ids; arcs are ordered pairs, no loops."""

    n: int
    arcs: frozenset[tuple[int, int]]

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]] = ()) -> "Digraph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        acc: set[tuple[int, int]] = set()
        for u, v in arcs:
            if u == v:
                raise ValueError(f"loop arc at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            acc.add((u, v))
        return cls(n, frozenset(acc))

    def successor_lists(self) -> list[list[int]]:
        succ: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.arcs):
            succ[u].append(v)
        return succ

    def predecessor_lists(self) -> list[list[int]]:
        pred: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.arcs):
            pred[v].append(u)
        return pred


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``vertices``.

    Returns ``(subgraph, id_map)`` where ``id_map[new_id] == original_id``;
    new ids follow ascending original-id order.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(keep)}
    edges = [
        (pos[u], pos[v])
        for u, v in g.edges
        if u in pos and v in pos
    ]
    return Graph.from_edges(len(keep), edges), tuple(keep)


def delete_vertex(g: Graph, v: int) -> tuple[Graph, tuple[int, ...]]:
    """Graph with vertex ``v`` removed; returns ``(subgraph, id_map)``."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return induced_subgraph(g, (u for u in range(g.n) if u != v))

def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Graph with edge ``e`` removed; vertex ids are unchanged."""
    key = edge_key(*e)
    if key not in g.edges:
        raise ValueError(f"edge {key} not in graph")
    return Graph.from_edges(g.n, g.edges - {key})


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest member."""
    seen = [False] * g.n
    out: list[frozenset[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def is_forest(g: Graph) -> bool:
    """True iff the graph contains no cycle."""
    seen = [False] * g.n
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        # BFS; meeting an already-seen vertex other than the parent closes a cycle
        queue = deque([(start, -1)])
        while queue:
            v, parent = queue.popleft()
            for w in g.adj[v]:
                if w == parent:
                    # simple graph: at most one edge back to the parent
                    parent = -1
                    continue
                if seen[w]:
                    return False
                seen[w] = True
                queue.append((w, v))
    return True


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Deterministic 2-coloring ``(A, B)``, or None if the graph is not bipartite.

    In each connected component the lowest-id vertex goes to side A; isolated
    vertices therefore all end up in A.
    """
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    side_a = frozenset(v for v in range(g.n) if color[v] == 0)
    side_b = frozenset(v for v in range(g.n) if color[v] == 1)
    return side_a, side_b


def validate_bipartition(g: Graph, sides: tuple[Iterable[int], Iterable[int]]) -> tuple[frozenset[int], frozenset[int]]:
    """Check that ``sides`` is a valid bipartition of g; returns it as frozensets."""
    side_a, side_b = frozenset(sides[0]), frozenset(sides[1])
    if side_a & side_b:
        raise ValueError("bipartition sides overlap")
    if side_a | side_b != frozenset(range(g.n)):
        raise ValueError("bipartition does not cover all vertices")
    for u, v in g.edges:
        if (u in side_a) == (v in side_a):
            raise ValueError(f"edge ({u}, {v}) lies within one side")
    return side_a, side_b


def biconnected_blocks(g: Graph) -> list[frozenset[tuple[int, int]]]:
    """Edge sets of the biconnected blocks (bridges are single-edge blocks).

    The blocks partition the edge set; isolated vertices contribute none.
    Iterative Hopcroft-Tarjan DFS with an edge stack.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[frozenset[tuple[int, int]]] = []
    edge_stack: list[tuple[int, int]] = []
    clock = 0
    for root in range(n):
        if disc[root] != -1 or g.degree(root) == 0:
            continue
        disc[root] = low[root] = clock
        clock += 1
        frames: list[tuple[int, int, Iterable[int]]] = [(root, -1, iter(g.adj[root]))]
        while frames:
            v, parent, it = frames[-1]
            w = next(it, None)  # type: ignore[arg-type]
            if w is None:
                frames.pop()
                if parent != -1:
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                    if low[v] >= disc[parent]:
                        # parent is an articulation point (or the root): pop one block
                        block = []
                        while True:
                            e = edge_stack.pop()
                            block.append(edge_key(*e))
                            if e == (parent, v):
                                break
                        blocks.append(frozenset(block))
                continue
            if disc[w] == -1:
                edge_stack.append((v, w))
                disc[w] = low[w] = clock
                clock += 1
                frames.append((w, v, iter(g.adj[w])))
            elif w != parent and disc[w] < disc[v]:
                # back edge to a proper ancestor
                edge_stack.append((v, w))
                if disc[w] < low[v]:
                    low[v] = disc[w]
    return blocks


def blocks_are_odd_cycles(g: Graph) -> bool:
    """True iff every block of the (connected) graph is an odd cycle.

    A single vertex has no blocks and yields True.  Disconnected input is
    rejected: the question is only posed for connected graphs here.
    """
    if len(connected_components(g)) != 1:
        raise ValueError("blocks_are_odd_cycles requires a connected graph")
    for block in biconnected_blocks(g):
        verts = set()
        for u, v in block:
            verts.add(u)
            verts.add(v)
        # a 2-connected block is a cycle iff |E| == |V|; a bridge never is
        if len(block) != len(verts) or len(block) % 2 == 0:
            return False
    return True
