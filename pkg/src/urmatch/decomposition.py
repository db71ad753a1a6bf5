"""Gallai-Edmonds decomposition and the bipartite contraction it induces.

``d_set`` is computed by the per-vertex matching-number test: v belongs to it
iff nu(g - v) == nu(g).  The contracted graph ``gb`` keeps the neighbors of
``d_set`` on one side and one vertex per component of the induced subgraph on
``d_set`` on the other; edges inside ``a_set`` and all of ``c_set`` are
dropped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import Graph, connected_components, induced_subgraph
from .matching import (
    is_factor_critical,
    maximum_matching,
    maximum_matching_bipartite,
    missable_vertices,
)


@dataclass(frozen=True)
class GallaiEdmonds:
    """The three vertex classes plus the contracted bipartite graph.

    ``contraction_map[i]`` explains gb vertex i: ``("a", v)`` for an original
    vertex v of ``a_set``, ``("d", k)`` for index k into ``d_components``.
    Component-side ids are assigned after all a-side ids, ordered by the
    lowest original vertex id in each component.
    """

    d_set: frozenset[int]
    a_set: frozenset[int]
    c_set: frozenset[int]
    d_components: tuple[frozenset[int], ...]
    gb: Graph
    gb_sides: tuple[frozenset[int], frozenset[int]]
    contraction_map: tuple[tuple[str, int], ...]


def gallai_edmonds(g: Graph) -> GallaiEdmonds:
    d_set = missable_vertices(g)
    a_set = frozenset(
        v for v in range(g.n)
        if v not in d_set and any(w in d_set for w in g.adj[v])
    )
    c_set = frozenset(range(g.n)) - d_set - a_set

    d_sub, d_map = induced_subgraph(g, d_set)
    d_components = tuple(
        frozenset(d_map[x] for x in comp)
        for comp in connected_components(d_sub)
    )

    a_list = sorted(a_set)
    a_pos = {v: i for i, v in enumerate(a_list)}
    k = len(a_list)
    gb_edges = set()
    for ci, comp in enumerate(d_components):
        for v in comp:
            for w in g.adj[v]:
                if w in a_set:
                    gb_edges.add((a_pos[w], k + ci))
    gb = Graph.from_edges(k + len(d_components), gb_edges)
    gb_sides = (frozenset(range(k)), frozenset(range(k, gb.n)))
    contraction_map = tuple(("a", v) for v in a_list) + tuple(
        ("d", i) for i in range(len(d_components))
    )
    return GallaiEdmonds(d_set, a_set, c_set, d_components, gb, gb_sides, contraction_map)


def verify_gallai_edmonds(g: Graph, ge: GallaiEdmonds) -> bool:
    """Independent certificate check of a claimed decomposition.

    Verifies the partition and contraction structure, then the classical
    structure-theorem consequences: factor-critical components on the deficient
    side, perfectly matchable components on the untouched side, the deficiency
    identity 2 nu(g) = n - (#components - |a_set|), and nu(gb) = |a_set|.
    """
    verts = frozenset(range(g.n))
    if ge.d_set | ge.a_set | ge.c_set != verts:
        return False
    if ge.d_set & ge.a_set or ge.d_set & ge.c_set or ge.a_set & ge.c_set:
        return False
    # a_set must be exactly the outside neighborhood of d_set
    fringe = frozenset(
        v for v in verts - ge.d_set if any(w in ge.d_set for w in g.adj[v])
    )
    if ge.a_set != fringe:
        return False

    d_sub, d_map = induced_subgraph(g, ge.d_set)
    expected = tuple(
        frozenset(d_map[x] for x in comp)
        for comp in connected_components(d_sub)
    )
    if ge.d_components != expected:
        return False

    a_list = sorted(ge.a_set)
    k = len(a_list)
    if ge.gb.n != k + len(ge.d_components):
        return False
    if ge.gb_sides != (frozenset(range(k)), frozenset(range(k, ge.gb.n))):
        return False
    if ge.contraction_map != tuple(("a", v) for v in a_list) + tuple(
        ("d", i) for i in range(len(ge.d_components))
    ):
        return False
    a_pos = {v: i for i, v in enumerate(a_list)}
    gb_edges = set()
    for ci, comp in enumerate(ge.d_components):
        for v in comp:
            for w in g.adj[v]:
                if w in ge.a_set:
                    gb_edges.add((a_pos[w], k + ci))
    if ge.gb.edges != frozenset(gb_edges):
        return False

    for comp in ge.d_components:
        sub, _ = induced_subgraph(g, comp)
        if not is_factor_critical(sub):
            return False
    c_sub, _ = induced_subgraph(g, ge.c_set)
    for comp in connected_components(c_sub):
        sub, _ = induced_subgraph(c_sub, comp)
        if 2 * len(maximum_matching(sub).edges) != sub.n:
            return False

    nu = len(maximum_matching(g).edges)
    if 2 * nu != g.n - (len(ge.d_components) - len(ge.a_set)):
        return False
    if len(maximum_matching_bipartite(ge.gb, ge.gb_sides).edges) != len(ge.a_set):
        return False
    return True
