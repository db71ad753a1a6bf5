"""Deciders for the two graph-level properties.

``some_ur``: does some maximum matching of g admit no second matching on the
same vertex set?  ``every_ur``: do all of them?  Both reduce to structural
conditions on the Gallai-Edmonds decomposition; yes-instances of ``some_ur``
come with an explicit witness matching that callers can re-verify.

Failure tags form a closed set of stable strings; a report names the first
violated condition, and all violated conditions when diagnostics are requested.
"""

from __future__ import annotations

from dataclasses import dataclass

from .accessibility import find_e_good_ordering
from .decomposition import GallaiEdmonds, gallai_edmonds
from .graph_core import (
    Graph,
    bipartition,
    blocks_are_odd_cycles,
    connected_components,
    edge_key,
    induced_subgraph,
    is_forest,
)
from .matching import (
    Matching,
    edge_in_some_maximum_matching,
    max_independent_set_bipartite,
    maximum_matching_bipartite,
    unique_perfect_matching,
)
from .ur_core import build_matching_digraph, is_acyclic

C_COMPONENT_PM_NOT_UNIQUE = "c_component_pm_not_unique"
GB_NO_UR_MATCHING_WITHIN_E = "gb_no_ur_matching_within_E"
D_COMPONENT_NO_UNIQUE_PM_VERTEX = "d_component_no_unique_pm_vertex"
D_COMPONENT_BLOCKS_NOT_ODD_CYCLES = "d_component_blocks_not_odd_cycles"
GB_EVERY_MAX_MATCHING_NOT_UR = "gb_every_max_matching_not_ur"
GB_EDGE_MULTIPLE_NEIGHBORS = "gb_edge_multiple_neighbors"
GB_DIGRAPH_CYCLIC = "gb_digraph_cyclic"
V_PLUS_NOT_FOREST = "v_plus_not_forest"
V_MINUS_NOT_FOREST = "v_minus_not_forest"

FAILURE_TAGS = frozenset({
    C_COMPONENT_PM_NOT_UNIQUE,
    GB_NO_UR_MATCHING_WITHIN_E,
    D_COMPONENT_NO_UNIQUE_PM_VERTEX,
    D_COMPONENT_BLOCKS_NOT_ODD_CYCLES,
    GB_EVERY_MAX_MATCHING_NOT_UR,
    GB_EDGE_MULTIPLE_NEIGHBORS,
    GB_DIGRAPH_CYCLIC,
    V_PLUS_NOT_FOREST,
    V_MINUS_NOT_FOREST,
})


class InternalCheckError(RuntimeError):
    """Two supposedly equivalent internal routes disagreed."""


@dataclass(frozen=True)
class AllowedEdgeSet:
    """Edges of gb eligible to carry a uniquely restricted matching.

    A gb edge between a-side vertex (for original vertex a) and a component H
    qualifies iff a has exactly one neighbor h inside H and H - h has a unique
    perfect matching.
    """

    edges: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class RecognitionReport:
    property: str  # "some_ur" | "every_ur"
    answer: bool
    witness: Matching | None = None
    failure: str | None = None
    failures: tuple[str, ...] = ()


def _gb_edge_parts(ge: GallaiEdmonds, e: tuple[int, int]) -> tuple[int, frozenset[int]]:
    """Original a-vertex and component vertex set for one gb edge."""
    x, y = e
    ia, ih = (x, y) if x in ge.gb_sides[0] else (y, x)
    kind, a = ge.contraction_map[ia]
    assert kind == "a"
    _, ci = ge.contraction_map[ih]
    return a, ge.d_components[ci]


def _unique_component_neighbor(g: Graph, a: int, comp: frozenset[int]) -> int | None:
    nbrs = [w for w in g.adj[a] if w in comp]
    return nbrs[0] if len(nbrs) == 1 else None


def allowed_edges(g: Graph, ge: GallaiEdmonds) -> AllowedEdgeSet:
    out = set()
    for e in ge.gb.sorted_edges():
        a, comp = _gb_edge_parts(ge, e)
        h = _unique_component_neighbor(g, a, comp)
        if h is None:
            continue
        sub, _ = induced_subgraph(g, comp - {h})
        if unique_perfect_matching(sub) is not None:
            out.add(e)
    return AllowedEdgeSet(frozenset(out))


def _c_component_subgraphs(g: Graph, ge: GallaiEdmonds):
    c_sub, c_map = induced_subgraph(g, ge.c_set)
    for comp in connected_components(c_sub):
        sub, sub_map = induced_subgraph(c_sub, comp)
        yield sub, tuple(c_map[x] for x in sub_map)


def some_ur(g: Graph, *, ge: GallaiEdmonds | None = None, all_failures: bool = False) -> RecognitionReport:
    """Decide whether some maximum matching of g is uniquely restricted.

    Yes-answers carry a witness built from the unique perfect matchings of the
    untouched components, one graph edge per matched contracted edge, and a
    near-perfect matching inside every deficient component.
    """
    if ge is None:
        ge = gallai_edmonds(g)
    failures: list[str] = []

    # condition 1: every untouched component has a unique perfect matching
    c_matchings: list[tuple[Matching, tuple[int, ...]]] = []
    for sub, back in _c_component_subgraphs(g, ge):
        upm = unique_perfect_matching(sub)
        if upm is None:
            failures.append(C_COMPONENT_PM_NOT_UNIQUE)
            if not all_failures:
                return RecognitionReport("some_ur", False, None, failures[0], tuple(failures))
            break
        c_matchings.append((upm, back))

    # condition 2: gb has a maximum uniquely restricted matching inside the
    # eligible edges; equivalent to an ordering of a maximum independent set
    eligible = allowed_edges(g, ge)
    i_max = max_independent_set_bipartite(ge.gb, ge.gb_sides)
    ordering = find_e_good_ordering(ge.gb, ge.gb_sides, i_max, eligible.edges)
    if ordering is None:
        failures.append(GB_NO_UR_MATCHING_WITHIN_E)
        if not all_failures:
            return RecognitionReport("some_ur", False, None, failures[0], tuple(failures))

    # condition 3: every deficient component has a vertex whose deletion
    # leaves a unique perfect matching
    chosen_h: dict[int, int] = {}
    cond3_ok = True
    for ci, comp in enumerate(ge.d_components):
        found = None
        for h in sorted(comp):
            sub, _ = induced_subgraph(g, comp - {h})
            if unique_perfect_matching(sub) is not None:
                found = h
                break
        if found is None:
            cond3_ok = False
            failures.append(D_COMPONENT_NO_UNIQUE_PM_VERTEX)
            if not all_failures:
                return RecognitionReport("some_ur", False, None, failures[0], tuple(failures))
            break
        chosen_h[ci] = found

    if failures:
        return RecognitionReport("some_ur", False, None, failures[0], tuple(failures))
    assert ordering is not None and cond3_ok

    # assemble the witness
    witness_edges: set[tuple[int, int]] = set()
    for upm, back in c_matchings:
        for u, v in upm.edges:
            witness_edges.add(edge_key(back[u], back[v]))
    k = len(ge.a_set)
    for e in sorted(ordering.induced_matching.edges):
        a, comp = _gb_edge_parts(ge, e)
        h = _unique_component_neighbor(g, a, comp)
        assert h is not None  # the ordering only uses eligible edges
        witness_edges.add(edge_key(a, h))
        ia, ih = (e[0], e[1]) if e[0] in ge.gb_sides[0] else (e[1], e[0])
        chosen_h[ih - k] = h
    for ci, comp in enumerate(ge.d_components):
        h = chosen_h[ci]
        sub, back = induced_subgraph(g, comp - {h})
        upm = unique_perfect_matching(sub)
        assert upm is not None
        for u, v in upm.edges:
            witness_edges.add(edge_key(back[u], back[v]))
    witness = Matching.from_edges(g, sorted(witness_edges))
    return RecognitionReport("some_ur", True, witness, None, ())


def every_ur_bipartite(g: Graph, sides, *, all_failures: bool = False) -> RecognitionReport:
    """Bipartite decider: every maximum matching is uniquely restricted iff the
    orientation of one maximum matching is acyclic and both reachability
    closures induce forests.  The closures do not depend on which maximum
    matching is chosen."""
    m = maximum_matching_bipartite(g, sides)
    md = build_matching_digraph(g, sides, m)
    failures: list[str] = []
    if not is_acyclic(md.d):
        failures.append(GB_DIGRAPH_CYCLIC)
        if not all_failures:
            return RecognitionReport("every_ur", False, None, failures[0], tuple(failures))
    plus_sub, _ = induced_subgraph(g, md.v_plus)
    if not is_forest(plus_sub):
        failures.append(V_PLUS_NOT_FOREST)
        if not all_failures:
            return RecognitionReport("every_ur", False, None, failures[0], tuple(failures))
    minus_sub, _ = induced_subgraph(g, md.v_minus)
    if not is_forest(minus_sub):
        failures.append(V_MINUS_NOT_FOREST)
        if not all_failures:
            return RecognitionReport("every_ur", False, None, failures[0], tuple(failures))
    if failures:
        return RecognitionReport("every_ur", False, None, failures[0], tuple(failures))
    return RecognitionReport("every_ur", True, None, None, ())


def _component_all_near_perfect_unique(g: Graph, comp: frozenset[int]) -> bool:
    """Definitional form of the deficient-component condition: deleting any one
    vertex must leave a unique perfect matching."""
    for h in sorted(comp):
        sub, _ = induced_subgraph(g, comp - {h})
        if unique_perfect_matching(sub) is None:
            return False
    return True


def every_ur(
    g: Graph,
    *,
    ge: GallaiEdmonds | None = None,
    all_failures: bool = False,
    route_bipartite: bool = True,
    cross_validate: bool = False,
) -> RecognitionReport:
    """Decide whether every maximum matching of g is uniquely restricted.

    Bipartite inputs are routed to the direct bipartite decider unless
    ``route_bipartite`` is off (the two routes agree; tests compare them).
    ``cross_validate`` re-checks the deficient-component block test against
    the definitional per-vertex form and raises on any disagreement.
    """
    if route_bipartite:
        parts = bipartition(g)
        if parts is not None:
            return every_ur_bipartite(g, parts, all_failures=all_failures)

    if ge is None:
        ge = gallai_edmonds(g)
    failures: list[str] = []

    for sub, _back in _c_component_subgraphs(g, ge):
        if unique_perfect_matching(sub) is None:
            failures.append(C_COMPONENT_PM_NOT_UNIQUE)
            if not all_failures:
                return RecognitionReport("every_ur", False, None, failures[0], tuple(failures))
            break

    for comp in ge.d_components:
        sub, _ = induced_subgraph(g, comp)
        by_blocks = blocks_are_odd_cycles(sub)
        if cross_validate:
            by_definition = _component_all_near_perfect_unique(g, comp)
            if by_blocks != by_definition:
                raise InternalCheckError(
                    f"block test ({by_blocks}) and per-vertex test ({by_definition}) "
                    f"disagree on component {sorted(comp)}"
                )
        if not by_blocks:
            failures.append(D_COMPONENT_BLOCKS_NOT_ODD_CYCLES)
            if not all_failures:
                return RecognitionReport("every_ur", False, None, failures[0], tuple(failures))
            break

    gb_report = every_ur_bipartite(ge.gb, ge.gb_sides, all_failures=all_failures)
    if not gb_report.answer:
        failures.append(GB_EVERY_MAX_MATCHING_NOT_UR)
        if not all_failures:
            return RecognitionReport("every_ur", False, None, failures[0], tuple(failures))

    for e in ge.gb.sorted_edges():
        if not edge_in_some_maximum_matching(ge.gb, e):
            continue
        a, comp = _gb_edge_parts(ge, e)
        if _unique_component_neighbor(g, a, comp) is None:
            failures.append(GB_EDGE_MULTIPLE_NEIGHBORS)
            if not all_failures:
                return RecognitionReport("every_ur", False, None, failures[0], tuple(failures))
            break

    if failures:
        return RecognitionReport("every_ur", False, None, failures[0], tuple(failures))
    return RecognitionReport("every_ur", True, None, None, ())
