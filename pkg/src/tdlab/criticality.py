"""1-uniqueness and the three criticality notions, plus the JSON-friendly
per-graph report.

A vertex is 1-unique iff the star-clique transform at it strictly lowers
tree-depth; the transform turns the open neighborhood into a clique and
deletes the vertex. Minor-criticality only needs single-step minors: if some
deeper minor dropped the depth, monotonicity means a single deletion or
contraction on the way there already did.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .graphs import Graph
from .labelings import T_UNIQUE_MAX_N, T_UNIQUE_MAX_TD, t_uniqueness
from .solver import MAX_VERTICES, tree_depth, tree_depth_decision


def is_one_unique_vertex(g: Graph, v: int) -> bool:
    value = tree_depth(g).value
    return tree_depth_decision(g.star_clique_transform(v), value - 1)


def one_unique_vertices(g: Graph) -> tuple[bool, ...]:
    if g.n == 0:
        return ()
    value = tree_depth(g).value
    return tuple(
        tree_depth_decision(g.star_clique_transform(v), value - 1) for v in range(g.n)
    )


def is_one_unique(g: Graph) -> bool:
    """Every vertex 1-unique (vacuously true for the empty graph)."""
    return all(one_unique_vertices(g))


def _all_edges_lower(g: Graph, value: int) -> bool:
    return all(tree_depth_decision(g.delete_edge(u, v), value - 1) for u, v in g.edges())


def _all_vertices_lower(g: Graph, value: int) -> bool:
    return all(tree_depth_decision(g.delete_vertex(v), value - 1) for v in range(g.n))


def _contractions_lower(g: Graph, value: int, skip_one_unique: bool) -> bool:
    if skip_one_unique:
        ou = one_unique_vertices(g)
        edges = [(u, v) for u, v in g.edges() if not ou[u] and not ou[v]]
    else:
        edges = g.edges()
    return all(tree_depth_decision(g.contract_edge(u, v), value - 1) for u, v in edges)


def is_subgraph_critical(g: Graph) -> bool:
    """Every single edge deletion strictly lowers tree-depth."""
    if g.n == 0:
        raise ValueError("criticality is defined for nonempty graphs")
    return _all_edges_lower(g, tree_depth(g).value)


def is_induced_subgraph_critical(g: Graph) -> bool:
    """Every single vertex deletion strictly lowers tree-depth."""
    if g.n == 0:
        raise ValueError("criticality is defined for nonempty graphs")
    return _all_vertices_lower(g, tree_depth(g).value)


def is_minor_critical(g: Graph, shortcut: bool = False) -> bool:
    """Every single edge deletion, edge contraction, and vertex deletion
    strictly lowers tree-depth.

    With shortcut=True, contractions of edges incident to a 1-unique vertex
    are skipped (they are guaranteed to lower the depth); the search harness
    cross-validates the shortcut against the full check on small graphs.
    """
    if g.n == 0:
        raise ValueError("criticality is defined for nonempty graphs")
    value = tree_depth(g).value
    return (
        _all_edges_lower(g, value)
        and _all_vertices_lower(g, value)
        and _contractions_lower(g, value, skip_one_unique=shortcut)
    )


def critical_spanning_subgraph(g: Graph) -> Graph:
    """Greedy fixed point of depth-preserving edge deletion: repeatedly
    delete the first edge (ascending (u, v) order) whose removal keeps
    tree-depth unchanged, restarting after each deletion."""
    value = tree_depth(g).value
    h = g
    changed = True
    while changed:
        changed = False
        for u, v in h.edges():
            if not tree_depth_decision(h.delete_edge(u, v), value - 1):
                h = h.delete_edge(u, v)
                changed = True
                break
    return h


@dataclass(frozen=True)
class CriticalityReport:
    """Everything the search pipeline records per graph.

    Deltas are td(g) minus the depth after the operation. min_t entries are
    None either when no optimal labeling isolates the vertex at any label or
    when the instance exceeds the t_uniqueness cap (n <= 10, td <= 6); the
    criticality booleans and one_unique flags are always exact.
    conjecture_checks: "order" is n <= 2^(td-1), "maxdeg" is
    max degree <= td - 1.
    """

    td: int
    surplus: int
    edge_deletion_deltas: tuple[tuple[int, int, int], ...]
    contraction_deltas: tuple[tuple[int, int, int], ...]
    vertex_deletion_deltas: tuple[int, ...]
    one_unique: tuple[bool, ...]
    min_t: tuple[int | None, ...]
    is_minor_critical: bool
    is_subgraph_critical: bool
    is_induced_subgraph_critical: bool
    is_one_unique_graph: bool
    conjecture_checks: dict[str, bool]

    def to_dict(self) -> dict[str, Any]:
        return {
            "td": self.td,
            "surplus": self.surplus,
            "edge_deletion_deltas": [list(t) for t in self.edge_deletion_deltas],
            "contraction_deltas": [list(t) for t in self.contraction_deltas],
            "vertex_deletion_deltas": list(self.vertex_deletion_deltas),
            "one_unique": list(self.one_unique),
            "min_t": list(self.min_t),
            "is_minor_critical": self.is_minor_critical,
            "is_subgraph_critical": self.is_subgraph_critical,
            "is_induced_subgraph_critical": self.is_induced_subgraph_critical,
            "is_one_unique_graph": self.is_one_unique_graph,
            "conjecture_checks": dict(self.conjecture_checks),
        }

    @staticmethod
    def from_dict(data: dict[str, Any]) -> "CriticalityReport":
        return CriticalityReport(
            td=data["td"],
            surplus=data["surplus"],
            edge_deletion_deltas=tuple(tuple(t) for t in data["edge_deletion_deltas"]),
            contraction_deltas=tuple(tuple(t) for t in data["contraction_deltas"]),
            vertex_deletion_deltas=tuple(data["vertex_deletion_deltas"]),
            one_unique=tuple(data["one_unique"]),
            min_t=tuple(data["min_t"]),
            is_minor_critical=data["is_minor_critical"],
            is_subgraph_critical=data["is_subgraph_critical"],
            is_induced_subgraph_critical=data["is_induced_subgraph_critical"],
            is_one_unique_graph=data["is_one_unique_graph"],
            conjecture_checks=dict(data["conjecture_checks"]),
        )


def criticality_report(g: Graph, max_vertices: int = MAX_VERTICES) -> CriticalityReport:
    if g.n == 0:
        raise ValueError("criticality report needs a nonempty graph")
    witness = tree_depth(g, max_vertices)
    value = witness.value
    edge_deltas = tuple(
        (u, v, value - tree_depth(g.delete_edge(u, v), max_vertices).value)
        for u, v in g.edges()
    )
    contraction_deltas = tuple(
        (u, v, value - tree_depth(g.contract_edge(u, v), max_vertices).value)
        for u, v in g.edges()
    )
    vertex_deltas = tuple(
        value - tree_depth(g.delete_vertex(v), max_vertices).value for v in range(g.n)
    )
    ou = one_unique_vertices(g)
    if g.is_complete() or (g.n <= T_UNIQUE_MAX_N and value <= T_UNIQUE_MAX_TD):
        min_t = tuple(t_uniqueness(g, v) for v in range(g.n))
    else:
        min_t = (None,) * g.n
    sub_critical = all(d[2] >= 1 for d in edge_deltas)
    ind_critical = all(d >= 1 for d in vertex_deltas)
    minor_critical = sub_critical and ind_critical and all(
        d[2] >= 1 for d in contraction_deltas
    )
    return CriticalityReport(
        td=value,
        surplus=g.n - value,
        edge_deletion_deltas=edge_deltas,
        contraction_deltas=contraction_deltas,
        vertex_deletion_deltas=vertex_deltas,
        one_unique=ou,
        min_t=min_t,
        is_minor_critical=minor_critical,
        is_subgraph_critical=sub_critical,
        is_induced_subgraph_critical=ind_critical,
        is_one_unique_graph=all(ou),
        conjecture_checks={
            "order": g.n <= 2 ** (value - 1),
            "maxdeg": g.max_degree() <= value - 1,
        },
    )
