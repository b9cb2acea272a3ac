"""Exact tree-depth with a certifying witness.

tree_depth(g) follows the recursive characterization: an empty graph has
depth 0, a disconnected graph takes the maximum over its components, and a
connected graph costs 1 plus the best vertex deletion. The recursion is
memoized on vertex-subset bitmasks, with two exact shortcuts:

* a connected subset of size <= 2 has depth equal to its size;
* a subset with a universal vertex v satisfies td(S) = 1 + td(S - v),
  because v's label must differ from every other label in any feasible
  labeling of S, so deleting v first is always optimal.

The witness is an elimination forest (parent map, roots = -1) whose
height-plus-one labeling is feasible and uses exactly td(g) labels.
Deterministic tie-breaks: the root of a connected subset is the smallest
vertex id achieving the minimum, and components are processed in ascending
order of smallest vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetError
from .graphs import Graph, bits, mask_components

MAX_VERTICES = 25


@dataclass(frozen=True)
class TreeDepthWitness:
    value: int
    labeling: tuple[int, ...]
    elimination_forest: tuple[int, ...]  # parent vertex per vertex, -1 for roots


@dataclass(frozen=True)
class FeasibilityCheck:
    feasible: bool
    violation: tuple[int, int, int] | None = None  # (label, u, v)

    def __bool__(self) -> bool:
        return self.feasible


class _SubsetSolver:
    """Memoized exact tree-depth over vertex subsets of one graph.

    One instance per tree_depth/tree_depth_decision call; no state is shared
    across calls, so concurrent use on different graphs is safe.
    """

    def __init__(self, g: Graph):
        self.adj = g.adj
        self.memo: dict[int, int] = {}
        self.decision_memo: dict[tuple[int, int], bool] = {}

    def td(self, mask: int) -> int:
        if mask == 0:
            return 0
        cached = self.memo.get(mask)
        if cached is not None:
            return cached
        comps = mask_components(self.adj, mask)
        if len(comps) > 1:
            val = max(self.td(c) for c in comps)
        else:
            val = self._td_connected(mask)
        self.memo[mask] = val
        return val

    def _td_connected(self, mask: int) -> int:
        size = mask.bit_count()
        if size <= 2:
            return size
        for v in bits(mask):
            if self.adj[v] & mask == mask ^ (1 << v):
                return 1 + self.td(mask ^ (1 << v))
        best = size
        for v in bits(mask):
            cand = 1 + self.td(mask ^ (1 << v))
            if cand < best:
                best = cand
        return best

    def td_le(self, mask: int, k: int) -> bool:
        """Decision form with cutoff: is td of the subset at most k?"""
        if mask.bit_count() <= k:
            return True
        if k <= 0:
            return False
        exact = self.memo.get(mask)
        if exact is not None:
            return exact <= k
        key = (mask, k)
        cached = self.decision_memo.get(key)
        if cached is not None:
            return cached
        comps = mask_components(self.adj, mask)
        if len(comps) > 1:
            out = all(self.td_le(c, k) for c in comps)
        else:
            out = False
            for v in bits(mask):
                if self.adj[v] & mask == mask ^ (1 << v):
                    out = self.td_le(mask ^ (1 << v), k - 1)
                    break
            else:
                for v in bits(mask):
                    if self.td_le(mask ^ (1 << v), k - 1):
                        out = True
                        break
        self.decision_memo[key] = out
        return out


def _check_budget(g: Graph, max_vertices: int) -> None:
    cap = min(max_vertices, MAX_VERTICES)
    if g.n > cap:
        raise BudgetError(f"solver refuses n={g.n} > cap {cap}")


def tree_depth(g: Graph, max_vertices: int = MAX_VERTICES) -> TreeDepthWitness:
    """Exact tree-depth of g plus a feasible witness labeling and forest."""
    _check_budget(g, max_vertices)
    solver = _SubsetSolver(g)
    value = solver.td(g.full_mask())
    parent = [-1] * g.n
    label = [0] * g.n

    def build(mask: int, up: int) -> None:
        for comp in mask_components(solver.adj, mask):
            t = solver.td(comp)
            for v in bits(comp):
                if 1 + solver.td(comp ^ (1 << v)) == t:
                    parent[v] = up
                    label[v] = t
                    build(comp ^ (1 << v), v)
                    break

    build(g.full_mask(), -1)
    return TreeDepthWitness(value, tuple(label), tuple(parent))


def tree_depth_decision(g: Graph, k: int, max_vertices: int = MAX_VERTICES) -> bool:
    """Is td(g) <= k? Same recursion as tree_depth but pruned by the cutoff."""
    if k < 0:
        raise ValueError("cutoff must be non-negative")
    _check_budget(g, max_vertices)
    solver = _SubsetSolver(g)
    return solver.td_le(g.full_mask(), k)


def surplus(g: Graph, max_vertices: int = MAX_VERTICES) -> int:
    """n(g) - td(g); hereditary and monotone under induced subgraphs."""
    return g.n - tree_depth(g, max_vertices).value


def verify_feasible(g: Graph, labels) -> FeasibilityCheck:
    """Check the path condition: for every label c, no component of the
    subgraph induced by labels <= c contains two vertices labeled exactly c.

    The reported violation is the first in deterministic order: ascending
    label, then components by smallest vertex, then the two smallest
    offending vertices.
    """
    labels = tuple(labels)
    if len(labels) != g.n:
        raise ValueError(f"labeling length {len(labels)} != n {g.n}")
    if any(c < 1 for c in labels):
        raise ValueError("labels must be positive integers")
    for c in sorted(set(labels)):
        mask = 0
        for v, lv in enumerate(labels):
            if lv <= c:
                mask |= 1 << v
        for comp in mask_components(g.adj, mask):
            hits = [v for v in bits(comp) if labels[v] == c]
            if len(hits) >= 2:
                return FeasibilityCheck(False, (c, hits[0], hits[1]))
    return FeasibilityCheck(True)
