"""Replication ledger: the numbered end-to-end checks behind the package.

Each criterion recomputes a published fact from scratch through the public
API and reports pass/fail with a stable one-line detail. ``full`` runs the
complete parameter ranges; ``quick`` caps each range one notch lower (the
main-search criterion instead screens a fixed small stream, because one
order lower the hit set would be empty by theorem).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Iterator

from .criticality import (
    criticality_report,
    critical_spanning_subgraph,
    is_minor_critical,
    is_one_unique,
    is_one_unique_vertex,
    is_subgraph_critical,
    one_unique_vertices,
)
from .families import (
    andrasfai,
    clique_prism,
    complete,
    cycle,
    cycle_complement,
    fk_free,
    g4k,
    h_graph,
    k_net,
)
from .graphs import Graph, canonical_form, to_graph6
from .labelings import feasible_labelings, irreducible_core, is_reduced, reduce_labeling
from .search import SearchJob, enumerate_graphs, run_search
from .solver import surplus, tree_depth, tree_depth_decision, verify_feasible


@dataclass(frozen=True)
class CriterionResult:
    cid: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.cid}: {self.title} -- {self.detail}"


def _direct_one_unique(g: Graph, v: int) -> bool:
    """Existence of an optimal labeling assigning 1 to v and nothing else."""
    value = tree_depth(g).value
    others = list(range(2, value + 1))
    allowed: list = [others] * g.n
    allowed[v] = [1]
    return next(iter(feasible_labelings(g, value, allowed)), None) is not None


def _witness_sound(g: Graph) -> bool:
    w = tree_depth(g)
    if not verify_feasible(g, w.labeling):
        return False
    if g.n == 0:
        return w.value == 0 and w.labeling == () and w.elimination_forest == ()
    if max(w.labeling) != w.value:
        return False
    parent = w.elimination_forest
    children: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for v in range(g.n):
        hops = 0
        x = v
        while x != -1:
            x = parent[x]
            hops += 1
            if hops > g.n:
                return False
        if parent[v] != -1:
            children[parent[v]].append(v)
    ancestors = []
    for v in range(g.n):
        up = set()
        x = parent[v]
        while x != -1:
            up.add(x)
            x = parent[x]
        ancestors.append(up)
    for u, v in g.edges():
        if u not in ancestors[v] and v not in ancestors[u]:
            return False
    for v in range(g.n):
        if w.labeling[v] != 1 + max((w.labeling[c] for c in children[v]), default=0):
            return False
    return True


def _graphs_upto(n_max: int) -> Iterator[Graph]:
    for n in range(1, n_max + 1):
        yield from enumerate_graphs(n)


def _random_graph(rng: random.Random) -> Graph:
    n = rng.randint(1, 9)
    p = rng.choice((0.2, 0.35, 0.5, 0.65, 0.8))
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def _c1_andrasfai_depth(full: bool) -> tuple[bool, str]:
    k_max = 5 if full else 4
    bad = []
    for k in range(1, k_max + 1):
        g = andrasfai(k)
        if tree_depth(g).value != 2 * k:
            bad.append(f"td(And({k}))")
        if tree_depth(g.delete_vertex(0)).value != 2 * k - 1:
            bad.append(f"td(And({k})-v)")
    detail = f"td=2k and td-after-deletion=2k-1 for k=1..{k_max}"
    return not bad, detail if not bad else detail + f"; failed: {bad}"


def _c2_andrasfai_critical(full: bool) -> tuple[bool, str]:
    k_max = 4 if full else 3
    bad = []
    for k in range(1, k_max + 1):
        for tag, g in ((f"And({k})", andrasfai(k)), (f"And({k})-v", andrasfai(k).delete_vertex(0))):
            if not is_minor_critical(g):
                bad.append(f"{tag} not minor-critical")
            if not is_one_unique(g):
                bad.append(f"{tag} not 1-unique")
    detail = f"minor-critical and 1-unique for And(k), And(k)-v, k=1..{k_max}"
    return not bad, detail if not bad else detail + f"; failed: {bad}"


def _c3_cycle_complements(full: bool) -> tuple[bool, str]:
    n_max = 12 if full else 11
    ks = (2, 3) if full else (2,)
    bad = []
    for n in range(5, n_max + 1):
        g = cycle_complement(n)
        if tree_depth(g).value != n - 1:
            bad.append(f"td(co-C{n})")
        if not is_one_unique(g):
            bad.append(f"co-C{n} not 1-unique")
    for k in ks:
        n = 4 * k
        if tree_depth(g4k(k)).value != n - 1:
            bad.append(f"td(G{n})")
        if k == 2:
            if is_subgraph_critical(cycle_complement(8)):
                bad.append("co-C8 subgraph-critical")
        else:
            # same td after deleting one sparing-matching edge => not critical
            thinned = cycle_complement(n).delete_edge(1, 1 + 2 * k)
            if tree_depth(thinned).value != n - 1:
                bad.append(f"co-C{n} minus one antipodal edge dropped td")
    detail = f"td(co-Cn)=n-1 and 1-unique for n=5..{n_max}; sparser G_4k ties td for k in {ks}"
    return not bad, detail if not bad else detail + f"; failed: {bad}"


def _c4_nets_prisms(full: bool) -> tuple[bool, str]:
    k_max = 8 if full else 7
    a_max = 7 if full else 6
    bad = []
    for k in range(1, k_max + 1):
        if tree_depth(k_net(k)).value != k + 1:
            bad.append(f"td({k}-net)")
    for a in range(1, a_max + 1):
        if tree_depth(clique_prism(a)).value != (3 * a + 1) // 2:
            bad.append(f"td(K{a} prism)")
    detail = f"td(k-net)=k+1 for k=1..{k_max}; td(Ka box K2)=ceil(3a/2) for a=1..{a_max}"
    return not bad, detail if not bad else detail + f"; failed: {bad}"


def _c5_h_graphs(full: bool) -> tuple[bool, str]:
    ns = (4, 5, 6) if full else (4, 5)
    bad = []
    for n in ns:
        g = h_graph(n)
        if tree_depth(g).value != n + 1:
            bad.append(f"td(H{n})")
        if not is_minor_critical(g):
            bad.append(f"H{n} not minor-critical")
        ou = one_unique_vertices(g)
        if ou[0] or not all(ou[1:]):
            bad.append(f"H{n} non-1-unique set is not exactly the hub")
        if is_one_unique(g):
            bad.append(f"H{n} claimed 1-unique")
    detail = f"td(Hn)=n+1, minor-critical, hub is the only non-1-unique vertex, n in {ns}"
    return not bad, detail if not bad else detail + f"; failed: {bad}"


def _c6_forbidden_equivalence(full: bool) -> tuple[bool, str]:
    n_max = 7 if full else 6
    checked = 0
    bad = 0
    for g in _graphs_upto(n_max):
        value = tree_depth(g).value
        for k in range(3):
            checked += 1
            if (value >= g.n - k) != fk_free(g, k):
                bad += 1
    detail = f"td>=n-k iff F_k-free, k=0..2, all graphs n<={n_max} ({checked} checks)"
    return bad == 0, detail if not bad else detail + f"; {bad} mismatches"


def _c7_star_clique_vs_direct(full: bool) -> tuple[bool, str]:
    n_max = 6 if full else 5
    checked = 0
    bad = 0
    for g in _graphs_upto(n_max):
        for v in range(g.n):
            checked += 1
            if is_one_unique_vertex(g, v) != _direct_one_unique(g, v):
                bad += 1
    detail = f"star-clique test equals direct labeling search on all graphs n<={n_max} ({checked} vertices)"
    return bad == 0, detail if not bad else detail + f"; {bad} mismatches"


def _c8_critical_implies_one_unique(full: bool, n8_stream: str | None) -> tuple[bool, str]:
    n_max = 7 if full else 6
    bad = []
    total_hits = 0
    for n in range(2, n_max + 1):
        result = run_search(SearchJob(td_target=n - 1, n=n, critical=True))
        total_hits += len(result.hits)
        for g6, report in result.hits:
            if not report.is_one_unique_graph:
                bad.append(g6)
    scope = f"built-in n<={n_max}"
    if full and n8_stream is not None:
        result = run_search(SearchJob(td_target=7, graph6_path=n8_stream, critical=True))
        total_hits += len(result.hits)
        for g6, report in result.hits:
            if not report.is_one_unique_graph:
                bad.append(g6)
        scope += " plus n=8 stream"
    detail = f"every (n-1)-critical hit is 1-unique ({scope}, {total_hits} hits)"
    return not bad, detail if not bad else detail + f"; violators: {bad}"


def _c9_main_search(full: bool) -> tuple[bool, str]:
    target_canon = canonical_form(h_graph(4))
    if full:
        job = SearchJob(td_target=5, n=7, critical=True, non_one_unique=True)
        result = run_search(job)
        connected = run_search(
            SearchJob(td_target=5, n=7, critical=True, non_one_unique=True, connected_only=True)
        )
        scope = "built-in n=7"
    else:
        lines = tuple(
            to_graph6(g)
            for g in (h_graph(4), cycle_complement(7), complete(7), cycle(7), k_net(3), clique_prism(2))
        )
        job = SearchJob(td_target=5, graph6_lines=lines, critical=True, non_one_unique=True)
        result = run_search(job)
        connected = run_search(
            SearchJob(
                td_target=5,
                graph6_lines=lines,
                critical=True,
                non_one_unique=True,
                connected_only=True,
            )
        )
        scope = "fixed 6-graph stream"
    bad = []
    if not result.hits:
        bad.append("empty hit set")
    if target_canon not in {g6 for g6, _ in result.hits}:
        bad.append("subdivided-clique graph missing")
    for g6, report in result.hits:
        if sum(1 for flag in report.one_unique if not flag) != 1:
            bad.append(f"{g6} does not have exactly one non-1-unique vertex")
    if [g6 for g6, _ in connected.hits] != [g6 for g6, _ in result.hits]:
        bad.append("connected-only filter changed the hit set")
    detail = (
        f"critical non-1-unique search ({scope}): {len(result.hits)} hit(s), "
        "contains the subdivided clique, one non-1-unique vertex each, "
        "connected-only agrees"
    )
    return not bad, detail if not bad else detail + f"; failed: {bad}"


def _c10_property_suites(full: bool) -> tuple[bool, str]:
    witness_max = 6 if full else 5
    reduce_max = 6 if full else 4
    core_max = 6 if full else 5
    surplus_max = 6 if full else 5
    random_count = 500 if full else 100
    greedy_max = 7 if full else 6
    bad = []

    for g in _graphs_upto(witness_max):
        if not _witness_sound(g):
            bad.append(f"witness unsound on {to_graph6(g)}")
    family_corpus = [andrasfai(3), cycle_complement(9), k_net(5), clique_prism(4), h_graph(5)]
    for g in family_corpus:
        if not _witness_sound(g):
            bad.append(f"witness unsound on {to_graph6(g)}")

    checked_labelings = 0
    for g in _graphs_upto(reduce_max):
        for lab in feasible_labelings(g, g.n):
            checked_labelings += 1
            red = reduce_labeling(g, lab)
            if len(set(red)) != len(set(lab)):
                bad.append(f"reduce changed label count on {to_graph6(g)}")
                break
            if not is_reduced(red):
                bad.append(f"reduce output not reduced on {to_graph6(g)}")
                break
            if not verify_feasible(g, red):
                bad.append(f"reduce broke feasibility on {to_graph6(g)}")
                break

    for g in _graphs_upto(core_max):
        red = reduce_labeling(g, tree_depth(g).labeling)
        core = irreducible_core(g, red)
        if surplus(core.core) != surplus(g):
            bad.append(f"core surplus differs on {to_graph6(g)}")
        if tree_depth(core.core).value > surplus(core.core):
            bad.append(f"core td exceeds surplus on {to_graph6(g)}")
        if any(core.restricted_labeling.count(c) < 2 for c in core.restricted_labeling):
            bad.append(f"core kept a singleton label on {to_graph6(g)}")

    for g in _graphs_upto(surplus_max):
        s = surplus(g)
        for sub in range(1 << g.n):
            h = g.induced_subgraph([v for v in range(g.n) if (sub >> v) & 1])
            if surplus(h) > s:
                bad.append(f"surplus not hereditary on {to_graph6(g)}")
                break

    rng = random.Random(20240811)
    for _ in range(random_count):
        g = _random_graph(rng)
        value = tree_depth(g).value
        for u, v in g.edges():
            if tree_depth(g.delete_edge(u, v)).value > value:
                bad.append(f"edge deletion raised td on {to_graph6(g)}")
            if tree_depth(g.contract_edge(u, v)).value > value:
                bad.append(f"contraction raised td on {to_graph6(g)}")
        for v in range(g.n):
            drop = value - tree_depth(g.delete_vertex(v)).value
            if drop not in (0, 1):
                bad.append(f"vertex deletion delta {drop} on {to_graph6(g)}")

    greedy_graphs = 0
    for g in _graphs_upto(greedy_max):
        if not is_one_unique(g):
            continue
        greedy_graphs += 1
        h = critical_spanning_subgraph(g)
        if tree_depth(h).value != tree_depth(g).value:
            bad.append(f"greedy subgraph changed td on {to_graph6(g)}")
        elif not is_minor_critical(h):
            bad.append(f"greedy subgraph not critical on {to_graph6(g)}")

    detail = (
        f"witness soundness n<={witness_max}+families, reduce contracts on "
        f"{checked_labelings} labelings n<={reduce_max}, core identities n<={core_max}, "
        f"surplus heredity n<={surplus_max}, {random_count} random minor checks, "
        f"greedy spanning subgraph on {greedy_graphs} 1-unique graphs n<={greedy_max}"
    )
    return not bad, detail if not bad else detail + f"; failed: {bad[:5]}"


_CRITERIA: list[tuple[int, str, Callable]] = [
    (1, "Andrasfai depth formulas", lambda full, n8: _c1_andrasfai_depth(full)),
    (2, "Andrasfai criticality and 1-uniqueness", lambda full, n8: _c2_andrasfai_critical(full)),
    (3, "cycle complement depths and sparser ties", lambda full, n8: _c3_cycle_complements(full)),
    (4, "net and clique-prism depth formulas", lambda full, n8: _c4_nets_prisms(full)),
    (5, "subdivided-clique family", lambda full, n8: _c5_h_graphs(full)),
    (6, "forbidden-list equivalence", lambda full, n8: _c6_forbidden_equivalence(full)),
    (7, "star-clique criterion vs direct search", lambda full, n8: _c7_star_clique_vs_direct(full)),
    (8, "near-order critical graphs are 1-unique", _c8_critical_implies_one_unique),
    (9, "main critical non-1-unique search", lambda full, n8: _c9_main_search(full)),
    (10, "property suites", lambda full, n8: _c10_property_suites(full)),
]


def run_criterion(cid: int, level: str = "full", n8_stream: str | None = None) -> CriterionResult:
    if level not in ("quick", "full"):
        raise ValueError("level must be 'quick' or 'full'")
    for num, title, fn in _CRITERIA:
        if num == cid:
            start = time.perf_counter()
            passed, detail = fn(level == "full", n8_stream)
            return CriterionResult(num, title, passed, detail, time.perf_counter() - start)
    raise ValueError(f"no criterion {cid}")


def verify_paper(level: str = "quick", n8_stream: str | None = None) -> list[CriterionResult]:
    """Run all criteria at the given level; results in criterion order."""
    return [run_criterion(cid, level, n8_stream) for cid, _, _ in _CRITERIA]
