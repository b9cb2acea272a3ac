"""Immutable simple graphs on vertex set 0..n-1 with bitmask adjacency rows.

Covers the structural toolkit everything else builds on: minor operations
(edge/vertex deletion, edge contraction), induced subgraphs, complement,
disjoint union, cartesian product, the star-clique transform, exact
canonicalization for small graphs, vertex connectivity, induced-pattern
containment, and the graph6 / edge-list text codecs.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import Graph6Error

GRAPH6_MAX_N = 62
CANONICAL_MAX_N = 10


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_components(adj: Sequence[int], mask: int) -> list[int]:
    """Connected components of the subgraph induced by ``mask``.

    Returned as bitmasks in ascending order of smallest member vertex.
    """
    comps = []
    rem = mask
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            grown = 0
            for v in bits(frontier):
                grown |= adj[v]
            frontier = grown & rem & ~comp
            comp |= frontier
        comps.append(comp)
        rem &= ~comp
    return comps


class Graph:
    """Simple undirected graph with dense vertex ids 0..n-1.

    Adjacency is one int bitmask per vertex. Instances are value-like and
    treated as immutable: every operation returns a new Graph, so values are
    safe to share and hash.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        if adj is None:
            self.adj = (0,) * n
            return
        if len(adj) != n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        rows = tuple(adj)
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"adjacency row {v} references vertices >= {n}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(rows):
            for u in bits(row):
                if not (rows[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.adj = rows

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, rows)

    # -- basic queries ----------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, ascending."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            for d in bits(row):
                out.append((u, u + 1 + d))
        return out

    def is_complete(self) -> bool:
        return self.edge_count() == self.n * (self.n - 1) // 2

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def component_masks(self) -> list[int]:
        return mask_components(self.adj, self.full_mask())

    def is_connected(self) -> bool:
        return len(self.component_masks()) <= 1

    # -- minor operations -------------------------------------------------

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"no edge ({u}, {v}) to delete")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def delete_vertex(self, v: int) -> "Graph":
        """Remove v; vertices above v shift down by one."""
        if not 0 <= v < self.n:
            raise ValueError(f"no vertex {v}")
        low = (1 << v) - 1
        rows = []
        for u in range(self.n):
            if u == v:
                continue
            row = self.adj[u]
            rows.append((row & low) | ((row >> (v + 1)) << v))
        return Graph(self.n - 1, rows)

    def contract_edge(self, u: int, v: int) -> "Graph":
        """Merge the endpoints of edge (u, v) into the smaller endpoint's slot."""
        if not self.has_edge(u, v):
            raise ValueError(f"no edge ({u}, {v}) to contract")
        u, v = min(u, v), max(u, v)
        rows = list(self.adj)
        merged = (rows[u] | rows[v]) & ~(1 << u) & ~(1 << v)
        rows[u] = merged
        for w in bits(merged):
            rows[w] |= 1 << u
        rows[v] = 0
        for w in range(self.n):
            rows[w] &= ~(1 << v)
        return Graph(self.n, rows).delete_vertex(v)

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph on the given vertices, renumbered in ascending order."""
        keep = sorted(set(vertices))
        for v in keep:
            if not 0 <= v < self.n:
                raise ValueError(f"no vertex {v}")
        pos = {v: i for i, v in enumerate(keep)}
        rows = [0] * len(keep)
        for v in keep:
            for u in bits(self.adj[v]):
                if u in pos:
                    rows[pos[v]] |= 1 << pos[u]
        return Graph(len(keep), rows)

    # -- constructions ----------------------------------------------------

    def complement(self) -> "Graph":
        full = self.full_mask()
        return Graph(self.n, [full & ~self.adj[v] & ~(1 << v) for v in range(self.n)])

    def star_clique_transform(self, v: int) -> "Graph":
        """Turn N(v) into a clique, then delete v."""
        if not 0 <= v < self.n:
            raise ValueError(f"no vertex {v}")
        rows = list(self.adj)
        nbrs = rows[v]
        for w in bits(nbrs):
            rows[w] |= nbrs & ~(1 << w)
        return Graph(self.n, rows).delete_vertex(v)

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """New graph with old vertex v renamed to perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertex set")
        rows = [0] * self.n
        for v in range(self.n):
            for u in bits(self.adj[v]):
                rows[perm[v]] |= 1 << perm[u]
        return Graph(self.n, rows)

    # -- value semantics --------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g followed by h, with h's vertices shifted up by g.n."""
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, rows)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Box product; vertex (a, b) is numbered a * h.n + b."""
    n = g.n * h.n
    rows = [0] * n
    for a in range(g.n):
        for b in range(h.n):
            i = a * h.n + b
            for b2 in bits(h.adj[b]):
                rows[i] |= 1 << (a * h.n + b2)
            for a2 in bits(g.adj[a]):
                rows[i] |= 1 << (a2 * h.n + b)
    return Graph(n, rows)


# -- graph6 codec ---------------------------------------------------------


def to_graph6(g: Graph) -> str:
    """Encode as a single-line graph6 string (order at most 62)."""
    if g.n > GRAPH6_MAX_N:
        raise Graph6Error(f"graph6 single-byte order supports n <= {GRAPH6_MAX_N}", 0)
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | ((g.adj[i] >> j) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    """Decode a graph6 line (order at most 62, single-byte order form)."""
    text = line.rstrip("\r\n")
    if not text:
        raise Graph6Error("empty graph6 line", 0)
    c0 = ord(text[0])
    if c0 == 126:
        raise Graph6Error("multi-byte order form (n > 62) not supported", 0)
    if not 63 <= c0 <= 126:
        raise Graph6Error(f"invalid order byte {c0!r}", 0)
    n = c0 - 63
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    if len(text) - 1 < need:
        raise Graph6Error(f"truncated graph6 body, expected {need} bytes", len(text))
    if len(text) - 1 > need:
        raise Graph6Error("trailing bytes after graph6 body", 1 + need)
    rows = [0] * n
    pos = 0
    for k in range(need):
        c = ord(text[1 + k])
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid body byte {c}", 1 + k)
        group = c - 63
        for b in range(5, -1, -1):
            bit = (group >> b) & 1
            if pos >= npairs:
                if bit:
                    raise Graph6Error("nonzero padding bits", 1 + k)
                continue
            if bit:
                i, j = _pair_at(pos)
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(n, rows)


def _pair_at(pos: int) -> tuple[int, int]:
    # graph6 bit order: (0,1), (0,2), (1,2), (0,3), ... column by column
    j = 1
    while pos >= j:
        pos -= j
        j += 1
    return pos, j


def edge_bit_positions(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 bit order; index in this list = mask bit position."""
    return [(i, j) for j in range(1, n) for i in range(j)]


# -- edge-list codec ------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the plain text format: first line ``n m``, then m lines ``u v``."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("edge-list header must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if n < 0 or m < 0:
        raise ValueError("edge-list header counts must be non-negative")
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for k, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"line {k}: expected 'u v'")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- canonical form -------------------------------------------------------


def canonical_form(g: Graph) -> str:
    """Canonical graph6 string: equal for two graphs iff they are isomorphic.

    Individualization-refinement search for the vertex ordering that
    minimizes the adjacency bitstring among refinement-consistent orderings.
    Discovered automorphisms prune sibling branches (orbit pruning), which
    keeps highly symmetric graphs tractable. Exact but capped at n <= 10.
    """
    n = g.n
    if n > CANONICAL_MAX_N:
        raise ValueError(f"canonical_form capped at n <= {CANONICAL_MAX_N}")
    if n == 0:
        return "?"
    adj = g.adj

    def refine(colors: list[int]) -> list[int]:
        # stable color refinement; new color ids ordered by invariant signature
        while True:
            sigs = [
                (colors[v], tuple(sorted(colors[u] for u in bits(adj[v]))))
                for v in range(n)
            ]
            rank = {s: r for r, s in enumerate(sorted(set(sigs)))}
            new = [rank[s] for s in sigs]
            if new == colors:
                return new
            colors = new

    def leaf_key(order: list[int]) -> tuple[int, ...]:
        key = []
        for j in range(1, n):
            row = adj[order[j]]
            for i in range(j):
                key.append((row >> order[i]) & 1)
        return tuple(key)

    best_key: list = [None]
    best_order: list = [None]
    autos: list[tuple[int, ...]] = []

    def orbit_blocked(v: int, tried: list[int], prefix: tuple[int, ...]) -> bool:
        gens = [a for a in autos if all(a[p] == p for p in prefix)]
        if not gens:
            return False
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in gens:
            for w in range(n):
                rw, ra = find(w), find(a[w])
                if rw != ra:
                    parent[rw] = ra
        root = find(v)
        return any(find(u) == root for u in tried)

    def search(colors: list[int], prefix: tuple[int, ...]) -> None:
        colors = refine(colors)
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            order = sorted(range(n), key=colors.__getitem__)
            key = leaf_key(order)
            if best_key[0] is None or key < best_key[0]:
                best_key[0] = key
                best_order[0] = order
            elif key == best_key[0]:
                sigma = [0] * n
                for i in range(n):
                    sigma[best_order[0][i]] = order[i]
                if any(sigma[v] != v for v in range(n)):
                    autos.append(tuple(sigma))
            return
        tried: list[int] = []
        for v in target:
            if tried and orbit_blocked(v, tried, prefix):
                continue
            tried.append(v)
            cv = colors[v]
            split = [
                c + 1 if (c > cv or (c == cv and u != v)) else c
                for u, c in enumerate(colors)
            ]
            search(split, prefix + (v,))

    search([0] * n, ())
    order = best_order[0]
    perm = [0] * n
    for i, v in enumerate(order):
        perm[v] = i
    return to_graph6(g.relabeled(perm))


# -- vertex connectivity --------------------------------------------------


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity via Menger: minimize, over non-adjacent
    pairs, the number of internally disjoint paths (unit-vertex-capacity
    max-flow). Complete graphs return n - 1 by convention."""
    if g.n < 1:
        raise ValueError("vertex_connectivity needs at least one vertex")
    if g.is_complete():
        return g.n - 1
    if not g.is_connected():
        return 0
    best = g.n - 1
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                best = min(best, _disjoint_path_count(g, u, v))
    return best


def _disjoint_path_count(g: Graph, s: int, t: int) -> int:
    # split vertex w into in-node 2w and out-node 2w+1
    cap: dict[tuple[int, int], int] = {}

    def add(a: int, b: int, c: int) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)

    for w in range(g.n):
        add(2 * w, 2 * w + 1, g.n if w in (s, t) else 1)
    for a, b in g.edges():
        add(2 * a + 1, 2 * b, 1)
        add(2 * b + 1, 2 * a, 1)
    succ: dict[int, list[int]] = {}
    for a, b in cap:
        succ.setdefault(a, []).append(b)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = {source: source}
        queue = [source]
        while queue and sink not in prev:
            nxt = []
            for a in queue:
                for b in succ.get(a, ()):
                    if b not in prev and cap[(a, b)] > 0:
                        prev[b] = a
                        nxt.append(b)
            queue = nxt
        if sink not in prev:
            return flow
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


# -- induced pattern containment ------------------------------------------


def contains_induced(g: Graph, pattern: Graph) -> bool:
    """Does g contain an induced copy of pattern?

    Exact backtracking over injections, pattern vertices in descending
    degree order, candidates pruned by degree.
    """
    if pattern.n > g.n:
        return False
    if pattern.n == 0:
        return True
    order = sorted(range(pattern.n), key=lambda v: -pattern.degree(v))
    pdeg = [pattern.degree(v) for v in order]
    image = [0] * pattern.n
    used = [0]

    def extend(k: int) -> bool:
        if k == pattern.n:
            return True
        pv = order[k]
        for w in range(g.n):
            if (used[0] >> w) & 1 or g.degree(w) < pdeg[k]:
                continue
            ok = True
            for i in range(k):
                if pattern.has_edge(pv, order[i]) != g.has_edge(w, image[i]):
                    ok = False
                    break
            if ok:
                image[k] = w
                used[0] |= 1 << w
                if extend(k + 1):
                    return True
                used[0] &= ~(1 << w)
        return False

    return extend(0)
