"""Canonical certificates: a complete isomorphism invariant.

Isolated vertices are removed first, so the certificate identifies the
isomorphism class of the isolate-free part (two graphs of equal order
are isomorphic iff their certificates agree).  The certificate is the
graph6 encoding of a canonically relabelled copy, so it is printable
and decodes back to a representative of the class.

Two disjoint canonicalisation routes, chosen by an isomorphism
invariant condition so classes never straddle them:

* forests: rooted-subtree codes at the tree centres, trees sorted by
  code; linear time-ish and hit constantly by game residuals,
* everything else: individualisation-refinement search minimising the
  relabelled adjacency encoding, pruned by automorphism orbits
  discovered at equal leaves.
"""

from __future__ import annotations

from .graph import Graph, bits, component_masks, is_forest, popcount, subgraph_mask
from . import graph6


def canonical_certificate(g: Graph) -> bytes:
    """Certificate bytes; equal for isomorphic inputs (isolates ignored)."""
    keep = sum(1 << v for v in range(g.n) if g.adj[v])
    h = subgraph_mask(g, keep)
    if h.n == 0:
        return graph6.emit(h).encode("ascii")
    if is_forest(h):
        return graph6.emit(_canonical_forest(h)).encode("ascii")
    return graph6.emit(_canonical_ir(h)).encode("ascii")


def canonical_form(g: Graph) -> Graph:
    """The canonically relabelled isolate-free representative."""
    return graph6.parse(canonical_certificate(g).decode("ascii"))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism of the full graphs, isolated vertices included."""
    return g.n == h.n and canonical_certificate(g) == canonical_certificate(h)


# -- forests ----------------------------------------------------------


def _tree_centres(g: Graph, comp: int) -> list[int]:
    """Centre vertex (or two) of a tree component, by leaf stripping."""
    alive = comp
    deg = {v: popcount(g.adj[v] & comp) for v in bits(comp)}
    while popcount(alive) > 2:
        drop = [v for v in bits(alive) if deg[v] <= 1]
        for v in drop:
            alive &= ~(1 << v)
            for u in bits(g.adj[v] & alive):
                deg[u] -= 1
    return list(bits(alive))


def _rooted_code(g: Graph, comp: int, root: int) -> str:
    def code(v: int, parent: int) -> str:
        children = sorted(
            code(u, v) for u in bits(g.adj[v] & comp) if u != parent
        )
        return "(" + "".join(children) + ")"

    return code(root, -1)


def _canonical_forest(g: Graph) -> Graph:
    codes = sorted(
        min(_rooted_code(g, comp, r) for r in _tree_centres(g, comp))
        for comp in component_masks(g)
    )
    # rebuild the labelled representative straight from the codes:
    # preorder ids, children already in sorted order inside each code
    adj = [0] * g.n
    nxt = 0
    for code in codes:
        stack: list[int] = []
        for ch in code:
            if ch == "(":
                vid = nxt
                nxt += 1
                if stack:
                    adj[stack[-1]] |= 1 << vid
                    adj[vid] |= 1 << stack[-1]
                stack.append(vid)
            else:
                stack.pop()
    return Graph(g.n, tuple(adj))


# -- individualisation-refinement --------------------------------------


def _refine(adj: tuple[int, ...], partition: list[int]) -> list[int]:
    """Coarsest stable refinement, deterministic cell order.

    Cells split by neighbour count into each splitter cell; fragments
    are ordered by count, so the resulting cell order depends only on
    the isomorphism type of (graph, ordered partition).
    """
    while True:
        changed = False
        for splitter in list(partition):
            out: list[int] = []
            for cell in partition:
                if popcount(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, int] = {}
                for v in bits(cell):
                    k = popcount(adj[v] & splitter)
                    groups[k] = groups.get(k, 0) | 1 << v
                if len(groups) == 1:
                    out.append(cell)
                else:
                    changed = True
                    out.extend(groups[k] for k in sorted(groups))
            partition = out
            if changed:
                break
        if not changed:
            return partition


class _Canonizer:
    def __init__(self, g: Graph) -> None:
        self.n = g.n
        self.adj = g.adj
        self.best: int | None = None
        self.best_perm: tuple[int, ...] = ()
        self.gens: list[tuple[int, ...]] = []

    def run(self) -> tuple[int, ...]:
        self._search(_refine(self.adj, [(1 << self.n) - 1]), [])
        return self.best_perm

    def _encode(self, perm: list[int]) -> int:
        enc = 0
        for j in range(1, self.n):
            col = self.adj[perm[j]]
            for i in range(j):
                enc = enc << 1 | (col >> perm[i] & 1)
        return enc

    def _orbit_reps(self, base: list[int]) -> list[int]:
        """Union-find parents under generators fixing the base pointwise."""
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gen in self.gens:
            if all(gen[b] == b for b in base):
                for v in range(self.n):
                    ra, rb = find(v), find(gen[v])
                    if ra != rb:
                        parent[ra] = rb
        return [find(v) for v in range(self.n)]

    def _search(self, partition: list[int], base: list[int]) -> None:
        target = next((i for i, c in enumerate(partition) if popcount(c) > 1), -1)
        if target < 0:
            perm = [c.bit_length() - 1 for c in partition]
            enc = self._encode(perm)
            if self.best is None or enc < self.best:
                self.best = enc
                self.best_perm = tuple(perm)
            elif enc == self.best:
                sigma = [0] * self.n
                for old, new in zip(self.best_perm, perm):
                    sigma[old] = new
                self.gens.append(tuple(sigma))
            return
        cell = partition[target]
        explored: list[int] = []
        for v in bits(cell):
            if explored:
                reps = self._orbit_reps(base)
                if any(reps[v] == reps[u] for u in explored):
                    continue
            child = (
                partition[:target]
                + [1 << v, cell & ~(1 << v)]
                + partition[target + 1:]
            )
            self._search(_refine(self.adj, child), base + [v])
            explored.append(v)


def _canonical_ir(g: Graph) -> Graph:
    perm = _Canonizer(g).run()
    pos = {v: i for i, v in enumerate(perm)}
    adj = [0] * g.n
    for i, v in enumerate(perm):
        for u in bits(g.adj[v]):
            adj[i] |= 1 << pos[u]
    return Graph(g.n, tuple(adj))
