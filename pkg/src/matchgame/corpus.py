"""Graph corpora for invariant checking.

Sources:

* ``exhaustive:N``      every isomorphism class on exactly N vertices
                        (built-in for N <= 7 by vertex augmentation
                        plus certificate dedup),
* ``trees:N``           every tree class on N vertices (leaf
                        augmentation),
* ``cubic:N``           every connected cubic class on N vertices,
                        N <= 14, via 2-factor plus perfect-matching
                        assembly,
* ``family:NAME:P,...`` constructor families, each parameter an int or
                        an inclusive range LO..HI,
* ``random_forest:COUNT:MAXN[:SEED]`` seeded uniform labelled trees
                        (sequence decoding) with random edge deletions,
* ``file:PATH``         graph6 lines,
* ``g6:STRING``         one literal graph6 graph,
* ``named:ID``          small fixed lists (krr_products, paw_p3).

Ranges are allowed in the N of exhaustive/trees/cubic as well.  All
sources yield deterministic item orders.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from functools import lru_cache

from . import graph6
from .canon import canonical_certificate
from .families import (
    FAMILIES,
    build_family,
    cartesian_product,
    complete,
    complete_bipartite,
    path,
    paw,
)
from .graph import Graph, GraphError, from_edges, is_connected

EXHAUSTIVE_LIMIT = 7
CUBIC_LIMIT = 14


@dataclass(frozen=True)
class CorpusItem:
    graph: Graph
    label: str
    family: str | None = None
    params: tuple[int, ...] = ()


# -- exhaustive isomorphism classes ---------------------------------------


@lru_cache(maxsize=None)
def exhaustive_classes(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class on exactly n vertices.

    Representatives on n vertices are built by attaching a new vertex
    to every subset of every (n-1)-vertex representative; every class
    arises this way because deleting any vertex of any n-vertex graph
    leaves an (n-1)-vertex graph.  Certificates dedup the candidates
    (certificates ignore isolated vertices, which is sound here since
    all candidates share the same order).
    """
    if not 0 <= n <= EXHAUSTIVE_LIMIT:
        raise GraphError(f"exhaustive corpus built-in only for n <= {EXHAUSTIVE_LIMIT}")
    if n == 0:
        return (Graph(0, ()),)
    reps: dict[bytes, Graph] = {}
    for g in exhaustive_classes(n - 1):
        for sub in range(1 << (n - 1)):
            adj = [m | ((sub >> v & 1) << (n - 1)) for v, m in enumerate(g.adj)]
            adj.append(sub)
            cand = Graph(n, tuple(adj))
            cert = canonical_certificate(cand)
            if cert not in reps:
                reps[cert] = cand
    return tuple(reps[c] for c in sorted(reps))


def labeled_class_count(n: int) -> int:
    """Independent recount: certificate dedup of all labelled graphs."""
    pairs = [(u, v) for v in range(n) for u in range(v)]
    certs = set()
    for code in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if code >> i & 1]
        certs.add(canonical_certificate(from_edges(n, edges)))
    return len(certs)


@lru_cache(maxsize=None)
def tree_classes(n: int) -> tuple[Graph, ...]:
    """One representative per tree class on n vertices (leaf growth)."""
    if n < 1:
        raise GraphError("trees need n >= 1")
    if n == 1:
        return (Graph(1, (0,)),)
    reps: dict[bytes, Graph] = {}
    for t in tree_classes(n - 1):
        for v in range(t.n):
            adj = [m | ((1 << (n - 1)) if w == v else 0) for w, m in enumerate(t.adj)]
            adj.append(1 << v)
            cand = Graph(n, tuple(adj))
            cert = canonical_certificate(cand)
            if cert not in reps:
                reps[cert] = cand
    return tuple(reps[c] for c in sorted(reps))


# -- connected cubic graphs ------------------------------------------------


def _partitions_min3(n: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(rest: int, biggest: int, acc: list[int]) -> None:
        if rest == 0:
            out.append(tuple(acc))
            return
        for part in range(min(rest, biggest), 2, -1):
            if rest - part == 0 or rest - part >= 3:
                rec(rest - part, part, acc + [part])

    rec(n, n, [])
    return out


@lru_cache(maxsize=None)
def connected_cubic_classes(n: int) -> tuple[Graph, ...]:
    """All connected 3-regular classes on n vertices, n even, n <= 14.

    Every cubic graph on at most 14 vertices has a perfect matching
    (a cubic graph without one needs three odd pieces of at least five
    vertices hanging off a cut vertex, so 16 vertices at least), hence
    decomposes into a 2-factor plus a perfect matching.  Laying the
    2-factor out canonically as consecutive cycles and enumerating the
    compatible perfect matchings therefore reaches every class.
    """
    if n % 2 or not 4 <= n <= CUBIC_LIMIT:
        raise GraphError(f"connected cubic corpus needs even 4 <= n <= {CUBIC_LIMIT}")
    reps: dict[bytes, Graph] = {}
    for parts in _partitions_min3(n):
        cycle_adj = [0] * n
        banned = set()
        start = 0
        for length in parts:
            for i in range(length):
                a = start + i
                b = start + (i + 1) % length
                cycle_adj[a] |= 1 << b
                cycle_adj[b] |= 1 << a
                banned.add((min(a, b), max(a, b)))
            start += length

        def matchings(covered: int, acc: list[tuple[int, int]]):
            if covered == (1 << n) - 1:
                yield acc
                return
            v = 0
            while covered >> v & 1:
                v += 1
            for u in range(v + 1, n):
                if covered >> u & 1 or (v, u) in banned:
                    continue
                acc.append((v, u))
                yield from matchings(covered | 1 << v | 1 << u, acc)
                acc.pop()

        for pm in matchings(0, []):
            adj = list(cycle_adj)
            for u, v in pm:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            cand = Graph(n, tuple(adj))
            if not is_connected(cand):
                continue
            cert = canonical_certificate(cand)
            if cert not in reps:
                reps[cert] = cand
    return tuple(reps[c] for c in sorted(reps))


# -- random forests ---------------------------------------------------------


def _tree_from_sequence(n: int, seq: list[int]) -> Graph:
    """Classic bijective decoding of a length n-2 sequence to a tree."""
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        v = heapq.heappop(leaves)
        edges.append((min(v, x), max(v, x)))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    u, v = sorted(leaves)
    edges.append((u, v))
    return from_edges(n, edges)


def random_forests(count: int, max_n: int, seed: int) -> list[Graph]:
    """Seeded forests: uniform labelled tree, then random edge deletions."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        if n <= 2:
            tree = path(n)
        else:
            tree = _tree_from_sequence(n, [rng.randrange(n) for _ in range(n - 2)])
        edges = list(tree.edges())
        drop = rng.randint(0, len(edges))
        kept = set(edges) - set(rng.sample(edges, drop)) if edges else set()
        out.append(from_edges(n, sorted(kept)))
    return out


# -- named fixed corpora -----------------------------------------------------


def _named_corpus(name: str) -> list[CorpusItem]:
    if name == "krr_products":
        items = [
            (cartesian_product(complete_bipartite(1, 1), path(2)), "K11xP2"),
            (cartesian_product(complete_bipartite(1, 1), path(3)), "K11xP3"),
            (cartesian_product(complete_bipartite(2, 2), complete(2)), "K22xK2"),
        ]
        return [CorpusItem(g, f"named:{lbl}") for g, lbl in items]
    if name == "paw_p3":
        return [CorpusItem(cartesian_product(paw(), path(3)), "named:pawxP3")]
    raise GraphError(f"unknown named corpus {name!r}; available: krr_products, paw_p3")


# -- spec parsing -------------------------------------------------------------


def parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo_i, hi_i = int(lo), int(hi)
        if hi_i < lo_i:
            raise GraphError(f"empty range {text!r}")
        return list(range(lo_i, hi_i + 1))
    return [int(text)]


def family_items(name: str, param_text: str) -> list[CorpusItem]:
    if name not in FAMILIES:
        known = ", ".join(sorted(FAMILIES))
        raise GraphError(f"unknown family {name!r}; available: {known}")
    arity = FAMILIES[name][1]
    if arity == 0:
        if param_text:
            raise GraphError(f"family {name!r} takes no parameters")
        combos: list[tuple[int, ...]] = [()]
    else:
        fields = param_text.split(",") if param_text else []
        if len(fields) != arity:
            raise GraphError(f"family {name!r} takes {arity} parameter(s)")
        combos = [()]
        for f in fields:
            combos = [c + (v,) for c in combos for v in parse_range(f)]
    out = []
    for params in combos:
        label = name if not params else f"{name}:{','.join(map(str, params))}"
        out.append(CorpusItem(build_family(name, params), label, name, params))
    return out


def corpus_from_spec(spec: str, default_seed: int = 0) -> list[CorpusItem]:
    kind, _, rest = spec.partition(":")
    if kind == "exhaustive":
        return [
            CorpusItem(g, graph6.emit(g))
            for n in parse_range(rest)
            for g in exhaustive_classes(n)
        ]
    if kind == "trees":
        return [
            CorpusItem(g, graph6.emit(g))
            for n in parse_range(rest)
            for g in tree_classes(n)
        ]
    if kind == "cubic":
        return [
            CorpusItem(g, graph6.emit(g))
            for n in parse_range(rest)
            if n % 2 == 0
            for g in connected_cubic_classes(n)
        ]
    if kind == "family":
        name, _, params = rest.partition(":")
        return family_items(name, params)
    if kind == "random_forest":
        fields = rest.split(":")
        if len(fields) not in (2, 3):
            raise GraphError("random_forest spec is COUNT:MAXN[:SEED]")
        count, max_n = int(fields[0]), int(fields[1])
        seed = int(fields[2]) if len(fields) == 3 else default_seed
        return [
            CorpusItem(g, graph6.emit(g))
            for g in random_forests(count, max_n, seed)
        ]
    if kind == "file":
        out = []
        with open(rest, "r", encoding="ascii") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    g = graph6.parse(line)
                    out.append(CorpusItem(g, graph6.emit(g)))
        return out
    if kind == "g6":
        g = graph6.parse(rest)
        return [CorpusItem(g, graph6.emit(g))]
    if kind == "named":
        return _named_corpus(rest)
    raise GraphError(
        f"unknown corpus kind {kind!r}; available: exhaustive, trees, cubic, "
        "family, random_forest, file, g6, named"
    )
