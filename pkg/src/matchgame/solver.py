"""Exact minimax solver for the maximal-matching game.

Two players alternately add an edge disjoint from everything played so
far; the game ends when the played edges form a maximal matching.  Max
wants many edges, Min wants few.  The value of a position depends only
on the residual graph (both endpoints of every played edge deleted)
and the player to move, which is what both memoisation modes exploit:

* subset mode: positions are vertex subsets of the fixed root graph;
  the player to move is implied by parity, so masks alone are keys,
* iso mode: positions are canonical certificates of the residual with
  isolated vertices dropped, so isomorphic residuals share one entry
  and the key carries the player explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .canon import canonical_certificate
from .graph import Edge, Graph, GraphError, bits, popcount, subgraph_mask
from .matching import matching_number, min_maximal_number

DEFAULT_BUDGET = 1 << 26


class Player(Enum):
    MAX = "max"
    MIN = "min"

    @property
    def other(self) -> "Player":
        return Player.MIN if self is Player.MAX else Player.MAX

    def __str__(self) -> str:
        return self.value


class MemoBudgetError(RuntimeError):
    """The memo table exceeded its configured entry cap."""


class StrategyForfeit(RuntimeError):
    """A strategy returned a move that is not a residual edge."""


@dataclass(frozen=True)
class SolveResult:
    value: int
    optimal_moves: tuple[Edge, ...]


@dataclass(frozen=True)
class GameState:
    """What a strategy sees on its turn.

    ``origin[i]`` is the root id of residual vertex i; ``history`` holds
    all moves so far in root coordinates.
    """

    residual: Graph
    to_move: Player
    origin: tuple[int, ...]
    history: tuple[tuple[Edge, Player], ...] = ()

    def to_root(self, e: Edge) -> Edge:
        u, v = self.origin[e[0]], self.origin[e[1]]
        return (min(u, v), max(u, v))

    def to_residual(self, e: Edge) -> Edge:
        pos = {r: i for i, r in enumerate(self.origin)}
        u, v = pos[e[0]], pos[e[1]]
        return (min(u, v), max(u, v))


@dataclass(frozen=True)
class Transcript:
    root: Graph
    first: Player
    moves: tuple[Edge, ...]
    movers: tuple[Player, ...]

    @property
    def final_size(self) -> int:
        return len(self.moves)


def _mask_edges(adj: tuple[int, ...], mask: int):
    for u in bits(mask):
        for v in bits(adj[u] & ((mask >> (u + 1)) << (u + 1))):
            yield u, v


class _BoundCache:
    """Lazy alpha'/mu bounds per vertex mask, for optional pruning."""

    def __init__(self, g: Graph) -> None:
        self.g = g
        self.alpha: dict[int, int] = {}
        self.mu: dict[int, int] = {}

    def alpha_of(self, mask: int) -> int:
        if mask not in self.alpha:
            self.alpha[mask] = matching_number(subgraph_mask(self.g, mask))
        return self.alpha[mask]

    def mu_of(self, mask: int) -> int:
        if mask not in self.mu:
            self.mu[mask] = min_maximal_number(subgraph_mask(self.g, mask))
        return self.mu[mask]


def solve(
    g: Graph,
    first: Player,
    mode: str = "subset",
    budget: int = DEFAULT_BUDGET,
    pruning: bool = False,
) -> SolveResult:
    """Game value and the set of optimal first moves for ``first``.

    ``pruning`` skips children whose alpha'/mu window provably cannot
    move a node's optimum; values are unchanged, only work is saved.
    The root is always evaluated child by child so optimal_moves is the
    full argmax/argmin set, sorted.
    """
    if mode == "subset":
        child_value = _subset_child_fn(g, first, budget, pruning)
        children = [
            ((u, v), g.vertex_mask & ~(1 << u | 1 << v)) for u, v in g.edges()
        ]
        values = {e: 1 + child_value(m) for e, m in children}
    elif mode == "iso":
        child_value = _iso_child_fn(g, budget, pruning)
        values = {
            (u, v): 1 + child_value(_strip(g, (u, v)), first.other)
            for u, v in g.edges()
        }
    else:
        raise GraphError(f"unknown solve mode {mode!r}")
    if not values:
        return SolveResult(0, ())
    opt = max(values.values()) if first is Player.MAX else min(values.values())
    moves = tuple(sorted(e for e, v in values.items() if v == opt))
    return SolveResult(opt, moves)


def _subset_child_fn(g: Graph, first: Player, budget: int, pruning: bool):
    adj = g.adj
    n = g.n
    memo: dict[int, int] = {}
    bounds = _BoundCache(g) if pruning else None

    def value(mask: int) -> int:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        moves_played = (n - popcount(mask)) // 2
        maximising = (moves_played % 2 == 0) == (first is Player.MAX)
        best = None
        alpha_here = bounds.alpha_of(mask) if pruning else None
        for u, v in _mask_edges(adj, mask):
            child = mask & ~(1 << u | 1 << v)
            if pruning and best is not None:
                if maximising and 1 + bounds.alpha_of(child) <= best:
                    continue
                if not maximising and 1 + bounds.mu_of(child) >= best:
                    continue
            val = 1 + value(child)
            if best is None or (val > best if maximising else val < best):
                best = val
            if pruning and maximising and best == alpha_here:
                break
            if pruning and not maximising and best == bounds.mu_of(mask):
                break
        result = 0 if best is None else best
        if len(memo) >= budget:
            raise MemoBudgetError(f"memo table exceeded {budget} entries")
        memo[mask] = result
        return result

    return value


def _strip(g: Graph, e: Edge) -> Graph:
    # residual with isolated vertices removed, in one mask pass
    u, v = e
    keep = g.vertex_mask & ~(1 << u | 1 << v)
    live = sum(1 << w for w in bits(keep) if g.adj[w] & keep)
    return subgraph_mask(g, live)


def _iso_child_fn(g: Graph, budget: int, pruning: bool):
    memo: dict[tuple[bytes, Player], int] = {}

    def value(h: Graph, player: Player, cert: bytes | None = None) -> int:
        edges = list(h.edges())
        if not edges:
            return 0
        if cert is None:
            cert = canonical_certificate(h)
        key = (cert, player)
        hit = memo.get(key)
        if hit is not None:
            return hit
        maximising = player is Player.MAX
        children = {}
        for e in edges:
            child = _strip(h, e)
            ck = canonical_certificate(child)
            if ck not in children:
                children[ck] = child
        best = None
        alpha_here = matching_number(h) if pruning else None
        for ck, child in children.items():
            if pruning and best is not None:
                if maximising and 1 + matching_number(child) <= best:
                    continue
                if not maximising and 1 + min_maximal_number(child) >= best:
                    continue
            val = 1 + value(child, player.other, ck)
            if best is None or (val > best if maximising else val < best):
                best = val
            if pruning and maximising and best == alpha_here:
                break
        assert best is not None
        if len(memo) >= budget:
            raise MemoBudgetError(f"memo table exceeded {budget} entries")
        memo[key] = best
        return best

    return value


def solve_naive(g: Graph, first: Player) -> SolveResult:
    """Memo-free minimax for cross-checking; exponential, keep n small."""
    adj = g.adj

    def value(mask: int, maximising: bool) -> int:
        best = 0
        found = False
        for u, v in _mask_edges(adj, mask):
            val = 1 + value(mask & ~(1 << u | 1 << v), not maximising)
            if not found or (val > best if maximising else val < best):
                best = val
                found = True
        return best

    values = {
        (u, v): 1 + value(g.vertex_mask & ~(1 << u | 1 << v), first is Player.MIN)
        for u, v in g.edges()
    }
    if not values:
        return SolveResult(0, ())
    opt = max(values.values()) if first is Player.MAX else min(values.values())
    return SolveResult(opt, tuple(sorted(e for e, v in values.items() if v == opt)))


def game_values(g: Graph, mode: str = "subset", budget: int = DEFAULT_BUDGET) -> tuple[int, int]:
    """(Max-start value, Min-start value)."""
    return (
        solve(g, Player.MAX, mode=mode, budget=budget).value,
        solve(g, Player.MIN, mode=mode, budget=budget).value,
    )


def play(g: Graph, first: Player, strat_first, strat_second) -> Transcript:
    """Run one game; strategies are asked for residual-coordinate edges.

    A strategy returning anything but an edge of the current residual
    forfeits with StrategyForfeit.  The move list is kept in root
    coordinates, so the played edges are pairwise disjoint and form a
    maximal matching of the root graph when the loop ends.
    """
    seats = {first: strat_first, first.other: strat_second}
    for strat in {id(s): s for s in seats.values()}.values():
        strat.reset(g)
    mask = g.vertex_mask
    history: list[tuple[Edge, Player]] = []
    player = first
    while True:
        residual = subgraph_mask(g, mask)
        if residual.edge_count == 0:
            break
        origin = tuple(bits(mask))
        state = GameState(residual, player, origin, tuple(history))
        move = seats[player].choose(state)
        u, v = move
        if not (0 <= u < residual.n and 0 <= v < residual.n) or not residual.has_edge(u, v):
            raise StrategyForfeit(
                f"{seats[player].name} returned {move!r}, not a residual edge"
            )
        root_edge = state.to_root((min(u, v), max(u, v)))
        history.append((root_edge, player))
        mask &= ~(1 << root_edge[0] | 1 << root_edge[1])
        player = player.other
    return Transcript(
        root=g,
        first=first,
        moves=tuple(e for e, _ in history),
        movers=tuple(p for _, p in history),
    )
