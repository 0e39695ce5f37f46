"""Brute-force oracles over the intersection graph of the universe.

Vertices are the signed k-sets of the universe in canonical order;
edges join intersecting pairs.  Adjacency lives in bitmask rows, one
arbitrary-precision integer per vertex.  On top of that graph:

- exact maximum intersecting family size by branch-and-bound maximum
  clique with greedy-colouring upper bounds,
- enumeration of all maximal intersecting families by Bron-Kerbosch
  with pivoting,
- reproducible random maximal intersecting families from a
  Fisher-Yates shuffle driven by SplitMix64.

Everything is sequential and deterministic: identical inputs, budgets,
and seeds always produce identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    DEFAULT_CAP,
    Params,
    SignedFamily,
    _pair_mask,
    bound_value,
    universe,
)
from .errors import CapExceeded

#: Default ceiling on branch-and-bound search tree nodes.
DEFAULT_NODE_BUDGET = 10_000_000

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 sequence, fully specified so seeds reproduce anywhere.

    The state advances by 0x9E3779B97F4A7C15 modulo 2^64 per draw and
    the output is the new state passed through two xor-shift-multiply
    rounds: z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
    z *= 0x94D049BB133111EB; z ^= z >> 31 (all modulo 2^64).
    """

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Draw from 0..bound-1 as next_u64() mod bound."""
        return self.next_u64() % bound

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates: j = below(i + 1) for i = len-1 down to 1."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an exact search.

    exhausted = True means the search tree was fully explored within
    the node budget and max_size is proven optimal; otherwise max_size
    is only the best lower bound found.  The witness is always an
    intersecting family of exactly max_size members.
    """

    max_size: int
    witness: SignedFamily
    nodes_explored: int
    exhausted: bool


@dataclass(frozen=True)
class BoundReport:
    """Comparison of the exact search outcome against the formula bound."""

    params: Params
    max_size: int
    bound: int
    matches: bool
    conclusive: bool
    nodes_explored: int


@lru_cache(maxsize=32)
def _intersection_graph(params: Params, cap: int):
    """Vertices (canonical order) and bitmask adjacency rows, cached."""
    verts = universe(params, cap).members
    r = params.r
    masks = [_pair_mask(v, r) for v in verts]
    adj = [0] * len(verts)
    for i in range(len(verts)):
        mi = masks[i]
        for j in range(i + 1, len(verts)):
            if mi & masks[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return verts, tuple(adj)


def _bit_indices(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _greedy_clique(adj, order) -> list[int]:
    """First-fit clique along the given vertex order; deterministic seed bound."""
    allowed = (1 << len(adj)) - 1
    chosen = []
    for v in order:
        if (allowed >> v) & 1:
            chosen.append(v)
            allowed &= adj[v]
    return chosen


def max_intersecting_exact(
    params: Params,
    node_budget: int = DEFAULT_NODE_BUDGET,
    cap: int = DEFAULT_CAP,
) -> SearchResult:
    """Exact maximum intersecting family size by branch-and-bound.

    Vertices are relabelled by descending degree, candidates are
    greedily coloured at every node, and branches whose colour bound
    cannot beat the incumbent are pruned.  Nodes are search-tree
    expansions; when the budget runs out the best clique so far is
    returned with exhausted = False.
    """
    verts, adj0 = _intersection_graph(params, cap)
    nv = len(verts)
    order = sorted(range(nv), key=lambda i: (-adj0[i].bit_count(), i))
    pos = [0] * nv
    for new, old in enumerate(order):
        pos[old] = new
    adj = [0] * nv
    for old in range(nv):
        row = 0
        for j in _bit_indices(adj0[old]):
            row |= 1 << pos[j]
        adj[pos[old]] = row

    best_clique = _greedy_clique(adj, range(nv))
    best_size = len(best_clique)
    nodes = 0
    aborted = False
    cur: list[int] = []

    def expand(p_mask: int) -> None:
        nonlocal nodes, best_size, best_clique, aborted
        nodes += 1
        if nodes > node_budget:
            aborted = True
            return
        # greedy colouring; colour numbers bound any clique inside p_mask
        col_order: list[int] = []
        col_bound: list[int] = []
        uncoloured = p_mask
        colour = 0
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                b = avail & -avail
                v = b.bit_length() - 1
                avail ^= b
                avail &= ~adj[v]
                uncoloured ^= b
                col_order.append(v)
                col_bound.append(colour)
        live = p_mask
        for i in range(len(col_order) - 1, -1, -1):
            if aborted:
                return
            if len(cur) + col_bound[i] <= best_size:
                return
            v = col_order[i]
            cur.append(v)
            nxt = live & adj[v]
            if nxt:
                expand(nxt)
            elif len(cur) > best_size:
                best_size = len(cur)
                best_clique = cur.copy()
            cur.pop()
            live ^= 1 << v

    if nv:
        expand((1 << nv) - 1)
    members = tuple(verts[order[v]] for v in best_clique)
    return SearchResult(
        max_size=best_size,
        witness=SignedFamily(params, members),
        nodes_explored=nodes,
        exhausted=not aborted,
    )


def enumerate_maximal_intersecting(
    params: Params, cap: int = DEFAULT_CAP
) -> list[SignedFamily]:
    """All maximal intersecting families, in canonical family order.

    Bron-Kerbosch with pivoting (pivot maximizing candidate coverage,
    ties to the lowest vertex).  Raises CapExceeded carrying the first
    cap families found when there are more than cap maximal families.
    """
    verts, adj = _intersection_graph(params, DEFAULT_CAP)
    nv = len(verts)
    found: list[tuple[int, ...]] = []
    cur: list[int] = []

    def to_families(cliques) -> list[SignedFamily]:
        fams = [
            SignedFamily(params, tuple(verts[i] for i in clique))
            for clique in cliques
        ]
        fams.sort(key=lambda f: f.members)
        return fams

    def bk(p_mask: int, x_mask: int) -> None:
        if not p_mask and not x_mask:
            if len(found) >= cap:
                raise CapExceeded(
                    f"more than {cap} maximal families", to_families(found)
                )
            found.append(tuple(cur))
            return
        pivot = -1
        best = -1
        for u in _bit_indices(p_mask | x_mask):
            c = (p_mask & adj[u]).bit_count()
            if c > best:
                best = c
                pivot = u
        p, x = p_mask, x_mask
        for v in _bit_indices(p_mask & ~adj[pivot]):
            bv = 1 << v
            cur.append(v)
            bk(p & adj[v], x & adj[v])
            cur.pop()
            p ^= bv
            x |= bv

    if nv:
        bk((1 << nv) - 1, 0)
    return to_families(found)


def random_maximal_intersecting(
    params: Params, seed: int, cap: int = DEFAULT_CAP
) -> SignedFamily:
    """Seeded random maximal intersecting family; a pure function of its inputs.

    The universe is shuffled by a SplitMix64-driven Fisher-Yates pass,
    then scanned greedily: a set is kept whenever it intersects every
    set kept so far.  The result is maximal by construction.
    """
    verts, adj = _intersection_graph(params, cap)
    idx = list(range(len(verts)))
    SplitMix64(seed).shuffle(idx)
    allowed = (1 << len(verts)) - 1
    chosen = []
    for i in idx:
        if (allowed >> i) & 1:
            chosen.append(i)
            allowed &= adj[i]
    return SignedFamily(params, tuple(verts[i] for i in chosen))


def verify_bound(
    params: Params,
    node_budget: int = DEFAULT_NODE_BUDGET,
    cap: int = DEFAULT_CAP,
) -> BoundReport:
    """Run the exact search and compare it with the formula bound.

    For r >= 2 the two agree on every feasible instance; for r = 1 and
    2k > n the search exceeds the formula, which is the reason the
    injection refuses r = 1.  An exhausted budget makes the report
    inconclusive rather than wrong.
    """
    res = max_intersecting_exact(params, node_budget=node_budget, cap=cap)
    bound = bound_value(params)
    return BoundReport(
        params=params,
        max_size=res.max_size,
        bound=bound,
        matches=res.max_size == bound,
        conclusive=res.exhausted,
        nodes_explored=res.nodes_explored,
    )
