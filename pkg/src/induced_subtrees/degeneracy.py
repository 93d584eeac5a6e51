"""Degeneracy orderings by minimum-degree peeling, and the rank-relabelled graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .graph import Graph


@dataclass(frozen=True)
class DegeneracyOrdering:
    """``order[i]`` is the vertex of rank ``i``; ``rank`` is the inverse map."""

    order: Tuple[int, ...]
    rank: Tuple[int, ...]
    k: int


@dataclass(frozen=True)
class OrderedGraph:
    """Graph relabelled so that vertex ids equal ranks in a degeneracy ordering.

    ``larger[u]`` holds the neighbours with a higher id (at most ``k`` of
    them), ``smaller[u]`` those with a lower id; both ascending.
    ``orig_label[u]`` is the input id of relabelled vertex ``u``.
    """

    n: int
    m: int
    k: int
    larger: Tuple[Tuple[int, ...], ...]
    smaller: Tuple[Tuple[int, ...], ...]
    orig_label: Tuple[int, ...]

    def neighbors(self, u: int) -> Tuple[int, ...]:
        return self.smaller[u] + self.larger[u]


def compute_degeneracy_ordering(g: Graph) -> DegeneracyOrdering:
    """Matula-Beck peeling in O(n + m).

    Buckets indexed by current degree hold vertices lazily: a vertex whose
    degree drops is pushed again into the lower bucket and its stale entry is
    skipped when popped. Initial buckets pop the smallest id first; after
    that a bucket behaves as a stack.
    """
    n = g.n
    adjacency = g.adjacency
    deg = [len(a) for a in adjacency]
    buckets: List[List[int]] = [[] for _ in range(max(deg, default=0) + 1)]
    for v in range(n - 1, -1, -1):
        buckets[deg[v]].append(v)
    removed = bytearray(n)
    order: List[int] = []
    k = 0
    d = 0
    while len(order) < n:
        bucket = buckets[d]
        if not bucket:
            d += 1
            continue
        v = bucket.pop()
        if removed[v] or deg[v] != d:
            continue
        removed[v] = 1
        order.append(v)
        if d > k:
            k = d
        for w in adjacency[v]:
            if not removed[w]:
                deg[w] -= 1
                buckets[deg[w]].append(w)
        if d > 0:
            d -= 1
    rank = [0] * n
    for i, v in enumerate(order):
        rank[v] = i
    return DegeneracyOrdering(tuple(order), tuple(rank), k)


def verify_ordering(g: Graph, ord: DegeneracyOrdering) -> bool:
    """True iff every vertex has at most ``ord.k`` neighbours ranked after it."""
    n = g.n
    if len(ord.order) != n or len(ord.rank) != n:
        return False
    if sorted(ord.order) != list(range(n)):
        return False
    if any(ord.rank[v] != i for i, v in enumerate(ord.order)):
        return False
    rank = ord.rank
    for u in range(n):
        r = rank[u]
        later = 0
        for v in g.adjacency[u]:
            if rank[v] > r:
                later += 1
        if later > ord.k:
            return False
    return True


def build_ordered_graph(g: Graph, ord: DegeneracyOrdering) -> OrderedGraph:
    # Visiting vertices in rank order and appending each to its neighbours'
    # lists yields ascending lists without a comparison sort.
    n = g.n
    rank = ord.rank
    adjacency = g.adjacency
    larger: List[List[int]] = [[] for _ in range(n)]
    smaller: List[List[int]] = [[] for _ in range(n)]
    for u, v in enumerate(ord.order):
        for w in adjacency[v]:
            j = rank[w]
            if u < j:
                smaller[j].append(u)
            else:
                larger[j].append(u)
    return OrderedGraph(
        n=n,
        m=g.m,
        k=ord.k,
        larger=tuple(map(tuple, larger)),
        smaller=tuple(map(tuple, smaller)),
        orig_label=tuple(ord.order),
    )


def order_graph(g: Graph) -> OrderedGraph:
    """Degeneracy ordering plus relabelling in one call."""
    return build_ordered_graph(g, compute_degeneracy_ordering(g))


def ordering_from_sequence(order: Sequence[int], k: int) -> DegeneracyOrdering:
    """Wrap an explicit vertex sequence (e.g. a hand-chosen order) with a claimed ``k``."""
    rank = [0] * len(order)
    for i, v in enumerate(order):
        rank[v] = i
    return DegeneracyOrdering(tuple(order), tuple(rank), k)
