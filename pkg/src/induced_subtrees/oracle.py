"""Brute-force reference answers for small graphs.

Everything here scans all vertex subsets as bitmasks. It is meant to be
obviously correct, not fast.
"""

from __future__ import annotations

from typing import Iterable, List, Tuple

from .graph import Graph

MAX_ENUMERATE_N = 25
MAX_DEGENERACY_N = 16


class TooLarge(ValueError):
    pass


def is_induced_subtree(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff ``vertices`` is nonempty and induces a connected acyclic graph."""
    s = set(vertices)
    if not s:
        return False
    edges = sum(1 for u in s for v in g.adjacency[u] if v in s) // 2
    if edges != len(s) - 1:
        return False
    start = next(iter(s))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in g.adjacency[u]:
            if v in s and v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(s)


def _masks(g: Graph) -> List[int]:
    return [sum(1 << v for v in g.adjacency[u]) for u in range(g.n)]


def _is_tree_mask(adj: List[int], mask: int) -> bool:
    size = bin(mask).count("1")
    twice_edges = 0
    m = mask
    while m:
        low = m & -m
        u = low.bit_length() - 1
        twice_edges += bin(adj[u] & mask).count("1")
        m ^= low
    if twice_edges != 2 * (size - 1):
        return False
    reach = mask & -mask
    while True:
        grown = reach
        r = reach
        while r:
            low = r & -r
            grown |= adj[low.bit_length() - 1] & mask
            r ^= low
        if grown == reach:
            return reach == mask
        reach = grown


def brute_force_enumerate(g: Graph) -> List[Tuple[int, ...]]:
    """All induced subtrees as ascending tuples, lexicographically sorted."""
    if g.n > MAX_ENUMERATE_N:
        raise TooLarge(f"brute force limited to n <= {MAX_ENUMERATE_N}, got {g.n}")
    adj = _masks(g)
    found = []
    for mask in range(1, 1 << g.n):
        if _is_tree_mask(adj, mask):
            found.append(tuple(v for v in range(g.n) if mask >> v & 1))
    found.sort()
    return found


def brute_force_degeneracy(g: Graph) -> int:
    """Max over nonempty subsets ``S`` of the minimum degree in ``G[S]``."""
    if g.n > MAX_DEGENERACY_N:
        raise TooLarge(f"brute force limited to n <= {MAX_DEGENERACY_N}, got {g.n}")
    adj = _masks(g)
    best = 0
    for mask in range(1, 1 << g.n):
        low = min(bin(adj[v] & mask).count("1") for v in range(g.n) if mask >> v & 1)
        if low > best:
            best = low
    return best
