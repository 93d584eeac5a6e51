"""Simple undirected graphs: construction, edge-list I/O and random generation."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple


class GraphError(ValueError):
    """Raised when edges violate simplicity or vertex bounds."""


class ParseError(GraphError):
    def __init__(self, message: str, lineno: Optional[int] = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1.

    ``adjacency[u]`` is a strictly ascending tuple of the neighbours of ``u``.
    """

    n: int
    m: int
    adjacency: Tuple[Tuple[int, ...], ...]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def neighbors(self, u: int) -> Tuple[int, ...]:
        return self.adjacency[u]

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        adj = self.adjacency[u]
        # adjacency lists are short in the degenerate graphs we target
        return v in adj

    def check(self) -> None:
        """Full scan of the representation invariants; raises AssertionError."""
        total = 0
        for u, adj in enumerate(self.adjacency):
            for a, b in zip(adj, adj[1:]):
                assert a < b, f"adjacency of {u} not strictly ascending"
            for v in adj:
                assert 0 <= v < self.n and v != u
                assert u in self.adjacency[v], f"edge {u}-{v} not symmetric"
            total += len(adj)
        assert len(self.adjacency) == self.n
        assert total == 2 * self.m


def _build(n: int, pairs: Iterable[Tuple[int, int, Optional[int]]], dedupe: bool) -> Graph:
    adj: List[set] = [set() for _ in range(n)]
    for u, v, lineno in pairs:
        if u == v:
            if lineno is not None:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if v in adj[u]:
            if dedupe:
                continue
            if lineno is not None:
                raise ParseError(f"duplicate edge {u} {v}", lineno)
            raise GraphError(f"duplicate edge ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
    adjacency = tuple(tuple(sorted(a)) for a in adj)
    m = sum(len(a) for a in adjacency) // 2
    return Graph(n, m, adjacency)


def from_edges(n: int, edges: Iterable[Sequence[int]], dedupe: bool = False) -> Graph:
    """Build a validated graph with ``n`` vertices from ``(u, v)`` pairs."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    return _build(n, ((int(u), int(v), None) for u, v in edges), dedupe)


def parse_edge_list(text: str | Iterable[str], dedupe: bool = False) -> Graph:
    """Parse edge-list text.

    Each data line holds two non-negative integers ``u v``. Blank lines and
    lines starting with ``#`` are skipped. An optional first data line
    ``p <n> <m>`` fixes the vertex count, which is the only way to declare
    isolated vertices. Without it every id in ``0..max`` must occur in some
    edge, so files with gaps (for instance 1-based ids) are rejected.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    n_header: Optional[int] = None
    m_header: Optional[int] = None
    pairs: List[Tuple[int, int, int]] = []
    seen_data = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if seen_data:
                raise ParseError("header must be the first non-comment line", lineno)
            if len(tokens) != 3:
                raise ParseError("header must read 'p <n> <m>'", lineno)
            n_header, m_header = _nonneg(tokens[1], lineno), _nonneg(tokens[2], lineno)
            seen_data = True
            continue
        seen_data = True
        if len(tokens) != 2:
            raise ParseError(f"expected two vertex ids, got {len(tokens)} tokens", lineno)
        pairs.append((_nonneg(tokens[0], lineno), _nonneg(tokens[1], lineno), lineno))

    if n_header is not None:
        n = n_header
        for u, v, lineno in pairs:
            if u >= n or v >= n:
                raise ParseError(f"vertex id exceeds header count {n}", lineno)
    else:
        n = 1 + max((max(u, v) for u, v, _ in pairs), default=-1)
        used = bytearray(n)
        for u, v, _ in pairs:
            used[u] = used[v] = 1
        if not all(used):
            missing = used.index(0)
            raise ParseError(f"vertex id {missing} never occurs; sparse ids need a 'p <n> <m>' header")

    g = _build(n, pairs, dedupe)
    if m_header is not None and m_header != g.m:
        raise ParseError(f"header declares {m_header} edges, found {g.m}")
    return g


def _nonneg(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"malformed vertex id {token!r}", lineno) from None
    if value < 0:
        raise ParseError(f"negative vertex id {value}", lineno)
    return value


def to_edge_text(g: Graph) -> str:
    """Canonical edge-list text: header line, then ``u v`` with ``u < v``."""
    out = [f"p {g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def random_k_degenerate(n: int, k: int, seed: int) -> Graph:
    """Random graph of degeneracy at most ``k``.

    Vertices arrive one at a time; vertex ``i > 0`` picks a count uniformly
    from ``1..min(k, i)`` and joins that many distinct earlier vertices.
    Labels are shuffled afterwards so the arrival order is not the identity.
    """
    if n < 1 or k < 0:
        raise GraphError("need n >= 1 and k >= 0")
    rng = random.Random(seed)
    edges = []
    if k > 0:
        for i in range(1, n):
            c = rng.randint(1, min(k, i))
            for j in rng.sample(range(i), c):
                edges.append((i, j))
    label = list(range(n))
    rng.shuffle(label)
    return from_edges(n, ((label[u], label[v]) for u, v in edges))
