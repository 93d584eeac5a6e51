"""Binary-partition enumeration of induced subtrees.

The search state lives in flat integer arrays:

* ``CAND`` is a doubly linked list threaded through ``nxt``/``prv`` with a
  sentinel at index ``n``; it is kept in ascending vertex order so the
  smallest candidate is always ``nxt[n]``.
* ``X`` is a flag array.
* For every vertex ``u`` the list ``gamma(u)`` holds the smaller neighbours
  of ``u`` that are not in ``X``. Each (u, smaller neighbour) pair owns one
  slot in ``gnext``/``gprev``; forbidding ``w`` unlinks the slots of ``w``
  in the lists of its larger neighbours, and unlinked slots keep their own
  pointers so they can be relinked in place.

Every mutation is appended to a journal and undone in LIFO order when a
branch of the search returns.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, TextIO

from .degeneracy import OrderedGraph

# journal entry = vertex << 2 | op
_CAND_REMOVED = 0
_CAND_INSERTED = 1
_FORBID = 2
_INCLUDE = 3


class SolutionSink:
    """Receiver of enumeration events.

    ``mark`` fires once per solution. Subclasses that set ``wants_sets`` get
    ``solution`` with the ascending original ids first; those that set
    ``wants_deltas`` get ``include``/``backtrack`` as vertices enter and
    leave the current subtree.
    """

    wants_sets = False
    wants_deltas = False

    def solution(self, vertices: List[int]) -> None:
        pass

    def include(self, v: int) -> None:
        pass

    def backtrack(self, v: int) -> None:
        pass

    def mark(self) -> None:
        pass


class CountSink(SolutionSink):
    def __init__(self) -> None:
        self.count = 0

    def mark(self) -> None:
        self.count += 1


class ListSink(SolutionSink):
    """Collects every solution as a list of original ids."""

    wants_sets = True

    def __init__(self) -> None:
        self.solutions: List[List[int]] = []

    def solution(self, vertices: List[int]) -> None:
        self.solutions.append(vertices)


class CallbackSink(SolutionSink):
    wants_sets = True

    def __init__(self, fn: Callable[[List[int]], None]) -> None:
        self.fn = fn

    def solution(self, vertices: List[int]) -> None:
        self.fn(vertices)


class DeltaSink(SolutionSink):
    """Writes the ``+v`` / ``-v`` / ``!`` event stream, one token per line."""

    wants_deltas = True

    def __init__(self, out: TextIO) -> None:
        self.write = out.write

    def include(self, v: int) -> None:
        self.write(f"+{v}\n")

    def backtrack(self, v: int) -> None:
        self.write(f"-{v}\n")

    def mark(self) -> None:
        self.write("!\n")


class DeltaRecorder(SolutionSink):
    """Keeps the delta stream in memory as ``(op, v)`` tuples; ``v`` is None for marks."""

    wants_deltas = True

    def __init__(self) -> None:
        self.events: list = []

    def include(self, v: int) -> None:
        self.events.append(("+", v))

    def backtrack(self, v: int) -> None:
        self.events.append(("-", v))

    def mark(self) -> None:
        self.events.append(("!", None))

    def replay(self) -> List[List[int]]:
        current: set = set()
        out = []
        for op, v in self.events:
            if op == "+":
                assert v not in current
                current.add(v)
            elif op == "-":
                current.remove(v)
            else:
                out.append(sorted(current))
        return out


@dataclass
class EnumerationOptions:
    include_empty: bool = False
    # stop after this many solutions; None enumerates everything
    max_solutions: Optional[int] = None
    # recompute the state from scratch at every call and compare snapshots
    debug: bool = False


@dataclass
class EnumerationStats:
    N: int = 0
    iterations: int = 0
    max_undo_entries: int = 0
    elapsed_ns: int = 0
    # building the linked structures; linear in n + m, excluded from elapsed_ns
    setup_ns: int = 0
    truncated: bool = False
    restorations_checked: int = field(default=0, repr=False)

    @property
    def elapsed(self) -> float:
        return self.elapsed_ns / 1e9


class InvariantError(AssertionError):
    pass


class EnumerationState:
    """S, CAND, X and the gamma lists for one enumeration run.

    ``track_gamma=False`` skips gamma maintenance; the basic update rule
    never reads it.
    """

    def __init__(self, g: OrderedGraph, track_gamma: bool = True):
        n = g.n
        self.g = g
        self.n = n
        self.track_gamma = track_gamma
        self.nxt = [n] * (n + 1)
        self.prv = [n] * (n + 1)
        self.in_cand = [False] * n
        self.in_x = [False] * n
        self.S: List[int] = []
        self.journal: List[int] = []

        # gamma slots: 0..n-1 are list heads, then one slot per (u, v) with v < u
        size = n + g.m
        self.gnext = list(range(size))
        self.gprev = list(range(size))
        self.gval = [-1] * size
        self.forbid_slots: List[List[int]] = [[] for _ in range(n)]
        s = n
        for u in range(n):
            last = u
            for v in g.smaller[u]:
                self.gval[s] = v
                self.gprev[s] = last
                self.gnext[last] = s
                self.forbid_slots[v].append(s)
                last = s
                s += 1
            self.gnext[last] = u
            self.gprev[u] = last

    # -- primitive, journaled mutations ---------------------------------

    def cand_unlink(self, v: int) -> None:
        nxt, prv = self.nxt, self.prv
        nxt[prv[v]] = nxt[v]
        prv[nxt[v]] = prv[v]
        self.in_cand[v] = False
        self.journal.append(v << 2 | _CAND_REMOVED)

    def cand_insert_after(self, p: int, v: int) -> None:
        nxt, prv = self.nxt, self.prv
        q = nxt[p]
        nxt[p] = v
        prv[v] = p
        nxt[v] = q
        prv[q] = v
        self.in_cand[v] = True
        self.journal.append(v << 2 | _CAND_INSERTED)

    def gamma_on_forbid(self, w: int, journal: bool = True) -> None:
        """Put ``w`` into X and drop it from gamma of each larger neighbour."""
        assert not self.in_x[w], f"vertex {w} already forbidden"
        self.in_x[w] = True
        if self.track_gamma:
            gnext, gprev = self.gnext, self.gprev
            for s in self.forbid_slots[w]:
                gnext[gprev[s]] = gnext[s]
                gprev[gnext[s]] = gprev[s]
        if journal:
            self.journal.append(w << 2 | _FORBID)

    def gamma_on_unforbid(self, w: int) -> None:
        """Inverse of :meth:`gamma_on_forbid`; only valid in LIFO order."""
        assert self.in_x[w], f"vertex {w} is not forbidden"
        if self.track_gamma:
            gnext, gprev = self.gnext, self.gprev
            for s in reversed(self.forbid_slots[w]):
                assert gnext[gprev[s]] == gnext[s] and gprev[gnext[s]] == gprev[s], "unforbid out of LIFO order"
                gnext[gprev[s]] = s
                gprev[gnext[s]] = s
        self.in_x[w] = False

    def push_include(self, u: int) -> None:
        self.S.append(u)
        self.journal.append(u << 2 | _INCLUDE)

    def undo(self, mark: int) -> None:
        """Replay inverses of journal entries until its length is ``mark``."""
        journal = self.journal
        nxt, prv, in_cand = self.nxt, self.prv, self.in_cand
        while len(journal) > mark:
            e = journal.pop()
            v = e >> 2
            op = e & 3
            if op == _CAND_REMOVED:
                nxt[prv[v]] = v
                prv[nxt[v]] = v
                in_cand[v] = True
            elif op == _CAND_INSERTED:
                nxt[prv[v]] = nxt[v]
                prv[nxt[v]] = prv[v]
                in_cand[v] = False
            elif op == _FORBID:
                self.gamma_on_unforbid(v)
            else:
                top = self.S.pop()
                assert top == v

    # -- views ------------------------------------------------------------

    def cand(self) -> List[int]:
        out = []
        n, nxt = self.n, self.nxt
        v = nxt[n]
        while v != n:
            out.append(v)
            v = nxt[v]
        return out

    def X(self) -> List[int]:
        return [v for v in range(self.n) if self.in_x[v]]

    def gamma(self, u: int) -> List[int]:
        out = []
        gnext, gval = self.gnext, self.gval
        s = gnext[u]
        while s != u:
            out.append(gval[s])
            s = gnext[s]
        return out

    def snapshot(self) -> tuple:
        """Abstract state: contents and order of every live list plus flags."""
        n, prv = self.n, self.prv
        backward = []
        v = prv[n]
        while v != n:
            backward.append(v)
            v = prv[v]
        gam = tuple(tuple(self.gamma(u)) for u in range(n)) if self.track_gamma else ()
        return (
            tuple(self.S),
            tuple(self.cand()),
            tuple(reversed(backward)),
            tuple(self.in_cand),
            tuple(self.in_x),
            gam,
        )

    # -- search steps -----------------------------------------------------

    def pop_min_candidate(self) -> int:
        u = self.nxt[self.n]
        assert u != self.n, "CAND is empty"
        self.cand_unlink(u)
        return u

    def update_on_exclude(self, u: int) -> None:
        self.gamma_on_forbid(u)

    def update_on_include_basic(self, u: int) -> None:
        """Add ``u`` to S scanning all of N(u).

        ``u`` must be the former minimum of CAND, already unlinked. Neighbours
        in CAND close a cycle and move to X; neighbours in neither CAND nor X
        become candidates. Those below ``u`` sort before every remaining
        candidate, the rest are merged in place.
        """
        if not self.in_x[u]:
            self.gamma_on_forbid(u)
        self.push_include(u)
        n, nxt, in_cand, in_x = self.n, self.nxt, self.in_cand, self.in_x
        p = n
        for v in self.g.smaller[u]:
            if not in_x[v]:
                self.cand_insert_after(p, v)
                p = v
        for v in self.g.larger[u]:
            if in_cand[v]:
                self.cand_unlink(v)
                self.gamma_on_forbid(v)
            elif not in_x[v]:
                while nxt[p] != n and nxt[p] < v:
                    p = nxt[p]
                self.cand_insert_after(p, v)
                p = v

    def update_on_include_improved(self, u: int) -> None:
        """Add ``u`` to S touching only its larger neighbours and gamma(u).

        Same resulting state as :meth:`update_on_include_basic`. Since ``u``
        was the smallest candidate, CAND meets N(u) only inside the (at most
        k) larger neighbours, and the smaller neighbours outside X are exactly
        gamma(u).
        """
        if not self.in_x[u]:
            self.gamma_on_forbid(u)
        self.push_include(u)
        n, nxt, in_cand, in_x = self.n, self.nxt, self.in_cand, self.in_x
        p = n
        for v in self.g.larger[u]:
            if in_cand[v]:
                self.cand_unlink(v)
                self.gamma_on_forbid(v)
            elif not in_x[v]:
                while nxt[p] != n and nxt[p] < v:
                    p = nxt[p]
                self.cand_insert_after(p, v)
                p = v
        gnext, gval = self.gnext, self.gval
        p = n
        s = gnext[u]
        while s != u:
            v = gval[s]
            self.cand_insert_after(p, v)
            p = v
            s = gnext[s]

    def start_root(self, r: int) -> int:
        """Make ``r`` the root of a new search; returns the journal mark to undo to."""
        self.gamma_on_forbid(r, journal=False)
        mark = len(self.journal)
        self.push_include(r)
        p = self.n
        for v in self.g.larger[r]:
            if not self.in_x[v]:
                self.cand_insert_after(p, v)
                p = v
        return mark

    # -- debug checks -----------------------------------------------------

    def check_invariants(self) -> None:
        """Recompute S/CAND/X/gamma relations from scratch."""
        g = self.g
        n = self.n
        in_s = [False] * n
        for v in self.S:
            in_s[v] = True
        cand = self.cand()
        if cand != sorted(cand) or len(set(cand)) != len(cand):
            raise InvariantError(f"CAND not strictly ascending: {cand}")
        if set(cand) != {v for v in range(n) if self.in_cand[v]}:
            raise InvariantError("CAND flags disagree with CAND list")
        for v in self.S:
            if not self.in_x[v]:
                raise InvariantError(f"S member {v} not in X")
        if self.S:
            expected = []
            for v in range(n):
                if self.in_x[v]:
                    continue
                adj = sum(1 for w in g.neighbors(v) if in_s[w])
                if adj == 1:
                    expected.append(v)
            if cand != expected:
                raise InvariantError(f"CAND {cand} != {expected} for S={sorted(self.S)}")
            edges = sum(1 for v in self.S for w in g.larger[v] if in_s[w])
            if edges != len(self.S) - 1:
                raise InvariantError(f"S={sorted(self.S)} does not induce a tree")
        if self.track_gamma:
            for u in range(n):
                want = [v for v in g.smaller[u] if not self.in_x[v]]
                if self.gamma(u) != want:
                    raise InvariantError(f"gamma({u}) = {self.gamma(u)}, expected {want}")


def _run(g: OrderedGraph, sink: Optional[SolutionSink], options: Optional[EnumerationOptions], improved: bool) -> EnumerationStats:
    options = options or EnumerationOptions()
    stats = EnumerationStats()
    setup_start = time.perf_counter_ns()
    state = EnumerationState(g, track_gamma=improved)
    start = time.perf_counter_ns()
    stats.setup_ns = start - setup_start
    include = state.update_on_include_improved if improved else state.update_on_include_basic
    label = g.orig_label
    n = g.n
    nxt = state.nxt
    journal = state.journal
    S = state.S
    debug = options.debug
    limit = options.max_solutions
    wants_sets = sink is not None and sink.wants_sets
    wants_deltas = sink is not None and sink.wants_deltas
    N = 0
    iterations = 0
    peak = 0
    stopped = False

    def emit() -> None:
        if wants_sets:
            sink.solution(sorted(label[v] for v in S))
        if sink is not None:
            sink.mark()

    if options.include_empty and limit != 0:
        N += 1
        emit()
    if limit is not None and N >= limit:
        stopped = n > 0

    snapshots: List[tuple] = []
    r = 0
    while r < n and not stopped:
        root_mark = state.start_root(r)
        if wants_deltas:
            sink.include(label[r])
        frames: List[int] = []  # flat pairs (journal mark, vertex); vertex < 0 once included
        while True:
            # entering a call
            iterations += 1
            if debug:
                state.check_invariants()
                snapshots.append(state.snapshot())
            if nxt[n] == n:
                N += 1
                if len(journal) > peak:
                    peak = len(journal)
                emit()
                if limit is not None and N >= limit:
                    stopped = True
                    break
                if debug:
                    _compare(snapshots.pop(), state.snapshot(), stats)
                # returning
                entered = False
                while frames:
                    u = frames.pop()
                    mark = frames.pop()
                    if u >= 0:
                        include(u)
                        if wants_deltas:
                            sink.include(label[u])
                        frames.append(mark)
                        frames.append(~u)
                        entered = True
                        break
                    u = ~u
                    state.undo(mark)
                    if wants_deltas:
                        sink.backtrack(label[u])
                    if debug:
                        _compare(snapshots.pop(), state.snapshot(), stats)
                if not entered:
                    break
            else:
                mark = len(journal)
                u = state.pop_min_candidate()
                state.update_on_exclude(u)
                frames.append(mark)
                frames.append(u)
        if stopped:
            break
        state.undo(root_mark)
        if wants_deltas:
            sink.backtrack(label[r])
        r += 1

    stats.N = N
    stats.iterations = iterations
    stats.max_undo_entries = peak
    stats.truncated = stopped
    stats.elapsed_ns = time.perf_counter_ns() - start
    return stats


def _compare(before: tuple, after: tuple, stats: EnumerationStats) -> None:
    if before != after:
        raise InvariantError("state not restored after recursive call")
    stats.restorations_checked += 1


def enumerate_subtrees(g: OrderedGraph, sink: Optional[SolutionSink] = None, options: Optional[EnumerationOptions] = None) -> EnumerationStats:
    """Enumerate every induced subtree of ``g`` once, using gamma-list updates.

    Roots are taken in ascending relabelled order; each subtree is found
    from its smallest vertex. Within a root the exclude branch is explored
    before the include branch, which fixes the emission order.
    """
    return _run(g, sink, options, improved=True)


def enumerate_basic(g: OrderedGraph, sink: Optional[SolutionSink] = None, options: Optional[EnumerationOptions] = None) -> EnumerationStats:
    """Same search and emission order as :func:`enumerate_subtrees`, with O(deg) include updates."""
    return _run(g, sink, options, improved=False)


def adj(S: Sequence[int], u: int, g: OrderedGraph) -> int:
    """Number of members of ``S`` adjacent to ``u``."""
    members = set(S)
    return sum(1 for v in g.neighbors(u) if v in members)


def extend_keeps_tree(S: Sequence[int], u: int, g: OrderedGraph) -> bool:
    """Whether adding ``u`` to the induced subtree ``S`` leaves an induced subtree."""
    if not S:
        return True
    return adj(S, u, g) == 1
