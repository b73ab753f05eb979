"""Core automata types and operations.

States are integers.  Alphabet symbols are string labels; inside words we
always use symbol *indices* (position in the alphabet tuple).  All automata
are immutable after construction and every operation returns a fresh value,
so everything here is safe to share between threads.

Counts of strings are plain Python ints (arbitrary precision); the
distinguished value INFINITE is used where a symmetric difference is not
finite.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass


INFINITE = float("inf")

#: A string-difference count: an exact nonnegative int, or INFINITE.
DiffCount = int | float


class AutomatonError(ValueError):
    """Raised on malformed automata or invalid operation arguments."""


@dataclass(frozen=True)
class Nfa:
    """Non-deterministic finite automaton without epsilon transitions."""

    state_count: int
    alphabet: tuple[str, ...]
    transitions: frozenset[tuple[int, int, int]]  # (src, symbol index, dst)
    finals: frozenset[int]
    initial: int = 0

    def __post_init__(self):
        n, k = self.state_count, len(self.alphabet)
        if n <= 0:
            raise AutomatonError("NFA needs at least one state")
        if not (0 <= self.initial < n):
            raise AutomatonError("initial state out of range")
        for src, sym, dst in self.transitions:
            if not (0 <= src < n and 0 <= dst < n and 0 <= sym < k):
                raise AutomatonError(f"transition out of range: {(src, sym, dst)}")
        if not all(0 <= q < n for q in self.finals):
            raise AutomatonError("final state out of range")


@dataclass(frozen=True)
class Dfa:
    """Deterministic finite automaton.

    ``delta[q][s]`` is the successor of state ``q`` on symbol index ``s``;
    ``None`` marks a missing transition (only legal in freshly parsed
    automata, before complete_and_trim).
    """

    alphabet: tuple[str, ...]
    initial: int
    delta: tuple[tuple[int | None, ...], ...]
    finals: frozenset[int]

    def __post_init__(self):
        n, k = len(self.delta), len(self.alphabet)
        if n == 0:
            raise AutomatonError("DFA needs at least one state")
        if not (0 <= self.initial < n):
            raise AutomatonError("initial state out of range")
        for row in self.delta:
            if len(row) != k:
                raise AutomatonError("delta row has wrong arity")
            for dst in row:
                if dst is not None and not (0 <= dst < n):
                    raise AutomatonError("transition target out of range")
        if not all(0 <= q < n for q in self.finals):
            raise AutomatonError("final state out of range")

    @property
    def state_count(self) -> int:
        return len(self.delta)

    @property
    def is_total(self) -> bool:
        return all(dst is not None for row in self.delta for dst in row)

    def step(self, q: int, word) -> int | None:
        """Run ``word`` (iterable of symbol indices) from state ``q``."""
        for s in word:
            q = self.delta[q][s]
            if q is None:
                return None
        return q

    def accepts(self, word) -> bool:
        q = self.step(self.initial, word)
        return q is not None and q in self.finals

    def predecessors(self) -> list[list[tuple[int, int]]]:
        """Reverse transition index: for each state, its (src, symbol) edges,
        sorted by (src, symbol)."""
        preds: list[list[tuple[int, int]]] = [[] for _ in self.delta]
        for src, row in enumerate(self.delta):
            for sym, dst in enumerate(row):
                if dst is not None:
                    preds[dst].append((src, sym))
        for lst in preds:
            lst.sort()
        return preds


@dataclass(frozen=True)
class KernelInfo:
    """Kernel/preamble split of a DFA's states.

    A state is kernel iff it is reached by infinitely many strings, i.e. some
    path from the initial state to it passes through a cycle.
    """

    is_kernel: tuple[bool, ...]
    preamble_order: tuple[int, ...]  # topological order of the preamble DAG

    @property
    def kernel(self) -> frozenset[int]:
        return frozenset(q for q, k in enumerate(self.is_kernel) if k)

    @property
    def preamble(self) -> frozenset[int]:
        return frozenset(q for q, k in enumerate(self.is_kernel) if not k)


def _reachable_order(d: Dfa) -> list[int]:
    """States reachable from the initial state, in BFS discovery order
    (symbols in alphabet order)."""
    order = [d.initial]
    seen = {d.initial}
    head = 0
    while head < len(order):
        q = order[head]
        head += 1
        for dst in d.delta[q]:
            if dst is not None and dst not in seen:
                seen.add(dst)
                order.append(dst)
    return order


def canonicalize(d: Dfa) -> Dfa:
    """Drop unreachable states and renumber the rest in BFS order.

    This is the canonical numbering used after every transformation so that
    outputs are byte-deterministic.
    """
    order = _reachable_order(d)
    remap = {old: new for new, old in enumerate(order)}
    delta = tuple(
        tuple(None if dst is None else remap[dst] for dst in d.delta[old])
        for old in order
    )
    finals = frozenset(remap[q] for q in d.finals if q in remap)
    return Dfa(d.alphabet, 0, delta, finals)


def determinize(n: Nfa) -> Dfa:
    """Subset construction.  The result is total (the empty subset acts as a
    sink) and accessible, with states numbered in BFS discovery order."""
    k = len(n.alphabet)
    succ: list[list[set[int]]] = [[set() for _ in range(k)] for _ in range(n.state_count)]
    for src, sym, dst in n.transitions:
        succ[src][sym].add(dst)

    start = frozenset([n.initial])
    index = {start: 0}
    order = [start]
    delta_rows: list[tuple[int, ...]] = []
    head = 0
    while head < len(order):
        subset = order[head]
        head += 1
        row = []
        for sym in range(k):
            nxt: set[int] = set()
            for q in subset:
                nxt |= succ[q][sym]
            fs = frozenset(nxt)
            if fs not in index:
                index[fs] = len(order)
                order.append(fs)
            row.append(index[fs])
        delta_rows.append(tuple(row))
    finals = frozenset(i for i, subset in enumerate(order) if subset & n.finals)
    return Dfa(n.alphabet, 0, tuple(delta_rows), finals)


def complete_and_trim(d: Dfa) -> Dfa:
    """Make the transition function total (adding a fresh non-final sink only
    if needed), drop unreachable states and renumber canonically."""
    if not d.is_total:
        sink = d.state_count
        delta = tuple(
            tuple(sink if dst is None else dst for dst in row) for row in d.delta
        ) + ((sink,) * len(d.alphabet),)
        d = Dfa(d.alphabet, d.initial, delta, d.finals)
    return canonicalize(d)


def minimize(d: Dfa) -> Dfa:
    """Hopcroft partition refinement; returns the minimal DFA for L(d) with
    canonical BFS numbering."""
    if not d.is_total:
        raise AutomatonError("minimize requires a total DFA")
    d = canonicalize(d)
    n, k = d.state_count, len(d.alphabet)

    preds: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(k)]
    for src in range(n):
        row = d.delta[src]
        for sym in range(k):
            preds[sym][row[sym]].append(src)

    block_of = [0] * n
    finals = d.finals
    blocks: list[set[int]] = []
    nonfin = {q for q in range(n) if q not in finals}
    fin = set(finals)
    for s in (fin, nonfin):
        if s:
            for q in s:
                block_of[q] = len(blocks)
            blocks.append(s)

    worklist: set[tuple[int, int]] = {(b, sym) for b in range(len(blocks)) for sym in range(k)}
    while worklist:
        bi, sym = worklist.pop()
        splitter = blocks[bi]
        pre: set[int] = set()
        for q in splitter:
            pre.update(preds[sym][q])
        touched: dict[int, set[int]] = {}
        for q in pre:
            touched.setdefault(block_of[q], set()).add(q)
        for ti, inside in touched.items():
            block = blocks[ti]
            if len(inside) == len(block):
                continue
            outside = block - inside
            small, large = (inside, outside) if len(inside) <= len(outside) else (outside, inside)
            blocks[ti] = large
            new_idx = len(blocks)
            blocks.append(small)
            for q in small:
                block_of[q] = new_idx
            # The smaller half always suffices as the new splitter; if the old
            # block is still queued it now denotes the larger half.
            for s2 in range(k):
                worklist.add((new_idx, s2))

    m = len(blocks)
    delta = tuple(
        tuple(block_of[d.delta[next(iter(blocks[b]))][sym]] for sym in range(k))
        for b in range(m)
    )
    fin_blocks = frozenset(block_of[q] for q in finals)
    return canonicalize(Dfa(d.alphabet, block_of[d.initial], delta, fin_blocks))


def kernel_preamble(d: Dfa) -> KernelInfo:
    """Classify the states of an accessible DFA into kernel and preamble.

    States on a cycle are found via strongly-connected components (any
    component with an internal edge); kernelness then propagates forward.
    """
    if not d.is_total:
        raise AutomatonError("kernel_preamble requires a total DFA")
    n = d.state_count
    reachable = set(_reachable_order(d))
    if len(reachable) != n:
        raise AutomatonError("kernel_preamble requires an accessible DFA")

    # Iterative Tarjan SCC.
    index_of = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comp_of = [-1] * n
    comp_count = 0
    counter = 0
    for root in range(n):
        if index_of[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            q, pi = work.pop()
            if pi == 0:
                index_of[q] = low[q] = counter
                counter += 1
                stack.append(q)
                on_stack[q] = True
            recurse = False
            row = d.delta[q]
            for j in range(pi, len(row)):
                dst = row[j]
                if index_of[dst] == -1:
                    work.append((q, j + 1))
                    work.append((dst, 0))
                    recurse = True
                    break
                elif on_stack[dst]:
                    low[q] = min(low[q], index_of[dst])
            if recurse:
                continue
            if low[q] == index_of[q]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp_of[w] = comp_count
                    if w == q:
                        break
                comp_count += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[q])

    comp_size = [0] * comp_count
    for q in range(n):
        comp_size[comp_of[q]] += 1
    cyclic = [False] * comp_count
    for q in range(n):
        c = comp_of[q]
        if comp_size[c] > 1:
            cyclic[c] = True
        elif q in d.delta[q]:  # self-loop
            cyclic[c] = True

    is_kernel = [cyclic[comp_of[q]] for q in range(n)]
    queue = deque(q for q in range(n) if is_kernel[q])
    while queue:
        q = queue.popleft()
        for dst in d.delta[q]:
            if not is_kernel[dst]:
                is_kernel[dst] = True
                queue.append(dst)

    # Kahn topological order of the preamble-induced DAG.
    preamble = [q for q in range(n) if not is_kernel[q]]
    indeg = {q: 0 for q in preamble}
    for q in preamble:
        for dst in d.delta[q]:
            if dst in indeg:
                indeg[dst] += 1
    ready = sorted(q for q in preamble if indeg[q] == 0)
    order: list[int] = []
    heapq.heapify(ready)
    while ready:
        q = heapq.heappop(ready)
        order.append(q)
        for dst in set(s for s in d.delta[q] if s in indeg):
            indeg[dst] -= d.delta[q].count(dst)
            if indeg[dst] == 0:
                heapq.heappush(ready, dst)
    if len(order) != len(preamble):
        raise AutomatonError("preamble subgraph is not acyclic (internal error)")
    return KernelInfo(tuple(is_kernel), tuple(order))


def merge(d: Dfa, p: int, q: int) -> Dfa:
    """Redirect all incoming transitions of ``p`` to ``q`` and delete ``p``.

    The initial state becomes ``q`` if it was ``p``; the finality of ``q`` is
    kept even if ``p`` was final.  The result keeps the remaining states in
    their original relative order and is not trimmed.
    """
    n = d.state_count
    if not (0 <= p < n and 0 <= q < n):
        raise AutomatonError("merge states out of range")
    if p == q:
        return d
    remap = {}
    for old in range(n):
        if old == p:
            continue
        remap[old] = len(remap)
    target = remap[q]
    delta = tuple(
        tuple(
            None if dst is None else (target if dst == p else remap[dst])
            for dst in d.delta[old]
        )
        for old in range(n)
        if old != p
    )
    initial = target if d.initial == p else remap[d.initial]
    finals = frozenset(remap[s] for s in d.finals if s != p)
    return Dfa(d.alphabet, initial, delta, finals)


def _diff_from(m: Dfa, n: Dfa, qm: int, qn: int) -> DiffCount:
    """Number of strings on which the right languages of ``qm`` (in m) and
    ``qn`` (in n) disagree; INFINITE if that symmetric difference is not
    finite.  Works on the reachable part of the product automaton."""
    if m.alphabet != n.alphabet:
        raise AutomatonError("diff requires identical alphabets")
    if not (m.is_total and n.is_total):
        raise AutomatonError("diff requires total DFAs")
    k = len(m.alphabet)

    start = (qm, qn)
    index = {start: 0}
    order = [start]
    succ: list[tuple[int, ...]] = []
    head = 0
    while head < len(order):
        a, b = order[head]
        head += 1
        row = []
        for sym in range(k):
            nxt = (m.delta[a][sym], n.delta[b][sym])
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            row.append(index[nxt])
        succ.append(tuple(row))

    size = len(order)
    diff = [((a in m.finals) != (b in n.finals)) for a, b in order]

    # States that can reach a diff state.
    rpreds: list[list[int]] = [[] for _ in range(size)]
    for src, row in enumerate(succ):
        for dst in row:
            rpreds[dst].append(src)
    relevant = [False] * size
    queue = deque(i for i in range(size) if diff[i])
    for i in range(size):
        if diff[i]:
            relevant[i] = True
    while queue:
        v = queue.popleft()
        for u in rpreds[v]:
            if not relevant[u]:
                relevant[u] = True
                queue.append(u)

    if not relevant[0]:
        return 0

    # The relevant subgraph must be acyclic, otherwise the diff is infinite.
    indeg = [0] * size
    for src in range(size):
        if relevant[src]:
            for dst in succ[src]:
                if relevant[dst]:
                    indeg[dst] += 1
    topo = deque(i for i in range(size) if relevant[i] and indeg[i] == 0)
    order2: list[int] = []
    while topo:
        v = topo.popleft()
        order2.append(v)
        for dst in succ[v]:
            if relevant[dst]:
                indeg[dst] -= 1
                if indeg[dst] == 0:
                    topo.append(dst)
    if len(order2) != sum(relevant):
        return INFINITE

    paths = [0] * size
    paths[0] = 1  # the start pair, reached by the empty string
    total = 0
    for v in order2:
        if diff[v]:
            total += paths[v]
        for dst in succ[v]:
            if relevant[dst]:
                paths[dst] += paths[v]
    return total


def diff_count(m: Dfa, n: Dfa) -> DiffCount:
    """Exact size of L(m) symmetric-difference L(n), or INFINITE."""
    return _diff_from(m, n, m.initial, n.initial)


def isomorphic(m: Dfa, n: Dfa) -> bool:
    """DFA isomorphism of accessible DFAs, decided by parallel BFS."""
    if m.alphabet != n.alphabet or m.state_count != n.state_count:
        return False
    mapping = {m.initial: n.initial}
    queue = deque([(m.initial, n.initial)])
    while queue:
        a, b = queue.popleft()
        if (a in m.finals) != (b in n.finals):
            return False
        for sym in range(len(m.alphabet)):
            da, db = m.delta[a][sym], n.delta[b][sym]
            if (da is None) != (db is None):
                return False
            if da is None:
                continue
            if da in mapping:
                if mapping[da] != db:
                    return False
            else:
                if db in set(mapping.values()):
                    return False
                mapping[da] = db
                queue.append((da, db))
    return len(mapping) == m.state_count
