"""Exact error accounting on a minimal DFA.

ErrorMatrix holds, for almost-equivalent state pairs, the exact number of
strings on which their right languages disagree.  AccessCounts holds, for
every preamble state, the exact number of strings leading into it.  Both use
plain Python ints, so counts never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import AutomatonError, Dfa, KernelInfo
from .almost_equiv import AlmostEquivPartition


class ErrorMatrix:
    """Sparse, lazily computed table E[q, p] = |L(q,M) symdiff L(p,M)| over
    almost-equivalent pairs.

    Entries are memoized; each unordered pair is computed once.  The fill is
    single-threaded; after it, concurrent reads are safe.
    """

    def __init__(self, d: Dfa, part: AlmostEquivPartition):
        self._d = d
        self._part = part
        self._cache: dict[tuple[int, int], int] = {}

    def entry(self, q: int, p: int) -> int:
        """E[q, p]; raises if q and p are not almost-equivalent."""
        if not self._part.same_block(q, p):
            raise AutomatonError(f"states {q} and {p} are not almost-equivalent")
        if q == p:
            return 0
        d = self._d
        cache = self._cache
        key = (q, p) if q < p else (p, q)
        if key in cache:
            return cache[key]
        # Explicit evaluation stack: pending chains can be Theta(n^2) deep,
        # too deep for call recursion.
        stack = [key]
        while stack:
            a, b = stack[-1]
            missing = []
            for sym in range(len(d.alphabet)):
                sa, sb = d.delta[a][sym], d.delta[b][sym]
                if sa != sb:
                    dep = (sa, sb) if sa < sb else (sb, sa)
                    if dep not in cache:
                        missing.append(dep)
            if missing:
                stack.extend(missing)
                continue
            stack.pop()
            if (a, b) in cache:
                continue
            total = 1 if (a in d.finals) != (b in d.finals) else 0
            for sym in range(len(d.alphabet)):
                sa, sb = d.delta[a][sym], d.delta[b][sym]
                if sa != sb:
                    total += cache[(sa, sb) if sa < sb else (sb, sa)]
            cache[(a, b)] = total
        return cache[key]

    def fill(self) -> None:
        """Compute every almost-equivalent pair (the O(mn) full pass)."""
        for block in self._part.blocks:
            for i, q in enumerate(block):
                for p in block[i + 1:]:
                    self.entry(q, p)

    def computed_items(self) -> dict[tuple[int, int], int]:
        return dict(self._cache)


@dataclass(frozen=True)
class AccessCounts:
    """Number of access strings per preamble state (None for kernel states)."""

    counts: tuple[int | None, ...]

    def count(self, q: int) -> int:
        c = self.counts[q]
        if c is None:
            raise AutomatonError(f"state {q} is a kernel state; its access count is infinite")
        return c


def comp_access(d: Dfa, k: KernelInfo) -> AccessCounts:
    """Dynamic programming over the preamble topological order: the count of
    a state is the sum of the counts of its incoming transitions, plus one
    for the initial state (reached by the empty string)."""
    preds = d.predecessors()
    counts: list[int | None] = [None] * d.state_count
    for q in k.preamble_order:
        total = 1 if q == d.initial else 0
        for p, _sym in preds[q]:
            if k.is_kernel[p]:
                raise AutomatonError(
                    f"preamble state {q} has kernel predecessor {p}"
                )
            total += counts[p]  # type: ignore[operator]
        counts[q] = total
    return AccessCounts(tuple(counts))


def merge_error_count(p: int, q: int, e: ErrorMatrix, w: AccessCounts) -> int:
    """Exact number of errors committed by merging preamble state ``p`` into
    its almost-equivalent mate ``q``: every access string of p, concatenated
    with every string their right languages disagree on.

    The product is the true error count whenever p is unreachable from q,
    which covers every merge the optimizer performs (q is then a kernel
    state, and kernel states never reach the preamble).  When q can reach p,
    the merge reroutes runs back through the redirected transitions and the
    committed errors are no longer those of a single detour; the count can
    even turn infinite.
    """
    return w.count(p) * e.entry(p, q)
