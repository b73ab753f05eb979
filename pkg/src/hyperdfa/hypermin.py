"""Hyper-minimization and optimal (fewest-errors) hyper-minimization.

A hyper-minimal DFA for M recognizes the same language up to finitely many
errors and is as small as possible.  All hyper-minimal DFAs for M share
their kernel structure and differ only in three independent choice points:
the initial state (when the initial state has kernel mates), the finality of
each merged block of preamble states, and the kernel target of each
transition leaving such a block.  Scoring every choice point exactly, with
access counts and the pairwise error table, yields the hyper-minimal DFA
committing the provably least number of errors, together with that count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .automata import (
    AutomatonError,
    Dfa,
    KernelInfo,
    Nfa,
    canonicalize,
    complete_and_trim,
    determinize,
    diff_count,
    kernel_preamble,
    minimize,
)
from .almost_equiv import AlmostEquivPartition, compute_almost_equivalence
from .error_model import AccessCounts, ErrorMatrix, comp_access


@dataclass(frozen=True)
class MergePlan:
    """The decisions that define one hyper-minimal DFA for the input.

    initial_choice is set when the initial state has kernel mates; then the
    other two decision families are empty.  planned_error is the exact total
    over all decisions.
    """

    initial_choice: int | None
    block_finality: dict[int, tuple[int, bool]]  # block -> (representative, final?)
    block_targets: dict[tuple[int, int], int]    # (block, symbol) -> kernel state
    planned_error: int


@dataclass(frozen=True)
class HyperOptReport:
    output: Dfa
    errors: int
    plan: MergePlan
    states_before: int  # minimal DFA size
    states_after: int


def merge_states_naive(d: Dfa, part: AlmostEquivPartition, k: KernelInfo) -> Dfa:
    """Baseline hyper-minimization: in every block, merge all preamble
    members into the smallest-index kernel member (or, for blocks without
    kernel states, into the smallest member).  Hyper-minimal, but blind to
    the number of errors it commits."""
    redirect = list(range(d.state_count))
    for block in part.blocks:
        kernels = [q for q in block if k.is_kernel[q]]
        target = kernels[0] if kernels else block[0]
        for q in block:
            if not k.is_kernel[q] and q != target:
                redirect[q] = target
    kept = [q for q in range(d.state_count) if redirect[q] == q]
    remap = {q: i for i, q in enumerate(kept)}
    delta = tuple(
        tuple(remap[redirect[dst]] for dst in d.delta[q]) for q in kept
    )
    finals = frozenset(remap[q] for q in kept if q in d.finals)
    return canonicalize(Dfa(d.alphabet, remap[redirect[d.initial]], delta, finals))


def comp_finality(
    block: tuple[int, ...], w: AccessCounts, finals: frozenset[int]
) -> tuple[int, int, bool]:
    """Decide the finality of a merged block of preamble states.

    Making the merged state non-final errs on every access string of the
    final members; making it final errs on those of the non-final members.
    Returns (representative, added errors, make_final); the representative is
    the smallest member with the chosen finality.  Ties choose non-final.
    """
    f_bar = sum(w.count(q) for q in block if q in finals)
    f = sum(w.count(q) for q in block if q not in finals)
    make_final = f_bar > f
    rep = min(q for q in block if (q in finals) == make_final)
    return rep, min(f_bar, f), make_final


def _apply_plan(
    d: Dfa,
    part: AlmostEquivPartition,
    k: KernelInfo,
    finality: dict[int, tuple[int, bool]],
    targets: dict[tuple[int, int], int],
) -> Dfa:
    """Build the output DFA for the K_{q0} = empty case: one state per pure
    preamble block plus the untouched kernel, transitions retargeted per the
    plan, then trimmed and canonically renumbered."""
    n, nsym = d.state_count, len(d.alphabet)
    # Representative of every state that survives.
    rep_of: dict[int, int] = {}
    for bi, block in enumerate(part.blocks):
        if bi in finality:
            for q in block:
                rep_of[q] = finality[bi][0]
        else:
            for q in block:
                if k.is_kernel[q]:
                    rep_of[q] = q
                # mixed-block preamble states become unreachable and vanish
    kept = sorted(set(rep_of.values()))
    remap = {q: i for i, q in enumerate(kept)}

    rows = []
    finals = set()
    for q in kept:
        bi = part.block_id[q]
        if k.is_kernel[q]:
            rows.append(tuple(remap[d.delta[q][s]] for s in range(nsym)))
            if q in d.finals:
                finals.add(remap[q])
        else:
            row = []
            for s in range(nsym):
                if (bi, s) in targets:
                    row.append(remap[targets[(bi, s)]])
                else:
                    row.append(remap[rep_of[d.delta[q][s]]])
            rows.append(tuple(row))
            if finality[bi][1]:
                finals.add(remap[q])
    initial = remap[rep_of[d.initial]]
    return canonicalize(Dfa(d.alphabet, initial, tuple(rows), frozenset(finals)))


def opt_merge(
    d: Dfa,
    part: AlmostEquivPartition,
    k: KernelInfo,
    e: ErrorMatrix,
    w: AccessCounts,
) -> HyperOptReport:
    """Hyper-optimal merging: score every choice point exactly and take the
    local optimum; the choice points cover disjoint string sets, so the local
    optima compose into the global optimum.

    All decisions are computed against the immutable input DFA first and
    applied in one pass, so block processing order cannot matter.
    """
    q0 = d.initial
    mates0 = part.kernel_mates[q0]
    if mates0:
        # The output is the kernel subautomaton; only the initial state (and
        # with it the committed errors) is up for choice.  Moving the initial
        # marker onto the chosen kernel mate and trimming realizes the merge:
        # kernel states never reach the preamble, so every preamble state
        # falls away, while the whole kernel stays reachable.
        best = min(mates0, key=lambda q: (e.entry(q0, q), q))
        errors = e.entry(q0, best)
        out = canonicalize(Dfa(d.alphabet, best, d.delta, d.finals))
        plan = MergePlan(best, {}, {}, errors)
        return HyperOptReport(out, errors, plan, d.state_count, out.state_count)

    errors = 0
    finality: dict[int, tuple[int, bool]] = {}
    targets: dict[tuple[int, int], int] = {}
    for bi in part.pure_preamble_blocks:
        block = part.blocks[bi]
        rep, err, make_final = comp_finality(block, w, d.finals)
        finality[bi] = (rep, make_final)
        errors += err
        for s in range(len(d.alphabet)):
            mates = part.kernel_mates[d.delta[block[0]][s]]
            if not mates:
                continue
            best_q = None
            best_cost = None
            for cand in mates:  # ascending index: deterministic tie-break
                cost = sum(w.count(p) * e.entry(d.delta[p][s], cand) for p in block)
                if best_cost is None or cost < best_cost:
                    best_q, best_cost = cand, cost
            targets[(bi, s)] = best_q
            errors += best_cost
    out = _apply_plan(d, part, k, finality, targets)
    plan = MergePlan(None, finality, targets, errors)
    return HyperOptReport(out, errors, plan, d.state_count, out.state_count)


def hyper_optimize(a: Nfa | Dfa) -> HyperOptReport:
    """Full pipeline: determinize (if needed), complete, trim, minimize, then
    optimal merging.  The error table is filled lazily, only for the pairs
    the decisions actually consult."""
    if isinstance(a, Nfa):
        a = determinize(a)
    d = minimize(complete_and_trim(a))
    k = kernel_preamble(d)
    part = compute_almost_equivalence(d, k)
    w = comp_access(d, k)
    e = ErrorMatrix(d, part)
    return opt_merge(d, part, k, e, w)


def enumerate_variants(
    d: Dfa,
    part: AlmostEquivPartition,
    k: KernelInfo,
    max_variants: int = 100_000,
) -> Iterator[tuple[Dfa, int]]:
    """Every hyper-minimal DFA for ``d`` (up to isomorphism) with its exact
    error count, measured independently on the product automaton.

    Exhaustive over the three choice points, so only meant for desk-scale
    inputs; raises when the variant count would exceed ``max_variants``.
    """
    q0 = d.initial
    mates0 = part.kernel_mates[q0]
    if mates0:
        if len(mates0) > max_variants:
            raise AutomatonError("variant count exceeds the enumeration guard")
        for q in mates0:
            out = canonicalize(Dfa(d.alphabet, q, d.delta, d.finals))
            c = diff_count(d, out)
            assert c != float("inf")
            yield out, int(c)
        return

    choice_points: list[list] = []
    pure = list(part.pure_preamble_blocks)
    target_slots: list[tuple[int, int, tuple[int, ...]]] = []
    total = 1
    for bi in pure:
        total *= 2
        block = part.blocks[bi]
        for s in range(len(d.alphabet)):
            mates = part.kernel_mates[d.delta[block[0]][s]]
            if mates:
                target_slots.append((bi, s, mates))
                total *= len(mates)
    if total > max_variants:
        raise AutomatonError(
            f"variant count {total} exceeds the enumeration guard {max_variants}"
        )

    def rec(i: int, finality: dict, j: int, targets: dict):
        if i < len(pure):
            bi = pure[i]
            for make_final in (False, True):
                finality[bi] = (part.blocks[bi][0], make_final)
                yield from rec(i + 1, finality, j, targets)
            del finality[bi]
        elif j < len(target_slots):
            bi, s, mates = target_slots[j]
            for q in mates:
                targets[(bi, s)] = q
                yield from rec(i, finality, j + 1, targets)
            del targets[(bi, s)]
        else:
            out = _apply_plan(d, part, k, finality, targets)
            c = diff_count(d, out)
            assert c != float("inf")
            yield out, int(c)

    yield from rec(0, {}, 0, {})


def classify_string(
    d: Dfa, part: AlmostEquivPartition, k: KernelInfo, word: tuple[int, ...]
):
    """Which choice point a string's acceptance depends on: ('initial',),
    ('finality', block) or ('target', block, symbol).  Every string falls in
    exactly one class."""
    if part.kernel_mates[d.initial]:
        return ("initial",)
    q = d.initial
    prev = q
    for i, s in enumerate(word):
        prev = q
        q = d.delta[q][s]
        if part.kernel_mates[q]:
            return ("target", part.block_id[prev], word[i])
    return ("finality", part.block_id[q])
