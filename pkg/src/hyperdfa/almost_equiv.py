"""Almost-equivalence of states of a minimal DFA.

Two states are almost-equivalent when their right languages differ on only
finitely many strings.  On a minimal DFA this is the same as: after some
bounded horizon, both states land in the very same state on every input.
That characterization drives the algorithm here: repeatedly glue states
whose full successor signatures (one block per symbol) coincide, until no
two distinct blocks collide.  Each merge strictly reduces the block count,
so the fixpoint is reached after at most n passes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import AutomatonError, Dfa, KernelInfo, INFINITE, _diff_from, minimize


@dataclass(frozen=True)
class AlmostEquivPartition:
    """The almost-equivalence congruence as blocks of states.

    blocks are sorted by their smallest member; each block is sorted.
    pure_preamble_blocks lists the indices of blocks consisting solely of
    preamble states; kernel_mates[q] lists the kernel states in q's block.
    """

    block_id: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    pure_preamble_blocks: tuple[int, ...]
    kernel_mates: tuple[tuple[int, ...], ...]

    def same_block(self, q: int, p: int) -> bool:
        return self.block_id[q] == self.block_id[p]


def _check_minimal(d: Dfa) -> None:
    if minimize(d).state_count != d.state_count:
        raise AutomatonError("input DFA is not minimal")


def compute_almost_equivalence(d: Dfa, k: KernelInfo) -> AlmostEquivPartition:
    """Coarsest partition of the states of the minimal DFA ``d`` into
    almost-equivalence blocks."""
    _check_minimal(d)
    n = d.state_count

    # block_of starts as the identity; each pass groups states by the tuple
    # of their successors' blocks and merges colliding groups (smallest
    # member becomes the representative id).
    block_of = list(range(n))
    changed = True
    while changed:
        changed = False
        by_sig: dict[tuple[int, ...], int] = {}
        for q in range(n):  # ascending order for determinism
            sig = tuple(block_of[dst] for dst in d.delta[q])
            rep = by_sig.setdefault(sig, block_of[q])
            if rep != block_of[q]:
                winner, loser = min(rep, block_of[q]), max(rep, block_of[q])
                for r in range(n):
                    if block_of[r] == loser:
                        block_of[r] = winner
                by_sig[sig] = winner
                changed = True

    members: dict[int, list[int]] = {}
    for q in range(n):
        members.setdefault(block_of[q], []).append(q)
    blocks = tuple(tuple(sorted(members[b])) for b in sorted(members))
    block_id = [0] * n
    for i, block in enumerate(blocks):
        for q in block:
            block_id[q] = i
    pure = tuple(
        i for i, block in enumerate(blocks)
        if all(not k.is_kernel[q] for q in block)
    )
    mates = tuple(
        tuple(p for p in blocks[block_id[q]] if k.is_kernel[p]) for q in range(n)
    )
    return AlmostEquivPartition(tuple(block_id), blocks, pure, mates)


def almost_equiv_oracle(d: Dfa, q: int, p: int) -> bool:
    """True iff the right languages of ``q`` and ``p`` differ on only
    finitely many strings, decided on the product automaton."""
    return _diff_from(d, d, q, p) != INFINITE
