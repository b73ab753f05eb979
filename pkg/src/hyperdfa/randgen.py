"""Random NFA generation (Karp-style model with a cyclicity knob).

Transitions going forward (to a higher-numbered state) appear with
probability d_delta; backward transitions, self-loops included, are damped
by the cyclicity factor and appear with probability a * d_delta.  With a = 0
the generated automaton is acyclic; with a = 1 all transitions are equally
probable.

Determinism contract: draws come from Python's Mersenne Twister
(random.Random(seed)); all finality draws happen first, in state order, then
all transition draws in (src, symbol, dst) lexicographic order.  Identical
seeds therefore reproduce identical automata.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .automata import AutomatonError, Nfa


@dataclass(frozen=True)
class RandomModelParams:
    state_count: int
    alphabet_size: int
    d_delta: float
    d_f: float
    cyclicity: float
    seed: int

    def __post_init__(self):
        if self.state_count <= 0:
            raise AutomatonError("state_count must be positive")
        if self.alphabet_size <= 0:
            raise AutomatonError("alphabet_size must be positive")
        for name in ("d_delta", "d_f", "cyclicity"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1.0):
                raise AutomatonError(f"{name} must be in [0, 1], got {v}")


def _alphabet(size: int) -> tuple[str, ...]:
    if size <= 26:
        return tuple(chr(ord("a") + i) for i in range(size))
    return tuple(f"s{i}" for i in range(size))


def generate_nfa(p: RandomModelParams) -> Nfa:
    rng = random.Random(p.seed)
    finals = frozenset(q for q in range(p.state_count) if rng.random() < p.d_f)
    transitions = set()
    for src in range(p.state_count):
        for sym in range(p.alphabet_size):
            for dst in range(p.state_count):
                threshold = p.d_delta if dst > src else p.cyclicity * p.d_delta
                if rng.random() < threshold:
                    transitions.add((src, sym, dst))
    return Nfa(p.state_count, _alphabet(p.alphabet_size), frozenset(transitions),
               finals, 0)
