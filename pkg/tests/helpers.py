"""Shared test utilities: brute-force oracles and random instance streams.

Everything here deliberately avoids the library's own algorithms: the Moore
minimizer is a separate partition-refinement implementation, language
comparisons run words through the automata directly, and counting oracles
enumerate or tabulate strings by length.
"""

from __future__ import annotations

import itertools
from pathlib import Path

from hyperdfa import (
    Dfa,
    canonicalize,
    complete_and_trim,
    determinize,
    generate_nfa,
    minimize,
    parse_automaton,
    RandomModelParams,
)

DATA = Path(__file__).parent / "data"


def load_m_ex() -> Dfa:
    return parse_automaton((DATA / "m_ex.aut").read_text())


def all_words(nsym: int, maxlen: int):
    for length in range(maxlen + 1):
        yield from itertools.product(range(nsym), repeat=length)


def language_up_to(d: Dfa, maxlen: int) -> set[tuple[int, ...]]:
    return {w for w in all_words(len(d.alphabet), maxlen) if d.accepts(w)}


def right_language_diff_enum(d: Dfa, q: int, p: int, maxlen: int) -> list[tuple[int, ...]]:
    """Literal enumeration of L(q,M) symdiff L(p,M), up to maxlen."""
    out = []
    for w in all_words(len(d.alphabet), maxlen):
        a = d.step(q, w) in d.finals
        b = d.step(p, w) in d.finals
        if a != b:
            out.append(w)
    return out


def right_language_diff_count_by_length(d: Dfa, q: int, p: int, maxlen: int) -> int:
    """Count strings up to maxlen on which the right languages of q and p
    disagree, tabulating runs by length (no finiteness machinery)."""
    nsym = len(d.alphabet)
    current = {(q, p): 1}
    total = 1 if ((q in d.finals) != (p in d.finals)) else 0
    for _ in range(maxlen):
        nxt: dict[tuple[int, int], int] = {}
        for (a, b), cnt in current.items():
            for s in range(nsym):
                key = (d.delta[a][s], d.delta[b][s])
                nxt[key] = nxt.get(key, 0) + cnt
        current = nxt
        total += sum(
            cnt for (a, b), cnt in current.items()
            if (a in d.finals) != (b in d.finals)
        )
    return total


def reachable_from(d: Dfa, q: int) -> set[int]:
    seen = {q}
    frontier = [q]
    while frontier:
        a = frontier.pop()
        for b in d.delta[a]:
            if b is not None and b not in seen:
                seen.add(b)
                frontier.append(b)
    return seen


def access_count_enum(d: Dfa, q: int, maxlen: int) -> int:
    """Number of strings up to maxlen that drive the DFA into state q."""
    return sum(1 for w in all_words(len(d.alphabet), maxlen)
               if d.step(d.initial, w) == q)


def moore_minimize(d: Dfa) -> Dfa:
    """Independent minimizer: iterated signature splitting from the
    finality partition (Moore's algorithm)."""
    assert d.is_total
    d = canonicalize(d)
    n, nsym = d.state_count, len(d.alphabet)
    cls = [1 if q in d.finals else 0 for q in range(n)]
    while True:
        sigs = {}
        new_cls = [0] * n
        for q in range(n):
            sig = (cls[q],) + tuple(cls[d.delta[q][s]] for s in range(nsym))
            new_cls[q] = sigs.setdefault(sig, len(sigs))
        if new_cls == cls:
            break
        cls = new_cls
    count = max(cls) + 1
    reps = {}
    for q in range(n):
        reps.setdefault(cls[q], q)
    delta = tuple(
        tuple(cls[d.delta[reps[c]][s]] for s in range(nsym)) for c in range(count)
    )
    finals = frozenset(c for c in range(count) if reps[c] in d.finals)
    return canonicalize(Dfa(d.alphabet, cls[d.initial], delta, finals))


def random_minimal_dfas(count: int, seed: int, max_states: int,
                        nfa_states: int = 7, min_states: int = 1):
    """Stream of `count` random minimal DFAs over a 2-letter alphabet with at
    most `max_states` states, from mixed generator parameters."""
    produced = 0
    attempt = 0
    densities = (0.6, 1.0, 1.25, 1.5, 2.0)
    cyclicities = (0.0, 0.3, 0.6, 1.0)
    d_fs = (0.3, 0.5, 0.7)
    while produced < count:
        params = RandomModelParams(
            state_count=nfa_states,
            alphabet_size=2,
            d_delta=densities[attempt % len(densities)] / nfa_states,
            d_f=d_fs[attempt % len(d_fs)],
            cyclicity=cyclicities[attempt % len(cyclicities)],
            seed=seed + attempt,
        )
        attempt += 1
        d = minimize(complete_and_trim(determinize(generate_nfa(params))))
        if min_states <= d.state_count <= max_states:
            produced += 1
            yield d
