"""Line-based UTF-8 text format for automata.

::

    dfa | nfa
    alphabet: a b ...
    initial: 0
    finals: 1 4
    0 a 1
    1 b 0
    ...

Transitions are serialized sorted by (src, symbol index, dst).  A parsed DFA
may have a partial transition function; run complete_and_trim before using
it with the algorithms.
"""

from __future__ import annotations

from .automata import AutomatonError, Dfa, Nfa


class ParseError(AutomatonError):
    """Malformed automaton file; carries a 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _ints(lineno: int, parts: list[str]) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError as exc:
        raise ParseError(lineno, f"expected integers, got {parts!r}") from exc


def parse_automaton(text: str) -> Nfa | Dfa:
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(no, ln) for no, ln in lines if ln]
    if len(lines) < 4:
        raise ParseError(lines[-1][0] if lines else 1, "truncated automaton file")

    (no1, kind), (no2, alph), (no3, init), (no4, fins) = lines[:4]
    if kind not in ("dfa", "nfa"):
        raise ParseError(no1, f"expected 'dfa' or 'nfa', got {kind!r}")
    if not alph.startswith("alphabet:"):
        raise ParseError(no2, "expected 'alphabet: ...'")
    alphabet = tuple(alph[len("alphabet:"):].split())
    if not alphabet:
        raise ParseError(no2, "alphabet must be nonempty")
    if len(set(alphabet)) != len(alphabet):
        raise ParseError(no2, "duplicate alphabet symbol")
    sym_index = {s: i for i, s in enumerate(alphabet)}
    if not init.startswith("initial:"):
        raise ParseError(no3, "expected 'initial: ...'")
    initial = _ints(no3, init[len("initial:"):].split())
    if len(initial) != 1:
        raise ParseError(no3, "exactly one initial state required")
    if not fins.startswith("finals:"):
        raise ParseError(no4, "expected 'finals: ...'")
    finals = _ints(no4, fins[len("finals:"):].split())

    transitions: list[tuple[int, int, int]] = []
    for no, ln in lines[4:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ParseError(no, f"expected 'src symbol dst', got {ln!r}")
        if parts[1] not in sym_index:
            raise ParseError(no, f"unknown symbol {parts[1]!r}")
        src, dst = _ints(no, [parts[0], parts[2]])
        transitions.append((src, sym_index[parts[1]], dst))

    state_count = max(
        [initial[0]] + finals + [t[0] for t in transitions] + [t[2] for t in transitions]
    ) + 1
    try:
        if kind == "nfa":
            return Nfa(state_count, alphabet, frozenset(transitions),
                       frozenset(finals), initial[0])
        if len(set((s, a) for s, a, _ in transitions)) != len(transitions):
            raise ParseError(no1, "dfa has two transitions on the same (state, symbol)")
        delta = [[None] * len(alphabet) for _ in range(state_count)]
        for src, sym, dst in transitions:
            delta[src][sym] = dst
        return Dfa(alphabet, initial[0], tuple(tuple(row) for row in delta),
                   frozenset(finals))
    except AutomatonError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(no1, str(exc)) from exc


def serialize_automaton(a: Nfa | Dfa) -> str:
    lines = []
    if isinstance(a, Nfa):
        lines.append("nfa")
        transitions = sorted(a.transitions)
    else:
        lines.append("dfa")
        transitions = sorted(
            (src, sym, dst)
            for src, row in enumerate(a.delta)
            for sym, dst in enumerate(row)
            if dst is not None
        )
    lines.append("alphabet: " + " ".join(a.alphabet))
    lines.append(f"initial: {a.initial}")
    lines.append("finals: " + " ".join(str(q) for q in sorted(a.finals)))
    for src, sym, dst in transitions:
        lines.append(f"{src} {a.alphabet[sym]} {dst}")
    return "\n".join(lines) + "\n"
