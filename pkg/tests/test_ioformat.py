import pytest

from hyperdfa import Dfa, Nfa, ParseError, isomorphic, parse_automaton, serialize_automaton

from helpers import load_m_ex


def test_roundtrip_dfa():
    d = load_m_ex()
    again = parse_automaton(serialize_automaton(d))
    assert isinstance(again, Dfa)
    assert again == d


def test_roundtrip_nfa():
    n = Nfa(3, ("x", "y"), frozenset({(0, 0, 1), (0, 0, 2), (2, 1, 0)}), frozenset({2}))
    again = parse_automaton(serialize_automaton(n))
    assert again == n


def test_partial_dfa_parses():
    d = parse_automaton("dfa\nalphabet: a\ninitial: 0\nfinals: 0\n")
    assert isinstance(d, Dfa)
    assert not d.is_total


def test_transitions_sorted_on_serialize():
    text = "nfa\nalphabet: a b\ninitial: 0\nfinals:\n1 b 0\n0 a 1\n0 a 0\n"
    out = serialize_automaton(parse_automaton(text))
    body = out.strip().splitlines()[4:]
    assert body == ["0 a 0", "0 a 1", "1 b 0"]


@pytest.mark.parametrize("text,lineno", [
    ("dfb\nalphabet: a\ninitial: 0\nfinals:\n", 1),
    ("dfa\nalphabetx a\ninitial: 0\nfinals:\n", 2),
    ("dfa\nalphabet: a\ninitial: 0 1\nfinals:\n", 3),
    ("dfa\nalphabet: a\ninitial: 0\nfinals: x\n", 4),
    ("dfa\nalphabet: a\ninitial: 0\nfinals: 0\nthis is junk here\n", 5),
    ("dfa\nalphabet: a\ninitial: 0\nfinals: 0\n0 q 0\n", 5),
    ("dfa\nalphabet: a\ninitial: 0\nfinals: 0\n0 a 0\n0 a 1\n", 1),  # nondeterministic
])
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(ParseError) as err:
        parse_automaton(text)
    assert err.value.lineno == lineno


def test_truncated():
    with pytest.raises(ParseError):
        parse_automaton("dfa\nalphabet: a\n")
