# -*- coding: utf-8 -*-
from mailbox_synchronizability import AlphabetMismatchError
from mailbox_synchronizability import EmptyLanguage
from mailbox_synchronizability import enumerate_language
from mailbox_synchronizability import EnumerationCapExceededError
from mailbox_synchronizability import FiniteLanguage
from mailbox_synchronizability import InfiniteLanguage
from mailbox_synchronizability import intersect
from mailbox_synchronizability import longest_word
from mailbox_synchronizability import matched
from mailbox_synchronizability import Nfa
from mailbox_synchronizability import shortest_word
from mailbox_synchronizability import StateGuardExceededError
from mailbox_synchronizability import union
from mailbox_synchronizability import unmatched
import pytest

X = matched("m", "p", "q")
Y = unmatched("m", "p", "q")
ALPHABET = (X, Y)


def _chain() -> Nfa:
    return Nfa.from_transitions(ALPHABET, [0], [2], [(0, X, 1), (1, Y, 2), (0, Y, 3)], name="chain")


def _loop() -> Nfa:
    return Nfa.from_transitions(ALPHABET, [0], [1], [(0, X, 0), (0, Y, 1)], name="loop")


def test_Nfa__symbols_are_sorted():
    assert _chain().symbols == (Y, X)


def test_Nfa_accepts():
    assert _chain().accepts((X, Y))
    assert not _chain().accepts((Y,))
    assert not _chain().accepts((X, Y, Y))


def test_Nfa_reachable_states__breadth_first():
    assert _chain().reachable_states() == (0, 1, 3, 2)
    assert _chain().finals() == (2,)


def test_Nfa_trimmed_graph__drops_dead_states():
    assert set(_chain().trimmed_graph().nodes) == {0, 1, 2}


def test_Nfa_state_guard():
    counter = Nfa(ALPHABET, [0], lambda state: [(X, state + 1)], lambda state: False, state_guard=5)
    with pytest.raises(StateGuardExceededError) as e:
        counter.reachable_states()
    assert e.value.guard == 5


def test_intersect__rejects_different_alphabets():
    with pytest.raises(AlphabetMismatchError):
        intersect(Nfa.universal([X]), Nfa.universal([Y]))


def test_intersect__keeps_common_words():
    product = intersect(_loop(), Nfa.from_transitions(ALPHABET, [0], [2], [(0, X, 1), (1, Y, 2)]))
    assert enumerate_language(product, 5) == [(X, Y)]


def test_union__accepts_either_language():
    both = union(_chain(), _loop())
    assert both.accepts((X, Y))
    assert both.accepts((X, X, Y))
    assert not both.accepts((X,))


def test_longest_word__finite_language():
    assert longest_word(_chain()) == FiniteLanguage(2, (X, Y))


def test_longest_word__pumpable_loop():
    verdict = longest_word(_loop())
    assert verdict == InfiniteLanguage((), (X,), (Y,))
    assert _loop().accepts(verdict.pump(3))


def test_longest_word__empty_language():
    assert longest_word(Nfa.empty(ALPHABET)) == EmptyLanguage()
    assert shortest_word(Nfa.empty(ALPHABET)) is None


def test_shortest_word():
    assert shortest_word(_chain()) == (X, Y)
    assert shortest_word(_loop()) == (Y,)


def test_enumerate_language__length_lexicographic():
    assert enumerate_language(_loop(), 3) == [(Y,), (X, Y), (X, X, Y)]


def test_enumerate_language__includes_the_empty_word():
    assert enumerate_language(Nfa.universal(ALPHABET), 1) == [(), (Y,), (X,)]


def test_enumerate_language__cap():
    with pytest.raises(EnumerationCapExceededError):
        enumerate_language(Nfa.universal(ALPHABET), 5, cap=10)
