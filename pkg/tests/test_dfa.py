# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import itertools

import pytest

from idemproblem.constructors import brandt_b2, cyclic_group, free_semilattice, symmetric_inverse_monoid
from idemproblem.dfa import Dfa, equivalent, idempotent_problem_dfa, minimize
from idemproblem.exceptions import ParameterError
from idemproblem.semigroup import FiniteSemigroup


def test_dfa_shape_errors() -> None:
    with pytest.raises(ParameterError):
        Dfa([[0]], [True, False])
    with pytest.raises(ParameterError):
        Dfa([[1]], [True])
    with pytest.raises(ParameterError):
        Dfa([], [])
    with pytest.raises(ParameterError):
        Dfa([[0]], [True], start=1)


def test_b2_dfa() -> None:
    dfa = idempotent_problem_dfa(brandt_b2(), monoid_case=False)
    assert dfa.states == 6
    assert dfa.alphabet_size == 2
    assert dfa.state_names[0] == "start"
    assert dfa.accepts((0, 1))
    assert dfa.accepts((1, 0))
    assert dfa.accepts((0, 0))
    assert not dfa.accepts((0,))
    assert not dfa.accepts(())
    assert minimize(dfa).states == 6


def test_z2_cases() -> None:
    z2 = cyclic_group(2)
    semigroup_case = idempotent_problem_dfa(z2, monoid_case=False)
    monoid_case = idempotent_problem_dfa(z2, monoid_case=True)
    assert not semigroup_case.accepts(())
    assert monoid_case.accepts(())
    assert semigroup_case.accepts((0, 0))
    assert not semigroup_case.accepts((0, 0, 0))
    # start, odd, even-and-nonempty
    assert minimize(semigroup_case).states == 3
    # the start state merges with the even words
    assert minimize(monoid_case).states == 2
    assert not equivalent(semigroup_case, monoid_case)


def test_free_semilattice_dfa() -> None:
    minimal = minimize(idempotent_problem_dfa(free_semilattice(2), monoid_case=False))
    assert minimal.states == 2
    assert minimal.accepting.tolist() == [False, True]
    assert minimal.transition.tolist() == [[1, 1], [1, 1]]


def test_monoid_case_needs_identity() -> None:
    with pytest.raises(ParameterError):
        idempotent_problem_dfa(brandt_b2(), monoid_case=True)
    with pytest.raises(ParameterError):
        idempotent_problem_dfa(FiniteSemigroup([[0, 0], [1, 1]]), monoid_case=False)


def test_language_matches_table() -> None:
    for s in (brandt_b2(), cyclic_group(4), free_semilattice(3), symmetric_inverse_monoid(2)):
        for monoid_case in ([False, True] if s.identity is not None else [False]):
            dfa = idempotent_problem_dfa(s, monoid_case)
            minimal = minimize(dfa)
            letters = range(len(s.generators))
            for length in range(0, 5 if len(s.generators) > 3 else 7):
                for word in itertools.product(letters, repeat=length):
                    expected = monoid_case if not word else s.is_idempotent(s.evaluate_word(word))
                    assert dfa.accepts(word) == expected
                    assert minimal.accepts(word) == expected


def test_minimize_is_idempotent() -> None:
    for s in (brandt_b2(), cyclic_group(4), free_semilattice(3)):
        dfa = idempotent_problem_dfa(s, monoid_case=False)
        once = minimize(dfa)
        twice = minimize(once)
        assert once.transition.tolist() == twice.transition.tolist()
        assert once.accepting.tolist() == twice.accepting.tolist()
        assert equivalent(dfa, once)


def test_minimize_drops_unreachable_states() -> None:
    dfa = Dfa([[1], [1], [0]], [False, True, True])
    assert dfa.reachable() == [0, 1]
    minimal = minimize(dfa)
    assert minimal.states == 2
    assert equivalent(dfa, minimal)


def test_equivalent_needs_same_alphabet() -> None:
    assert not equivalent(Dfa([[0]], [True]), Dfa([[0, 0]], [True]))
    assert equivalent(Dfa([[0]], [False]), Dfa([[1], [0]], [False, False]))
