# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import itertools

import pytest

from idemproblem.constructors import brandt_b2, cyclic_group, free_semilattice
from idemproblem.dfa import Dfa, idempotent_problem_dfa, minimize
from idemproblem.exceptions import ParameterError, ResourceLimitError
from idemproblem.partial_bijection import PartialBijection
from idemproblem.semigroup import FiniteSemigroup, generate_closure
from idemproblem.syntactic import (
    ContextOracle,
    context_equivalent,
    is_group_language,
    syntactic_algebra,
    words_up_to,
)


def minimal_dfa(semigroup: FiniteSemigroup, monoid_case: bool = False) -> Dfa:
    return minimize(idempotent_problem_dfa(semigroup, monoid_case))


def test_all_nonempty_words() -> None:
    algebra = syntactic_algebra(minimal_dfa(generate_closure([PartialBijection.identity(1)])))
    assert algebra.monoid.size == 2
    assert algebra.semigroup_part == (1,)
    assert not algebra.empty_word_merged
    assert algebra.semigroup().size == 1
    assert not is_group_language(algebra)
    assert is_group_language(algebra, semigroup_part=True)


def test_z2_semigroup_case() -> None:
    algebra = syntactic_algebra(minimal_dfa(cyclic_group(2)))
    # 1, a, aa
    assert algebra.monoid.size == 3
    assert algebra.semigroup_part == (1, 2)
    assert not algebra.empty_word_merged
    assert algebra.word_class((0, 0, 0)) == algebra.word_class((0,))
    assert algebra.word_class(()) == algebra.identity
    assert not is_group_language(algebra)
    assert is_group_language(algebra, semigroup_part=True)
    assert algebra.target(monoid_case=False).size == 2


def test_z2_monoid_case() -> None:
    algebra = syntactic_algebra(minimal_dfa(cyclic_group(2), monoid_case=True))
    assert algebra.monoid.size == 2
    assert algebra.empty_word_merged
    assert algebra.word_class((0, 0)) == algebra.identity
    assert is_group_language(algebra)
    assert is_group_language(algebra, semigroup_part=True)
    assert algebra.target(monoid_case=True) is algebra.monoid


def test_empty_language() -> None:
    algebra = syntactic_algebra(Dfa([[0, 0]], [False]))
    assert algebra.monoid.size == 1
    assert algebra.empty_word_merged
    assert is_group_language(algebra)


def test_free_semilattice_is_not_a_group_language() -> None:
    algebra = syntactic_algebra(minimal_dfa(free_semilattice(2)))
    # 1 and the class of every nonempty word
    assert algebra.monoid.size == 2
    assert not is_group_language(algebra)
    assert is_group_language(algebra, semigroup_part=True)


def test_needs_minimal_dfa() -> None:
    with pytest.raises(ParameterError):
        syntactic_algebra(Dfa([[1], [0]], [True, True]))


def test_size_cap() -> None:
    with pytest.raises(ResourceLimitError):
        syntactic_algebra(minimal_dfa(brandt_b2()), max_size=3)


def test_dichotomy_and_transformations() -> None:
    for s, monoid_case in ((brandt_b2(), False), (cyclic_group(4), True), (cyclic_group(4), False)):
        minimal = minimal_dfa(s, monoid_case)
        algebra = syntactic_algebra(minimal)
        everything = set(range(algebra.monoid.size))
        assert set(algebra.semigroup_part) in (everything, everything - {0})
        for word in words_up_to(minimal.alphabet_size, 4):
            element = algebra.word_class(word)
            for q in range(minimal.states):
                assert algebra.transformations[element][q] == minimal.run(word, q)


def test_words_up_to() -> None:
    assert list(words_up_to(2, 2)) == [(), (0,), (1,), (0, 0), (0, 1), (1, 0), (1, 1)]


def test_context_oracle_agrees_with_word_classes() -> None:
    cases = [
        (cyclic_group(2), False),
        (cyclic_group(2), True),
        (cyclic_group(4), False),
        (free_semilattice(2), False),
        (brandt_b2(), False),
    ]
    for s, monoid_case in cases:
        minimal = minimal_dfa(s, monoid_case)
        algebra = syntactic_algebra(minimal)
        oracle = ContextOracle(minimal)
        words = list(words_up_to(minimal.alphabet_size, 5))
        for u, v in itertools.combinations(words, 2):
            assert oracle.equivalent(u, v) == (algebra.word_class(u) == algebra.word_class(v))


def test_context_equivalent_on_unminimised_dfa() -> None:
    dfa = idempotent_problem_dfa(cyclic_group(2), monoid_case=False)
    assert context_equivalent(dfa, (0,), (0, 0, 0))
    assert not context_equivalent(dfa, (), (0, 0))
    assert context_equivalent(dfa, (), (0, 0), context_length=0) is False
    assert context_equivalent(dfa, (0, 0), (0, 0, 0, 0), context_length=1)
