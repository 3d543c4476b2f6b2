# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import itertools

import pytest

from idemproblem.congruence import (
    Congruence,
    congruence_closure,
    enumerate_congruences,
    greatest_idempotent_pure,
    is_idempotent_pure,
    kernel,
    quotient,
    smallest_containing,
)
from idemproblem.constructors import brandt_b2, cyclic_group, free_semilattice, symmetric_inverse_monoid
from idemproblem.exceptions import ParameterError, ResourceLimitError
from idemproblem.isomorphism import are_isomorphic
from idemproblem.semigroup import FiniteInverseSemigroup, verify_inverse
from idemproblem.union_find import UnionFind


def test_union_find() -> None:
    forest = UnionFind(5)
    assert forest.union(3, 4)
    assert not forest.union(4, 3)
    assert forest.union(0, 4)
    assert forest.find(0) == forest.find(3)
    assert forest.class_index() == [0, 1, 2, 0, 0]


def test_closure_of_nothing_is_equality() -> None:
    b2 = brandt_b2()
    c = congruence_closure(b2, [])
    assert c == Congruence.equality(b2)
    assert c.num_classes == 5


def test_closure_of_everything_is_universal() -> None:
    b2 = brandt_b2()
    c = congruence_closure(b2, itertools.combinations(range(5), 2))
    assert c == Congruence.universal(b2)
    assert c.num_classes == 1


def test_closure_matches_partition_oracle_on_b2() -> None:
    b2 = brandt_b2()
    congruences = enumerate_congruences(b2)
    # aa^-1 and a^-1a
    c = congruence_closure(b2, [(3, 4)])
    assert c == smallest_containing(congruences, [(3, 4)])
    assert c.num_classes == 1
    for a, b in itertools.combinations(range(5), 2):
        assert congruence_closure(b2, [(a, b)]) == smallest_containing(congruences, [(a, b)])


def test_closure_rejects_out_of_range() -> None:
    with pytest.raises(ParameterError):
        congruence_closure(brandt_b2(), [(0, 5)])


def test_enumerate_congruences() -> None:
    assert len(enumerate_congruences(cyclic_group(2))) == 2
    assert len(enumerate_congruences(free_semilattice(2))) == 4
    for c in enumerate_congruences(brandt_b2()):
        assert c.is_compatible()
    with pytest.raises(ResourceLimitError):
        enumerate_congruences(symmetric_inverse_monoid(2))


def test_quotient_by_equality_and_universal() -> None:
    b2 = brandt_b2()
    same, projection = quotient(b2, Congruence.equality(b2))
    assert are_isomorphic(same, b2)
    assert projection == [0, 1, 2, 3, 4]
    trivial, projection = quotient(b2, Congruence.universal(b2))
    assert trivial.size == 1
    assert projection == [0] * 5


def test_quotient_of_free_semilattice() -> None:
    fs2 = free_semilattice(2)
    c = congruence_closure(fs2, [(0, 1)])
    # {1} ~ {2} forces {1} = {1}{1} ~ {1}{2} = {1,2}
    assert c == Congruence.universal(fs2)
    factor, _ = quotient(fs2, c)
    assert factor.size == 1
    assert factor.names == ("[{1}]",)


def test_quotient_is_morphism() -> None:
    b2 = brandt_b2()
    for c in enumerate_congruences(b2):
        factor, pi = quotient(b2, c)
        assert isinstance(factor, FiniteInverseSemigroup)
        assert verify_inverse(factor).ok
        assert sorted(set(pi)) == list(range(factor.size))
        for s in range(5):
            assert pi[b2.inverse(s)] == factor.inverse(pi[s])
            for t in range(5):
                assert pi[b2.multiply(s, t)] == factor.multiply(pi[s], pi[t])


def test_quotient_rejects_foreign_congruence() -> None:
    with pytest.raises(ParameterError):
        quotient(brandt_b2(), Congruence.equality(brandt_b2()))


def test_is_idempotent_pure() -> None:
    b2 = brandt_b2()
    assert is_idempotent_pure(b2, Congruence.equality(b2))
    assert not is_idempotent_pure(b2, Congruence.universal(b2))
    fs3 = free_semilattice(3)
    assert is_idempotent_pure(fs3, Congruence.universal(fs3))


def test_greatest_idempotent_pure() -> None:
    z4 = cyclic_group(4)
    assert greatest_idempotent_pure(z4) == Congruence.equality(z4)
    fs3 = free_semilattice(3)
    assert greatest_idempotent_pure(fs3) == Congruence.universal(fs3)
    b2 = brandt_b2()
    assert greatest_idempotent_pure(b2) == Congruence.equality(b2)


def test_greatest_idempotent_pure_is_greatest() -> None:
    for s in (brandt_b2(), free_semilattice(2), cyclic_group(4)):
        greatest = greatest_idempotent_pure(s)
        for c in enumerate_congruences(s):
            if is_idempotent_pure(s, c):
                assert c.refines(greatest)


def test_greatest_idempotent_pure_on_i2() -> None:
    i2 = symmetric_inverse_monoid(2)
    greatest = greatest_idempotent_pure(i2)
    assert greatest.is_compatible()
    assert is_idempotent_pure(i2, greatest)


def test_greatest_idempotent_pure_cap() -> None:
    with pytest.raises(ResourceLimitError):
        greatest_idempotent_pure(brandt_b2(), max_size=4)


def test_kernel() -> None:
    b2 = brandt_b2()
    c = kernel(b2, [7, 7, 3, 3, 3])
    assert c.class_index == (0, 0, 1, 1, 1)
    assert c.classes() == [[0, 1], [2, 3, 4]]
    assert c.related(2, 4)
    assert not c.related(0, 2)
    assert Congruence.equality(b2).refines(c)
    assert not c.refines(Congruence.equality(b2))


def test_smallest_containing_without_candidates() -> None:
    z2 = cyclic_group(2)
    with pytest.raises(ParameterError):
        smallest_containing([Congruence.equality(z2)], [(0, 1)])
