# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import pytest

from idemproblem.constructors import brandt_b2, cyclic_group, free_semilattice, semilattice_monoid
from idemproblem.exceptions import ParameterError
from idemproblem.partial_bijection import PartialBijection
from idemproblem.semigroup import FiniteInverseSemigroup, generate_closure
from idemproblem.theorem_checks import (
    check_e_unitary_corollary,
    check_generator_invariance,
    check_main_theorem_finite_direction,
    is_e_unitary,
    syntactic_projection,
)


def i2() -> FiniteInverseSemigroup:
    return generate_closure([PartialBijection([1, 0]), PartialBijection([None, 1])])


def test_is_e_unitary() -> None:
    assert is_e_unitary(cyclic_group(4))
    assert is_e_unitary(free_semilattice(3))
    # the zero is an idempotent product of an idempotent and a
    assert not is_e_unitary(brandt_b2())
    assert not is_e_unitary(i2())


def test_e_unitary_b2() -> None:
    report = check_e_unitary_corollary(brandt_b2(), monoid_case=False)
    assert not report.e_unitary
    assert not report.group_language
    assert not report.monoid_is_group


def test_e_unitary_groups() -> None:
    for monoid_case in (False, True):
        report = check_e_unitary_corollary(cyclic_group(4), monoid_case)
        assert report.e_unitary
        assert report.group_language


def test_e_unitary_free_semilattice() -> None:
    report = check_e_unitary_corollary(free_semilattice(2), monoid_case=False)
    assert report.e_unitary
    assert report.group_language
    # M(L) = {1, class of all nonempty words} has two idempotents
    assert not report.monoid_is_group
    assert not report.empty_word_merged
    assert report.to_json()["group_language"]


def test_e_unitary_semilattice_monoid() -> None:
    report = check_e_unitary_corollary(semilattice_monoid(2), monoid_case=True)
    assert report.e_unitary
    assert report.group_language
    assert report.monoid_is_group
    assert report.empty_word_merged


def test_projection_b2() -> None:
    projection = syntactic_projection(brandt_b2(), monoid_case=False)
    report = projection.report
    assert report.ok
    assert report.target_size == 5
    assert report.kernel_classes == 5
    assert not report.empty_word_merged
    assert len(projection.mapping) == 5
    assert projection.algebra.monoid.size == 6


def test_projection_group_and_semilattice() -> None:
    projection = syntactic_projection(cyclic_group(4), monoid_case=True)
    assert projection.report.target_size == 4
    assert projection.report.kernel_classes == 4
    assert sorted(projection.mapping) == [0, 1, 2, 3]
    projection = syntactic_projection(free_semilattice(3), monoid_case=False)
    assert projection.report.target_size == 1
    assert projection.report.kernel_classes == 1
    assert len(set(projection.mapping)) == 1


def test_projection_on_i2() -> None:
    for monoid_case in (False, True):
        assert syntactic_projection(i2(), monoid_case).report.ok


def test_projection_needs_generators() -> None:
    with pytest.raises(ParameterError):
        syntactic_projection(brandt_b2(), monoid_case=True)


def test_main_theorem_free_semilattice_attains_bound() -> None:
    report = check_main_theorem_finite_direction(free_semilattice(3), monoid_case=False)
    assert report.n == 1
    assert report.k == 3
    assert report.bound == 7
    assert report.attained
    assert report.to_json()["attained"]


def test_main_theorem_z2() -> None:
    semigroup_case = check_main_theorem_finite_direction(cyclic_group(2), monoid_case=False)
    assert (semigroup_case.n, semigroup_case.k, semigroup_case.bound) == (2, 1, 6)
    assert semigroup_case.dfa_states == 3
    assert semigroup_case.minimal_states == 3
    assert semigroup_case.syntactic_monoid_size == 3
    assert not semigroup_case.attained
    monoid_case = check_main_theorem_finite_direction(cyclic_group(2), monoid_case=True)
    assert (monoid_case.n, monoid_case.k, monoid_case.bound) == (2, 1, 6)
    assert monoid_case.minimal_states == 2


def test_main_theorem_counts_missing_identity() -> None:
    # the identity is no product of the two co-singletons
    report = check_main_theorem_finite_direction(semilattice_monoid(2), monoid_case=True)
    assert report.k == 3
    assert report.n == 1
    assert report.bound == 7


def test_generator_invariance_z4() -> None:
    z4 = cyclic_group(4)
    g = z4.generators[0]
    for monoid_case in (False, True):
        report = check_generator_invariance(z4, [g], [g, z4.evaluate_word((0, 0))], monoid_case)
        assert report.isomorphic
        assert report.first_size == report.second_size == 4


def test_generator_invariance_b2() -> None:
    b2 = brandt_b2()
    report = check_generator_invariance(b2, b2.generators, range(b2.size), monoid_case=False)
    assert report.isomorphic
    assert report.first_size == 5


def test_generator_invariance_rejects_non_generating_set() -> None:
    b2 = brandt_b2()
    with pytest.raises(ParameterError):
        check_generator_invariance(b2, b2.generators, [0], monoid_case=False)
