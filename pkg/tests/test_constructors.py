# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import pytest

from idemproblem.constructors import (
    brandt_b2,
    cyclic_group,
    free_semilattice,
    semilattice_monoid,
    symmetric_inverse_monoid,
)
from idemproblem.exceptions import ParameterError
from idemproblem.partial_bijection import PartialBijection, all_partial_bijections
from idemproblem.semigroup import generate_closure, verify_inverse


def test_free_semilattice_sizes() -> None:
    for k in range(1, 5):
        s = free_semilattice(k)
        assert s.size == 2**k - 1
        assert len(s.idempotents()) == s.size
        assert verify_inverse(s).ok


def test_free_semilattice_union() -> None:
    s = free_semilattice(3)
    assert s.generators == (0, 1, 3)
    assert [s.names[g] for g in s.generators] == ["{1}", "{2}", "{3}"]
    assert s.names[s.multiply(0, 1)] == "{1,2}"
    assert s.names[s.multiply(2, 3)] == "{1,2,3}"
    assert s.identity is None
    assert free_semilattice(1).identity == 0


def test_free_semilattice_range() -> None:
    with pytest.raises(ParameterError):
        free_semilattice(0)
    with pytest.raises(ParameterError):
        free_semilattice(21)
    with pytest.raises(ParameterError):
        free_semilattice(5, max_rank=4)


def test_symmetric_inverse_monoid() -> None:
    assert symmetric_inverse_monoid(1).size == 2
    assert symmetric_inverse_monoid(2).size == 7
    s = symmetric_inverse_monoid(3)
    assert s.size == 34
    assert s.identity is not None
    with pytest.raises(ParameterError):
        symmetric_inverse_monoid(6)


def test_symmetric_inverse_monoid_matches_closure() -> None:
    s = symmetric_inverse_monoid(3)
    closure = generate_closure(all_partial_bijections(3))
    assert s.table.tolist() == closure.table.tolist()
    assert s.names == closure.names
    assert s.witness_words == closure.witness_words
    assert s.inverse_of == closure.inverse_of


def test_largest_symmetric_inverse_monoid() -> None:
    s = symmetric_inverse_monoid(5)
    assert s.size == 1546
    assert s.elements is not None
    assert s.identity == s.elements.index(PartialBijection.identity(5))
    assert len(s.idempotents()) == 32


def test_cyclic_group() -> None:
    z4 = cyclic_group(4)
    assert z4.size == 4
    assert len(z4.idempotents()) == 1
    assert z4.identity == 3
    assert z4.generators == (0,)
    with pytest.raises(ParameterError):
        cyclic_group(0)


def test_brandt_b2() -> None:
    b2 = brandt_b2()
    assert b2.size == 5
    assert len(b2.idempotents()) == 3
    mirrored = brandt_b2(mirrored=True)
    assert mirrored.size == 5
    assert mirrored.names[0] == "{1>0}"


def test_semilattice_monoid() -> None:
    s = semilattice_monoid(2)
    assert s.size == 4
    assert s.identity == 0
    assert len(s.idempotents()) == 4
    assert s.monoid_generated
