"""Standard example semigroups: free semilattices, symmetric inverse monoids, cyclic groups, B2."""
# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import typing

import numpy as np

from idemproblem import limits
from idemproblem.exceptions import ParameterError
from idemproblem.partial_bijection import PartialBijection, all_partial_bijections
from idemproblem.semigroup import FiniteInverseSemigroup, composition_table, generate_closure


def free_semilattice(k: int, max_rank: int = limits.MAX_SEMILATTICE_RANK) -> FiniteInverseSemigroup:
    """Nonempty subsets of {1..k} under union, generated by the singletons; 2^k - 1 elements.

    Subsets are encoded as bitmasks, element i standing for the mask i + 1, so the
    singletons {1}, {2}, {3}... are elements 0, 1, 3...
    """
    if not 1 <= k <= max_rank:
        raise ParameterError(f"Free semilattice rank must lie in 1..{max_rank}, got {k}")
    masks = np.arange(1, 2**k, dtype=np.int64)
    table = (masks[:, None] | masks[None, :]) - 1
    names = ["{" + ",".join(str(bit + 1) for bit in range(k) if mask >> bit & 1) + "}" for mask in masks]
    generators = [(1 << bit) - 1 for bit in range(k)]
    return FiniteInverseSemigroup(table, names, generators, inverse_of=range(len(masks)))


def symmetric_inverse_monoid(n: int, max_degree: int = limits.MAX_SYMMETRIC_DEGREE) -> FiniteInverseSemigroup:
    """All partial bijections of an n-element set under composition.

    Every element is a generator, so the result equals generate_closure(all_partial_bijections(n))
    with one-letter witness words, without the breadth first search.
    """
    if not 1 <= n <= max_degree:
        raise ParameterError(f"Symmetric inverse monoid degree must lie in 1..{max_degree}, got {n}")
    elements = all_partial_bijections(n)
    index = {p: i for i, p in enumerate(elements)}
    return FiniteInverseSemigroup(
        composition_table(elements, n),
        names=[str(p) for p in elements],
        generators=range(len(elements)),
        witness_words=[(i,) for i in range(len(elements))],
        inverse_of=[index[p.invert()] for p in elements],
        elements=elements,
    )


def cyclic_group(n: int) -> FiniteInverseSemigroup:
    """Z_n as the closure of one n-cycle, generated as a semigroup by that cycle."""
    if n < 1:
        raise ParameterError(f"Cyclic group order must be positive, got {n}")
    return generate_closure([PartialBijection([(i + 1) % n for i in range(n)])])


def brandt_b2(mirrored: bool = False) -> FiniteInverseSemigroup:
    """The five-element Brandt semigroup generated by {0>1} and its inverse.

    With mirrored set the generating pair is listed as {1>0}, {0>1}.
    """
    a = PartialBijection([1, None])
    generators = [a.invert(), a] if mirrored else [a, a.invert()]
    return generate_closure(generators)


def semilattice_monoid(k: int) -> FiniteInverseSemigroup:
    """Partial identities on the k complements {0..k-1} minus a point, plus the identity.

    A semilattice with identity, monoid-generated by the k co-singleton partial identities.
    """
    if k < 1:
        raise ParameterError(f"Rank must be positive, got {k}")
    generators: typing.List[PartialBijection] = []
    for missing in range(k):
        generators.append(PartialBijection([None if p == missing else p for p in range(k)]))
    return generate_closure(generators, monoid=True)
