"""Congruences on finite semigroups: generation, quotients and idempotent-purity."""
# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import collections
import logging
import typing

import numpy as np

from idemproblem import limits
from idemproblem.exceptions import InvariantViolation, ParameterError, ResourceLimitError
from idemproblem.semigroup import FiniteInverseSemigroup, FiniteSemigroup
from idemproblem.union_find import UnionFind

log = logging.getLogger(__name__)


def _normalise(labels: typing.Sequence[typing.Hashable]) -> typing.List[int]:
    ids: typing.Dict[typing.Hashable, int] = {}
    return [ids.setdefault(label, len(ids)) for label in labels]


class Congruence:
    """A partition of a semigroup's elements, given by a class id per element.

    Class ids are numbered by first appearance in element order, so equal partitions
    compare equal.

    Attributes:
        base: The semigroup being partitioned.
        class_index: Class id of every element.
        num_classes: Number of classes.
    """

    def __init__(self, base: FiniteSemigroup, labels: typing.Sequence[typing.Hashable]) -> None:
        if len(labels) != base.size:
            raise ParameterError(f"Expected {base.size} class labels, got {len(labels)}")
        self.base = base
        self.class_index: typing.Tuple[int, ...] = tuple(_normalise(labels))
        self.num_classes = max(self.class_index) + 1

    @classmethod
    def equality(cls, base: FiniteSemigroup) -> "Congruence":
        return cls(base, range(base.size))

    @classmethod
    def universal(cls, base: FiniteSemigroup) -> "Congruence":
        return cls(base, [0] * base.size)

    def related(self, a: int, b: int) -> bool:
        return self.class_index[a] == self.class_index[b]

    def classes(self) -> typing.List[typing.List[int]]:
        result: typing.List[typing.List[int]] = [[] for _ in range(self.num_classes)]
        for x, c in enumerate(self.class_index):
            result[c].append(x)
        return result

    def is_compatible(self) -> bool:
        """True if related elements stay related after multiplying on either side."""
        labels = np.array(self.class_index)
        table = self.base.table
        for members in self.classes():
            rows = labels[table[members]]
            cols = labels[table[:, members]].T
            if (rows != rows[0]).any() or (cols != cols[0]).any():
                return False
        return True

    def refines(self, other: "Congruence") -> bool:
        """True if every class of self lies inside one class of other."""
        return all(len({other.class_index[x] for x in members}) == 1 for members in self.classes())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Congruence):
            return NotImplemented
        return self.base is other.base and self.class_index == other.class_index

    def __hash__(self) -> int:
        return hash(self.class_index)

    def __repr__(self) -> str:
        return f"Congruence({self.classes()})"


def kernel(base: FiniteSemigroup, mapping: typing.Sequence[int]) -> Congruence:
    """The congruence relating elements with equal images under a morphism."""
    return Congruence(base, list(mapping))


def congruence_closure(
    semigroup: FiniteSemigroup, pairs: typing.Iterable[typing.Tuple[int, int]]
) -> Congruence:
    """The smallest congruence containing the given pairs."""
    n = semigroup.size
    table = semigroup.table
    forest = UnionFind(n)
    pending: typing.Deque[typing.Tuple[int, int]] = collections.deque()
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise ParameterError(f"Pair ({a}, {b}) out of range 0..{n - 1}")
        if forest.union(a, b):
            pending.append((a, b))
    while pending:
        a, b = pending.popleft()
        for x in range(n):
            for u, v in ((table[x, a], table[x, b]), (table[a, x], table[b, x])):
                if forest.union(int(u), int(v)):
                    pending.append((int(u), int(v)))
    return Congruence(semigroup, forest.class_index())


def quotient(
    semigroup: FiniteSemigroup, congruence: Congruence
) -> typing.Tuple[FiniteSemigroup, typing.List[int]]:
    """Return S/c and the projection s -> [s]."""
    if congruence.base is not semigroup:
        raise ParameterError("Congruence belongs to a different semigroup")
    labels = np.array(congruence.class_index)
    representatives = [members[0] for members in congruence.classes()]
    table = labels[semigroup.table[np.ix_(representatives, representatives)]]
    names = ["[" + semigroup.names[r] + "]" for r in representatives]
    generators = [int(labels[g]) for g in semigroup.generators]
    factor: FiniteSemigroup
    if isinstance(semigroup, FiniteInverseSemigroup):
        factor = FiniteInverseSemigroup(table, names, generators, monoid_generated=semigroup.monoid_generated)
    else:
        factor = FiniteSemigroup(table, names, generators, monoid_generated=semigroup.monoid_generated)
    return factor, list(congruence.class_index)


def is_idempotent_pure(semigroup: FiniteSemigroup, congruence: Congruence) -> bool:
    """True if no class contains both an idempotent and a non-idempotent."""
    if congruence.base is not semigroup:
        raise ParameterError("Congruence belongs to a different semigroup")
    return all(len({semigroup.is_idempotent(x) for x in members}) == 1 for members in congruence.classes())


def _with_identity_adjoined(semigroup: FiniteSemigroup) -> np.ndarray:
    n = semigroup.size
    extended = np.empty((n + 1, n + 1), dtype=np.int64)
    extended[:n, :n] = semigroup.table
    extended[n, :] = np.arange(n + 1)
    extended[:, n] = np.arange(n + 1)
    return extended


def greatest_idempotent_pure(
    semigroup: FiniteSemigroup, max_size: int = limits.MAX_CONTEXT_SIZE
) -> Congruence:
    """Relate a and b iff xay and xby are idempotent for exactly the same contexts x, y in S^1.

    Raises:
        ResourceLimitError: S is larger than max_size.
        InvariantViolation: The result is not an idempotent-pure congruence.
    """
    n = semigroup.size
    if n > max_size:
        raise ResourceLimitError(f"Context profiles are capped at {max_size} elements")
    extended = _with_identity_adjoined(semigroup)
    idempotent = np.append(semigroup.idempotent, True)
    profiles = []
    for a in range(n):
        # profile[x, y] = xay is idempotent
        profile = idempotent[extended[extended[:, a]]]
        profiles.append(profile.tobytes())
    result = Congruence(semigroup, profiles)
    log.info("Greatest idempotent-pure congruence has %d of %d classes", result.num_classes, n)
    if not result.is_compatible():
        raise InvariantViolation("Context relation is not a congruence")
    if not is_idempotent_pure(semigroup, result):
        raise InvariantViolation("Context relation is not idempotent-pure")
    return result


def _restricted_growth_strings(n: int) -> typing.Iterator[typing.List[int]]:
    labels = [0] * n

    def extend(position: int, highest: int) -> typing.Iterator[typing.List[int]]:
        if position == n:
            yield list(labels)
            return
        for label in range(highest + 2):
            labels[position] = label
            yield from extend(position + 1, max(highest, label))

    if n:
        yield from extend(1, 0)


def enumerate_congruences(
    semigroup: FiniteSemigroup, max_size: int = limits.MAX_ORACLE_SIZE
) -> typing.List[Congruence]:
    """All congruences, found by testing every set partition of the elements."""
    if semigroup.size > max_size:
        raise ResourceLimitError(f"Partition enumeration is capped at {max_size} elements")
    congruences = []
    for labels in _restricted_growth_strings(semigroup.size):
        candidate = Congruence(semigroup, labels)
        if candidate.is_compatible():
            congruences.append(candidate)
    return congruences


def smallest_containing(
    congruences: typing.Sequence[Congruence], pairs: typing.Iterable[typing.Tuple[int, int]]
) -> Congruence:
    """Intersection of the congruences that relate every given pair."""
    pairs = list(pairs)
    containing = [c for c in congruences if all(c.related(a, b) for a, b in pairs)]
    if not containing:
        raise ParameterError("No congruence contains the given pairs")
    base = containing[0].base
    return Congruence(base, [tuple(c.class_index[x] for c in containing) for x in range(base.size)])
