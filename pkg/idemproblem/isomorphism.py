"""Isomorphism testing of small finite semigroups by backtracking over generator images."""
# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import collections
import logging
import typing

import numpy as np

from idemproblem import limits
from idemproblem.exceptions import ResourceLimitError
from idemproblem.semigroup import FiniteSemigroup, subsemigroup_closure

log = logging.getLogger(__name__)

Fingerprint = typing.Tuple[bool, int, int, bool]


def _order_profile(semigroup: FiniteSemigroup, x: int) -> typing.Tuple[int, int]:
    """Index and period of the monogenic subsemigroup generated by x."""
    seen: typing.Dict[int, int] = {}
    power, exponent = x, 1
    while power not in seen:
        seen[power] = exponent
        power = semigroup.multiply(power, x)
        exponent += 1
    index = seen[power]
    return index, exponent - index


def fingerprints(semigroup: FiniteSemigroup) -> typing.List[Fingerprint]:
    return [
        (semigroup.is_idempotent(x), *_order_profile(semigroup, x), x == semigroup.identity)
        for x in range(semigroup.size)
    ]


def generating_set(semigroup: FiniteSemigroup) -> typing.List[int]:
    """The recorded generators, greedily extended until they generate S as a semigroup."""
    chosen: typing.List[int] = list(dict.fromkeys(semigroup.generators))
    covered = set(subsemigroup_closure(semigroup, chosen)) if chosen else set()
    for x in range(semigroup.size):
        if x not in covered:
            chosen.append(x)
            covered = set(subsemigroup_closure(semigroup, chosen))
    return chosen


class _Search:
    def __init__(self, source: FiniteSemigroup, target: FiniteSemigroup) -> None:
        self.source = source
        self.target = target
        self.source_prints = fingerprints(source)
        self.target_prints = fingerprints(target)
        self.generators = generating_set(source)
        self.candidates: typing.Dict[Fingerprint, typing.List[int]] = collections.defaultdict(list)
        for t, fp in enumerate(self.target_prints):
            self.candidates[fp].append(t)

    def _propagate(self, mapping: typing.Dict[int, int], assigned: int) -> typing.Optional[typing.Dict[int, int]]:
        """Extend mapping along right multiplication by the first `assigned` generators."""
        mapping = dict(mapping)
        used = set(mapping.values())
        gens = self.generators[:assigned]
        queue = collections.deque(mapping)
        while queue:
            s = queue.popleft()
            for g in gens:
                product = self.source.multiply(s, g)
                image = self.target.multiply(mapping[s], mapping[g])
                known = mapping.get(product)
                if known is not None:
                    if known != image:
                        return None
                    continue
                if image in used or self.source_prints[product] != self.target_prints[image]:
                    return None
                mapping[product] = image
                used.add(image)
                queue.append(product)
        return mapping

    def run(self, mapping: typing.Dict[int, int], assigned: int) -> typing.Optional[typing.Dict[int, int]]:
        if assigned == len(self.generators):
            return mapping if len(mapping) == self.source.size else None
        g = self.generators[assigned]
        if g in mapping:
            extended = self._propagate(mapping, assigned + 1)
            return self.run(extended, assigned + 1) if extended is not None else None
        used = set(mapping.values())
        for candidate in self.candidates[self.source_prints[g]]:
            if candidate in used:
                continue
            extended = self._propagate({**mapping, g: candidate}, assigned + 1)
            if extended is None:
                continue
            result = self.run(extended, assigned + 1)
            if result is not None:
                return result
        return None


def find_isomorphism(
    source: FiniteSemigroup, target: FiniteSemigroup, max_size: int = limits.MAX_ISOMORPHISM_SIZE
) -> typing.Optional[typing.List[int]]:
    """Return f with f[s] the image of element s under an isomorphism, or None.

    Raises:
        ResourceLimitError: Either semigroup is larger than max_size.
    """
    if source.size > max_size or target.size > max_size:
        raise ResourceLimitError(f"Isomorphism search is capped at {max_size} elements")
    if source.size != target.size:
        return None
    if int(source.idempotent.sum()) != int(target.idempotent.sum()):
        return None
    search = _Search(source, target)
    if sorted(search.source_prints) != sorted(search.target_prints):
        return None
    mapping = search.run({}, 0)
    if mapping is None:
        return None
    f = np.array([mapping[s] for s in range(source.size)], dtype=np.int64)
    # f(ab) = f(a)f(b) over the whole table
    assert (f[source.table] == target.table[np.ix_(f, f)]).all()
    log.info("Found isomorphism between semigroups of size %d", source.size)
    return [int(t) for t in f]


def are_isomorphic(
    source: FiniteSemigroup, target: FiniteSemigroup, max_size: int = limits.MAX_ISOMORPHISM_SIZE
) -> bool:
    return find_isomorphism(source, target, max_size) is not None
