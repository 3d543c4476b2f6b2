"""Injective partial maps on {0..n-1}, the concrete elements of every constructed semigroup."""
# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import itertools
import typing

from idemproblem.exceptions import ParameterError


class PartialBijection:
    """An injective partial map on the points {0..degree-1}.

    Attributes:
        degree: Size of the ambient set.
        images: For each point its image, or None where the map is undefined.

    Methods:
        compose: Apply self first, then other.
        invert: Reverse every defined pair.
        domain: Points where the map is defined.
        is_identity: True for the identity on the full ambient set.
    """

    __slots__ = ("_degree", "_images")

    def __init__(self, images: typing.Sequence[typing.Optional[int]]) -> None:
        degree = len(images)
        if degree < 1:
            raise ParameterError("A partial bijection needs degree >= 1")
        seen: typing.Set[int] = set()
        for point, image in enumerate(images):
            if image is None:
                continue
            if not 0 <= image < degree:
                raise ParameterError(f"Image {image} of point {point} is outside 0..{degree - 1}")
            if image in seen:
                raise ParameterError(f"Not injective: two points map to {image}")
            seen.add(image)
        self._degree = degree
        self._images: typing.Tuple[typing.Optional[int], ...] = tuple(images)

    @classmethod
    def identity(cls, degree: int) -> "PartialBijection":
        return cls(list(range(degree)))

    @classmethod
    def empty(cls, degree: int) -> "PartialBijection":
        return cls([None] * degree)

    @classmethod
    def from_pairs(cls, degree: int, pairs: typing.Mapping[int, int]) -> "PartialBijection":
        images: typing.List[typing.Optional[int]] = [None] * degree
        for point, image in pairs.items():
            if not 0 <= point < degree:
                raise ParameterError(f"Point {point} is outside 0..{degree - 1}")
            images[point] = image
        return cls(images)

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def images(self) -> typing.Tuple[typing.Optional[int], ...]:
        return self._images

    def __call__(self, point: int) -> typing.Optional[int]:
        return self._images[point]

    def domain(self) -> typing.FrozenSet[int]:
        return frozenset(p for p, i in enumerate(self._images) if i is not None)

    def rank(self) -> int:
        return len(self.domain())

    def is_identity(self) -> bool:
        return all(i == p for p, i in enumerate(self._images))

    def compose(self, other: "PartialBijection") -> "PartialBijection":
        """Return the map x -> other(self(x)), so products read like words."""
        if self._degree != other.degree:
            raise ParameterError(f"Degree mismatch: {self._degree} vs {other.degree}")
        return PartialBijection([None if i is None else other(i) for i in self._images])

    def invert(self) -> "PartialBijection":
        images: typing.List[typing.Optional[int]] = [None] * self._degree
        for point, image in enumerate(self._images):
            if image is not None:
                images[image] = point
        return PartialBijection(images)

    def __mul__(self, other: "PartialBijection") -> "PartialBijection":
        return self.compose(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialBijection):
            return NotImplemented
        return self._images == other.images

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        return f"PartialBijection({list(self._images)})"

    def __str__(self) -> str:
        pairs = ",".join(f"{p}>{i}" for p, i in enumerate(self._images) if i is not None)
        return "{" + pairs + "}"


def compose(p: PartialBijection, q: PartialBijection) -> PartialBijection:
    return p.compose(q)


def invert(p: PartialBijection) -> PartialBijection:
    return p.invert()


def all_partial_bijections(degree: int) -> typing.List[PartialBijection]:
    """Enumerate every partial bijection of the given degree, |I_n| = sum C(n,k)^2 k! of them."""
    result = []
    for domain_size in range(degree + 1):
        for domain in itertools.combinations(range(degree), domain_size):
            for image in itertools.permutations(range(degree), domain_size):
                result.append(PartialBijection.from_pairs(degree, dict(zip(domain, image))))
    return result
