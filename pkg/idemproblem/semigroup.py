"""Table-backed finite semigroups, inverse-axiom verification and closure under generators."""
# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import collections
import dataclasses
import logging
import typing

import numpy as np

from idemproblem import limits
from idemproblem.exceptions import ParameterError, ResourceLimitError
from idemproblem.partial_bijection import PartialBijection

log = logging.getLogger(__name__)

Word = typing.Tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class Failure:
    """First violated axiom: its kind and the offending element indices."""

    kind: str
    witnesses: typing.Tuple[int, ...]

    def describe(self) -> str:
        return f"{self.kind}: {', '.join(str(w) for w in self.witnesses)}"


@dataclasses.dataclass(frozen=True)
class MultiplicationReport:
    failure: typing.Optional[Failure] = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def to_json(self) -> typing.Dict[str, typing.Any]:
        if self.failure is None:
            return {"ok": True}
        return {"ok": False, "kind": self.failure.kind, "witnesses": list(self.failure.witnesses)}


NON_ASSOCIATIVE = "non-associative triple"
MISSING_INVERSE = "missing inverse"
NON_UNIQUE_INVERSE = "non-unique inverse"


def _as_table(table: typing.Any) -> np.ndarray:
    array = np.array(table, dtype=np.int64)
    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
        raise ParameterError(f"Multiplication table must be a nonempty square, got shape {array.shape}")
    n = array.shape[0]
    if array.min() < 0 or array.max() >= n:
        raise ParameterError(f"Multiplication table entries must lie in 0..{n - 1}")
    array.setflags(write=False)
    return array


def _find_identity(table: np.ndarray) -> typing.Optional[int]:
    elements = np.arange(len(table))
    for e in range(len(table)):
        if (table[e] == elements).all() and (table[:, e] == elements).all():
            return e
    return None


def _breadth_first_words(
    table: np.ndarray, generators: typing.Sequence[int], identity_word: typing.Optional[int]
) -> typing.Dict[int, Word]:
    """Shortest words over the generators, ties broken lexicographically by generator index."""
    words: typing.Dict[int, Word] = {}
    queue: typing.Deque[int] = collections.deque()
    if identity_word is not None:
        words[identity_word] = ()
        queue.append(identity_word)
    else:
        for index, g in enumerate(generators):
            if g not in words:
                words[g] = (index,)
                queue.append(g)
    while queue:
        x = queue.popleft()
        for index, g in enumerate(generators):
            y = int(table[x, g])
            if y not in words:
                words[y] = words[x] + (index,)
                queue.append(y)
    return words


class FiniteSemigroup:
    """A finite semigroup given by its multiplication table.

    Attributes:
        table: Read-only size x size array, table[a, b] = ab.
        names: Display string per element.
        identity: Index of the two-sided identity, or None.
        generators: Element indices of the recorded generating set (letters of the alphabet).
        witness_words: Per element, a shortest word over the generators evaluating to it.
        monoid_generated: True if the empty word stands for the identity.
    """

    def __init__(
        self,
        table: typing.Any,
        names: typing.Optional[typing.Sequence[str]] = None,
        generators: typing.Sequence[int] = (),
        witness_words: typing.Optional[typing.Sequence[Word]] = None,
        monoid_generated: bool = False,
    ) -> None:
        self.table = _as_table(table)
        n = len(self.table)
        self.names: typing.Tuple[str, ...] = tuple(names) if names is not None else tuple(str(i) for i in range(n))
        if len(self.names) != n:
            raise ParameterError(f"Expected {n} element names, got {len(self.names)}")
        self.identity = _find_identity(self.table)
        self.idempotent = np.diagonal(self.table) == np.arange(n)
        self.idempotent.setflags(write=False)
        self.generators: typing.Tuple[int, ...] = tuple(int(g) for g in generators)
        for g in self.generators:
            if not 0 <= g < n:
                raise ParameterError(f"Generator {g} out of range 0..{n - 1}")
        if monoid_generated and self.identity is None:
            raise ParameterError("Monoid generation needs an identity element")
        self.monoid_generated = monoid_generated
        self.witness_words: typing.Optional[typing.Tuple[Word, ...]] = None
        if witness_words is not None:
            self.witness_words = tuple(tuple(w) for w in witness_words)
        elif self.generators:
            words = _breadth_first_words(
                self.table, self.generators, self.identity if monoid_generated else None
            )
            if len(words) != n:
                raise ParameterError(f"Generators reach only {len(words)} of {n} elements")
            self.witness_words = tuple(words[x] for x in range(n))

    @property
    def size(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    def multiply(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def is_idempotent(self, e: int) -> bool:
        return bool(self.idempotent[e])

    def idempotents(self) -> typing.FrozenSet[int]:
        return frozenset(int(e) for e in np.flatnonzero(self.idempotent))

    def evaluate_word(self, word: typing.Sequence[int]) -> int:
        """Fold a word of generator indices through the table."""
        if not word:
            if self.identity is None:
                raise ParameterError("The empty word needs an identity element")
            return self.identity
        x = self.generators[word[0]]
        for letter in word[1:]:
            x = int(self.table[x, self.generators[letter]])
        return x

    def with_generators(self, generators: typing.Sequence[int], monoid_generated: bool = False) -> "FiniteSemigroup":
        return FiniteSemigroup(self.table, self.names, generators, monoid_generated=monoid_generated)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(size={self.size}, generators={list(self.generators)})"


class FiniteInverseSemigroup(FiniteSemigroup):
    """A finite semigroup in which every element x has a unique x^-1 with xx^-1x = x, x^-1xx^-1 = x^-1.

    Attributes:
        inverse_of: Per element, the index of its inverse.
        elements: Optional concrete partial bijections, one per element.
    """

    def __init__(
        self,
        table: typing.Any,
        names: typing.Optional[typing.Sequence[str]] = None,
        generators: typing.Sequence[int] = (),
        witness_words: typing.Optional[typing.Sequence[Word]] = None,
        monoid_generated: bool = False,
        inverse_of: typing.Optional[typing.Sequence[int]] = None,
        elements: typing.Optional[typing.Sequence[PartialBijection]] = None,
    ) -> None:
        super().__init__(table, names, generators, witness_words, monoid_generated)
        if inverse_of is None:
            inverse_of = _unique_inverses(self.table)
        self.inverse_of: typing.Tuple[int, ...] = tuple(int(i) for i in inverse_of)
        self.elements: typing.Optional[typing.Tuple[PartialBijection, ...]] = (
            tuple(elements) if elements is not None else None
        )

    def inverse(self, x: int) -> int:
        return self.inverse_of[x]

    def with_generators(
        self, generators: typing.Sequence[int], monoid_generated: bool = False
    ) -> "FiniteInverseSemigroup":
        return FiniteInverseSemigroup(
            self.table,
            self.names,
            generators,
            monoid_generated=monoid_generated,
            inverse_of=self.inverse_of,
            elements=self.elements,
        )


def _inverse_candidates(table: np.ndarray, x: int) -> np.ndarray:
    elements = np.arange(len(table))
    xy = table[x]
    yx = table[:, x]
    return np.flatnonzero((table[xy, x] == x) & (table[yx, elements] == elements))


def _unique_inverses(table: np.ndarray) -> typing.List[int]:
    inverses = []
    for x in range(len(table)):
        candidates = _inverse_candidates(table, x)
        if len(candidates) != 1:
            raise ParameterError(f"Element {x} has {len(candidates)} inverses; not an inverse semigroup")
        inverses.append(int(candidates[0]))
    return inverses


def verify_inverse(semigroup: typing.Union[FiniteSemigroup, typing.Any]) -> MultiplicationReport:
    """Check associativity and unique inverses; report the first violation in row-major order."""
    table = semigroup.table if isinstance(semigroup, FiniteSemigroup) else _as_table(semigroup)
    for a in range(len(table)):
        # lhs[b, c] = (ab)c, rhs[b, c] = a(bc)
        lhs = table[table[a]]
        rhs = table[a][table]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            b, c = bad[0]
            return MultiplicationReport(Failure(NON_ASSOCIATIVE, (a, int(b), int(c))))
    for x in range(len(table)):
        candidates = _inverse_candidates(table, x)
        if len(candidates) == 0:
            return MultiplicationReport(Failure(MISSING_INVERSE, (x,)))
        if len(candidates) > 1:
            return MultiplicationReport(Failure(NON_UNIQUE_INVERSE, (x, int(candidates[0]), int(candidates[1]))))
    return MultiplicationReport()


def idempotents(semigroup: FiniteSemigroup) -> typing.FrozenSet[int]:
    return semigroup.idempotents()


def from_table(
    table: typing.Any,
    names: typing.Optional[typing.Sequence[str]] = None,
    generators: typing.Sequence[int] = (),
    monoid_generated: bool = False,
) -> FiniteInverseSemigroup:
    """Build an inverse semigroup from a raw table, rejecting tables that fail verify_inverse."""
    report = verify_inverse(table)
    if report.failure is not None:
        raise ParameterError(f"Not an inverse semigroup ({report.failure.describe()})")
    return FiniteInverseSemigroup(table, names, generators, monoid_generated=monoid_generated)


def composition_table(elements: typing.Sequence[PartialBijection], degree: int) -> np.ndarray:
    """Cayley table of a set of partial bijections closed under composition.

    Row a is computed at once for every right factor: each b-th image row is read through the
    images of a, and the resulting rows are matched back to element indices with np.unique.
    """
    n = len(elements)
    images = np.array([[-1 if image is None else image for image in p.images] for p in elements], dtype=np.int64)
    # the extra column keeps undefined points undefined
    padded = np.full((n, degree + 1), -1, dtype=np.int64)
    padded[:, :degree] = images
    table = np.empty((n, n), dtype=np.int64)
    position = np.empty(2 * n, dtype=np.int64)
    for a in range(n):
        products = padded[:, images[a]]
        _, labels = np.unique(np.concatenate((images, products)), axis=0, return_inverse=True)
        labels = labels.reshape(-1)
        position[labels[:n]] = np.arange(n)
        table[a] = position[labels[n:]]
    return table


def generate_closure(
    generators: typing.Sequence[PartialBijection],
    monoid: bool = False,
    max_size: int = limits.MAX_CLOSURE,
) -> FiniteInverseSemigroup:
    """Close a set of partial bijections under composition, breadth first.

    With monoid set the identity map is adjoined with the empty witness word; otherwise the
    identity is present only if some nonempty word produces it.

    Raises:
        ParameterError: No generators, or generators of different degrees.
        ResourceLimitError: The closure grew beyond max_size elements.
    """
    if not generators:
        raise ParameterError("At least one generator is required")
    degree = generators[0].degree
    for g in generators:
        if g.degree != degree:
            raise ParameterError(f"Degree mismatch among generators: {g.degree} vs {degree}")

    elements: typing.List[PartialBijection] = []
    words: typing.List[Word] = []
    index: typing.Dict[PartialBijection, int] = {}
    queue: typing.Deque[int] = collections.deque()

    def discover(p: PartialBijection, word: Word) -> None:
        if p in index:
            return
        if len(elements) >= max_size:
            raise ResourceLimitError(f"Closure exceeds {max_size} elements")
        index[p] = len(elements)
        elements.append(p)
        words.append(word)
        queue.append(index[p])

    if monoid:
        discover(PartialBijection.identity(degree), ())
    else:
        for i, g in enumerate(generators):
            discover(g, (i,))
    while queue:
        x = queue.popleft()
        for i, g in enumerate(generators):
            discover(elements[x] * g, words[x] + (i,))
    log.info("Closure of %d generator(s) of degree %d has %d elements", len(generators), degree, len(elements))

    return FiniteInverseSemigroup(
        composition_table(elements, degree),
        names=[str(p) for p in elements],
        generators=[index[g] for g in generators],
        witness_words=words,
        monoid_generated=monoid,
        inverse_of=[index[p.invert()] for p in elements],
        elements=elements,
    )


def subsemigroup_closure(
    semigroup: FiniteSemigroup, elements: typing.Iterable[int], max_size: int = limits.MAX_CLOSURE
) -> typing.List[int]:
    """Return the sorted element indices of the subsemigroup generated by elements."""
    seeds = sorted(set(int(e) for e in elements))
    seen = set(seeds)
    queue = collections.deque(seeds)
    while queue:
        x = queue.popleft()
        for g in seeds:
            y = int(semigroup.table[x, g])
            if y not in seen:
                if len(seen) >= max_size:
                    raise ResourceLimitError(f"Subsemigroup exceeds {max_size} elements")
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def restrict(semigroup: FiniteSemigroup, elements: typing.Sequence[int]) -> typing.Tuple[np.ndarray, typing.List[str]]:
    """Relabel a multiplicatively closed subset as a table on 0..len(elements)-1."""
    position = {e: i for i, e in enumerate(elements)}
    sub = semigroup.table[np.ix_(elements, elements)]
    try:
        relabelled = np.vectorize(position.__getitem__, otypes=[np.int64])(sub)
    except KeyError as e:
        raise ParameterError("Subset is not closed under multiplication") from e
    return relabelled, [semigroup.names[e] for e in elements]


def involution_holds(semigroup: FiniteInverseSemigroup) -> bool:
    """(x^-1)^-1 = x and (xy)^-1 = y^-1 x^-1 for all x, y."""
    inverse = np.array(semigroup.inverse_of)
    if (inverse[inverse] != np.arange(semigroup.size)).any():
        return False
    return bool((inverse[semigroup.table] == semigroup.table[np.ix_(inverse, inverse)].T).all())
