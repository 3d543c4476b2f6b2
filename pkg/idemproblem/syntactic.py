"""Syntactic monoids and semigroups, computed as transition monoids of minimal DFAs."""
# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import collections
import itertools
import logging
import typing

import numpy as np

from idemproblem import limits
from idemproblem.dfa import Dfa, minimize
from idemproblem.exceptions import InvariantViolation, ParameterError, ResourceLimitError
from idemproblem.semigroup import FiniteSemigroup, Word, restrict
from idemproblem.utils import format_word

log = logging.getLogger(__name__)


class SyntacticAlgebra:
    """The syntactic monoid M(L) of a language together with its syntactic semigroup M+(L).

    Element 0 of the monoid is the class of the empty word.

    Attributes:
        monoid: M(L) as a table, monoid-generated by the letter images.
        transformations: The state map of each monoid element on the minimal DFA.
        letter_image: Monoid element of each letter.
        semigroup_part: Sorted monoid elements that are classes of nonempty words.
    """

    def __init__(
        self,
        monoid: FiniteSemigroup,
        transformations: np.ndarray,
        letter_image: typing.Sequence[int],
        semigroup_part: typing.Sequence[int],
    ) -> None:
        self.monoid = monoid
        self.transformations = transformations
        self.letter_image: typing.Tuple[int, ...] = tuple(letter_image)
        self.semigroup_part: typing.Tuple[int, ...] = tuple(semigroup_part)

    @property
    def identity(self) -> int:
        return 0

    @property
    def empty_word_merged(self) -> bool:
        """True if the empty word is syntactically equal to a nonempty one, so M+(L) = M(L)."""
        return self.identity in self.semigroup_part

    def word_class(self, word: typing.Sequence[int]) -> int:
        element = self.identity
        for letter in word:
            element = self.monoid.multiply(element, self.letter_image[letter])
        return element

    def semigroup(self) -> FiniteSemigroup:
        """M+(L) as a table of its own, generated by the letter images."""
        table, names = restrict(self.monoid, self.semigroup_part)
        position = {e: i for i, e in enumerate(self.semigroup_part)}
        return FiniteSemigroup(table, names, [position[e] for e in self.letter_image])

    def target(self, monoid_case: bool) -> FiniteSemigroup:
        """M(L) in the monoid case, M+(L) in the semigroup case."""
        return self.monoid if monoid_case else self.semigroup()


def syntactic_algebra(dfa: Dfa, max_size: int = limits.MAX_CLOSURE) -> SyntacticAlgebra:
    """Close the letter transformations of a minimal DFA under composition.

    Raises:
        ParameterError: The DFA is not minimal.
        ResourceLimitError: The transition monoid grew beyond max_size.
    """
    if minimize(dfa).states != dfa.states:
        raise ParameterError("Syntactic algebras are read off minimal DFAs; minimize first")
    letters = [dfa.transition[:, a] for a in range(dfa.alphabet_size)]
    identity = np.arange(dfa.states)
    elements: typing.List[np.ndarray] = [identity]
    words: typing.List[Word] = [()]
    index: typing.Dict[bytes, int] = {identity.tobytes(): 0}
    queue = collections.deque([0])
    while queue:
        x = queue.popleft()
        for a, letter in enumerate(letters):
            # apply x first, then the letter
            y = letter[elements[x]]
            key = y.tobytes()
            if key not in index:
                if len(elements) >= max_size:
                    raise ResourceLimitError(f"Transition monoid exceeds {max_size} elements")
                index[key] = len(elements)
                elements.append(y)
                words.append(words[x] + (a,))
                queue.append(index[key])
    transformations = np.array(elements)
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for j, e in enumerate(elements):
        for i, product in enumerate(e[transformations]):
            table[i, j] = index[product.tobytes()]
    letter_image = [index[letter.tobytes()] for letter in letters]

    nonempty = set(letter_image)
    queue = collections.deque(letter_image)
    while queue:
        x = queue.popleft()
        for g in letter_image:
            y = int(table[x, g])
            if y not in nonempty:
                nonempty.add(y)
                queue.append(y)

    names = [format_word(w) for w in words]
    monoid = FiniteSemigroup(table, names, letter_image, witness_words=words, monoid_generated=True)
    algebra = SyntacticAlgebra(monoid, transformations, letter_image, sorted(nonempty))
    log.info(
        "Syntactic monoid has %d elements, syntactic semigroup %d", monoid.size, len(algebra.semigroup_part)
    )
    return algebra


def _group_checks(semigroup: FiniteSemigroup) -> typing.Tuple[bool, bool]:
    """(exactly one idempotent, has an identity and every element is invertible)."""
    one_idempotent = int(semigroup.idempotent.sum()) == 1
    identity = semigroup.identity
    if identity is None:
        return one_idempotent, False
    invertible = (semigroup.table == identity).any(axis=1) & (semigroup.table == identity).any(axis=0)
    return one_idempotent, bool(invertible.all())


def is_group_language(algebra: SyntacticAlgebra, semigroup_part: bool = False) -> bool:
    """True if M(L) is a group, or with semigroup_part set, if M+(L) is a group.

    For the monoid the unique-idempotent test and the inverse test must agree. A finite
    semigroup without identity can have a single idempotent and still not be a group,
    so M+(L) is judged by the inverse test.
    """
    if semigroup_part:
        return _group_checks(algebra.semigroup())[1]
    one_idempotent, invertible = _group_checks(algebra.monoid)
    if one_idempotent != invertible:
        raise InvariantViolation("Finite monoid with a unique idempotent must be a group")
    return invertible


def _levels(dfa: Dfa, state: int, length: int) -> typing.List[np.ndarray]:
    """States reached from `state` by every word of length 0..length, words of each length in
    lexicographic letter order."""
    levels = [np.array([state], dtype=np.int64)]
    for _ in range(length):
        levels.append(dfa.transition[levels[-1]].reshape(-1))
    return levels


class ContextOracle:
    """Decide u =_L v by trying every context x, y with |x|, |y| <= context_length.

    Prefixes x are grouped by the state they reach. For each state the acceptance of every
    suffix y is packed into one residual vector, so the cost grows with alphabet_size to the
    power context_length; only meant for small automata.
    """

    def __init__(self, dfa: Dfa, context_length: typing.Optional[int] = None) -> None:
        self.dfa = dfa
        self.context_length = 2 * dfa.states if context_length is None else context_length
        reached = np.concatenate(_levels(dfa, dfa.start, self.context_length))
        self.prefix_states: typing.List[int] = sorted(set(reached.tolist()))
        self._residuals: typing.Dict[int, bytes] = {}

    def residual(self, state: int) -> bytes:
        if state not in self._residuals:
            reached = np.concatenate(_levels(self.dfa, state, self.context_length))
            self._residuals[state] = self.dfa.accepting[reached].tobytes()
        return self._residuals[state]

    def equivalent(self, u: typing.Sequence[int], v: typing.Sequence[int]) -> bool:
        return all(
            self.residual(self.dfa.run(u, p)) == self.residual(self.dfa.run(v, p)) for p in self.prefix_states
        )


def context_equivalent(
    dfa: Dfa, u: typing.Sequence[int], v: typing.Sequence[int], context_length: typing.Optional[int] = None
) -> bool:
    """Brute-force syntactic equivalence of two words; works on any DFA for L, minimal or not."""
    return ContextOracle(dfa, context_length).equivalent(u, v)


def words_up_to(alphabet_size: int, length: int) -> typing.Iterator[Word]:
    for size in range(length + 1):
        yield from itertools.product(range(alphabet_size), repeat=size)
