"""Complete deterministic automata over generator alphabets, and the idempotent-problem DFA."""
# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import collections
import logging
import typing

import numpy as np

from idemproblem.exceptions import ParameterError
from idemproblem.semigroup import FiniteSemigroup

log = logging.getLogger(__name__)


class Dfa:
    """A complete DFA whose letters are the integers 0..alphabet_size-1.

    Attributes:
        alphabet_size: Number of letters.
        start: The start state.
        transition: Read-only states x alphabet_size array of successor states.
        accepting: Read-only boolean array, one entry per state.
        state_names: Optional display names, used by export_dot.

    Methods:
        accepts: Run a word from the start state.
        reachable: States reachable from start, in breadth-first letter order.
    """

    def __init__(
        self,
        transition: typing.Any,
        accepting: typing.Any,
        start: int = 0,
        state_names: typing.Optional[typing.Sequence[str]] = None,
    ) -> None:
        self.transition = np.array(transition, dtype=np.int64)
        self.accepting = np.array(accepting, dtype=bool)
        if self.transition.ndim != 2 or self.transition.shape[0] == 0 or self.transition.shape[1] == 0:
            raise ParameterError(f"Transition table must be states x letters, got shape {self.transition.shape}")
        if self.accepting.shape != (self.transition.shape[0],):
            raise ParameterError("Need one accepting flag per state")
        if self.transition.min() < 0 or self.transition.max() >= self.states:
            raise ParameterError(f"Transitions must lead to states 0..{self.states - 1}")
        if not 0 <= start < self.states:
            raise ParameterError(f"Start state {start} out of range")
        self.transition.setflags(write=False)
        self.accepting.setflags(write=False)
        self.start = start
        self.state_names: typing.Tuple[str, ...] = (
            tuple(state_names) if state_names is not None else tuple(str(q) for q in range(self.states))
        )

    @property
    def states(self) -> int:
        return int(self.transition.shape[0])

    @property
    def alphabet_size(self) -> int:
        return int(self.transition.shape[1])

    def run(self, word: typing.Sequence[int], state: typing.Optional[int] = None) -> int:
        q = self.start if state is None else state
        for letter in word:
            q = int(self.transition[q, letter])
        return q

    def accepts(self, word: typing.Sequence[int]) -> bool:
        return bool(self.accepting[self.run(word)])

    def reachable(self) -> typing.List[int]:
        order = [self.start]
        seen = {self.start}
        queue = collections.deque(order)
        while queue:
            q = queue.popleft()
            for letter in range(self.alphabet_size):
                r = int(self.transition[q, letter])
                if r not in seen:
                    seen.add(r)
                    order.append(r)
                    queue.append(r)
        return order

    def __repr__(self) -> str:
        return f"Dfa(states={self.states}, alphabet_size={self.alphabet_size}, start={self.start})"


def idempotent_problem_dfa(semigroup: FiniteSemigroup, monoid_case: bool) -> Dfa:
    """Recognise the words over the generators that evaluate to idempotents.

    State 0 is the start state; state s + 1 is element s. The start state accepts exactly in
    the monoid case, where the empty word stands for the (idempotent) identity.

    Raises:
        ParameterError: No recorded generators, or the monoid case without an identity.
    """
    if not semigroup.generators:
        raise ParameterError("The idempotent problem needs recorded generators")
    if monoid_case and semigroup.identity is None:
        raise ParameterError("The monoid case needs an identity element")
    generators = np.array(semigroup.generators)
    n = semigroup.size
    transition = np.empty((n + 1, len(generators)), dtype=np.int64)
    transition[0] = generators + 1
    transition[1:] = semigroup.table[:, generators] + 1
    accepting = np.concatenate(([monoid_case], semigroup.idempotent))
    log.info("Idempotent problem DFA with %d states over %d letters", n + 1, len(generators))
    return Dfa(transition, accepting, 0, ["start"] + list(semigroup.names))


def minimize(dfa: Dfa) -> Dfa:
    """The minimal complete DFA for the same language, states numbered breadth first from start."""
    order = dfa.reachable()
    position = {q: i for i, q in enumerate(order)}
    transition = np.vectorize(position.__getitem__, otypes=[np.int64])(dfa.transition[order])
    accepting = dfa.accepting[order]

    # Moore refinement: split classes by (own class, successor classes) until stable
    _, labels = np.unique(accepting, return_inverse=True)
    count = len(set(labels.tolist()))
    while True:
        signature = np.column_stack([labels, labels[transition]])
        _, labels = np.unique(signature, axis=0, return_inverse=True)
        labels = labels.reshape(-1)
        refined = int(labels.max()) + 1
        if refined == count:
            break
        count = refined

    # renumber classes breadth first from the start class (state 0 after trimming)
    representative: typing.Dict[int, int] = {}
    for q in range(len(order)):
        representative.setdefault(int(labels[q]), q)
    numbering: typing.Dict[int, int] = {int(labels[0]): 0}
    queue = collections.deque([int(labels[0])])
    while queue:
        c = queue.popleft()
        for letter in range(dfa.alphabet_size):
            d = int(labels[transition[representative[c], letter]])
            if d not in numbering:
                numbering[d] = len(numbering)
                queue.append(d)
    minimal = np.empty((count, dfa.alphabet_size), dtype=np.int64)
    minimal_accepting = np.empty(count, dtype=bool)
    for c, i in numbering.items():
        q = representative[c]
        minimal[i] = [numbering[int(labels[r])] for r in transition[q]]
        minimal_accepting[i] = accepting[q]
    log.info("Minimised DFA from %d to %d states", dfa.states, count)
    return Dfa(minimal, minimal_accepting, 0)


def equivalent(first: Dfa, second: Dfa) -> bool:
    """True if both DFAs accept the same language (product construction, reachability)."""
    if first.alphabet_size != second.alphabet_size:
        return False
    pair = (first.start, second.start)
    seen = {pair}
    queue = collections.deque([pair])
    while queue:
        p, q = queue.popleft()
        if first.accepting[p] != second.accepting[q]:
            return False
        for letter in range(first.alphabet_size):
            successor = (int(first.transition[p, letter]), int(second.transition[q, letter]))
            if successor not in seen:
                seen.add(successor)
                queue.append(successor)
    return True
