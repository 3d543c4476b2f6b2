"""Left actions of one finite inverse semigroup on another by endomorphisms."""
# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import typing

import numpy as np

from idemproblem.exceptions import ParameterError
from idemproblem.semigroup import Failure, FiniteInverseSemigroup, MultiplicationReport

ENDOMORPHISM = "endomorphism"
ACTION = "action"


class EndomorphismAction:
    """G acting on the left of A: act[g, alpha] = g . alpha.

    Attributes:
        actor: The acting semigroup G.
        target: The semigroup A acted upon.
        act: Read-only |G| x |A| array.
    """

    def __init__(self, actor: FiniteInverseSemigroup, target: FiniteInverseSemigroup, act: typing.Any) -> None:
        table = np.array(act, dtype=np.int64)
        if table.shape != (actor.size, target.size):
            raise ParameterError(f"Action table must have shape {(actor.size, target.size)}, got {table.shape}")
        if table.min() < 0 or table.max() >= target.size:
            raise ParameterError(f"Action entries must lie in 0..{target.size - 1}")
        table.setflags(write=False)
        self.actor = actor
        self.target = target
        self.act = table

    def apply(self, g: int, alpha: int) -> int:
        return int(self.act[g, alpha])


def validate_action(action: EndomorphismAction) -> MultiplicationReport:
    """Check g.(a o b) = (g.a) o (g.b), then (gh).a = g.(h.a); report the first violation."""
    a_table = action.target.table
    act = action.act
    for g in range(action.actor.size):
        image = act[g]
        bad = np.argwhere(image[a_table] != a_table[np.ix_(image, image)])
        if len(bad):
            alpha, beta = bad[0]
            return MultiplicationReport(Failure(ENDOMORPHISM, (g, int(alpha), int(beta))))
    # lhs[g, h, alpha] = (gh).alpha, rhs[g, h, alpha] = g.(h.alpha)
    lhs = act[action.actor.table]
    rhs = act[:, act]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        g, h, alpha = bad[0]
        return MultiplicationReport(Failure(ACTION, (int(g), int(h), int(alpha))))
    return MultiplicationReport()


def trivial_action(actor: FiniteInverseSemigroup, target: FiniteInverseSemigroup) -> EndomorphismAction:
    """Every element of G acts as the identity map on A."""
    return EndomorphismAction(actor, target, np.tile(np.arange(target.size), (actor.size, 1)))


def constant_action(
    actor: FiniteInverseSemigroup, target: FiniteInverseSemigroup, idempotent: int
) -> EndomorphismAction:
    """Every element of G sends all of A to one idempotent of A."""
    if not target.is_idempotent(idempotent):
        raise ParameterError(f"Constant action needs an idempotent, {target.names[idempotent]} is not")
    return EndomorphismAction(actor, target, np.full((actor.size, target.size), idempotent))


def induced_action(
    actor: FiniteInverseSemigroup,
    target: FiniteInverseSemigroup,
    generator_maps: typing.Sequence[typing.Sequence[int]],
) -> EndomorphismAction:
    """Extend maps A -> A given per generator of G along witness words.

    The word g1 g2 ... gk acts as alpha -> g1.(g2.(... gk.alpha)). The result still needs
    validate_action: the generator maps must respect the relations of G.
    """
    if actor.witness_words is None or len(generator_maps) != len(actor.generators):
        raise ParameterError("Need one map per recorded generator of the acting semigroup")
    maps = np.array(generator_maps, dtype=np.int64)
    act = np.empty((actor.size, target.size), dtype=np.int64)
    for g, word in enumerate(actor.witness_words):
        image = np.arange(target.size)
        for letter in reversed(word):
            image = maps[letter][image]
        act[g] = image
    return EndomorphismAction(actor, target, act)
