"""Machine checks of the idempotent-problem results on concrete finite inverse semigroups.

Each check builds the idempotent problem of a semigroup, derives its syntactic algebra and
compares it with structure computed directly from the multiplication table. A failing
comparison raises InvariantViolation; the returned reports record what was compared.
"""
# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import dataclasses
import logging
import typing

import numpy as np

from idemproblem import limits
from idemproblem.congruence import greatest_idempotent_pure, kernel
from idemproblem.dfa import Dfa, idempotent_problem_dfa, minimize
from idemproblem.exceptions import InvariantViolation, ParameterError
from idemproblem.isomorphism import are_isomorphic
from idemproblem.lambda_product import billhardt_bound
from idemproblem.semigroup import FiniteInverseSemigroup, FiniteSemigroup, subsemigroup_closure
from idemproblem.syntactic import SyntacticAlgebra, is_group_language, syntactic_algebra

log = logging.getLogger(__name__)


def is_e_unitary(semigroup: FiniteSemigroup) -> bool:
    """True if no product of an idempotent and a non-idempotent, in either order, is idempotent."""
    idempotent = semigroup.idempotent
    es = np.flatnonzero(idempotent)
    others = np.flatnonzero(~idempotent)
    if len(others) == 0:
        return True
    left = bool(idempotent[semigroup.table[np.ix_(es, others)]].any())
    right = bool(idempotent[semigroup.table[np.ix_(others, es)]].any())
    if isinstance(semigroup, FiniteInverseSemigroup) and left != right:
        raise InvariantViolation("ea and ae disagree on idempotency in an inverse semigroup")
    return not (left or right)


def _generated_for_case(semigroup: FiniteSemigroup, monoid_case: bool) -> FiniteSemigroup:
    """S with witness words for the case: nonempty words, or words with 1 as the empty word."""
    if not semigroup.generators:
        raise ParameterError("The idempotent problem needs recorded generators")
    if semigroup.monoid_generated == monoid_case and semigroup.witness_words is not None:
        return semigroup
    return semigroup.with_generators(semigroup.generators, monoid_generated=monoid_case)


def idempotent_problem_algebra(
    semigroup: FiniteSemigroup, monoid_case: bool, max_size: int = limits.MAX_CLOSURE
) -> typing.Tuple[Dfa, Dfa, SyntacticAlgebra]:
    """The idempotent-problem DFA, its minimisation and its syntactic algebra."""
    dfa = idempotent_problem_dfa(semigroup, monoid_case)
    minimal = minimize(dfa)
    return dfa, minimal, syntactic_algebra(minimal, max_size)


@dataclasses.dataclass(frozen=True)
class ProjectionReport:
    monoid_case: bool
    well_defined: bool
    surjective: bool
    idempotent_pure: bool
    kernel_is_greatest: bool
    target_size: int
    kernel_classes: int
    empty_word_merged: bool

    @property
    def ok(self) -> bool:
        return self.well_defined and self.surjective and self.idempotent_pure and self.kernel_is_greatest

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True)
class Projection:
    algebra: SyntacticAlgebra
    mapping: typing.Tuple[int, ...]
    report: ProjectionReport


def syntactic_projection(
    semigroup: FiniteSemigroup, monoid_case: bool, max_size: int = limits.MAX_CLOSURE
) -> Projection:
    """Map each element to the syntactic class of its witness word and check the map.

    Checked: (W) phi(s)phi(t) = phi(st) for all pairs; (S) the image is M+(L), or M(L) in the
    monoid case; (P) phi(s) idempotent implies s idempotent; (K) the kernel of phi is the
    greatest idempotent-pure congruence computed from contexts in S^1.

    Raises:
        ParameterError: Missing generators, or generators that do not generate S for the case.
        InvariantViolation: Any of W, S, P, K fails.
    """
    semigroup = _generated_for_case(semigroup, monoid_case)
    _, _, algebra = idempotent_problem_algebra(semigroup, monoid_case, max_size)
    assert semigroup.witness_words is not None
    phi = np.array([algebra.word_class(w) for w in semigroup.witness_words], dtype=np.int64)
    monoid = algebra.monoid

    well_defined = bool((phi[semigroup.table] == monoid.table[np.ix_(phi, phi)]).all())
    target = set(range(monoid.size)) if monoid_case else set(algebra.semigroup_part)
    surjective = set(phi.tolist()) == target
    idempotent_pure = bool((~monoid.idempotent[phi] | semigroup.idempotent).all())
    phi_kernel = kernel(semigroup, phi.tolist())
    kernel_is_greatest = phi_kernel == greatest_idempotent_pure(semigroup)

    report = ProjectionReport(
        monoid_case=monoid_case,
        well_defined=well_defined,
        surjective=surjective,
        idempotent_pure=idempotent_pure,
        kernel_is_greatest=kernel_is_greatest,
        target_size=len(target),
        kernel_classes=phi_kernel.num_classes,
        empty_word_merged=algebra.empty_word_merged,
    )
    if not report.ok:
        checks = zip("WSPK", (well_defined, surjective, idempotent_pure, kernel_is_greatest))
        failed = [name for name, passed in checks if not passed]
        raise InvariantViolation(f"Syntactic projection fails check(s) {', '.join(failed)}")
    log.info("Syntactic projection of a %d-element semigroup onto %d classes verified", semigroup.size, len(target))
    return Projection(algebra, tuple(int(x) for x in phi), report)


@dataclasses.dataclass(frozen=True)
class EUnitaryReport:
    monoid_case: bool
    e_unitary: bool
    group_language: bool
    monoid_is_group: bool
    empty_word_merged: bool

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return dataclasses.asdict(self)


def check_e_unitary_corollary(
    semigroup: FiniteSemigroup, monoid_case: bool, max_size: int = limits.MAX_CLOSURE
) -> EUnitaryReport:
    """Compare E-unitarity of S with the group property of the algebra S projects onto.

    The projection lands in M(L) in the monoid case and in M+(L) in the semigroup case;
    monoid_is_group records the verdict for M(L) regardless of the case.
    """
    semigroup = _generated_for_case(semigroup, monoid_case)
    _, _, algebra = idempotent_problem_algebra(semigroup, monoid_case, max_size)
    report = EUnitaryReport(
        monoid_case=monoid_case,
        e_unitary=is_e_unitary(semigroup),
        group_language=is_group_language(algebra, semigroup_part=not monoid_case),
        monoid_is_group=is_group_language(algebra),
        empty_word_merged=algebra.empty_word_merged,
    )
    if report.e_unitary != report.group_language:
        raise InvariantViolation(
            f"E-unitary is {report.e_unitary} but the group-language test gives {report.group_language}"
        )
    return report


@dataclasses.dataclass(frozen=True)
class InvarianceReport:
    monoid_case: bool
    first_size: int
    second_size: int
    isomorphic: bool

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return dataclasses.asdict(self)


def check_generator_invariance(
    semigroup: FiniteSemigroup,
    first_generators: typing.Sequence[int],
    second_generators: typing.Sequence[int],
    monoid_case: bool,
    max_size: int = limits.MAX_ISOMORPHISM_SIZE,
) -> InvarianceReport:
    """Build the syntactic semigroup (monoid) for two generating sets and test isomorphism.

    Raises:
        ParameterError: A set does not generate S.
        InvariantViolation: The two algebras are not isomorphic.
    """
    targets = []
    for generators in (first_generators, second_generators):
        regenerated = semigroup.with_generators(generators, monoid_generated=monoid_case)
        _, _, algebra = idempotent_problem_algebra(regenerated, monoid_case)
        targets.append(algebra.target(monoid_case))
    isomorphic = are_isomorphic(*targets, max_size=max_size)
    report = InvarianceReport(monoid_case, targets[0].size, targets[1].size, isomorphic)
    if not report.isomorphic:
        raise InvariantViolation("Syntactic algebras of two generating sets are not isomorphic")
    return report


@dataclasses.dataclass(frozen=True)
class MainTheoremReport:
    monoid_case: bool
    size: int
    dfa_states: int
    minimal_states: int
    syntactic_monoid_size: int
    n: int
    k: int
    bound: int

    @property
    def attained(self) -> bool:
        return self.size == self.bound

    def to_json(self) -> typing.Dict[str, typing.Any]:
        result = dataclasses.asdict(self)
        result["attained"] = self.attained
        return result


def check_main_theorem_finite_direction(
    semigroup: FiniteSemigroup, monoid_case: bool, max_size: int = limits.MAX_CLOSURE
) -> MainTheoremReport:
    """A finite S has a regular idempotent problem, and |S| <= n(2^(kn) - 1).

    n is the size of the algebra S projects onto; k counts the generators, plus one in the
    monoid case when the identity is not a product of generators.

    Raises:
        InvariantViolation: The DFA is too large or the size bound fails.
    """
    semigroup = _generated_for_case(semigroup, monoid_case)
    dfa, minimal, algebra = idempotent_problem_algebra(semigroup, monoid_case, max_size)
    if dfa.states > semigroup.size + 1 or minimal.states > dfa.states:
        raise InvariantViolation(f"Idempotent-problem DFA has {dfa.states} states for {semigroup.size} elements")
    n = algebra.monoid.size if monoid_case else len(algebra.semigroup_part)
    k = len(semigroup.generators)
    if monoid_case and semigroup.identity not in subsemigroup_closure(semigroup, semigroup.generators):
        k += 1
    # exact integers; the exponent guard only protects printed bounds
    bound = billhardt_bound(n, k, max_exponent=max(limits.MAX_BOUND_EXPONENT, k * n))
    if semigroup.size > bound:
        raise InvariantViolation(f"|S| = {semigroup.size} exceeds n(2^(kn) - 1) = {bound} for n={n}, k={k}")
    return MainTheoremReport(
        monoid_case=monoid_case,
        size=semigroup.size,
        dfa_states=dfa.states,
        minimal_states=minimal.states,
        syntactic_monoid_size=algebra.monoid.size,
        n=n,
        k=k,
        bound=bound,
    )
