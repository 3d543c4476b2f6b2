"""The named corpus of small inverse semigroups and the full check suite run over it."""
# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import concurrent.futures
import dataclasses
import logging
import typing

from idemproblem import limits
from idemproblem.action import constant_action, induced_action, trivial_action
from idemproblem.congruence import congruence_closure, enumerate_congruences, smallest_containing
from idemproblem.constructors import brandt_b2, cyclic_group, free_semilattice, semilattice_monoid
from idemproblem.exceptions import InvariantViolation, ParameterError
from idemproblem.isomorphism import are_isomorphic
from idemproblem.lambda_product import LambdaProduct, check_local_finiteness_bound, lambda_product, semilattice_sigma
from idemproblem.partial_bijection import PartialBijection
from idemproblem.semigroup import (
    FiniteInverseSemigroup,
    generate_closure,
    involution_holds,
    subsemigroup_closure,
    verify_inverse,
)
from idemproblem.theorem_checks import (
    check_e_unitary_corollary,
    check_generator_invariance,
    check_main_theorem_finite_direction,
    syntactic_projection,
)

log = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class CorpusEntry:
    """A corpus semigroup, optionally with a second generating set for the invariance check."""

    name: str
    semigroup: FiniteInverseSemigroup
    alternative_generators: typing.Optional[typing.Tuple[int, ...]] = None


def semigroup_case_applies(semigroup: FiniteInverseSemigroup) -> bool:
    return bool(semigroup.generators) and len(subsemigroup_closure(semigroup, semigroup.generators)) == semigroup.size


def monoid_case_applies(semigroup: FiniteInverseSemigroup) -> bool:
    return bool(semigroup.generators) and semigroup.identity is not None


def applicable_cases(semigroup: FiniteInverseSemigroup) -> typing.List[bool]:
    """The monoid_case flags under which the recorded generators generate S."""
    cases = []
    if semigroup_case_applies(semigroup):
        cases.append(False)
    if monoid_case_applies(semigroup):
        cases.append(True)
    return cases


def swap_product() -> LambdaProduct:
    """Z2 acting on the free semilattice of rank 2 by exchanging {1} and {2}."""
    return lambda_product(induced_action(cyclic_group(2), free_semilattice(2), [[1, 0, 2]]))


def constant_product() -> LambdaProduct:
    """B2 acting on the free semilattice of rank 2 by sending everything to {1,2}."""
    return lambda_product(constant_action(brandt_b2(), free_semilattice(2), 2))


def trivial_product() -> LambdaProduct:
    return lambda_product(trivial_action(cyclic_group(1), free_semilattice(2)))


def load_corpus() -> typing.List[CorpusEntry]:
    i1 = generate_closure([PartialBijection.identity(1), PartialBijection.empty(1)])
    i2 = generate_closure([PartialBijection([1, 0]), PartialBijection([None, 1])])
    i3 = generate_closure([PartialBijection([1, 2, 0]), PartialBijection([1, 0, 2]), PartialBijection([None, 1, 2])])
    b2 = brandt_b2()
    z4 = cyclic_group(4)
    entries = [
        CorpusEntry("I1", i1),
        CorpusEntry("I2", i2),
        CorpusEntry("I3", i3),
        CorpusEntry("B2", b2, tuple(range(b2.size))),
        CorpusEntry("Z2", cyclic_group(2)),
        CorpusEntry("Z4", z4, (z4.generators[0], z4.evaluate_word((0, 0)))),
    ]
    entries.extend(CorpusEntry(f"FS{k}", free_semilattice(k)) for k in range(1, 5))
    entries.append(CorpusEntry("SM2", semilattice_monoid(2)))
    entries.append(CorpusEntry("Z2xFS2", swap_product().product))
    entries.append(CorpusEntry("B2xFS2", constant_product().product))
    return entries


def congruence_oracle_agrees(semigroup: FiniteInverseSemigroup) -> bool:
    """Compare congruence_closure with the partition oracle on every single pair and on no pairs."""
    congruences = enumerate_congruences(semigroup)
    trials: typing.List[typing.List[typing.Tuple[int, int]]] = [[]]
    trials.extend([(a, b)] for a in range(semigroup.size) for b in range(a + 1, semigroup.size))
    return all(congruence_closure(semigroup, pairs) == smallest_containing(congruences, pairs) for pairs in trials)


def _case_name(monoid_case: bool) -> str:
    return "monoid" if monoid_case else "semigroup"


def check_entry(entry: CorpusEntry) -> typing.Dict[str, typing.Any]:
    """Run every per-semigroup check on one corpus entry.

    Raises:
        InvariantViolation: An axiom, a theorem check or an oracle comparison failed.
    """
    semigroup = entry.semigroup
    axioms = verify_inverse(semigroup)
    if not axioms.ok or not involution_holds(semigroup):
        raise InvariantViolation(f"{entry.name} fails the inverse semigroup axioms")
    result: typing.Dict[str, typing.Any] = {
        "name": entry.name,
        "size": semigroup.size,
        "generators": len(semigroup.generators),
        "idempotents": len(semigroup.idempotents()),
        "identity": semigroup.identity is not None,
        "cases": {},
    }
    for monoid_case in applicable_cases(semigroup):
        projection = syntactic_projection(semigroup, monoid_case)
        result["cases"][_case_name(monoid_case)] = {
            "lemma": projection.report.to_json(),
            "e_unitary": check_e_unitary_corollary(semigroup, monoid_case).to_json(),
            "main": check_main_theorem_finite_direction(semigroup, monoid_case).to_json(),
            "syntactic_monoid_size": projection.algebra.monoid.size,
        }
    if semigroup.size <= limits.MAX_ORACLE_SIZE:
        if not congruence_oracle_agrees(semigroup):
            raise InvariantViolation(f"Congruence closure disagrees with the partition oracle on {entry.name}")
        result["congruence_oracle"] = True
    if entry.alternative_generators is not None:
        result["generator_invariance"] = {
            _case_name(monoid_case): check_generator_invariance(
                semigroup, semigroup.generators, entry.alternative_generators, monoid_case
            ).to_json()
            for monoid_case in applicable_cases(semigroup)
        }
    log.info("Checked %s (%d elements)", entry.name, semigroup.size)
    return result


def check_lambda_products(
    seed: int = limits.DEFAULT_SEED, trials: int = limits.DEFAULT_TRIALS
) -> typing.Dict[str, typing.Any]:
    swap = swap_product()
    trivial = trivial_product()
    if not are_isomorphic(trivial.product, trivial.action.target):
        raise InvariantViolation("Product with a trivial acting group is not isomorphic to the target")
    bound = check_local_finiteness_bound(swap, semilattice_sigma, trials=trials, max_m=2, seed=seed)
    return {
        "swap": {"size": swap.size, "bound": bound.to_json()},
        "constant": {"size": constant_product().size},
        "trivial": {"size": trivial.size, "isomorphic_to_target": True},
    }


def run_suite(
    seed: int = limits.DEFAULT_SEED, trials: int = limits.DEFAULT_TRIALS, workers: int = limits.DEFAULT_WORKERS
) -> typing.Dict[str, typing.Any]:
    """Run all checks over the corpus; equal arguments give equal reports."""
    if not 0 <= seed < limits.SEED_LIMIT:
        raise ParameterError(f"Seed {seed} is outside 0..{limits.SEED_LIMIT - 1}")
    corpus = load_corpus()
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        semigroups = list(executor.map(check_entry, corpus))
    report = {
        "seed": seed,
        "trials": trials,
        "semigroups": semigroups,
        "lambda_products": check_lambda_products(seed, trials),
    }
    log.info("Check suite passed on %d semigroups", len(semigroups))
    return report
