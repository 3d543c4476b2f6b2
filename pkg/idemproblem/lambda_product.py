"""Lambda-semidirect products and empirical checks of their local finiteness bounds."""
# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import concurrent.futures
import dataclasses
import itertools
import logging
import math
import typing

import numpy as np

from idemproblem import limits
from idemproblem.action import EndomorphismAction, validate_action
from idemproblem.exceptions import InvariantViolation, ParameterError
from idemproblem.isomorphism import generating_set
from idemproblem.semigroup import FiniteInverseSemigroup, FiniteSemigroup, subsemigroup_closure, verify_inverse

log = logging.getLogger(__name__)

Sigma = typing.Callable[[int], int]


class LambdaProduct:
    """Pairs (alpha, g) with gg^-1 . alpha = alpha under

        (alpha, g)(beta, h) = ([(gh)(gh)^-1 . alpha] o [g . beta], gh)

    Attributes:
        action: The action the product is built from.
        pairs: The universe, sorted lexicographically by (alpha, g).
        product: The resulting inverse semigroup; element i is pairs[i].
    """

    def __init__(
        self,
        action: EndomorphismAction,
        pairs: typing.Sequence[typing.Tuple[int, int]],
        product: FiniteInverseSemigroup,
    ) -> None:
        self.action = action
        self.pairs = tuple(pairs)
        self.product = product

    @property
    def size(self) -> int:
        return len(self.pairs)


def lambda_product(
    action: EndomorphismAction, generators: typing.Optional[typing.Sequence[int]] = None
) -> LambdaProduct:
    """Build the lambda-semidirect product of a valid action.

    Args:
        action: G acting on A by endomorphisms.
        generators: Pair indices to record as generators; a generating set is chosen
            greedily when omitted.

    Raises:
        ParameterError: The action fails validate_action.
        InvariantViolation: The universe is not closed or the product is not inverse.
    """
    report = validate_action(action)
    if report.failure is not None:
        raise ParameterError(f"Invalid action ({report.failure.describe()})")
    g_semigroup, a_semigroup, act = action.actor, action.target, action.act
    g_inverse = np.array(g_semigroup.inverse_of)
    g_table = g_semigroup.table

    # gg^-1 for every g
    domain_idempotent = g_table[np.arange(g_semigroup.size), g_inverse]
    pairs = [
        (alpha, g)
        for alpha in range(a_semigroup.size)
        for g in range(g_semigroup.size)
        if act[domain_idempotent[g], alpha] == alpha
    ]
    log.info("Lambda product universe has %d of %d pairs", len(pairs), a_semigroup.size * g_semigroup.size)
    alphas = np.array([p[0] for p in pairs])
    gs = np.array([p[1] for p in pairs])

    gh = g_table[np.ix_(gs, gs)]
    left = act[domain_idempotent[gh], alphas[:, None]]
    right = act[gs[:, None], alphas[None, :]]
    new_alpha = a_semigroup.table[left, right]

    position = np.full((a_semigroup.size, g_semigroup.size), -1, dtype=np.int64)
    position[alphas, gs] = np.arange(len(pairs))
    table = position[new_alpha, gh]
    if (table < 0).any():
        i, j = np.argwhere(table < 0)[0]
        raise InvariantViolation(f"Universe not closed: product of pairs {pairs[i]} and {pairs[j]} leaves it")

    names = [f"({a_semigroup.names[alpha]},{g_semigroup.names[g]})" for alpha, g in pairs]
    check = verify_inverse(table)
    if check.failure is not None:
        raise InvariantViolation(f"Lambda product is not inverse ({check.failure.describe()})")
    product = FiniteInverseSemigroup(table, names)
    if generators is None:
        generators = generating_set(product)
    return LambdaProduct(action, pairs, product.with_generators(generators))


def billhardt_bound(n: int, k: int, max_exponent: int = limits.MAX_BOUND_EXPONENT) -> int:
    """n(2^(kn) - 1): the size bound for a k-generated inverse semigroup with an n-element
    idempotent-pure quotient."""
    if n < 1 or k < 1:
        raise ParameterError(f"Bound needs positive n and k, got n={n}, k={k}")
    if k * n > max_exponent:
        raise ParameterError(f"Exponent kn={k * n} exceeds the overflow guard {max_exponent}")
    return n * (2 ** (k * n) - 1)


def semilattice_sigma(j: int) -> int:
    """Size of the free semilattice of rank j, bounding every j-generated semilattice."""
    return 2**j - 1


def size_sigma(semigroup: FiniteSemigroup) -> Sigma:
    return lambda j: semigroup.size


@dataclasses.dataclass(frozen=True)
class BoundTrial:
    m: int
    subset: typing.Tuple[int, ...]
    size: int
    bound: int


@dataclasses.dataclass(frozen=True)
class BoundReport:
    trials: typing.Tuple[BoundTrial, ...]
    sigma_checks: int

    @property
    def max_ratio(self) -> float:
        return max((t.size / t.bound for t in self.trials), default=0.0)

    @property
    def holds(self) -> bool:
        return all(t.size <= t.bound for t in self.trials)

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return {
            "holds": self.holds,
            "max_ratio": round(self.max_ratio, 6),
            "sigma_checks": self.sigma_checks,
            "trials": [
                {"m": t.m, "subset": list(t.subset), "size": t.size, "bound": t.bound} for t in self.trials
            ],
        }


def _subsets(
    universe: int, m: int, trials: int, rng: np.random.Generator
) -> typing.List[typing.Tuple[int, ...]]:
    """Every m-subset when there are at most `trials` of them, else `trials` random ones."""
    if m > universe:
        return []
    if math.comb(universe, m) <= trials:
        return list(itertools.combinations(range(universe), m))
    return [tuple(sorted(int(x) for x in rng.choice(universe, size=m, replace=False))) for _ in range(trials)]


def _closure_size(semigroup: FiniteSemigroup, subset: typing.Tuple[int, ...], max_size: int) -> int:
    return len(subsemigroup_closure(semigroup, subset, max_size))


def _closure_sizes(
    semigroup: FiniteSemigroup,
    subsets: typing.Sequence[typing.Tuple[int, ...]],
    workers: int,
    max_size: int,
) -> typing.Dict[typing.Tuple[int, ...], int]:
    sizes = {}
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        future_to_subset = {
            executor.submit(_closure_size, semigroup, subset, max_size): subset for subset in set(subsets)
        }
        for future in concurrent.futures.as_completed(future_to_subset):
            sizes[future_to_subset[future]] = future.result()
    return sizes


def check_local_finiteness_bound(
    product: LambdaProduct,
    sigma: Sigma,
    trials: int = limits.DEFAULT_TRIALS,
    max_m: int = 2,
    seed: int = limits.DEFAULT_SEED,
    workers: int = limits.DEFAULT_WORKERS,
    max_size: int = limits.MAX_CLOSURE,
) -> BoundReport:
    """Check |<Y>| <= |G| sigma(m|G|) for m-subsets Y of the product, m = 1..max_m.

    sigma is first sampled on the target A: every k-subset tried must generate at most
    sigma(k) elements.

    Raises:
        ParameterError: sigma is not valid for A on the sampled subsets, or the seed is out of range.
        InvariantViolation: Some |<Y>| exceeds the bound.
        ResourceLimitError: A closure grew beyond max_size.
    """
    if trials < 1 or max_m < 1:
        raise ParameterError("trials and max_m must be positive")
    if not 0 <= seed < limits.SEED_LIMIT:
        raise ParameterError(f"Seed {seed} is outside 0..{limits.SEED_LIMIT - 1}")
    rng = np.random.default_rng(seed)
    g_size = product.action.actor.size
    target = product.action.target

    sigma_checks = 0
    for k in range(1, min(target.size, max_m * g_size) + 1):
        subsets = _subsets(target.size, k, trials, rng)
        for subset, size in sorted(_closure_sizes(target, subsets, workers, max_size).items()):
            sigma_checks += 1
            if size > sigma(k):
                raise ParameterError(f"sigma({k}) = {sigma(k)} but {list(subset)} generates {size} elements of A")

    results = []
    for m in range(1, max_m + 1):
        bound = g_size * sigma(m * g_size)
        subsets = _subsets(product.size, m, trials, rng)
        sizes = _closure_sizes(product.product, subsets, workers, max_size)
        for subset in sorted(sizes):
            results.append(BoundTrial(m, subset, sizes[subset], bound))
            if sizes[subset] > bound:
                raise InvariantViolation(f"{list(subset)} generates {sizes[subset]} elements, above the bound {bound}")
    report = BoundReport(tuple(results), sigma_checks)
    log.info("Local finiteness bound held on %d subsets, max ratio %.3f", len(results), report.max_ratio)
    return report
