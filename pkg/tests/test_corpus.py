# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

from idemproblem.constructors import brandt_b2, semilattice_monoid
from idemproblem.corpus import (
    applicable_cases,
    check_entry,
    check_lambda_products,
    congruence_oracle_agrees,
    constant_product,
    load_corpus,
    run_suite,
    swap_product,
    trivial_product,
)
from idemproblem.document import dumps


def test_corpus_names() -> None:
    names = [entry.name for entry in load_corpus()]
    assert names == ["I1", "I2", "I3", "B2", "Z2", "Z4", "FS1", "FS2", "FS3", "FS4", "SM2", "Z2xFS2", "B2xFS2"]


def test_applicable_cases() -> None:
    assert applicable_cases(brandt_b2()) == [False]
    assert applicable_cases(semilattice_monoid(2)) == [True]
    cases = {entry.name: applicable_cases(entry.semigroup) for entry in load_corpus()}
    assert cases["Z4"] == [False, True]
    assert cases["FS3"] == [False]
    assert all(cases.values())


def test_products() -> None:
    assert swap_product().size == 6
    assert constant_product().size == 5
    assert trivial_product().size == 3


def test_congruence_oracle_agrees() -> None:
    assert congruence_oracle_agrees(brandt_b2())
    assert congruence_oracle_agrees(semilattice_monoid(2))


def test_check_entry_b2() -> None:
    entry = next(e for e in load_corpus() if e.name == "B2")
    result = check_entry(entry)
    assert result["size"] == 5
    assert result["idempotents"] == 3
    assert list(result["cases"]) == ["semigroup"]
    assert result["cases"]["semigroup"]["e_unitary"]["e_unitary"] is False
    assert result["cases"]["semigroup"]["lemma"]["kernel_classes"] == 5
    assert result["congruence_oracle"]
    assert result["generator_invariance"]["semigroup"]["isomorphic"]


def test_check_lambda_products() -> None:
    first = check_lambda_products(seed=3, trials=8)
    assert first == check_lambda_products(seed=3, trials=8)
    assert first["swap"]["size"] == 6
    assert first["swap"]["bound"]["holds"]
    assert first["trivial"]["isomorphic_to_target"]


def test_run_suite_is_deterministic() -> None:
    first = run_suite(seed=11, trials=4, workers=1)
    second = run_suite(seed=11, trials=4, workers=4)
    assert dumps(first) == dumps(second)
    assert len(first["semigroups"]) == len(load_corpus())
    by_name = {entry["name"]: entry for entry in first["semigroups"]}
    assert by_name["FS3"]["cases"]["semigroup"]["main"]["attained"]
    assert by_name["I3"]["size"] == 34
