# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

from idemproblem.constructors import brandt_b2, cyclic_group
from idemproblem.dfa import Dfa, idempotent_problem_dfa, minimize
from idemproblem.dot_export import export_dot


def test_single_state() -> None:
    assert export_dot(Dfa([[0]], [True])) == (
        "digraph dfa {\n"
        "  rankdir=LR;\n"
        '  __start [shape=point, label=""];\n'
        '  q0 [shape=doublecircle, label="0"];\n'
        "  __start -> q0;\n"
        '  q0 -> q0 [label="a"];\n'
        "}\n"
    )


def test_z2() -> None:
    text = export_dot(idempotent_problem_dfa(cyclic_group(2), monoid_case=False), name="z2")
    assert text.startswith("digraph z2 {\n")
    assert '  q0 [shape=circle, label="start"];' in text
    assert text.count("shape=doublecircle") == 1
    assert '  q2 -> q1 [label="a"];' in text


def test_b2() -> None:
    text = export_dot(minimize(idempotent_problem_dfa(brandt_b2(), monoid_case=False)))
    lines = text.splitlines()
    assert sum(1 for line in lines if "[shape=" in line and "__start" not in line) == 6
    assert sum(1 for line in lines if "[label=" in line) == 12
    assert text.count("shape=doublecircle") == 3
