# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import json

from idemproblem.dfa import Dfa
from idemproblem.utils import letter_name


def _quote(text: str) -> str:
    # JSON string escaping is valid DOT string escaping for these labels
    return json.dumps(text)


def export_dot(dfa: Dfa, name: str = "dfa") -> str:
    """Graphviz text for a DFA: one node per state, accepting states doubled, one edge per letter."""
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for q in range(dfa.states):
        shape = "doublecircle" if dfa.accepting[q] else "circle"
        lines.append(f"  q{q} [shape={shape}, label={_quote(dfa.state_names[q])}];")
    lines.append(f"  __start -> q{dfa.start};")
    for q in range(dfa.states):
        for a in range(dfa.alphabet_size):
            lines.append(f"  q{q} -> q{int(dfa.transition[q, a])} [label={_quote(letter_name(a))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
