#!/usr/bin/env python

# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import pathlib
import re
import sys
import typing

RE_COPYRIGHT = re.compile(r"^# Copyright (\d\d\d\d)(-\d\d\d\d)? idemproblem Contributors\. All rights reserved\.$")
LICENSE_LINE = "# Use of this source code is governed by a MIT-style"
HEADER_LINES = 8


def header_problem(file_name: pathlib.Path) -> typing.Optional[str]:
    with open(file_name, "r", encoding="utf-8") as f:
        head = [line.rstrip("\n") for _, line in zip(range(HEADER_LINES), f)]
    if not head:
        return None
    if not any(RE_COPYRIGHT.match(line) for line in head):
        return "no copyright"
    if LICENSE_LINE not in head:
        return "no license notice"
    return None


def python_files(arguments: typing.Sequence[str]) -> typing.Iterator[pathlib.Path]:
    roots = [pathlib.Path(a) for a in arguments] or [pathlib.Path("idemproblem"), pathlib.Path("tests")]
    for root in roots:
        if root.is_dir():
            yield from sorted(root.rglob("*.py"))
        else:
            yield root


problems = [(name, header_problem(name)) for name in python_files(sys.argv[1:])]
for name, problem in problems:
    if problem:
        print(f"{name}: {problem}")
sys.exit(1 if any(problem for _, problem in problems) else 0)
