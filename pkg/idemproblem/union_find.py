# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import typing


class UnionFind:
    """Disjoint-set forest on 0..size-1 with union by rank and path compression."""

    def __init__(self, size: int) -> None:
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge the classes of x and y; return False if they were already merged."""
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        return True

    def class_index(self) -> typing.List[int]:
        """Class ids numbered by first appearance in element order."""
        ids: typing.Dict[int, int] = {}
        return [ids.setdefault(self.find(x), len(ids)) for x in range(len(self.parent))]
