"""Draw a multiplication table as an SVG grid."""
# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import typing

import svgwrite  # type: ignore

from idemproblem.semigroup import FiniteSemigroup
from idemproblem import utils


class TableDrawer:
    """Render the Cayley table of a finite semigroup

    Cell (a, b) shows the name of ab on a colour interpolated by the index of ab.
    Diagonal cells of idempotents are outlined.

    Attributes:
        colors: "background", "text", "cell", "cell2" and "idempotent" colours.
        cell_size: Edge length of one cell in user units.
    """

    def __init__(self, cell_size: float = 12) -> None:
        self.cell_size = cell_size
        self.colors: typing.Dict[str, str] = {
            "background": "#222222",
            "text": "#FFFFFF",
            "cell": "#4DD2FF",
            "cell2": "#FF4D94",
            "idempotent": "#FFFF00",
        }

    def drawing(self, semigroup: FiniteSemigroup, output: str = "table.svg") -> svgwrite.Drawing:
        n = semigroup.size
        width = (n + 1) * self.cell_size
        d = svgwrite.Drawing(output, (f"{width}mm", f"{width}mm"))
        d.viewbox(0, 0, width, width)
        d.add(d.rect((0, 0), (width, width), fill=self.colors["background"]))
        text_style = f"font-size:{self.cell_size / 3:.2f}px; font-family:Arial;"
        for i in range(n):
            self._label(d, semigroup.names[i], (i + 1) * self.cell_size, 0, text_style)
            self._label(d, semigroup.names[i], 0, (i + 1) * self.cell_size, text_style)
        for a in range(n):
            for b in range(n):
                self._cell(d, semigroup, a, b, text_style)
        return d

    def draw(self, semigroup: FiniteSemigroup, output: str) -> None:
        self.drawing(semigroup, output).save()

    def to_string(self, semigroup: FiniteSemigroup) -> str:
        return self.drawing(semigroup).tostring()

    def _label(self, d: svgwrite.Drawing, text: str, x: float, y: float, style: str) -> None:
        half = self.cell_size / 2
        d.add(
            d.text(
                text,
                insert=(x + half, y + half),
                fill=self.colors["text"],
                style=style,
                text_anchor="middle",
                dominant_baseline="central",
            )
        )

    def _cell(self, d: svgwrite.Drawing, semigroup: FiniteSemigroup, a: int, b: int, style: str) -> None:
        product = semigroup.multiply(a, b)
        ratio = product / (semigroup.size - 1) if semigroup.size > 1 else 0.0
        x, y = (b + 1) * self.cell_size, (a + 1) * self.cell_size
        outlined = a == b and semigroup.is_idempotent(a)
        d.add(
            d.rect(
                (x + 0.5, y + 0.5),
                (self.cell_size - 1, self.cell_size - 1),
                fill=utils.interpolate_color(self.colors["cell"], self.colors["cell2"], ratio),
                stroke=self.colors["idempotent"] if outlined else "none",
                stroke_width=1 if outlined else 0,
            )
        )
        self._label(d, semigroup.names[product], x, y, style)
