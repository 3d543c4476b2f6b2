"""Assorted helpers for naming words and colouring rendered tables."""
# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import string
import typing

import colour  # type: ignore


def letter_name(letter: int) -> str:
    """a, b, ... z for the first 26 letters, x26, x27, ... afterwards."""
    if letter < len(string.ascii_lowercase):
        return string.ascii_lowercase[letter]
    return f"x{letter}"


def format_word(word: typing.Sequence[int]) -> str:
    """Render a word of letter indices; the empty word is shown as 1."""
    if not word:
        return "1"
    return "".join(letter_name(letter) for letter in word)


def interpolate_color(color1: str, color2: str, ratio: float) -> str:
    if ratio < 0:
        ratio = 0
    elif ratio > 1:
        ratio = 1
    c1 = colour.Color(color1)
    c2 = colour.Color(color2)
    c3 = colour.Color(
        hue=((1 - ratio) * c1.hue + ratio * c2.hue),
        saturation=((1 - ratio) * c1.saturation + ratio * c2.saturation),
        luminance=((1 - ratio) * c1.luminance + ratio * c2.luminance),
    )
    return c3.hex_l
