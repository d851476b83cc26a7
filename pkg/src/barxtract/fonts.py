"""Built-in bitmap font used by the chart rasterizer.

A single 5x7 pixel alphabet (digits, uppercase letters, a few symbols)
rendered at integer scales, with five derived faces. Keeping the font
in-package makes rendered text and its ground-truth boxes bit-exact on
every platform.
"""

from __future__ import annotations

import numpy as np

_RAW = {
    "0": ".###.|#...#|#..##|#.#.#|##..#|#...#|.###.",
    "1": "..#..|.##..|..#..|..#..|..#..|..#..|.###.",
    "2": ".###.|#...#|....#|...#.|..#..|.#...|#####",
    "3": ".###.|#...#|....#|..##.|....#|#...#|.###.",
    "4": "...#.|..##.|.#.#.|#..#.|#####|...#.|...#.",
    "5": "#####|#....|####.|....#|....#|#...#|.###.",
    "6": "..##.|.#...|#....|####.|#...#|#...#|.###.",
    "7": "#####|....#|...#.|..#..|.#...|.#...|.#...",
    "8": ".###.|#...#|#...#|.###.|#...#|#...#|.###.",
    "9": ".###.|#...#|#...#|.####|....#|...#.|.##..",
    "A": ".###.|#...#|#...#|#####|#...#|#...#|#...#",
    "B": "####.|#...#|#...#|####.|#...#|#...#|####.",
    "C": ".###.|#...#|#....|#....|#....|#...#|.###.",
    "D": "####.|#...#|#...#|#...#|#...#|#...#|####.",
    "E": "#####|#....|#....|####.|#....|#....|#####",
    "F": "#####|#....|#....|####.|#....|#....|#....",
    "G": ".###.|#...#|#....|#.###|#...#|#...#|.###.",
    "H": "#...#|#...#|#...#|#####|#...#|#...#|#...#",
    "I": ".###.|..#..|..#..|..#..|..#..|..#..|.###.",
    "J": "..###|...#.|...#.|...#.|...#.|#..#.|.##..",
    "K": "#...#|#..#.|#.#..|##...|#.#..|#..#.|#...#",
    "L": "#....|#....|#....|#....|#....|#....|#####",
    "M": "#...#|##.##|#.#.#|#.#.#|#...#|#...#|#...#",
    "N": "#...#|##..#|#.#.#|#..##|#...#|#...#|#...#",
    "O": ".###.|#...#|#...#|#...#|#...#|#...#|.###.",
    "P": "####.|#...#|#...#|####.|#....|#....|#....",
    "Q": ".###.|#...#|#...#|#...#|#.#.#|#..#.|.##.#",
    "R": "####.|#...#|#...#|####.|#.#..|#..#.|#...#",
    "S": ".####|#....|#....|.###.|....#|....#|####.",
    "T": "#####|..#..|..#..|..#..|..#..|..#..|..#..",
    "U": "#...#|#...#|#...#|#...#|#...#|#...#|.###.",
    "V": "#...#|#...#|#...#|#...#|#...#|.#.#.|..#..",
    "W": "#...#|#...#|#...#|#.#.#|#.#.#|##.##|#...#",
    "X": "#...#|#...#|.#.#.|..#..|.#.#.|#...#|#...#",
    "Y": "#...#|#...#|.#.#.|..#..|..#..|..#..|..#..",
    "Z": "#####|....#|...#.|..#..|.#...|#....|#####",
    ".": ".....|.....|.....|.....|.....|.##..|.##..",
    ",": ".....|.....|.....|.....|..##.|...#.|..#..",
    "-": ".....|.....|.....|.####|.....|.....|.....",
    "+": ".....|..#..|..#..|#####|..#..|..#..|.....",
    "%": "##..#|##..#|...#.|..#..|.#...|#..##|#..##",
    ":": ".....|..#..|..#..|.....|..#..|..#..|.....",
    "/": "....#|....#|...#.|..#..|.#...|#....|#....",
}

GLYPH_HEIGHT = 7
GLYPH_WIDTH = 5
SPACE_WIDTH = 3

FONT_NAMES = ("sans", "sans-bold", "narrow", "wide", "slab")


def _parse(pattern: str) -> np.ndarray:
    rows = pattern.split("|")
    return np.array([[ch == "#" for ch in row] for row in rows], dtype=bool)


_BASE = {ch: _parse(p) for ch, p in _RAW.items()}


def _dilate_h(glyph: np.ndarray) -> np.ndarray:
    out = np.zeros((glyph.shape[0], glyph.shape[1] + 1), dtype=bool)
    out[:, :-1] |= glyph
    out[:, 1:] |= glyph
    return out


def _dilate_v(glyph: np.ndarray) -> np.ndarray:
    out = np.zeros((glyph.shape[0] + 1, glyph.shape[1]), dtype=bool)
    out[:-1, :] |= glyph
    out[1:, :] |= glyph
    return out


class Font:
    """One face of the built-in alphabet at unit scale."""

    def __init__(self, name: str):
        if name not in FONT_NAMES:
            raise ValueError(f"unknown font {name!r}; choose from {FONT_NAMES}")
        self.name = name
        self.letter_spacing = {"narrow": 0, "wide": 2}.get(name, 1)
        if name == "sans-bold":
            self.glyphs = {ch: _dilate_h(g) for ch, g in _BASE.items()}
        elif name == "slab":
            self.glyphs = {ch: _dilate_v(_dilate_h(g)) for ch, g in _BASE.items()}
        else:
            self.glyphs = dict(_BASE)
        self.glyph_height = next(iter(self.glyphs.values())).shape[0]

    def supports(self, text: str) -> bool:
        return all(ch == " " or ch in self.glyphs for ch in text)

    def measure(self, text: str, scale: int = 1) -> tuple[int, int]:
        """Pixel (width, height) of the rendered string."""
        return self.render(text, scale).shape[::-1]

    def render(self, text: str, scale: int = 1) -> np.ndarray:
        """Render a string into a boolean ink mask.

        Unknown characters raise KeyError; the generator only emits
        supported characters.
        """
        if scale < 1:
            raise ValueError("scale must be >= 1")
        columns: list[np.ndarray] = []
        gap = np.zeros((self.glyph_height, self.letter_spacing), dtype=bool)
        for i, ch in enumerate(text):
            if i > 0 and self.letter_spacing:
                columns.append(gap)
            if ch == " ":
                columns.append(np.zeros((self.glyph_height, SPACE_WIDTH), dtype=bool))
            else:
                columns.append(self.glyphs[ch])
        if not columns:
            mask = np.zeros((self.glyph_height, 0), dtype=bool)
        else:
            mask = np.concatenate(columns, axis=1)
        if scale > 1:
            mask = np.kron(mask, np.ones((scale, scale), dtype=bool))
        return mask


_CACHE: dict[str, Font] = {}


def get_font(name: str) -> Font:
    if name not in _CACHE:
        _CACHE[name] = Font(name)
    return _CACHE[name]
