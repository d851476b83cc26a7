"""Chart style bundles: background, palette, grid and axis choices.

The 25 built-in bundles live in ``styles/default.json`` inside the
package; a style only controls look-and-feel, never layout or data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

Color = tuple[int, int, int]


@dataclass(frozen=True)
class Style:
    name: str
    background: Color
    text_color: Color
    axis_color: Color
    axis_weight: int
    grid: bool
    grid_color: Color
    palette: tuple[Color, ...]


def _as_color(v) -> Color:
    r, g, b = (int(c) for c in v)
    for c in (r, g, b):
        if not 0 <= c <= 255:
            raise ValueError(f"color component out of range: {v}")
    return (r, g, b)


def load_styles() -> tuple[Style, ...]:
    raw = resources.files("barxtract").joinpath("styles/default.json").read_text("utf-8")
    doc = json.loads(raw)
    styles = []
    for entry in doc["styles"]:
        styles.append(
            Style(
                name=str(entry["name"]),
                background=_as_color(entry["background"]),
                text_color=_as_color(entry["text_color"]),
                axis_color=_as_color(entry["axis_color"]),
                axis_weight=int(entry["axis_weight"]),
                grid=bool(entry["grid"]),
                grid_color=_as_color(entry["grid_color"]),
                palette=tuple(_as_color(c) for c in entry["palette"]),
            )
        )
    return tuple(styles)


_STYLES: tuple[Style, ...] | None = None


def builtin_styles() -> tuple[Style, ...]:
    global _STYLES
    if _STYLES is None:
        _STYLES = load_styles()
    return _STYLES
