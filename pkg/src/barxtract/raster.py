"""Minimal deterministic 2D rasterizer for chart rendering.

Integer pixel coordinates throughout, half-open rects [x0, x1) x [y0, y1),
no antialiasing. Determinism here is what makes corpus ground truth exact.
"""

from __future__ import annotations

import numpy as np

Color = tuple[int, int, int]


class Canvas:
    def __init__(self, width: int, height: int, background: Color = (255, 255, 255)):
        if width <= 0 or height <= 0:
            raise ValueError("canvas dimensions must be positive")
        self.width = width
        self.height = height
        self.pixels = np.empty((height, width, 3), dtype=np.uint8)
        self.pixels[:, :] = np.asarray(background, dtype=np.uint8)

    def fill_rect(self, x0: int, y0: int, x1: int, y1: int, color: Color) -> None:
        x0, x1 = max(0, x0), min(self.width, x1)
        y0, y1 = max(0, y0), min(self.height, y1)
        if x0 < x1 and y0 < y1:
            self.pixels[y0:y1, x0:x1] = np.asarray(color, dtype=np.uint8)

    def hline(self, y: int, x0: int, x1: int, color: Color, weight: int = 1) -> None:
        self.fill_rect(x0, y, x1, y + weight, color)

    def vline(self, x: int, y0: int, y1: int, color: Color, weight: int = 1) -> None:
        self.fill_rect(x, y0, x + weight, y1, color)

    def blit_mask(self, mask: np.ndarray, x: int, y: int, color: Color) -> None:
        """Paint True cells of a boolean mask with the color, clipped."""
        mh, mw = mask.shape
        x0, y0 = max(0, x), max(0, y)
        x1, y1 = min(self.width, x + mw), min(self.height, y + mh)
        if x0 >= x1 or y0 >= y1:
            return
        sub = mask[y0 - y : y1 - y, x0 - x : x1 - x]
        region = self.pixels[y0:y1, x0:x1]
        region[sub] = np.asarray(color, dtype=np.uint8)

    @property
    def image(self) -> np.ndarray:
        return self.pixels
