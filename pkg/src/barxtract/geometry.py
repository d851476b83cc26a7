"""Normalized bounding boxes shared by the generator, detector, and metrics.

All coordinates use the top-left image corner as origin with image width
and height as unit lengths, so every value lives in [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BBox:
    """Axis-aligned box in normalized center/extent form."""

    cx: float
    cy: float
    w: float
    h: float

    def corners(self) -> tuple[float, float, float, float]:
        """Return (x0, y0, x1, y1) corner coordinates."""
        return (
            self.cx - self.w / 2.0,
            self.cy - self.h / 2.0,
            self.cx + self.w / 2.0,
            self.cy + self.h / 2.0,
        )

    @staticmethod
    def from_corners(x0: float, y0: float, x1: float, y1: float) -> "BBox":
        return BBox((x0 + x1) / 2.0, (y0 + y1) / 2.0, x1 - x0, y1 - y0)

    @staticmethod
    def from_pixel_rect(x0: int, y0: int, x1: int, y1: int, img_w: int, img_h: int) -> "BBox":
        """Build a normalized box from a half-open pixel rect [x0, x1) x [y0, y1)."""
        return BBox.from_corners(x0 / img_w, y0 / img_h, x1 / img_w, y1 / img_h)

    def to_pixel_rect(self, img_w: int, img_h: int) -> tuple[int, int, int, int]:
        """Round back to a half-open pixel rect, clamped to the image."""
        x0, y0, x1, y1 = self.corners()
        px0 = max(0, int(round(x0 * img_w)))
        py0 = max(0, int(round(y0 * img_h)))
        px1 = min(img_w, int(round(x1 * img_w)))
        py1 = min(img_h, int(round(y1 * img_h)))
        return px0, py0, px1, py1

    def clamped(self) -> "BBox":
        x0, y0, x1, y1 = self.corners()
        x0, y0 = max(0.0, x0), max(0.0, y0)
        x1, y1 = min(1.0, x1), min(1.0, y1)
        return BBox.from_corners(x0, y0, x1, y1)

    def intersects(self, other: "BBox") -> bool:
        ax0, ay0, ax1, ay1 = self.corners()
        bx0, by0, bx1, by1 = other.corners()
        return ax0 < bx1 and bx0 < ax1 and ay0 < by1 and by0 < ay1

    def area(self) -> float:
        return max(0.0, self.w) * max(0.0, self.h)


def pixel_rects_overlap(a: tuple[int, int, int, int], b: tuple[int, int, int, int]) -> bool:
    """Overlap test for half-open pixel rects (x0, y0, x1, y1)."""
    return a[0] < b[2] and b[0] < a[2] and a[1] < b[3] and b[1] < a[3]
