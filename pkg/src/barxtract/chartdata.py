"""Ground-truth data model shared by the generator, corpus I/O and pipelines."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from barxtract.geometry import BBox


class TextRole(str, Enum):
    TITLE = "title"
    LEGEND = "legend"
    X_AXIS_TITLE = "x-axis-title"
    Y_AXIS_TITLE = "y-axis-title"
    X_AXIS_LABEL = "x-axis-label"
    Y_AXIS_LABEL = "y-axis-label"
    NON_TEXT = "non-text"


#: The six real text roles, in classifier output order; NON_TEXT is class 7.
TEXT_ROLES = (
    TextRole.TITLE,
    TextRole.LEGEND,
    TextRole.X_AXIS_TITLE,
    TextRole.Y_AXIS_TITLE,
    TextRole.X_AXIS_LABEL,
    TextRole.Y_AXIS_LABEL,
)

CLASS_ORDER = TEXT_ROLES + (TextRole.NON_TEXT,)

VERTICAL = "vertical"
HORIZONTAL = "horizontal"

#: Start/end markers delimiting a bar sequence.
START_BAR = (1.0, 1.0, 1.0)
END_BAR = (0.0, 0.0, 0.0)


@dataclass(frozen=True)
class TextElement:
    """One rendered text run: role, tight normalized box, ground-truth string."""

    role: TextRole
    bbox: BBox
    text: str


@dataclass(frozen=True)
class BarVec:
    """One bar: normalized center (x, y) and normalized value-axis extent v."""

    x: float
    y: float
    v: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.v], dtype=np.float64)


@dataclass
class LabeledChart:
    """A rendered chart image plus its exact ground truth.

    ``mapping`` is the value-axis scale: chart units per normalized-pixel
    unit along the value axis, so ``bar.v * mapping`` is the bar's height
    in chart units.
    """

    image: np.ndarray
    texts: list[TextElement]
    bars: list[BarVec]
    orientation: str
    mapping: float
    chart_id: str | None = field(default=None, compare=False)

    @property
    def image_size(self) -> tuple[int, int]:
        h, w = self.image.shape[:2]
        return w, h

    def bar_matrix(self) -> np.ndarray:
        """Bars as an (n, 3) float array in extraction order."""
        if not self.bars:
            return np.zeros((0, 3), dtype=np.float64)
        return np.stack([b.as_array() for b in self.bars])

    def heights(self) -> np.ndarray:
        """Ground-truth bar heights in chart units."""
        return self.bar_matrix()[:, 2] * self.mapping if self.bars else np.zeros(0)
