"""Sampling of chart specifications: the randomized-but-reproducible half
of corpus generation.

Every spec is a pure function of (config.seed, index, attempt), so a corpus
is reproducible bit-for-bit from its config alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from barxtract.chartdata import HORIZONTAL, VERTICAL
from barxtract.fonts import FONT_NAMES
from barxtract.styles import builtin_styles

TITLE_POSITIONS = ("top-left", "top-center", "top-right")
LEGEND_POSITIONS = ("top-center", "upper-right", "center-right", "bottom-center")

#: Equally spaced tick steps the value axis draws from; the axis maximum is
#: step * (tick count - 1) so every label formats exactly in decimal.
VALUE_STEPS = (0.5, 1, 2, 2.5, 5, 10, 20, 25, 50, 100, 250, 500)

WORDS = (
    "SALES", "REVENUE", "GROWTH", "TOTAL", "USERS", "SCORE", "INDEX",
    "NORTH", "SOUTH", "EAST", "WEST", "ALPHA", "BETA", "GAMMA", "DELTA",
    "GROUP", "TEAM", "YEAR", "MONTH", "RATE", "VALUE", "COUNT", "PROFIT",
    "COST", "UNITS", "SHARE", "REGION", "CITY", "ITEM", "TYPE", "CLASS",
    "LEVEL", "PHASE", "STAGE", "MODEL", "STORE", "PLANT", "ZONE", "AREA",
    "MARKET", "BRAND", "OUTPUT", "DEMAND", "SUPPLY", "ENERGY", "TRAFFIC",
)


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class GenConfig:
    """Factors the generator varies, with their allowed ranges.

    The classic corpus recipe uses 2-5 series; a lower bound of 1 is
    accepted so small-chart corpora (single bars) can be generated.
    """

    style_count: int = 25
    size_range: tuple[int, int] = (300, 900)
    fonts: tuple[str, ...] = FONT_NAMES
    font_size_levels: int = 7
    text_len_range: tuple[int, int] = (1, 15)
    title_positions: tuple[str, ...] = TITLE_POSITIONS
    legend_positions: tuple[str, ...] = LEGEND_POSITIONS
    series_range: tuple[int, int] = (2, 5)
    bars_per_series_range: tuple[int, int] = (1, 3)
    seed: int = 0

    def __post_init__(self):
        lo, hi = self.size_range
        if not (300 <= lo <= hi <= 900):
            raise ConfigError(f"size_range must lie within [300, 900], got {self.size_range}")
        lo, hi = self.series_range
        if not (1 <= lo <= hi <= 5):
            raise ConfigError(f"series_range must lie within [1, 5], got {self.series_range}")
        lo, hi = self.bars_per_series_range
        if not (1 <= lo <= hi <= 3):
            raise ConfigError(
                f"bars_per_series_range must lie within [1, 3], got {self.bars_per_series_range}"
            )
        lo, hi = self.text_len_range
        if not (1 <= lo <= hi):
            raise ConfigError(f"text_len_range must be a non-empty range, got {self.text_len_range}")
        if not (1 <= self.style_count <= len(builtin_styles())):
            raise ConfigError(f"style_count must be in [1, {len(builtin_styles())}]")
        if not (1 <= self.font_size_levels <= 7):
            raise ConfigError("font_size_levels must be in [1, 7]")
        for f in self.fonts:
            if f not in FONT_NAMES:
                raise ConfigError(f"unknown font {f!r}")
        for p in self.title_positions:
            if p not in TITLE_POSITIONS:
                raise ConfigError(f"unknown title position {p!r}")
        for p in self.legend_positions:
            if p not in LEGEND_POSITIONS:
                raise ConfigError(f"unknown legend position {p!r}")


@dataclass(frozen=True)
class SeriesSpec:
    color: tuple[int, int, int]
    #: Per-group bar magnitudes as fractions of the value-axis maximum.
    fractions: tuple[float, ...]


@dataclass(frozen=True)
class ChartSpec:
    """Everything the renderer needs; no randomness beyond this point."""

    width: int
    height: int
    style_id: int
    orientation: str
    font_name: str
    title_level: int
    label_level: int
    legend_level: int
    axis_title_level: int
    title: tuple[str, str] | None          # (text, position)
    legend_position: str | None
    legend_labels: tuple[str, ...]
    x_axis_title: str | None
    y_axis_title: str | None
    n_ticks: int
    value_step: float
    percent_labels: bool
    thousands_sep: bool
    series: tuple[SeriesSpec, ...]
    category_labels: tuple[str, ...]
    group_span_frac: float
    bar_width_frac: float

    @property
    def n_series(self) -> int:
        return len(self.series)

    @property
    def n_groups(self) -> int:
        return len(self.category_labels)

    @property
    def axis_max(self) -> float:
        return self.value_step * (self.n_ticks - 1)

    @property
    def total_bars(self) -> int:
        return self.n_series * self.n_groups


def format_value(value: float, percent: bool = False, thousands: bool = False) -> str:
    """Axis-label formatting: minimal decimals, optional separator and %."""
    if value == int(value):
        text = f"{int(value):,}" if thousands else str(int(value))
    else:
        text = f"{value:.2f}".rstrip("0").rstrip(".")
    return text + "%" if percent else text


def _rng_for(config: GenConfig, index: int, attempt: int) -> np.random.Generator:
    return np.random.default_rng([np.uint64(config.seed), np.uint64(index), np.uint64(attempt)])


def _word(rng: np.random.Generator, max_len: int) -> str:
    choices = [w for w in WORDS if len(w) <= max_len]
    return str(rng.choice(choices)) if choices else "X" * max_len


def _title_text(rng: np.random.Generator, max_len: int) -> str:
    first = _word(rng, max_len)
    if rng.random() < 0.5:
        second = _word(rng, max(1, max_len - len(first) - 1))
        combined = f"{first} {second}"
        if len(combined) <= max_len:
            return combined
    return first


def _distinct_names(rng: np.random.Generator, count: int, max_len: int) -> tuple[str, ...]:
    names: list[str] = []
    seen: set[str] = set()
    while len(names) < count:
        name = _word(rng, max_len - 2)
        if rng.random() < 0.4:
            name = f"{name} {rng.integers(1, 10)}"
        if name in seen:
            name = f"{_word(rng, max_len - 2)} {rng.integers(10, 100)}"
        if name not in seen and len(name) <= max_len:
            seen.add(name)
            names.append(name)
    return tuple(names)


def sample_chart_spec(config: GenConfig, index: int, attempt: int = 0) -> ChartSpec:
    """Draw one chart specification; deterministic in (seed, index, attempt)."""
    rng = _rng_for(config, index, attempt)
    lo, hi = config.size_range
    width = int(rng.integers(lo, hi + 1))
    height = int(rng.integers(lo, hi + 1))
    style_id = int(rng.integers(0, config.style_count))
    orientation = VERTICAL if rng.random() < 0.5 else HORIZONTAL
    font_name = str(rng.choice(list(config.fonts)))

    levels = config.font_size_levels
    label_level = int(rng.integers(0, min(4, levels)))
    title_level = int(rng.integers(min(2, levels - 1), levels))
    legend_level = int(rng.integers(0, min(4, levels)))
    axis_title_level = int(rng.integers(min(1, levels - 1), min(5, levels)))

    max_len = config.text_len_range[1]
    title = None
    if rng.random() < 0.7:
        title = (_title_text(rng, max_len), str(rng.choice(list(config.title_positions))))

    n_series = int(rng.integers(config.series_range[0], config.series_range[1] + 1))
    n_groups = int(
        rng.integers(config.bars_per_series_range[0], config.bars_per_series_range[1] + 1)
    )

    legend_position = None
    legend_labels: tuple[str, ...] = ()
    if rng.random() < 0.7:
        legend_position = str(rng.choice(list(config.legend_positions)))
        legend_labels = _distinct_names(rng, n_series, min(10, max_len))

    x_axis_title = y_axis_title = None
    if rng.random() < 0.5:
        x_axis_title = _word(rng, max_len)
        y_axis_title = _word(rng, max_len)

    n_ticks = int(rng.integers(4, 9))
    value_step = float(rng.choice(VALUE_STEPS))
    percent_labels = bool(rng.random() < 0.1) and value_step <= 25
    thousands_sep = bool(rng.random() < 0.3) and value_step * (n_ticks - 1) >= 1000 and not percent_labels

    style = builtin_styles()[style_id]
    color_ids = rng.permutation(len(style.palette))[:n_series]
    series = tuple(
        SeriesSpec(
            color=style.palette[int(c)],
            fractions=tuple(float(f) for f in rng.uniform(0.08, 0.97, size=n_groups)),
        )
        for c in color_ids
    )
    category_labels = _distinct_names(rng, n_groups, min(9, max_len))

    return ChartSpec(
        width=width,
        height=height,
        style_id=style_id,
        orientation=orientation,
        font_name=font_name,
        title_level=title_level,
        label_level=label_level,
        legend_level=legend_level,
        axis_title_level=axis_title_level,
        title=title,
        legend_position=legend_position,
        legend_labels=legend_labels,
        x_axis_title=x_axis_title,
        y_axis_title=y_axis_title,
        n_ticks=n_ticks,
        value_step=value_step,
        percent_labels=percent_labels,
        thousands_sep=thousands_sep,
        series=series,
        category_labels=category_labels,
        group_span_frac=float(rng.uniform(0.7, 0.92)),
        bar_width_frac=float(rng.uniform(0.55, 0.9)),
    )
