"""Deterministic chart rasterization with exact ground truth.

The renderer lays every element out on an integer pixel grid and records
ink-tight text boxes and bar geometry as it draws, so the stored ground
truth is exact by construction rather than measured after the fact.
Specs whose elements cannot be placed without overlap are rejected with
LayoutOverflow and the caller resamples.
"""

from __future__ import annotations

import numpy as np

from barxtract.chartdata import (
    HORIZONTAL,
    VERTICAL,
    BarVec,
    LabeledChart,
    TextElement,
    TextRole,
)
from barxtract.fonts import get_font
from barxtract.geometry import BBox, pixel_rects_overlap
from barxtract.raster import Canvas
from barxtract.styles import builtin_styles
from barxtract.synth import ChartSpec, GenConfig, format_value, sample_chart_spec

TICK_LEN = 4
MAX_RENDER_ATTEMPTS = 64


class LayoutOverflow(RuntimeError):
    """Raised when a spec cannot be rendered without violating layout rules."""


def font_scale(level: int, width: int, height: int, glyph_height: int) -> int:
    """Integer glyph scale for a relative size level (0-based)."""
    target = (0.018 + 0.006 * level) * min(width, height)
    return max(1, int(round(target / glyph_height)))


def _ink_rect(mask: np.ndarray) -> tuple[int, int, int, int]:
    ys, xs = np.nonzero(mask)
    if len(ys) == 0:
        raise LayoutOverflow("empty text mask")
    return int(xs.min()), int(ys.min()), int(xs.max()) + 1, int(ys.max()) + 1


class _Scene:
    """Accumulates drawing plus the pixel rects needed for overlap checks."""

    def __init__(self, spec: ChartSpec):
        self.spec = spec
        self.style = builtin_styles()[spec.style_id]
        self.canvas = Canvas(spec.width, spec.height, self.style.background)
        self.font = get_font(spec.font_name)
        self.texts: list[TextElement] = []
        self.text_rects: list[tuple[int, int, int, int]] = []
        self.bar_rects: list[tuple[int, int, int, int]] = []
        self.block_rects: list[tuple[int, int, int, int]] = []

    def scale(self, level: int) -> int:
        return font_scale(level, self.spec.width, self.spec.height, self.font.glyph_height)

    def text_mask(self, text: str, level: int) -> np.ndarray:
        return self.font.render(text, self.scale(level))

    def place_text(self, mask: np.ndarray, x: int, y: int, role: TextRole, text: str) -> tuple[int, int, int, int]:
        """Blit a prerendered mask at (x, y) and record its ink-tight box."""
        ix0, iy0, ix1, iy1 = _ink_rect(mask)
        rect = (x + ix0, y + iy0, x + ix1, y + iy1)
        if rect[0] < 0 or rect[1] < 0 or rect[2] > self.spec.width or rect[3] > self.spec.height:
            raise LayoutOverflow(f"text {text!r} escapes the canvas")
        self.canvas.blit_mask(mask, x, y, self.style.text_color)
        self.texts.append(
            TextElement(
                role=role,
                bbox=BBox.from_pixel_rect(*rect, self.spec.width, self.spec.height),
                text=text,
            )
        )
        self.text_rects.append(rect)
        return rect


def _legend_entry_dims(scene: _Scene) -> tuple[int, int, list[np.ndarray]]:
    """Swatch size, text height and prerendered masks for legend entries."""
    masks = [scene.text_mask(t, scene.spec.legend_level) for t in scene.spec.legend_labels]
    text_h = masks[0].shape[0]
    return text_h, text_h, masks


def _draw_legend_row(scene: _Scene, y: int, available_w: int) -> int:
    """Horizontal legend strip centered in the canvas; returns its height."""
    spec = scene.spec
    sw, text_h, masks = _legend_entry_dims(scene)
    gap = max(2, sw // 2)
    entry_ws = [sw + gap + m.shape[1] for m in masks]
    total = sum(entry_ws) + gap * 3 * (len(masks) - 1)
    if total > available_w:
        raise LayoutOverflow("legend strip too wide")
    x = (spec.width - total) // 2
    for i, mask in enumerate(masks):
        color = spec.series[i].color
        scene.canvas.fill_rect(x, y, x + sw, y + sw, color)
        scene.block_rects.append((x, y, x + sw, y + sw))
        scene.place_text(mask, x + sw + gap, y, TextRole.LEGEND, spec.legend_labels[i])
        x += entry_ws[i] + gap * 3
    return text_h


def _draw_legend_stack(scene: _Scene, x: int, y: int) -> tuple[int, int]:
    """Vertical legend stack with top-left corner (x, y); returns (w, h)."""
    spec = scene.spec
    sw, text_h, masks = _legend_entry_dims(scene)
    gap = max(2, sw // 2)
    row_h = text_h + gap
    block_w = sw + gap + max(m.shape[1] for m in masks)
    block_h = row_h * len(masks) - gap
    for i, mask in enumerate(masks):
        ry = y + i * row_h
        scene.canvas.fill_rect(x, ry, x + sw, ry + sw, spec.series[i].color)
        scene.place_text(mask, x + sw + gap, ry, TextRole.LEGEND, spec.legend_labels[i])
    scene.block_rects.append((x, y, x + block_w, y + block_h))
    return block_w, block_h


def _legend_stack_size(scene: _Scene) -> tuple[int, int]:
    sw, text_h, masks = _legend_entry_dims(scene)
    gap = max(2, sw // 2)
    return sw + gap + max(m.shape[1] for m in masks), (text_h + gap) * len(masks) - gap


def render_chart(spec: ChartSpec) -> LabeledChart:
    """Rasterize a spec into an image plus exact ground truth.

    Raises LayoutOverflow when elements cannot be placed without overlap
    or the plot area degenerates.
    """
    scene = _Scene(spec)
    style = scene.style
    w, h = spec.width, spec.height
    pad = max(3, round(0.02 * min(w, h)))
    gap = max(2, pad // 2)
    aw = style.axis_weight

    label_scale = scene.scale(spec.label_level)
    value_texts = [
        format_value(spec.value_step * k, spec.percent_labels, spec.thousands_sep)
        for k in range(spec.n_ticks)
    ]
    value_masks = [scene.font.render(t, label_scale) for t in value_texts]
    cat_masks = [scene.font.render(t, label_scale) for t in spec.category_labels]
    label_h = value_masks[0].shape[0]

    # --- vertical budgeting -------------------------------------------------
    top = pad
    title_mask = None
    if spec.title is not None:
        title_mask = scene.text_mask(spec.title[0], spec.title_level)
        title_y = top
        top += title_mask.shape[0] + pad
    legend_pos = spec.legend_position if spec.legend_labels else None
    if legend_pos == "top-center":
        legend_y = top
        top += _legend_entry_dims(scene)[1] + pad

    bottom = h - pad
    if legend_pos == "bottom-center":
        legend_h = _legend_entry_dims(scene)[1]
        bottom -= legend_h
        legend_y = bottom
        bottom -= pad
    xt_mask = None
    if spec.x_axis_title is not None:
        xt_mask = scene.text_mask(spec.x_axis_title, spec.axis_title_level)
        bottom -= xt_mask.shape[0]
        xt_y = bottom
        bottom -= gap
    # bottom band: category labels (vertical) or value labels (horizontal)
    bottom -= label_h
    bottom_band_y = bottom
    bottom -= gap
    if spec.orientation == HORIZONTAL:
        bottom -= TICK_LEN
    plot_y1 = bottom - aw

    # --- horizontal budgeting -----------------------------------------------
    left = pad
    yt_mask = None
    if spec.y_axis_title is not None:
        yt_mask = np.rot90(scene.text_mask(spec.y_axis_title, spec.axis_title_level), k=1)
        left += yt_mask.shape[1] + gap
    if spec.orientation == VERTICAL:
        left += max(m.shape[1] for m in value_masks) + gap + TICK_LEN
    else:
        left += max(m.shape[1] for m in cat_masks) + gap
    plot_x0 = left + aw

    plot_x1 = w - pad
    if legend_pos in ("upper-right", "center-right"):
        block_w, block_h = _legend_stack_size(scene)
        if legend_pos == "center-right":
            plot_x1 = w - pad - block_w - pad

    plot_y0 = top
    # --- snap the value axis to integer tick spacing -------------------------
    seg = spec.n_ticks - 1
    if spec.orientation == VERTICAL:
        ph = plot_y1 - plot_y0
        ph -= ph % seg
        plot_y0 = plot_y1 - ph
        pw = plot_x1 - plot_x0
        spacing = ph // seg
        if spacing < label_h + 3:
            raise LayoutOverflow("value labels would collide")
    else:
        pw = plot_x1 - plot_x0
        pw -= pw % seg
        plot_x1 = plot_x0 + pw
        ph = plot_y1 - plot_y0
        spacing = pw // seg
        max_vw = max(np.ptp(np.nonzero(m)[1]) + 1 for m in value_masks)
        if spacing < max(40, max_vw + 4):
            raise LayoutOverflow("value labels would collide")
    if ph < 40 or pw < 40 or ph < 8 * seg or pw < 8 * seg:
        raise LayoutOverflow("plot area too small")
    if pw < 6 * spec.total_bars:
        raise LayoutOverflow("too many bars for the plot width")

    # --- grid, axes, ticks ----------------------------------------------------
    if spec.orientation == VERTICAL:
        tick_rows = [plot_y1 - k * spacing for k in range(spec.n_ticks)]
        if style.grid:
            for y in tick_rows[1:]:
                scene.canvas.hline(y, plot_x0, plot_x1, style.grid_color)
    else:
        tick_cols = [plot_x0 + k * spacing for k in range(spec.n_ticks)]
        if style.grid:
            for x in tick_cols[1:]:
                scene.canvas.vline(x, plot_y0, plot_y1, style.grid_color)
    scene.canvas.vline(plot_x0 - aw, plot_y0, plot_y1 + aw, style.axis_color, aw)
    scene.canvas.hline(plot_y1, plot_x0 - aw, plot_x1, style.axis_color, aw)

    value_role = TextRole.Y_AXIS_LABEL if spec.orientation == VERTICAL else TextRole.X_AXIS_LABEL
    if spec.orientation == VERTICAL:
        for k, y in enumerate(tick_rows):
            scene.canvas.hline(y, plot_x0 - aw - TICK_LEN, plot_x0 - aw, style.axis_color)
            mask = value_masks[k]
            mx = plot_x0 - aw - TICK_LEN - gap - mask.shape[1]
            my = y - mask.shape[0] // 2
            scene.place_text(mask, mx, my, value_role, value_texts[k])
    else:
        for k, x in enumerate(tick_cols):
            scene.canvas.vline(x, plot_y1 + aw, plot_y1 + aw + TICK_LEN, style.axis_color)
            mask = value_masks[k]
            ix0, _, ix1, _ = _ink_rect(mask)
            mx = x - ix0 - (ix1 - ix0) // 2
            scene.place_text(mask, mx, bottom_band_y, value_role, value_texts[k])

    # --- bars -----------------------------------------------------------------
    bars: list[BarVec] = []
    n_groups, n_series = spec.n_groups, spec.n_series
    if spec.orientation == VERTICAL:
        slot = pw / n_groups
        span = slot * spec.group_span_frac
        step = span / n_series
        bar_w = max(2, int(step * spec.bar_width_frac))
        for g in range(n_groups):
            center = plot_x0 + (g + 0.5) * slot
            span_x0 = center - span / 2
            for s in range(n_series):
                bx0 = int(round(span_x0 + (s + 0.5) * step - bar_w / 2))
                bx1 = bx0 + bar_w
                extent = min(ph, max(2, int(round(spec.series[s].fractions[g] * ph))))
                ty = plot_y1 - extent
                scene.canvas.fill_rect(bx0, ty, bx1, plot_y1, spec.series[s].color)
                scene.bar_rects.append((bx0, ty, bx1, plot_y1))
                bars.append(BarVec((bx0 + bx1) / 2 / w, (ty + plot_y1) / 2 / h, extent / h))
        mapping = spec.axis_max * h / ph
    else:
        slot = ph / n_groups
        span = slot * spec.group_span_frac
        step = span / n_series
        bar_h = max(2, int(step * spec.bar_width_frac))
        for g in range(n_groups):
            center = plot_y0 + (g + 0.5) * slot
            span_y0 = center - span / 2
            for s in range(n_series):
                by0 = int(round(span_y0 + (s + 0.5) * step - bar_h / 2))
                by1 = by0 + bar_h
                extent = min(pw, max(2, int(round(spec.series[s].fractions[g] * pw))))
                scene.canvas.fill_rect(plot_x0, by0, plot_x0 + extent, by1, spec.series[s].color)
                scene.bar_rects.append((plot_x0, by0, plot_x0 + extent, by1))
                bars.append(BarVec((2 * plot_x0 + extent) / 2 / w, (by0 + by1) / 2 / h, extent / w))
        mapping = spec.axis_max * w / pw

    # --- category labels --------------------------------------------------------
    cat_role = TextRole.X_AXIS_LABEL if spec.orientation == VERTICAL else TextRole.Y_AXIS_LABEL
    if spec.orientation == VERTICAL:
        for g, mask in enumerate(cat_masks):
            center = plot_x0 + (g + 0.5) * pw / n_groups
            ix0, _, ix1, _ = _ink_rect(mask)
            mx = int(round(center - ix0 - (ix1 - ix0) / 2))
            scene.place_text(mask, mx, bottom_band_y, cat_role, spec.category_labels[g])
    else:
        for g, mask in enumerate(cat_masks):
            center = plot_y0 + (g + 0.5) * ph / n_groups
            mx = plot_x0 - aw - gap - mask.shape[1]
            my = int(round(center - mask.shape[0] / 2))
            scene.place_text(mask, mx, my, cat_role, spec.category_labels[g])

    # --- titles and legend ---------------------------------------------------
    if title_mask is not None:
        pos = spec.title[1]
        if pos == "top-left":
            tx = pad
        elif pos == "top-right":
            tx = w - pad - title_mask.shape[1]
        else:
            tx = (w - title_mask.shape[1]) // 2
        scene.place_text(title_mask, tx, title_y, TextRole.TITLE, spec.title[0])
    if xt_mask is not None:
        tx = int(round((plot_x0 + plot_x1) / 2 - xt_mask.shape[1] / 2))
        scene.place_text(xt_mask, tx, xt_y, TextRole.X_AXIS_TITLE, spec.x_axis_title)
    if yt_mask is not None:
        ty = int(round((plot_y0 + plot_y1) / 2 - yt_mask.shape[0] / 2))
        if ty < 0 or ty + yt_mask.shape[0] > h:
            raise LayoutOverflow("y-axis title too tall")
        scene.place_text(yt_mask, pad, ty, TextRole.Y_AXIS_TITLE, spec.y_axis_title)

    if legend_pos in ("top-center", "bottom-center"):
        _draw_legend_row(scene, legend_y, w - 2 * pad)
    elif legend_pos == "center-right":
        by = int(round((plot_y0 + plot_y1) / 2 - block_h / 2))
        _draw_legend_stack(scene, plot_x1 + pad, max(0, by))
    elif legend_pos == "upper-right":
        _draw_legend_stack(scene, plot_x1 - block_w - 2 * gap, plot_y0 + 2 * gap)

    violations = _scene_violations(scene)
    if violations:
        raise LayoutOverflow("; ".join(violations))

    return LabeledChart(
        image=scene.canvas.image,
        texts=scene.texts,
        bars=bars,
        orientation=spec.orientation,
        mapping=mapping,
    )


def _scene_violations(scene: _Scene) -> list[str]:
    out = []
    rects = scene.text_rects
    for i in range(len(rects)):
        for j in range(i + 1, len(rects)):
            if pixel_rects_overlap(rects[i], rects[j]):
                out.append(f"text/text overlap ({scene.texts[i].text!r}, {scene.texts[j].text!r})")
    for i, tr in enumerate(rects):
        for br in scene.bar_rects:
            if pixel_rects_overlap(tr, br):
                out.append(f"text/bar overlap ({scene.texts[i].text!r})")
    for i, a in enumerate(scene.bar_rects):
        for b in scene.bar_rects[i + 1 :]:
            if pixel_rects_overlap(a, b):
                out.append("bar/bar overlap")
    for blk in scene.block_rects:
        for br in scene.bar_rects:
            if pixel_rects_overlap(blk, br):
                out.append("legend/bar overlap")
    return out


def generate_chart(config: GenConfig, index: int) -> LabeledChart:
    """Sample-and-render with deterministic resampling on layout rejection."""
    for attempt in range(MAX_RENDER_ATTEMPTS):
        spec = sample_chart_spec(config, index, attempt)
        try:
            return render_chart(spec)
        except LayoutOverflow:
            continue
    raise RuntimeError(f"no renderable spec for index {index} after {MAX_RENDER_ATTEMPTS} attempts")


# --- ground-truth verification helpers ---------------------------------------


def bar_pixel_rects(chart: LabeledChart) -> list[tuple[int, int, int, int]]:
    """Recover each bar's pixel rect by flood-expanding its solid color run."""
    w, h = chart.image_size
    img = chart.image
    rects = []
    for bar in chart.bars:
        cx = min(w - 1, max(0, int(bar.x * w)))
        cy = min(h - 1, max(0, int(bar.y * h)))
        color = img[cy, cx]
        row_match = np.all(img[cy] == color, axis=-1)
        x0 = cx
        while x0 > 0 and row_match[x0 - 1]:
            x0 -= 1
        x1 = cx + 1
        while x1 < w and row_match[x1]:
            x1 += 1
        col_match = np.all(img[:, cx] == color, axis=-1)
        y0 = cy
        while y0 > 0 and col_match[y0 - 1]:
            y0 -= 1
        y1 = cy + 1
        while y1 < h and col_match[y1]:
            y1 += 1
        rects.append((x0, y0, x1, y1))
    return rects


def measure_bar_extents(chart: LabeledChart) -> np.ndarray:
    """Re-measure normalized bar extents from the raster."""
    w, h = chart.image_size
    rects = bar_pixel_rects(chart)
    if chart.orientation == VERTICAL:
        return np.array([(y1 - y0) / h for _, y0, _, y1 in rects])
    return np.array([(x1 - x0) / w for x0, _, x1, _ in rects])


def audit_chart(chart: LabeledChart) -> list[str]:
    """Check the no-overlap and no-stacking assumptions on a labeled chart.

    Returns a list of violation descriptions; an empty list means the
    chart satisfies the generator's assumptions.
    """
    w, h = chart.image_size
    problems = []
    t_rects = [t.bbox.to_pixel_rect(w, h) for t in chart.texts]
    b_rects = bar_pixel_rects(chart)
    for i in range(len(t_rects)):
        for j in range(i + 1, len(t_rects)):
            if pixel_rects_overlap(t_rects[i], t_rects[j]):
                problems.append(f"text/text overlap ({chart.texts[i].text!r}, {chart.texts[j].text!r})")
    for i, tr in enumerate(t_rects):
        for br in b_rects:
            if pixel_rects_overlap(tr, br):
                problems.append(f"text/bar overlap ({chart.texts[i].text!r})")
    for i in range(len(b_rects)):
        for j in range(i + 1, len(b_rects)):
            if pixel_rects_overlap(b_rects[i], b_rects[j]):
                problems.append("bar/bar overlap")
    # all bars must share one baseline; stacked bars would not
    if chart.bars:
        if chart.orientation == VERTICAL:
            bases = [b.y + b.v / 2 for b in chart.bars]
            tol = 1.0 / h
        else:
            bases = [b.x - b.v / 2 for b in chart.bars]
            tol = 1.0 / w
        if max(bases) - min(bases) > tol + 1e-9:
            problems.append("bars not on a common baseline (stacked?)")
    return problems
