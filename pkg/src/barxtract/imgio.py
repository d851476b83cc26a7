"""Image array helpers: PNG I/O, resampling, binarization, rotation.

Images are numpy arrays, RGB uint8 with shape (h, w, 3) or single-channel
uint8 with shape (h, w).
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
from PIL import Image


def save_png(image: np.ndarray, path: str | Path) -> None:
    Image.fromarray(image).save(str(path), format="PNG")


def load_png(path: str | Path) -> np.ndarray:
    with Image.open(str(path)) as im:
        return np.asarray(im.convert("RGB"))


def png_bytes(image: np.ndarray) -> bytes:
    import io

    buf = io.BytesIO()
    Image.fromarray(image).save(buf, format="PNG")
    return buf.getvalue()


def to_grayscale(image: np.ndarray) -> np.ndarray:
    """Luma conversion (ITU-R 601) to uint8."""
    if image.ndim == 2:
        return image
    rgb = image.astype(np.float64)
    gray = 0.299 * rgb[..., 0] + 0.587 * rgb[..., 1] + 0.114 * rgb[..., 2]
    return np.clip(np.round(gray), 0, 255).astype(np.uint8)


def otsu_threshold(gray: np.ndarray) -> int:
    """Otsu's threshold over the 256-bin histogram of a uint8 image."""
    hist = np.bincount(gray.ravel(), minlength=256).astype(np.float64)
    total = hist.sum()
    if total == 0:
        return 127
    bins = np.arange(256, dtype=np.float64)
    w0 = np.cumsum(hist)
    w1 = total - w0
    m0 = np.cumsum(hist * bins)
    mu_total = m0[-1]
    with np.errstate(divide="ignore", invalid="ignore"):
        mean0 = m0 / w0
        mean1 = (mu_total - m0) / w1
        between = w0 * w1 * (mean0 - mean1) ** 2
    between[~np.isfinite(between)] = -1.0
    return int(np.argmax(between))


def binarize(gray: np.ndarray) -> np.ndarray:
    """Global Otsu binarization to {0, 255}, dark glyphs mapped to 0."""
    t = otsu_threshold(gray)
    return np.where(gray > t, 255, 0).astype(np.uint8)


def upscale_nearest(image: np.ndarray, factor: int) -> np.ndarray:
    out = np.repeat(image, factor, axis=0)
    return np.repeat(out, factor, axis=1)


def rotate_cw(image: np.ndarray) -> np.ndarray:
    """Rotate 90 degrees clockwise."""
    return np.rot90(image, k=-1).copy()


def rotate_ccw(image: np.ndarray) -> np.ndarray:
    """Rotate 90 degrees counter-clockwise."""
    return np.rot90(image, k=1).copy()


def resize_bilinear(image: np.ndarray, out_h: int, out_w: int) -> np.ndarray:
    """Bilinear resampling with pixel-center alignment.

    Returns float32 in [0, 1] when given uint8 input; model inputs go
    through this path.
    """
    img = image.astype(np.float32)
    if img.ndim == 2:
        img = img[:, :, None]
    h, w, c = img.shape
    ys = (np.arange(out_h, dtype=np.float32) + 0.5) * (h / out_h) - 0.5
    xs = (np.arange(out_w, dtype=np.float32) + 0.5) * (w / out_w) - 0.5
    ys = np.clip(ys, 0, h - 1)
    xs = np.clip(xs, 0, w - 1)
    y0 = np.floor(ys).astype(np.int64)
    x0 = np.floor(xs).astype(np.int64)
    y1 = np.minimum(y0 + 1, h - 1)
    x1 = np.minimum(x0 + 1, w - 1)
    fy = (ys - y0)[:, None, None]
    fx = (xs - x0)[None, :, None]
    top = img[y0][:, x0] * (1 - fx) + img[y0][:, x1] * fx
    bot = img[y1][:, x0] * (1 - fx) + img[y1][:, x1] * fx
    out = top * (1 - fy) + bot * fy
    if image.ndim == 2:
        out = out[:, :, 0]
    if image.dtype == np.uint8:
        out = out / np.float32(255.0)
    return out.astype(np.float32)
