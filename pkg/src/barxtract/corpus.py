"""Corpus persistence: `NNNNN.png` images with `NNNNN.json` sidecars.

The sidecar schema is versioned and stable; loaders reject anything they
do not understand rather than guessing.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable

from barxtract.chartdata import HORIZONTAL, VERTICAL, BarVec, LabeledChart, TextElement, TextRole
from barxtract.geometry import BBox
from barxtract.imgio import load_png, save_png

SCHEMA_VERSION = 1
MANIFEST_NAME = "manifest.json"


class SchemaError(ValueError):
    """A sidecar or manifest file does not match the expected schema."""

    def __init__(self, path: str | Path, message: str):
        super().__init__(f"{path}: {message}")
        self.path = str(path)


def chart_to_sidecar(chart: LabeledChart) -> dict:
    w, h = chart.image_size
    return {
        "version": SCHEMA_VERSION,
        "image_size": [w, h],
        "orientation": chart.orientation,
        "texts": [
            {
                "role": t.role.value,
                "bbox": {"cx": t.bbox.cx, "cy": t.bbox.cy, "w": t.bbox.w, "h": t.bbox.h},
                "string": t.text,
            }
            for t in chart.texts
        ],
        "bars": [{"x": b.x, "y": b.y, "v": b.v} for b in chart.bars],
        "mapping": chart.mapping,
    }


def sidecar_to_chart(doc: dict, image, path: str | Path = "<sidecar>") -> LabeledChart:
    try:
        version = doc["version"]
        if version != SCHEMA_VERSION:
            raise SchemaError(path, f"unsupported schema version {version!r}")
        orientation = doc["orientation"]
        if orientation not in (VERTICAL, HORIZONTAL):
            raise SchemaError(path, f"bad orientation {orientation!r}")
        texts = [
            TextElement(
                role=TextRole(t["role"]),
                bbox=BBox(
                    float(t["bbox"]["cx"]),
                    float(t["bbox"]["cy"]),
                    float(t["bbox"]["w"]),
                    float(t["bbox"]["h"]),
                ),
                text=str(t["string"]),
            )
            for t in doc["texts"]
        ]
        bars = [BarVec(float(b["x"]), float(b["y"]), float(b["v"])) for b in doc["bars"]]
        mapping = float(doc["mapping"])
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(path, f"malformed sidecar ({exc})") from exc
    return LabeledChart(
        image=image, texts=texts, bars=bars, orientation=orientation, mapping=mapping
    )


def _dump_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def chart_paths(directory: str | Path, chart_id: str) -> tuple[Path, Path]:
    d = Path(directory)
    return d / f"{chart_id}.png", d / f"{chart_id}.json"


def write_chart(chart: LabeledChart, directory: str | Path, chart_id: str) -> None:
    png_path, json_path = chart_paths(directory, chart_id)
    save_png(chart.image, png_path)
    json_path.write_text(_dump_json(chart_to_sidecar(chart)), encoding="utf-8")


def write_corpus(charts: Iterable[LabeledChart], directory: str | Path) -> list[str]:
    """Write charts as NNNNN.png/.json pairs; returns the assigned ids."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    ids = []
    for i, chart in enumerate(charts):
        chart_id = f"{i:05d}"
        write_chart(chart, d, chart_id)
        ids.append(chart_id)
    return ids


def corpus_ids(directory: str | Path) -> list[str]:
    d = Path(directory)
    if not d.is_dir():
        raise FileNotFoundError(f"corpus directory not found: {d}")
    return sorted(p.stem for p in d.glob("*.json") if p.name != MANIFEST_NAME)


def load_chart(directory: str | Path, chart_id: str) -> LabeledChart:
    png_path, json_path = chart_paths(directory, chart_id)
    try:
        doc = json.loads(json_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(json_path, f"invalid JSON ({exc})") from exc
    if not png_path.exists():
        raise SchemaError(json_path, "missing paired image file")
    chart = sidecar_to_chart(doc, load_png(png_path), json_path)
    chart.chart_id = chart_id
    return chart


def load_corpus(directory: str | Path) -> list[LabeledChart]:
    """Load every chart in a corpus directory, ordered by id."""
    return [load_chart(directory, cid) for cid in corpus_ids(directory)]


def write_manifest(
    directory: str | Path,
    config_hash: str,
    seed: int,
    train_ids: list[str],
    test_ids: list[str],
    extra: dict | None = None,
) -> None:
    doc = {
        "version": SCHEMA_VERSION,
        "config_hash": config_hash,
        "seed": seed,
        "count": len(train_ids) + len(test_ids),
        "train_ids": train_ids,
        "test_ids": test_ids,
    }
    if extra:
        doc.update(extra)
    (Path(directory) / MANIFEST_NAME).write_text(_dump_json(doc), encoding="utf-8")


def load_manifest(directory: str | Path) -> dict:
    path = Path(directory) / MANIFEST_NAME
    if not path.exists():
        raise FileNotFoundError(f"manifest not found: {path}")
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(path, f"invalid JSON ({exc})") from exc
    for key in ("version", "config_hash", "seed", "count", "train_ids", "test_ids"):
        if key not in doc:
            raise SchemaError(path, f"manifest missing key {key!r}")
    return doc
