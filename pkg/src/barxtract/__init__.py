"""Toolkit for reverse-engineering bar chart images.

Generates labeled synthetic chart corpora, trains an encoder-decoder
numeric extractor with deterministic visual attention, runs a pluggable
detection/OCR textual pipeline, recovers chart-unit bar heights with
RANSAC-filtered axis mappings, and evaluates every stage.
"""

from barxtract.geometry import BBox

__version__ = "0.1.0"

__all__ = ["BBox", "__version__"]
