"""Exact focal-locus analysis and classification of plane congruences in P4."""

import json
from typing import Union

from ._core import Frame, FocalisError, gallery_item, gallery_names, suites
from ._core import analyze_json as _analyze_json
from ._core import verify_json as _verify_json

__all__ = ["Frame", "FocalisError", "analyze", "parse", "gallery_item", "gallery_names", "suites", "verify"]


def parse(text: str) -> Frame:
    """Parse PLANECONGRUENCE v1 text."""
    return Frame.parse(text)


def analyze(source: Union[Frame, str], samples: int = 25, seed: int = 0, mode: str = "sampled") -> dict:
    """Classify a frame, PLANECONGRUENCE text or "gallery:NAME"; returns the JSON report as a dict.

    Raises FocalisError(kind, message) for invalid input.
    """
    gallery = None
    label = "<python>"
    if isinstance(source, str):
        if source.startswith("gallery:"):
            gallery = source[len("gallery:"):]
            label = source
            frame = gallery_item(gallery)["frame"]
        else:
            frame = Frame.parse(source)
    else:
        frame = source
    return json.loads(_analyze_json(frame, samples, seed, mode, gallery, label))


def verify(suite: str, seed: int = 0, samples: int = 25) -> tuple:
    """Run an acceptance suite; returns (passed, table, evidence)."""
    passed, table, evidence = _verify_json(suite, seed, samples)
    return passed, table, json.loads(evidence)
