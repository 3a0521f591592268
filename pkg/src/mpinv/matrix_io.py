"""Canonical JSON wire format for matrices.

A matrix is serialized as ``{"rows": m, "cols": n, "data": [[re, im], ...]}``
with ``data`` row-major of length ``m * n``.  Parsing rejects wrong
lengths and non-finite values.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .core import as_matrix

__all__ = ["matrix_to_dict", "matrix_from_dict", "load_matrix", "save_matrix"]


def matrix_to_dict(m) -> dict:
    """Serialize a matrix to the canonical JSON-ready dict."""
    a = as_matrix(m)
    data = [[float(z.real), float(z.imag)] for z in a.ravel()]
    return {"rows": int(a.shape[0]), "cols": int(a.shape[1]), "data": data}


def matrix_from_dict(obj) -> np.ndarray:
    """Parse the canonical dict form back into a complex matrix."""
    if not isinstance(obj, dict):
        raise ValueError("matrix JSON must be an object")
    missing = {"rows", "cols", "data"} - obj.keys()
    if missing:
        raise ValueError(f"matrix JSON missing keys: {sorted(missing)}")
    rows, cols = obj["rows"], obj["cols"]
    if not (isinstance(rows, int) and isinstance(cols, int)) or rows < 1 or cols < 1:
        raise ValueError("rows and cols must be positive integers")
    data = obj["data"]
    if not isinstance(data, list) or len(data) != rows * cols:
        raise ValueError(
            f"data must be a list of length rows*cols = {rows * cols}, "
            f"got {len(data) if isinstance(data, list) else type(data).__name__}"
        )
    entries = np.empty(rows * cols, dtype=np.complex128)
    for i, pair in enumerate(data):
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ValueError(f"data[{i}] must be a [re, im] pair")
        re, im = float(pair[0]), float(pair[1])
        if not (math.isfinite(re) and math.isfinite(im)):
            raise ValueError(f"data[{i}] is not finite")
        entries[i] = complex(re, im)
    return entries.reshape(rows, cols)


def load_matrix(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: malformed JSON ({exc})") from exc
    return matrix_from_dict(obj)


def save_matrix(m, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(matrix_to_dict(m), fh, indent=2)
        fh.write("\n")
