"""File formats: matrix/spectrum/table/histogram CSV and report JSON.

All numeric text uses 17 significant digits so doubles round-trip
exactly and repeated runs produce byte-identical files.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .centro import CentroMatrix
from .eig import Spectrum
from .oracle import ChainExpectation

__all__ = [
    "fmt",
    "read_matrix_csv",
    "write_chain_table_csv",
    "write_histogram_csv",
    "write_json",
    "write_matrix_csv",
    "write_spectrum_csv",
]


def fmt(value: float) -> str:
    """17-significant-digit decimal text (round-trip exact for doubles)."""
    return format(float(value), ".17g")


def write_matrix_csv(path, mat: CentroMatrix | np.ndarray) -> Path:
    """Matrix CSV: first line ``n=<int>``, then n rows of n comma-separated values."""
    a = mat.entries if isinstance(mat, CentroMatrix) else np.asarray(mat, dtype=float)
    path = Path(path)
    lines = [f"n={a.shape[0]}"]
    lines.extend(",".join(fmt(v) for v in row) for row in a)
    path.write_text("\n".join(lines) + "\n")
    return path


def read_matrix_csv(path) -> np.ndarray:
    """Parse a matrix CSV written by ``write_matrix_csv``."""
    lines = Path(path).read_text().strip().splitlines()
    header = lines[0].strip()
    if not header.startswith("n="):
        raise ValueError(f"matrix CSV must start with 'n=<int>', got {header!r}")
    n = int(header[2:])
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} rows after the header, got {len(lines) - 1}")
    rows = [[float(v) for v in line.split(",")] for line in lines[1:]]
    a = np.array(rows, dtype=float)
    if a.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} matrix, got shape {a.shape}")
    return a


def write_spectrum_csv(path, spec: Spectrum) -> Path:
    """Spectrum CSV: header ``re,im`` then one row per eigenvalue."""
    path = Path(path)
    lines = ["re,im"]
    lines.extend(f"{fmt(v.real)},{fmt(v.imag)}" for v in spec.values)
    path.write_text("\n".join(lines) + "\n")
    return path


def write_chain_table_csv(path, rows: list[ChainExpectation]) -> Path:
    """Chain-expectation CSV: header ``n,k,l,value,terms``; l empty for singles."""
    path = Path(path)
    lines = ["n,k,l,value,terms"]
    for r in rows:
        l_text = "" if r.l is None else str(r.l)
        lines.append(f"{r.n},{r.k},{l_text},{fmt(r.value)},{r.terms_enumerated}")
    path.write_text("\n".join(lines) + "\n")
    return path


def write_histogram_csv(path, samples) -> Path:
    """Histogram CSV with Freedman-Diaconis bins: ``bin_left,bin_right,count``."""
    x = np.asarray(samples, dtype=float)
    edges = np.histogram_bin_edges(x, bins="fd")
    counts, edges = np.histogram(x, bins=edges)
    path = Path(path)
    lines = ["bin_left,bin_right,count"]
    lines.extend(
        f"{fmt(edges[i])},{fmt(edges[i + 1])},{counts[i]}" for i in range(counts.size)
    )
    path.write_text("\n".join(lines) + "\n")
    return path


def write_json(path, payload: dict) -> Path:
    """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
    path = Path(path)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return path
