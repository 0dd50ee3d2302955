"""Dense nonsymmetric eigensolver and trace-power evaluation.

Eigenvalues come from the classical dense pipeline: diagonal balancing,
Householder reduction to Hessenberg form, then implicit double-shift
(Francis) QR with deflation.  Complex conjugate pairs emerge from real
2x2 blocks, so the iteration itself never touches complex arithmetic.

``trace_power`` deliberately avoids the eigensolver (repeated matrix
multiplication with a running trace), giving a second, independent path
to spectral sums for cross-checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .centro import CentroMatrix

__all__ = [
    "Spectrum",
    "balance",
    "eigenvalues",
    "hessenberg",
    "spectral_radial_cdf",
    "trace_power",
    "trace_powers",
    "trace_powers_batch",
]

_EPS = np.finfo(float).eps
_DEFLATE = 8.0 * _EPS  # subdiagonal negligibility threshold
_EXCEPTIONAL_EVERY = 10  # stalled sweeps between ad-hoc shifts


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset plus solver diagnostics.

    ``values`` holds all n eigenvalues (complex entries in conjugate
    pairs); ``iterations`` counts QR sweeps; ``converged`` is False only
    when some block failed to deflate within the sweep budget, in which
    case ``values`` still has length n but carries best-effort entries
    for the unconverged window.
    """

    values: np.ndarray
    iterations: int
    converged: bool


def _as_array(mat) -> np.ndarray:
    a = mat.entries if isinstance(mat, CentroMatrix) else np.asarray(mat, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def balance(mat) -> np.ndarray:
    """Diagonal similarity scaling (powers of 2) equalizing row/column norms.

    Scaling by exact powers of the radix is lossless in floating point
    and never touches the diagonal, so trace and spectrum are preserved
    bitwise.
    """
    a = np.array(_as_array(mat), dtype=float)
    n = a.shape[0]
    radix = 2.0
    done = False
    while not done:
        done = True
        for i in range(n):
            r = float(np.sum(np.abs(a[i, :]))) - abs(a[i, i])
            c = float(np.sum(np.abs(a[:, i]))) - abs(a[i, i])
            if r == 0.0 or c == 0.0:
                continue
            s = c + r
            f = 1.0
            while c < r / radix:
                c *= radix
                r /= radix
                f *= radix
            while c >= r * radix:
                c /= radix
                r *= radix
                f /= radix
            if c + r < 0.95 * s:
                a[i, :] /= f
                a[:, i] *= f
                done = False
    return a


def hessenberg(mat) -> np.ndarray:
    """Reduce to upper Hessenberg form by Householder orthogonal similarity."""
    h = np.array(_as_array(mat), dtype=float)
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1 :, k]
        alpha = float(np.linalg.norm(x))
        if alpha == 0.0:
            continue
        if x[0] > 0:
            alpha = -alpha
        v = x.copy()
        v[0] -= alpha
        vnorm2 = float(v @ v)
        if vnorm2 == 0.0:
            continue
        w = 2.0 / vnorm2
        h[k + 1 :, k:] -= np.outer(w * v, v @ h[k + 1 :, k:])
        h[:, k + 1 :] -= np.outer(h[:, k + 1 :] @ v, w * v)
        h[k + 2 :, k] = 0.0
        h[k + 1, k] = alpha
    return h


def _eig2x2(a: float, b: float, c: float, d: float) -> tuple[complex, complex]:
    """Eigenvalues of [[a, b], [c, d]], exact conjugates when complex."""
    half = 0.5 * (a + d)
    det = a * d - b * c
    disc = half * half - det
    if disc >= 0.0:
        root = math.sqrt(disc)
        lead = half + root if half >= 0.0 else half - root
        other = det / lead if lead != 0.0 else 0.0
        return complex(lead), complex(other)
    root = math.sqrt(-disc)
    return complex(half, root), complex(half, -root)


def _reflector(col: np.ndarray) -> np.ndarray | None:
    """Small Householder matrix mapping ``col`` onto +/- e1, or None if trivial."""
    scale = float(np.max(np.abs(col)))
    if scale == 0.0:
        return None
    v = col / scale
    alpha = float(np.linalg.norm(v))
    if v[0] > 0:
        alpha = -alpha
    v = v.copy()
    v[0] -= alpha
    vnorm2 = float(v @ v)
    if vnorm2 == 0.0:
        return None
    return np.eye(col.size) - np.outer((2.0 / vnorm2) * v, v)


def _peel_blocks(h: np.ndarray, hi: int, values: np.ndarray) -> None:
    """Fill values[0..hi] from the current 1x1/2x2 diagonal blocks as-is."""
    i = hi
    while i >= 0:
        if i == 0 or h[i, i - 1] == 0.0:
            values[i] = h[i, i]
            i -= 1
        else:
            values[i - 1], values[i] = _eig2x2(
                h[i - 1, i - 1], h[i - 1, i], h[i, i - 1], h[i, i]
            )
            i -= 2


def eigenvalues(mat, max_sweeps: int | None = None) -> Spectrum:
    """Full eigenvalue multiset of a real square matrix.

    Pipeline: ``balance`` -> ``hessenberg`` -> implicit double-shift QR
    with deflation.  A subdiagonal entry h[i+1, i] is treated as zero
    when ``|h[i+1, i]| <= 8*eps*(|h[i, i]| + |h[i+1, i+1]|)``; an ad-hoc
    exceptional shift is used every 10 stalled sweeps.  ``max_sweeps``
    caps the total sweep count (default ``30 * n``); on exhaustion the
    result is flagged ``converged=False`` with best-effort values.
    """
    a = _as_array(mat)
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    n = a.shape[0]
    if max_sweeps is None:
        max_sweeps = 30 * n
    values = np.empty(n, dtype=complex)
    if n == 1:
        values[0] = a[0, 0]
        return Spectrum(values=values, iterations=0, converged=True)
    h = hessenberg(balance(a))

    hi = n - 1
    sweeps = 0
    stall = 0
    converged = True
    while hi >= 0:
        # search upward for a negligible subdiagonal bounding the active block
        lo = hi
        while lo > 0:
            s = abs(h[lo - 1, lo - 1]) + abs(h[lo, lo])
            if abs(h[lo, lo - 1]) <= _DEFLATE * s:
                h[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            values[hi] = h[hi, hi]
            hi -= 1
            stall = 0
            continue
        if lo == hi - 1:
            values[hi - 1], values[hi] = _eig2x2(
                h[hi - 1, hi - 1], h[hi - 1, hi], h[hi, hi - 1], h[hi, hi]
            )
            hi -= 2
            stall = 0
            continue
        if sweeps >= max_sweeps:
            converged = False
            _peel_blocks(h, hi, values)
            break

        sweeps += 1
        stall += 1
        if stall % _EXCEPTIONAL_EVERY == 0:
            # ad-hoc shift built from the stalled subdiagonal magnitudes
            mag = abs(h[hi, hi - 1]) + abs(h[hi - 1, hi - 2])
            shift_sum = 1.5 * mag
            shift_prod = -0.4375 * mag * mag
        else:
            shift_sum = h[hi - 1, hi - 1] + h[hi, hi]
            shift_prod = (
                h[hi - 1, hi - 1] * h[hi, hi] - h[hi - 1, hi] * h[hi, hi - 1]
            )

        # first column of (H - l1 I)(H - l2 I) restricted to the window
        x = (
            h[lo, lo] * h[lo, lo]
            + h[lo, lo + 1] * h[lo + 1, lo]
            - shift_sum * h[lo, lo]
            + shift_prod
        )
        y = h[lo + 1, lo] * (h[lo, lo] + h[lo + 1, lo + 1] - shift_sum)
        z = h[lo + 1, lo] * h[lo + 2, lo + 1]

        for k in range(lo, hi - 1):
            p = _reflector(np.array([x, y, z]))
            if p is not None:
                r0 = max(lo, k - 1)
                h[k : k + 3, r0 : hi + 1] = p @ h[k : k + 3, r0 : hi + 1]
                r1 = min(k + 4, hi + 1)
                h[lo:r1, k : k + 3] = h[lo:r1, k : k + 3] @ p
            x = h[k + 1, k]
            y = h[k + 2, k]
            z = h[k + 3, k] if k < hi - 2 else 0.0
        p = _reflector(np.array([x, y]))
        if p is not None:
            k = hi - 1
            h[k : k + 2, k - 1 : hi + 1] = p @ h[k : k + 2, k - 1 : hi + 1]
            h[lo : hi + 1, k : k + 2] = h[lo : hi + 1, k : k + 2] @ p

    return Spectrum(values=values, iterations=sweeps, converged=converged)


def trace_power(mat, k: int) -> float:
    """Trace of the k-th matrix power by repeated multiplication.

    No eigensolver involvement: this is the independent measurement path
    for spectral power sums.
    """
    if k < 1:
        raise ValueError(f"power must be positive, got {k}")
    a = _as_array(mat)
    p = a
    for _ in range(k - 1):
        p = p @ a
    return float(np.trace(p))


def trace_powers(mat, k_max: int) -> np.ndarray:
    """Traces of M^1 .. M^k_max from one running product (one matmul each)."""
    if k_max < 1:
        raise ValueError(f"power must be positive, got {k_max}")
    a = _as_array(mat)
    out = np.empty(k_max)
    p = a
    out[0] = np.trace(p)
    for k in range(1, k_max):
        p = p @ a
        out[k] = np.trace(p)
    return out


def trace_powers_batch(stack: np.ndarray, k_max: int) -> np.ndarray:
    """Traces of M^1 .. M^k_max for a ``(trials, n, n)`` stack of matrices.

    Vectorized over trials; intended for small orders where holding the
    whole stack is cheap.  Returns shape ``(trials, k_max)``.
    """
    if k_max < 1:
        raise ValueError(f"power must be positive, got {k_max}")
    a = np.asarray(stack, dtype=float)
    if a.ndim != 3 or a.shape[1] != a.shape[2]:
        raise ValueError(f"expected a (trials, n, n) stack, got shape {a.shape}")
    out = np.empty((a.shape[0], k_max))
    p = a
    out[:, 0] = np.einsum("tii->t", p)
    for k in range(1, k_max):
        p = p @ a
        out[:, k] = np.einsum("tii->t", p)
    return out


def spectral_radial_cdf(spec: Spectrum, grid) -> np.ndarray:
    """Fraction of eigenvalues with ``|lambda| <= r`` for each grid radius."""
    g = np.asarray(grid, dtype=float)
    if g.ndim != 1 or g.size == 0:
        raise ValueError("radius grid must be a nonempty 1-d sequence")
    if np.any(g < 0) or np.any(np.diff(g) < 0):
        raise ValueError("radius grid must be sorted ascending and nonnegative")
    radii = np.sort(np.abs(spec.values))
    return np.searchsorted(radii, g, side="right") / radii.size
