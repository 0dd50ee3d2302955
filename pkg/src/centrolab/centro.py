"""Centrosymmetric ensemble: entry classes, sampling, and the Weaver split.

A real square matrix is centrosymmetric when rotating its entry grid by
180 degrees leaves it unchanged: ``m[i, j] == m[n-1-i, n-1-j]``.  Matrices
here are built from one i.i.d. draw per reflection class, copied to both
cells of the class and scaled by ``1/sqrt(n)``, so an order-``n`` matrix
carries exactly ``ceil(n**2 / 2)`` independent random variables.

The Weaver split turns any such matrix, by an explicit orthogonal
similarity, into two independent diagonal blocks whose joint spectrum
equals the spectrum of the original matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError

__all__ = [
    "DISTRIBUTIONS",
    "CentroMatrix",
    "EntryClass",
    "WeaverBlocks",
    "assert_centrosymmetric",
    "class_count",
    "counter_identity",
    "entry_class",
    "sample_centro",
    "sample_centro_batch",
    "weaver_blocks",
    "weaver_orthogonal",
]

DISTRIBUTIONS = ("gaussian", "uniform")

_SQRT3 = math.sqrt(3.0)


def counter_identity(n: int) -> np.ndarray:
    """Exchange matrix J: ones on the anti-diagonal, zeros elsewhere.

    J is symmetric, orthogonal, and an involution (``J @ J == I``).
    """
    if n < 1:
        raise ValueError(f"matrix order must be positive, got {n}")
    return np.eye(n)[::-1].copy()


@dataclass(frozen=True)
class EntryClass:
    """Reflection class of a cell: the orbit ``{(i, j), (n-1-i, n-1-j)}``.

    ``rep`` is the lexicographic minimum of the orbit; ``self_paired`` is
    true only for the center cell of an odd-order matrix.
    """

    rep: tuple[int, int]
    self_paired: bool


def entry_class(n: int, i: int, j: int) -> EntryClass:
    """Canonical representative of the reflection class of cell (i, j)."""
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"cell ({i}, {j}) out of range for order {n}")
    ri, rj = n - 1 - i, n - 1 - j
    return EntryClass(rep=min((i, j), (ri, rj)), self_paired=(i, j) == (ri, rj))


def class_count(n: int) -> int:
    """Number of distinct reflection classes: ceil(n**2 / 2)."""
    return (n * n + 1) // 2


@dataclass(frozen=True)
class CentroMatrix:
    """A sampled centrosymmetric matrix with sampling provenance.

    ``entries`` is the dense order-``n`` array already scaled by
    ``1/sqrt(n)``; mirrored cells are bitwise-identical copies of one
    underlying draw.  Instances are immutable (the entry array is marked
    read-only) and safe to share across threads.
    """

    n: int
    entries: np.ndarray
    seed: int
    dist: str


def representative_mask(n: int) -> np.ndarray:
    """Boolean grid marking the lexicographic-minimum cell of each class."""
    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    ri = n - 1 - i
    rj = n - 1 - j
    return (i < ri) | ((i == ri) & (j <= rj))


def _draw(rng: np.random.Generator, dist: str, size) -> np.ndarray:
    if dist == "gaussian":
        return rng.standard_normal(size)
    if dist == "uniform":
        # uniform(-sqrt(3), sqrt(3)) has mean 0 and variance 1
        return rng.uniform(-_SQRT3, _SQRT3, size)
    raise ConfigError(
        f"unsupported entry distribution {dist!r}; expected one of {DISTRIBUTIONS}"
    )


def sample_centro(n: int, dist: str = "gaussian", seed: int = 0) -> CentroMatrix:
    """Draw one matrix: one variate per entry class, mirrored, scaled by 1/sqrt(n).

    Class draws are consumed in row-major order of the representative
    cells, so a fixed ``(n, dist, seed)`` reproduces the same matrix on
    any platform.  Mirrored cells are plain copies, hence bitwise equal.
    """
    if n < 1:
        raise ValueError(f"matrix order must be positive, got {n}")
    if dist not in DISTRIBUTIONS:
        raise ConfigError(
            f"unsupported entry distribution {dist!r}; expected one of {DISTRIBUTIONS}"
        )
    rng = np.random.Generator(np.random.PCG64(seed))
    mask = representative_mask(n)
    raw = np.zeros((n, n))
    raw[mask] = _draw(rng, dist, int(mask.sum()))
    reflected = raw[::-1, ::-1]
    raw[~mask] = reflected[~mask]
    entries = raw / math.sqrt(n)
    entries.flags.writeable = False
    return CentroMatrix(n=n, entries=entries, seed=seed, dist=dist)


def sample_centro_batch(
    n: int, trials: int, dist: str = "gaussian", seed: int = 0
) -> np.ndarray:
    """Stack of ``trials`` independent draws as a ``(trials, n, n)`` array.

    Bulk variant for small-order Monte Carlo loops: a single generator
    serves the whole batch, so the result is deterministic in
    ``(n, trials, dist, seed)`` but unrelated to per-trial-seeded draws.
    """
    if n < 1:
        raise ValueError(f"matrix order must be positive, got {n}")
    if trials < 1:
        raise ValueError(f"trial count must be positive, got {trials}")
    rng = np.random.Generator(np.random.PCG64(seed))
    mask = representative_mask(n)
    raw = np.zeros((trials, n, n))
    raw[:, mask] = _draw(rng, dist, (trials, int(mask.sum())))
    reflected = raw[:, ::-1, ::-1]
    raw[:, ~mask] = reflected[:, ~mask]
    return raw / math.sqrt(n)


def assert_centrosymmetric(mat: np.ndarray | CentroMatrix, tol: float = 0.0) -> bool:
    """True iff ``max |m[i,j] - m[n-1-i,n-1-j]| <= tol``."""
    a = mat.entries if isinstance(mat, CentroMatrix) else np.asarray(mat, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if tol < 0:
        raise ValueError(f"tolerance must be nonnegative, got {tol}")
    return bool(np.max(np.abs(a - a[::-1, ::-1])) <= tol)


@dataclass(frozen=True)
class WeaverBlocks:
    """Orthogonal-similarity halves of a centrosymmetric matrix.

    ``diag(plus, minus)`` has the same eigenvalue multiset as the source
    matrix.  ``plus`` has order ``ceil(n/2)`` (bordered by an extra row
    and column when n is odd), ``minus`` has order ``floor(n/2)``.
    """

    plus: np.ndarray
    minus: np.ndarray


def weaver_blocks(m: CentroMatrix | np.ndarray) -> WeaverBlocks:
    """Split a centrosymmetric matrix into its two similarity blocks.

    Even n = 2m, with M = [[A, B], [C, D]] in m-by-m blocks:
    ``plus = A + J C`` and ``minus = A - J C``.

    Odd n = 2m + 1, with center column top-half u, center row left-half
    p^T and center cell q:
    ``plus = [[A + J C, sqrt(2) u], [sqrt(2) p^T, q]]``, ``minus = A - J C``.
    """
    a = m.entries if isinstance(m, CentroMatrix) else np.asarray(m, dtype=float)
    n = a.shape[0]
    h = n // 2
    A = a[:h, :h]
    C = a[n - h :, :h]
    jc = C[::-1, :]  # J @ C reverses the rows of C
    minus = A - jc
    if n % 2 == 0:
        return WeaverBlocks(plus=A + jc, minus=minus)
    plus = np.zeros((h + 1, h + 1))
    plus[:h, :h] = A + jc
    plus[:h, h] = math.sqrt(2.0) * a[:h, h]
    plus[h, :h] = math.sqrt(2.0) * a[h, :h]
    plus[h, h] = a[h, h]
    return WeaverBlocks(plus=plus, minus=minus)


def weaver_orthogonal(n: int) -> np.ndarray:
    """Explicit orthogonal Q with ``Q.T @ M @ Q == diag(plus, minus)``.

    Columns: ``(1/sqrt(2)) [I; 0; J]`` spanning the even part, the center
    basis vector for odd n, then ``(1/sqrt(2)) [I; 0; -J]``.
    """
    if n < 1:
        raise ValueError(f"matrix order must be positive, got {n}")
    h = n // 2
    s = 1.0 / math.sqrt(2.0)
    eye = np.eye(h)
    rev = eye[::-1]
    q = np.zeros((n, n))
    q[:h, :h] = s * eye
    q[n - h :, :h] = s * rev
    q[:h, n - h :] = s * eye
    q[n - h :, n - h :] = -s * rev
    if n % 2 == 1:
        q[h, h] = 1.0
    return q
