"""Exact Gaussian chain expectations by exhaustive index enumeration.

For standard-normal entries the expectation of a product of matrix
entries factorizes over reflection classes into double-factorial
moments, so ``E[Tr M^k]`` and ``E[Tr M^k Tr M^l]`` can be evaluated
exactly at small order by walking every index chain.  These exact
values are the ground truth against which both the Monte Carlo
estimates and the asymptotic constants (2, 4, 2k, 2k+4) are checked.

Enumeration runs over disjoint blocks of index tuples; each block is
reduced with numpy's pairwise summation and blocks are combined with
compensated (Kahan) accumulation, so the total is independent of the
partitioning even at ``10**8`` terms.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError

__all__ = [
    "DEFAULT_TERM_BUDGET",
    "ChainExpectation",
    "convergence_table",
    "gaussian_moment",
    "oracle_double_chain",
    "oracle_single_chain",
]

DEFAULT_TERM_BUDGET = 10**8
_BLOCK = 1 << 16  # index tuples per vectorized block


def gaussian_moment(m: int) -> float:
    """E[x^m] for standard normal x: (m-1)!! for even m, 0 for odd m."""
    if m < 0:
        raise ValueError(f"moment order must be nonnegative, got {m}")
    if m % 2 == 1:
        return 0.0
    out = 1.0
    for j in range(m - 1, 1, -2):
        out *= j
    return out


@dataclass(frozen=True)
class ChainExpectation:
    """Exact expectation of a single or double index-chain product.

    ``value`` includes the ``1 / n**((k+l)/2)`` normalization; ``l`` is
    None for single chains.  ``terms_enumerated`` is ``n**k`` or
    ``n**(k+l)``.
    """

    n: int
    k: int
    l: int | None
    value: float
    terms_enumerated: int


class _Kahan:
    """Compensated accumulator for combining per-block partial sums."""

    def __init__(self) -> None:
        self.total = 0.0
        self.carry = 0.0

    def add(self, value: float) -> None:
        value += self.carry
        new_total = self.total + value
        self.carry = value - (new_total - self.total)
        self.total = new_total


def _digit_rows(start: int, stop: int, n: int, width: int) -> np.ndarray:
    """Decode linear ids [start, stop) into base-n digit rows (odometer order)."""
    ids = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((ids.size, width), dtype=np.int64)
    for c in range(width - 1, -1, -1):
        ids, digits[:, c] = np.divmod(ids, n)
    return digits


def _class_ids(i: np.ndarray, j: np.ndarray, n: int) -> np.ndarray:
    """Linearized reflection-class id for each visited cell."""
    a = i * n + j
    b = (n - 1 - i) * n + (n - 1 - j)
    return np.minimum(a, b)


def _block_sum(digits: np.ndarray, lengths: tuple[int, ...], n: int) -> float:
    """Sum of per-row Wick products for one block of index tuples.

    Each row of ``digits`` holds the concatenated indices of the chains
    in ``lengths``; a chain of length L visits cells
    (i_1, i_2), ..., (i_L, i_1).  A row contributes the product over its
    distinct classes of the centered Gaussian moment of the class
    multiplicity: ``prod (m_c - 1)!!`` if every multiplicity is even,
    else zero.
    """
    i_cols = []
    j_cols = []
    off = 0
    for length in lengths:
        seg = digits[:, off : off + length]
        i_cols.append(seg)
        j_cols.append(np.roll(seg, -1, axis=1))
        off += length
    cls = _class_ids(np.concatenate(i_cols, axis=1), np.concatenate(j_cols, axis=1), n)

    s = np.sort(cls, axis=1)
    rows, width = s.shape
    term = np.ones(rows)
    run = np.ones(rows, dtype=np.int64)
    dead = np.zeros(rows, dtype=bool)
    for t in range(1, width):
        cont = s[:, t] == s[:, t - 1]
        dead |= ~cont & (run % 2 == 1)
        run = np.where(cont, run + 1, 1)
        # the p-th element of a run contributes (p - 1) for even p:
        # accumulated over a run of even length m this is (m - 1)!!
        term *= np.where(run % 2 == 0, (run - 1).astype(float), 1.0)
    dead |= run % 2 == 1
    term[dead] = 0.0
    return float(np.sum(term))


def _enumerate(n: int, lengths: tuple[int, ...], terms: int) -> float:
    acc = _Kahan()
    width = sum(lengths)
    for start in range(0, terms, _BLOCK):
        stop = min(start + _BLOCK, terms)
        acc.add(_block_sum(_digit_rows(start, stop, n, width), lengths, n))
    return acc.total


def _check_budget(n: int, powers: tuple[int, ...], budget: int) -> int:
    terms = 1
    for p in powers:
        terms *= n**p
    if terms > budget:
        label = ", ".join(f"k={p}" for p in powers)
        raise BudgetExceededError(
            f"enumeration for n={n}, {label} needs {terms} terms, "
            f"exceeding the budget of {budget}"
        )
    return terms


def oracle_single_chain(
    n: int, k: int, budget: int = DEFAULT_TERM_BUDGET
) -> ChainExpectation:
    """Exact ``E[Tr M^k]`` for Gaussian entries at order n.

    Walks all ``n**k`` index chains, tallies reflection-class
    multiplicities per chain, and sums the Wick products, normalized by
    ``n**(k/2)``.  Exactly zero for odd k at every n (each chain then
    has some odd-multiplicity class).
    """
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    terms = _check_budget(n, (k,), budget)
    value = _enumerate(n, (k,), terms) / float(n) ** (k / 2)
    return ChainExpectation(n=n, k=k, l=None, value=value, terms_enumerated=terms)


def oracle_double_chain(
    n: int, k: int, l: int, budget: int = DEFAULT_TERM_BUDGET
) -> ChainExpectation:
    """Exact ``E[Tr M^k  Tr M^l]`` for Gaussian entries at order n.

    Same Wick evaluation over joint chains of ``n**(k+l)`` index tuples,
    normalized by ``n**((k+l)/2)``.
    """
    if n < 1 or k < 1 or l < 1:
        raise ValueError(f"need n, k, l >= 1, got n={n}, k={k}, l={l}")
    terms = _check_budget(n, (k, l), budget)
    value = _enumerate(n, (k, l), terms) / float(n) ** ((k + l) / 2)
    return ChainExpectation(n=n, k=k, l=l, value=value, terms_enumerated=terms)


def convergence_table(
    k_list,
    l_list,
    n_list,
    budget: int = DEFAULT_TERM_BUDGET,
) -> list[ChainExpectation]:
    """Exact values on a (n, k[, l]) grid for trend inspection.

    For every n: one single-chain row per k in ``k_list``, then one
    double-chain row per (k, l) in ``k_list x l_list``.  Rows are
    ordered n-major so gaps against the asymptotic constants can be read
    down a column.
    """
    rows: list[ChainExpectation] = []
    for n in n_list:
        for k in k_list:
            rows.append(oracle_single_chain(n, k, budget))
        for k in k_list:
            for l in l_list:
                rows.append(oracle_double_chain(n, k, l, budget))
    return rows
