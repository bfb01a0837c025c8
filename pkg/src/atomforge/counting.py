"""Exact counting of atoms without enumeration.

The number N_k of atoms with k+1 matched points (equivalently, of gluing
substitutions on {1..k}) satisfies N_k = N_{k-1} + (k-1) * N_{k-2} with
N_1 = 1, N_2 = 2: the smallest point is either free or paired with one of
the other k-1 points.  The same quantity has a closed form through the
auxiliary P-table, N_k = 2 * sum(P_0..P_{k-3}) + P_{k-2} for k >= 3.

Everything here is exact big-integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PTable:
    """Auxiliary coefficients P_0..P_{k-2} for one value of k."""

    k: int
    values: tuple[int, ...]


def build_ptable(k: int) -> PTable:
    """P_0 = 1, P_1 = k-1, P_2 = k-2, P_j = (P_0+...+P_{j-2}) * (k-j)."""
    if k < 2:
        raise ValueError(f"P-table needs k >= 2, got {k}")
    values = [1, k - 1, k - 2][: k - 1]
    prefix = values[0]  # running P_0 + ... + P_{j-2}
    for j in range(3, k - 1):
        prefix += values[j - 2]
        values.append(prefix * (k - j))
    return PTable(k, tuple(values))


def count_atoms_recurrence(k: int) -> int:
    """N_k via the two-term recurrence."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    prev2, prev1 = 1, 2  # N_1, N_2
    if k == 1:
        return prev2
    for m in range(3, k + 1):
        prev2, prev1 = prev1, prev1 + (m - 1) * prev2
    return prev1


def count_atoms_pformula(k: int) -> int:
    """N_k via the P-table summation; agrees with the recurrence for all k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k == 1:
        return 1
    if k == 2:
        return 2
    p = build_ptable(k).values
    return 2 * sum(p[: k - 2]) + p[k - 2]


def free_point_count(k: int, n_chords: int) -> int:
    """Free matched points of a diagram: k - 2 * n_chords + 1 (always >= 1)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n_chords < 0 or 2 * n_chords > k:
        raise ValueError(f"n_chords={n_chords} impossible for k={k}")
    return k - 2 * n_chords + 1
