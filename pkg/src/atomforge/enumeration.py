"""Exhaustive, deterministic generation of chord diagrams.

Generation order contract (stable; golden files depend on it): at every step
the smallest still-undecided point is settled first, the "free" branch before
the paired branches, and partners iterate ascending.  Two runs therefore emit
identical sequences, and the search space can be partitioned by the choice
made for point 1 (see :func:`first_point_choices`) with a deterministic merge.
"""

from __future__ import annotations

from typing import Iterator

from .diagram import NEGATIVE, POSITIVE, ChordDiagram

Pairing = tuple[tuple[int, int], ...]


def _pairings(
    points: tuple[int, ...], chosen: Pairing, n_chords: int | None
) -> Iterator[Pairing]:
    if n_chords is not None:
        if len(chosen) > n_chords or len(chosen) + len(points) // 2 < n_chords:
            return
    if not points:
        if n_chords is None or len(chosen) == n_chords:
            yield chosen
        return
    p, rest = points[0], points[1:]
    yield from _pairings(rest, chosen, n_chords)  # p stays free
    for idx, q in enumerate(rest):
        yield from _pairings(rest[:idx] + rest[idx + 1 :], chosen + ((p, q),), n_chords)


def enumerate_diagrams(
    k: int,
    n_chords: int | None = None,
    *,
    both_colors: bool = False,
) -> Iterator[ChordDiagram]:
    """Every partial pairing of {1..k}, each exactly once, lazily.

    With ``n_chords`` set, only pairings with exactly that many chords are
    emitted.  Base color is positive unless ``both_colors`` is requested, in
    which case each pairing is emitted twice (positive first).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n_chords is not None and (n_chords < 0 or 2 * n_chords > k):
        raise ValueError(f"n_chords={n_chords} impossible for k={k}")
    for chords in _pairings(tuple(range(1, k + 1)), (), n_chords):
        yield ChordDiagram(k, chords, POSITIVE)
        if both_colors:
            yield ChordDiagram(k, chords, NEGATIVE)


def first_point_choices(k: int) -> tuple[int | None, ...]:
    """Independent search-space partitions: point 1 free, or paired with j."""
    return (None,) + tuple(range(2, k + 1))


def enumerate_partition(
    k: int, first: int | None, n_chords: int | None = None
) -> Iterator[ChordDiagram]:
    """The sub-stream of :func:`enumerate_diagrams` for one point-1 choice."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    points = tuple(range(2, k + 1))
    if first is None:
        chosen: Pairing = ()
    else:
        if first < 2 or first > k:
            raise ValueError(f"partner {first} out of range 2..{k}")
        points = tuple(p for p in points if p != first)
        chosen = ((1, first),)
    for chords in _pairings(points, chosen, n_chords):
        yield ChordDiagram(k, chords, POSITIVE)


def enumerate_optimal_candidates(
    genus: int, orientable: bool
) -> Iterator[ChordDiagram]:
    """Diagrams with the right profile for an optimal function, prefiltered.

    Orientable: k = 4g+1 with 2g chords, cheap syntactic screens applied
    (chord parity, odd free point, no forbidden pair).  Non-orientable
    generator profile: k = 4g+3 with 2g+1 chords; the parity screens are
    relaxed because twisted bands require same-parity chords.
    """
    # deferred import: module classify consumes this module
    from .classify import (
        chord_parity_ok,
        forbidden_pair_present,
        free_points_odd_ok,
    )

    if genus < 1:
        raise ValueError(f"genus must be >= 1, got {genus}")
    if orientable:
        k, n_chords = 4 * genus + 1, 2 * genus
    else:
        k, n_chords = 4 * genus + 3, 2 * genus + 1
    for d in enumerate_diagrams(k, n_chords):
        if orientable:
            if not chord_parity_ok(d):
                continue
            if not free_points_odd_ok(d):
                continue
        if forbidden_pair_present(d):
            continue
        yield d
