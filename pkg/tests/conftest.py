"""Shared hypothesis strategies for diagram-valued tests."""

from hypothesis import strategies as st

from atomforge.diagram import NEGATIVE, POSITIVE, ChordDiagram


@st.composite
def diagrams(draw, max_k: int = 9, min_k: int = 1):
    """A random valid chord diagram with k between min_k and max_k."""
    k = draw(st.integers(min_k, max_k))
    perm = draw(st.permutations(list(range(1, k + 1))))
    n = draw(st.integers(0, k // 2))
    chords = [(perm[2 * i], perm[2 * i + 1]) for i in range(n)]
    base = draw(st.sampled_from([POSITIVE, NEGATIVE]))
    return ChordDiagram(k, chords, base)
