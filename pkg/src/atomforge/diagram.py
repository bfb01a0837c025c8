"""Chord diagrams of saddle critical levels.

A diagram is a circle with k+1 enumerated matched points Q_0..Q_k, a set of
chords pairing some of the points 1..k (Q_0 is always free: it marks the
critical point itself), and an alternating two-coloring of the k+1 arcs that
is determined by the color of the arc from Q_0 to Q_1.  For even k the
coloring necessarily has a single defect at Q_0 (two same-colored arcs meet
there); for odd k the alternation is proper everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

#: Largest supported point index; keeps point sets bitmask-friendly and is
#: far above any enumeration horizon.
MAX_K = 62

POSITIVE = 1
NEGATIVE = -1

_COLOR_NAMES = {POSITIVE: "pos", NEGATIVE: "neg"}
_COLOR_VALUES = {"pos": POSITIVE, "neg": NEGATIVE}


class DiagramError(ValueError):
    """Base class for malformed diagram input."""


class DiagramSyntaxError(DiagramError):
    """Text does not match the diagram grammar; carries the failing offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DiagramSemanticError(DiagramError):
    """Grammatically valid text describing an impossible diagram."""


def _normalize_chords(chords: Iterable) -> tuple[tuple[int, int], ...]:
    out = []
    for pair in chords:
        a, b = pair
        out.append((a, b) if a <= b else (b, a))
    out.sort()
    return tuple(out)


@dataclass(frozen=True)
class ChordDiagram:
    """Immutable chord diagram with k+1 matched points.

    ``chords`` is stored normalized: each pair ascending, pairs sorted
    lexicographically, so equal diagrams have equal encodings.
    """

    k: int
    chords: tuple[tuple[int, int], ...] = ()
    base_color: int = POSITIVE

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise DiagramSemanticError(f"k must be a positive integer, got {self.k!r}")
        if self.k > MAX_K:
            raise DiagramSemanticError(f"k={self.k} exceeds supported maximum {MAX_K}")
        if self.base_color not in (POSITIVE, NEGATIVE):
            raise DiagramSemanticError(f"base_color must be +1 or -1, got {self.base_color!r}")
        object.__setattr__(self, "chords", _normalize_chords(self.chords))
        seen: set[int] = set()
        for a, b in self.chords:
            for p in (a, b):
                if not isinstance(p, int) or p < 1 or p > self.k:
                    raise DiagramSemanticError(
                        f"chord point {p} out of range 1..{self.k}"
                    )
            if a == b:
                raise DiagramSemanticError(f"chord {a}-{b} has equal endpoints")
            if a in seen or b in seen:
                raise DiagramSemanticError(f"point reused by chord {a}-{b}")
            seen.add(a)
            seen.add(b)
        # Lemma-style sanity check: free points = k - 2*chords + 1.
        assert len(self.free_points()) == self.k - 2 * len(self.chords) + 1

    def free_points(self) -> tuple[int, ...]:
        """All point indices in 0..k not covered by a chord, ascending."""
        used = {p for pair in self.chords for p in pair}
        return tuple(i for i in range(self.k + 1) if i not in used)

    def arc_coloring(self) -> tuple[int, ...]:
        """Signs of the k+1 arcs; arc j runs from Q_j to Q_{j+1 mod k+1}.

        Alternates starting from ``base_color`` at arc 0.  For even k arcs 0
        and k carry the same sign: the single defect, located at Q_0.
        """
        return tuple(
            self.base_color * (1 if j % 2 == 0 else -1) for j in range(self.k + 1)
        )

    def has_coloring_defect(self) -> bool:
        colors = self.arc_coloring()
        return colors[0] == colors[-1]

    def with_base_color(self, color: int) -> "ChordDiagram":
        return ChordDiagram(self.k, self.chords, color)

    def partner(self, point: int) -> int | None:
        """The chord partner of ``point``, or None if the point is free."""
        for a, b in self.chords:
            if a == point:
                return b
            if b == point:
                return a
        return None

    def substitution(self) -> "GluingSubstitution":
        return GluingSubstitution(self.k, self.chords)


@dataclass(frozen=True)
class GluingSubstitution:
    """Involutive partial pairing on {1..k}: the 2-cycles glue polygon sides."""

    k: int
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        # Reuse the chord validation; a substitution is the same pairing data.
        ChordDiagram(self.k, self.pairs)
        object.__setattr__(self, "pairs", _normalize_chords(self.pairs))

    def mapping(self) -> dict[int, int]:
        """The substitution as a point map; fixed points are omitted."""
        m: dict[int, int] = {}
        for a, b in self.pairs:
            m[a] = b
            m[b] = a
        return m

    def to_diagram(self, base_color: int = POSITIVE) -> ChordDiagram:
        return ChordDiagram(self.k, self.pairs, base_color)

    @classmethod
    def from_diagram(cls, diagram: ChordDiagram) -> "GluingSubstitution":
        return cls(diagram.k, diagram.chords)


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def expect(self, literal: str):
        if not self.text.startswith(literal, self.pos):
            raise DiagramSyntaxError(f"expected {literal!r}", self.pos)
        self.pos += len(literal)

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise DiagramSyntaxError("expected an integer", start)
        return int(self.text[start : self.pos])

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def done(self):
        if self.pos != len(self.text):
            raise DiagramSyntaxError("trailing input", self.pos)


def parse_diagram(text: str) -> ChordDiagram:
    """Parse ``k=<int>;chords=<i>-<j>(,<i>-<j>)*;base=<pos|neg>``.

    The chord list may be empty (``chords=``).  Chord pairs are validated as
    they are read, so semantic errors (duplicate point, index out of range)
    are reported even if the rest of the text is truncated.
    """
    cur = _Cursor(text)
    cur.expect("k=")
    k = cur.integer()
    if k < 1 or k > MAX_K:
        raise DiagramSemanticError(f"k={k} out of range 1..{MAX_K}")
    cur.expect(";chords=")
    chords: list[tuple[int, int]] = []
    used: set[int] = set()
    if cur.peek().isdigit():
        while True:
            a = cur.integer()
            cur.expect("-")
            b = cur.integer()
            for p in (a, b):
                if p < 1 or p > k:
                    raise DiagramSemanticError(f"chord point {p} out of range 1..{k}")
            if a == b:
                raise DiagramSemanticError(f"chord {a}-{b} has equal endpoints")
            if a in used or b in used:
                raise DiagramSemanticError(f"point reused by chord {a}-{b}")
            used.add(a)
            used.add(b)
            chords.append((a, b))
            if cur.peek() != ",":
                break
            cur.expect(",")
    cur.expect(";base=")
    if cur.text.startswith("pos", cur.pos):
        base = POSITIVE
        cur.pos += 3
    elif cur.text.startswith("neg", cur.pos):
        base = NEGATIVE
        cur.pos += 3
    else:
        raise DiagramSyntaxError("expected 'pos' or 'neg'", cur.pos)
    cur.done()
    return ChordDiagram(k, chords, base)


def format_diagram(diagram: ChordDiagram) -> str:
    """Normalized text encoding; inverse of :func:`parse_diagram`."""
    chord_text = ",".join(f"{a}-{b}" for a, b in diagram.chords)
    return f"k={diagram.k};chords={chord_text};base={_COLOR_NAMES[diagram.base_color]}"


def diagram_to_json(diagram: ChordDiagram) -> dict:
    return {
        "k": diagram.k,
        "chords": [list(pair) for pair in diagram.chords],
        "base": _COLOR_NAMES[diagram.base_color],
    }


def diagram_from_json(data: dict) -> ChordDiagram:
    try:
        base = _COLOR_VALUES[data["base"]]
        return ChordDiagram(data["k"], [tuple(p) for p in data["chords"]], base)
    except (KeyError, TypeError) as exc:
        raise DiagramSemanticError(f"bad JSON diagram: {exc}") from exc
