"""Combinatorial band surfaces: atom reconstruction, caps, invariants.

The atom of a diagram is modeled as a base polygon (a disk with 2k+2
directed boundary sides) plus one band per chord.  Sides alternate around
the polygon: the transversal side T_i crosses the critical level at matched
point Q_i, the level side L_i is the arc of the sector between Q_i and
Q_{i+1} and lies at level +eps or -eps according to the arc coloring.
Each matched point contributes two polygon corners; for i >= 1 one corner
sits at +eps (the paper-style vertex P_i) and one at -eps (N_i).

A band for chord (i, j) is a rectangle glued along T_i and T_j with its
level signs matched (+eps corners to +eps corners), which is forced because
the glued rectangle carries the function as its second coordinate.  Bands
joining same-parity points come out twisted; the orientability computation
below discovers this generically by propagating face orientations.

Everything downstream (Euler characteristic, boundary circuits, level
chains, cap attachment, orientability) works on the identified complex:
vertices are polygon corners, edges carry (tail, head), faces are cyclic
sequences of directed edge uses.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .diagram import ChordDiagram

Vertex = tuple[int, int]  # (point index, corner side 0|1)
EdgeId = tuple
FaceUse = tuple[EdgeId, int]  # edge id, +1/-1 relative to intrinsic direction


class NotCloseable(Exception):
    """A level of the atom is disconnected; no optimal function fits it."""


@dataclass(frozen=True)
class SurfaceInvariants:
    orientable: bool
    euler_characteristic: int
    boundary_components: int
    genus: int | None = None
    crosscap_number: int | None = None

    def __post_init__(self):
        chi, b = self.euler_characteristic, self.boundary_components
        if self.orientable:
            assert chi == 2 - 2 * (self.genus or 0) - b
        else:
            assert chi == 2 - (self.crosscap_number or 0) - b


class BandSurface:
    """Identified complex of an atom, optionally with caps glued on.

    Instances are immutable by convention: no method mutates, ``close_up``
    returns a new surface.
    """

    def __init__(self, diagram: ChordDiagram):
        self.diagram = diagram
        self.k = diagram.k
        self.colors = diagram.arc_coloring()
        self.caps: tuple[int, ...] = ()
        n = self.k + 1
        edges: dict[EdgeId, tuple[Vertex, Vertex]] = {}
        for i in range(n):
            # T_i runs between its two corners; the corner shared with
            # L_{i-1} sits at level colors[i-1], the one shared with L_i at
            # level colors[i].
            edges[("T", i)] = ((i, 0), (i, 1))
            edges[("L", i)] = ((i, 1), ((i + 1) % n, 0))
        poly: list[FaceUse] = []
        for i in range(n):
            poly.append((("T", i), 1))
            poly.append((("L", i), 1))
        faces: dict = {"poly": tuple(poly)}
        for a, b in diagram.chords:
            pa, na = self._corners(a)
            pb, nb = self._corners(b)
            edges[("top", a, b)] = (pa, pb)
            edges[("bot", a, b)] = (na, nb)
            # Rectangle boundary: bottom a->b, T_b upward (N_b -> P_b),
            # top b->a, T_a downward (P_a -> N_a).
            o_b = 1 if edges[("T", b)][1] == pb else -1
            o_a = 1 if edges[("T", a)][1] == na else -1
            faces[("band", a, b)] = (
                (("bot", a, b), 1),
                (("T", b), o_b),
                (("top", a, b), -1),
                (("T", a), o_a),
            )
        self.edges = edges
        self.faces = faces

    def _corners(self, i: int) -> tuple[Vertex, Vertex]:
        """(+eps corner, -eps corner) of T_i, i.e. (P_i, N_i)."""
        if self.colors[i] > 0:
            return (i, 1), (i, 0)
        return (i, 0), (i, 1)

    # -- generic complex queries -------------------------------------------

    def _edge_uses(self) -> dict[EdgeId, list[tuple[object, int]]]:
        uses: dict[EdgeId, list[tuple[object, int]]] = defaultdict(list)
        for face_id, cycle in self.faces.items():
            for edge, orient in cycle:
                uses[edge].append((face_id, orient))
        return uses

    def boundary_edges(self) -> list[EdgeId]:
        uses = self._edge_uses()
        return sorted(e for e in self.edges if len(uses[e]) == 1)

    def euler_characteristic(self) -> int:
        vertices = {v for ends in self.edges.values() for v in ends}
        return len(vertices) - len(self.edges) + len(self.faces)

    def is_orientable(self) -> bool:
        """Propagate a coherent orientation across shared edges."""
        uses = self._edge_uses()
        constraints: dict[object, list[tuple[object, int]]] = defaultdict(list)
        for edge, ulist in uses.items():
            if len(ulist) != 2:
                continue
            (f1, o1), (f2, o2) = ulist
            if f1 == f2:
                if o1 != -o2:
                    return False
                continue
            # sigma[f1]*o1 must equal -sigma[f2]*o2
            constraints[f1].append((f2, -o1 * o2))
            constraints[f2].append((f1, -o1 * o2))
        sigma: dict[object, int] = {}
        for start in self.faces:
            if start in sigma:
                continue
            sigma[start] = 1
            stack = [start]
            while stack:
                f = stack.pop()
                for g, rel in constraints[f]:
                    want = sigma[f] * rel
                    if g in sigma:
                        if sigma[g] != want:
                            return False
                    else:
                        sigma[g] = want
                        stack.append(g)
        return True

    def boundary_circuits(self) -> list[list[EdgeId]]:
        """Closed circuits of boundary edges, via the corner walk.

        Every vertex of the complex carries either zero or exactly two
        boundary edge-ends, so the walk is forced.  Circuits are rotated to
        start at their smallest edge id and listed sorted, for determinism.
        """
        boundary = self.boundary_edges()
        incidence: dict[Vertex, list[EdgeId]] = defaultdict(list)
        for e in boundary:
            tail, head = self.edges[e]
            incidence[tail].append(e)
            incidence[head].append(e)
        for v, es in incidence.items():
            if len(es) != 2:
                raise AssertionError(f"boundary vertex {v} has degree {len(es)}")
        circuits = []
        seen: set[EdgeId] = set()
        for e0 in boundary:
            if e0 in seen:
                continue
            circuit = [e0]
            seen.add(e0)
            vertex = self.edges[e0][1]
            while True:
                (edge,) = [e for e in incidence[vertex] if e != circuit[-1]]
                if edge == e0:
                    break
                circuit.append(edge)
                seen.add(edge)
                tail, head = self.edges[edge]
                vertex = head if vertex == tail else tail
            low = circuit.index(min(circuit))
            circuits.append(circuit[low:] + circuit[:low])
        return sorted(circuits)

    # -- levels and caps ----------------------------------------------------

    def level_edges(self, sign: int) -> list[EdgeId]:
        """Edges lying at level +eps (sign=+1) or -eps (sign=-1)."""
        out: list[EdgeId] = [
            ("L", i) for i in range(self.k + 1) if self.colors[i] == sign
        ]
        kind = "top" if sign > 0 else "bot"
        out.extend((kind, a, b) for a, b in self.diagram.chords)
        return out

    def _chain_components(
        self, edge_list: list[EdgeId]
    ) -> list[tuple[list[EdgeId], list[Vertex], bool]]:
        """Split edges into chains: (ordered edges, vertex path, is_cycle)."""
        incidence: dict[Vertex, list[EdgeId]] = defaultdict(list)
        for e in edge_list:
            tail, head = self.edges[e]
            incidence[tail].append(e)
            incidence[head].append(e)
        components = []
        seen: set[EdgeId] = set()
        for e0 in sorted(edge_list):
            if e0 in seen:
                continue
            # find an endpoint of this component, if any (degree-1 vertex)
            comp_edges = self._component_of(e0, incidence)
            endpoints = sorted(
                v
                for v in {p for e in comp_edges for p in self.edges[e]}
                if len(incidence[v]) == 1
            )
            is_cycle = not endpoints
            start = endpoints[0] if endpoints else min(
                p for e in comp_edges for p in self.edges[e]
            )
            ordered, path = self._walk_chain(start, incidence, comp_edges)
            components.append((ordered, path, is_cycle))
            seen.update(comp_edges)
        return components

    def _component_of(self, e0, incidence):
        comp = {e0}
        stack = [e0]
        while stack:
            e = stack.pop()
            for v in self.edges[e]:
                for nb in incidence[v]:
                    if nb not in comp:
                        comp.add(nb)
                        stack.append(nb)
        return comp

    def _walk_chain(self, start, incidence, comp_edges):
        ordered: list[EdgeId] = []
        path = [start]
        vertex = start
        used: set[EdgeId] = set()
        while True:
            options = [e for e in incidence[vertex] if e in comp_edges and e not in used]
            if not options:
                break
            edge = sorted(options)[0]
            ordered.append(edge)
            used.add(edge)
            tail, head = self.edges[edge]
            vertex = head if vertex == tail else tail
            path.append(vertex)
        return ordered, path

    def level_arcs(self, sign: int) -> list[list[EdgeId]]:
        """Connected components of the +eps or -eps level, as ordered chains."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return [ordered for ordered, _, _ in self._chain_components(self.level_edges(sign))]

    def close_up(self) -> "BandSurface":
        """Glue a half-disk along each level; requires connected levels.

        A cap glued along an arc leaves one residual boundary edge and keeps
        the Euler characteristic; a cap glued along a circle closes it fully
        and raises the characteristic by one.
        """
        if self.caps:
            raise ValueError("surface is already closed up")
        new = object.__new__(BandSurface)
        new.diagram = self.diagram
        new.k = self.k
        new.colors = self.colors
        new.edges = dict(self.edges)
        new.faces = dict(self.faces)
        new.caps = (1, -1)
        for sign in (1, -1):
            comps = self._chain_components(self.level_edges(sign))
            if len(comps) != 1:
                raise NotCloseable(
                    f"level {'+' if sign > 0 else '-'}eps has {len(comps)} components"
                )
            ordered, path, is_cycle = comps[0]
            face: list[FaceUse] = []
            for step, edge in enumerate(ordered):
                along = self.edges[edge] == (path[step], path[step + 1])
                face.append((edge, 1 if along else -1))
            if not is_cycle:
                cap_edge = ("cap", sign)
                new.edges[cap_edge] = (path[-1], path[0])
                face.append((cap_edge, 1))
            new.faces[("cap", sign)] = tuple(face)
        return new

    def invariants(self) -> SurfaceInvariants:
        chi = self.euler_characteristic()
        b = len(self.boundary_circuits())
        orientable = self.is_orientable()
        if orientable:
            genus2 = 2 - chi - b
            assert genus2 % 2 == 0 and genus2 >= 0
            return SurfaceInvariants(True, chi, b, genus=genus2 // 2)
        crosscap = 2 - chi - b
        assert crosscap >= 1
        return SurfaceInvariants(False, chi, b, crosscap_number=crosscap)


def build_atom(diagram: ChordDiagram) -> BandSurface:
    """The polygon-plus-bands surface of the diagram's atom."""
    return BandSurface(diagram)


def boundary_circuits(surface: BandSurface) -> list[list[EdgeId]]:
    return surface.boundary_circuits()


def level_arcs(surface: BandSurface, sign: int) -> list[list[EdgeId]]:
    return surface.level_arcs(sign)


def close_up(surface: BandSurface) -> BandSurface:
    return surface.close_up()


def invariants(surface: BandSurface) -> SurfaceInvariants:
    return surface.invariants()


def find_full_ways(diagram: ChordDiagram) -> list[tuple[int, ...]]:
    """Walks from Q_0 to the other free point hitting every point once.

    A step follows either a circle arc to a neighboring point or a chord,
    under the non-reversal rules: the rotational sense of arc steps is fixed
    for the whole walk, and at a chorded point the walk alternates strictly
    (an arc arrival forces the chord, a chord arrival forces an arc).  This
    is the reading under which the standard genus-1 diagram has exactly two
    ways and the blocked pattern {(i, j+1), (i+1, j)} has none; the laxer
    arcs-only reading admits a chord-free circuit of the whole circle and
    breaks the latter.  Returns the distinct point sequences, sorted; empty
    unless the diagram has exactly two free points.
    """
    free = diagram.free_points()
    if len(free) != 2 or 0 not in free:
        return []
    target = free[1]
    n = diagram.k + 1
    partner = {}
    for a, b in diagram.chords:
        partner[a] = b
        partner[b] = a
    ways: set[tuple[int, ...]] = set()

    def extend(
        current: int, visited: tuple[int, ...], direction: int | None, via_arc: bool
    ):
        if len(visited) == n:
            if current == target:
                ways.add(visited)
            return
        moves: list[tuple[int, int | None, bool]] = []
        if via_arc and current in partner:
            moves.append((partner[current], direction, False))
        else:
            for step in (1, -1):
                if direction is None or step == direction:
                    moves.append(((current + step) % n, step, True))
        for nxt, new_dir, is_arc in moves:
            if nxt in visited:
                continue
            if nxt == target and len(visited) != n - 1:
                continue  # the far free point must come last
            extend(nxt, visited + (nxt,), new_dir, is_arc)

    extend(0, (0,), None, False)
    return sorted(ways)
