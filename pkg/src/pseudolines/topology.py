"""Cells, the oriented arrangement graph, and the two incidence hypergraphs.

The cell complex is computed by a slab sweep: between consecutive events the
plane is cut into ``n + 1`` vertical gaps, a gap survives an event when it is
not covered by the reversing block, and surviving gaps are merged across the
event with union-find.  Every crossing of degree ``k`` is incident to exactly
``2k`` cells: the gap above the block, the gap below it, and ``k - 1``
interior gaps on each side.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .diagram import WiringDiagram, crossings, require_valid

__all__ = [
    "CellComplex",
    "OrientedArrangementGraph",
    "Hypergraph",
    "build_cells",
    "arrangement_graph",
    "sample_topological_orders",
    "conflict_ancestors",
    "cell_vertex_hypergraph",
    "line_vertex_hypergraph",
]


@dataclass(frozen=True)
class CellComplex:
    """Cells of an arrangement with crossing incidences.

    ``incidence[i]`` lists the ``2k`` cells around crossing ``i`` in cyclic
    order (gap above, west wedges top to bottom, gap below, east wedges
    bottom to top).  ``boundary[c]`` is the set of crossings on the boundary
    of cell ``c``.  ``gap_cells[s][g]`` names the cell seen in slab ``s`` at
    vertical gap ``g``; cell ids are assigned in sweep order, so the north
    cell (the one above all wires) is always cell 0.
    """

    n_cells: int
    unbounded: tuple[bool, ...]
    incidence: tuple[tuple[int, ...], ...]
    boundary: tuple[frozenset[int], ...]
    north: int
    gap_cells: tuple[tuple[int, ...], ...]

    @property
    def bounded_cells(self) -> tuple[int, ...]:
        return tuple(c for c in range(self.n_cells) if not self.unbounded[c])


@dataclass(frozen=True)
class OrientedArrangementGraph:
    """Crossings as vertices, consecutive crossings along a wire as arcs.

    Arcs point in the direction of increasing x, so ``u < v`` for every arc
    ``(u, v)`` and the graph is acyclic by construction; the event order
    itself is a topological order.
    """

    n_vertices: int
    arcs: tuple[tuple[int, int], ...]
    topo_order: tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """Vertex count plus a list of hyperedges (sets of vertex labels)."""

    n_vertices: int
    edges: tuple[frozenset[int], ...]

    def codegree(self) -> int:
        """Largest intersection between two distinct hyperedges."""
        best = 0
        for i in range(len(self.edges)):
            for j in range(i + 1, len(self.edges)):
                best = max(best, len(self.edges[i] & self.edges[j]))
        return best


def build_cells(d: WiringDiagram) -> CellComplex:
    """Compute the cell complex of a valid diagram by a slab sweep."""
    require_valid(d)
    n, events = d.n, d.events
    n_events = len(events)
    width = n + 1  # vertical gaps per slab

    parent = list(range((n_events + 1) * width))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for s, e in enumerate(events):
        lo, hi = e.top, e.top + e.width
        for g in range(width):
            if g <= lo or g >= hi:
                union(s * width + g, (s + 1) * width + g)

    ids: dict[int, int] = {}
    gap_cells: list[tuple[int, ...]] = []
    for s in range(n_events + 1):
        row = []
        for g in range(width):
            root = find(s * width + g)
            row.append(ids.setdefault(root, len(ids)))
        gap_cells.append(tuple(row))

    n_cells = len(ids)
    incidence: list[tuple[int, ...]] = []
    boundary: list[set[int]] = [set() for _ in range(n_cells)]
    for i, e in enumerate(events):
        lo, hi = e.top, e.top + e.width
        west = [gap_cells[i][g] for g in range(lo + 1, hi)]
        east = [gap_cells[i + 1][g] for g in range(lo + 1, hi)]
        around = (gap_cells[i][lo], *west, gap_cells[i][hi], *reversed(east))
        incidence.append(around)
        for c in around:
            boundary[c].add(i)

    unbounded = [False] * n_cells
    for g in range(width):
        unbounded[gap_cells[0][g]] = True
        unbounded[gap_cells[n_events][g]] = True
    for s in range(n_events + 1):
        unbounded[gap_cells[s][0]] = True
        unbounded[gap_cells[s][n]] = True

    return CellComplex(
        n_cells=n_cells,
        unbounded=tuple(unbounded),
        incidence=tuple(incidence),
        boundary=tuple(frozenset(b) for b in boundary),
        north=gap_cells[0][0],
        gap_cells=tuple(gap_cells),
    )


def arrangement_graph(d: WiringDiagram) -> OrientedArrangementGraph:
    """Arcs between consecutive crossings along every wire, oriented by x."""
    infos = crossings(d)
    on_wire: dict[int, list[int]] = {w: [] for w in range(1, d.n + 1)}
    for info in infos:
        for w in info.lines:
            on_wire[w].append(info.index)
    arcs = set()
    for seq in on_wire.values():
        for u, v in zip(seq, seq[1:]):
            arcs.add((u, v))
    return OrientedArrangementGraph(
        n_vertices=len(infos),
        arcs=tuple(sorted(arcs)),
        topo_order=tuple(range(len(infos))),
    )


def sample_topological_orders(
    graph: OrientedArrangementGraph, count: int, seed: int = 0
) -> tuple[tuple[int, ...], ...]:
    """Draw ``count`` random topological orders of the arrangement graph."""
    rng = random.Random(seed)
    succ: dict[int, list[int]] = {v: [] for v in range(graph.n_vertices)}
    indeg = [0] * graph.n_vertices
    for u, v in graph.arcs:
        succ[u].append(v)
        indeg[v] += 1
    orders = []
    for _ in range(count):
        deg = list(indeg)
        ready = [v for v in range(graph.n_vertices) if deg[v] == 0]
        out: list[int] = []
        while ready:
            v = ready.pop(rng.randrange(len(ready)))
            out.append(v)
            for w in succ[v]:
                deg[w] -= 1
                if deg[w] == 0:
                    ready.append(w)
        orders.append(tuple(out))
    return tuple(orders)


def _check_topological(d: WiringDiagram, order: Sequence[int]) -> list[int]:
    """Positions of crossings in ``order``; raise if it is not topological."""
    graph = arrangement_graph(d)
    if sorted(order) != list(range(graph.n_vertices)):
        raise ValueError("order must be a permutation of the crossing indices")
    pos = [0] * graph.n_vertices
    for i, c in enumerate(order):
        pos[c] = i
    for u, v in graph.arcs:
        if pos[u] >= pos[v]:
            raise ValueError(
                f"order is not topological: crossing {u} precedes {v} along a wire"
            )
    return pos


def conflict_ancestors(
    d: WiringDiagram, cells: CellComplex, order: Sequence[int], crossing: int
) -> frozenset[int]:
    """Crossings before ``crossing`` in ``order`` that share a boundary cell with it.

    Whatever topological order is chosen, a crossing has at most ``n - 1``
    conflict ancestors, which is what makes greedy cell-respecting coloring
    work with ``n`` colors.
    """
    pos = _check_topological(d, order)
    mine = set(cells.incidence[crossing])
    return frozenset(
        c
        for c in range(len(cells.incidence))
        if pos[c] < pos[crossing] and mine.intersection(cells.incidence[c])
    )


def cell_vertex_hypergraph(d: WiringDiagram) -> Hypergraph:
    """Cells as vertices; each crossing contributes its incident cells as a hyperedge."""
    cx = build_cells(d)
    return Hypergraph(cx.n_cells, tuple(frozenset(t) for t in cx.incidence))


def line_vertex_hypergraph(d: WiringDiagram) -> Hypergraph:
    """Wires as vertices; each crossing contributes its wire set as a hyperedge.

    The result is a simple hypergraph: two distinct crossings share at most
    one wire, since two shared wires would cross each other twice.
    """
    return Hypergraph(d.n, tuple(info.lines for info in crossings(d)))
