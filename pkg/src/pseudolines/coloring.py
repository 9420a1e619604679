"""Coloring algorithms for wiring diagrams.

Two families of colorings are produced:

* crossing colorings (``mode == "crossing"``), one color per crossing, that
  avoid repeating a color on the boundary of a cell or along a wire;
* line colorings (``mode == "line"``), one color per wire, that avoid
  monochromatic crossings of prescribed degrees.

All algorithms are deterministic; randomized ones take an explicit seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from . import search
from .diagram import Graph, WiringDiagram, crossings, require_valid, restrict
from .topology import _check_topological, build_cells

__all__ = [
    "Coloring",
    "ColoringBudgetError",
    "ResamplingLimitError",
    "greedy_cell_coloring",
    "line_respecting_coloring",
    "greedy_pseudoline_coloring",
    "ordinary_graph",
    "local_lemma_budget",
    "local_lemma_coloring",
    "degree_four_coloring",
]


class ColoringBudgetError(RuntimeError):
    """No coloring exists within the requested color budget."""


class ResamplingLimitError(RuntimeError):
    """Resampling did not converge within the round limit."""


@dataclass(frozen=True)
class Coloring:
    """Total color assignment for crossings or wires.

    ``colors[i]`` is the color of crossing ``i`` (mode ``"crossing"``) or of
    wire ``i + 1`` (mode ``"line"``).  Palettes are compact: every color
    below ``num_colors`` occurs at least once.
    """

    mode: str
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.mode not in ("crossing", "line"):
            raise ValueError(f"unknown coloring mode {self.mode!r}")
        used = set(self.colors)
        if used and (min(used) < 0 or used != set(range(max(used) + 1))):
            raise ValueError("colors must form a compact range 0..K-1, all used")

    @property
    def num_colors(self) -> int:
        return max(self.colors) + 1 if self.colors else 0


def _compact(values: Sequence[int]) -> tuple[int, ...]:
    remap = {c: i for i, c in enumerate(sorted(set(values)))}
    return tuple(remap[c] for c in values)


def greedy_cell_coloring(
    d: WiringDiagram, order: Optional[Sequence[int]] = None
) -> Coloring:
    """Color crossings so that no color repeats on the boundary of any cell.

    Crossings are processed in a topological order of the arrangement graph
    (event order by default), each receiving the smallest color unused among
    the earlier crossings sharing one of its cells.  Since a crossing has at
    most ``n - 1`` such conflict ancestors, at most ``n`` colors are used.
    """
    require_valid(d)
    cells = build_cells(d)
    n_events = len(d.events)
    if order is None:
        order = range(n_events)
    else:
        _check_topological(d, order)
    colors = [-1] * n_events
    used_at_cell: list[set[int]] = [set() for _ in range(cells.n_cells)]
    for c in order:
        forbidden = set()
        for cell in cells.incidence[c]:
            forbidden |= used_at_cell[cell]
        color = 0
        while color in forbidden:
            color += 1
        colors[c] = color
        for cell in cells.incidence[c]:
            used_at_cell[cell].add(color)
    return Coloring("crossing", _compact(colors))


def _round_robin_simple(d: WiringDiagram) -> Coloring:
    """Explicit circle-method coloring of a simple arrangement.

    Crossings of a simple arrangement are the edges of the complete graph on
    the wires, so a 1-factorization colors them with ``n - 1`` colors for
    even ``n`` and ``n`` colors for odd ``n``, no color repeating on a wire.
    """
    n = d.n
    colors = []
    for info in crossings(d):
        u, v = sorted(w - 1 for w in info.lines)
        if n % 2 == 1:
            colors.append((u + v) % n)
        elif v == n - 1:
            colors.append((2 * u) % (n - 1))
        else:
            colors.append((u + v) % (n - 1))
    return Coloring("crossing", _compact(colors))


def _line_conflicts(d: WiringDiagram) -> list[list[int]]:
    """Crossing pairs sharing a wire, as adjacency lists."""
    infos = crossings(d)
    on_wire: dict[int, list[int]] = {w: [] for w in range(1, d.n + 1)}
    for info in infos:
        for w in info.lines:
            on_wire[w].append(info.index)
    adj: list[set[int]] = [set() for _ in infos]
    for seq in on_wire.values():
        for i in seq:
            for j in seq:
                if i != j:
                    adj[i].add(j)
    return [sorted(s) for s in adj]


def line_respecting_coloring(
    d: WiringDiagram, budget: Optional[int] = None
) -> Coloring:
    """Color crossings so that no color repeats along any wire.

    Simple arrangements use the explicit round-robin schedule.  Otherwise a
    saturation-guided greedy pass runs first and exhaustive backtracking
    takes over if it exceeds the budget (default ``n``).  A budget of ``n``
    always suffices: the wire-set hypergraph of the crossings is simple, so
    this is the Erdos-Faber-Lovasz bound; failure at budget ``n`` would mean
    a bug and raises immediately.
    """
    require_valid(d)
    if budget is None:
        budget = d.n
    if d.is_simple:
        col = _round_robin_simple(d)
        if col.num_colors > budget:
            raise ColoringBudgetError(
                f"simple arrangement needs {col.num_colors} colors, budget {budget}"
            )
        return col
    adj = _line_conflicts(d)
    greedy = _dsatur_greedy(adj)
    if greedy and max(greedy) + 1 <= budget:
        return Coloring("crossing", _compact(greedy))
    exact = search.color_items(len(adj), adj, (), budget)
    if exact is not None:
        return Coloring("crossing", _compact(exact))
    if budget >= d.n:
        raise AssertionError(
            f"no line-respecting coloring with {budget} >= n colors: "
            "this contradicts the Erdos-Faber-Lovasz bound and is a bug"
        )
    raise ColoringBudgetError(f"no line-respecting coloring with {budget} colors")


def _dsatur_greedy(adj: Sequence[Sequence[int]]) -> list[int]:
    """Greedy coloring, most saturated vertex first; ties by degree then index."""
    n = len(adj)
    colors = [-1] * n
    for _ in range(n):
        best, best_key = -1, (-1, -1, 0)
        for i in range(n):
            if colors[i] != -1:
                continue
            sat = len({colors[j] for j in adj[i] if colors[j] != -1})
            key = (sat, len(adj[i]), -i)
            if key > best_key:
                best, best_key = i, key
        neighbor_colors = {colors[j] for j in adj[best]}
        c = 0
        while c in neighbor_colors:
            c += 1
        colors[best] = c
    return colors


def greedy_pseudoline_coloring(d: WiringDiagram) -> Coloring:
    """First-fit coloring of the wires avoiding monochromatic crossings.

    A color is forbidden for a wire exactly when it would complete some
    crossing in that color; distinct colors always work, so at most ``n``
    colors are used.
    """
    require_valid(d)
    infos = crossings(d)
    colors: dict[int, int] = {}
    for w in range(1, d.n + 1):
        forbidden = set()
        for info in infos:
            if w not in info.lines:
                continue
            others = [colors.get(u) for u in info.lines if u != w]
            if None not in others and len(set(others)) == 1:
                forbidden.add(others[0])
        c = 0
        while c in forbidden:
            c += 1
        colors[w] = c
    return Coloring("line", _compact([colors[w] for w in range(1, d.n + 1)]))


def ordinary_graph(d: WiringDiagram) -> Graph:
    """Graph on the wires with one edge per ordinary (degree-2) crossing."""
    require_valid(d)
    edges = []
    for info in crossings(d):
        if info.degree == 2:
            a, b = sorted(info.lines)
            edges.append((a, b))
    return Graph(d.n, tuple(edges))


def local_lemma_budget(n: int, low: int, spread: int) -> int:
    """Colors sufficient to avoid monochromatic crossings of degree ``low .. low+spread``.

    Evaluates ``ceil((4 * (low + spread) * n / (low - 1)) ** (1 / (low - 1)))``
    with exact integer arithmetic; this is the palette size under which the
    Lovasz Local Lemma guarantees a valid random coloring exists.

    >>> local_lemma_budget(81, 4, 0)
    8
    >>> local_lemma_budget(10, 3, 1)
    9
    """
    if low < 3:
        raise ValueError(f"degree threshold must be >= 3, got {low}")
    if spread < 0:
        raise ValueError(f"degree spread must be >= 0, got {spread}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    power = low - 1
    target = 4 * (low + spread) * n  # compare k**power against target / power
    k = max(1, round((target / power) ** (1.0 / power)))
    while k**power * power < target:
        k += 1
    while k > 1 and (k - 1) ** power * power >= target:
        k -= 1
    return k


def local_lemma_coloring(
    d: WiringDiagram,
    low: int,
    spread: int,
    colors: Optional[int] = None,
    seed: int = 0,
    max_rounds: Optional[int] = None,
) -> Coloring:
    """Random wire coloring avoiding monochromatic crossings of degree ``low .. low+spread``.

    Moser-Tardos style resampling: while some crossing in the degree window
    is monochromatic, the lowest-indexed violating crossing has all its wires
    recolored uniformly at random.  With the default palette size from
    :func:`local_lemma_budget` this converges quickly in practice; the round
    limit (default ``1000 * number of events``) exists to surface
    under-budgeted palettes.
    """
    require_valid(d)
    if low < 3:
        raise ValueError(f"degree threshold must be >= 3, got {low}")
    if spread < 0:
        raise ValueError(f"degree spread must be >= 0, got {spread}")
    k = local_lemma_budget(d.n, low, spread) if colors is None else colors
    if k < 1:
        raise ValueError(f"palette size must be >= 1, got {k}")
    if max_rounds is None:
        max_rounds = max(1, 1000 * len(d.events))
    rng = random.Random(seed)
    assignment = [rng.randrange(k) for _ in range(d.n)]
    watched = [
        sorted(info.lines)
        for info in crossings(d)
        if low <= info.degree <= low + spread
    ]
    for _ in range(max_rounds):
        violating = next(
            (ls for ls in watched if len({assignment[w - 1] for w in ls}) == 1), None
        )
        if violating is None:
            return Coloring("line", _compact(assignment))
        for w in violating:
            assignment[w - 1] = rng.randrange(k)
    raise ResamplingLimitError(
        f"no valid coloring after {max_rounds} resampling rounds "
        f"(palette {k}, degrees {low}..{low + spread})"
    )


def _ceil_sqrt(n: int) -> int:
    r = math.isqrt(n)
    return r if r * r == n else r + 1


def degree_four_coloring(d: WiringDiagram, seed: int = 0) -> Coloring:
    """Wire coloring with no monochromatic crossing of degree 4 or more.

    Crossings of degree above ``ceil(sqrt(n))`` are eliminated first by
    removing their whole wire bundle (any two bundle wires cross only at the
    removed point).  The remainder is colored by :func:`local_lemma_coloring`
    for the degree window ``4 .. ceil(sqrt(n))`` when needed, and each bundle
    is reinserted with two fresh alternating colors, so every bundle crossing
    sees both.  Total colors stay within the local-lemma budget plus two per
    bundle, and fewer than ``sqrt(n)`` bundles exist since each removal drops
    more than ``sqrt(n)`` wires.
    """
    require_valid(d)
    n = d.n
    threshold = _ceil_sqrt(n)
    current: Optional[WiringDiagram] = d
    labels = list(range(1, n + 1))  # current wire -> original wire
    bundles: list[list[int]] = []
    while current is not None:
        big = next(
            (info for info in crossings(current) if info.degree > threshold), None
        )
        if big is None:
            break
        bundles.append(sorted(labels[w - 1] for w in big.lines))
        keep = [w for w in range(1, current.n + 1) if w not in big.lines]
        if keep:
            current = restrict(current, keep)
            labels = [labels[w - 1] for w in keep]
        else:
            current, labels = None, []

    assignment = [0] * n
    base = 0
    if current is not None:
        if any(info.degree >= 4 for info in crossings(current)):
            rest = local_lemma_coloring(
                current, 4, threshold - 4, seed=seed
            )
            base = rest.num_colors
            for w, color in enumerate(rest.colors, start=1):
                assignment[labels[w - 1] - 1] = color
        else:
            base = 1
            for w in labels:
                assignment[w - 1] = 0
    for i, bundle in enumerate(bundles):
        for j, wire in enumerate(bundle):
            assignment[wire - 1] = base + 2 * i + (j % 2)
    return Coloring("line", _compact(assignment))
