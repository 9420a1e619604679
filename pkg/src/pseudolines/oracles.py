"""Exact solvers, verifiers and exhaustive searches.

Everything here is independent of the constructive coloring algorithms: the
verifier checks colorings straight against the cell complex and the wire
sets, and the minimum-color solvers are plain exhaustive backtracking with
symmetry breaking.  They exist to confirm every coloring claim exactly at
small scale.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import get_context
from typing import Iterable, Optional, Sequence

from . import search
from .coloring import Coloring
from .diagram import (
    Graph,
    WiringDiagram,
    crossings,
    enumerate_diagrams,
    max_line_crossings,
    ordinary_crossings,
    random_diagram,
    require_valid,
)
from .topology import build_cells

__all__ = [
    "Mode",
    "CELL",
    "LINE",
    "SIMULTANEOUS",
    "PL",
    "pl_min_degree",
    "Violation",
    "ExactColoringResult",
    "CapExceededError",
    "verify_coloring",
    "min_colors",
    "chi_graph",
    "turan_number",
    "Witness",
    "SearchReport",
    "search_simultaneous_counterexample",
    "scan_line_coloring_gap",
    "TwistedBundlesReport",
    "twisted_bundles_check",
]


class CapExceededError(RuntimeError):
    """An exact solver was capped below the true optimum."""


@dataclass(frozen=True)
class Mode:
    """What a coloring must avoid.

    ``cell``/``line``/``simultaneous`` constrain crossing colorings (no color
    twice on a cell boundary, along a wire, or both).  ``pl`` constrains wire
    colorings: no crossing with degree in ``min_degree .. max_degree`` may be
    monochromatic.
    """

    kind: str
    min_degree: int = 2
    max_degree: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in ("cell", "line", "simultaneous", "pl"):
            raise ValueError(f"unknown mode kind {self.kind!r}")

    def watches(self, degree: int) -> bool:
        upper = self.max_degree if self.max_degree is not None else degree
        return self.min_degree <= degree <= upper


CELL = Mode("cell")
LINE = Mode("line")
SIMULTANEOUS = Mode("simultaneous")
PL = Mode("pl")


def pl_min_degree(low: int) -> Mode:
    """Wire-coloring mode that only watches crossings of degree >= ``low``."""
    return Mode("pl", min_degree=low)


@dataclass(frozen=True)
class Violation:
    """One broken constraint: where, which color, and the crossings involved."""

    kind: str  # "cell", "line" or "crossing"
    subject: int  # cell id, wire label, or crossing index
    color: int
    crossings: tuple[int, ...]


def _coloring_domain(d: WiringDiagram, mode: Mode) -> tuple[str, int]:
    if mode.kind == "pl":
        return "line", d.n
    return "crossing", len(d.events)


def verify_coloring(
    d: WiringDiagram, coloring: Coloring, mode: Mode
) -> tuple[Violation, ...]:
    """All constraint violations of ``coloring`` under ``mode`` (empty means valid)."""
    require_valid(d)
    want_mode, want_len = _coloring_domain(d, mode)
    if coloring.mode != want_mode or len(coloring.colors) != want_len:
        raise ValueError(
            f"domain mismatch: mode {mode.kind!r} needs a {want_mode} coloring "
            f"of {want_len} items, got {coloring.mode} of {len(coloring.colors)}"
        )
    infos = crossings(d)
    out: list[Violation] = []
    if mode.kind in ("cell", "simultaneous"):
        cx = build_cells(d)
        for cell in range(cx.n_cells):
            by_color: dict[int, list[int]] = {}
            for c in sorted(cx.boundary[cell]):
                by_color.setdefault(coloring.colors[c], []).append(c)
            for color, group in sorted(by_color.items()):
                if len(group) > 1:
                    out.append(Violation("cell", cell, color, tuple(group)))
    if mode.kind in ("line", "simultaneous"):
        for w in range(1, d.n + 1):
            by_color = {}
            for info in infos:
                if w in info.lines:
                    by_color.setdefault(coloring.colors[info.index], []).append(
                        info.index
                    )
            for color, group in sorted(by_color.items()):
                if len(group) > 1:
                    out.append(Violation("line", w, color, tuple(group)))
    if mode.kind == "pl":
        for info in infos:
            if not mode.watches(info.degree):
                continue
            shades = {coloring.colors[w - 1] for w in info.lines}
            if len(shades) == 1:
                out.append(
                    Violation("crossing", info.index, shades.pop(), (info.index,))
                )
    return tuple(out)


@dataclass(frozen=True)
class ExactColoringResult:
    """Exact minimum within ``cap``, or evidence that it exceeds the cap."""

    minimum: Optional[int]
    witness: Optional[Coloring]
    cap: int

    @property
    def exceeded(self) -> bool:
        return self.minimum is None


def _constraints(
    d: WiringDiagram, mode: Mode
) -> tuple[int, list[list[int]], list[list[int]]]:
    """(item count, binary conflicts, not-all-equal edges) for an exact solve."""
    infos = crossings(d)
    if mode.kind == "pl":
        n_items = d.n
        adj: list[set[int]] = [set() for _ in range(n_items)]
        nae: list[list[int]] = []
        for info in infos:
            if not mode.watches(info.degree):
                continue
            members = sorted(w - 1 for w in info.lines)
            if len(members) == 2:
                a, b = members
                adj[a].add(b)
                adj[b].add(a)
            else:
                nae.append(members)
        return n_items, [sorted(s) for s in adj], nae
    n_items = len(infos)
    adj = [set() for _ in range(n_items)]
    cliques: list[Iterable[int]] = []
    if mode.kind in ("cell", "simultaneous"):
        cliques.extend(build_cells(d).boundary)
    if mode.kind in ("line", "simultaneous"):
        for w in range(1, d.n + 1):
            cliques.append([i.index for i in infos if w in i.lines])
    for group in cliques:
        members = sorted(group)
        for i in members:
            for j in members:
                if i != j:
                    adj[i].add(j)
    return n_items, [sorted(s) for s in adj], []


def _default_cap(d: WiringDiagram, mode: Mode) -> int:
    if mode.kind in ("cell", "line"):
        return d.n + 2
    if mode.kind == "simultaneous":
        return 2 * d.n
    return d.n


def min_colors(
    d: WiringDiagram, mode: Mode, cap: Optional[int] = None
) -> ExactColoringResult:
    """Exact minimum number of colors for ``mode``, searched up to ``cap``.

    Iterative deepening over the palette size with an exhaustive backtracking
    search per size; the returned witness is re-verified before it leaves.
    """
    require_valid(d)
    if cap is None:
        cap = _default_cap(d, mode)
    n_items, adj, nae = _constraints(d, mode)
    if n_items == 0:
        return ExactColoringResult(0, Coloring(_coloring_domain(d, mode)[0], ()), cap)
    for k in range(1, cap + 1):
        assignment = search.color_items(n_items, adj, nae, k)
        if assignment is not None:
            witness = Coloring(_coloring_domain(d, mode)[0], tuple(assignment))
            if verify_coloring(d, witness, mode):
                raise AssertionError("exact solver produced an invalid witness")
            return ExactColoringResult(k, witness, cap)
    return ExactColoringResult(None, None, cap)


def chi_graph(g: Graph, cap: Optional[int] = None) -> int:
    """Exact chromatic number of a graph by backtracking.

    The default cap equals the vertex count and can never be exceeded; a
    smaller explicit cap raises :class:`CapExceededError` when insufficient.
    """
    if cap is None:
        cap = max(g.n, 1)
    if g.n == 0:
        return 0
    adj_map = g.adjacency()
    adj = [sorted(v - 1 for v in adj_map[u + 1]) for u in range(g.n)]
    for k in range(1, cap + 1):
        if search.color_items(g.n, adj, (), k) is not None:
            return k
    raise CapExceededError(f"chromatic number exceeds cap {cap}")


def turan_number(n: int, k: int) -> int:
    """Edges of the complete ``k``-partite graph on ``n`` vertices with balanced parts.

    >>> turan_number(14, 4)
    73
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    q, r = divmod(n, k)
    sizes = [q + 1] * r + [q] * (k - r)
    return (n * (n - 1) - sum(s * (s - 1) for s in sizes)) // 2


@dataclass(frozen=True)
class Witness:
    """A diagram found by a scan, with its exact value for the scanned mode."""

    diagram: WiringDiagram
    mode: str
    minimum: Optional[int]  # None when the minimum exceeded the search cap
    gap: Optional[int] = None


@dataclass(frozen=True)
class SearchReport:
    """Outcome of an exhaustive or sampled scan over diagrams."""

    kind: str
    n: int
    examined: int
    witnesses: tuple[Witness, ...]
    distribution: dict[int, int] = field(default_factory=dict)
    exceeded: int = 0
    max_gap: Optional[int] = None
    elapsed: float = 0.0
    last_index: int = -1


def _simultaneous_entry(payload: tuple[WiringDiagram, int]) -> Optional[int]:
    d, cap = payload
    return min_colors(d, SIMULTANEOUS, cap=cap).minimum


def _map_jobs(fn, payloads: list, workers: int) -> list:
    if workers <= 1:
        return [fn(p) for p in payloads]
    with get_context("fork").Pool(workers) as pool:
        return pool.map(fn, payloads, chunksize=16)


def search_simultaneous_counterexample(
    n: int,
    threshold: Optional[int] = None,
    workers: int = 1,
    start_index: int = 0,
) -> SearchReport:
    """Scan all diagrams on ``n`` wires for ones whose crossings cannot be
    colored with ``n`` colors respecting cells and wires simultaneously.

    For each enumerated diagram the exact simultaneous minimum is computed up
    to ``threshold`` (default ``n + 1``); diagrams whose minimum exceeds
    ``n`` are reported as witnesses.
    """
    if not 1 <= n <= 5:
        raise ValueError(f"full enumeration is practical only for n <= 5, got {n}")
    if threshold is None:
        threshold = n + 1
    t0 = time.perf_counter()
    scanned = [
        d for i, d in enumerate(enumerate_diagrams(n)) if i >= start_index
    ]
    minima = _map_jobs(_simultaneous_entry, [(d, threshold) for d in scanned], workers)
    dist: Counter = Counter()
    exceeded = 0
    witnesses = []
    for d, minimum in zip(scanned, minima):
        if minimum is None:
            exceeded += 1
        else:
            dist[minimum] += 1
        if minimum is None or minimum > n:
            witnesses.append(Witness(d, "simultaneous", minimum))
    return SearchReport(
        kind="simultaneous",
        n=n,
        examined=len(scanned),
        witnesses=tuple(witnesses),
        distribution=dict(sorted(dist.items())),
        exceeded=exceeded,
        elapsed=time.perf_counter() - t0,
        last_index=start_index + len(scanned) - 1,
    )


def _line_gap_entry(d: WiringDiagram) -> int:
    result = min_colors(d, LINE)
    assert result.minimum is not None  # cap n + 2 is never hit
    return result.minimum - max_line_crossings(d)


def scan_line_coloring_gap(
    n: int,
    samples: Optional[int] = None,
    seed: int = 0,
    workers: int = 1,
    start_index: int = 0,
    max_witnesses: int = 25,
) -> SearchReport:
    """Measure how far line-respecting crossing colorings exceed the largest
    number of crossings on a single wire.

    With ``samples=None`` all diagrams on ``n <= 5`` wires are enumerated;
    larger ``n`` require sampling.  Reports the maximum observed gap and up
    to ``max_witnesses`` diagrams attaining it.
    """
    t0 = time.perf_counter()
    if samples is None:
        if n > 5:
            raise ValueError("full scan beyond n = 5 is impractical; pass samples")
        scanned = [
            d for i, d in enumerate(enumerate_diagrams(n)) if i >= start_index
        ]
    else:
        scanned = [random_diagram(n, seed + i) for i in range(samples)]
    gaps = _map_jobs(_line_gap_entry, scanned, workers)
    dist: Counter = Counter(gaps)
    max_gap = max(gaps) if gaps else None
    witnesses = tuple(
        Witness(d, "line", gap + max_line_crossings(d), gap=gap)
        for d, gap in zip(scanned, gaps)
        if gap == max_gap
    )[:max_witnesses]
    return SearchReport(
        kind="mx-gap",
        n=n,
        examined=len(scanned),
        witnesses=witnesses,
        distribution=dict(sorted(dist.items())),
        max_gap=max_gap,
        elapsed=time.perf_counter() - t0,
        last_index=start_index + len(scanned) - 1,
    )


@dataclass(frozen=True)
class TwistedBundlesReport:
    """Check of the few-ordinary-points construction for one ``(k, n)``."""

    k: int
    n: int
    turan: int
    ordinary: int
    expected_ordinary: int
    colors_used: int
    coloring_valid: bool

    @property
    def ok(self) -> bool:
        return self.ordinary == self.expected_ordinary and self.coloring_valid


def twisted_bundles_check(k: int, n: int) -> TwistedBundlesReport:
    """Build the twisted-strip arrangement and confirm its two promises:
    exactly ``turan_number(n, k) - n`` ordinary points, and a wire coloring
    with at most ``k`` colors free of monochromatic crossings (the coloring
    by strip is such a witness and is verified here)."""
    from .constructions import _strip_sizes, twisted_bundles

    d = twisted_bundles(k, n)
    expected = turan_number(n, k) - n
    ordinary = len(ordinary_crossings(d))
    by_strip = []
    for strip, size in enumerate(_strip_sizes(n, k)):
        by_strip.extend([strip] * size)
    witness = Coloring("line", tuple(by_strip))
    valid = not verify_coloring(d, witness, PL)
    return TwistedBundlesReport(
        k=k,
        n=n,
        turan=turan_number(n, k),
        ordinary=ordinary,
        expected_ordinary=expected,
        colors_used=witness.num_colors,
        coloring_valid=valid,
    )
