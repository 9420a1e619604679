"""Wiring diagrams: the combinatorial form of pseudoline arrangements.

An arrangement of ``n`` pseudolines is drawn as ``n`` x-monotone wires.
Wires are labelled ``1 .. n`` by their initial top-to-bottom slot, and the
drawing is reduced to a left-to-right sequence of events, each reversing a
contiguous block of slots.  A block of width ``k`` is a crossing of degree
``k``; the arrangement is *simple* when every event has width 2.

A diagram is *valid* when every unordered pair of wires is reversed by
exactly one event ("any two pseudolines cross exactly once").  Validity
forces the final top-to-bottom order to be ``n .. 1``.  Syntactically legal
but invalid event sequences are representable on purpose so that
:func:`validate` can report what is wrong with them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Event",
    "WiringDiagram",
    "ValidationReport",
    "CrossingInfo",
    "Graph",
    "InvalidDiagramError",
    "validate",
    "require_valid",
    "crossings",
    "wire_orders",
    "max_line_crossings",
    "ordinary_crossings",
    "restrict",
    "trivial_pencil",
    "random_simple",
    "random_diagram",
    "random_nonsimple",
    "enumerate_diagrams",
    "reflect_left_right",
    "reflect_top_bottom",
    "canonical_form",
]


class InvalidDiagramError(ValueError):
    """An operation that needs a valid diagram was given an invalid one."""


@dataclass(frozen=True, order=True)
class Event:
    """One crossing: reverse the block of ``width`` wires starting at slot ``top``."""

    top: int
    width: int

    def __post_init__(self) -> None:
        if self.top < 0:
            raise ValueError(f"event top slot must be >= 0, got {self.top}")
        if self.width < 2:
            raise ValueError(f"event width must be >= 2, got {self.width}")


@dataclass(frozen=True)
class WiringDiagram:
    """``n`` wires plus the ordered tuple of crossing events.

    Simultaneous crossings of a geometric drawing are serialized in tuple
    order; event ``i`` happens at x-position ``i``.  The constructor accepts
    plain ``(top, width)`` pairs and coerces them to :class:`Event`.
    """

    n: int
    events: tuple[Event, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least one wire, got n={self.n}")
        coerced = tuple(
            e if isinstance(e, Event) else Event(*e) for e in self.events
        )
        object.__setattr__(self, "events", coerced)
        for e in coerced:
            if e.top + e.width > self.n:
                raise ValueError(
                    f"event {(e.top, e.width)} does not fit between slots 0 and {self.n}"
                )

    @property
    def is_simple(self) -> bool:
        return all(e.width == 2 for e in self.events)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate`.

    ``violations`` holds one entry per offending wire pair: the pair itself
    and the indices of every event reversing it (empty when the pair never
    crosses).  ``valid`` holds exactly when ``violations`` is empty.
    """

    valid: bool
    violations: tuple[tuple[tuple[int, int], tuple[int, ...]], ...] = ()


@dataclass(frozen=True)
class CrossingInfo:
    """Derived data of one crossing: event index, wire labels, degree."""

    index: int
    lines: frozenset[int]
    degree: int


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``1 .. n``."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be >= 0")
        seen: set[tuple[int, int]] = set()
        normalized = []
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise ValueError(f"edge ({a}, {b}) leaves vertex range 1..{self.n}")
            e = (min(a, b), max(a, b))
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            normalized.append(e)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


@lru_cache(maxsize=8192)
def _simulation(d: WiringDiagram) -> tuple[tuple[frozenset[int], ...], bool]:
    """Run the diagram once; return per-event wire sets and the validity flag."""
    order = list(range(1, d.n + 1))
    seen: set[tuple[int, int]] = set()
    lines: list[frozenset[int]] = []
    repeated = False
    for e in d.events:
        block = order[e.top : e.top + e.width]
        lines.append(frozenset(block))
        for a, b in combinations(block, 2):
            p = _pair(a, b)
            if p in seen:
                repeated = True
            seen.add(p)
        order[e.top : e.top + e.width] = reversed(block)
    valid = not repeated and len(seen) == d.n * (d.n - 1) // 2
    return tuple(lines), valid


def validate(d: WiringDiagram) -> ValidationReport:
    """Check that every pair of wires is reversed by exactly one event.

    >>> validate(WiringDiagram(3, ((0, 2), (1, 2), (0, 2)))).valid
    True
    >>> bad = validate(WiringDiagram(3, ((0, 2), (0, 2))))
    >>> bad.valid, bad.violations[0]
    (False, ((1, 2), (0, 1)))
    """
    order = list(range(1, d.n + 1))
    hits: dict[tuple[int, int], list[int]] = {
        _pair(a, b): [] for a, b in combinations(range(1, d.n + 1), 2)
    }
    for i, e in enumerate(d.events):
        block = order[e.top : e.top + e.width]
        for a, b in combinations(block, 2):
            hits[_pair(a, b)].append(i)
        order[e.top : e.top + e.width] = reversed(block)
    violations = tuple(
        (pair, tuple(ixs)) for pair, ixs in sorted(hits.items()) if len(ixs) != 1
    )
    return ValidationReport(valid=not violations, violations=violations)


def require_valid(d: WiringDiagram) -> None:
    """Raise :class:`InvalidDiagramError` unless ``d`` is valid."""
    if not _simulation(d)[1]:
        raise InvalidDiagramError(
            f"diagram is not a pseudoline arrangement: {validate(d).violations[:3]} ..."
        )


def wire_orders(d: WiringDiagram) -> Iterator[tuple[int, ...]]:
    """Yield the top-to-bottom wire order in every slab (before each event, then final)."""
    order = list(range(1, d.n + 1))
    yield tuple(order)
    for e in d.events:
        order[e.top : e.top + e.width] = reversed(order[e.top : e.top + e.width])
        yield tuple(order)


def crossings(d: WiringDiagram) -> tuple[CrossingInfo, ...]:
    """Return one :class:`CrossingInfo` per event, in event order."""
    require_valid(d)
    lines, _ = _simulation(d)
    return tuple(
        CrossingInfo(index=i, lines=ls, degree=len(ls)) for i, ls in enumerate(lines)
    )


def max_line_crossings(d: WiringDiagram) -> int:
    """Largest number of crossings that lie on a single wire.

    Equals 1 on a pencil (all wires through one point) and ``n - 1`` on any
    simple arrangement; 0 when there are no crossings at all (``n = 1``).
    """
    require_valid(d)
    counts = [0] * (d.n + 1)
    for lineset in _simulation(d)[0]:
        for w in lineset:
            counts[w] += 1
    return max(counts)


def ordinary_crossings(d: WiringDiagram) -> tuple[int, ...]:
    """Indices of the crossings of degree exactly 2 (the ordinary points)."""
    require_valid(d)
    return tuple(i for i, e in enumerate(d.events) if e.width == 2)


def restrict(d: WiringDiagram, keep: Iterable[int]) -> WiringDiagram:
    """Drop every wire not in ``keep`` and relabel the rest ``1 .. |keep|``.

    Kept wires keep their relative order, so the kept part of each block is
    contiguous after restriction; events left with fewer than two kept wires
    disappear.  The result is always valid.
    """
    require_valid(d)
    kept = sorted(set(keep))
    if not kept:
        raise ValueError("keep set must contain at least one wire")
    if kept[0] < 1 or kept[-1] > d.n:
        raise ValueError(f"keep set {kept} leaves wire range 1..{d.n}")
    relabel = {w: i + 1 for i, w in enumerate(kept)}
    order = list(range(1, d.n + 1))
    events: list[Event] = []
    for e in d.events:
        block = order[e.top : e.top + e.width]
        inside = [w for w in block if w in relabel]
        if len(inside) >= 2:
            above = sum(1 for w in order[: e.top] if w in relabel)
            events.append(Event(above, len(inside)))
        order[e.top : e.top + e.width] = reversed(block)
    return WiringDiagram(len(kept), tuple(events))


def trivial_pencil(n: int) -> WiringDiagram:
    """The arrangement in which all ``n`` wires cross at a single point."""
    if n < 2:
        raise ValueError(f"a pencil needs at least 2 wires, got {n}")
    return WiringDiagram(n, (Event(0, n),))


def random_simple(n: int, seed: int) -> WiringDiagram:
    """Uniform-ish random simple arrangement via random adjacent swaps.

    Repeatedly picks a random adjacent pair that has not crossed yet (an
    ascent of the current order) until the order is fully reversed.
    Deterministic for a fixed ``(n, seed)``.
    """
    if n < 1:
        raise ValueError(f"need at least one wire, got n={n}")
    rng = random.Random(seed)
    order = list(range(1, n + 1))
    events: list[Event] = []
    while True:
        ascents = [i for i in range(n - 1) if order[i] < order[i + 1]]
        if not ascents:
            break
        i = rng.choice(ascents)
        order[i], order[i + 1] = order[i + 1], order[i]
        events.append(Event(i, 2))
    return WiringDiagram(n, tuple(events))


def _candidate_events(
    order: Sequence[int], crossed: set[tuple[int, int]]
) -> list[tuple[int, int]]:
    """All blocks (top, width) whose wire pairs are still uncrossed."""
    out: list[tuple[int, int]] = []
    n = len(order)
    for p in range(n - 1):
        for k in range(2, n - p + 1):
            w = order[p + k - 1]
            if all(_pair(w, u) not in crossed for u in order[p : p + k - 1]):
                out.append((p, k))
            else:
                break  # wider blocks contain the same crossed pair
    return out


def random_diagram(n: int, seed: int, wide_prob: float = 0.3) -> WiringDiagram:
    """Random valid diagram, possibly non-simple.

    At every step one valid event is drawn; with probability ``wide_prob`` a
    block of width at least 3 is preferred when one is available.  Completion
    is guaranteed: while pairs remain uncrossed, some adjacent pair is still
    uncrossed (otherwise the order would already be fully reversed).
    """
    if n < 1:
        raise ValueError(f"need at least one wire, got n={n}")
    rng = random.Random(seed)
    order = list(range(1, n + 1))
    crossed: set[tuple[int, int]] = set()
    total = n * (n - 1) // 2
    events: list[Event] = []
    while len(crossed) < total:
        cands = _candidate_events(order, crossed)
        wide = [c for c in cands if c[1] >= 3]
        narrow = [c for c in cands if c[1] == 2]
        if wide and (not narrow or rng.random() < wide_prob):
            p, k = rng.choice(wide)
        else:
            p, k = rng.choice(narrow)
        block = order[p : p + k]
        crossed.update(_pair(a, b) for a, b in combinations(block, 2))
        order[p : p + k] = reversed(block)
        events.append(Event(p, k))
    return WiringDiagram(n, tuple(events))


def random_nonsimple(n: int, seed: int, wide_prob: float = 0.35) -> WiringDiagram:
    """Random valid diagram containing at least one crossing of degree >= 3."""
    if n < 3:
        raise ValueError(f"non-simple diagrams need n >= 3, got {n}")
    for attempt in range(64):
        d = random_diagram(n, seed * 1000003 + attempt, wide_prob)
        if not d.is_simple:
            return d
    raise RuntimeError(f"no non-simple diagram found for n={n}, seed={seed}")


def reflect_top_bottom(d: WiringDiagram) -> WiringDiagram:
    """Mirror the diagram about a horizontal axis (slot ``p`` becomes ``n - p - k``)."""
    return WiringDiagram(
        d.n, tuple(Event(d.n - e.top - e.width, e.width) for e in d.events)
    )


def reflect_left_right(d: WiringDiagram) -> WiringDiagram:
    """Mirror the diagram about a vertical axis (events replayed right to left)."""
    return WiringDiagram(d.n, tuple(reversed(d.events)))


def canonical_form(d: WiringDiagram) -> WiringDiagram:
    """Lexicographically smallest of the four reflection images of ``d``.

    Deduplicates mirror pairs during searches; it is not a full isomorphism
    test and is not meant to be one.
    """
    tb = reflect_top_bottom(d)
    images = (d, tb, reflect_left_right(d), reflect_left_right(tb))
    return min(images, key=lambda x: x.events)


def enumerate_diagrams(n: int, canonical: bool = False) -> Iterator[WiringDiagram]:
    """Yield every valid event sequence on ``n`` wires exactly once.

    Raw sequences by default; with ``canonical=True`` only diagrams equal to
    their :func:`canonical_form` are emitted.  Bounded to ``n <= 6`` because
    the count grows super-exponentially.

    >>> sum(1 for _ in enumerate_diagrams(3))
    3
    """
    if not 1 <= n <= 6:
        raise ValueError(f"enumeration is practical only for 1 <= n <= 6, got {n}")
    total = n * (n - 1) // 2
    order = list(range(1, n + 1))
    crossed: set[tuple[int, int]] = set()
    events: list[Event] = []

    def rec() -> Iterator[WiringDiagram]:
        if len(crossed) == total:
            d = WiringDiagram(n, tuple(events))
            if not canonical or d.events == canonical_form(d).events:
                yield d
            return
        for p, k in _candidate_events(order, crossed):
            block = order[p : p + k]
            fresh = [_pair(a, b) for a, b in combinations(block, 2)]
            crossed.update(fresh)
            order[p : p + k] = reversed(block)
            events.append(Event(p, k))
            yield from rec()
            events.pop()
            order[p : p + k] = reversed(order[p : p + k])
            crossed.difference_update(fresh)

    yield from rec()
