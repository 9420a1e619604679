"""Arrangement constructions with prescribed extremal properties.

Everything here is assembled purely combinatorially, as event sequences:
wires are moved one block reversal at a time by a small script helper, and
every finished diagram is checked for validity before it is returned.
"""

from __future__ import annotations

from itertools import combinations

from .diagram import Event, Graph, WiringDiagram, require_valid

__all__ = [
    "polygon_cell_arrangement",
    "twisted_bundles",
    "chromatic_gap_arrangement",
    "graph_coloring_reduction",
]


class _Script:
    """Builds an event sequence by naming wires instead of slots.

    Wires carry opaque names; initial top-to-bottom order fixes the final
    labels ``1 .. n``.  ``reverse(names)`` asserts the named wires form a
    contiguous block in the current order and emits the reversing event.
    """

    def __init__(self, names: list) -> None:
        self.order = list(names)
        self.start = list(names)
        self.events: list[Event] = []

    def pos(self, name) -> int:
        return self.order.index(name)

    def reverse(self, names: list) -> None:
        ixs = sorted(self.pos(x) for x in names)
        lo, hi = ixs[0], ixs[-1]
        if ixs != list(range(lo, hi + 1)):
            raise AssertionError(f"block {names} is not contiguous: slots {ixs}")
        self.order[lo : hi + 1] = reversed(self.order[lo : hi + 1])
        self.events.append(Event(lo, hi - lo + 1))

    def swap(self, a, b) -> None:
        self.reverse([a, b])

    def build(self) -> WiringDiagram:
        d = WiringDiagram(len(self.start), tuple(self.events))
        require_valid(d)
        return d


def polygon_cell_arrangement(n: int) -> WiringDiagram:
    """Simple arrangement of ``n`` wires with a cell carrying ``n`` boundary crossings.

    Models the side lines of a convex polygon: ``n - 1`` chain lines with
    increasing slopes whose upper envelope traces the polygon bottom, plus
    one closing line that cuts across the whole chain.  The closing wire
    first climbs to the top, the chain lines then cross each other in sweep
    order underneath it, and finally the closing wire descends again; the
    gap just below it is the polygon cell.
    """
    if n < 3:
        raise ValueError(f"a polygon cell needs n >= 3, got {n}")
    chain = [("L", i) for i in range(n - 1)]
    closing = ("T", 0)
    rise = n // 2  # chain lines initially above the closing wire
    script = _Script(chain[:rise] + [closing] + chain[rise:])

    # Closing wire climbs past the chain lines above it, innermost first.
    for i in reversed(range(rise)):
        script.swap(closing, chain[i])
    # Chain-chain crossings in sweep order: pairs sorted by slope-index sum.
    for i, j in sorted(combinations(range(n - 1), 2), key=lambda ij: (sum(ij), ij[0])):
        script.swap(chain[i], chain[j])
    # Closing wire descends past the remaining chain lines, outermost first.
    for i in reversed(range(rise, n - 1)):
        script.swap(closing, chain[i])
    return script.build()


def _strip_sizes(n: int, k: int) -> list[int]:
    q, r = divmod(n, k)
    return [q + 1] * r + [q] * (k - r)


def twisted_bundles(k: int, n: int) -> WiringDiagram:
    """Arrangement of ``n`` wires in ``k`` strips with few ordinary points.

    Strips of near-equal size pairwise cross in a grid of ordinary points
    (the Turan-graph pattern); each strip is twisted in a single crossing
    placed on one wire of the next strip, so the twist absorbs one formerly
    ordinary crossing per twisted wire.  The result has exactly
    ``turan_number(n, k) - n`` ordinary points and is pseudoline-colorable
    with ``k`` colors (one color per strip).

    Supported when every strip has at least 2 wires and ``k >= 3``; the two
    degenerate shapes whose target count is zero, ``(k, n) = (2, 4)`` and
    ``(3, 3)``, are realized as the trivial pencil.  Other parameters are
    rejected: a pair of strips cannot both twist around each other without
    some wire pair crossing twice, and one-wire strips have nothing to
    twist, so the stated ordinary-point count is not realizable.
    """
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= n, got k={k}, n={n}")
    if (k, n) in ((2, 4), (3, 3)):
        return WiringDiagram(n, (Event(0, n),))
    sizes = _strip_sizes(n, k)
    if k == 2 or min(sizes) < 2:
        raise ValueError(
            f"twisted strips require k >= 3 and n >= 2k (all strips of size >= 2); "
            f"got k={k}, n={n}"
        )
    bundles = [[("w", b, i) for i in range(sizes[b])] for b in range(k)]
    script = _Script([w for bundle in bundles for w in bundle])

    def climb(wires: list, through: list) -> None:
        # Each wire rises past the block `through`, one ordinary swap at a time.
        for w in sorted(wires, key=script.pos):
            for other in sorted(through, key=script.pos, reverse=True):
                script.swap(w, other)

    # Strip b twists at its base crossing with strip b+1 (cyclically):
    # strips 0..k-2 while being passed by their successor, strip k-1 while
    # rising through strip 0.
    for riser in range(1, k):
        for passed in range(riser):
            if passed == riser - 1:
                # Passed strip twists, taking along the first riser wire
                # that reaches it.
                first = min(bundles[riser], key=script.pos)
                script.reverse(bundles[passed] + [first])
                climb([w for w in bundles[riser] if w is not first], bundles[passed])
            elif riser == k - 1 and passed == 0:
                # Last strip twists around the bottom wire of the top strip.
                bottom = max(bundles[passed], key=script.pos)
                script.reverse([bottom] + bundles[riser])
                climb(bundles[riser], [w for w in bundles[passed] if w is not bottom])
            else:
                climb(bundles[riser], bundles[passed])
    return script.build()


def chromatic_gap_arrangement(r: int) -> WiringDiagram:
    """``r`` strips of 3 wires whose pseudoline chromatic number doubles the ordinary one.

    Every strip is twisted in its own crossing of degree 3, and different
    strips cross in ordinary points only, so the ordinary graph is the
    complete ``r``-partite graph with parts of size 3 while each strip alone
    already needs two colors.
    """
    if r < 1:
        raise ValueError(f"need r >= 1 strips, got {r}")
    bundles = [[("w", b, i) for i in range(3)] for b in range(r)]
    script = _Script([w for bundle in bundles for w in bundle])
    for bundle in bundles:
        script.reverse(bundle)
    for riser in range(1, r):
        for passed in range(riser):
            for w in sorted(bundles[riser], key=script.pos):
                for other in sorted(bundles[passed], key=script.pos, reverse=True):
                    script.swap(w, other)
    return script.build()


def graph_coloring_reduction(g: Graph) -> WiringDiagram:
    """Arrangement whose pseudoline chromatic number pins down ``chi(g)`` within 2.

    Starting from a simple staircase arrangement of one base wire per graph
    vertex, every non-edge ``{i, j}`` gets an extra wire through the base
    crossing of ``i`` and ``j`` (making it a degree-3 crossing), all extra
    wires meet one further wire at a single shared crossing, and that last
    wire crosses every base wire in an ordinary point.  The diagram has
    ``n + C(n, 2) - m + 1`` wires for a graph with ``n`` vertices and ``m``
    edges, and its pseudoline colorings need ``chi(g) + 1`` or ``chi(g) + 2``
    colors.
    """
    if g.n < 2:
        raise ValueError(f"reduction needs at least 2 vertices, got {g.n}")
    edge_set = set(g.edges)
    base = [("l", v) for v in range(1, g.n + 1)]

    # Non-edges in the order their base crossings occur in the staircase.
    nonedges: list[tuple[int, int]] = []
    for riser in range(2, g.n + 1):
        for other in range(1, riser):
            if (other, riser) not in edge_set:
                nonedges.append((other, riser))
    verticals = {ne: ("v",) + ne for ne in nonedges}
    apex = ("apex",)

    stack = [apex] + [verticals[ne] for ne in nonedges] + base
    script = _Script(stack)

    # Shared crossing of the apex wire with all non-edge wires.
    if nonedges:
        script.reverse([apex] + [verticals[ne] for ne in nonedges])
    # Apex wire descends through the base block in ordinary crossings.
    for v in base:
        script.swap(apex, v)
    # Base staircase; each non-edge crossing absorbs its vertical wire,
    # which dives through the remaining base wires and parks below them.
    for riser in range(2, g.n + 1):
        rw = base[riser - 1]
        for other in range(1, riser):
            ow = base[other - 1]
            if (other, riser) in edge_set:
                script.swap(rw, ow)
            else:
                vee = verticals[(other, riser)]
                # Dive: cross base wires above the pair in ordinary points.
                while script.pos(vee) < script.pos(ow) - 1:
                    script.swap(vee, script.order[script.pos(vee) + 1])
                script.reverse([vee, ow, rw])
                # Continue past the base wires below, then park.
                while True:
                    below = script.order[script.pos(vee) + 1]
                    if below[0] != "l":
                        break
                    script.swap(vee, below)
    return script.build()
