"""Exact coloring search shared by the coloring algorithms and the oracles.

Backtracking with dynamic most-saturated-first variable choice and canonical
color introduction (an item may use at most one color index beyond those
already in use), which breaks color-permutation symmetry.  Two constraint
kinds are supported: binary conflicts (endpoints must differ) and
not-all-equal hyperedges (the edge must not become monochromatic).
"""

from __future__ import annotations

from typing import Optional, Sequence

__all__ = ["color_items"]


def color_items(
    n_items: int,
    conflicts: Sequence[Sequence[int]],
    nae_edges: Sequence[Sequence[int]],
    max_colors: int,
) -> Optional[list[int]]:
    """Color ``n_items`` with at most ``max_colors`` colors, or return None.

    ``conflicts[i]`` lists the items that must differ from item ``i``;
    ``nae_edges`` lists item groups that must not be monochromatic.
    """
    if n_items == 0:
        return []
    if max_colors < 1:
        return None
    colors = [-1] * n_items
    edges_of: list[list[int]] = [[] for _ in range(n_items)]
    for e, edge in enumerate(nae_edges):
        for i in edge:
            edges_of[i].append(e)

    def allowed(item: int, c: int) -> bool:
        for j in conflicts[item]:
            if colors[j] == c:
                return False
        for e in edges_of[item]:
            if all(colors[j] == c for j in nae_edges[e] if j != item):
                return False
        return True

    def pick() -> int:
        best, best_key = -1, (-1, -1, 0)
        for i in range(n_items):
            if colors[i] != -1:
                continue
            sat = len({colors[j] for j in conflicts[i] if colors[j] != -1})
            key = (sat, len(conflicts[i]) + len(edges_of[i]), -i)
            if key > best_key:
                best, best_key = i, key
        return best

    def extend(remaining: int, used: int) -> bool:
        if remaining == 0:
            return True
        item = pick()
        for c in range(min(used + 1, max_colors)):
            if allowed(item, c):
                colors[item] = c
                if extend(remaining - 1, max(used, c + 1)):
                    return True
                colors[item] = -1
        return False

    return colors if extend(n_items, 0) else None
