"""Text formats for diagrams, colorings and search reports.

Diagram format (``.wd``): first non-comment line holds the wire count, each
following line one event as ``top width``; ``#`` starts a comment.  The
inline form packs the same data into one token, ``n:top width,top width,...``
(``n:`` alone for an event-free diagram).

Coloring format: header ``mode n K`` (mode word, wire count, palette size),
then one ``index color`` line per item; crossings are indexed from 0 in
event order, wires by their labels ``1 .. n``.

Report format: deterministic line-oriented text with one ``witness`` record
per found diagram.  Wall-clock figures are deliberately left out so that
identical runs serialize identically.
"""

from __future__ import annotations

from .coloring import Coloring
from .diagram import Event, WiringDiagram
from .oracles import SearchReport

__all__ = [
    "ParseError",
    "format_diagram",
    "parse_diagram",
    "format_inline",
    "parse_inline",
    "format_coloring",
    "parse_coloring",
    "format_report",
]


class ParseError(ValueError):
    """Malformed input text."""


def format_diagram(d: WiringDiagram) -> str:
    lines = [str(d.n)]
    lines.extend(f"{e.top} {e.width}" for e in d.events)
    return "\n".join(lines) + "\n"


def parse_diagram(text: str) -> WiringDiagram:
    rows: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: expected integers, got {raw!r}") from exc
    if not rows:
        raise ParseError("no wire count found")
    if len(rows[0]) != 1:
        raise ParseError(f"first line must hold the wire count alone, got {rows[0]}")
    n = rows[0][0]
    events = []
    for row in rows[1:]:
        if len(row) != 2:
            raise ParseError(f"event lines must hold 'top width', got {row}")
        events.append((row[0], row[1]))
    try:
        return WiringDiagram(n, tuple(events))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_inline(d: WiringDiagram) -> str:
    return f"{d.n}:" + ",".join(f"{e.top} {e.width}" for e in d.events)


def parse_inline(token: str) -> WiringDiagram:
    head, _, rest = token.partition(":")
    try:
        n = int(head)
    except ValueError as exc:
        raise ParseError(f"bad inline diagram {token!r}") from exc
    events = []
    if rest:
        for part in rest.split(","):
            try:
                top, width = (int(t) for t in part.split())
            except ValueError as exc:
                raise ParseError(f"bad inline event {part!r}") from exc
            events.append(Event(top, width))
    try:
        return WiringDiagram(n, tuple(events))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_coloring(coloring: Coloring, n: int) -> str:
    lines = [f"{coloring.mode} {n} {coloring.num_colors}"]
    start = 1 if coloring.mode == "line" else 0
    lines.extend(
        f"{i + start} {c}" for i, c in enumerate(coloring.colors)
    )
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> tuple[Coloring, int]:
    """Parse a coloring file; returns the coloring and the declared wire count."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise ParseError("empty coloring file")
    header = rows[0][1].split()
    if len(header) != 3 or header[0] not in ("crossing", "line"):
        raise ParseError(f"bad coloring header {rows[0][1]!r}")
    mode = header[0]
    try:
        n, k = int(header[1]), int(header[2])
    except ValueError as exc:
        raise ParseError(f"bad coloring header {rows[0][1]!r}") from exc
    entries: dict[int, int] = {}
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'index color', got {line!r}")
        try:
            idx, color = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: expected integers") from exc
        if idx in entries:
            raise ParseError(f"line {lineno}: duplicate index {idx}")
        entries[idx] = color
    start = 1 if mode == "line" else 0
    expected = set(range(start, start + len(entries)))
    if set(entries) != expected:
        raise ParseError(f"item indices must cover {min(expected, default=start)}..")
    if mode == "line" and len(entries) != n:
        raise ParseError(f"line coloring must cover all {n} wires")
    colors = tuple(entries[i] for i in sorted(entries))
    try:
        coloring = Coloring(mode, colors)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if coloring.num_colors != k:
        raise ParseError(
            f"header promises {k} colors but {coloring.num_colors} are used"
        )
    return coloring, n


def format_report(report: SearchReport) -> str:
    """Serialize a scan report; deterministic for identical scan parameters."""
    lines = [
        f"kind {report.kind}",
        f"n {report.n}",
        f"examined {report.examined}",
    ]
    for value, count in sorted(report.distribution.items()):
        lines.append(f"count {value} {count}")
    if report.exceeded:
        lines.append(f"exceeded-cap {report.exceeded}")
    if report.max_gap is not None:
        lines.append(f"max-gap {report.max_gap}")
    for w in report.witnesses:
        minimum = "?" if w.minimum is None else str(w.minimum)
        record = f"witness {format_inline(w.diagram)} {w.mode} {minimum}"
        if w.gap is not None:
            record += f" gap={w.gap}"
        lines.append(record)
    lines.append(f"last-index {report.last_index}")
    return "\n".join(lines) + "\n"
