"""Wiring diagrams: one crossing per row, wires traced by simulation.

Rows are numbered 1..l from the top.  Row j carries the single crossing of
the diagram in column i_j, swapping the wires at positions i_j, i_j+1.  For
a reduced word of the longest element, wire j ends at point n+2-j, any two
wires cross exactly once, and the crossings met by wire 1 (resp. wire n+1)
read the letters 1..n (resp. n..1); those two rows of crossings are an
independent route to the ascending and descending chains of the word poset.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .word_poset import WordPoset, from_relations
from .words import DomainError, Word, is_reduced, longest_element, perm_of_word


@dataclass(frozen=True)
class WiringDiagram:
    n: int
    rows: tuple[int, ...]  # rows[j-1] = column of the crossing in row j

    def __post_init__(self):
        for row, col in enumerate(self.rows, start=1):
            if not 1 <= col <= self.n:
                raise DomainError(f"crossing column {col} in row {row} out of range")

    @property
    def length(self) -> int:
        return len(self.rows)

    @cached_property
    def wires(self) -> tuple[tuple[int, ...], ...]:
        """wires[j-1] lists the rows where wire j crosses, top to bottom."""
        arrangement = list(range(1, self.n + 2))
        met: list[list[int]] = [[] for _ in range(self.n + 1)]
        for row, col in enumerate(self.rows, start=1):
            u, v = arrangement[col - 1], arrangement[col]
            met[u - 1].append(row)
            met[v - 1].append(row)
            arrangement[col - 1], arrangement[col] = v, u
        return tuple(tuple(rows) for rows in met)

    @cached_property
    def end_points(self) -> tuple[int, ...]:
        """end_points[j-1] = ending point of wire j."""
        arrangement = list(range(1, self.n + 2))
        for col in self.rows:
            arrangement[col - 1], arrangement[col] = (
                arrangement[col],
                arrangement[col - 1],
            )
        ends = [0] * (self.n + 1)
        for position, wire in enumerate(arrangement, start=1):
            ends[wire - 1] = position
        return tuple(ends)


def wiring_of_word(w: Word) -> WiringDiagram:
    """The diagram whose row j crosses in column i_j."""
    return WiringDiagram(w.rank, w.letters)


def chains_from_wires(w: Word) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Rows of the crossings on wire 1 and on wire n+1.

    The two row sets locate the ascending and descending chains of the word
    poset (elements = positions).  Only defined on reduced words of the
    longest element.

    >>> chains_from_wires(Word(3, (1, 2, 1, 3, 2, 1)))
    ((1, 2, 4), (4, 5, 6))
    """
    n = w.rank
    if not is_reduced(w) or perm_of_word(w) != longest_element(n + 1):
        raise DomainError(f"{w} is not a reduced word of the longest element")
    diagram = wiring_of_word(w)
    a_rows = diagram.wires[0]
    d_rows = diagram.wires[n]
    letters = w.letters
    assert tuple(letters[r - 1] for r in a_rows) == tuple(range(1, n + 1))
    assert tuple(letters[r - 1] for r in d_rows) == tuple(range(n, 0, -1))
    return a_rows, d_rows


def poset_of_wiring(diagram: WiringDiagram) -> WordPoset:
    """Order the crossings by downward paths: a crossing precedes every later
    crossing on either of its wires, transitively.  For the diagram of a
    reduced word this is the word poset (elements = rows)."""
    relations = []
    for rows in diagram.wires:
        relations.extend(zip(rows, rows[1:]))
    return from_relations(diagram.rows, sorted(set(relations)))


def render_ascii(diagram: WiringDiagram) -> str:
    """One text line per row: '|' for wires running straight, 'X' between the
    two positions being swapped."""
    lines = []
    for col in diagram.rows:
        chars = ["|" if k % 2 == 0 else " " for k in range(2 * diagram.n + 1)]
        chars[2 * col - 2] = " "
        chars[2 * col - 1] = "X"
        chars[2 * col] = " "
        lines.append("".join(chars).rstrip())
    return "\n".join(lines) + "\n"


def render_dot(diagram: WiringDiagram) -> str:
    """Crossings on a (row, column) grid, one subgraph per row, with edges
    joining consecutive crossings along each wire."""
    lines = ["digraph wiring {", "  node [shape=point];"]
    for row, col in enumerate(diagram.rows, start=1):
        lines.append(f"  subgraph row{row} {{ c{row} [pos=\"{col},{-row}!\"]; }}")
    edges = set()
    for rows in diagram.wires:
        edges.update(zip(rows, rows[1:]))
    for a, b in sorted(edges):
        lines.append(f"  c{a} -> c{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
