"""Transition counts and positions straight from run-length rows.

Horizontal transitions are read off the run columns: a non-zero run at an
even 1-based column is a 0->1 transition, a non-zero run at an odd column
other than the first is a 1->0 transition.  Its pixel position is the sum of
all preceding runs plus one.  A row starting with ink therefore has a 0->1
transition at position 1; a row ending with ink has no closing 1->0.

Vertical transitions need pixels column by column, which the row-wise
encoding does not store.  ``virtual_decompress`` pulls one pixel per row per
pass by decrementing the leading run of each row (pop), and skipping an
exhausted pair of runs first when both are zero (shift-pop).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .rle import RLEDocument, RLERow


@dataclass
class LineTransitions:
    count01: int = 0
    count10: int = 0
    pos01: list[int] = field(default_factory=list)
    pos10: list[int] = field(default_factory=list)


@dataclass
class TransitionSet:
    """Per-line transition records.

    ``n`` is the length of each line in pixels and ``m`` the number of lines;
    for column sets these are the image height and width respectively.
    """

    lines: list[LineTransitions]
    n: int
    m: int


def count_transitions(row: RLERow) -> tuple[int, int]:
    runs = row.runs
    count01 = count10 = 0
    for i in range(1, len(runs)):
        if runs[i]:
            if i & 1:
                count01 += 1
            else:
                count10 += 1
    return count01, count10


def transition_positions(row: RLERow) -> tuple[list[int], list[int]]:
    runs = row.runs
    pos01: list[int] = []
    pos10: list[int] = []
    offset = runs[0]
    for i in range(1, len(runs)):
        r = runs[i]
        if r:
            if i & 1:
                pos01.append(offset + 1)
            else:
                pos10.append(offset + 1)
        offset += r
    return pos01, pos10


def row_transition_sets(doc: RLEDocument) -> TransitionSet:
    lines = []
    for row in doc.rows:
        pos01, pos10 = transition_positions(row)
        lines.append(LineTransitions(len(pos01), len(pos10), pos01, pos10))
    return TransitionSet(lines, doc.width, doc.height)


class VirtualCursor:
    """Pull pixels one at a time out of a single run-length row.

    ``index`` always points at a 0-run column (0-based even index), with
    ``zero_left`` and ``one_left`` the unconsumed parts of that run pair.
    """

    __slots__ = ("runs", "index", "zero_left", "one_left", "emitted")

    def __init__(self, row: RLERow | tuple[int, ...]):
        runs = row.runs if isinstance(row, RLERow) else tuple(row)
        self.runs = runs
        self.index = 0
        self.zero_left = runs[0]
        self.one_left = runs[1] if len(runs) > 1 else 0
        self.emitted = 0

    @property
    def terminal(self) -> bool:
        return self.zero_left == 0 and self.one_left == 0 and self.index + 2 >= len(self.runs)

    def step(self) -> tuple[int, bool]:
        """Emit the next pixel; returns ``(bit, shifted)``."""
        shifted = False
        if self.zero_left == 0 and self.one_left == 0:
            i = self.index + 2
            if i >= len(self.runs):
                raise IndexError("row exhausted")
            # shift by two keeps the 0/1 role of every remaining column
            self.index = i
            self.zero_left = self.runs[i]
            self.one_left = self.runs[i + 1] if i + 1 < len(self.runs) else 0
            shifted = True
        self.emitted += 1
        if self.zero_left:
            self.zero_left -= 1
            return 0, shifted
        self.one_left -= 1
        return 1, shifted

    def pop(self) -> int:
        if self.zero_left:
            self.zero_left -= 1
        elif self.one_left:
            self.one_left -= 1
            self.emitted += 1
            return 1
        else:
            return self.step()[0]
        self.emitted += 1
        return 0

    def state(self) -> list[int]:
        """Remaining run values from the current column onward."""
        if self.index + 1 >= len(self.runs):
            return [self.zero_left]
        return [self.zero_left, self.one_left, *self.runs[self.index + 2:]]


def virtual_decompress(doc: RLEDocument) -> Iterator[tuple[int, ...]]:
    """Yield ``doc.width`` passes, each holding one pixel per row top to bottom.

    Pass ``p`` carries column ``p`` of the image; nothing larger than one
    column is ever materialised.
    """
    pops = [VirtualCursor(r).pop for r in doc.rows]
    for _ in range(doc.width):
        yield tuple([pop() for pop in pops])


def column_major_stream(doc: RLEDocument) -> Iterator[int]:
    for column in virtual_decompress(doc):
        yield from column


@dataclass(frozen=True)
class TraceStep:
    pass_no: int
    line: int
    bit: int
    runs: tuple[int, ...]
    status: str


def trace_virtual_decompression(doc: RLEDocument, passes: int | None = None) -> list[TraceStep]:
    """Record every pop of the first ``passes`` passes (all passes by default)."""
    if passes is None:
        passes = doc.width
    passes = min(passes, doc.width)
    cursors = [VirtualCursor(r) for r in doc.rows]
    steps = []
    for p in range(1, passes + 1):
        for line, c in enumerate(cursors, start=1):
            bit, shifted = c.step()
            steps.append(TraceStep(p, line, bit, tuple(c.state()),
                                   "shift-pop" if shifted else "pop"))
    return steps


def column_transition_sets(doc: RLEDocument) -> TransitionSet:
    """Transitions down each column, gathered from the virtual decompression stream."""
    lines = []
    for column in virtual_decompress(doc):
        rec = LineTransitions()
        prev = 0
        for pos, bit in enumerate(column, start=1):
            if bit != prev:
                if bit:
                    rec.pos01.append(pos)
                else:
                    rec.pos10.append(pos)
                prev = bit
        rec.count01 = len(rec.pos01)
        rec.count10 = len(rec.pos10)
        lines.append(rec)
    return TransitionSet(lines, doc.height, doc.width)
