"""Row-wise run-length representation of bilevel images.

Each row is stored as alternating run-lengths starting with a run of
background (0) pixels, which is zero when the row starts with ink.  Runs at
odd 1-based columns count 0-pixels, runs at even columns count 1-pixels.

Canonical form: only the first run may be zero, and nothing is stored after
the last real run, so every row has exactly one encoding.

The ``.rld`` text format is::

    RLD1 <width> <height>
    <runs of row 1, space separated>
    ...
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate, chain
from typing import Sequence

import numpy as np

from .errors import RLEValidationError
from .image_io import MAX_DIMENSION, BinaryImage

RLD_MAGIC = "RLD1"


def _check_runs(runs: Sequence[int], width: int) -> None:
    if not runs:
        raise RLEValidationError("row has no runs")
    try:
        total = sum(runs)
        ok = (type(total) is int and total == width and width > 0 and min(runs) >= 0
              and (len(runs) == 1 or min(runs[1:]) > 0))
    except TypeError:
        ok = False
    if ok:
        return
    # slow path: locate the offending run
    total = 0
    for i, r in enumerate(runs):
        if not isinstance(r, int) or r < 0:
            raise RLEValidationError(f"run {r!r} is not a non-negative integer", i)
        if r == 0 and i > 0:
            raise RLEValidationError("only the first run may be zero", i)
        total += r
    if len(runs) == 1 and runs[0] == 0:
        raise RLEValidationError("row of zero width", 0)
    raise RLEValidationError(
        f"runs sum to {total}, expected width {width}", len(runs) - 1
    )


@dataclass(frozen=True)
class RLERow:
    runs: tuple[int, ...]
    width: int

    def __post_init__(self):
        if not isinstance(self.runs, tuple):
            object.__setattr__(self, "runs", tuple(self.runs))
        _check_runs(self.runs, self.width)

    @property
    def k(self) -> int:
        """Number of stored runs."""
        return len(self.runs)

    def padded(self, columns: int) -> list[int]:
        """Zero-padded display form used by the rectangular run-table printer."""
        return list(self.runs) + [0] * (columns - len(self.runs))


@dataclass(frozen=True)
class RLEDocument:
    rows: tuple[RLERow, ...]
    width: int
    height: int

    def __post_init__(self):
        if not isinstance(self.rows, tuple):
            object.__setattr__(self, "rows", tuple(self.rows))
        if self.height < 1 or self.height != len(self.rows):
            raise RLEValidationError(
                f"height {self.height} does not match {len(self.rows)} rows"
            )
        if not 1 <= self.width <= MAX_DIMENSION:
            raise RLEValidationError(f"invalid width {self.width}")
        for i, row in enumerate(self.rows):
            if row.width != self.width:
                raise RLEValidationError(
                    f"row {i} has width {row.width}, document width {self.width}"
                )

    @classmethod
    def from_runs(cls, runs: Sequence[Sequence[int]], width: int | None = None) -> "RLEDocument":
        """Build a document from plain run lists; width defaults to the first row's sum."""
        if not runs:
            raise RLEValidationError("document needs at least one row")
        if width is None:
            width = sum(runs[0])
        return cls(tuple(RLERow(tuple(r), width) for r in runs), width, len(runs))


def encode_row(bits: Sequence[int]) -> RLERow:
    """Encode one row of 0/1 pixels as canonical alternating run-lengths."""
    data = bits if isinstance(bits, bytes) else bytes(bits)
    n = len(data)
    if n == 0:
        raise RLEValidationError("cannot encode an empty row")
    if data.translate(None, b"\x00\x01"):
        raise RLEValidationError("pixel values must be 0 or 1")
    runs = []
    append = runs.append
    find = data.find
    pos = 0
    while True:
        nxt = find(b"\x01", pos)
        if nxt < 0:
            append(n - pos)
            break
        append(nxt - pos)
        pos = find(b"\x00", nxt)
        if pos < 0:
            append(n - nxt)
            break
        append(pos - nxt)
    return RLERow(tuple(runs), n)


def decode_row(row: RLERow) -> bytes:
    _check_runs(row.runs, row.width)
    out = bytearray(row.width)
    ends = list(accumulate(row.runs))
    # only ink runs need writing; starts are the ends of the preceding 0-runs
    for start, end in zip(ends[0::2], ends[1::2]):
        out[start:end] = b"\x01" * (end - start)
    return bytes(out)


def encode_image(img: BinaryImage) -> RLEDocument:
    """Row-wise ``encode_row`` over the whole image, vectorised."""
    w, h = img.width, img.height
    px = np.frombuffer(img.pixels, dtype=np.uint8).reshape(h, w)
    # background column in front, sentinel 2 behind: every row ends in a change
    padded = np.empty((h, w + 2), dtype=np.uint8)
    padded[:, 0] = 0
    padded[:, 1:-1] = px
    padded[:, -1] = 2
    rows, cols = np.nonzero(padded[:, 1:] != padded[:, :-1])
    prev = np.empty_like(cols)
    prev[0] = 0
    prev[1:] = cols[:-1]
    prev[np.flatnonzero(np.diff(rows)) + 1] = 0
    runs = (cols - prev).tolist()
    counts = np.bincount(rows, minlength=h).tolist()
    out = []
    start = 0
    for k in counts:
        out.append(RLERow(tuple(runs[start:start + k]), w))
        start += k
    return RLEDocument(tuple(out), w, h)


def decode_image(doc: RLEDocument) -> BinaryImage:
    """Row-wise ``decode_row`` over the whole document, vectorised."""
    for row in doc.rows:
        _check_runs(row.runs, row.width)
    ks = np.fromiter((r.k for r in doc.rows), dtype=np.int64, count=doc.height)
    runs = np.fromiter(chain.from_iterable(r.runs for r in doc.rows), dtype=np.int64,
                       count=int(ks.sum()))
    row_start = np.repeat(np.cumsum(ks) - ks, ks)
    values = ((np.arange(runs.size) - row_start) & 1).astype(np.uint8)
    return BinaryImage(doc.width, doc.height, np.repeat(values, runs).tobytes())


@dataclass(frozen=True)
class CompressionStats:
    max_k: int
    mean_k: float
    ratio: float


def compression_stats(doc: RLEDocument) -> CompressionStats:
    """Longest row, mean stored runs per row, and pixels per stored run."""
    ks = [r.k for r in doc.rows]
    total = sum(ks)
    return CompressionStats(
        max_k=max(ks),
        mean_k=total / len(ks),
        ratio=(doc.width * doc.height) / total,
    )


# --- .rld ----------------------------------------------------------------------

def dumps_rld(doc: RLEDocument) -> str:
    lines = [f"{RLD_MAGIC} {doc.width} {doc.height}"]
    lines.extend(" ".join(map(str, r.runs)) for r in doc.rows)
    return "\n".join(lines) + "\n"


def loads_rld(text: str | bytes) -> RLEDocument:
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise RLEValidationError(f"non-ASCII .rld data at byte {exc.start}") from None
    lines = text.splitlines()
    if not lines:
        raise RLEValidationError("empty .rld data")
    header = lines[0].split()
    if len(header) != 3 or header[0] != RLD_MAGIC:
        raise RLEValidationError(f"bad .rld header {lines[0]!r}")
    try:
        width, height = int(header[1]), int(header[2])
    except ValueError:
        raise RLEValidationError(f"bad .rld dimensions in {lines[0]!r}") from None
    if not (1 <= width <= MAX_DIMENSION and 1 <= height <= MAX_DIMENSION):
        raise RLEValidationError(f"invalid .rld dimensions {width}x{height}")
    body = lines[1:]
    if len(body) != height:
        raise RLEValidationError(f"expected {height} rows, found {len(body)}")
    rows = []
    for lineno, line in enumerate(body, start=2):
        try:
            runs = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise RLEValidationError(f"line {lineno}: non-integer run") from None
        try:
            rows.append(RLERow(runs, width))
        except RLEValidationError as exc:
            raise RLEValidationError(f"line {lineno}: {exc}") from None
    return RLEDocument(tuple(rows), width, height)
