"""Binary images: construction, PBM (P1/P4) reading and writing.

Pixel polarity is 1 = ink (PBM black), 0 = background.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from .errors import PBMParseError, RLEntropyError

MAX_DIMENSION = 2**31 - 1
_WHITESPACE = b" \t\r\n\v\f"
_P1_LINE_PIXELS = 35  # keeps plain-PBM lines under 70 characters


@dataclass(frozen=True)
class BinaryImage:
    """Dense row-major bilevel image.

    ``pixels`` holds ``width * height`` bytes, each 0 or 1.
    """

    width: int
    height: int
    pixels: bytes

    def __post_init__(self):
        if not (1 <= self.width <= MAX_DIMENSION) or not (1 <= self.height <= MAX_DIMENSION):
            raise RLEntropyError(f"invalid image size {self.width}x{self.height}")
        if not isinstance(self.pixels, bytes):
            object.__setattr__(self, "pixels", bytes(self.pixels))
        if len(self.pixels) != self.width * self.height:
            raise RLEntropyError(
                f"pixel count {len(self.pixels)} != {self.width}*{self.height}"
            )
        if self.pixels.translate(None, b"\x00\x01"):
            raise RLEntropyError("pixel values must be 0 or 1")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BinaryImage":
        if not rows:
            raise RLEntropyError("image needs at least one row")
        width = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != width:
                raise RLEntropyError(f"row {i} has length {len(r)}, expected {width}")
        return cls(width, len(rows), b"".join(bytes(r) for r in rows))

    @classmethod
    def blank(cls, width: int, height: int) -> "BinaryImage":
        return cls(width, height, bytes(width * height))

    def row(self, index: int) -> bytes:
        start = index * self.width
        return self.pixels[start:start + self.width]

    def rows(self) -> Iterable[bytes]:
        n = self.width
        px = self.pixels
        for start in range(0, len(px), n):
            yield px[start:start + n]

    def column(self, index: int) -> bytes:
        return self.pixels[index::self.width]

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        return self.pixels[r * self.width + c]

    def transpose(self) -> "BinaryImage":
        return BinaryImage(
            self.height, self.width,
            b"".join(self.column(c) for c in range(self.width)),
        )

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows()]


def from_ascii_art(lines: Sequence[str], ink: str = "1") -> BinaryImage:
    """Build an image from text rows; ``ink`` maps to 1, any other character to 0."""
    if len(ink) != 1:
        raise RLEntropyError("ink must be a single character")
    if not lines or not lines[0]:
        raise RLEntropyError("ascii art needs at least one non-empty line")
    width = len(lines[0])
    ragged = [i for i, line in enumerate(lines) if len(line) != width]
    if ragged:
        raise RLEntropyError(
            f"ragged ascii art: lines {ragged} differ from width {width}"
        )
    return BinaryImage(
        width, len(lines),
        bytes(1 if ch == ink else 0 for line in lines for ch in line),
    )


# --- PBM ---------------------------------------------------------------------

def _skip_ws_and_comments(data: bytes, pos: int) -> int:
    n = len(data)
    while pos < n:
        ch = data[pos]
        if ch in _WHITESPACE:
            pos += 1
        elif ch == ord("#"):
            while pos < n and data[pos] not in b"\r\n":
                pos += 1
        else:
            break
    return pos


def _read_dimension(data: bytes, pos: int, what: str) -> tuple[int, int]:
    pos = _skip_ws_and_comments(data, pos)
    start = pos
    while pos < len(data) and 48 <= data[pos] <= 57:
        pos += 1
    if pos == start:
        if pos >= len(data):
            raise PBMParseError(f"truncated header: missing {what}", pos)
        raise PBMParseError(f"expected decimal {what}", pos)
    # bound the digit count before int() so huge headers fail fast
    if pos - start > 10 or int(data[start:pos]) > MAX_DIMENSION:
        raise PBMParseError(f"{what} exceeds {MAX_DIMENSION}", start)
    value = int(data[start:pos])
    if value <= 0:
        raise PBMParseError(f"{what} must be positive, got {value}", start)
    return value, pos


def load_pbm(data: bytes) -> BinaryImage:
    """Parse a PBM stream in plain (P1) or raw (P4) form."""
    if isinstance(data, str):
        data = data.encode("ascii")
    magic = data[:2]
    if magic not in (b"P1", b"P4"):
        raise PBMParseError(f"bad magic number {magic!r}, expected P1 or P4", 0)
    width, pos = _read_dimension(data, 2, "width")
    height, pos = _read_dimension(data, pos, "height")

    if magic == b"P4":
        if pos >= len(data) or data[pos] not in _WHITESPACE:
            raise PBMParseError("expected single whitespace before raster", pos)
        pos += 1
        stride = (width + 7) // 8
        need = stride * height
        if len(data) - pos < need:
            raise PBMParseError(
                f"truncated raster: need {need} bytes, have {len(data) - pos}",
                len(data),
            )
        out = bytearray()
        for r in range(height):
            packed = data[pos + r * stride: pos + (r + 1) * stride]
            bits = "".join(format(b, "08b") for b in packed)[:width]
            out += bytes(1 if ch == "1" else 0 for ch in bits)
        return BinaryImage(width, height, bytes(out))

    need = width * height
    out = bytearray()
    n = len(data)
    while len(out) < need:
        if pos >= n:
            raise PBMParseError(
                f"truncated raster: got {len(out)} of {need} pixels", pos
            )
        ch = data[pos]
        if ch == 48 or ch == 49:
            out.append(ch - 48)
        elif ch == ord("#"):
            pos = _skip_ws_and_comments(data, pos)
            continue
        elif ch not in _WHITESPACE:
            raise PBMParseError(f"unexpected byte {bytes([ch])!r} in raster", pos)
        pos += 1
    return BinaryImage(width, height, bytes(out))


def save_pbm(img: BinaryImage, variant: Literal["P1", "P4"] = "P4") -> bytes:
    header = f"{variant}\n{img.width} {img.height}\n".encode("ascii")
    if variant == "P1":
        lines = []
        for row in img.rows():
            for start in range(0, len(row), _P1_LINE_PIXELS):
                lines.append(" ".join("01"[b] for b in row[start:start + _P1_LINE_PIXELS]))
        return header + ("\n".join(lines) + "\n").encode("ascii")
    if variant == "P4":
        out = bytearray(header)
        pad = (-img.width) % 8
        for row in img.rows():
            bits = "".join("01"[b] for b in row) + "0" * pad
            out += int(bits, 2).to_bytes(len(bits) // 8, "big")
        return bytes(out)
    raise RLEntropyError(f"unknown PBM variant {variant!r}")
