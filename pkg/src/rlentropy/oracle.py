"""Uncompressed-domain reference: transitions found by scanning raw pixels.

Shares only the entropy kernels with the compressed path.  Each line is
scanned with an implicit background pixel before position 1, so a line that
starts with ink has a 0->1 transition at position 1.
"""
from __future__ import annotations

from .entropy import Direction, EntropyFeatures, ceq_row, seq_row
from .errors import RLEntropyError
from .image_io import BinaryImage


def scan_line(pixels) -> tuple[list[int], list[int]]:
    """Return 1-based positions of 0->1 and 1->0 changes along ``pixels``."""
    pos01 = []
    pos10 = []
    prev = 0
    pos = 0
    for b in pixels:
        pos += 1
        if b != prev:
            if b:
                pos01.append(pos)
            else:
                pos10.append(pos)
            prev = b
    return pos01, pos10


def count_line(pixels) -> tuple[int, int]:
    up = down = 0
    prev = 0
    for b in pixels:
        if b != prev:
            if b:
                up += 1
            else:
                down += 1
            prev = b
    return up, down


def _lines(img: BinaryImage, direction: Direction):
    """Yield pixel lines with (line length, line count)."""
    if direction == "h":
        return img.rows(), img.width, img.height
    if direction == "v":
        px, w = img.pixels, img.width
        return (px[c::w] for c in range(w)), img.height, img.width
    raise RLEntropyError(f"unknown direction {direction!r}")


def oracle_ceq(img: BinaryImage, direction: Direction = "h", log_base="e") -> EntropyFeatures:
    lines, n, _ = _lines(img, direction)
    per_row = []
    for line in lines:
        up, down = count_line(line)
        per_row.append((ceq_row(up, n, log_base), ceq_row(down, n, log_base)))
    return EntropyFeatures.from_contributions("ceq", direction, per_row, log_base)


def oracle_seq(img: BinaryImage, direction: Direction = "h", log_base="e") -> EntropyFeatures:
    lines, n, m = _lines(img, direction)
    per_row = []
    alpha = 0
    for line in lines:
        alpha += 1
        pos01, pos10 = scan_line(line)
        per_row.append(seq_row(pos01, pos10, alpha, m, n, log_base))
    return EntropyFeatures.from_contributions("seq", direction, per_row, log_base)


def oracle_features(img: BinaryImage, quantifier: str = "ceq", direction: Direction = "h",
                    log_base="e") -> EntropyFeatures:
    if quantifier == "ceq":
        return oracle_ceq(img, direction, log_base)
    if quantifier == "seq":
        return oracle_seq(img, direction, log_base)
    raise RLEntropyError(f"unknown quantifier {quantifier!r}")
