"""Reference documents and synthetic test images."""
from __future__ import annotations

import random

from .errors import RLEntropyError
from .image_io import BinaryImage
from .rle import RLEDocument

# Canonical (unpadded) run columns of the 14x13 worked example.
EXAMPLE_RUNS: tuple[tuple[int, ...], ...] = (
    (14,),
    (2, 2, 4, 5, 1),
    (1, 4, 3, 5, 1),
    (1, 4, 3, 5, 1),
    (1, 4, 3, 5, 1),
    (2, 2, 10),
    (0, 1, 13),
    (0, 1, 13),
    (2, 1, 4, 5, 2),
    (1, 3, 3, 5, 2),
    (1, 4, 2, 5, 2),
    (1, 5, 8),
    (14,),
)


def example_document() -> RLEDocument:
    return RLEDocument.from_runs(EXAMPLE_RUNS, width=14)


def example_ascii() -> list[str]:
    """The worked example as text rows, expanded from its run columns."""
    lines = []
    for runs in EXAMPLE_RUNS:
        line = ""
        for i, r in enumerate(runs):
            line += ("1" if i & 1 else "0") * r
        lines.append(line)
    return lines


MEAN_STROKE = 6


def generate_fixture(kind: str, width: int, height: int, density: float = 0.1,
                     seed: int = 0) -> BinaryImage:
    """Synthetic bilevel image.

    ``blank`` is all background, ``checkerboard`` alternates starting with 0
    at the top-left, ``text-like`` scatters horizontal ink strokes (mean length
    ``MEAN_STROKE``) so that about ``density`` of each row is ink.
    """
    if width < 1 or height < 1:
        raise RLEntropyError(f"invalid fixture size {width}x{height}")
    if not 0.0 <= density <= 1.0:
        raise RLEntropyError(f"density {density} outside [0, 1]")
    if kind == "blank":
        return BinaryImage.blank(width, height)
    if kind == "checkerboard":
        return BinaryImage(width, height, bytes(
            (r + c) & 1 for r in range(height) for c in range(width)
        ))
    if kind != "text-like":
        raise RLEntropyError(f"unknown fixture kind {kind!r}")

    rng = random.Random(seed)
    out = bytearray(width * height)
    target = round(density * width)
    for r in range(height):
        base = r * width
        inked = 0
        attempts = 0
        while inked < target and attempts < 4 * width:
            attempts += 1
            length = min(rng.randint(1, 2 * MEAN_STROKE - 1), target - inked)
            start = rng.randrange(width - length + 1)
            seg = out[base + start: base + start + length]
            fresh = length - sum(seg)
            out[base + start: base + start + length] = b"\x01" * length
            inked += fresh
    return BinaryImage(width, height, bytes(out))
