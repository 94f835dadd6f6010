"""Timing harness: compressed-domain entropy against the pixel-scan oracle.

Both paths start from in-memory inputs.  The compressed path receives the
run-length document; the uncompressed path receives the already decoded
image, unless ``include_decode`` is set, in which case decoding is timed as
part of the uncompressed path.
"""
from __future__ import annotations

import csv
import io
import json
import math
import statistics
import time
from dataclasses import asdict, dataclass, field

from .entropy import compute_features
from .errors import RLEntropyError
from .oracle import oracle_features
from .rle import RLEDocument, compression_stats, decode_image

_CLOCK_RESOLUTION = time.get_clock_info("perf_counter").resolution
# medians closer than this to the clock resolution are not trusted
_RELIABLE_FACTOR = 10


@dataclass
class BenchResult:
    label: str
    quantifier: str
    direction: str
    t_compressed: float
    t_uncompressed: float
    ratio: float
    repetitions: int
    width: int
    height: int
    compression_ratio: float
    f3: float
    include_decode: bool = False
    unreliable: bool = False


@dataclass
class BenchReport:
    results: list[BenchResult] = field(default_factory=list)

    FIELDS = tuple(BenchResult.__dataclass_fields__)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=self.FIELDS, lineterminator="\n")
        writer.writeheader()
        for r in self.results:
            writer.writerow(asdict(r))
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps([asdict(r) for r in self.results], indent=2)


def _median_time(fn, repetitions: int) -> float:
    fn()  # warm-up, not recorded
    samples = []
    for _ in range(repetitions):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def bench(doc: RLEDocument, quantifier: str = "ceq", direction: str = "h",
          repetitions: int = 5, label: str = "", include_decode: bool = False,
          log_base="e") -> BenchReport:
    """Median wall time of each path over ``repetitions`` runs.

    Raises if the two paths disagree on F3 beyond 1e-12 relative error, so
    every timing run is also an equivalence check.
    """
    if repetitions < 3:
        raise RLEntropyError("repetitions must be at least 3")
    img = decode_image(doc)
    compressed = compute_features(doc, quantifier, direction, log_base)
    reference = oracle_features(img, quantifier, direction, log_base)
    if not math.isclose(compressed.f3, reference.f3, rel_tol=1e-12, abs_tol=0.0):
        raise RLEntropyError(
            f"compressed F3 {compressed.f3!r} != oracle F3 {reference.f3!r}"
        )

    def run_compressed():
        compute_features(doc, quantifier, direction, log_base)

    if include_decode:
        def run_uncompressed():
            oracle_features(decode_image(doc), quantifier, direction, log_base)
    else:
        def run_uncompressed():
            oracle_features(img, quantifier, direction, log_base)

    t_c = _median_time(run_compressed, repetitions)
    t_u = _median_time(run_uncompressed, repetitions)
    floor = _RELIABLE_FACTOR * _CLOCK_RESOLUTION
    unreliable = min(t_c, t_u) < floor
    t_c = max(t_c, _CLOCK_RESOLUTION)
    t_u = max(t_u, _CLOCK_RESOLUTION)
    result = BenchResult(
        label=label,
        quantifier=quantifier,
        direction=direction,
        t_compressed=t_c,
        t_uncompressed=t_u,
        ratio=t_u / t_c,
        repetitions=repetitions,
        width=doc.width,
        height=doc.height,
        compression_ratio=compression_stats(doc).ratio,
        f3=compressed.f3,
        include_decode=include_decode,
        unreliable=unreliable,
    )
    return BenchReport([result])
