"""Feature tables, F3 distance matrices and equivalence decisions."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Sequence

from .entropy import Direction, Quantifier, compute_features, normalize_log_base
from .errors import RLEntropyError
from .rle import RLEDocument

Sample = tuple[str, RLEDocument]


@dataclass(frozen=True)
class FeatureRow:
    label: str
    f1: float
    f2: float
    f3: float


@dataclass
class DistanceMatrix:
    labels: list[str]
    values: list[list[float]]
    quantifier: str = "ceq"
    direction: str = "h"
    log_base: str = "e"

    def __getitem__(self, ij: tuple[int, int]) -> float:
        i, j = ij
        return self.values[i][j]

    def to_csv(self, precision: int | None = None) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["sample", *self.labels])
        for label, row in zip(self.labels, self.values):
            cells = row if precision is None else [f"{v:.{precision}f}" for v in row]
            writer.writerow([label, *cells])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "quantifier": self.quantifier,
            "direction": self.direction,
            "log_base": self.log_base,
            "labels": list(self.labels),
            "values": [list(r) for r in self.values],
        }


def _check_labels(labels: Sequence[str]) -> None:
    seen = set()
    for label in labels:
        if label in seen:
            raise RLEntropyError(f"duplicate sample label {label!r}")
        seen.add(label)


def feature_table(samples: Iterable[Sample], quantifier: Quantifier = "ceq",
                  direction: Direction = "h", log_base="e") -> list[FeatureRow]:
    samples = list(samples)
    if not samples:
        raise RLEntropyError("feature table needs at least one sample")
    _check_labels([label for label, _ in samples])
    table = []
    for label, doc in samples:
        f = compute_features(doc, quantifier, direction, log_base)
        table.append(FeatureRow(label, f.f1, f.f2, f.f3))
    return table


def distances_from_f3(labels: Sequence[str], f3: Sequence[float], quantifier="ceq",
                      direction="h", log_base="e") -> DistanceMatrix:
    """|F3_i - F3_j| for every pair, on unrounded values."""
    if len(labels) != len(f3):
        raise RLEntropyError("labels and F3 values differ in length")
    _check_labels(labels)
    values = [[abs(a - b) for b in f3] for a in f3]
    return DistanceMatrix(list(labels), values, quantifier, direction,
                          normalize_log_base(log_base))


def distance_matrix(samples: Iterable[Sample], quantifier: Quantifier = "ceq",
                    direction: Direction = "h", log_base="e") -> DistanceMatrix:
    samples = list(samples)
    if len(samples) < 2:
        raise RLEntropyError("distance matrix needs at least two samples")
    table = feature_table(samples, quantifier, direction, log_base)
    return distances_from_f3([r.label for r in table], [r.f3 for r in table],
                             quantifier, direction, log_base)


def equivalence_check(a: RLEDocument, b: RLEDocument, quantifier: Quantifier = "ceq",
                      direction: Direction = "h", tolerance: float = 0.0,
                      log_base="e") -> bool:
    if tolerance < 0:
        raise RLEntropyError("tolerance must be non-negative")
    fa = compute_features(a, quantifier, direction, log_base).f3
    fb = compute_features(b, quantifier, direction, log_base).f3
    return abs(fa - fb) <= tolerance
