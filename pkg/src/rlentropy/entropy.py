"""CEQ and SEQ entropy quantifiers computed on run-length documents.

CEQ (conventional) is the binary entropy of the transition probability of a
line, taken separately for 0->1 and 1->0 transitions.  It ignores where the
transitions sit.  SEQ (spatial) sums a positional kernel over every
transition, weighted by the line index, so moving ink changes it.

Totals are reduced strictly in line order, and within a line in position
order, so results are bit-reproducible and comparable with the pixel-scan
oracle in :mod:`rlentropy.oracle`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Literal, Sequence

from .errors import InvariantViolation, RLEntropyError
from .rle import RLEDocument
from .transitions import (
    TransitionSet,
    column_transition_sets,
    count_transitions,
    transition_positions,
)

Quantifier = Literal["ceq", "seq"]
Direction = Literal["h", "v"]

_LOGS: dict[str, Callable[[float], float]] = {
    "e": math.log,
    "2": math.log2,
    "10": math.log10,
}


def normalize_log_base(base) -> str:
    """Map ``"e"``, ``math.e``, ``2``, ``"10"``... onto one of ``"e"``, ``"2"``, ``"10"``."""
    if isinstance(base, str):
        key = base.strip().lower()
        if key in ("e", "ln", "natural"):
            return "e"
        if key in _LOGS:
            return key
    elif isinstance(base, (int, float)):
        if base == math.e:
            return "e"
        if base in (2, 10):
            return str(int(base))
    raise RLEntropyError(f"unsupported log base {base!r}; use e, 2 or 10")


def log_function(base="e") -> Callable[[float], float]:
    return _LOGS[normalize_log_base(base)]


def ceq_row(count: int, n: int, log_base="e") -> float:
    """Binary entropy of ``p = count / n`` with 0*log(1/0) taken as 0."""
    if n < 1 or count < 0 or count > n:
        raise InvariantViolation(f"transition count {count} outside [0, {n}]")
    log = log_function(log_base)
    p = count / n
    q = 1.0 - p
    e = 0.0
    if p > 0.0:
        e += p * log(1.0 / p)
    if q > 0.0:
        e += q * log(1.0 / q)
    return e


def seq_kernel(pos: int, alpha: int, m: int, n: int, log: Callable[[float], float] = math.log) -> float:
    """Energy of one transition at 1-based ``pos`` on line ``alpha`` of ``m``, line length ``n``.

    Evaluated as written in the original formulation; the second term can be
    negative.
    """
    if not 1 <= pos <= n:
        raise InvariantViolation(f"transition position {pos} outside [1, {n}]")
    if not 1 <= alpha <= m:
        raise InvariantViolation(f"line index {alpha} outside [1, {m}]")
    return (alpha / m) * ((pos / n) * log(n / pos) + (m - pos / n) * log(m / (m + n - pos)))


def seq_row(pos01: Sequence[int], pos10: Sequence[int], alpha: int, m: int, n: int,
            log_base="e") -> tuple[float, float]:
    log = log_function(log_base)
    e_plus = 0.0
    for pos in pos01:
        e_plus += seq_kernel(pos, alpha, m, n, log)
    e_minus = 0.0
    for pos in pos10:
        e_minus += seq_kernel(pos, alpha, m, n, log)
    return e_plus, e_minus


@dataclass
class EntropyFeatures:
    """F1 = sum of E+ (0->1), F2 = sum of E- (1->0), F3 = F1 + F2."""

    quantifier: Quantifier
    direction: Direction
    f1: float
    f2: float
    f3: float
    per_row: list[tuple[float, float]] = field(default_factory=list)
    log_base: str = "e"

    @classmethod
    def from_contributions(cls, quantifier: Quantifier, direction: Direction,
                           per_row: list[tuple[float, float]], log_base="e") -> "EntropyFeatures":
        f1 = 0.0
        f2 = 0.0
        for e_plus, e_minus in per_row:
            f1 += e_plus
            f2 += e_minus
        return cls(quantifier, direction, f1, f2, f1 + f2, per_row,
                   normalize_log_base(log_base))

    def to_dict(self, per_row: bool = False) -> dict:
        out = {
            "quantifier": self.quantifier,
            "direction": self.direction,
            "log_base": self.log_base,
            "F1": self.f1,
            "F2": self.f2,
            "F3": self.f3,
        }
        if per_row:
            out["per_row"] = [list(r) for r in self.per_row]
        return out


def _ceq_lines(ts: TransitionSet, direction: Direction, log_base) -> EntropyFeatures:
    per_row = [(ceq_row(t.count01, ts.n, log_base), ceq_row(t.count10, ts.n, log_base))
               for t in ts.lines]
    return EntropyFeatures.from_contributions("ceq", direction, per_row, log_base)


def _seq_lines(ts: TransitionSet, direction: Direction, log_base) -> EntropyFeatures:
    per_row = [seq_row(t.pos01, t.pos10, alpha, ts.m, ts.n, log_base)
               for alpha, t in enumerate(ts.lines, start=1)]
    return EntropyFeatures.from_contributions("seq", direction, per_row, log_base)


def ceq_horizontal(doc: RLEDocument, log_base="e") -> EntropyFeatures:
    n = doc.width
    per_row = []
    for row in doc.rows:
        count01, count10 = count_transitions(row)
        per_row.append((ceq_row(count01, n, log_base), ceq_row(count10, n, log_base)))
    return EntropyFeatures.from_contributions("ceq", "h", per_row, log_base)


def seq_horizontal(doc: RLEDocument, log_base="e") -> EntropyFeatures:
    m, n = doc.height, doc.width
    per_row = []
    for alpha, row in enumerate(doc.rows, start=1):
        pos01, pos10 = transition_positions(row)
        per_row.append(seq_row(pos01, pos10, alpha, m, n, log_base))
    return EntropyFeatures.from_contributions("seq", "h", per_row, log_base)


def ceq_vertical(doc: RLEDocument, log_base="e") -> EntropyFeatures:
    return _ceq_lines(column_transition_sets(doc), "v", log_base)


def seq_vertical(doc: RLEDocument, log_base="e") -> EntropyFeatures:
    return _seq_lines(column_transition_sets(doc), "v", log_base)


_DISPATCH = {
    ("ceq", "h"): ceq_horizontal,
    ("ceq", "v"): ceq_vertical,
    ("seq", "h"): seq_horizontal,
    ("seq", "v"): seq_vertical,
}


def compute_features(doc: RLEDocument, quantifier: Quantifier = "ceq",
                     direction: Direction = "h", log_base="e") -> EntropyFeatures:
    try:
        fn = _DISPATCH[(quantifier, direction)]
    except KeyError:
        raise RLEntropyError(
            f"unknown quantifier/direction {quantifier!r}/{direction!r}"
        ) from None
    return fn(doc, log_base)
