"""Error statistics against ground truth, parameter sweeps, and CSV output.

The error statistic for a heavy primary d is (f_d - est_d) / n; for a heavy
pair (d, s) it is (f_{d,s} - est_{d,s}) / f_d. Both are measured only over
the exact heavy sets (never over whatever extras a sketch reported), and
both stay below a closed-form ceiling whenever the sketch ran with feasible
parameters: 1/s1 for primaries, and 1/s2 + 1/((phi1 - eps1) s1) for pairs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, Literal, Sequence, Union

from pathlib import Path

from .errors import InconsistentInputError, InvalidParameterError
from .oracle import (
    ExactChh,
    ExactCounts,
    TupleSource,
    exact_chh_multipass,
    exact_counts_naive,
    require_replayable,
)
from .params import ChhParams, FractionLike, to_fraction
from .sketch import ChhSketch

TheoryDenominator = Literal["phi1-eps1", "phi1"]

ErrorItem = Union[bytes, tuple[bytes, bytes]]


@dataclass
class ErrorStats:
    """Per-item relative undercounts plus their max, mean, and ceiling.

    ``empty`` flags a measurement over zero items, in which case max and
    mean are reported as 0.
    """

    per_item_errors: list[tuple[ErrorItem, Fraction]]
    max_error: Fraction
    avg_error: Fraction
    theoretical_max: Fraction
    empty: bool


def _finish(
    errors: list[tuple[ErrorItem, Fraction]], theoretical_max: Fraction
) -> ErrorStats:
    if not errors:
        zero = Fraction(0)
        return ErrorStats([], zero, zero, theoretical_max, empty=True)
    values = [err for _, err in errors]
    return ErrorStats(
        per_item_errors=errors,
        max_error=max(values),
        avg_error=sum(values, Fraction(0)) / len(values),
        theoretical_max=theoretical_max,
        empty=False,
    )


def _check_same_stream(exact: ExactCounts, sketch: ChhSketch) -> None:
    if exact.n != sketch.n:
        raise InconsistentInputError(
            f"exact counts cover {exact.n} tuples but the sketch saw {sketch.n}"
        )


def primary_error_stats(
    exact: ExactCounts, sketch: ChhSketch, phi1: FractionLike
) -> ErrorStats:
    """Relative undercount (f_d - est_d)/n over the exact heavy primaries."""
    _check_same_stream(exact, sketch)
    phi1 = to_fraction(phi1, "phi1")
    n = exact.n
    errors = [
        (d, Fraction(count - sketch.estimate_primary(d), n))
        for d, count in sorted(exact.primary.items())
        if count > phi1 * n
    ]
    return _finish(errors, Fraction(1, sketch.params.s1))


def secondary_theoretical_max(
    params: ChhParams, denominator: TheoryDenominator = "phi1-eps1"
) -> Fraction:
    """Ceiling for the pair error statistic: 1/s2 plus the outer-shed share.

    The outer-table share divides by phi1 - eps1 by default (any reported
    primary's true count is at least that fraction of n); dividing by the
    larger phi1 gives the slightly tighter ceiling that only covers exact
    heavy primaries.
    """
    if denominator == "phi1-eps1":
        rate = params.phi1 - params.eps1
    elif denominator == "phi1":
        rate = params.phi1
    else:
        raise InvalidParameterError(
            f"denominator must be 'phi1-eps1' or 'phi1', got {denominator!r}"
        )
    return Fraction(1, params.s2) + 1 / (rate * params.s1)


def secondary_error_stats(
    exact: ExactCounts,
    sketch: ChhSketch,
    phi1: FractionLike,
    phi2: FractionLike,
    denominator: TheoryDenominator = "phi1-eps1",
) -> ErrorStats:
    """Relative undercount (f_{d,s} - est_{d,s})/f_d over the exact heavy pairs."""
    _check_same_stream(exact, sketch)
    phi1 = to_fraction(phi1, "phi1")
    phi2 = to_fraction(phi2, "phi2")
    n = exact.n
    heavy = {d: c for d, c in exact.primary.items() if c > phi1 * n}
    errors: list[tuple[ErrorItem, Fraction]] = []
    for (d, s), count in sorted(exact.pairs.items()):
        fd = heavy.get(d)
        if fd is None or not count > phi2 * fd:
            continue
        errors.append(((d, s), Fraction(count - sketch.estimate_pair(d, s), fd)))
    return _finish(errors, secondary_theoretical_max(sketch.params, denominator))


@dataclass
class SweepRow:
    """One sweep configuration with its measured and theoretical errors."""

    s1: int
    s2: int
    n: int
    primary: ErrorStats
    secondary: ErrorStats
    reported_primaries: int
    reported_pairs: int


def sweep(
    source: TupleSource,
    phi1: FractionLike,
    phi2: FractionLike,
    s1_values: Sequence[int],
    s2_values: Sequence[int],
    oracle: ExactChh | None = None,
    denominator: TheoryDenominator = "phi1-eps1",
) -> list[SweepRow]:
    """Build one sketch per (s1, s2) pair against a single shared oracle run.

    Table sizes are taken as given (`ChhParams.from_raw`), so rows may run
    with infeasible sizes on purpose; the per-row theoretical columns then
    carry the tolerances those sizes imply.
    """
    require_replayable(source)
    phi1 = to_fraction(phi1, "phi1")
    phi2 = to_fraction(phi2, "phi2")
    if not s1_values or not s2_values:
        raise InvalidParameterError("s1_values and s2_values must be non-empty")
    if oracle is None:
        oracle = exact_chh_multipass(source, phi1, phi2)
    rows = []
    for s1 in s1_values:
        for s2 in s2_values:
            params = ChhParams.from_raw(phi1, phi2, s1, s2)
            sketch = ChhSketch(params)
            sketch.consume(source)
            report = sketch.report()
            rows.append(
                SweepRow(
                    s1=s1,
                    s2=s2,
                    n=sketch.n,
                    primary=primary_error_stats(oracle.counts, sketch, phi1),
                    secondary=secondary_error_stats(
                        oracle.counts, sketch, phi1, phi2, denominator
                    ),
                    reported_primaries=len(report.primaries),
                    reported_pairs=sum(len(p.secondaries) for p in report.primaries),
                )
            )
    return rows


SWEEP_CSV_HEADER = (
    "s1,s2,n,primary_max,primary_avg,primary_theory,"
    "secondary_max,secondary_avg,secondary_theory,reported_primaries,reported_pairs"
)


def _decimal(value: Fraction) -> str:
    return format(float(value), ".12g")


def sweep_csv_lines(rows: Iterable[SweepRow]) -> list[str]:
    lines = [SWEEP_CSV_HEADER]
    for row in rows:
        lines.append(
            ",".join(
                (
                    str(row.s1),
                    str(row.s2),
                    str(row.n),
                    _decimal(row.primary.max_error),
                    _decimal(row.primary.avg_error),
                    _decimal(row.primary.theoretical_max),
                    _decimal(row.secondary.max_error),
                    _decimal(row.secondary.avg_error),
                    _decimal(row.secondary.theoretical_max),
                    str(row.reported_primaries),
                    str(row.reported_pairs),
                )
            )
        )
    return lines


def write_sweep_csv(rows: Iterable[SweepRow], destination: str | Path | IO[bytes]) -> None:
    payload = ("\n".join(sweep_csv_lines(rows)) + "\n").encode("ascii")
    if isinstance(destination, (str, Path)):
        Path(destination).write_bytes(payload)
    else:
        destination.write(payload)


@dataclass
class SpaceTimeComparison:
    """Scaled-down cost comparison of full counting vs the sketch.

    ``*_stored_pairs`` counts distinct (primary, secondary) pairs held at the
    end, the same space measure for both sides. Wall-clock numbers are
    indicative only; no tolerance is attached to them anywhere.
    """

    n: int
    naive_seconds: float
    sketch_seconds: float
    naive_stored_pairs: int
    sketch_stored_pairs: int


def space_time_comparison(
    source: TupleSource, params: ChhParams, max_tuples: int = 100_000_000
) -> SpaceTimeComparison:
    require_replayable(source)
    start = time.perf_counter()
    counts = exact_counts_naive(source, max_tuples)
    naive_seconds = time.perf_counter() - start

    sketch = ChhSketch(params)
    start = time.perf_counter()
    sketch.consume(source)
    sketch_seconds = time.perf_counter() - start

    return SpaceTimeComparison(
        n=counts.n,
        naive_seconds=naive_seconds,
        sketch_seconds=sketch_seconds,
        naive_stored_pairs=len(counts.pairs),
        sketch_stored_pairs=sum(len(entry.inner) for _, entry in sketch.entries()),
    )
