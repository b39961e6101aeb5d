"""Exact correlated heavy-hitter identification, for ground truth.

Exact answers need more than one pass (or unbounded memory), so these
routines are validation tools, not streaming algorithms. Two routes exist
and must agree: a naive full count of every value and pair, and a four-pass
scheme that first narrows each dimension to a bounded candidate set with an
`MgSummary` and then counts only the candidates exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    InvalidParameterError,
    ResourceLimitError,
    UnsupportedSourceError,
)
from .mg import MgSummary
from .params import FractionLike, to_fraction

TupleSource = Iterable[tuple[bytes, bytes]]

DEFAULT_TUPLE_CAP = 100_000_000


@dataclass
class ExactCounts:
    """True frequencies: every counted primary value and (primary, secondary) pair.

    Produced complete by :func:`exact_counts_naive`; the multipass route fills
    it only for candidate primaries (and candidate pairs under surviving
    heavy primaries), which is all the error statistics need.
    """

    n: int
    primary: dict[bytes, int]
    pairs: dict[tuple[bytes, bytes], int]


@dataclass
class ExactChh:
    """Exact heavy primaries and exact correlated heavy pairs, with counts.

    Membership uses the strict definitions: f_d > phi1 * n for primaries and
    f_{d,s} > phi2 * f_d for pairs under a heavy d.
    """

    n: int
    primaries: dict[bytes, int]
    pairs: dict[tuple[bytes, bytes], int]
    counts: ExactCounts

    def sorted_pairs(self) -> list[tuple[bytes, bytes, int]]:
        return [(d, s, c) for (d, s), c in sorted(self.pairs.items())]


def require_replayable(source: TupleSource) -> None:
    """Reject one-shot iterators; multi-pass consumers must re-iterate."""
    if iter(source) is source:
        raise UnsupportedSourceError(
            "source is a one-shot iterator; a replayable source (file-backed, "
            "generator-backed, or an in-memory sequence) is required"
        )


def _check_phi(phi1: FractionLike, phi2: FractionLike):
    phi1 = to_fraction(phi1, "phi1")
    phi2 = to_fraction(phi2, "phi2")
    if not 0 < phi1 < 1:
        raise InvalidParameterError(f"phi1 must lie in (0, 1), got {phi1}")
    if not 0 < phi2 < 1:
        raise InvalidParameterError(f"phi2 must lie in (0, 1), got {phi2}")
    return phi1, phi2


def exact_counts_naive(
    source: TupleSource, max_tuples: int = DEFAULT_TUPLE_CAP
) -> ExactCounts:
    """Count every distinct primary value and every distinct pair in memory.

    Only viable at desk scale; ``max_tuples`` guards against feeding it a
    stream that should have gone to the sketch instead.
    """
    primary: dict[bytes, int] = {}
    pairs: dict[tuple[bytes, bytes], int] = {}
    n = 0
    for x, y in source:
        n += 1
        if n > max_tuples:
            raise ResourceLimitError(
                f"stream exceeds the naive counting cap of {max_tuples} tuples"
            )
        primary[x] = primary.get(x, 0) + 1
        key = (x, y)
        pairs[key] = pairs.get(key, 0) + 1
    return ExactCounts(n=n, primary=primary, pairs=pairs)


def exact_chh_from_counts(
    counts: ExactCounts, phi1: FractionLike, phi2: FractionLike
) -> ExactChh:
    """Apply the strict heavy-hitter definitions directly to exact counts."""
    phi1, phi2 = _check_phi(phi1, phi2)
    n = counts.n
    heavy = {d: c for d, c in counts.primary.items() if c > phi1 * n}
    heavy_pairs = {
        (d, s): c
        for (d, s), c in counts.pairs.items()
        if d in heavy and c > phi2 * heavy[d]
    }
    return ExactChh(n=n, primaries=heavy, pairs=heavy_pairs, counts=counts)


def exact_chh_naive(
    source: TupleSource,
    phi1: FractionLike,
    phi2: FractionLike,
    max_tuples: int = DEFAULT_TUPLE_CAP,
) -> ExactChh:
    return exact_chh_from_counts(exact_counts_naive(source, max_tuples), phi1, phi2)


def exact_chh_multipass(
    source: TupleSource, phi1: FractionLike, phi2: FractionLike
) -> ExactChh:
    """Exact heavy pairs in four passes and bounded memory.

    Pass 1 collects primary candidates with a summary of capacity
    ceil(1/phi1); no value above the phi1 threshold can be shed from it.
    Pass 2 counts the candidates exactly, keeping the true heavy primaries.
    Pass 3 collects secondary candidates per heavy primary (one capacity
    ceil(1/phi2) summary each, all filled in a single pass). Pass 4 counts
    the candidate pairs exactly and applies the strict pair threshold.
    """
    phi1, phi2 = _check_phi(phi1, phi2)
    require_replayable(source)

    candidates = MgSummary(math.ceil(1 / phi1))
    for x, _ in source:
        candidates.update(x)

    primary_counts = {key: 0 for key, _ in candidates.entries()}
    n = 0
    for x, _ in source:
        n += 1
        if x in primary_counts:
            primary_counts[x] += 1
    heavy = {d: c for d, c in primary_counts.items() if c > phi1 * n}

    inner_cap = math.ceil(1 / phi2)
    secondary_candidates = {d: MgSummary(inner_cap) for d in heavy}
    for x, y in source:
        summary = secondary_candidates.get(x)
        if summary is not None:
            summary.update(y)

    pair_counts = {
        (d, skey): 0
        for d, summary in secondary_candidates.items()
        for skey, _ in summary.entries()
    }
    for x, y in source:
        key = (x, y)
        if key in pair_counts:
            pair_counts[key] += 1
    heavy_pairs = {
        (d, s): c for (d, s), c in pair_counts.items() if c > phi2 * heavy[d]
    }

    counts = ExactCounts(n=n, primary=primary_counts, pairs=pair_counts)
    return ExactChh(n=n, primaries=heavy, pairs=heavy_pairs, counts=counts)
