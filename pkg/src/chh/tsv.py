"""Tab-separated (x, y) tuple streams: parsing, file sources, writing."""

from __future__ import annotations

import sys
from pathlib import Path
from typing import IO, Iterable, Iterator, NamedTuple

from .errors import InvalidParameterError, MalformedLineError


class TupleRecord(NamedTuple):
    x: bytes
    y: bytes


def parse_tuple_line(line: bytes, line_number: int = 0) -> TupleRecord:
    """Split one raw line on its first tab.

    Only the trailing line terminator is removed; both fields may be empty
    and any further tabs stay inside the second field. A line without a tab
    raises `MalformedLineError` carrying ``line_number``.
    """
    if line.endswith(b"\r\n"):
        line = line[:-2]
    elif line.endswith(b"\n"):
        line = line[:-1]
    sep = line.find(b"\t")
    if sep < 0:
        raise MalformedLineError(line_number, line)
    return TupleRecord(line[:sep], line[sep + 1:])


class TsvTupleSource:
    """Replayable tuple stream over a tab-separated file.

    Each iteration opens the file fresh, so multi-pass consumers can replay
    it. In lenient mode (the default) malformed lines are skipped and counted
    in ``skipped_lines``, which resets at the start of every pass; strict
    mode raises at the offending line instead.
    """

    def __init__(self, path: str | Path, strict: bool = False):
        self.path = Path(path)
        self.strict = strict
        self.skipped_lines = 0

    def __iter__(self) -> Iterator[TupleRecord]:
        self.skipped_lines = 0
        return self._scan()

    def _scan(self) -> Iterator[TupleRecord]:
        with open(self.path, "rb") as handle:
            number = 0
            for raw in handle:
                number += 1
                try:
                    yield parse_tuple_line(raw, number)
                except MalformedLineError:
                    if self.strict:
                        raise
                    self.skipped_lines += 1


def iter_tuple_lines(handle: IO[bytes], strict: bool = False) -> Iterator[TupleRecord]:
    """Single-pass tuple stream over an open binary handle (e.g. stdin)."""
    number = 0
    for raw in handle:
        number += 1
        try:
            yield parse_tuple_line(raw, number)
        except MalformedLineError:
            if strict:
                raise


def write_tuples(
    destination: str | Path | IO[bytes], tuples: Iterable[tuple[bytes, bytes]]
) -> int:
    """Write tuples as tab-separated lines; returns the number written.

    Fields must not contain the separator or a line terminator, otherwise
    the file would not parse back to the same stream.
    """
    own = isinstance(destination, (str, Path))
    handle: IO[bytes] = open(destination, "wb") if own else destination  # type: ignore[arg-type]
    count = 0
    batch: list[bytes] = []
    try:
        for x, y in tuples:
            if b"\t" in x or b"\n" in x or b"\r" in x or b"\t" in y or b"\n" in y or b"\r" in y:
                raise InvalidParameterError(
                    f"tuple fields may not contain tabs or line breaks: ({x!r}, {y!r})"
                )
            batch.append(b"%s\t%s\n" % (x, y))
            count += 1
            if len(batch) >= 4096:
                handle.write(b"".join(batch))
                batch.clear()
        if batch:
            handle.write(b"".join(batch))
    finally:
        if own:
            handle.close()
    return count


def stdin_tuples(strict: bool = False) -> Iterator[TupleRecord]:
    return iter_tuple_lines(sys.stdin.buffer, strict=strict)
