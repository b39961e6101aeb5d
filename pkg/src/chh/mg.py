"""Bounded keyed counter summaries for one-dimensional frequent-item estimation.

`MgSummary` keeps at most ``capacity`` (key, count) pairs over opaque byte
string keys. When an insert pushes the table past capacity, every count is
decremented by one and keys whose count reaches zero are dropped, so at least
the newest key disappears and the table shrinks back within budget. The
estimate for a key is therefore never above its true frequency, and never
more than ``items_seen / (capacity + 1)`` below it: each shed round removes
one unit from ``capacity + 1`` counters at once, and the total shed mass
cannot exceed the total inserted mass.

`MgSummary` performs the shed round eagerly, touching every stored entry; it
is the reference behaviour that everything else must match. `OffsetMgSummary`
keeps a shared offset and a lazy eviction heap instead, which makes the shed
round cheap, and is guaranteed (and tested) to hold entries identical to the
eager form after every update sequence. The nested two-dimensional sketch
sticks with the eager form because it also needs single-entry decrements,
which a shared offset cannot express.
"""

from __future__ import annotations

import heapq

from .errors import InvalidParameterError


def _check_capacity(capacity: int) -> None:
    if not isinstance(capacity, int) or isinstance(capacity, bool) or capacity < 1:
        raise InvalidParameterError(
            f"capacity must be a positive integer, got {capacity!r}"
        )


class MgSummary:
    """Eager-decrement frequent-items summary.

    Attributes:
        capacity: maximum number of retained (key, count) entries.
        items_seen: number of update() calls applied.
        sweeps: number of shed rounds run (diagnostic; at most
            items_seen // (capacity + 1)).
    """

    __slots__ = ("capacity", "items_seen", "sweeps", "_entries", "_total")

    def __init__(self, capacity: int):
        _check_capacity(capacity)
        self.capacity = capacity
        self.items_seen = 0
        self.sweeps = 0
        self._entries: dict[bytes, int] = {}
        self._total = 0

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MgSummary):
            return NotImplemented
        return (
            self.capacity == other.capacity
            and self.items_seen == other.items_seen
            and self._entries == other._entries
        )

    def __repr__(self) -> str:
        return (
            f"MgSummary(capacity={self.capacity}, items_seen={self.items_seen}, "
            f"entries={dict(sorted(self._entries.items()))!r})"
        )

    def update(self, key: bytes) -> None:
        """Count one occurrence of ``key``, shedding mass on overflow."""
        self.items_seen += 1
        entries = self._entries
        count = entries.get(key)
        if count is not None:
            entries[key] = count + 1
            self._total += 1
            return
        entries[key] = 1
        self._total += 1
        if len(entries) > self.capacity:
            self._shed()

    def _shed(self) -> None:
        # Every count drops by one; zero counts leave immediately.
        entries = self._entries
        self._total -= len(entries)
        dead = []
        for key, count in entries.items():
            if count == 1:
                dead.append(key)
            else:
                entries[key] = count - 1
        for key in dead:
            del entries[key]
        self.sweeps += 1

    def estimate(self, key: bytes) -> int:
        """Stored count for ``key``, or 0 if it is not retained."""
        return self._entries.get(key, 0)

    def entries(self) -> list[tuple[bytes, int]]:
        """Current (key, count) pairs, sorted by key for reproducible output."""
        return sorted(self._entries.items())

    def total(self) -> int:
        """Sum of all stored counts (maintained incrementally, O(1))."""
        return self._total

    def decrement_least_key(self) -> None:
        """Remove one unit of mass from the smallest retained key.

        Drops the key when its count reaches zero. Used by the nested sketch,
        which must shed one inner unit per outer unit; picking the smallest
        key makes runs reproducible where any retained key would be correct.
        Does not count as an observed item. No-op contract: caller must
        ensure the summary is non-empty.
        """
        entries = self._entries
        key = min(entries)
        count = entries[key]
        if count == 1:
            del entries[key]
        else:
            entries[key] = count - 1
        self._total -= 1


class OffsetMgSummary:
    """Shared-offset variant of `MgSummary` with identical observable state.

    Stores each key's count plus the offset that was current at bookkeeping
    time; a shed round just bumps the offset. A min-heap of (stored value,
    key) rows finds keys whose effective count reached zero; rows whose
    stored value no longer matches the live table are stale and skipped.
    """

    __slots__ = ("capacity", "items_seen", "sweeps", "_values", "_offset", "_heap")

    def __init__(self, capacity: int):
        _check_capacity(capacity)
        self.capacity = capacity
        self.items_seen = 0
        self.sweeps = 0
        self._values: dict[bytes, int] = {}
        self._offset = 0
        self._heap: list[tuple[int, bytes]] = []

    def __len__(self) -> int:
        return len(self._values)

    def update(self, key: bytes) -> None:
        self.items_seen += 1
        values = self._values
        stored = values.get(key)
        if stored is not None:
            stored += 1
            values[key] = stored
            heapq.heappush(self._heap, (stored, key))
            return
        stored = self._offset + 1
        values[key] = stored
        heapq.heappush(self._heap, (stored, key))
        if len(values) > self.capacity:
            self._offset += 1
            self.sweeps += 1
            heap = self._heap
            offset = self._offset
            while heap and heap[0][0] <= offset:
                value, candidate = heapq.heappop(heap)
                if values.get(candidate) == value:
                    del values[candidate]
        if len(self._heap) > 4 * len(values) + 16:
            self._heap = [(v, k) for k, v in values.items()]
            heapq.heapify(self._heap)

    def estimate(self, key: bytes) -> int:
        stored = self._values.get(key)
        return 0 if stored is None else stored - self._offset

    def entries(self) -> list[tuple[bytes, int]]:
        offset = self._offset
        return sorted((k, v - offset) for k, v in self._values.items())

    def total(self) -> int:
        offset = self._offset
        return sum(self._values.values()) - offset * len(self._values)
