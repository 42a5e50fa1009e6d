"""Auxiliary-space accounting in abstract cells.

One cell is one vertex-id-sized working slot: a distance entry, a stored
vertex id, or a group of 64 visited bits.  The read-only input graph is never
charged.
"""

from __future__ import annotations

from contextlib import contextmanager
from typing import Iterator

BITS_PER_CELL = 64


def bit_cells(count: int) -> int:
    """Cells needed for a bitmap over ``count`` items."""
    return -(-count // BITS_PER_CELL)


class SpaceMeter:
    __slots__ = ("live_cells", "peak_cells")

    def __init__(self) -> None:
        self.live_cells = 0
        self.peak_cells = 0

    def alloc(self, cells: int) -> None:
        if cells < 0:
            raise ValueError("negative allocation")
        self.live_cells += cells
        if self.live_cells > self.peak_cells:
            self.peak_cells = self.live_cells

    def release(self, cells: int) -> None:
        if cells < 0 or cells > self.live_cells:
            raise ValueError("release does not match a prior allocation")
        self.live_cells -= cells

    @contextmanager
    def hold(self, cells: int) -> Iterator[None]:
        self.alloc(cells)
        try:
            yield
        finally:
            self.release(cells)

    def __repr__(self) -> str:
        return f"SpaceMeter(live={self.live_cells}, peak={self.peak_cells})"


class NullMeter(SpaceMeter):
    """Meter that discards everything; used when no stats were requested."""

    def alloc(self, cells: int) -> None:
        pass

    def release(self, cells: int) -> None:
        pass
