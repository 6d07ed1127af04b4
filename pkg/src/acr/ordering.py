"""Bijective traversal orders over an I x J grid.

Row-major and column-major scans are cheap but directionally biased when
used to resolve collisions; the Morton (Z-order) curve removes the single
preferred scan axis. Morton order is produced non-recursively: interleave
the zero-based column bits into even code positions and the row bits into
odd positions, then sort cells by code, skipping codes whose coordinates
fall outside the grid so non-power-of-two shapes stay bijective.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import InvalidInputError

_MAX_INDEX = 1 << 31


class OrderKind(Enum):
    MORTON = "morton"
    ROW_MAJOR = "row"
    COLUMN_MAJOR = "col"

    @classmethod
    def parse(cls, text: str) -> "OrderKind":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise InvalidInputError(
                f"unknown ordering {text!r}; expected morton, row, or col"
            ) from None


def _spread_bits(v: np.ndarray) -> np.ndarray:
    """Insert a zero bit between consecutive bits of each 32-bit value."""
    v = v.astype(np.uint64)
    v = (v | (v << np.uint64(16))) & np.uint64(0x0000FFFF0000FFFF)
    v = (v | (v << np.uint64(8))) & np.uint64(0x00FF00FF00FF00FF)
    v = (v | (v << np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    v = (v | (v << np.uint64(2))) & np.uint64(0x3333333333333333)
    v = (v | (v << np.uint64(1))) & np.uint64(0x5555555555555555)
    return v


def morton_code(i: int, j: int) -> int:
    """Z-order code of 1-based cell (i, j): column bits even, row bits odd."""
    if i < 1 or j < 1:
        raise InvalidInputError(f"cell indices are 1-based, got ({i}, {j})")
    r, c = i - 1, j - 1
    if r >= _MAX_INDEX or c >= _MAX_INDEX:
        raise InvalidInputError(f"cell index out of supported range: ({i}, {j})")
    code = 0
    bit = 0
    while r or c:
        code |= (c & 1) << (2 * bit)
        code |= (r & 1) << (2 * bit + 1)
        r >>= 1
        c >>= 1
        bit += 1
    return code


@dataclass(frozen=True)
class TraversalOrder:
    """A bijective enumeration of the cells of an I x J grid."""

    kind: OrderKind
    dims: tuple
    _flat: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        i_dim, j_dim = self.dims
        if i_dim < 1 or j_dim < 1:
            raise InvalidInputError(f"grid dimensions must be positive, got {self.dims}")
        if i_dim >= _MAX_INDEX or j_dim >= _MAX_INDEX:
            raise InvalidInputError(f"grid dimensions out of supported range: {self.dims}")
        object.__setattr__(self, "dims", (int(i_dim), int(j_dim)))
        object.__setattr__(self, "_flat", self._build())

    def _build(self) -> np.ndarray:
        i_dim, j_dim = self.dims
        if self.kind is OrderKind.ROW_MAJOR:
            return np.arange(i_dim * j_dim, dtype=np.int64)
        if self.kind is OrderKind.COLUMN_MAJOR:
            rows = np.arange(i_dim * j_dim, dtype=np.int64) % i_dim
            cols = np.arange(i_dim * j_dim, dtype=np.int64) // i_dim
            return rows * j_dim + cols
        rows = np.repeat(np.arange(i_dim, dtype=np.uint32), j_dim)
        cols = np.tile(np.arange(j_dim, dtype=np.uint32), i_dim)
        codes = _spread_bits(cols) | (_spread_bits(rows) << np.uint64(1))
        return np.argsort(codes, kind="stable").astype(np.int64)

    def flat_order(self) -> np.ndarray:
        """Cell indices (row-major flattening, 0-based) in traversal sequence."""
        return self._flat

    def ranks(self) -> np.ndarray:
        """Inverse of flat_order(): the traversal rank of each cell."""
        inv = np.empty_like(self._flat)
        inv[self._flat] = np.arange(len(self._flat), dtype=np.int64)
        return inv

    def cells(self) -> list:
        """The enumeration as 1-based (i, j) pairs."""
        j_dim = self.dims[1]
        return [(int(f // j_dim) + 1, int(f % j_dim) + 1) for f in self._flat]

    def __len__(self) -> int:
        return self.dims[0] * self.dims[1]


def enumerate_cells(kind: OrderKind, dims: tuple) -> list:
    """Convenience wrapper: the (i, j) enumeration for the given order."""
    return TraversalOrder(kind=kind, dims=dims).cells()
