"""Board model for rook domination on an n x m board.

A cell (i, j) of the board is a vertex of K_n x K_m; two cells are adjacent
when they share a row or a column. A placement S of rooks is total
k-dominating when every cell, occupied or not, sees at least k rooks in its
row and column other than itself. With row counts r and column counts c the
number of rooks seen from (i, j) is

    r[i] + c[j] - 2 * [(i, j) in S]

All coordinates are 1-based (row, col).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

Cell = tuple[int, int]

_DEBUG = os.environ.get("ROOKDOM_DEBUG", "").strip().lower() not in ("", "0", "false", "no")


class DomainError(ValueError):
    """Board dimensions or arguments outside the supported domain."""


class CellOutOfRange(ValueError):
    pass


@dataclass(frozen=True, order=True)
class BoardDims:
    n: int
    m: int

    def __post_init__(self):
        if not (isinstance(self.n, (int, np.integer)) and isinstance(self.m, (int, np.integer))):
            raise DomainError(f"board dimensions must be integers, got {self.n!r} x {self.m!r}")
        if self.n < 2 or self.m < 2:
            raise DomainError(f"board dimensions must be at least 2, got {self.n} x {self.m}")

    @property
    def is_normalized(self) -> bool:
        return self.n <= self.m

    def normalized(self) -> "BoardDims":
        return self if self.n <= self.m else BoardDims(self.m, self.n)

    def transposed(self) -> "BoardDims":
        return BoardDims(self.m, self.n)

    def contains(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= i <= self.n and 1 <= j <= self.m

    def __str__(self) -> str:
        return f"{self.n}x{self.m}"


@dataclass(frozen=True)
class Violation:
    cell: Cell
    degree: int
    required: int


class RookConfig:
    """A set of rooks on a board, with row and column counts kept in step.

    ``add`` and ``remove`` update the counts incrementally. Everything else
    treats a config as a value: module functions never mutate their inputs,
    and ``copy`` gives an independent config. Set ``ROOKDOM_DEBUG=1`` to
    recheck the counts from scratch after every mutation.
    """

    __slots__ = ("dims", "_cells", "row_count", "col_count")

    def __init__(self, dims: BoardDims, cells: Iterable[Cell] = ()):
        self.dims = dims
        cells = [(int(i), int(j)) for i, j in cells]
        self._cells: set[Cell] = set(cells)
        if len(self._cells) != len(cells):
            raise ValueError("duplicate rook positions")
        for cell in self._cells:
            _check_cell(dims, cell)
        idx = np.array(cells, dtype=np.int64).reshape(-1, 2) - 1
        self.row_count = np.bincount(idx[:, 0], minlength=dims.n).astype(np.int64)
        self.col_count = np.bincount(idx[:, 1], minlength=dims.m).astype(np.int64)

    @classmethod
    def from_matrix(cls, matrix) -> "RookConfig":
        a = np.asarray(matrix)
        if a.ndim != 2:
            raise ValueError("placement matrix must be 2-dimensional")
        rows, cols = np.nonzero(a)
        cfg = cls(BoardDims(int(a.shape[0]), int(a.shape[1])))
        cfg._cells = {(int(i) + 1, int(j) + 1) for i, j in zip(rows, cols)}
        cfg.row_count = np.count_nonzero(a, axis=1).astype(np.int64)
        cfg.col_count = np.count_nonzero(a, axis=0).astype(np.int64)
        return cfg

    def add(self, cell: Cell) -> None:
        cell = (int(cell[0]), int(cell[1]))
        _check_cell(self.dims, cell)
        if cell in self._cells:
            raise ValueError(f"duplicate rook at {cell}")
        self._cells.add(cell)
        self.row_count[cell[0] - 1] += 1
        self.col_count[cell[1] - 1] += 1
        if _DEBUG:
            self.check_counts()

    def remove(self, cell: Cell) -> None:
        cell = (int(cell[0]), int(cell[1]))
        if cell not in self._cells:
            raise KeyError(cell)
        self._cells.remove(cell)
        self.row_count[cell[0] - 1] -= 1
        self.col_count[cell[1] - 1] -= 1
        if _DEBUG:
            self.check_counts()

    def check_counts(self) -> None:
        rows = np.zeros(self.dims.n, dtype=np.int64)
        cols = np.zeros(self.dims.m, dtype=np.int64)
        for i, j in self._cells:
            rows[i - 1] += 1
            cols[j - 1] += 1
        if not (np.array_equal(rows, self.row_count) and np.array_equal(cols, self.col_count)):
            raise AssertionError("row/column count cache out of sync with cells")

    def copy(self) -> "RookConfig":
        other = RookConfig.__new__(RookConfig)
        other.dims = self.dims
        other._cells = set(self._cells)
        other.row_count = self.row_count.copy()
        other.col_count = self.col_count.copy()
        return other

    @property
    def cells(self) -> frozenset[Cell]:
        return frozenset(self._cells)

    def sorted_cells(self) -> list[Cell]:
        return sorted(self._cells)

    def to_matrix(self) -> np.ndarray:
        a = np.zeros((self.dims.n, self.dims.m), dtype=np.int8)
        if self._cells:
            idx = np.array(sorted(self._cells), dtype=np.int64) - 1
            a[idx[:, 0], idx[:, 1]] = 1
        return a

    def transpose(self) -> "RookConfig":
        return RookConfig(self.dims.transposed(), ((j, i) for i, j in self._cells))

    def permute(self, row_perm, col_perm) -> "RookConfig":
        """Relabel rows and columns; ``row_perm[i-1]`` is the new index of row i."""
        return RookConfig(self.dims, ((row_perm[i - 1], col_perm[j - 1]) for i, j in self._cells))

    def __len__(self) -> int:
        return len(self._cells)

    def __contains__(self, cell) -> bool:
        return tuple(cell) in self._cells

    def __iter__(self) -> Iterator[Cell]:
        return iter(sorted(self._cells))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RookConfig):
            return NotImplemented
        return self.dims == other.dims and self._cells == other._cells

    __hash__ = None

    def __repr__(self) -> str:
        return f"RookConfig({self.dims}, {len(self)} rooks)"


def _check_cell(dims: BoardDims, cell: Cell) -> None:
    if not dims.contains(cell):
        raise CellOutOfRange(f"cell {cell} outside the {dims} board")


def domination_degree(cfg: RookConfig, cell: Cell) -> int:
    """Number of rooks sharing a row or column with ``cell`` (itself excluded)."""
    _check_cell(cfg.dims, cell)
    i, j = cell
    return int(cfg.row_count[i - 1] + cfg.col_count[j - 1] - 2 * (cell in cfg))


def degree_matrix(cfg: RookConfig) -> np.ndarray:
    return cfg.row_count[:, None] + cfg.col_count[None, :] - 2 * cfg.to_matrix()


def verify(cfg: RookConfig, k: int = 2) -> list[Violation]:
    """Every cell that sees fewer than ``k`` rooks, in row-major order."""
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    deg = degree_matrix(cfg)
    bad = np.argwhere(deg < k)
    return [Violation((int(i) + 1, int(j) + 1), int(deg[i, j]), k) for i, j in bad]


def is_total_dominating(cfg: RookConfig, k: int = 2) -> bool:
    """O(n + m + |S|) validity test.

    The weakest empty cell sees min(r) + min(c); if that minimum is reached at
    a rook the rook itself needs two more, so checking every rook separately
    covers it.
    """
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    r, c = cfg.row_count, cfg.col_count
    if int(r.min()) + int(c.min()) < k:
        return False
    if not cfg._cells:
        return True
    idx = np.fromiter((x for cell in cfg._cells for x in cell), dtype=np.int64).reshape(-1, 2) - 1
    return bool(np.all(r[idx[:, 0]] + c[idx[:, 1]] - 2 >= k))


def normalize(dims: BoardDims, cfg: RookConfig) -> RookConfig:
    """Return ``cfg`` on the n <= m orientation, transposing if needed."""
    if cfg.dims != dims:
        raise DomainError(f"config is on a {cfg.dims} board, expected {dims}")
    if dims.is_normalized:
        return cfg.copy()
    return cfg.transpose()


# -- serialization ---------------------------------------------------------


def certificate_dict(cfg: RookConfig, k: int = 2, **extra) -> dict:
    d = {"n": cfg.dims.n, "m": cfg.dims.m, "k": k, "cells": [list(c) for c in cfg.sorted_cells()]}
    d.update(extra)
    return d


def to_json(cfg: RookConfig, k: int = 2, **extra) -> str:
    return json.dumps(certificate_dict(cfg, k, **extra))


def from_dict(d: dict) -> tuple[RookConfig, int]:
    try:
        dims = BoardDims(int(d["n"]), int(d["m"]))
        k = int(d.get("k", 2))
        cells = [(int(c[0]), int(c[1])) for c in d["cells"]]
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed certificate: {exc}") from exc
    return RookConfig(dims, cells), k


def from_json(text: str) -> tuple[RookConfig, int]:
    return from_dict(json.loads(text))


def render_ascii(cfg: RookConfig) -> str:
    a = cfg.to_matrix()
    return "\n".join("".join("#" if x else "." for x in row) for row in a)
