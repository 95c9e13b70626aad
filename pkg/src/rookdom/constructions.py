"""Explicit total 2-dominating placements.

Small optimal placements are stored as data and grown into larger ones by
three local moves:

* add a column, putting its one rook in a row that already holds two;
* add a row and a column together, hanging one rook off a row with three
  rooks and one off a column with three rooks (+2 rooks);
* append an optimal 4 x 4 block on the diagonal (+6 rooks), which is valid
  whenever every row and column of the original placement is occupied.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .core import BoardDims, DomainError, RookConfig, is_total_dominating

# Square blocks, row 1 = bottom row of the usual drawing.
SQUARE_BLOCKS: dict[int, tuple[tuple[int, int], ...]] = {
    2: ((1, 1), (1, 2), (2, 1), (2, 2)),
    3: ((1, 1), (1, 2), (1, 3), (2, 1), (3, 1)),
    4: ((1, 2), (1, 3), (1, 4), (2, 1), (3, 1), (4, 1)),
    5: ((1, 2), (1, 3), (1, 4), (1, 5), (2, 1), (3, 1), (4, 1), (5, 1)),
    6: ((1, 1), (1, 2), (1, 3), (2, 1), (3, 1), (4, 4), (4, 5), (4, 6), (5, 4), (6, 4)),
}

# Optimal 6 x 7 placement (10 rooks).
BLOCK_6x7 = ((1, 2), (1, 3), (1, 4), (2, 1), (3, 1), (4, 1), (5, 1), (6, 5), (6, 6), (6, 7))

# A dominating but non-optimal 6 x 8 placement (12 rooks; the optimum is 11).
NONMINIMAL_6x8 = (
    (1, 2), (1, 3), (1, 4), (2, 1), (3, 1), (4, 1),
    (5, 5), (5, 6), (6, 5), (6, 6), (6, 7), (6, 8),
)


class ConstructionError(ValueError):
    pass


def square_block(size: int) -> RookConfig:
    return RookConfig(BoardDims(size, size), SQUARE_BLOCKS[size])


def base_6x7() -> RookConfig:
    return RookConfig(BoardDims(6, 7), BLOCK_6x7)


def nonminimal_6x8() -> RookConfig:
    return RookConfig(BoardDims(6, 8), NONMINIMAL_6x8)


def two_columns(n: int, m: int) -> RookConfig:
    """All of columns 1 and 2: 2n rooks."""
    return RookConfig(BoardDims(n, m), ((i, j) for i in range(1, n + 1) for j in (1, 2)))


def _two_lines(n: int, m: int) -> RookConfig:
    return two_columns(n, m) if n <= m else two_columns(m, n).transpose()


def diagonal_union(blocks: list[RookConfig]) -> RookConfig:
    """Place blocks corner to corner along the main diagonal."""
    n = sum(b.dims.n for b in blocks)
    m = sum(b.dims.m for b in blocks)
    cells = []
    di = dj = 0
    for b in blocks:
        cells.extend((i + di, j + dj) for i, j in b.cells)
        di += b.dims.n
        dj += b.dims.m
    return RookConfig(BoardDims(n, m), cells)


def diagonal_blocks(n: int) -> RookConfig:
    """n x n placement from 4 x 4 blocks plus one block of size 2..5 last.

    Writing n = 4q + a with a in {-2, -1, 0, 1}, uses q - 1 blocks of size 4
    and one of size 4 + a.
    """
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    q, a = divmod(n + 2, 4)
    a -= 2
    blocks = [square_block(4)] * (q - 1) + [square_block(4 + a)]
    return diagonal_union(blocks)


def _full_support(cfg: RookConfig) -> bool:
    return bool(cfg.row_count.min() >= 1 and cfg.col_count.min() >= 1)


def extend_column(cfg: RookConfig) -> RookConfig:
    """n x m -> n x (m+1) with one extra rook.

    The new rook goes into the first row holding at least two rooks. Every
    row must already be occupied, otherwise the new column is undercovered.
    """
    r = cfg.row_count
    if r.min() < 1:
        raise ConstructionError("every row needs a rook before a column can be added")
    heavy = [i for i in range(cfg.dims.n) if r[i] >= 2]
    if not heavy:
        raise ConstructionError("no row holds two rooks")
    dims = BoardDims(cfg.dims.n, cfg.dims.m + 1)
    out = RookConfig(dims, list(cfg.cells) + [(heavy[0] + 1, dims.m)])
    if not is_total_dominating(out):
        raise ConstructionError("column extension of an invalid placement")
    return out


def extend_row(cfg: RookConfig) -> RookConfig:
    return extend_column(cfg.transpose()).transpose()


def extend_diagonal(cfg: RookConfig) -> RookConfig:
    """n x m -> (n+1) x (m+1) with two extra rooks."""
    n, m = cfg.dims.n, cfg.dims.m
    r, c = cfg.row_count, cfg.col_count
    rows3 = [i for i in range(n) if r[i] >= 3]
    cols3 = [j for j in range(m) if c[j] >= 3]
    if not (_full_support(cfg) and rows3 and cols3):
        if len(cfg) == 2 * min(n, m):
            return _two_lines(n + 1, m + 1)
        raise ConstructionError("need every line occupied, a row with 3 rooks and a column with 3 rooks")
    dims = BoardDims(n + 1, m + 1)
    out = RookConfig(dims, list(cfg.cells) + [(rows3[0] + 1, m + 1), (n + 1, cols3[0] + 1)])
    if not is_total_dominating(out):
        raise ConstructionError("diagonal extension of an invalid placement")
    return out


def extend_by_block(cfg: RookConfig) -> RookConfig:
    """n x m -> (n+4) x (m+4) with six extra rooks (a 4 x 4 block)."""
    if not _full_support(cfg):
        raise ConstructionError("every row and column must be occupied")
    out = diagonal_union([cfg, square_block(4)])
    if not is_total_dominating(out):
        raise ConstructionError("block extension of an invalid placement")
    return out


def load_bases() -> dict[tuple[int, int], RookConfig]:
    """Frozen solver placements used as seeds for block extension."""
    text = resources.files("rookdom").joinpath("data/base_certificates.json").read_text()
    out = {}
    for d in json.loads(text)["certificates"]:
        cfg = RookConfig(BoardDims(d["n"], d["m"]), (tuple(c) for c in d["cells"]))
        out[(d["n"], d["m"])] = cfg
    return out


@dataclass(frozen=True)
class Built:
    config: RookConfig
    provenance: str
    steps: int

    @property
    def key(self) -> tuple[int, int]:
        return (len(self.config), self.steps)


class CertificateBuilder:
    """Cheapest known placement for each board, by dynamic programming over
    the moves above. Keeps the best overall and the best with every row and
    column occupied (only those can be extended further)."""

    def __init__(self, bases: dict[tuple[int, int], RookConfig] | None = None):
        if bases is None:
            bases = {(6, 7): base_6x7(), **load_bases()}
        for (n, m), cfg in bases.items():
            if cfg.dims != BoardDims(n, m) or not is_total_dominating(cfg):
                raise ConstructionError(f"base placement for {n}x{m} is not dominating")
        self.bases = dict(bases)
        self._best: dict[tuple[int, int], Built] = {}
        self._full: dict[tuple[int, int], Built | None] = {}

    def _candidates(self, n: int, m: int) -> list[Built]:
        # only predecessors with the same or smaller m - n, so each board's
        # answer is independent of the order in which boards are requested
        out = [Built(two_columns(n, m), "twoColumns", 0)]
        if n == m:
            out.append(Built(diagonal_blocks(n), "diagonalBlocks", 0))
        if (n, m) in self.bases:
            out.append(Built(self.bases[(n, m)].copy(), f"base({n}x{m})", 0))

        def grow(key, move, label):
            src = self._full.get(key)
            if src is None:
                return
            try:
                cfg = move(src.config)
            except ConstructionError:
                return
            out.append(Built(cfg, f"{src.provenance}+{label}", src.steps + 1))

        if m - 1 >= n:
            grow((n, m - 1), extend_column, "col")
        if n - 1 >= 2:
            grow((n - 1, m - 1), extend_diagonal, "diag")
        if n - 4 >= 2:
            grow((n - 4, m - 4), extend_by_block, "block4")
        return out

    def _fill(self, n: int, m: int) -> None:
        if (n, m) in self._best:
            return
        for a in range(2, n + 1):
            for b in range(a, a + (m - n) + 1):
                if (a, b) not in self._best:
                    self._compute(a, b)

    def _compute(self, n: int, m: int) -> None:
        cands = self._candidates(n, m)
        self._best[(n, m)] = min(cands, key=lambda b: b.key)
        full = [b for b in cands if _full_support(b.config)]
        self._full[(n, m)] = min(full, key=lambda b: b.key) if full else None

    def build(self, n: int, m: int) -> Built:
        dims = BoardDims(n, m)
        flip = not dims.is_normalized
        n, m = dims.normalized().n, dims.normalized().m
        self._fill(n, m)
        best = self._best[(n, m)]
        if not is_total_dominating(best.config):
            raise AssertionError(f"builder produced an invalid placement for {n}x{m}")
        if flip:
            return Built(best.config.transpose(), best.provenance + "+transpose", best.steps)
        return best


_default_builder: CertificateBuilder | None = None


def default_builder() -> CertificateBuilder:
    global _default_builder
    if _default_builder is None:
        _default_builder = CertificateBuilder()
    return _default_builder


def best_known_certificate(n: int, m: int) -> RookConfig:
    """Smallest placement reachable from the stored blocks and bases."""
    return default_builder().build(n, m).config


def best_known_with_provenance(n: int, m: int) -> Built:
    return default_builder().build(n, m)
