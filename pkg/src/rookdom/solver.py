"""Exact total 2-domination numbers of rook's graphs, with certificates.

The main route searches over margins. With row sums r and column sums c, a
placement is total 2-dominating exactly when

  * r[i] + c[j] >= 2 for every cell (equivalently min r + min c >= 2), and
  * every rook sits on a cell with r[i] + c[j] >= 4,

so for each candidate pair of sorted margins the question is whether a 0/1
matrix with those margins fits inside the staircase {r[i] + c[j] >= 4}. That
is a bipartite flow problem, solved in ``kernels.realize_margins``.

Two independent checks exist for cross-validation: exhaustive subset
enumeration on small boards and a row-by-row backtracking search.
"""

from __future__ import annotations

import enum
import logging
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .core import BoardDims, DomainError, RookConfig, verify

log = logging.getLogger(__name__)

BRUTE_FORCE_CAP = 30
BACKTRACK_CAP = 30


class Method(str, enum.Enum):
    MARGIN_FLOW = "MarginFlow"
    BRUTE_FORCE = "BruteForce"
    BACKTRACK = "Backtrack"
    FORMULA = "Formula"


class BoardTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class MarginPair:
    r: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        if sum(self.r) != sum(self.c):
            raise ValueError(f"row sums total {sum(self.r)} but column sums total {sum(self.c)}")
        if list(self.r) != sorted(self.r, reverse=True) or list(self.c) != sorted(self.c, reverse=True):
            raise ValueError("margins must be sorted non-increasing")

    @property
    def k(self) -> int:
        return sum(self.r)


@dataclass
class GammaResult:
    """Outcome of an exact solve.

    ``value`` is None when the search budget ran out; ``lower``/``upper`` then
    bracket the answer and ``certificate`` witnesses ``upper``.
    """

    dims: BoardDims
    value: int | None
    certificate: RookConfig
    method: Method
    lower: int = 0
    upper: int = 0
    stats: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.value is not None:
            self.lower = self.upper = self.value
            if len(self.certificate) != self.value:
                raise AssertionError("certificate size differs from the reported value")

    @property
    def exact(self) -> bool:
        return self.value is not None


def _normalized(n: int, m: int) -> BoardDims:
    return BoardDims(n, m).normalized()


def two_columns(n: int, m: int) -> RookConfig:
    return RookConfig(BoardDims(n, m), ((i, j) for i in range(1, n + 1) for j in (1, 2)))


# -- margin enumeration -----------------------------------------------------


def partitions(total: int, parts: int, lo: int, hi: int, min_max: int = 0) -> list[tuple[int, ...]]:
    """Non-increasing tuples of ``parts`` integers in [lo, hi] summing to
    ``total`` whose largest entry is at least ``min_max``, in colex order."""
    out: list[tuple[int, ...]] = []
    if parts <= 0 or lo > hi:
        return out

    def rec(prefix: list[int], remaining: int, slots: int, cap: int) -> None:
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        top = min(cap, remaining - lo * (slots - 1))
        for x in range(top, lo - 1, -1):
            if x * slots < remaining:
                break
            prefix.append(x)
            rec(prefix, remaining - x, slots - 1, x)
            prefix.pop()

    rec([], total, parts, hi)
    out = [p for p in out if p[0] >= min_max]
    out.sort(key=lambda p: p[::-1])
    return out


def margin_feasible(dims: BoardDims, margins: MarginPair) -> RookConfig | None:
    """A placement realizing ``margins`` inside the staircase, or None."""
    r = np.asarray(margins.r, dtype=np.int64)
    c = np.asarray(margins.c, dtype=np.int64)
    if r.shape[0] != dims.n or c.shape[0] != dims.m:
        raise DomainError(f"margins of length {len(r)}/{len(c)} do not fit a {dims} board")
    if r[-1] + c[-1] < 2:
        return None
    out = np.zeros((dims.n, dims.m), dtype=np.int8)
    if not kernels.realize_margins(r, c, out):
        return None
    return RookConfig.from_matrix(out)


def _margin_arrays(k: int, n: int, m: int, full_support: bool) -> tuple[np.ndarray, np.ndarray]:
    # below 2n every row and column is occupied, and a lone rook in a column
    # forces three rooks in its row (and vice versa)
    if k < 2 * n:
        rows = partitions(k, n, 1, m, 3)
        cols = partitions(k, m, 1, n, 3)
    elif full_support:
        rows = partitions(k, n, 1, m)
        cols = partitions(k, m, 1, n)
    else:
        rows = partitions(k, n, 0, m)
        cols = partitions(k, m, 0, n)
    r = np.array(rows, dtype=np.int64).reshape(len(rows), n)
    c = np.array(cols, dtype=np.int64).reshape(len(cols), m)
    return r, c


def _scan_k(k, dims, full_support, deadline, checks_left, chunk=256):
    """Returns (config | None, checks_used, exhausted_budget)."""
    rows, cols = _margin_arrays(k, dims.n, dims.m, full_support)
    out = np.zeros((dims.n, dims.m), dtype=np.int8)
    used = 0
    if rows.shape[0] == 0 or cols.shape[0] == 0:
        return None, 0, False
    for start in range(0, rows.shape[0], chunk):
        if deadline is not None and time.monotonic() > deadline:
            return None, used, True
        limit = -1 if checks_left is None else max(checks_left - used, 0)
        p, q, done = kernels.scan_margin_pairs(rows[start:start + chunk], cols, limit, out)
        used += int(done)
        if p == -2:
            return None, used, True
        if p >= 0:
            return RookConfig.from_matrix(out), used, False
    return None, used, False


def min_dominating(
    n: int,
    m: int,
    *,
    budget_seconds: float | None = None,
    max_checks: int | None = None,
    lower_start: int | None = None,
    full_support: bool = False,
) -> GammaResult:
    """Minimum total 2-dominating rook placement on an n x m board.

    Sizes are tried upward from ``lower_start`` (default: the strongest
    proven lower bound). ``full_support`` restricts the search to placements
    with a rook in every row and column, which changes the answer only when
    the unrestricted optimum is the two-column placement.
    """
    dims = _normalized(n, m)
    n, m = dims.n, dims.m
    if lower_start is None:
        from .bounds import proven_lower_bound

        lower_start = proven_lower_bound(n, m)
    lower_start = max(1, lower_start)
    if not full_support:
        lower_start = min(lower_start, 2 * n)
    deadline = None if budget_seconds is None else time.monotonic() + budget_seconds
    checks = 0
    k = lower_start
    top = n * m if full_support else 2 * n
    while k <= top:
        if k == 2 * n and not full_support:
            cert = two_columns(n, m)
            break
        left = None if max_checks is None else max_checks - checks
        cert, used, out_of_budget = _scan_k(k, dims, full_support, deadline, left)
        checks += used
        if out_of_budget:
            log.info("budget exhausted at %s, k=%d", dims, k)
            fallback = two_columns(n, m)
            return GammaResult(dims, None, fallback, Method.MARGIN_FLOW, lower=k, upper=2 * n,
                               stats={"checks": checks})
        if cert is not None:
            break
        k += 1
    else:  # pragma: no cover - the full board always works
        raise AssertionError(f"no placement found on {dims}")
    bad = verify(cert, 2)
    if bad:
        raise AssertionError(f"solver produced an invalid certificate on {dims}: {bad[:3]}")
    return GammaResult(dims, len(cert), cert, Method.MARGIN_FLOW, stats={"checks": checks, "start": lower_start})


# -- independent routes -----------------------------------------------------


def brute_force_oracle(n: int, m: int) -> GammaResult:
    """Exhaustive search over subsets of cells, smallest size first."""
    dims = _normalized(n, m)
    if dims.n * dims.m > BRUTE_FORCE_CAP:
        raise BoardTooLarge(f"brute force is capped at n*m <= {BRUTE_FORCE_CAP}, got {dims}")
    for size in range(1, dims.n * dims.m + 1):
        mask = int(kernels.brute_force_scan(dims.n, dims.m, size))
        if mask >= 0:
            cells = [(b // dims.m + 1, b % dims.m + 1) for b in range(dims.n * dims.m) if mask >> b & 1]
            cert = RookConfig(dims, cells)
            if verify(cert, 2):
                raise AssertionError(f"brute force returned an invalid placement on {dims}")
            return GammaResult(dims, size, cert, Method.BRUTE_FORCE)
    raise AssertionError("unreachable: the full board is dominating")  # pragma: no cover


@lru_cache(maxsize=None)
def _popcounts(bits: int) -> tuple[int, ...]:
    return tuple(bin(x).count("1") for x in range(1 << bits))


def _backtrack_size(n: int, m: int, k: int) -> list[int] | None:
    # Canonical form: row 0 carries a maximal count p and occupies columns
    # 0..p-1; rows 1..n-1 are sorted by bitmask, descending.
    pop = _popcounts(m)
    for p in range(-(-k // n), min(m, k) + 1):
        rows = [(1 << p) - 1]

        def dfs(prev: int, left: int) -> bool:
            slots = n - len(rows)
            if slots == 0:
                return left == 0 and _rows_dominate(rows, m)
            if left > slots * p:
                return False
            for mask in range(prev, -1, -1):
                c = pop[mask]
                if c > p or c > left:
                    continue
                rows.append(mask)
                if dfs(mask, left - c):
                    return True
                rows.pop()
            return False

        if dfs((1 << m) - 1, k - p):
            return list(rows)
    return None


def _rows_dominate(rows: Sequence[int], m: int) -> bool:
    row_cnt = [bin(x).count("1") for x in rows]
    col_cnt = [sum((x >> j) & 1 for x in rows) for j in range(m)]
    for i, x in enumerate(rows):
        for j in range(m):
            if row_cnt[i] + col_cnt[j] - 2 * ((x >> j) & 1) < 2:
                return False
    return True


def backtrack_solve(n: int, m: int) -> GammaResult:
    """Row-by-row backtracking with canonical row ordering (validation tool)."""
    dims = _normalized(n, m)
    if dims.n * dims.m > BACKTRACK_CAP:
        raise BoardTooLarge(f"backtracking is capped at n*m <= {BACKTRACK_CAP}, got {dims}")
    for k in range(1, dims.n * dims.m + 1):
        rows = _backtrack_size(dims.n, dims.m, k)
        if rows is not None:
            cells = [(i + 1, j + 1) for i, x in enumerate(rows) for j in range(dims.m) if x >> j & 1]
            cert = RookConfig(dims, cells)
            if verify(cert, 2):
                raise AssertionError(f"backtracking returned an invalid placement on {dims}")
            return GammaResult(dims, k, cert, Method.BACKTRACK)
    raise AssertionError("unreachable")  # pragma: no cover


SOLVERS = {
    "margin": min_dominating,
    "brute": brute_force_oracle,
    "backtrack": backtrack_solve,
}


def solve(n: int, m: int, method: str = "margin", **options) -> GammaResult:
    try:
        fn = SOLVERS[method]
    except KeyError:
        raise DomainError(f"unknown method {method!r}; choose from {sorted(SOLVERS)}") from None
    if method != "margin" and options:
        raise DomainError(f"options {sorted(options)} only apply to the margin solver")
    return fn(n, m, **options)


def solve_table(max_n: int, max_m: int, **options) -> dict[tuple[int, int], GammaResult]:
    """Margin-solver results for every 2 <= n <= max_n, n <= m <= max_m."""
    return {
        (n, m): min_dominating(n, m, **options)
        for n in range(2, max_n + 1)
        for m in range(n, max_m + 1)
    }


def submatrix_count(cfg: RookConfig, rows: Iterable[int], cols: Iterable[int]) -> int:
    """Rooks lying in any of the chosen rows or any of the chosen columns."""
    A, B = set(rows), set(cols)
    if len(A) < 2 or len(B) < 2:
        raise DomainError("need at least two rows and two columns")
    if not all(1 <= i <= cfg.dims.n for i in A) or not all(1 <= j <= cfg.dims.m for j in B):
        raise DomainError(f"row/column subset outside the {cfg.dims} board")
    return sum(1 for i, j in cfg.cells if i in A or j in B)
