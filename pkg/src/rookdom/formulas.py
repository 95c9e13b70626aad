"""Closed forms, known small values and single-shot bounds for the total
2-domination number of the n x m rook's graph.

Everything here is exact integer or rational arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .core import DomainError


class Provenance(str, enum.Enum):
    TWO_ROWS = "TwoRows"
    WIDE_BOARD = "WideBoard"
    DIAGONAL = "Diagonal"
    NEAR_DIAGONAL_1 = "NearDiagonal1"
    NEAR_DIAGONAL_2 = "NearDiagonal2"
    KNOWN_TABLE = "KnownTable"
    NONE = "None"


@dataclass(frozen=True)
class FormulaResult:
    value: int | None
    provenance: Provenance

    def __post_init__(self):
        if (self.value is None) != (self.provenance is Provenance.NONE):
            raise ValueError("a formula value needs a provenance and vice versa")

    def __bool__(self) -> bool:
        return self.value is not None


@dataclass(frozen=True)
class BoundsPair:
    lower: int
    upper: int

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"empty interval [{self.lower}, {self.upper}]")


# Small values stated in the literature for square and near-square boards.
KNOWN_VALUES: dict[tuple[int, int], int] = {
    (2, 2): 4, (3, 3): 5, (4, 4): 6, (5, 5): 8, (6, 6): 10,
    (2, 3): 4, (3, 4): 6, (4, 5): 7, (5, 6): 9, (6, 7): 10,
    (2, 4): 4, (3, 5): 6, (4, 6): 8, (5, 7): 9, (6, 8): 11, (7, 9): 13,
    (2, 5): 4,
}


def _check(n: int, m: int) -> None:
    if n < 2 or m < 2:
        raise DomainError(f"board dimensions must be at least 2, got {n} x {m}")


def diagonal_value(n: int) -> int:
    if n % 4 == 0:
        return 3 * n // 2
    if n % 2 == 1:
        return (3 * n + 1) // 2
    return (3 * n + 2) // 2


def near_diagonal_1_value(n: int) -> int:
    return (3 * n + 2) // 2 if n % 2 == 0 else (3 * n + 3) // 2


def near_diagonal_2_value(n: int) -> int:
    if n % 2 == 0:
        return (3 * n + 4) // 2
    if n % 4 == 1:
        return (3 * n + 3) // 2
    return (3 * n + 5) // 2


def _formula_only(n: int, m: int) -> FormulaResult:
    if n == 2:
        return FormulaResult(4, Provenance.TWO_ROWS)
    if m >= 2 * n - 2:
        return FormulaResult(2 * n, Provenance.WIDE_BOARD)
    if m == n:
        return FormulaResult(diagonal_value(n), Provenance.DIAGONAL)
    if m == n + 1:
        return FormulaResult(near_diagonal_1_value(n), Provenance.NEAR_DIAGONAL_1)
    if m == n + 2 and n >= 4:
        return FormulaResult(near_diagonal_2_value(n), Provenance.NEAR_DIAGONAL_2)
    return FormulaResult(None, Provenance.NONE)


def closed_gamma(n: int, m: int) -> FormulaResult:
    """Closed-form value for a normalized board (n <= m), if one is known.

    Rules are tried in a fixed order: two rows, wide board (m >= 2n - 2),
    square, m = n + 1, m = n + 2 (n >= 4), then the table of known values.
    """
    _check(n, m)
    if n > m:
        raise DomainError(f"closed_gamma expects n <= m, got {n} x {m}")
    res = _formula_only(n, m)
    if res:
        return res
    if (n, m) in KNOWN_VALUES:
        return FormulaResult(KNOWN_VALUES[(n, m)], Provenance.KNOWN_TABLE)
    return res


def gamma_formula(n: int, m: int) -> int | None:
    """Orientation-free shortcut: the closed-form value or None."""
    return closed_gamma(min(n, m), max(n, m)).value


def self_check() -> None:
    """Overlapping rules must agree with the known-value table."""
    for (n, m), v in KNOWN_VALUES.items():
        res = _formula_only(n, m)
        if res and res.value != v:
            raise AssertionError(f"{res.provenance.value} gives {res.value} for {n}x{m}, table says {v}")


def degree_lower_bound(n: int, m: int) -> int:
    """ceil(2nm / (n + m - 2)): each rook covers n + m - 2 cells, each cell needs 2."""
    _check(n, m)
    return -(-2 * n * m // (n + m - 2))


def basic_bounds(n: int, m: int) -> BoundsPair:
    _check(n, m)
    n, m = min(n, m), max(n, m)
    lower = max(
        degree_lower_bound(n, m),
        n + 2,
        min(m + 2, 2 * n),
        -(-3 * n // 2),
    )
    return BoundsPair(lower, 2 * n)


def sandwich_bound(n: int, m: int) -> BoundsPair:
    """Bracket an n x m board by the square n x n value."""
    _check(n, m)
    if not 3 <= n <= m:
        raise DomainError(f"sandwich bound needs 3 <= n <= m, got {n} x {m}")
    sq = closed_gamma(n, n).value
    return BoundsPair(sq, min(2 * n, sq + m - n))


class FormulaUndefined(LookupError):
    pass


def asymptotic_ratio(n: int, k: int) -> Fraction:
    """gamma(n, n + k) / n as an exact fraction."""
    if k < 0:
        raise DomainError("k must be non-negative")
    res = closed_gamma(n, n + k)
    if not res:
        raise FormulaUndefined(
            f"no closed form for {n}x{n + k}; compute it with the solver (rookdom solve {n} {n + k})"
        )
    return Fraction(res.value, n)


self_check()
