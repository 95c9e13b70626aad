"""Interval table of gamma(n, m) closed under the known inequalities.

Each cell (n, m), n <= m, carries an integer interval [lower, upper]. Rules
are inequalities between cells of the form gamma(A) <= gamma(B) + d; each
one tightens upper(A) from upper(B) and lower(B) from lower(A). A worklist
applies them until nothing changes. All rules are monotone on a finite
lattice, so the resulting intervals do not depend on the evaluation order.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .core import BoardDims, DomainError
from .formulas import Provenance, basic_bounds, closed_gamma, degree_lower_bound

GAMMA_3x3 = 5
GAMMA_4x4 = 6


class Rule(str, enum.Enum):
    DEGREE_LB = "DegreeLB"
    BASIC_LB = "BasicLB"
    COR32 = "Cor32"
    RECURSIVE_LB = "RecursiveLB"
    MONO_ROW = "MonoRow"
    MONO_COL = "MonoCol"
    MONO_DIAG = "MonoDiag"
    SANDWICH = "Sandwich"
    TWO_COL_UB = "TwoColUB"
    EXTEND_UB = "ExtendUB"
    FORMULA = "Formula"
    SOLVER = "Solver"


class InconsistentBounds(ValueError):
    pass


@dataclass
class BoundsRecord:
    dims: BoardDims
    lower: int
    upper: int
    lower_rule: Rule
    upper_rule: Rule
    history: list = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def provenance(self) -> list[Rule]:
        if self.lower_rule == self.upper_rule:
            return [self.lower_rule]
        return [self.lower_rule, self.upper_rule]

    def as_dict(self) -> dict:
        return {
            "n": self.dims.n,
            "m": self.dims.m,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "provenance": [r.value for r in self.provenance],
        }


# -- single-cell lower bounds ----------------------------------------------


def recursive_lower(n: int, m: int, table) -> int:
    """min(gamma(3x3) + lower(n-3, m-3), gamma(4x4) + lower(n-4, m-4)).

    ``table`` maps normalized (n, m) to a lower bound (a dict or anything
    with ``__getitem__``).
    """
    n, m = min(n, m), max(n, m)
    if n < 6:
        raise DomainError(f"recursive lower bound needs 6 <= n <= m, got {n} x {m}")
    return min(GAMMA_3x3 + table[(n - 3, m - 3)], GAMMA_4x4 + table[(n - 4, m - 4)])


@lru_cache(maxsize=None)
def proven_lower_bound(n: int, m: int) -> int:
    """Strongest lower bound from single-cell facts plus the recursion."""
    n, m = min(n, m), max(n, m)
    lb = basic_bounds(n, m).lower
    if n >= 6:
        lb = max(lb, recursive_lower(n, m, _LowerView()))
    return lb


class _LowerView:
    def __getitem__(self, key):
        return proven_lower_bound(*key)


# -- propagation ------------------------------------------------------------


@dataclass(frozen=True)
class _Edge:
    """gamma(a) <= gamma(b) + d, optionally only while upper(cond) < limit."""

    a: tuple[int, int]
    b: tuple[int, int]
    d: int
    rule: Rule
    cond: tuple[int, int] | None = None
    limit: int = 0


def _norm(n: int, m: int) -> tuple[int, int]:
    return (n, m) if n <= m else (m, n)


class BoundsTable:
    """Propagated intervals for all 2 <= n <= max_n, n <= m <= max_m."""

    def __init__(self, max_n: int, max_m: int, verbose: bool = False):
        if max_n < 2 or max_m < max_n:
            raise DomainError(f"need 2 <= max_n <= max_m, got {max_n}, {max_m}")
        self.max_n, self.max_m = max_n, max_m
        self.verbose = verbose
        self.cells = [(n, m) for n in range(2, max_n + 1) for m in range(n, max_m + 1)]
        self.records: dict[tuple[int, int], BoundsRecord] = {
            c: BoundsRecord(BoardDims(*c), 0, 10**9, Rule.DEGREE_LB, Rule.TWO_COL_UB) for c in self.cells
        }
        self.edges: list[_Edge] = self._build_edges()
        self._recursive = [c for c in self.cells if c[0] >= 6]

    def __contains__(self, cell) -> bool:
        return cell in self.records

    def __getitem__(self, cell) -> BoundsRecord:
        return self.records[_norm(*cell)]

    def _build_edges(self) -> list[_Edge]:
        E = []
        inside = self.records.__contains__
        for n, m in self.cells:
            right = (n, m + 1)
            if inside(right):
                E.append(_Edge((n, m), right, 0, Rule.MONO_COL))
                E.append(_Edge(right, (n, m), 1, Rule.MONO_COL))
            down = _norm(n + 1, m)
            if inside(down):
                E.append(_Edge((n, m), down, 0, Rule.MONO_ROW))
                E.append(_Edge(down, (n, m), 2, Rule.MONO_ROW))
                # one extra row costs at most one rook while gamma(n, m) < 2n
                E.append(_Edge(down, (n, m), 1, Rule.MONO_ROW, cond=(n, m), limit=2 * n))
            diag = (n + 1, m + 1)
            if inside(diag):
                E.append(_Edge((n, m), diag, -1, Rule.MONO_DIAG))
                E.append(_Edge(diag, (n, m), 2, Rule.MONO_DIAG))
            if n >= 3 and m > n:
                E.append(_Edge((n, n), (n, m), 0, Rule.SANDWICH))
                E.append(_Edge((n, m), (n, n), m - n, Rule.SANDWICH))
        return E

    # seeds

    def tighten_lower(self, cell, value: int, rule: Rule, source=None) -> bool:
        rec = self.records[cell]
        if value > rec.lower:
            rec.lower, rec.lower_rule = value, rule
            if self.verbose:
                rec.history.append(("lower", value, rule.value, source))
            return True
        return False

    def tighten_upper(self, cell, value: int, rule: Rule, source=None) -> bool:
        rec = self.records[cell]
        if value < rec.upper:
            rec.upper, rec.upper_rule = value, rule
            if self.verbose:
                rec.history.append(("upper", value, rule.value, source))
            return True
        return False

    def seed_basic(self) -> None:
        for n, m in self.cells:
            c = (n, m)
            self.tighten_lower(c, degree_lower_bound(n, m), Rule.DEGREE_LB)
            self.tighten_lower(c, n + 2, Rule.BASIC_LB)
            self.tighten_lower(c, min(m + 2, 2 * n), Rule.BASIC_LB)
            self.tighten_lower(c, -(-3 * n // 2), Rule.COR32)
            self.tighten_upper(c, 2 * n, Rule.TWO_COL_UB)

    def seed_formulas(self, families: Iterable[Provenance] | None = None) -> None:
        allowed = None if families is None else set(families)
        for n, m in self.cells:
            res = closed_gamma(n, m)
            if res and (allowed is None or res.provenance in allowed):
                self.seed_exact((n, m), res.value, Rule.FORMULA)

    def seed_exact(self, cell, value: int, rule: Rule) -> None:
        cell = _norm(*cell)
        if cell not in self.records:
            return
        self.tighten_lower(cell, value, rule)
        self.tighten_upper(cell, value, rule)

    def seed_results(self, results) -> None:
        """Exact solver results (objects with ``dims`` and ``value``)."""
        for res in results:
            if res.value is not None:
                self.seed_exact((res.dims.n, res.dims.m), res.value, Rule.SOLVER)

    def seed_constructions(self) -> None:
        from .constructions import default_builder

        builder = default_builder()
        for c in self.cells:
            self.tighten_upper(c, len(builder.build(*c).config), Rule.EXTEND_UB)

    # fixpoint

    def _check(self, cell) -> None:
        rec = self.records[cell]
        if rec.lower > rec.upper:
            raise InconsistentBounds(
                f"cell {cell[0]}x{cell[1]}: lower {rec.lower} ({rec.lower_rule.value}) "
                f"exceeds upper {rec.upper} ({rec.upper_rule.value})"
            )

    def propagate(self, order: list[int] | None = None) -> "BoundsTable":
        """Run the rules to a fixpoint. ``order`` permutes the rule list
        (used to check order independence)."""
        edges = self.edges if order is None else [self.edges[i] for i in order]
        touching: dict[tuple[int, int], list] = {c: [] for c in self.cells}
        for e in edges:
            touching[e.a].append(e)
            touching[e.b].append(e)
            if e.cond is not None:
                touching[e.cond].append(e)
        rec_deps: dict[tuple[int, int], list] = {c: [] for c in self.cells}
        for c in self._recursive:
            for src in ((c[0] - 3, c[1] - 3), (c[0] - 4, c[1] - 4)):
                rec_deps[src].append(c)

        for c in self.cells:
            self._check(c)
        queue = deque(self.cells)
        queued = set(self.cells)
        while queue:
            cell = queue.popleft()
            queued.discard(cell)
            changed: set = set()
            for e in touching[cell]:
                self._apply(e, changed)
            for c in rec_deps[cell] + ([cell] if cell[0] >= 6 else []):
                val = recursive_lower(c[0], c[1], {k: self.records[k].lower for k in
                                                   ((c[0] - 3, c[1] - 3), (c[0] - 4, c[1] - 4))})
                if self.tighten_lower(c, val, Rule.RECURSIVE_LB, "recursion"):
                    changed.add(c)
            for c in changed:
                self._check(c)
                if c not in queued:
                    queue.append(c)
                    queued.add(c)
        return self

    def _apply(self, e: _Edge, changed: set) -> None:
        if e.cond is not None and not self.records[e.cond].upper < e.limit:
            return
        A, B = self.records[e.a], self.records[e.b]
        if self.tighten_upper(e.a, B.upper + e.d, e.rule, e.b):
            changed.add(e.a)
        if self.tighten_lower(e.b, A.lower - e.d, e.rule, e.a):
            changed.add(e.b)

    # views

    def intervals(self) -> dict[tuple[int, int], tuple[int, int]]:
        return {c: (r.lower, r.upper) for c, r in self.records.items()}

    def rows(self, full_grid: bool = True) -> list[tuple[int, int, BoundsRecord]]:
        """Table rows; with ``full_grid`` every (n, m) in [2, max_n] x [2, max_m]
        appears, looked up through its normalized cell."""
        if not full_grid:
            return [(n, m, self.records[(n, m)]) for n, m in self.cells]
        return [(n, m, self[(n, m)]) for n in range(2, self.max_n + 1) for m in range(2, self.max_m + 1)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "m", "lower", "upper", "exact", "provenance"])
        for n, m, r in self.rows():
            w.writerow([n, m, r.lower, r.upper, str(r.exact).lower(), ";".join(p.value for p in r.provenance)])
        return buf.getvalue()

    def to_json(self) -> str:
        out = []
        for n, m, r in self.rows():
            d = r.as_dict()
            d["n"], d["m"] = n, m
            out.append(d)
        return json.dumps(out, indent=1)

    def to_ascii(self) -> str:
        width = max(len(_cell_text(r)) for _, _, r in self.rows()) + 1
        width = max(width, 4)
        header = "n\\m".ljust(4) + "".join(str(m).rjust(width) for m in range(2, self.max_m + 1))
        lines = [header]
        for n in range(2, self.max_n + 1):
            line = str(n).ljust(4)
            for m in range(2, self.max_m + 1):
                line += _cell_text(self[(n, m)]).rjust(width)
            lines.append(line)
        return "\n".join(lines)


def _cell_text(r: BoundsRecord) -> str:
    return str(r.lower) if r.exact else f"{r.lower}-{r.upper}"


def propagate(
    max_n: int,
    max_m: int,
    seeds: Iterable = (),
    *,
    formulas: bool | Iterable[Provenance] = True,
    constructions: bool = True,
    verbose: bool = False,
) -> BoundsTable:
    """Build and close the bounds table.

    ``seeds`` are exact results (anything with ``dims`` and ``value``).
    ``formulas`` seeds closed forms: True for all families, False for none,
    or an iterable of the families to use.
    """
    t = BoundsTable(max_n, max_m, verbose=verbose)
    t.seed_basic()
    if formulas is True:
        t.seed_formulas()
    elif formulas:
        t.seed_formulas(formulas)
    if constructions:
        t.seed_constructions()
    t.seed_results(seeds)
    return t.propagate()


@dataclass(frozen=True)
class RatioWitness:
    n: int
    m: int
    low: Fraction
    high: Fraction

    @property
    def exact(self) -> bool:
        return self.low == self.high


def ratio_intervals(alpha, k_max: int, table: BoundsTable | None = None, seeds: Iterable = ()) -> list[RatioWitness]:
    """For each n <= k_max, the first m >= n whose interval of gamma(n, m)/n
    contains ``alpha``. Boards with no such m in the table are skipped."""
    alpha = Fraction(alpha)
    if not Fraction(3, 2) <= alpha <= 2:
        raise DomainError(f"alpha must lie in [3/2, 2], got {alpha}")
    if k_max < 2:
        raise DomainError("k_max must be at least 2")
    if table is None:
        table = propagate(k_max, max(2 * k_max - 2, k_max), seeds)
    out = []
    for n in range(2, k_max + 1):
        for m in range(n, table.max_m + 1):
            r = table[(n, m)]
            lo, hi = Fraction(r.lower, n), Fraction(r.upper, n)
            if lo <= alpha <= hi:
                out.append(RatioWitness(n, m, lo, hi))
                break
    return out
