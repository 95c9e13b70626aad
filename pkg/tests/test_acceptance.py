"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

Run standalone for just the report:  python3 tests/test_acceptance.py
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction

import pytest

from rookdom.bounds import BoundsTable, Rule, propagate, ratio_intervals, recursive_lower
from rookdom.cache import ResultsCache
from rookdom.constructions import best_known_certificate, diagonal_blocks
from rookdom.core import is_total_dominating, verify
from rookdom.formulas import KNOWN_VALUES, Provenance, closed_gamma, diagonal_value
from rookdom.solver import brute_force_oracle, min_dominating, solve_table, submatrix_count

PUBLISHED_VALUES = dict(KNOWN_VALUES)


def criterion_1():
    slowest, bad = 0.0, []
    for (n, m), v in PUBLISHED_VALUES.items():
        t0 = time.perf_counter()
        res = min_dominating(n, m)
        slowest = max(slowest, time.perf_counter() - t0)
        if res.value != v or verify(res.certificate, 2):
            bad.append((n, m, res.value, v))
    ok = not bad and slowest <= 60
    return ok, f"{len(PUBLISHED_VALUES)} values, mismatches {bad}, slowest solve {slowest:.3f}s"


def criterion_2():
    boards = [(n, m) for n in range(2, 6) for m in range(n, 16) if n * m <= 30]
    bad = [(n, m) for n, m in boards if brute_force_oracle(n, m).value != min_dominating(n, m).value]
    return not bad, f"{len(boards)} boards with nm <= 30, mismatches {bad}"


def criterion_3(table):
    checked, bad = 0, []
    for (n, m), res in table.items():
        f = closed_gamma(n, m)
        if f:
            checked += 1
            if f.value != res.value:
                bad.append((n, m))
    return not bad, f"{checked} formula cells in 2<=n<=8, n<=m<=12, mismatches {bad}"


def criterion_4():
    bad_diag = [n for n in range(2, 1001)
                if len(cfg := diagonal_blocks(n)) != diagonal_value(n) or not is_total_dominating(cfg)]
    checked, bad = 0, []
    for n in range(2, 31):
        for m in range(n, 2 * n + 3):
            f = closed_gamma(n, m)
            if f:
                checked += 1
                cfg = best_known_certificate(n, m)
                if len(cfg) != f.value or not is_total_dominating(cfg):
                    bad.append((n, m))
    ok = not bad_diag and not bad
    return ok, f"diagonal n<=1000 failures {bad_diag}; best-known {checked} cells, failures {bad}"


def criterion_5(table):
    t = propagate(8, 12, list(table.values()))
    contra = [(n, m) for (n, m), r in table.items() if not t[(n, m)].lower <= r.value <= t[(n, m)].upper]
    # (6, 7) must come out of the rules: no formula, table value or
    # construction for that cell is seeded
    lean = BoundsTable(8, 12)
    lean.seed_basic()
    lean.seed_formulas([Provenance.TWO_ROWS, Provenance.WIDE_BOARD, Provenance.DIAGONAL])
    for (n, m), v in KNOWN_VALUES.items():
        if (n, m) != (6, 7):
            lean.seed_exact((n, m), v, Rule.FORMULA)
    r67 = lean.propagate()[(6, 7)]
    exact = {(n, n): diagonal_value(n) for n in range(2, 10)}
    rl = recursive_lower(10, 10, exact)
    ok = not contra and r67.exact and r67.lower == 10 and rl == 16
    return ok, (f"contradictions {contra}; (6,7) = [{r67.lower},{r67.upper}] by "
                f"{r67.lower_rule.value}/{r67.upper_rule.value} without solver or own seed; "
                f"recursiveLower(10,10) = {rl}")


def criterion_6(table):
    g = {k: r.value for k, r in table.items()}

    def gam(n, m):
        return g[(min(n, m), max(n, m))]

    structure = []
    for (n, m), r in table.items():
        cfg = r.certificate
        if r.value < 2 * n and not (cfg.row_count.min() >= 1 and cfg.col_count.min() >= 1
                                    and cfg.row_count.max() >= 3 and cfg.col_count.max() >= 3):
            structure.append((n, m))
    rnd = random.Random(7)
    certs = [r.certificate for r in table.values()]
    sub = 0
    for _ in range(200):
        cfg = rnd.choice(certs)
        a, b = rnd.randint(2, min(5, cfg.dims.n)), rnd.randint(2, min(5, cfg.dims.m))
        A = rnd.sample(range(1, cfg.dims.n + 1), a)
        B = rnd.sample(range(1, cfg.dims.m + 1), b)
        sub += submatrix_count(cfg, A, B) < gam(a, b)
    mono = []
    for (n, m), v in g.items():
        if (n, m + 1) in g and not v <= g[(n, m + 1)] <= v + 1:
            mono.append(("col", n, m))
        if n + 1 <= 8:
            w = gam(n + 1, m)
            if not v <= w <= v + 2 or (v < 2 * n and w > v + 1):
                mono.append(("row", n, m))
        if (n + 1, m + 1) in g and not v + 1 <= g[(n + 1, m + 1)] <= v + 2:
            mono.append(("diag", n, m))
    ok = not structure and sub == 0 and not mono
    return ok, f"structure violations {structure}; submatrix violations {sub}/200; monotonicity {mono}"


def criterion_7(table):
    dev = {n: abs(Fraction(closed_gamma(n, n).value, n) - Fraction(3, 2)) for n in (10, 100, 1000, 10 ** 6)}
    dev_ok = all(d <= Fraction(5, 2 * n) for n, d in dev.items())
    wide_bad = [n for n in range(2, 1001) if closed_gamma(n, max(2 * n - 2, n)).value != 2 * n]
    seeds = list(table.values())
    lines = []
    for alpha in (Fraction(3, 2), Fraction(7, 4), Fraction(2)):
        ws = ratio_intervals(alpha, 8, seeds=seeds)
        lines.append(f"alpha={alpha}: " + " ".join(f"({w.n},{w.m})[{w.low},{w.high}]" for w in ws))
    ok = dev_ok and not wide_bad
    return ok, "deviations " + ", ".join(f"n={n}: {d}" for n, d in dev.items()) + \
        f"; ratio 2 misses {wide_bad}\n    " + "\n    ".join(lines)


def criterion_8(tmp_dir):
    bare = propagate(8, 12)
    cache = ResultsCache(tmp_dir / "pins.json")
    parts, ok = [], True
    for n, m in [(6, 9), (7, 10), (6, 10), (7, 11)]:
        res = min_dominating(n, m)
        cache.put(res)
        r = bare[(n, m)]
        inside = res.exact and r.lower <= res.value <= r.upper and not verify(res.certificate, 2)
        ok &= inside
        parts.append(f"({n},{m})={res.value} in [{r.lower},{r.upper}]")
    cache.save()
    reread = ResultsCache(tmp_dir / "pins.json")
    ok &= len(reread.exact_results()) == 4
    return ok, "; ".join(parts) + " (derived, stored with certificates)"


# -- pytest glue ------------------------------------------------------------

@pytest.fixture(scope="module")
def table():
    return solve_table(8, 12)


def _report(capsys, num, title, result):
    ok, detail = result
    with capsys.disabled():
        print(f"\nCRITERION {num} {'PASS' if ok else 'FAIL'}: {title} -- {detail}")
    assert ok, detail


def test_criterion_1_published_values(capsys):
    _report(capsys, 1, "published values reproduced", criterion_1())


def test_criterion_2_oracle_equivalence(capsys):
    _report(capsys, 2, "oracle equivalence", criterion_2())


def test_criterion_3_formula_agreement(capsys, table):
    _report(capsys, 3, "formula agreement", criterion_3(table))


def test_criterion_4_construction_optimality(capsys):
    _report(capsys, 4, "construction optimality", criterion_4())


def test_criterion_5_bounds(capsys, table):
    _report(capsys, 5, "bounds soundness and strength", criterion_5(table))


def test_criterion_6_properties(capsys, table):
    _report(capsys, 6, "property suites", criterion_6(table))


def test_criterion_7_asymptotics(capsys, table):
    _report(capsys, 7, "asymptotics", criterion_7(table))


def test_criterion_8_derived_pins(capsys, tmp_path):
    _report(capsys, 8, "derived pins beyond published values", criterion_8(tmp_path))


if __name__ == "__main__":
    import tempfile
    from pathlib import Path

    t = solve_table(8, 12)
    with tempfile.TemporaryDirectory() as d:
        runs = [criterion_1(), criterion_2(), criterion_3(t), criterion_4(), criterion_5(t),
                criterion_6(t), criterion_7(t), criterion_8(Path(d))]
    for i, (ok, detail) in enumerate(runs, start=1):
        print(f"CRITERION {i} {'PASS' if ok else 'FAIL'}: {detail}")
    sys.exit(0 if all(ok for ok, _ in runs) else 1)
