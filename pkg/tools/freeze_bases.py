"""Regenerate src/rookdom/data/base_certificates.json.

Near-diagonal seeds for block extension: optimal placements with every row
and column occupied, found by the margin solver.
"""

import json
from pathlib import Path

from rookdom.core import is_total_dominating
from rookdom.solver import min_dominating

BOARDS = [(4, 5), (5, 6), (5, 7), (6, 8), (7, 9)]
OUT = Path(__file__).resolve().parents[1] / "src" / "rookdom" / "data" / "base_certificates.json"


def main():
    certs = []
    for n, m in BOARDS:
        plain = min_dominating(n, m)
        res = min_dominating(n, m, full_support=True)
        assert res.value == plain.value, (n, m, res.value, plain.value)
        assert is_total_dominating(res.certificate)
        certs.append({"n": n, "m": m, "k": 2, "cells": [list(c) for c in res.certificate.sorted_cells()]})
        print(f"{n}x{m}: {res.value}")
    body = ",\n  ".join(json.dumps(c) for c in certs)
    OUT.write_text('{"source": "margin solver, full support",\n "certificates": [\n  ' + body + "\n ]}\n")


if __name__ == "__main__":
    main()
