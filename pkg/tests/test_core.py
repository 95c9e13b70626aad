import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rookdom.core import (
    BoardDims,
    CellOutOfRange,
    DomainError,
    RookConfig,
    certificate_dict,
    degree_matrix,
    domination_degree,
    from_json,
    is_total_dominating,
    normalize,
    render_ascii,
    to_json,
    verify,
)
from rookdom.constructions import square_block, two_columns


def neighbor_scan(cfg, i, j):
    """Degree by walking the row and column directly."""
    cells = cfg.cells
    row = sum(1 for jj in range(1, cfg.dims.m + 1) if jj != j and (i, jj) in cells)
    col = sum(1 for ii in range(1, cfg.dims.n + 1) if ii != i and (ii, j) in cells)
    return row + col


@st.composite
def configs(draw, max_side=7):
    n = draw(st.integers(2, max_side))
    m = draw(st.integers(2, max_side))
    mask = draw(st.lists(st.booleans(), min_size=n * m, max_size=n * m))
    cells = [(b // m + 1, b % m + 1) for b, on in enumerate(mask) if on]
    return RookConfig(BoardDims(n, m), cells)


# -- board and config model -------------------------------------------------


def test_dims_domain():
    with pytest.raises(DomainError):
        BoardDims(1, 5)
    d = BoardDims(5, 3)
    assert not d.is_normalized
    assert d.normalized() == BoardDims(3, 5)
    assert str(d) == "5x3"


def test_config_rejects_bad_cells():
    with pytest.raises(CellOutOfRange):
        RookConfig(BoardDims(3, 3), [(4, 1)])
    with pytest.raises(ValueError):
        RookConfig(BoardDims(3, 3), [(1, 1), (1, 1)])


def test_counts_follow_mutation():
    cfg = RookConfig(BoardDims(3, 4))
    cfg.add((1, 2))
    cfg.add((3, 2))
    assert list(cfg.row_count) == [1, 0, 1]
    assert list(cfg.col_count) == [0, 2, 0, 0]
    cfg.remove((1, 2))
    assert list(cfg.col_count) == [0, 1, 0, 0]
    with pytest.raises(KeyError):
        cfg.remove((1, 2))


@given(configs())
def test_counts_match_cells(cfg):
    assert cfg.row_count.sum() == cfg.col_count.sum() == len(cfg)
    for i in range(cfg.dims.n):
        assert cfg.row_count[i] == sum(1 for c in cfg.cells if c[0] == i + 1)


# -- degree -----------------------------------------------------------------


def test_degree_examples():
    cols = two_columns(3, 3)
    assert domination_degree(cols, (1, 3)) == 2
    assert domination_degree(cols, (1, 1)) == 3
    assert domination_degree(square_block(5), (2, 2)) == 2


def test_degree_out_of_range():
    with pytest.raises(CellOutOfRange):
        domination_degree(two_columns(3, 3), (0, 1))


@given(configs())
def test_degree_identity_matches_scan(cfg):
    deg = degree_matrix(cfg)
    for i in range(1, cfg.dims.n + 1):
        for j in range(1, cfg.dims.m + 1):
            expected = neighbor_scan(cfg, i, j)
            assert domination_degree(cfg, (i, j)) == expected
            assert deg[i - 1, j - 1] == expected


# -- verify -----------------------------------------------------------------


def test_verify_examples():
    assert verify(two_columns(5, 8), 2) == []
    lone = RookConfig(BoardDims(3, 3), [(1, 1)])
    bad = verify(lone, 2)
    assert len(bad) == 9
    assert {v.degree for v in bad} <= {0, 1}
    assert all(v.required == 2 and v.degree < 2 for v in bad)
    assert verify(square_block(6), 2) == []


@given(configs(), st.integers(1, 4))
def test_verify_iff_min_degree(cfg, k):
    bad = verify(cfg, k)
    deg = degree_matrix(cfg)
    assert (bad == []) == bool(deg.min() >= k)
    assert len(bad) == int((deg < k).sum())
    assert is_total_dominating(cfg, k) == (bad == [])


@given(configs(), st.randoms(use_true_random=False))
def test_verify_invariant_under_automorphisms(cfg, rnd):
    rows = list(range(1, cfg.dims.n + 1))
    cols = list(range(1, cfg.dims.m + 1))
    rnd.shuffle(rows)
    rnd.shuffle(cols)
    moved = cfg.permute(rows, cols)
    assert len(verify(moved, 2)) == len(verify(cfg, 2))
    assert len(verify(cfg.transpose(), 2)) == len(verify(cfg, 2))


def test_verify_requires_positive_k():
    with pytest.raises(ValueError):
        verify(two_columns(3, 3), 0)


# -- normalize --------------------------------------------------------------


def test_normalize_transposes():
    dims = BoardDims(5, 3)
    cfg = RookConfig(dims, [(5, 1), (2, 3)])
    out = normalize(dims, cfg)
    assert out.dims == BoardDims(3, 5)
    assert out.cells == {(1, 5), (3, 2)}


def test_normalize_identity():
    cfg = square_block(4)
    assert normalize(cfg.dims, cfg) == cfg


@given(configs())
def test_transpose_involution_and_normalize(cfg):
    assert cfg.transpose().transpose() == cfg
    out = normalize(cfg.dims, cfg)
    assert out.dims.is_normalized
    assert len(verify(out, 2)) == len(verify(cfg, 2))


# -- serialization ----------------------------------------------------------


def test_json_format_is_exact():
    cfg = RookConfig(BoardDims(2, 3), [(2, 1), (1, 3), (1, 1)])
    assert to_json(cfg) == '{"n": 2, "m": 3, "k": 2, "cells": [[1, 1], [1, 3], [2, 1]]}'
    assert certificate_dict(cfg, provenance="x")["provenance"] == "x"


@given(configs())
def test_json_round_trip(cfg):
    back, k = from_json(to_json(cfg))
    assert back == cfg and k == 2


@pytest.mark.parametrize("text", ["{bad", "[]", '{"n": 2}', '{"n": 2, "m": 2, "cells": [[3, 1]]}',
                                  '{"n": 2, "m": 2, "cells": [[1]]}'])
def test_json_malformed(text):
    with pytest.raises(ValueError):
        from_json(text)


def test_render_ascii():
    cfg = RookConfig(BoardDims(2, 3), [(1, 1), (2, 3)])
    assert render_ascii(cfg) == "#..\n..#"


def test_from_matrix():
    mat = np.array([[1, 0], [1, 1]])
    cfg = RookConfig.from_matrix(mat)
    assert cfg.cells == {(1, 1), (2, 1), (2, 2)}
    assert np.array_equal(cfg.to_matrix(), mat)
