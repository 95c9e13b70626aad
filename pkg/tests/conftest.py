import pytest

from rookdom.solver import solve_table

TABLE_N, TABLE_M = 8, 12


@pytest.fixture(scope="session")
def solved():
    """Margin-solver results for 2 <= n <= 8, n <= m <= 12."""
    return solve_table(TABLE_N, TABLE_M)


@pytest.fixture(scope="session")
def gamma(solved):
    def g(n, m):
        n, m = min(n, m), max(n, m)
        return solved[(n, m)].value

    return g


@pytest.fixture
def cache_path(tmp_path, monkeypatch):
    p = tmp_path / "cache.json"
    monkeypatch.setenv("ROOKDOM_CACHE", str(p))
    return p
