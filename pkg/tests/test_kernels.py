import numpy as np
import pytest
from hypothesis import given, strategies as st

from confpart import _kernels
from confpart.partitions import _conformal_row_exact, _restricted_table_exact

needs_numba = pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba missing")


def test_env_selects_backend(monkeypatch):
    monkeypatch.setenv(_kernels.ENV_BACKEND, "numpy")
    assert _kernels.backend().name == "numpy"
    monkeypatch.setenv(_kernels.ENV_BACKEND, "off")
    assert _kernels.backend().name == "numpy"
    monkeypatch.delenv(_kernels.ENV_BACKEND)
    assert _kernels.backend().name == ("numba" if _kernels.HAVE_NUMBA else "numpy")


def test_unknown_backend(monkeypatch):
    monkeypatch.setenv(_kernels.ENV_BACKEND, "fortran")
    with pytest.raises(ValueError):
        _kernels.backend()


def test_restricted_table_matches_exact(kernel_backend):
    table, ok = kernel_backend.restricted_table(12, 60)
    assert ok
    assert np.asarray(table).tolist() == _restricted_table_exact(12, 60)


def test_restricted_table_reports_overflow(kernel_backend):
    # P(500) ~ 2.3e21 exceeds int64
    _, ok = kernel_backend.restricted_table(500, 500)
    assert not ok


@pytest.mark.parametrize("n,m", [(1, 1), (3, 4), (6, 5), (8, 8)])
def test_conformal_row_matches_exact(kernel_backend, n, m):
    row, ok = kernel_backend.conformal_row(n, m)
    assert ok
    assert np.asarray(row).tolist() == _conformal_row_exact(n, m)


def test_oracle_ceiling_flag(kernel_backend):
    count, visited, exceeded = kernel_backend.oracle_count(5, 5, 12, 10)
    assert exceeded and visited > 10


@given(st.lists(st.floats(0.1, 10.0), min_size=1, max_size=8))
def test_elementary_backends_agree(x):
    arr = np.asarray(x)
    ref = np.asarray(_kernels.NUMPY.elementary(arr))
    for be in _kernels.BACKENDS.values():
        assert np.allclose(be.elementary(arr), ref, rtol=1e-12)


@needs_numba
def test_bisect_backends_agree():
    desc = np.array([1.0, 0.0, -2.0])  # t^2 - 2
    a = _kernels.NUMPY.bisect(desc, 0.0, 2.0, 1e-15, 400)
    b = _kernels.NUMBA.bisect(desc, 0.0, 2.0, 1e-15, 400)
    assert a[0] == pytest.approx(2**0.5, abs=1e-15)
    assert a[0] == b[0]
