"""Restricted, unrestricted and conformal partition numbers.

All counts are Python ``int`` (arbitrary precision).  Fixed-width kernels are
used where they are provably exact and fall back to Python integers on
overflow.

``W_n(s)``     partitions of s into parts <= n
``P(s)``       unrestricted partitions, equal to ``W_s(s)``
``P_n^m(s)``   partitions of s into at most m parts, each <= n
"""
from __future__ import annotations

import os
import threading
from functools import lru_cache
from typing import Sequence

from . import _kernels
from .errors import ResourceCeilingError

ENV_CEILING = "CONFORMAL_ORACLE_CEILING"
DEFAULT_CEILING = 10**8


def oracle_ceiling() -> int:
    """Visited-tuple ceiling for the brute-force oracle (env overridable)."""
    raw = os.environ.get(ENV_CEILING)
    if raw is None or not raw.strip():
        return DEFAULT_CEILING
    value = int(raw)
    if value < 1:
        raise ValueError(f"{ENV_CEILING} must be a positive integer, got {raw!r}")
    return value


def _check_nonneg(**kw: int) -> None:
    for k, v in kw.items():
        if not isinstance(v, int) or isinstance(v, bool):
            raise TypeError(f"{k} must be an int, got {type(v).__name__}")
        if v < 0:
            raise ValueError(f"{k} must be nonnegative, got {v}")


def _check_pos(**kw: int) -> None:
    _check_nonneg(**kw)
    for k, v in kw.items():
        if v < 1:
            raise ValueError(f"{k} must be >= 1, got {v}")


# ---------------------------------------------------------------------------
# W_n(s) table

def _restricted_table_exact(nmax: int, smax: int) -> list[list[int]]:
    rows = [[1] + [0] * smax]
    for r in range(1, nmax + 1):
        prev = rows[-1]
        row = list(prev)
        for s in range(r, smax + 1):
            row[s] += row[s - r]
        rows.append(row)
    return rows


class _RestrictedTable:
    """Grow-on-demand table of W_r(s), 0 <= r <= nmax, 0 <= s <= smax.

    Published rows are tuples and never mutated; growth swaps in a whole new
    snapshot under a lock, so readers never see a partial table.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._rows: tuple[tuple[int, ...], ...] = ((1,),)
        self._smax = 0

    def _build(self, nmax: int, smax: int) -> tuple[tuple[int, ...], ...]:
        table, ok = _kernels.backend().restricted_table(nmax, smax)
        if ok:
            return tuple(tuple(row) for row in table.tolist())
        return tuple(tuple(row) for row in _restricted_table_exact(nmax, smax))

    def get(self, n: int, s: int) -> int:
        n = min(n, s)
        rows, smax = self._rows, self._smax
        if n >= len(rows) or s > smax:
            with self._lock:
                rows, smax = self._rows, self._smax
                if n >= len(rows) or s > smax:
                    new_n = max(n, 2 * (len(rows) - 1), 16)
                    new_s = max(s, 2 * smax, 64)
                    rows = self._build(new_n, new_s)
                    self._rows, self._smax = rows, new_s
        return rows[n][s]

    def row(self, n: int, smax: int) -> tuple[int, ...]:
        self.get(min(n, smax), smax)
        rows = self._rows
        if n < len(rows):
            return rows[n][: smax + 1]
        # W_n(s) = W_s(s) when n exceeds s
        return tuple(rows[min(n, s)][s] for s in range(smax + 1))


_W = _RestrictedTable()


def restricted_count(n: int, s: int) -> int:
    """W_n(s): the number of partitions of s into parts no larger than n.

    >>> restricted_count(2, 4)
    3
    """
    _check_pos(n=n)
    _check_nonneg(s=s)
    return _W.get(n, s)


def restricted_row(n: int, smax: int) -> tuple[int, ...]:
    """(W_n(0), ..., W_n(smax)); n = 0 gives the row of the empty product."""
    _check_nonneg(n=n, smax=smax)
    if n == 0:
        return (1,) + (0,) * smax
    return _W.row(n, smax)


def unrestricted_count(s: int) -> int:
    """P(s), computed as W_s(s) with P(0) = 1."""
    _check_nonneg(s=s)
    if s == 0:
        return 1
    return _W.get(s, s)


# ---------------------------------------------------------------------------
# conformal partitions

def conformal_count_oracle(n: int, m: int, s: int, ceiling: int | None = None) -> int:
    """Count tuples (x_1..x_n) >= 0 with sum r*x_r = s and sum x_r <= m.

    Exhaustive enumeration; meant as ground truth for small n*m.  Raises
    ResourceCeilingError once more than ``ceiling`` tuples have been visited.
    """
    _check_pos(n=n, m=m)
    _check_nonneg(s=s)
    if ceiling is None:
        ceiling = oracle_ceiling()
    if s > n * m:
        # no tuple can reach s; the enumeration would still run, so skip it
        return 0
    count, visited, exceeded = _kernels.backend().oracle_count(n, m, s, ceiling)
    if exceeded:
        raise ResourceCeilingError(int(visited), ceiling)
    return int(count)


def _conformal_row_exact(n: int, m: int) -> list[int]:
    size = n * m + 1
    f = [[1] + [0] * (size - 1) for _ in range(m + 1)]
    for cap in range(1, n + 1):
        for j in range(1, m + 1):
            fj, fp = f[j], f[j - 1]
            for s in range(cap, size):
                fj[s] += fp[s - cap]
    return f[m]


@lru_cache(maxsize=512)
def conformal_row_dp(n: int, m: int) -> tuple[int, ...]:
    """(P_n^m(0), ..., P_n^m(nm)) by the DP over (parts used, largest-part cap)."""
    _check_pos(n=n, m=m)
    row, ok = _kernels.backend().conformal_row(n, m)
    if ok:
        return tuple(int(v) for v in row.tolist())
    return tuple(_conformal_row_exact(n, m))


def conformal_count_dp(n: int, m: int, s: int) -> int:
    """P_n^m(s): partitions of s into at most m parts, each at most n.

    >>> conformal_count_dp(4, 2, 4)
    3
    """
    _check_pos(n=n, m=m)
    _check_nonneg(s=s)
    if s > n * m:
        return 0
    return conformal_row_dp(n, m)[s]


def molien_series(degrees: Sequence[int], N: int) -> list[int]:
    """Coefficients of prod 1/(1 - t^d) up to t^N."""
    _check_nonneg(N=N)
    out = [1] + [0] * N
    for d in degrees:
        _check_pos(degree=d)
        # multiply by the geometric series 1 + t^d + t^2d + ...
        for s in range(d, N + 1):
            out[s] += out[s - d]
    return out
