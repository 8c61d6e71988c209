"""Piecewise closed forms for P_n^m(s).

With n <= m (the count is symmetric in n, m) and s <= nm/2 (it is also
palindromic in s):

    s <= n            P(s)
    n <= s <= m       W_n(s)
    m <= s <= m+n     V(s) = W_n(s) + W_m(s) - W_{m+n}(s)
    s = m+n+k         V(s) + correction(k), with the correction taken from
                      one of three recursions depending on k

Where none of the recursions applies the DP answer is returned and tagged
``fallback-dp``.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

from .errors import InternalInconsistencyError, RangeViolationError
from .partitions import (
    _check_nonneg,
    _check_pos,
    conformal_count_dp,
    restricted_count,
    unrestricted_count,
)

REGIMES = ("small-s", "prop11", "prop12", "prop13", "fallback-dp")


def _P(s: int) -> int:
    return unrestricted_count(s) if s >= 0 else 0


def _W(n: int, s: int) -> int:
    return restricted_count(n, s) if s >= 0 else 0


def v_func(n: int, m: int, s: int) -> int:
    """V_n^m(s) = W_n(s) + W_m(s) - W_{m+n}(s); may be negative."""
    _check_pos(n=n, m=m)
    _check_nonneg(s=s)
    if n > m:
        n, m = m, n
    return _W(n, s) + _W(m, s) - _W(n + m, s)


# ---------------------------------------------------------------------------
# universal correction D(k)

_D_LOCK = threading.Lock()
_D_TABLE: list[int] = [0]


def _partial_p(k: int) -> int:
    # sum_{q<k} P(q)
    return sum(_P(q) for q in range(k))


def universal_d(k: int) -> int:
    """D(k) = A(k) - B(k), independent of n and m; D(0) = 0.

    A(k) = sum_{k1+k2=k} (sum_{q<k1} P(q)) (sum_{q<k2} P(q))
    B(k) = sum_{r<k} P(k-r) D(r)
    """
    _check_nonneg(k=k)
    table = _D_TABLE
    if k < len(table):
        return table[k]
    with _D_LOCK:
        while len(_D_TABLE) <= k:
            j = len(_D_TABLE)
            a = sum(_partial_p(k1) * _partial_p(j - k1) for k1 in range(j + 1))
            b = sum(_P(j - r) * _D_TABLE[r] for r in range(j))
            _D_TABLE.append(a - b)
        return _D_TABLE[k]


# ---------------------------------------------------------------------------
# the three correction recursions

def _normalize(n: int, m: int) -> tuple[int, int]:
    _check_pos(n=n, m=m)
    return (n, m) if n <= m else (m, n)


@lru_cache(maxsize=4096)
def _d_nm(n: int, m: int, k: int) -> int:
    if k == 0:
        return 0
    a = sum(
        (_P(m + k1) - _W(m, m + k1)) * (_P(n + k - k1) - _W(n, n + k - k1))
        for k1 in range(k + 1)
    )
    b = sum(_P(k - r) * _d_nm(n, m, r) for r in range(k))
    return a - b


def prop11_d(n: int, m: int, k: int) -> int:
    """D_n^m(k) = A_n^m(k) - B_n^m(k), valid for 0 <= k <= m-n, k <= n+1.

    Inside that range it coincides with universal_d(k).
    """
    n, m = _normalize(n, m)
    _check_nonneg(k=k)
    if not (k <= m - n and k <= n + 1):
        raise RangeViolationError(f"prop11 needs 0 <= k <= min(m-n, n+1); got n={n} m={m} k={k}")
    return _d_nm(n, m, k)


@lru_cache(maxsize=4096)
def _l_nm(n: int, m: int, k: int) -> int:
    # C's first sum starts at r = n+1 and E's first sum at max(1, k-n-1).
    # Read literally (r from n, and from k-n-1 which can reach 0) the
    # formula disagrees with the DP; this reading matches it everywhere
    # tested, including the boundary L(n+1) = D(n+1).
    c = sum(
        (_W(m + n, m + r) - _W(m, m + r)) * (_P(k + n - r) - _W(n, k + n - r))
        for r in range(n + 1, k)
    )
    c += sum(
        (_P(m + n1) - _W(m, m + n1)) * (_P(k + n - n1) - _W(n, k + n - n1))
        for n1 in range(n + 1)
    )
    e = sum(_P(r) * universal_d(k - r) for r in range(max(1, k - n - 1), k + 1))
    e += sum(_P(r) * _l_nm(n, m, k - r) for r in range(1, k - n - 1))
    return c - e


def prop12_l(n: int, m: int, k: int) -> int:
    """L_n^m(k) = C_n^m(k) - E_n^m(k), valid for n+1 <= k <= min(2n+1, m-n)."""
    n, m = _normalize(n, m)
    _check_nonneg(k=k)
    if not (n + 1 <= k <= 2 * n + 1 and k <= m - n):
        raise RangeViolationError(
            f"prop12 needs n+1 <= k <= min(2n+1, m-n); got n={n} m={m} k={k}"
        )
    return _l_nm(n, m, k)


@lru_cache(maxsize=4096)
def _m_nm(n: int, m: int, k: int) -> int:
    # Two index fixes are needed to reproduce the DP:
    #  * when m+q == n+k-q the four-product bracket pairs a term with itself
    #    and must be counted once, so it is halved;
    #  * N's first sum starts at max(1, k-m+n) (r = 0 would add D(k) spuriously).
    big_k = sum(
        (_P(m + k - q) - _W(m, m + k - q)) * (_P(n + q) - _W(n, n + q))
        for q in range(1, m - n + 1)
    )
    for q in range(1, (n + k - m) // 2 + 1):
        term = (
            _W(n, m + q) * _W(m, n + k - q)
            - v_func(n, m, m + q) * _P(n + k - q)
            + _W(n, n + k - q) * _W(m, m + q)
            - v_func(n, m, n + k - q) * _P(m + q)
        )
        if m + q == n + k - q:
            if term % 2:
                raise InternalInconsistencyError("odd self-paired bracket")
            term //= 2
        big_k += term
    big_n = sum(_P(r) * universal_d(k - r) for r in range(max(1, k - m + n), k - 1))
    big_n += sum(_P(r) * _m_nm(n, m, k - r) for r in range(1, k + n - m))
    return big_k - big_n


def prop13_m(n: int, m: int, k: int) -> int:
    """M_n^m(k) = K_n^m(k) - N_n^m(k), valid for m-n <= k <= n+1."""
    n, m = _normalize(n, m)
    _check_nonneg(k=k)
    if not (m - n <= k <= n + 1):
        raise RangeViolationError(f"prop13 needs m-n <= k <= n+1; got n={n} m={m} k={k}")
    return _m_nm(n, m, k)


# ---------------------------------------------------------------------------
# dispatcher

@dataclass(frozen=True)
class RegimeResult:
    value: int
    regime: str
    reflected: bool = False
    boundary_checked: tuple[str, ...] = ()


def eval_piecewise(n: int, m: int, s: int) -> RegimeResult:
    """P_n^m(s) through the closed forms, with a DP fallback for uncovered s.

    Where two formulas share a boundary (k = n+1 or k = m-n) both are
    evaluated and must agree; disagreement raises InternalInconsistencyError.
    """
    n, m = _normalize(n, m)
    _check_nonneg(s=s)
    total = n * m
    if s > total:
        return RegimeResult(0, "small-s")
    reflected = total - s < s
    if reflected:
        s = total - s

    if s <= n:
        return RegimeResult(_P(s), "small-s", reflected)
    if s <= m:
        return RegimeResult(_W(n, s), "small-s", reflected)
    v = v_func(n, m, s)
    if s <= m + n:
        return RegimeResult(v, "small-s", reflected)

    k = s - m - n
    checked: list[str] = []
    if k <= m - n and k <= n + 1:
        corr = prop11_d(n, m, k)
        regime = "prop11"
        if k == n + 1:
            other = prop12_l(n, m, k)
            checked.append("prop12")
            if other != corr:
                raise InternalInconsistencyError(
                    f"boundary k=n+1 disagrees for n={n} m={m}: {corr} vs {other}"
                )
        if k == m - n:
            other = prop13_m(n, m, k)
            checked.append("prop13")
            if other != corr:
                raise InternalInconsistencyError(
                    f"boundary k=m-n disagrees for n={n} m={m}: {corr} vs {other}"
                )
    elif n + 1 < k <= 2 * n + 1 and k <= m - n:
        corr = prop12_l(n, m, k)
        regime = "prop12"
    elif m - n < k <= n + 1:
        corr = prop13_m(n, m, k)
        regime = "prop13"
    else:
        return RegimeResult(conformal_count_dp(n, m, s), "fallback-dp", reflected)
    return RegimeResult(v + corr, regime, reflected, tuple(checked))
