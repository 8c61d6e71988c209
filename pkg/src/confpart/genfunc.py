"""Gaussian (q-binomial) polynomials and their products.

Polynomials are tuples of Python ints, index = degree.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InternalInconsistencyError
from .partitions import _check_nonneg, _check_pos, molien_series


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def poly_divmod(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Long division over the integers; the divisor must be monic up to sign."""
    den = list(den)
    while den and den[-1] == 0:
        den.pop()
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    lead = den[-1]
    if lead not in (1, -1):
        raise ValueError("divisor leading coefficient must be +1 or -1")
    rem = list(num)
    dq = len(rem) - len(den)
    if dq < 0:
        return [0], rem
    quot = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        c = rem[k + len(den) - 1] * lead
        quot[k] = c
        if c:
            for j, dj in enumerate(den):
                rem[k + j] -= c * dj
    return quot, rem[: len(den) - 1]


def _one_minus_t_product(degrees: Iterable[int]) -> list[int]:
    out = [1]
    for d in degrees:
        factor = [1] + [0] * (d - 1) + [-1]
        out = poly_mul(out, factor)
    return out


@lru_cache(maxsize=256)
def gaussian_poly(n: int, m: int) -> tuple[int, ...]:
    """Coefficients of G(n, m; t); entry s is P_n^m(s).

    Built as prod_{i<=n+m}(1-t^i) divided by prod_{j<=n}(1-t^j) prod_{k<=m}(1-t^k),
    with the remainder checked to be zero.

    >>> gaussian_poly(2, 2)
    (1, 1, 2, 1, 1)
    """
    _check_pos(n=n, m=m)
    num = _one_minus_t_product(range(1, n + m + 1))
    den = poly_mul(_one_minus_t_product(range(1, n + 1)), _one_minus_t_product(range(1, m + 1)))
    quot, rem = poly_divmod(num, den)
    if any(rem):
        raise InternalInconsistencyError(f"G({n},{m}) division left a remainder")
    quot = quot[: n * m + 1]
    if len(quot) != n * m + 1 or any(c < 0 for c in quot):
        raise InternalInconsistencyError(f"G({n},{m}) has unexpected shape")
    return tuple(quot)


def _series_mul(a: Sequence[int], b: Sequence[int], N: int) -> list[int]:
    out = [0] * (N + 1)
    for i, ai in enumerate(a[: N + 1]):
        if ai:
            for j in range(min(len(b), N + 1 - i)):
                out[i + j] += ai * b[j]
    return out


def gaussian_ratio_check(n: int, m: int, N: int | None = None) -> bool:
    """Check G(n,m) * M(n+m) == M(n) * M(m) coefficient-wise up to t^N.

    M(k) is the Molien series of degrees 1..k.  N defaults to n*m.
    """
    _check_pos(n=n, m=m)
    if N is None:
        N = n * m
    if N < n * m:
        raise ValueError(f"N must be at least n*m = {n * m}")
    left = _series_mul(gaussian_poly(n, m), molien_series(range(1, n + m + 1), N), N)
    right = _series_mul(molien_series(range(1, n + 1), N), molien_series(range(1, m + 1), N), N)
    return left == right


def convolve_conformal(n1: int, m1: int, n2: int, m2: int, s: int) -> int:
    """Two-group conformal number: sum over s1 of P_{n1}^{m1}(s1) P_{n2}^{m2}(s-s1)."""
    _check_pos(n1=n1, m1=m1, n2=n2, m2=m2)
    _check_nonneg(s=s)
    g1, g2 = gaussian_poly(n1, m1), gaussian_poly(n2, m2)
    lo = max(0, s - (len(g2) - 1))
    hi = min(s, len(g1) - 1)
    return sum(g1[s1] * g2[s - s1] for s1 in range(lo, hi + 1))


def product_gaussian(pairs: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    """prod_j G(n_j, m_j; t), of order sum n_j m_j."""
    if not pairs:
        raise ValueError("need at least one (n, m) pair")
    out: list[int] = [1]
    for n, m in pairs:
        out = poly_mul(out, gaussian_poly(n, m))
    return tuple(out)


def _bounded_tuples(n: int, m: int, smax: int):
    # every (x_1..x_n) with sum x_r <= m and sum r x_r <= smax
    ranges = [range(min(m, smax // r) + 1) for r in range(1, n + 1)]
    for xs in itertools.product(*ranges):
        if sum(xs) <= m:
            deg = sum(r * x for r, x in enumerate(xs, start=1))
            if deg <= smax:
                yield deg


def count_product_system(pairs: Sequence[tuple[int, int]], s: int) -> int:
    """Brute-force count of solutions of the k-group system.

    One equation sum_j sum_r r x^(j)_r = s and one inequality
    sum_r x^(j)_r <= m_j per group.  Only for small sizes.
    """
    if not pairs:
        raise ValueError("need at least one (n, m) pair")
    _check_nonneg(s=s)
    per_group = [list(_bounded_tuples(n, m, s)) for n, m in pairs]
    return sum(1 for combo in itertools.product(*per_group) if sum(combo) == s)
