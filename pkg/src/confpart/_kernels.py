"""Hot loops, in two interchangeable flavours.

Every kernel exists as a plain-Python/numpy implementation and, when numba
is importable, as an ``@njit`` compilation of a loop version.  The backend is
picked per call from the ``CONFPART_BACKEND`` environment variable
(``numba`` or ``numpy``); the default is numba when it imports.

Integer kernels work in int64 and report overflow instead of wrapping
silently; callers then redo the work with Python integers.
"""
from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

ENV_BACKEND = "CONFPART_BACKEND"


# ---------------------------------------------------------------------------
# loop implementations (compiled by numba, or run as-is)

def _oracle_count_loop(n, m, s, ceiling):
    # Odometer over x_n..x_2; x_1 is forced by the remaining sum.
    # Returns (count, visited, exceeded).
    if s < 0:
        return 0, 0, False
    if n == 1:
        return (1 if s <= m else 0), 1, False
    x = np.full(n + 1, -1, np.int64)
    rem = np.zeros(n + 2, np.int64)
    used = np.zeros(n + 2, np.int64)
    rem[n] = s
    count = 0
    visited = 0
    level = n
    while level <= n:
        x[level] += 1
        v = x[level]
        if v * level > rem[level] or used[level] + v > m:
            x[level] = -1
            level += 1
            continue
        visited += 1
        if visited > ceiling:
            return count, visited, True
        if level == 2:
            x1 = rem[2] - 2 * v
            if used[2] + v + x1 <= m:
                count += 1
        else:
            rem[level - 1] = rem[level] - level * v
            used[level - 1] = used[level] + v
            level -= 1
    return count, visited, False


def _restricted_table_loop(nmax, smax):
    # W[r, s] = W[r-1, s] + W[r, s-r]
    w = np.zeros((nmax + 1, smax + 1), np.int64)
    w[0, 0] = 1
    ok = True
    for r in range(1, nmax + 1):
        for s in range(smax + 1):
            v = w[r - 1, s]
            if s >= r:
                a = w[r, s - r]
                t = v + a
                if t < v:
                    ok = False
                v = t
            w[r, s] = v
    return w, ok


def _conformal_row_loop(n, m):
    # f[j, s]: partitions of s into at most j parts, each <= current cap
    size = n * m + 1
    f = np.zeros((m + 1, size), np.int64)
    for j in range(m + 1):
        f[j, 0] = 1
    ok = True
    for cap in range(1, n + 1):
        for j in range(1, m + 1):
            for s in range(cap, size):
                a = f[j, s]
                t = a + f[j - 1, s - cap]
                if t < a:
                    ok = False
                f[j, s] = t
    return f[m].copy(), ok


def _elementary_loop(x):
    n = x.shape[0]
    e = np.zeros(n + 1)
    e[0] = 1.0
    for i in range(n):
        xi = x[i]
        for r in range(i + 1, 0, -1):
            e[r] += xi * e[r - 1]
    return e


def _horner_loop(coeffs, t):
    acc = 0.0
    for c in coeffs:
        acc = acc * t + c
    return acc


def _bisect_loop(coeffs, lo, hi, rtol, maxiter):
    # Requires p(lo) and p(hi) of opposite sign; coeffs in descending degree.
    flo = 0.0
    for c in coeffs:
        flo = flo * lo + c
    it = 0
    while it < maxiter and hi - lo > rtol * hi:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # interval is down to adjacent floats
        fm = 0.0
        for c in coeffs:
            fm = fm * mid + c
        if fm == 0.0:
            return mid, mid, mid, it + 1
        if (fm < 0.0) == (flo < 0.0):
            lo = mid
            flo = fm
        else:
            hi = mid
        it += 1
    return 0.5 * (lo + hi), lo, hi, it


# ---------------------------------------------------------------------------
# numpy implementations

def _restricted_table_numpy(nmax, smax):
    w = np.zeros((nmax + 1, smax + 1), np.int64)
    w[0, 0] = 1
    ok = True
    for r in range(1, nmax + 1):
        prev = w[r - 1]
        row = w[r]
        # Along each residue class mod r the recurrence is a running sum.
        for c in range(min(r, smax + 1)):
            acc = np.cumsum(prev[c::r])
            if acc.size > 1 and np.any(acc[1:] < acc[:-1]):
                ok = False
            row[c::r] = acc
    return w, ok


def _conformal_row_numpy(n, m):
    size = n * m + 1
    f = np.zeros((m + 1, size), np.int64)
    f[:, 0] = 1
    ok = True
    for cap in range(1, n + 1):
        for j in range(1, m + 1):
            before = f[j, cap:].copy()
            f[j, cap:] += f[j - 1, :size - cap]
            if np.any(f[j, cap:] < before):
                ok = False
    return f[m].copy(), ok


def _elementary_numpy(x):
    # coefficients of prod (t + x_i) are the elementary symmetric values
    return np.atleast_1d(np.poly(-np.asarray(x, dtype=float))).astype(float)


def _horner_numpy(coeffs, t):
    return float(np.polyval(coeffs, t))


def _bisect_numpy(coeffs, lo, hi, rtol, maxiter):
    flo = _horner_numpy(coeffs, lo)
    it = 0
    while it < maxiter and hi - lo > rtol * hi:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = _horner_numpy(coeffs, mid)
        if fm == 0.0:
            return mid, mid, mid, it + 1
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
        it += 1
    return 0.5 * (lo + hi), lo, hi, it


def _oracle_count_python(n, m, s, ceiling):
    c, v, e = _oracle_count_loop(n, m, s, ceiling)
    return int(c), int(v), bool(e)


NUMPY = SimpleNamespace(
    name="numpy",
    oracle_count=_oracle_count_python,
    restricted_table=_restricted_table_numpy,
    conformal_row=_conformal_row_numpy,
    elementary=_elementary_numpy,
    horner=_horner_numpy,
    bisect=_bisect_numpy,
)

if HAVE_NUMBA:
    _jit = njit(cache=True)
    NUMBA = SimpleNamespace(
        name="numba",
        oracle_count=_jit(_oracle_count_loop),
        restricted_table=_jit(_restricted_table_loop),
        conformal_row=_jit(_conformal_row_loop),
        elementary=_jit(_elementary_loop),
        horner=_jit(_horner_loop),
        bisect=_jit(_bisect_loop),
    )
else:  # pragma: no cover
    NUMBA = None

BACKENDS = {"numpy": NUMPY}
if NUMBA is not None:
    BACKENDS["numba"] = NUMBA


def backend(name: str | None = None) -> SimpleNamespace:
    """Return the kernel namespace for ``name`` or the environment default."""
    if name is None:
        name = os.environ.get(ENV_BACKEND, "").strip().lower() or (
            "numba" if HAVE_NUMBA else "numpy"
        )
    if name in ("0", "off", "false", "none"):
        name = "numpy"
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown kernel backend {name!r}; choose from {sorted(BACKENDS)}")
