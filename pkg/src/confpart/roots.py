"""Positive roots of skew-reciprocal equations and their bounds.

Floating point throughout.  A skew polynomial with nonnegative coefficients
(monic: C_{0,1} = 1) has a positive root lam(x) lying between the harmonic
and arithmetic means of x.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from . import _kernels
from .algebra import SKEW, assemble
from .errors import BracketError, InternalInconsistencyError, ToleranceError

DEFAULT_RTOL = 4e-16
EXPANSIONS = 60
MAX_BISECTIONS = 400


def _point(x: Sequence[float]) -> np.ndarray:
    arr = np.asarray(x, dtype=float).reshape(-1)
    if arr.size == 0:
        raise ValueError("x must contain at least one variable")
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0):
        raise ValueError("all x_i must be finite and strictly positive")
    return arr


def elementary_symmetric(x: Sequence[float]) -> np.ndarray:
    """I_{n,0}..I_{n,n} by the one-pass product recurrence."""
    arr = _point(x)
    e = np.asarray(_kernels.backend().elementary(arr), dtype=float)
    if not np.all(np.isfinite(e)):
        raise OverflowError("elementary symmetric value is not finite")
    return e


def bounds_basic(x: Sequence[float]) -> tuple[float, float]:
    """(harmonic mean, arithmetic mean)."""
    arr = _point(x)
    return float(arr.size / np.sum(1.0 / arr)), float(np.mean(arr))


def mean_chain(x: Sequence[float], slack: float = 1e-12) -> list[float]:
    """The 2n-1 Maclaurin means from m_a down through m_g to m_h.

    Upper half: (I_r / binom(n, r))^(1/r) for r = 1..n.
    Lower half: (binom(n, r) I_n / I_{n-r})^(1/r) for r = n-1..1.
    """
    arr = _point(x)
    n = arr.size
    e = elementary_symmetric(arr)
    chain = [float((e[r] / math.comb(n, r)) ** (1.0 / r)) for r in range(1, n + 1)]
    chain += [float((math.comb(n, r) * e[n] / e[n - r]) ** (1.0 / r)) for r in range(n - 1, 0, -1)]
    for a, b in zip(chain, chain[1:]):
        if b > a * (1 + slack):
            raise InternalInconsistencyError(f"mean chain not monotone: {chain}")
    return chain


def bounds_enhanced(n: int, x: Sequence[float], slack: float = 1e-12) -> tuple[float, float]:
    """(omega, Omega) for n = 3 or 4.

    n = 3: min/max of I2/I1 and sqrt(I3 I1 / I2)
    n = 4: min/max of sqrt(I3/I1) and sqrt(I4 I1 / I3)
    """
    arr = _point(x)
    if n not in (3, 4):
        raise ValueError(f"enhanced bounds exist for n = 3 or 4 only, got {n}")
    if arr.size != n:
        raise ValueError(f"expected {n} variables, got {arr.size}")
    e = elementary_symmetric(arr)
    if n == 3:
        a, b = float(e[2] / e[1]), math.sqrt(e[3] * e[1] / e[2])
    else:
        a, b = math.sqrt(e[3] / e[1]), math.sqrt(e[4] * e[1] / e[3])
    lo, hi = min(a, b), max(a, b)
    blo, bhi = bounds_basic(arr)
    if lo < blo * (1 - slack) or hi > bhi * (1 + slack):
        raise InternalInconsistencyError(
            f"enhanced bracket ({lo}, {hi}) not inside basic ({blo}, {bhi})"
        )
    return lo, hi


@dataclass(frozen=True)
class RootResult:
    lam: float
    residual: float
    bracket: tuple[float, float]
    iterations: int
    sign_changes: int = 1


def _sign_changes(coeffs: Sequence[float]) -> int:
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def skew_lambda_coefficients(
    n: int, m: int, coeffs: Mapping[tuple[int, int], float], x: Sequence[float]
) -> np.ndarray:
    """Ascending lam-coefficients of the monic skew polynomial at x.

    ``coeffs`` maps (s, l) to C_{s,l}; missing entries are 0 and C_{0,1}
    defaults to 1.
    """
    values = {(0, 1): 1.0}
    values.update({k: float(v) for k, v in coeffs.items()})
    poly = assemble(n, m, SKEW).bind(values, default=0.0)
    return np.asarray(poly.lambda_coefficients(list(_point(x))), dtype=float)


def _validate_coeffs(n: int, m: int, coeffs: Mapping[tuple[int, int], float]) -> None:
    for (s, l), v in coeffs.items():
        if not (v >= 0):
            raise ValueError(f"C[{s},{l}] = {v} is negative")
        if 2 * s >= n * m:
            # Middle-degree partners enter as C (T+ - T-) with both monomials
            # at lam^{mn/2}; that difference has no fixed sign, so neither
            # uniqueness nor the mean bounds follow from C >= 0 there.
            raise ValueError(f"C[{s},{l}] sits at or above the middle degree {n * m / 2}")
    if coeffs.get((0, 1), 1.0) != 1.0:
        raise ValueError("the equation must be monic (C[0,1] = 1)")


def solve_bracketed(
    coeffs_asc: Sequence[float], lo: float, hi: float, rtol: float = DEFAULT_RTOL
) -> RootResult:
    """Bisect the polynomial (ascending coefficients) for a root in [lo, hi].

    The bracket is doubled outward up to 60 times until the end values differ
    in sign.
    """
    desc = np.ascontiguousarray(np.asarray(coeffs_asc, dtype=float)[::-1])
    k = _kernels.backend()
    flo, fhi = k.horner(desc, lo), k.horner(desc, hi)
    tries = 0
    while not (flo <= 0.0 <= fhi or fhi <= 0.0 <= flo):
        if tries >= EXPANSIONS:
            raise BracketError(f"no sign change found in [{lo}, {hi}] after {tries} expansions")
        lo, hi = lo / 2.0, hi * 2.0
        flo, fhi = k.horner(desc, lo), k.horner(desc, hi)
        tries += 1
    if flo == 0.0:
        root, it = lo, 0
    elif fhi == 0.0:
        root, it = hi, 0
    else:
        root, lo, hi, it = k.bisect(desc, lo, hi, rtol, MAX_BISECTIONS)
    root = float(root)
    scale = float(np.sum(np.abs(desc) * root ** np.arange(desc.size - 1, -1, -1)))
    resid = k.horner(desc, root) / scale if scale else 0.0
    return RootResult(root, float(resid), (float(lo), float(hi)), int(it), _sign_changes(coeffs_asc))


def positive_root(
    n: int,
    m: int,
    coeffs: Mapping[tuple[int, int], float] | None,
    x: Sequence[float],
    tol: float = DEFAULT_RTOL,
    slack: float = 1e-12,
) -> RootResult:
    """Positive root of the monic skew equation with nonnegative C_{s,l}.

    Coefficients are accepted below the middle degree only (see
    ``_validate_coeffs``).  The root is checked against the harmonic and
    arithmetic mean bounds.
    """
    arr = _point(x)
    if arr.size != n:
        raise ValueError(f"expected {n} variables, got {arr.size}")
    coeffs = dict(coeffs or {})
    _validate_coeffs(n, m, coeffs)
    if n == 1:
        return RootResult(float(arr[0]), 0.0, (float(arr[0]), float(arr[0])), 0, 1)
    poly = skew_lambda_coefficients(n, m, coeffs, arr)
    hm, am = bounds_basic(arr)
    res = solve_bracketed(poly, hm / 2.0, 2.0 * am, tol)
    if res.lam < hm * (1 - slack) or res.lam > am * (1 + slack):
        raise ToleranceError("root outside the mean bounds", res.lam, (hm, am))
    return res


def pairing_condition_check(x: Sequence[float], tol: float = 1e-9) -> bool:
    """True iff (I_n)^{1/n} = (I_{n-r}/I_r)^{1/(n-2r)} for every r < n/2.

    When it holds, every nonnegative skew equation has root (I_n)^{1/n}.
    """
    arr = _point(x)
    n = arr.size
    e = elementary_symmetric(arr)
    g = e[n] ** (1.0 / n)
    for r in range(1, (n + 1) // 2):
        if 2 * r == n:
            continue
        val = (e[n - r] / e[r]) ** (1.0 / (n - 2 * r))
        if abs(val - g) > tol * g:
            return False
    return True


def root_duality_check(
    n: int,
    m: int,
    coeffs: Mapping[tuple[int, int], float] | None,
    x: Sequence[float],
    tol: float = 1e-9,
) -> bool:
    """lam(x) * lam(1/x) == 1.  Raises ToleranceError with both roots otherwise."""
    arr = _point(x)
    a = positive_root(n, m, coeffs, arr).lam
    b = positive_root(n, m, coeffs, 1.0 / arr).lam
    if abs(a * b - 1.0) > tol:
        raise ToleranceError("lam(x) * lam(1/x) != 1", a, b)
    return True
