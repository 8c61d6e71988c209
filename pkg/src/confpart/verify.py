"""Cross-method validation suites used by ``confpart verify``.

Each suite returns a list of Check records.  Grid suites work cell by cell so
that cells can be farmed out to worker processes; results are always returned
in grid order.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from . import algebra, closed_forms, genfunc, groups, partitions, roots, toeplitz

SUITES = ("partitions", "closedforms", "algebra", "roots", "groups")


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"suite": self.suite, "name": self.name, "ok": self.ok, "detail": self.detail}


def _grid(max_n: int, max_m: int) -> list[tuple[int, int]]:
    return [(n, m) for n in range(1, max_n + 1) for m in range(n, max_m + 1)]


def _run_cells(fn: Callable, cells: list, jobs: int) -> list:
    if jobs <= 1 or len(cells) < 2:
        return [fn(c) for c in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, cells))


# ---------------------------------------------------------------------------
# partitions

def _partition_cell(cell: tuple[int, int]) -> Check:
    n, m = cell
    name = f"n={n} m={m}"
    dp = partitions.conformal_row_dp(n, m)
    methods = {
        "oracle": tuple(partitions.conformal_count_oracle(n, m, s) for s in range(n * m + 1)),
        "gauss": genfunc.gaussian_poly(n, m),
        "toeplitz": toeplitz.conformal_row_toeplitz(n, m),
    }
    for label, row in methods.items():
        if row != dp:
            s = next(i for i, (a, b) in enumerate(zip(row, dp)) if a != b) if len(row) == len(dp) else -1
            return Check("partitions", name, False, f"{label} differs from dp at s={s}")
    half = (n * m) // 2
    if dp != dp[::-1]:
        return Check("partitions", name, False, "row is not palindromic")
    if partitions.conformal_row_dp(m, n) != dp:
        return Check("partitions", name, False, "index swap changes the row")
    if any(dp[s] > dp[s + 1] for s in range(half)):
        return Check("partitions", name, False, "row not unimodal")
    if dp[0] != 1 or dp[-1] != 1:
        return Check("partitions", name, False, "boundary values differ from 1")
    if sum(dp) != comb(n + m, n):
        return Check("partitions", name, False, "row sum differs from binom(n+m, n)")
    return Check("partitions", name, True)


def suite_partitions(max_n: int = 6, max_m: int = 6, jobs: int = 1) -> list[Check]:
    return _run_cells(_partition_cell, _grid(max_n, max_m), jobs)


# ---------------------------------------------------------------------------
# closed forms

def _closed_cell(cell: tuple[int, int]) -> Check:
    n, m = cell
    dp = partitions.conformal_row_dp(n, m)
    regimes: dict[str, int] = {}
    for s in range(n * m + 1):
        try:
            res = closed_forms.eval_piecewise(n, m, s)
        except Exception as exc:  # surfaced as a failure with its parameters
            return Check("closedforms", f"n={n} m={m}", False, f"s={s}: {exc}")
        if res.value != dp[s]:
            return Check(
                "closedforms", f"n={n} m={m}", False,
                f"s={s} regime={res.regime}: {res.value} != {dp[s]}",
            )
        regimes[res.regime] = regimes.get(res.regime, 0) + 1
    summary = " ".join(f"{k}:{v}" for k, v in sorted(regimes.items()))
    return Check("closedforms", f"n={n} m={m}", True, summary)


def suite_closedforms(max_n: int = 8, max_m: int = 10, jobs: int = 1) -> list[Check]:
    return _run_cells(_closed_cell, _grid(max_n, max_m), jobs)


# ---------------------------------------------------------------------------
# algebra

def _random_bind(poly: algebra.SelfDualPoly, rng: random.Random) -> algebra.SelfDualPoly:
    return poly.bind({sym: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for sym in poly.symbols()})


def suite_algebra(max_n: int = 4, max_m: int = 4, jobs: int = 1, seed: int = 7) -> list[Check]:
    out: list[Check] = []
    for n in range(1, min(max_n, 5) + 1):
        for m in range(1, min(max_m, 5) + 1):
            for kind in (algebra.RECIPROCAL, algebra.SKEW):
                a, b = algebra.mu_by_count(n, m, kind), algebra.mu_closed(n, m, kind)
                out.append(Check("algebra", f"mu {kind} n={n} m={m}", a == b, f"count={a} closed={b}"))
    rng = random.Random(seed)
    for n in range(1, min(max_n, 3) + 1):
        for m1 in (1, 2):
            for m2 in (1, 2):
                for k1 in (algebra.RECIPROCAL, algebra.SKEW):
                    for k2 in (algebra.RECIPROCAL, algebra.SKEW):
                        p = _random_bind(algebra.assemble(n, m1, k1), rng)
                        q = _random_bind(algebra.assemble(n, m2, k2), rng)
                        name = f"multiply n={n} ({m1},{k1[0]})x({m2},{k2[0]})"
                        try:
                            r = algebra.multiply(p, q)
                        except Exception as exc:
                            out.append(Check("algebra", name, False, str(exc)))
                            continue
                        ok = r.kind == algebra.product_kind(k1, k2)
                        x = [Fraction(rng.randint(1, 9), rng.randint(1, 4)) for _ in range(n)]
                        lam = Fraction(rng.randint(1, 9), rng.randint(1, 4))
                        ok = ok and r.evaluate(lam, x) == p.evaluate(lam, x) * q.evaluate(lam, x)
                        out.append(Check("algebra", name, ok))
    for n in range(1, min(max_n, 4) + 1):
        for m in (1, 2):
            for kind in (algebra.RECIPROCAL, algebra.SKEW):
                p = _random_bind(algebra.assemble(n, m, kind), rng)
                ok = True
                for _ in range(5):
                    x = [rng.uniform(0.2, 5.0) for _ in range(n)]
                    ok = ok and algebra.conformal_transform_check(p, x, rng.uniform(0.2, 5.0))
                out.append(Check("algebra", f"duality {kind} n={n} m={m}", ok))
    return out


# ---------------------------------------------------------------------------
# roots

def _random_skew_coeffs(n: int, m: int, rng: random.Random) -> dict:
    coeffs = {}
    for s in range(1, (n * m + 1) // 2):
        if 2 * s >= n * m:
            break
        for l in range(1, len(algebra.enumerate_alpha(n, m, s)) + 1):
            if rng.random() < 0.7:
                coeffs[(s, l)] = rng.uniform(0.0, 3.0)
    return coeffs


def suite_roots(max_n: int = 6, max_m: int = 3, jobs: int = 1, seed: int = 11) -> list[Check]:
    rng = random.Random(seed)
    out: list[Check] = []
    for n in range(2, min(max_n, 6) + 1):
        for m in range(1, min(max_m, 3) + 1):
            bad = ""
            for _ in range(10):
                x = [rng.uniform(0.1, 10.0) for _ in range(n)]
                coeffs = _random_skew_coeffs(n, m, rng)
                try:
                    res = roots.positive_root(n, m, coeffs, x)
                    roots.root_duality_check(n, m, coeffs, x)
                    if (n, m) in ((3, 1), (3, 2), (4, 1), (4, 2), (4, 3)):
                        lo, hi = roots.bounds_enhanced(n, x)
                        if not (lo * (1 - 1e-9) <= res.lam <= hi * (1 + 1e-9)):
                            bad = f"root {res.lam} outside enhanced ({lo}, {hi}) at x={x}"
                except Exception as exc:
                    bad = f"{type(exc).__name__}: {exc} at x={x}"
                if bad:
                    break
            out.append(Check("roots", f"n={n} m={m}", not bad, bad))
    return out


# ---------------------------------------------------------------------------
# groups

# Families whose verdict is a gate; C_n and D_n are reported only.
_GATED_PREFIXES = ("S_", "Z_", "A_", "B_", "I_", "G_", "O_", "H_")


def suite_groups(max_n: int = 6, max_m: int = 8, jobs: int = 1) -> list[Check]:
    out = []
    for g in groups.builtin_catalog(max_rank=max_n, max_dihedral=max(max_m, 6)):
        c = groups.classify(g)
        gated = g.name.startswith(_GATED_PREFIXES)
        detail = (
            f"degrees={list(c.degrees)} duality_raw={c.duality_raw} "
            f"duality_effective={c.duality_effective} top_monomial={c.top_monomializable} "
            f"admits={c.admits} expected={c.expected_admits}"
        )
        out.append(Check("groups", g.name, c.agrees or not gated, detail))
    return out


RUNNERS = {
    "partitions": suite_partitions,
    "closedforms": suite_closedforms,
    "algebra": suite_algebra,
    "roots": suite_roots,
    "groups": suite_groups,
}


def run(suite: str, max_n: int, max_m: int, jobs: int = 1) -> list[Check]:
    names = SUITES if suite == "all" else (suite,)
    out: list[Check] = []
    for name in names:
        out.extend(RUNNERS[name](max_n=max_n, max_m=max_m, jobs=jobs))
    return out
