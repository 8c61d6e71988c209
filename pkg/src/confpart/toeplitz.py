"""Triangular Toeplitz convolution systems.

The system is

    P(0) = T(0),   P(g) = T(g) + sum_{s<g} P(s) U(g-s)   (g >= 1)

with U(0) unused.  Its solution is P = T * Phi where the Phi_r(U) are
polynomials in U(1..r) indexed by the partitions of r.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from .partitions import _check_nonneg, _check_pos, restricted_row


@dataclass(frozen=True)
class ConvolutionProblem:
    T: tuple[int, ...]
    U: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "T", tuple(self.T))
        object.__setattr__(self, "U", tuple(self.U))

    def require(self, gmax: int) -> None:
        if len(self.T) <= gmax or (gmax > 0 and len(self.U) <= gmax):
            raise ValueError(f"T and U must be defined on 0..{gmax}")


@dataclass(frozen=True)
class PhiTerm:
    """One monomial of Phi_r: prod_l U(l)^{q_l} with a multinomial weight."""

    multiplicities: tuple[int, ...]  # q_1..q_r
    coeff: int

    def evaluate(self, U: Sequence[int]) -> int:
        return self.coeff * prod(U[l] ** q for l, q in enumerate(self.multiplicities, 1) if q)


def solve_forward(problem: ConvolutionProblem, gmax: int) -> list[int]:
    """P(0..gmax) by the forward recursion."""
    _check_nonneg(gmax=gmax)
    problem.require(gmax)
    T, U = problem.T, problem.U
    P: list[int] = []
    for g in range(gmax + 1):
        P.append(T[g] + sum(P[s] * U[g - s] for s in range(g)))
    return P


def phi_table(rmax: int, U: Sequence[int]) -> list[int]:
    """Phi_0..Phi_rmax by the convolution recurrence Phi_r = sum_j U(j) Phi_{r-j}."""
    _check_nonneg(rmax=rmax)
    if rmax > 0 and len(U) <= rmax:
        raise ValueError(f"U must be defined on 1..{rmax}")
    phi = [1]
    for r in range(1, rmax + 1):
        phi.append(sum(U[j] * phi[r - j] for j in range(1, r + 1)))
    return phi


def phi_eval(r: int, U: Sequence[int]) -> int:
    """Phi_r(U).

    >>> phi_eval(6, [0] + [1] * 6)
    32
    """
    return phi_table(r, U)[r]


def _partitions_as_multiplicities(r: int):
    # yields (q_1..q_r) for every partition of r, largest part first
    def rec(rem, maxpart, q):
        if rem == 0:
            yield tuple(q)
            return
        for part in range(min(rem, maxpart), 0, -1):
            q[part - 1] += 1
            yield from rec(rem - part, part, q)
            q[part - 1] -= 1

    yield from rec(r, r, [0] * r)


@lru_cache(maxsize=64)
def phi_terms(r: int) -> tuple[PhiTerm, ...]:
    """The explicit expansion of Phi_r: one term per partition of r."""
    _check_nonneg(r=r)
    if r == 0:
        return (PhiTerm((), 1),)
    terms = []
    for q in _partitions_as_multiplicities(r):
        total = sum(q)
        coeff = factorial(total) // prod(factorial(x) for x in q)
        terms.append(PhiTerm(q, coeff))
    return tuple(terms)


def phi_multinomial(r: int, U: Sequence[int]) -> int:
    """Phi_r(U) from the explicit multinomial sum over partitions of r."""
    if r > 0 and len(U) <= r:
        raise ValueError(f"U must be defined on 1..{r}")
    return sum(t.evaluate(U) for t in phi_terms(r))


def solve_closed(problem: ConvolutionProblem, g: int) -> int:
    """P(g) without recursion on P.

    P(g) = sum_{r<g} [T(g-r) + T(0) U(g-r)] Phi_r(U).  The T(0) factor is
    needed for general problems; with T(0) = 1 it drops out.
    """
    _check_nonneg(g=g)
    problem.require(g)
    T, U = problem.T, problem.U
    if g == 0:
        return T[0]
    phi = phi_table(g - 1, U)
    return sum((T[g - r] + T[0] * U[g - r]) * phi[r] for r in range(g))


def conformal_problem(n: int, m: int) -> ConvolutionProblem:
    """T(g) = sum_s W_n(s) W_m(g-s), U(s) = -W_{n+m}(s), on 0..nm."""
    _check_pos(n=n, m=m)
    gmax = n * m
    wn, wm, wnm = restricted_row(n, gmax), restricted_row(m, gmax), restricted_row(n + m, gmax)
    T = tuple(sum(wn[s] * wm[g - s] for s in range(g + 1)) for g in range(gmax + 1))
    U = (0,) + tuple(-v for v in wnm[1:])
    return ConvolutionProblem(T, U)


def conformal_via_toeplitz(n: int, m: int, s: int) -> int:
    """P_n^m(s) from the closed Toeplitz solution."""
    _check_pos(n=n, m=m)
    _check_nonneg(s=s)
    if s > n * m:
        return 0
    return solve_closed(conformal_problem(n, m), s)


def conformal_row_toeplitz(n: int, m: int) -> tuple[int, ...]:
    """All of P_n^m(0..nm) from the closed form, sharing one Phi table."""
    prob = conformal_problem(n, m)
    gmax = n * m
    phi = phi_table(gmax, prob.U)
    T, U = prob.T, prob.U
    out = [T[0]]
    for g in range(1, gmax + 1):
        out.append(sum((T[g - r] + T[0] * U[g - r]) * phi[r] for r in range(g)))
    return tuple(out)
