import random

import pytest
from hypothesis import given, strategies as st

from confpart.genfunc import gaussian_poly
from confpart.partitions import conformal_count_oracle, unrestricted_count
from confpart.toeplitz import (
    ConvolutionProblem,
    conformal_row_toeplitz,
    conformal_via_toeplitz,
    phi_eval,
    phi_multinomial,
    phi_table,
    phi_terms,
    solve_closed,
    solve_forward,
)


def test_phi_small():
    assert phi_eval(0, [0]) == 1
    u1, u2 = 5, -3
    assert phi_eval(2, [0, u1, u2]) == u2 + u1**2
    assert phi_eval(6, [0] + [1] * 6) == 32


@pytest.mark.parametrize("r", range(1, 11))
def test_phi_terms_shape(r):
    terms = phi_terms(r)
    assert len(terms) == unrestricted_count(r)
    assert sum(tt.coeff for tt in terms) == 2 ** (r - 1)


@given(st.lists(st.integers(-7, 7), min_size=11, max_size=11))
def test_phi_multinomial_equals_recurrence(u):
    u = [0] + u[1:]
    table = phi_table(10, u)
    for r in range(11):
        assert phi_multinomial(r, u) == table[r]


@given(st.lists(st.integers(-9, 9), min_size=13, max_size=13),
       st.lists(st.integers(-9, 9), min_size=13, max_size=13))
def test_closed_equals_forward(T, U):
    prob = ConvolutionProblem(T, [0] + U[1:])
    fwd = solve_forward(prob, 12)
    for g in range(13):
        assert solve_closed(prob, g) == fwd[g]


def test_degenerate_problems():
    T = [3, 1, 4, 1, 5]
    zero = ConvolutionProblem(T, [0] * 5)
    assert solve_forward(zero, 4) == T
    assert all(solve_closed(zero, g) == T[g] for g in range(5))
    prob = ConvolutionProblem([1, 2, 0], [0, 7, 0])
    assert solve_closed(prob, 1) == 2 + 7 * 1


def test_short_sequences_rejected():
    with pytest.raises(ValueError):
        solve_forward(ConvolutionProblem([1, 2], [0, 1]), 3)


def test_conformal_examples():
    assert conformal_via_toeplitz(3, 5, 0) == 1
    assert conformal_via_toeplitz(2, 2, 2) == 2
    assert conformal_via_toeplitz(3, 4, 20) == 0


def test_three_four_six_is_five():
    # partitions of 6 into at most 4 parts, each at most 3:
    # 3+3, 3+2+1, 3+1+1+1, 2+2+2, 2+2+1+1
    assert conformal_count_oracle(3, 4, 6) == 5
    assert conformal_via_toeplitz(3, 4, 6) == 5


@pytest.mark.parametrize("n,m", [(1, 1), (2, 5), (4, 4), (5, 3)])
def test_row_matches_gaussian(n, m):
    assert conformal_row_toeplitz(n, m) == gaussian_poly(n, m)
