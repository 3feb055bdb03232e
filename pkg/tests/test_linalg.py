"""Exact linear algebra: determinants, characteristic and minimal
polynomials, the scaled resolvent, and rank over the quadratic field.

Characteristic polynomial oracles below are classical values (cycles,
complete bipartite graphs, the Petersen graph) checked against closed-form
spectra before this module existed.
"""

import pytest
from hypothesis import given, strategies as st

from starcomp.algebra import QNum, qnum
from starcomp.catalog import petersen
from starcomp.errors import MuIsEigenvalue
from starcomp.graphs import cycle
from starcomp.kts import make_kts
from starcomp.linalg import (char_polynomial, det_bareiss, field_rank,
                             identity, mat_mul, mat_vec, minimal_polynomial,
                             scaled_resolvent)

entries = st.integers(min_value=-6, max_value=6)


def int_matrix(n):
    return st.lists(st.lists(entries, min_size=n, max_size=n),
                    min_size=n, max_size=n)


def _det_cofactor(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        total += (-1) ** j * M[0][j] * _det_cofactor(minor)
    return total


# ------------------------------------------------------------- determinants

def test_det_known_values():
    assert det_bareiss([[2]]) == 2
    assert det_bareiss([[1, 2], [3, 4]]) == -2
    assert det_bareiss([[0, 1, 1], [1, 0, 1], [1, 1, 0]]) == 2  # A(K3)
    assert det_bareiss(identity(5)) == 1


@given(st.integers(min_value=1, max_value=4).flatmap(int_matrix))
def test_det_matches_cofactor_expansion(M):
    assert det_bareiss(M) == _det_cofactor(M)


def test_mat_mul_and_vec():
    A = [[1, 2], [3, 4]]
    B = [[0, 1], [1, 0]]
    assert mat_mul(A, B) == [[2, 1], [4, 3]]
    assert mat_vec(A, [1, 1]) == [3, 7]
    assert mat_mul(A, identity(2)) == A


# ----------------------------------------------------- char and min polys

def test_char_polynomial_cycles():
    # C5: x^5 - 5x^3 + 5x - 2
    assert char_polynomial(cycle(5).matrix()).coeffs == (-2, 5, 0, -5, 0, 1)
    # C3: x^3 - 3x - 2 = (x-2)(x+1)^2
    assert char_polynomial(cycle(3).matrix()).coeffs == (-2, -3, 0, 1)


def test_char_polynomial_complete_bipartite():
    # K_{t,s}: x^(t+s-2) (x^2 - ts)
    assert char_polynomial(make_kts(3, 3).matrix()).coeffs == (0, 0, 0, 0, -9, 0, 1)
    assert char_polynomial(make_kts(2, 3).matrix()).coeffs == (0, 0, 0, -6, 0, 1)
    assert char_polynomial(make_kts(1, 1).matrix()).coeffs == (-1, 0, 1)


def test_char_polynomial_petersen():
    # (x-3)(x-1)^5 (x+2)^4
    p = char_polynomial(petersen().matrix())
    assert p.degree == 10 and p.is_monic
    assert p.integer_roots() == {3: 1, 1: 5, -2: 4}


@given(st.integers(min_value=1, max_value=5).flatmap(int_matrix))
def test_char_polynomial_shape(M):
    n = len(M)
    p = char_polynomial(M)
    assert p.degree == n and p.is_monic
    # constant term is (-1)^n det(M)
    assert p.coeffs[0] == (-1) ** n * det_bareiss(M)
    # x^(n-1) coefficient is minus the trace
    assert p.coeffs[n - 1] == -sum(M[i][i] for i in range(n))


def _sym(M):
    n = len(M)
    return [[M[i][j] if i <= j else M[j][i] for j in range(n)] for i in range(n)]


@given(st.integers(min_value=1, max_value=4).flatmap(int_matrix))
def test_minimal_polynomial_divides_and_annihilates(M):
    M = _sym(M)
    m = minimal_polynomial(M)
    assert m.is_monic and 1 <= m.degree <= len(M)
    assert m.divides(char_polynomial(M))
    # evaluate m at the matrix: sum m_k M^k = 0
    n = len(M)
    acc = [[0] * n for _ in range(n)]
    power = identity(n)
    for c in m.coeffs:
        acc = [[acc[i][j] + c * power[i][j] for j in range(n)] for i in range(n)]
        power = mat_mul(power, M)
    assert all(acc[i][j] == 0 for i in range(n) for j in range(n))


def test_minimal_polynomial_known():
    assert minimal_polynomial(make_kts(3, 3).matrix()).coeffs == (0, -9, 0, 1)
    assert minimal_polynomial(make_kts(1, 1).matrix()).coeffs == (-1, 0, 1)
    # Petersen: (x-3)(x-1)(x+2) = x^3 - 2x^2 - 5x + 6
    assert minimal_polynomial(petersen().matrix()).coeffs == (6, -5, -2, 1)
    assert minimal_polynomial(identity(4)).coeffs == (-1, 1)


# ------------------------------------------------------------ resolvent

def test_scaled_resolvent_known_row():
    # K_{3,3} at mu=1: m(x) = x^3 - 9x, m(1) = -8, N = C^2 + C - 8I
    N, mval = scaled_resolvent(make_kts(3, 3).matrix(), qnum(1))
    assert mval == qnum(-8)
    assert [x.as_int() for x in N[0]] == [-5, 3, 3, 1, 1, 1]


@pytest.mark.parametrize("g,mu", [
    (make_kts(3, 3), qnum(1)),
    (make_kts(2, 5), qnum(-2)),
    (cycle(5), qnum(2) + qnum(1)),          # 3 is not an eigenvalue of C5
    (petersen(), QNum.sqrt(2)),
    (cycle(4), QNum.quadratic_root(-1, 1)),
])
def test_resolvent_identity_two_sided(g, mu):
    C = g.matrix()
    N, mval = scaled_resolvent(C, mu)
    assert bool(mval)
    n = g.n
    for side in ("left", "right"):
        for i in range(n):
            for j in range(n):
                acc = qnum(0)
                for k in range(n):
                    a = N[i][k] if side == "left" else (mu * (i == k) - C[i][k])
                    b = (mu * (k == j) - C[k][j]) if side == "left" else N[k][j]
                    if isinstance(a, int):
                        a = qnum(a)
                    acc = acc + a * b
                assert acc == (mval if i == j else qnum(0))


@pytest.mark.parametrize("g,mu", [
    (make_kts(3, 3), qnum(3)),
    (make_kts(3, 3), qnum(0)),
    (cycle(5), qnum(2)),
    (cycle(5), QNum.quadratic_root(-1, 1)),  # golden section: C5 eigenvalue
    (petersen(), qnum(-2)),
])
def test_resolvent_rejects_eigenvalues(g, mu):
    with pytest.raises(MuIsEigenvalue):
        scaled_resolvent(g.matrix(), mu)


# ------------------------------------------------------------------ rank

def test_field_rank_known():
    P = petersen()
    n = P.n
    A = P.matrix()
    for mu, mult in ((qnum(1), 5), (qnum(-2), 4), (qnum(3), 1), (qnum(0), 0)):
        M = [[mu * (i == j) - A[i][j] for j in range(n)] for i in range(n)]
        assert field_rank(M) == n - mult


def test_field_rank_degenerate():
    assert field_rank([[qnum(0)]]) == 0
    assert field_rank([[qnum(0), qnum(0)], [qnum(0), qnum(0)]]) == 0
    assert field_rank([[QNum.sqrt(2), qnum(1)],
                       [qnum(2), QNum.sqrt(2)]]) == 1


@given(st.integers(min_value=1, max_value=4).flatmap(int_matrix))
def test_field_rank_transpose_invariant(M):
    Q = [[qnum(x) for x in row] for row in M]
    QT = [list(col) for col in zip(*Q)]
    r = field_rank(Q)
    assert r == field_rank(QT)
    assert (r == len(M)) == (det_bareiss(M) != 0)
