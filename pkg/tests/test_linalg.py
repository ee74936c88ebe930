"""Dense symmetric linear algebra against numpy.linalg as the oracle."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cho.errors import NonConvergence, NotPositiveDefinite, SingularMatrix
from cho.linalg import (
    SymMatrix,
    char_poly_coeffs,
    det,
    inverse,
    jacobi_eigh,
    leading_principal_minors,
    max_abs,
    spd_sqrt,
)

from conftest import random_spd, random_sym


# --- SymMatrix ---------------------------------------------------------------


def test_symmatrix_mirrors_lower_triangle():
    s = SymMatrix(np.array([[1.0, 5.0], [2.0, 3.0]]), skew_tol=10.0)
    assert s.mat[0, 1] == s.mat[1, 0] == 2.0


def test_symmatrix_rejects_skew_beyond_tolerance():
    with pytest.raises(ValueError):
        SymMatrix(np.array([[1.0, 5.0], [2.0, 3.0]]))


def test_symmatrix_rejects_nonsquare_and_nonfinite():
    with pytest.raises(ValueError):
        SymMatrix(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        SymMatrix(np.array([[np.nan, 0.0], [0.0, 1.0]]))


def test_symmatrix_diagonal_and_array_protocol():
    s = SymMatrix.diagonal([1.0, 2.0])
    assert np.array_equal(np.asarray(s), np.diag([1.0, 2.0]))
    assert s.n == 2
    with pytest.raises(ValueError):
        s.mat[0, 0] = 7.0  # frozen


# --- Jacobi ------------------------------------------------------------------


def test_jacobi_matches_numpy_eigvalsh():
    rng = np.random.default_rng(7)
    for n in (1, 2, 3, 4, 6, 8):
        for _ in range(40):
            s = random_sym(rng, n)
            eig = jacobi_eigh(s)
            ref = np.linalg.eigvalsh(s.mat)
            assert np.allclose(eig.values, ref, rtol=0, atol=1e-11 * (1 + max_abs(s.mat)))


def test_jacobi_vectors_orthonormal_and_reconstruct():
    rng = np.random.default_rng(8)
    for _ in range(50):
        s = random_sym(rng, 5)
        eig = jacobi_eigh(s)
        u = eig.vectors
        assert max_abs(u.T @ u - np.eye(5)) < 1e-12
        assert max_abs(u @ np.diag(eig.values) @ u.T - s.mat) < 1e-11 * (1 + max_abs(s.mat))


def test_jacobi_values_ascending():
    rng = np.random.default_rng(9)
    for _ in range(30):
        eig = jacobi_eigh(random_sym(rng, 6))
        assert np.all(np.diff(eig.values) >= 0)


def test_jacobi_sign_convention():
    # largest-magnitude entry of each vector is non-negative
    rng = np.random.default_rng(10)
    for _ in range(30):
        eig = jacobi_eigh(random_sym(rng, 5))
        for col in eig.vectors.T:
            assert col[np.argmax(np.abs(col))] >= 0


def test_jacobi_degenerate_tie_order():
    eig = jacobi_eigh(SymMatrix(np.eye(4)))
    assert np.array_equal(eig.values, np.ones(4))
    assert np.array_equal(eig.vectors, np.eye(4))


def test_jacobi_diagonal_input_short_circuits():
    eig = jacobi_eigh(SymMatrix.diagonal([3.0, -1.0, 2.0]))
    assert np.array_equal(eig.values, [-1.0, 2.0, 3.0])


def test_jacobi_nonconvergence_reports_offdiag():
    s = random_sym(np.random.default_rng(11), 8)
    with pytest.raises(NonConvergence) as err:
        jacobi_eigh(s, max_sweeps=1)
    assert err.value.sweeps == 1
    assert err.value.offdiag > 0


def test_jacobi_results_frozen():
    eig = jacobi_eigh(SymMatrix(np.eye(2)))
    with pytest.raises(ValueError):
        eig.values[0] = 5.0


# --- square root -------------------------------------------------------------


def test_spd_sqrt_squares_back():
    rng = np.random.default_rng(12)
    for n in (1, 2, 3, 5):
        for _ in range(25):
            s = random_spd(rng, n)
            root = spd_sqrt(s)
            assert max_abs(root.mat @ root.mat - s.mat) < 1e-10 * (1 + max_abs(s.mat))


def test_spd_sqrt_diagonal_fast_path_is_exact():
    root = spd_sqrt(SymMatrix.diagonal([4.0, 9.0, 0.25]))
    assert np.array_equal(root.mat, np.diag([2.0, 3.0, 0.5]))


def test_spd_sqrt_rejects_indefinite_with_witness():
    s = SymMatrix(np.array([[1.0, 2.0], [2.0, 1.0]]))  # eigenvalues -1, 3
    with pytest.raises(NotPositiveDefinite) as err:
        spd_sqrt(s)
    assert err.value.min_eigenvalue == pytest.approx(-1.0, abs=1e-12)


# --- determinants, minors, inverse -------------------------------------------


def test_minors_match_numpy_dets():
    rng = np.random.default_rng(13)
    for n in (1, 2, 3, 4, 5):
        for _ in range(40):
            s = random_sym(rng, n)
            minors = leading_principal_minors(s)
            ref = [np.linalg.det(s.mat[:k, :k]) for k in range(1, n + 1)]
            assert np.allclose(minors, ref, rtol=1e-10, atol=1e-10)


def test_det_and_inverse_against_numpy():
    rng = np.random.default_rng(14)
    for _ in range(40):
        a = rng.normal(size=(4, 4))
        assert det(a) == pytest.approx(np.linalg.det(a), rel=1e-10, abs=1e-12)
        assert max_abs(inverse(a) - np.linalg.inv(a)) < 1e-9 * max_abs(np.linalg.inv(a))


def test_inverse_raises_on_singular():
    with pytest.raises(SingularMatrix):
        inverse(np.array([[1.0, 2.0], [2.0, 4.0]]))


def test_minors_of_singular_leading_block():
    s = SymMatrix(np.array([[0.0, 1.0], [1.0, 1.0]]))
    minors = leading_principal_minors(s)
    assert minors[0] == 0.0
    assert minors[1] == pytest.approx(-1.0)


# --- characteristic polynomial ------------------------------------------------


def test_char_poly_known_case():
    coeffs = char_poly_coeffs(np.diag([1.0, 2.0, 3.0]))
    assert np.allclose(coeffs, [1.0, -6.0, 11.0, -6.0], atol=1e-12)


def test_char_poly_roots_are_eigenvalues():
    rng = np.random.default_rng(15)
    for _ in range(30):
        s = random_sym(rng, 4)
        coeffs = char_poly_coeffs(s.mat)
        roots = np.sort(np.roots(coeffs))
        assert np.allclose(roots, np.linalg.eigvalsh(s.mat), atol=1e-8)


def test_char_poly_trace_and_det_terms():
    rng = np.random.default_rng(16)
    a = rng.normal(size=(5, 5))
    coeffs = char_poly_coeffs(a)
    assert coeffs[1] == pytest.approx(-np.trace(a), rel=1e-12)
    assert coeffs[-1] == pytest.approx((-1) ** 5 * np.linalg.det(a), rel=1e-10)


# --- properties ---------------------------------------------------------------


@st.composite
def sym_matrices(draw):
    n = draw(st.integers(min_value=1, max_value=5))
    vals = st.floats(min_value=-10, max_value=10, allow_nan=False)
    rows = draw(
        st.lists(st.lists(vals, min_size=n, max_size=n), min_size=n, max_size=n)
    )
    a = np.array(rows)
    return SymMatrix((a + a.T) / 2.0)


@given(sym_matrices())
@settings(max_examples=60, deadline=None)
def test_eigenvalues_conserve_trace_and_det(s):
    eig = jacobi_eigh(s)
    assert np.sum(eig.values) == pytest.approx(np.trace(s.mat), rel=1e-9, abs=1e-9)
    assert np.prod(eig.values) == pytest.approx(
        np.linalg.det(s.mat), rel=1e-7, abs=1e-7 * (1 + max_abs(s.mat)) ** s.n
    )


@given(sym_matrices())
@settings(max_examples=60, deadline=None)
def test_sylvester_criterion_matches_eigenvalues(s):
    minors = leading_principal_minors(s)
    eig = np.linalg.eigvalsh(s.mat)
    # stay out of the rounding dead zone
    if min(abs(m) for m in minors) < 1e-7 or np.min(np.abs(eig)) < 1e-7:
        return
    assert (np.min(eig) > 0) == all(m > 0 for m in minors)
