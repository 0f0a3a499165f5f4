import numpy as np
import pytest

from orbit_atlas import (
    DensityMatrix,
    DimensionMismatch,
    NotHermitian,
    NotPositiveSemidefinite,
    NotUnitTrace,
    ParameterOutOfRange,
    convex_path,
    hermitian_eigensystem,
    purity,
    random_density_matrix,
    random_unitary,
    trace_invariants,
    unitarily_equivalent,
)


def charpoly_roots_by_bisection(h, n_roots, lo=None, hi=None, tol=1e-12):
    """Independent eigenvalue oracle: roots of det(H - x I) via sign changes.

    Determinants come from LU (np.linalg.det), not from any eigensolver.
    Assumes simple roots, which holds almost surely for random matrices.
    """
    n = h.shape[0]
    radius = float(np.abs(h).sum(axis=1).max())  # Gershgorin bound
    lo = -radius - 1.0 if lo is None else lo
    hi = radius + 1.0 if hi is None else hi

    def p(x):
        return float(np.linalg.det(h - x * np.eye(n)).real)

    grid = np.linspace(lo, hi, 20001)
    vals = np.array([p(x) for x in grid])
    roots = []
    for i in range(len(grid) - 1):
        if vals[i] == 0.0:
            roots.append(grid[i])
            continue
        if vals[i] * vals[i + 1] < 0.0:
            a, b = grid[i], grid[i + 1]
            fa = vals[i]
            while b - a > tol:
                m = 0.5 * (a + b)
                fm = p(m)
                if fa * fm <= 0.0:
                    b = m
                else:
                    a, fa = m, fm
            roots.append(0.5 * (a + b))
    assert len(roots) == n_roots, f"oracle found {len(roots)} roots, wanted {n_roots}"
    return np.sort(np.array(roots))[::-1]


class TestHermitianEigensystem:
    def test_identity(self):
        es = hermitian_eigensystem(np.eye(3))
        assert np.allclose(es.values, [1.0, 1.0, 1.0])

    def test_diagonal_sorting(self):
        es = hermitian_eigensystem(np.diag([0.2, 0.5, 0.3]))
        assert np.allclose(es.values, [0.5, 0.3, 0.2])

    def test_random_4x4_against_charpoly_bisection(self):
        rng = np.random.default_rng(11)
        g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        h = (g + g.conj().T) / 2
        es = hermitian_eigensystem(h)
        expected = charpoly_roots_by_bisection(h, 4)
        assert np.abs(es.values - expected).max() <= 1e-8

    def test_residual_and_orthonormality(self):
        rng = np.random.default_rng(5)
        for n in (2, 3, 6, 16):
            g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            h = (g + g.conj().T) / 2
            es = hermitian_eigensystem(h)
            assert es.residual <= 1e-10 * np.abs(h).max() * n
            gram = es.vectors.conj().T @ es.vectors
            assert np.abs(gram - np.eye(n)).max() <= 1e-10

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitian):
            hermitian_eigensystem(np.array([[0.0, 1.0], [0.0, 0.0]]))


class TestDensityMatrixValidation:
    def test_accepts_valid_state(self):
        rho = DensityMatrix(np.diag([0.5, 0.3, 0.2]))
        assert rho.dim == 3

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitian, match="hermiticity"):
            DensityMatrix(np.array([[0.5, 0.5], [0.0, 0.5]]))

    def test_rejects_bad_trace(self):
        with pytest.raises(NotUnitTrace, match="unit trace"):
            DensityMatrix(np.diag([0.7, 0.7]))

    def test_rejects_negative_eigenvalue(self):
        with pytest.raises(NotPositiveSemidefinite, match="positivity"):
            DensityMatrix(np.diag([1.2, -0.2]))

    def test_eigenvalue_range_and_sum(self):
        rng = np.random.default_rng(3)
        for n in (2, 3, 4, 6):
            for _ in range(20):
                rho = random_density_matrix(n, rng)
                w = rho.eigenvalues()
                tol = rho.tol
                assert w.min() >= -tol * n
                assert w.max() <= 1.0 + tol
                assert abs(w.sum() - 1.0) <= n * tol


class TestTraceInvariants:
    def test_maximally_mixed_qubit(self):
        rho = DensityMatrix(np.eye(2) / 2)
        assert np.allclose(trace_invariants(rho), [1.0, 0.5])

    def test_pure_projector_powers(self):
        rho = DensityMatrix(np.diag([1.0, 0.0, 0.0]))
        assert np.allclose(trace_invariants(rho), [1.0, 1.0, 1.0])

    def test_against_matrix_powering_oracle(self):
        rho = DensityMatrix(np.diag([0.5, 0.3, 0.2]))
        got = trace_invariants(rho)
        # oracle: repeated matrix multiplication, no eigenvalues involved
        power = np.eye(3, dtype=complex)
        expected = []
        for _ in range(3):
            power = power @ rho.matrix
            expected.append(float(power.trace().real))
        assert np.abs(got - np.array(expected)).max() <= 1e-12
        assert abs(got[1] - 0.38) <= 1e-12

    def test_two_path_consistency_on_random_states(self):
        rng = np.random.default_rng(17)
        for n in (2, 3, 4, 6):
            for _ in range(10):
                rho = random_density_matrix(n, rng)
                got = trace_invariants(rho)
                power = np.eye(n, dtype=complex)
                expected = []
                for _ in range(n):
                    power = power @ rho.matrix
                    expected.append(float(power.trace().real))
                assert np.abs(got - np.array(expected)).max() <= 1e-9


class TestUnitaryEquivalence:
    def test_conjugation_preserves_orbit(self):
        rng = np.random.default_rng(23)
        rho = DensityMatrix(np.diag([0.7, 0.3]))
        u = random_unitary(2, rng)
        rho2 = DensityMatrix(u @ rho.matrix @ u.conj().T, tol=1e-9)
        assert unitarily_equivalent(rho, rho2)

    def test_different_spectra(self):
        assert not unitarily_equivalent(
            DensityMatrix(np.diag([0.7, 0.3])), DensityMatrix(np.diag([0.6, 0.4])))

    def test_reordered_degenerate_spectrum(self):
        a, b = 0.35, 0.15
        rho1 = DensityMatrix(np.diag([a, b, a, b]))
        rho2 = DensityMatrix(np.diag([a, a, b, b]))
        assert unitarily_equivalent(rho1, rho2)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            unitarily_equivalent(
                DensityMatrix(np.eye(2) / 2), DensityMatrix(np.eye(3) / 3))

    def test_random_conjugations(self):
        rng = np.random.default_rng(29)
        for n in (2, 3, 4, 6):
            for _ in range(100):
                rho = random_density_matrix(n, rng)
                u = random_unitary(n, rng)
                conj = DensityMatrix(u @ rho.matrix @ u.conj().T, tol=1e-8)
                assert unitarily_equivalent(rho, conj, tol=1e-8)


class TestConvexPath:
    def test_endpoints(self):
        rho1 = DensityMatrix(np.diag([1.0, 0.0]))
        rho2 = DensityMatrix(np.diag([0.0, 1.0]))
        assert np.allclose(convex_path(rho1, rho2, 0.0).matrix, rho1.matrix)
        assert np.allclose(convex_path(rho1, rho2, 1.0).matrix, rho2.matrix)

    def test_midpoint_of_orthogonal_pure_states(self):
        rho1 = DensityMatrix(np.diag([1.0, 0.0]))
        rho2 = DensityMatrix(np.diag([0.0, 1.0]))
        mid = convex_path(rho1, rho2, 0.5)
        assert np.allclose(mid.matrix, np.eye(2) / 2)

    def test_parameter_out_of_range(self):
        rho = DensityMatrix(np.eye(2) / 2)
        with pytest.raises(ParameterOutOfRange):
            convex_path(rho, rho, 1.5)
        with pytest.raises(ParameterOutOfRange):
            convex_path(rho, rho, -0.1)

    def test_path_stays_valid(self):
        rng = np.random.default_rng(31)
        for _ in range(10):
            rho1 = random_density_matrix(4, rng)
            rho2 = random_density_matrix(4, rng)
            for t in np.linspace(0.0, 1.0, 11):
                convex_path(rho1, rho2, float(t))  # validates on construction


def test_purity_matches_squared_spectrum():
    rho = DensityMatrix(np.diag([0.5, 0.3, 0.2]))
    assert abs(purity(rho) - 0.38) <= 1e-12


def test_dimension_cap():
    from orbit_atlas import DimensionOutOfRange

    with pytest.raises(DimensionOutOfRange):
        DensityMatrix(np.eye(65) / 65)
    DensityMatrix(np.eye(64) / 64)  # boundary dimension is supported
