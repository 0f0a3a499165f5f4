import numpy as np
import pytest

from orbit_atlas import (
    Convention,
    CoherenceVector,
    DensityMatrix,
    DimensionOutOfRange,
    convert_convention,
    from_coherence_vector,
    generate_basis,
    is_physical_vector,
    purity,
    random_density_matrix,
    to_coherence_vector,
)

SQRT2 = np.sqrt(2.0)


def gram_matrix(basis):
    stack = np.stack(basis.elements)
    return np.einsum("aij,bji->ab", stack, stack).real


class TestBasisGeneration:
    def test_qubit_basis_is_normalized_pauli_triple(self):
        basis = generate_basis(2)
        x = np.array([[0, 1], [1, 0]]) / SQRT2
        y = np.array([[0, -1j], [1j, 0]]) / SQRT2
        z = np.array([[1, 0], [0, -1]]) / SQRT2
        for got, want in zip(basis.elements, (x, y, z)):
            assert np.abs(got - want).max() <= 1e-15

    def test_qutrit_first_diagonal_element(self):
        basis = generate_basis(3)
        # diagonal block starts after 3 symmetric + 3 antisymmetric elements
        z1 = basis.elements[6]
        assert np.abs(z1 - np.diag([1, -1, 0]) / SQRT2).max() <= 1e-15

    def test_element_count(self):
        for n in range(2, 9):
            assert len(generate_basis(n)) == n * n - 1

    def test_orthonormality(self):
        for n in range(2, 9):
            g = gram_matrix(generate_basis(n))
            assert np.abs(g - np.eye(n * n - 1)).max() <= 1e-10

    def test_traceless_and_hermitian(self):
        for n in (2, 3, 5, 8):
            for el in generate_basis(n).elements:
                assert abs(el.trace()) <= 1e-12
                assert np.abs(el - el.conj().T).max() <= 1e-12

    def test_identity_element(self):
        basis = generate_basis(4)
        assert np.abs(basis.identity_element - np.eye(4) / 2.0).max() <= 1e-15

    def test_dimension_out_of_range(self):
        with pytest.raises(DimensionOutOfRange):
            generate_basis(1)
        with pytest.raises(DimensionOutOfRange):
            generate_basis(17)


class TestCoherenceVector:
    def test_maximally_mixed_maps_to_zero(self):
        for n in (2, 3, 4):
            vec = to_coherence_vector(DensityMatrix(np.eye(n) / n))
            assert np.abs(vec.components).max() <= 1e-15

    def test_qubit_projector_components(self):
        vec = to_coherence_vector(DensityMatrix(np.diag([1.0, 0.0])))
        assert np.allclose(vec.components, [0.0, 0.0, 1.0 / SQRT2])

    def test_norm_identity(self):
        rng = np.random.default_rng(41)
        for n in (2, 3, 4, 6):
            for _ in range(25):
                rho = random_density_matrix(n, rng)
                vec = to_coherence_vector(rho)
                assert abs(vec.norm() ** 2 - (purity(rho) - 1.0 / n)) <= 1e-10

    def test_round_trip(self):
        rng = np.random.default_rng(43)
        for n in (2, 3, 4, 6):
            for _ in range(25):
                rho = random_density_matrix(n, rng)
                back = from_coherence_vector(to_coherence_vector(rho))
                assert np.abs(back - rho.matrix).max() <= 1e-10

    def test_zero_vector_reconstructs_center(self):
        vec = CoherenceVector(dim=4, components=np.zeros(15))
        assert np.abs(from_coherence_vector(vec) - np.eye(4) / 4).max() <= 1e-15

    def test_boundary_direction_is_not_physical_for_qutrits(self):
        # radius sqrt(2/3) along the first antisymmetric element
        comps = np.zeros(8)
        comps[3] = np.sqrt(2.0 / 3.0)
        vec = CoherenceVector(dim=3, components=comps)
        got = from_coherence_vector(vec)
        # independent reconstruction by hand
        sigma = np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]]) / SQRT2
        manual = np.eye(3) / 3 + comps[3] * sigma
        assert np.abs(got - manual).max() <= 1e-15
        smallest = np.linalg.eigvalsh(manual)[0]
        assert smallest < -1e-6
        physical, reported = is_physical_vector(vec)
        assert not physical
        assert abs(reported - smallest) <= 1e-12


class TestPhysicality:
    def test_qubit_half_ball_is_physical(self):
        rng = np.random.default_rng(47)
        dirs = rng.standard_normal((500, 3))
        dirs /= np.linalg.norm(dirs, axis=1)[:, None]
        radii = 0.5 * rng.random(500) ** (1.0 / 3.0)
        for d, r in zip(dirs, radii):
            ok, _ = is_physical_vector(CoherenceVector(dim=2, components=d * r))
            assert ok

    def test_qubit_ball_radius_is_inverse_sqrt2(self):
        # the exact positivity radius for n=2 under the norm identity
        rng = np.random.default_rng(53)
        dirs = rng.standard_normal((200, 3))
        dirs /= np.linalg.norm(dirs, axis=1)[:, None]
        inside = 1.0 / SQRT2 - 1e-9
        outside = 1.0 / SQRT2 + 1e-6
        for d in dirs:
            ok_in, _ = is_physical_vector(CoherenceVector(dim=2, components=d * inside))
            ok_out, _ = is_physical_vector(CoherenceVector(dim=2, components=d * outside))
            assert ok_in
            assert not ok_out

    def test_center_min_eigenvalue(self):
        ok, smallest = is_physical_vector(CoherenceVector(dim=3, components=np.zeros(8)))
        assert ok
        assert abs(smallest - 1.0 / 3.0) <= 1e-15


class TestConventionConversion:
    def test_scaling_fixture(self):
        vec = CoherenceVector(dim=2, components=np.array([0, 0, 1 / SQRT2]))
        bloch = convert_convention(vec, Convention.BLOCH)
        assert np.allclose(bloch.components, [0, 0, SQRT2])
        assert bloch.convention is Convention.BLOCH

    def test_involution(self):
        rng = np.random.default_rng(59)
        comps = rng.standard_normal(8)
        vec = CoherenceVector(dim=3, components=comps)
        back = convert_convention(convert_convention(vec, Convention.BLOCH),
                                  Convention.COHERENCE)
        assert np.abs(back.components - comps).max() <= 1e-15

    def test_zero_vector_fixed_point(self):
        vec = CoherenceVector(dim=3, components=np.zeros(8))
        assert np.abs(convert_convention(vec, Convention.BLOCH).components).max() == 0.0

    def test_bloch_norm_identity(self):
        rng = np.random.default_rng(61)
        for _ in range(20):
            rho = random_density_matrix(3, rng)
            bloch = convert_convention(to_coherence_vector(rho), Convention.BLOCH)
            assert abs(bloch.norm() ** 2 - 4.0 * (purity(rho) - 1.0 / 3.0)) <= 1e-10

    def test_reconstruction_respects_convention(self):
        rho = random_density_matrix(3, 67)
        bloch = convert_convention(to_coherence_vector(rho), Convention.BLOCH)
        assert np.abs(from_coherence_vector(bloch) - rho.matrix).max() <= 1e-10
