"""Dense complex-matrix foundation.

Hermitian eigendecomposition, trace invariants, density-matrix validation
and convex combination.  Matrices are plain ``numpy.ndarray`` objects of
dtype complex128; everything here is a pure function over immutable values,
so the module is safe for concurrent use.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .exceptions import (
    DimensionMismatch,
    DimensionOutOfRange,
    NoConvergence,
    NotHermitian,
    NotPositiveSemidefinite,
    NotUnitTrace,
    ParameterOutOfRange,
)

#: Default validation tolerance.  Well above double-precision eigensolver
#: residuals, well below any physically meaningful gap at these sizes.
DEFAULT_TOL = 1e-9

#: Largest supported matrix dimension.
MAX_DIM = 64

#: Residual budget of the eigensolver, relative to ``max|H| * n``.
EIG_RESIDUAL_FACTOR = 1e-10


def as_complex_matrix(matrix) -> np.ndarray:
    """Coerce input to a square complex128 array (copy, C-contiguous)."""
    m = np.array(matrix, dtype=np.complex128, order="C")
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] < 1 or m.shape[0] > MAX_DIM:
        raise DimensionOutOfRange(
            f"matrix dimension {m.shape[0]} outside [1, {MAX_DIM}]")
    return m


def hermiticity_defect(matrix: np.ndarray) -> float:
    """Largest entrywise deviation of ``matrix`` from its own adjoint."""
    return float(np.abs(matrix - matrix.conj().T).max())


class EigenSystem(NamedTuple):
    """Spectrum of a Hermitian matrix.

    ``values`` are sorted nonincreasing, ``vectors`` holds the matching
    eigenvectors as columns, and ``residual`` is ``max |H v_k - w_k v_k|``.
    """

    values: np.ndarray
    vectors: np.ndarray
    residual: float


def hermitian_eigensystem(matrix, tol: float = DEFAULT_TOL) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix.

    Raises NotHermitian when the symmetry defect exceeds ``tol`` and
    NoConvergence when the solver cannot meet its residual budget.
    """
    h = as_complex_matrix(matrix)
    defect = hermiticity_defect(h)
    if defect > tol:
        raise NotHermitian(
            f"hermiticity violated: max |H - H^dag| = {defect:.3e} > {tol:.3e}")
    try:
        values, vectors = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - pathological
        raise NoConvergence(str(exc)) from exc
    # eigh returns ascending order; the convention here is nonincreasing.
    values = values[::-1].copy()
    vectors = vectors[:, ::-1].copy()
    residual = float(np.abs(h @ vectors - vectors * values[None, :]).max())
    n = h.shape[0]
    hmax = float(np.abs(h).max())
    budget = EIG_RESIDUAL_FACTOR * hmax * n
    if residual > budget and hmax > 0:  # pragma: no cover - defensive
        raise NoConvergence(
            f"eigensolver residual {residual:.3e} exceeds budget {budget:.3e}")
    ortho = float(np.abs(vectors.conj().T @ vectors - np.eye(n)).max())
    if ortho > 1e-10:  # pragma: no cover - defensive
        raise NoConvergence(f"eigenvectors not orthonormal: defect {ortho:.3e}")
    return EigenSystem(values=values, vectors=vectors, residual=residual)


class DensityMatrix:
    """Validated quantum state: Hermitian, unit trace, positive semidefinite.

    Construction checks all three invariants against ``tol`` and raises the
    matching exception naming the violated invariant.  The stored array is
    made read-only; instances are immutable and shareable across threads.
    """

    __slots__ = ("_matrix", "_tol")

    def __init__(self, matrix, tol: float = DEFAULT_TOL):
        if tol < 0:
            raise ParameterOutOfRange(f"tolerance must be nonnegative, got {tol}")
        m = as_complex_matrix(matrix)
        n = m.shape[0]
        defect = hermiticity_defect(m)
        if defect > tol:
            raise NotHermitian(
                f"hermiticity violated: max |M - M^dag| = {defect:.3e} > {tol:.3e}")
        trace_dev = abs(m.trace() - 1.0)
        if trace_dev > tol:
            raise NotUnitTrace(
                f"unit trace violated: |Tr(M) - 1| = {trace_dev:.3e} > {tol:.3e}")
        smallest = float(np.linalg.eigvalsh(m)[0])
        if smallest < -tol * n:
            raise NotPositiveSemidefinite(
                f"positivity violated: smallest eigenvalue {smallest:.3e} < "
                f"{-tol * n:.3e}")
        m.setflags(write=False)
        self._matrix = m
        self._tol = float(tol)

    @property
    def matrix(self) -> np.ndarray:
        """The underlying complex array (read-only view)."""
        return self._matrix

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    @property
    def tol(self) -> float:
        return self._tol

    def eigenvalues(self) -> np.ndarray:
        """Real spectrum sorted nonincreasing."""
        return np.linalg.eigvalsh(self._matrix)[::-1].copy()

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return f"DensityMatrix(dim={self.dim}, tol={self._tol})"


def purity(rho: DensityMatrix) -> float:
    """Tr(rho^2), the squared Hilbert-Schmidt length of the state."""
    return float(np.sum(rho.eigenvalues() ** 2))


def trace_invariants(rho: DensityMatrix) -> np.ndarray:
    """Vector of Tr(rho^r) for r = 1..n, computed from eigenvalue powers.

    Entry 0 is the trace itself and equals one up to validation tolerance.
    """
    w = rho.eigenvalues()
    n = rho.dim
    return np.array([float(np.sum(w ** r)) for r in range(1, n + 1)])


def unitarily_equivalent(rho1: DensityMatrix, rho2: DensityMatrix,
                         tol: float = DEFAULT_TOL) -> bool:
    """Whether two states lie on the same conjugation orbit.

    Equivalent to spectrum comparison: true iff all n trace invariants
    agree within ``tol``.
    """
    if rho1.dim != rho2.dim:
        raise DimensionMismatch(
            f"dimension mismatch: {rho1.dim} vs {rho2.dim}")
    t1 = trace_invariants(rho1)
    t2 = trace_invariants(rho2)
    return bool(np.abs(t1 - t2).max() <= tol)


def convex_path(rho1: DensityMatrix, rho2: DensityMatrix,
                t: float) -> DensityMatrix:
    """The state (1-t) rho1 + t rho2 on the straight segment between two states."""
    if rho1.dim != rho2.dim:
        raise DimensionMismatch(
            f"dimension mismatch: {rho1.dim} vs {rho2.dim}")
    if not 0.0 <= t <= 1.0:
        raise ParameterOutOfRange(f"path parameter t={t} outside [0, 1]")
    blend = (1.0 - t) * rho1.matrix + t * rho2.matrix
    return DensityMatrix(blend, tol=max(rho1.tol, rho2.tol))


def _as_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_unitary(n: int, seed=None) -> np.ndarray:
    """Haar-distributed unitary from the QR of a complex Gaussian matrix."""
    rng = _as_rng(seed)
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(g)
    # fix the phase ambiguity of QR so the distribution is Haar
    d = np.diagonal(r)
    q = q * (d / np.abs(d))[None, :]
    return q


def random_density_matrix(n: int, seed=None,
                          tol: float = DEFAULT_TOL) -> DensityMatrix:
    """Random full-rank state: G G^dag normalized to unit trace."""
    rng = _as_rng(seed)
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    m = g @ g.conj().T
    m /= m.trace().real
    return DensityMatrix(m, tol=tol)
