#pragma once

// Spectral factorization of unitary matrices. A unitary U = X + iY has
// commuting Hermitian parts, so diagonalizing the Hermitian mix
// X + t*Y with a cyclic Jacobi sweep yields a common eigenbasis; the
// eigenvalues of U are then read off as Rayleigh quotients.

#include <vector>

#include "qdual/linalg.hpp"

namespace qdual {

// Eigenphases phi_i in [0, 2*pi), ascending, with
// U = V diag(e^{-i phi_i}) V^dagger up to eig_residual_tol.
struct PhaseSpectrum {
  std::vector<double> phases;
  SquareMatrix eigenbasis;  // columns are the eigenvectors, same order
  int qubits = 0;
};

// Cyclic Jacobi diagonalization of a complex Hermitian matrix.
// Returns false when the sweep limit is hit before the off-diagonal mass
// converges. Eigenpairs come back unsorted.
bool jacobi_hermitian(SquareMatrix a, std::vector<double>& eigenvalues,
                      SquareMatrix& eigenvectors);

// Deterministic eigendecomposition of a unitary. Phases are snapped to 0
// when within phase_snap_tol of the branch cut, sorted ascending with ties
// broken by descending lexicographic comparison of the (phase-canonicalized)
// eigenvector entries, real part before imaginary part.
// Throws NotUnitaryError / ConvergenceError.
PhaseSpectrum unitary_eigendecomposition(const SquareMatrix& u,
                                         const Tolerances& tol = {});

}  // namespace qdual
