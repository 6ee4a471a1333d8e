#pragma once

// Dense complex linear algebra on 2^n-dimensional spaces: the value types
// shared by the rest of the library, plus inner products, the unitarity
// check and the two partial-trace pairings.

#include <complex>
#include <cstddef>
#include <vector>

#include "qdual/errors.hpp"

namespace qdual {

using cplx = std::complex<double>;

// Tolerances used by checks and the eigensolver. All strictly positive.
struct Tolerances {
  double unitarity_tol = 1e-10;    // max-entry norm of U^dagger U - I
  double eig_residual_tol = 1e-9;  // max-entry norm of U V - V diag(e^{-i phi})
  double phase_snap_tol = 1e-12;   // eigenphases this close to 0 or 2*pi snap to 0
};

// Number of qubits n for dim = 2^n. Throws DimensionError unless dim is a
// power of two with n >= 1.
int qubits_for_dim(std::size_t dim);

// Row-major complex matrix of dimension 2^n. Entries are kept finite.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dim);
  SquareMatrix(std::size_t dim, std::vector<cplx> entries);

  static SquareMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  int qubits() const { return qubits_; }

  cplx& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  cplx operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

  const std::vector<cplx>& entries() const { return a_; }
  std::vector<cplx>& entries() { return a_; }

 private:
  std::size_t dim_ = 0;
  int qubits_ = 0;
  std::vector<cplx> a_;
};

SquareMatrix operator*(const SquareMatrix& lhs, const SquareMatrix& rhs);
SquareMatrix operator+(const SquareMatrix& lhs, const SquareMatrix& rhs);
SquareMatrix operator-(const SquareMatrix& lhs, const SquareMatrix& rhs);
SquareMatrix operator*(cplx scale, const SquareMatrix& m);

SquareMatrix adjoint(const SquareMatrix& m);
cplx trace(const SquareMatrix& m);

// Largest entry modulus.
double max_abs(const SquareMatrix& m);
double max_abs_diff(const SquareMatrix& lhs, const SquareMatrix& rhs);

// Hilbert-Schmidt inner product tr(A^dagger B).
cplx hs_inner(const SquareMatrix& a, const SquareMatrix& b);

// True iff the max-entry norm of U^dagger U - I is within unitarity_tol.
bool is_unitary(const SquareMatrix& u, const Tolerances& tol = {});

// Amplitudes over the computational basis of `qubits` qubits. Qubit 0 is
// the most significant bit of the basis index.
class StateVector {
 public:
  explicit StateVector(int qubits);  // |0...0>
  StateVector(int qubits, std::vector<cplx> amplitudes);

  static StateVector basis_state(int qubits, std::size_t index);

  int qubits() const { return qubits_; }
  std::size_t dim() const { return amp_.size(); }

  cplx& operator[](std::size_t i) { return amp_[i]; }
  cplx operator[](std::size_t i) const { return amp_[i]; }

  const std::vector<cplx>& amplitudes() const { return amp_; }
  std::vector<cplx>& amplitudes() { return amp_; }

  double norm_sq() const;
  // Truthful normalization check: sum_k |a_k|^2 = 1 within tol.
  bool is_normalized(double tol = 1e-9) const;

 private:
  int qubits_ = 0;
  std::vector<cplx> amp_;
};

// <z|x>, conjugating the left argument.
cplx inner_product(const StateVector& z, const StateVector& x);

// |<z|x>|^2 in [0, 1]. Both arguments must be normalized.
double fidelity_overlap(const StateVector& z, const StateVector& x);

// Reductions of a 2n-qubit pure state to an n x n matrix over the first
// (A) register; the joint basis index is i_A * 2^n + i_R.
//
// The formal (bilinear) pairing never conjugates an amplitude, so weights
// embedded as complex square roots come back squared instead of as moduli:
//   M[a][b] = sum_k psi[a,k] * psi[k,b].
// The physical variant is the standard partial trace:
//   M[a][b] = sum_k psi[a,k] * conj(psi[b,k]).
SquareMatrix formal_partial_trace_R(const StateVector& psi);
SquareMatrix physical_partial_trace_R(const StateVector& psi);

}  // namespace qdual
