#include "qdual/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace qdual {

int qubits_for_dim(std::size_t dim) {
  if (dim < 2 || !std::has_single_bit(dim))
    throw DimensionError("dimension must be 2^n with n >= 1, got " + std::to_string(dim));
  return std::bit_width(dim) - 1;
}

SquareMatrix::SquareMatrix(std::size_t dim)
    : dim_(dim), qubits_(qubits_for_dim(dim)), a_(dim * dim) {}

SquareMatrix::SquareMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), qubits_(qubits_for_dim(dim)), a_(std::move(entries)) {
  if (a_.size() != dim_ * dim_) throw DimensionError("entry count does not match dimension");
}

SquareMatrix SquareMatrix::identity(std::size_t dim) {
  SquareMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

SquareMatrix operator*(const SquareMatrix& lhs, const SquareMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw DimensionError("matrix product dimension mismatch");
  const std::size_t d = lhs.dim();
  SquareMatrix c(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const cplx aik = lhs(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < d; ++j) c(i, j) += aik * rhs(k, j);
    }
  return c;
}

SquareMatrix operator+(const SquareMatrix& lhs, const SquareMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw DimensionError("matrix sum dimension mismatch");
  SquareMatrix c = lhs;
  for (std::size_t i = 0; i < rhs.entries().size(); ++i) c.entries()[i] += rhs.entries()[i];
  return c;
}

SquareMatrix operator-(const SquareMatrix& lhs, const SquareMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw DimensionError("matrix difference dimension mismatch");
  SquareMatrix c = lhs;
  for (std::size_t i = 0; i < rhs.entries().size(); ++i) c.entries()[i] -= rhs.entries()[i];
  return c;
}

SquareMatrix operator*(cplx scale, const SquareMatrix& m) {
  SquareMatrix c = m;
  for (cplx& e : c.entries()) e *= scale;
  return c;
}

SquareMatrix adjoint(const SquareMatrix& m) {
  const std::size_t d = m.dim();
  SquareMatrix c(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c(i, j) = std::conj(m(j, i));
  return c;
}

cplx trace(const SquareMatrix& m) {
  cplx t = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

double max_abs(const SquareMatrix& m) {
  double r = 0.0;
  for (const cplx& e : m.entries()) r = std::max(r, std::abs(e));
  return r;
}

double max_abs_diff(const SquareMatrix& lhs, const SquareMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw DimensionError("matrix comparison dimension mismatch");
  double r = 0.0;
  for (std::size_t i = 0; i < lhs.entries().size(); ++i)
    r = std::max(r, std::abs(lhs.entries()[i] - rhs.entries()[i]));
  return r;
}

cplx hs_inner(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("inner product dimension mismatch");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    acc += std::conj(a.entries()[i]) * b.entries()[i];
  return acc;
}

bool is_unitary(const SquareMatrix& u, const Tolerances& tol) {
  return max_abs_diff(adjoint(u) * u, SquareMatrix::identity(u.dim())) <= tol.unitarity_tol;
}

StateVector::StateVector(int qubits) : qubits_(qubits) {
  if (qubits < 1) throw DimensionError("state needs at least one qubit");
  amp_.assign(std::size_t{1} << qubits, 0.0);
}

StateVector::StateVector(int qubits, std::vector<cplx> amplitudes)
    : qubits_(qubits), amp_(std::move(amplitudes)) {
  if (qubits < 1) throw DimensionError("state needs at least one qubit");
  if (amp_.size() != (std::size_t{1} << qubits))
    throw DimensionError("amplitude count does not match qubit count");
}

StateVector StateVector::basis_state(int qubits, std::size_t index) {
  StateVector v(qubits);
  if (index >= v.dim()) throw DimensionError("basis index out of range");
  v[index] = 1.0;
  return v;
}

double StateVector::norm_sq() const {
  double s = 0.0;
  for (const cplx& a : amp_) s += std::norm(a);
  return s;
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm_sq() - 1.0) <= tol; }

cplx inner_product(const StateVector& z, const StateVector& x) {
  if (z.dim() != x.dim()) throw DimensionError("state inner product dimension mismatch");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < z.dim(); ++i) acc += std::conj(z[i]) * x[i];
  return acc;
}

double fidelity_overlap(const StateVector& z, const StateVector& x) {
  return std::norm(inner_product(z, x));
}

namespace {

// Joint index convention on A (first n qubits) and R (last n qubits):
// amplitude(i_A, i_R) = psi[i_A * 2^n + i_R].
std::size_t split_dim(const StateVector& psi) {
  const int n2 = psi.qubits();
  if (n2 % 2 != 0) throw DimensionError("partial trace needs an even qubit count");
  return std::size_t{1} << (n2 / 2);
}

}  // namespace

SquareMatrix formal_partial_trace_R(const StateVector& psi) {
  const std::size_t d = split_dim(psi);
  SquareMatrix m(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < d; ++k) acc += psi[a * d + k] * psi[k * d + b];
      m(a, b) = acc;
    }
  return m;
}

SquareMatrix physical_partial_trace_R(const StateVector& psi) {
  const std::size_t d = split_dim(psi);
  SquareMatrix m(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < d; ++k) acc += psi[a * d + k] * std::conj(psi[b * d + k]);
      m(a, b) = acc;
    }
  return m;
}

}  // namespace qdual
