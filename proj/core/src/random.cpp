#include "qdual/random.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace qdual {

namespace {

// Uniform on (0, 1]: 53 mantissa bits, never zero.
double uniform_open(std::mt19937_64& gen) {
  return (static_cast<double>(gen() >> 11) + 1.0) * 0x1p-53;
}

cplx standard_complex_gaussian(std::mt19937_64& gen) {
  const double u1 = uniform_open(gen);
  const double u2 = uniform_open(gen);
  const double r = std::sqrt(-std::log(u1));
  return r * std::exp(cplx(0.0, 2.0 * std::numbers::pi * u2));
}

}  // namespace

SquareMatrix random_unitary(int qubits, std::uint64_t seed) {
  if (qubits < 1) throw DimensionError("random unitary needs at least one qubit");
  const std::size_t d = std::size_t{1} << qubits;
  std::mt19937_64 gen(seed);
  SquareMatrix m(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = standard_complex_gaussian(gen);

  // Modified Gram-Schmidt on columns.
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      cplx proj = 0.0;
      for (std::size_t r = 0; r < d; ++r) proj += std::conj(m(r, prev)) * m(r, c);
      for (std::size_t r = 0; r < d; ++r) m(r, c) -= proj * m(r, prev);
    }
    double nrm = 0.0;
    for (std::size_t r = 0; r < d; ++r) nrm += std::norm(m(r, c));
    nrm = std::sqrt(nrm);
    for (std::size_t r = 0; r < d; ++r) m(r, c) /= nrm;
  }
  return m;
}

}  // namespace qdual
