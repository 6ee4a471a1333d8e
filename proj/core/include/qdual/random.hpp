#pragma once

// Seeded Haar-distributed random unitaries.
//
// Generator: mt19937_64 seeded directly; uniforms on (0,1] via
// ((x >> 11) + 1) * 2^-53; complex gaussians z = sqrt(-ln u1) * e^{2*pi*i*u2};
// columns of a gaussian matrix orthonormalized by single-pass modified
// Gram-Schmidt. Deterministic across platforms for a fixed seed.

#include <cstdint>

#include "qdual/linalg.hpp"

namespace qdual {

SquareMatrix random_unitary(int qubits, std::uint64_t seed);

}  // namespace qdual
