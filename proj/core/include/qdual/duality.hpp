#pragma once

// The unitary <-> bipartite-state correspondence. From U: take the
// principal eigenphases phi_i, the offset alpha = (-1 + sum phi_i)/2^n and
// the weights p_i = phi_i - alpha (which sum to 1 but may be negative),
// then purify into |AR> = sum_i sqrt(p_i) |i_A>|i_R>. The formal partial
// trace of |AR> recovers rho = V diag(p) V^dagger, and rho in turn
// reconstructs U up to the global phase e^{i alpha}.

#include <vector>

#include "qdual/eigen.hpp"
#include "qdual/linalg.hpp"

namespace qdual {

struct GlobalPhase {
  double alpha = 0.0;
};

// Spectral pair (weights, eigenbasis). Weights sum to 1; negative entries
// are allowed (the operator has unit trace but need not be positive).
struct RhoOperator {
  std::vector<double> weights;
  SquareMatrix eigenbasis;
  int qubits = 0;

  SquareMatrix matrix() const;  // V diag(weights) V^dagger
};

// sum_i sqrt(p_i) |i_A>|i_R> on 2n qubits, A index major. The R-side copy
// of each eigenvector is conjugated (canonical purification), so the
// amplitude matrix is V diag(sqrt(p)) V^dagger and the state depends on the
// eigenbasis only through its rank projectors. sqrt uses the principal
// branch: sqrt(p) = i*sqrt(|p|) for p < 0, hence squared_norm = sum |p_i|
// and the vector is unit-norm exactly when every weight is nonnegative.
struct PurifiedState {
  StateVector vector;
  double squared_norm = 1.0;
  std::vector<double> source_weights;
};

// Scalar health report for the full round trip U -> rho -> |AR> -> U'.
struct RoundtripReport {
  double trace_error = 0.0;              // |tr(rho) - 1|
  double hermiticity_error = 0.0;        // max-entry |rho - rho^dagger|
  double partial_trace_error = 0.0;      // max-entry |trace_R(|AR>) - rho|
  double reconstruction_fidelity = 0.0;  // |tr(U^dagger U')| / 2^n
  double squared_norm = 0.0;             // of |AR>
};

// V diag(phi) V^dagger; exp(-i S) recovers U.
SquareMatrix hermitian_generator(const PhaseSpectrum& spectrum);

// alpha = (-1 + sum phi_i) / 2^n, the unique offset making the weights sum to 1.
GlobalPhase compute_alpha(const PhaseSpectrum& spectrum);

RhoOperator build_rho(const PhaseSpectrum& spectrum);
RhoOperator build_rho(const SquareMatrix& u, const Tolerances& tol = {});

PurifiedState purify(const RhoOperator& rho);

// purify(build_rho(u)).
PurifiedState dualize(const SquareMatrix& u, const Tolerances& tol = {});

// V diag(e^{-i p_i}) V^dagger; equals the source unitary times e^{i alpha}.
SquareMatrix reconstruct_unitary(const RhoOperator& rho);

RoundtripReport verify_roundtrip(const SquareMatrix& u, const Tolerances& tol = {});
// Same, reusing an already-computed rho for u.
RoundtripReport verify_roundtrip(const SquareMatrix& u, const RhoOperator& rho);

}  // namespace qdual
