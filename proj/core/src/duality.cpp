#include "qdual/duality.hpp"

#include <cmath>
#include <complex>

namespace qdual {

namespace {

// V diag(f) V^dagger.
SquareMatrix synthesize(const SquareMatrix& v, const std::vector<cplx>& diag) {
  const std::size_t d = v.dim();
  if (diag.size() != d) throw DimensionError("diagonal length does not match basis dimension");
  SquareMatrix m(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      cplx acc = 0.0;
      for (std::size_t i = 0; i < d; ++i) acc += diag[i] * v(r, i) * std::conj(v(c, i));
      m(r, c) = acc;
    }
  return m;
}

cplx principal_sqrt(double p) {
  return p >= 0.0 ? cplx(std::sqrt(p), 0.0) : cplx(0.0, std::sqrt(-p));
}

}  // namespace

SquareMatrix RhoOperator::matrix() const {
  std::vector<cplx> diag(weights.begin(), weights.end());
  return synthesize(eigenbasis, diag);
}

SquareMatrix hermitian_generator(const PhaseSpectrum& spectrum) {
  std::vector<cplx> diag(spectrum.phases.begin(), spectrum.phases.end());
  return synthesize(spectrum.eigenbasis, diag);
}

GlobalPhase compute_alpha(const PhaseSpectrum& spectrum) {
  double sum = 0.0;
  for (const double phi : spectrum.phases) sum += phi;
  return GlobalPhase{(-1.0 + sum) / static_cast<double>(spectrum.phases.size())};
}

RhoOperator build_rho(const PhaseSpectrum& spectrum) {
  const double alpha = compute_alpha(spectrum).alpha;
  RhoOperator rho;
  rho.qubits = spectrum.qubits;
  rho.eigenbasis = spectrum.eigenbasis;
  rho.weights.reserve(spectrum.phases.size());
  for (const double phi : spectrum.phases) rho.weights.push_back(phi - alpha);
  return rho;
}

RhoOperator build_rho(const SquareMatrix& u, const Tolerances& tol) {
  return build_rho(unitary_eigendecomposition(u, tol));
}

PurifiedState purify(const RhoOperator& rho) {
  const SquareMatrix& v = rho.eigenbasis;
  const std::size_t d = v.dim();
  if (rho.weights.size() != d) throw DimensionError("weight count does not match basis dimension");

  // Amplitude matrix V diag(sqrt(p)) V^dagger over the (A, R) joint index.
  PurifiedState out{StateVector(2 * rho.qubits), 0.0, rho.weights};
  for (std::size_t i = 0; i < d; ++i) out.squared_norm += std::abs(rho.weights[i]);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t r = 0; r < d; ++r) {
      cplx acc = 0.0;
      for (std::size_t i = 0; i < d; ++i)
        acc += principal_sqrt(rho.weights[i]) * v(a, i) * std::conj(v(r, i));
      out.vector[a * d + r] = acc;
    }
  return out;
}

PurifiedState dualize(const SquareMatrix& u, const Tolerances& tol) {
  return purify(build_rho(u, tol));
}

SquareMatrix reconstruct_unitary(const RhoOperator& rho) {
  std::vector<cplx> diag;
  diag.reserve(rho.weights.size());
  for (const double p : rho.weights) diag.push_back(std::exp(cplx(0.0, -p)));
  return synthesize(rho.eigenbasis, diag);
}

RoundtripReport verify_roundtrip(const SquareMatrix& u, const Tolerances& tol) {
  return verify_roundtrip(u, build_rho(u, tol));
}

RoundtripReport verify_roundtrip(const SquareMatrix& u, const RhoOperator& rho) {
  const SquareMatrix rho_m = rho.matrix();
  const PurifiedState psi = purify(rho);
  const SquareMatrix w = reconstruct_unitary(rho);

  RoundtripReport report;
  report.trace_error = std::abs(trace(rho_m) - cplx(1.0, 0.0));
  report.hermiticity_error = max_abs_diff(rho_m, adjoint(rho_m));
  report.partial_trace_error = max_abs_diff(formal_partial_trace_R(psi.vector), rho_m);
  report.reconstruction_fidelity =
      std::abs(hs_inner(u, w)) / static_cast<double>(u.dim());
  report.squared_norm = psi.squared_norm;
  return report;
}

}  // namespace qdual
