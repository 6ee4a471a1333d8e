#include "qdual/eigen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

namespace qdual {

namespace {

double off_diag_sq(const SquareMatrix& a) {
  const std::size_t d = a.dim();
  double s = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j) s += std::norm(a(i, j));
  return s;
}

double fro_norm(const SquareMatrix& a) {
  double s = 0.0;
  for (const cplx& e : a.entries()) s += std::norm(e);
  return std::sqrt(s);
}

}  // namespace

bool jacobi_hermitian(SquareMatrix a, std::vector<double>& eigenvalues,
                      SquareMatrix& eigenvectors) {
  const std::size_t d = a.dim();
  eigenvectors = SquareMatrix::identity(d);
  const double stop = 1e-14 * std::max(fro_norm(a), 1.0);
  const double skip = stop / (8.0 * static_cast<double>(d));

  bool converged = false;
  for (int sweep = 0; sweep < 64 && !converged; ++sweep) {
    if (off_diag_sq(a) <= stop * stop) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < d; ++p)
      for (std::size_t q = p + 1; q < d; ++q) {
        const double m = std::abs(a(p, q));
        if (m <= skip) continue;
        // Phase out a(p,q), then a real Jacobi rotation in the (p,q) plane.
        const cplx w = a(p, q) / m;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * m);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const cplx swc = s * std::conj(w);

        for (std::size_t i = 0; i < d; ++i) {
          if (i == p || i == q) continue;
          const cplx aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - swc * aiq;
          a(i, q) = s * aip + c * std::conj(w) * aiq;
          a(p, i) = std::conj(a(i, p));
          a(q, i) = std::conj(a(i, q));
        }
        const double app = a(p, p).real(), aqq = a(q, q).real();
        a(p, p) = app - t * m;
        a(q, q) = aqq + t * m;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        for (std::size_t i = 0; i < d; ++i) {
          const cplx vip = eigenvectors(i, p), viq = eigenvectors(i, q);
          eigenvectors(i, p) = c * vip - swc * viq;
          eigenvectors(i, q) = s * vip + c * std::conj(w) * viq;
        }
      }
  }
  if (!converged && off_diag_sq(a) > stop * stop) return false;

  eigenvalues.resize(d);
  for (std::size_t i = 0; i < d; ++i) eigenvalues[i] = a(i, i).real();
  return true;
}

namespace {

// Mixing weights for the Hermitian combination (U+U†)/2 + t (U-U†)/(2i);
// later entries are retried only when an earlier t leaves degenerate
// clusters that merge distinct eigenvalues of U.
constexpr std::array<double, 8> kMixSchedule = {
    0.618,
    0.377964473009227,
    1.202056903159594,
    0.267949192431123,
    0.847213595499958,
    1.537399616532950,
    0.104990252829905,
    2.094551481542327,
};

// Rotate each column so its first entry of (near-)maximal modulus is real
// and positive; pins the free phase of every eigenvector.
void canonicalize_columns(SquareMatrix& v) {
  const std::size_t d = v.dim();
  for (std::size_t j = 0; j < d; ++j) {
    double colmax = 0.0;
    for (std::size_t i = 0; i < d; ++i) colmax = std::max(colmax, std::abs(v(i, j)));
    if (colmax == 0.0) continue;
    for (std::size_t i = 0; i < d; ++i) {
      const double m = std::abs(v(i, j));
      if (m >= colmax * (1.0 - 1e-12)) {
        const cplx phase = std::conj(v(i, j)) / m;
        for (std::size_t r = 0; r < d; ++r) v(r, j) *= phase;
        break;
      }
    }
  }
}

// True when column a should sort before column b on a phase tie:
// descending lexicographic comparison, real part before imaginary part.
bool column_lex_before(const SquareMatrix& v, std::size_t a, std::size_t b) {
  for (std::size_t r = 0; r < v.dim(); ++r) {
    const cplx ea = v(r, a), eb = v(r, b);
    if (ea.real() != eb.real()) return ea.real() > eb.real();
    if (ea.imag() != eb.imag()) return ea.imag() > eb.imag();
  }
  return false;
}

}  // namespace

PhaseSpectrum unitary_eigendecomposition(const SquareMatrix& u, const Tolerances& tol) {
  if (!is_unitary(u, tol)) throw NotUnitaryError("input is not unitary within tolerance");
  const std::size_t d = u.dim();
  const SquareMatrix ud = adjoint(u);
  const SquareMatrix x = cplx(0.5, 0.0) * (u + ud);
  const SquareMatrix y = cplx(0.0, -0.5) * (u - ud);  // (U - U†) / (2i)

  for (const double t : kMixSchedule) {
    std::vector<double> unused;
    SquareMatrix v;
    if (!jacobi_hermitian(x + cplx(t, 0.0) * y, unused, v)) continue;

    // Eigenvalues of U as Rayleigh quotients over the candidate basis.
    const SquareMatrix uv = u * v;
    std::vector<double> phases(d);
    for (std::size_t j = 0; j < d; ++j) {
      cplx mu = 0.0;
      for (std::size_t r = 0; r < d; ++r) mu += std::conj(v(r, j)) * uv(r, j);
      double phi = -std::atan2(mu.imag(), mu.real());
      if (phi < 0.0) phi += 2.0 * std::numbers::pi;
      if (phi <= tol.phase_snap_tol || phi >= 2.0 * std::numbers::pi - tol.phase_snap_tol)
        phi = 0.0;
      phases[j] = phi;
    }

    canonicalize_columns(v);
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (phases[a] != phases[b]) return phases[a] < phases[b];
      return column_lex_before(v, a, b);
    });

    PhaseSpectrum spectrum;
    spectrum.qubits = u.qubits();
    spectrum.phases.resize(d);
    spectrum.eigenbasis = SquareMatrix(d);
    for (std::size_t j = 0; j < d; ++j) {
      spectrum.phases[j] = phases[order[j]];
      for (std::size_t r = 0; r < d; ++r) spectrum.eigenbasis(r, j) = v(r, order[j]);
    }

    const SquareMatrix& vs = spectrum.eigenbasis;
    const SquareMatrix uvs = u * vs;
    double residual = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      const cplx eig = std::exp(cplx(0.0, -spectrum.phases[j]));
      for (std::size_t r = 0; r < d; ++r)
        residual = std::max(residual, std::abs(uvs(r, j) - vs(r, j) * eig));
    }
    const double basis_error = max_abs_diff(adjoint(vs) * vs, SquareMatrix::identity(d));
    if (residual <= tol.eig_residual_tol && basis_error <= tol.eig_residual_tol)
      return spectrum;
  }
  throw ConvergenceError("eigendecomposition residual not met for any mixing weight");
}

}  // namespace qdual
