#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracle.hpp"
#include "qdual/duality.hpp"
#include "qdual/random.hpp"

using namespace qdual;

namespace {

constexpr double kPi = std::numbers::pi;

SquareMatrix diag2(cplx a, cplx b) { return SquareMatrix(2, {a, 0.0, 0.0, b}); }

SquareMatrix hadamard() {
  const double r = 1.0 / std::numbers::sqrt2;
  return SquareMatrix(2, {r, r, r, -r});
}

PhaseSpectrum spectrum_of(const SquareMatrix& u) { return unitary_eigendecomposition(u); }

// exp(-i S) via the independent Taylor expm.
SquareMatrix expm_minus_i(const SquareMatrix& s) {
  const std::size_t d = s.dim();
  oracle::Mat a(d, oracle::Vec(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) a[r][c] = cplx(0.0, -1.0) * s(r, c);
  const oracle::Mat e = oracle::expm(a);
  SquareMatrix out(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) out(r, c) = e[r][c];
  return out;
}

}  // namespace

TEST_CASE("compute_alpha substitution fixtures") {
  PhaseSpectrum s;
  s.qubits = 1;
  s.eigenbasis = SquareMatrix::identity(2);
  s.phases = {0.0, 0.0};
  CHECK(compute_alpha(s).alpha == -0.5);
  s.phases = {0.0, kPi};
  CHECK(compute_alpha(s).alpha == doctest::Approx((kPi - 1.0) / 2.0).epsilon(1e-15));

  PhaseSpectrum s2;
  s2.qubits = 2;
  s2.eigenbasis = SquareMatrix::identity(4);
  s2.phases = {0.0, 0.0, 0.0, 0.0};
  CHECK(compute_alpha(s2).alpha == -0.25);
}

TEST_CASE("hermitian_generator fixtures") {
  SUBCASE("identity gives the zero matrix") {
    const SquareMatrix s = hermitian_generator(spectrum_of(SquareMatrix::identity(2)));
    CHECK(max_abs(s) == 0.0);
  }
  SUBCASE("Z gives diag(0, pi)") {
    const SquareMatrix s = hermitian_generator(spectrum_of(diag2(1.0, -1.0)));
    CHECK(max_abs_diff(s, diag2(0.0, kPi)) < 1e-12);
  }
  SUBCASE("scalar unitary e^{-i theta} I gives theta I") {
    const double theta = 1.0;
    const cplx w = std::polar(1.0, -theta);
    const SquareMatrix s = hermitian_generator(spectrum_of(diag2(w, w)));
    CHECK(max_abs_diff(s, diag2(theta, theta)) < 1e-12);
  }
  SUBCASE("exp(-i S) reconstructs U within 1e-8") {
    for (const SquareMatrix& u :
         {hadamard(), diag2(1.0, cplx(0.0, 1.0)), random_unitary(2, 7)}) {
      const SquareMatrix s = hermitian_generator(spectrum_of(u));
      CHECK(max_abs_diff(s, adjoint(s)) < 1e-10);
      CHECK(max_abs_diff(expm_minus_i(s), u) < 1e-8);
    }
  }
}

TEST_CASE("build_rho fixtures") {
  SUBCASE("identity: equal weights 1/2") {
    const RhoOperator rho = build_rho(SquareMatrix::identity(2));
    CHECK(rho.weights[0] == 0.5);
    CHECK(rho.weights[1] == 0.5);
    CHECK(max_abs_diff(rho.matrix(), cplx(0.5, 0.0) * SquareMatrix::identity(2)) < 1e-15);
  }
  SUBCASE("Z: weights ((1-pi)/2, (1+pi)/2)") {
    const RhoOperator rho = build_rho(diag2(1.0, -1.0));
    CHECK(rho.weights[0] == doctest::Approx((1.0 - kPi) / 2.0).epsilon(1e-15));
    CHECK(rho.weights[1] == doctest::Approx((1.0 + kPi) / 2.0).epsilon(1e-15));
  }
  SUBCASE("phase gate diag(1, e^{-i pi/2}): weights (1/2 - pi/4, 1/2 + pi/4)") {
    const RhoOperator rho = build_rho(diag2(1.0, std::polar(1.0, -kPi / 2.0)));
    CHECK(rho.weights[0] == doctest::Approx(0.5 - kPi / 4.0).epsilon(1e-14));
    CHECK(rho.weights[1] == doctest::Approx(0.5 + kPi / 4.0).epsilon(1e-14));
  }
  SUBCASE("weights sum to one and the matrix commutes with U") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const SquareMatrix u = random_unitary(2, 100 + seed);
      const RhoOperator rho = build_rho(u);
      double sum = 0.0;
      for (const double p : rho.weights) sum += p;
      CHECK(std::abs(sum - 1.0) < 1e-10);
      const SquareMatrix m = rho.matrix();
      CHECK(max_abs_diff(m, adjoint(m)) < 1e-10);
      CHECK(max_abs_diff(m * u, u * m) < 1e-9);
    }
  }
}

TEST_CASE("purify fixtures") {
  SUBCASE("maximally mixed gives the Bell state") {
    RhoOperator rho{{0.5, 0.5}, SquareMatrix::identity(2), 1};
    const PurifiedState psi = purify(rho);
    const double r = 1.0 / std::numbers::sqrt2;
    CHECK(std::abs(psi.vector[0] - cplx(r, 0.0)) < 1e-15);
    CHECK(std::abs(psi.vector[1]) == 0.0);
    CHECK(std::abs(psi.vector[2]) == 0.0);
    CHECK(std::abs(psi.vector[3] - cplx(r, 0.0)) < 1e-15);
    CHECK(psi.squared_norm == 1.0);
  }
  SUBCASE("rank one gives a product state") {
    RhoOperator rho{{1.0, 0.0}, SquareMatrix::identity(2), 1};
    const PurifiedState psi = purify(rho);
    CHECK(std::abs(psi.vector[0] - cplx(1.0, 0.0)) == 0.0);
    for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(psi.vector[i]) == 0.0);
  }
  SUBCASE("negative weight takes the principal branch") {
    const RhoOperator rho = build_rho(diag2(1.0, -1.0));
    const PurifiedState psi = purify(rho);
    CHECK(psi.vector[0].real() == 0.0);
    CHECK(psi.vector[0].imag() == doctest::Approx(std::sqrt((kPi - 1.0) / 2.0)).epsilon(1e-14));
    CHECK(psi.vector[3].imag() == 0.0);
    CHECK(psi.vector[3].real() == doctest::Approx(std::sqrt((kPi + 1.0) / 2.0)).epsilon(1e-14));
    CHECK(psi.squared_norm == doctest::Approx(kPi).epsilon(1e-14));
  }
  SUBCASE("formal partial trace returns the operator, even off basis") {
    for (const SquareMatrix& u :
         {hadamard(), random_unitary(1, 5), random_unitary(2, 6)}) {
      const RhoOperator rho = build_rho(u);
      const PurifiedState psi = purify(rho);
      CHECK(max_abs_diff(formal_partial_trace_R(psi.vector), rho.matrix()) < 1e-10);
      double sum_abs = 0.0;
      for (const double p : rho.weights) sum_abs += std::abs(p);
      CHECK(psi.squared_norm == doctest::Approx(sum_abs).epsilon(1e-14));
      CHECK(psi.squared_norm >= 1.0 - 1e-12);
    }
  }
}

TEST_CASE("dualize fixtures") {
  SUBCASE("identity gives the Bell state to 1e-12") {
    const PurifiedState psi = dualize(SquareMatrix::identity(2));
    const double r = 1.0 / std::numbers::sqrt2;
    const cplx expect[4] = {r, 0.0, 0.0, r};
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(psi.vector[i] - expect[i]) <= 1e-12);
  }
  SUBCASE("4-dim identity gives the rank-4 maximally entangled state") {
    const PurifiedState psi = dualize(SquareMatrix::identity(4));
    const RhoOperator rho = build_rho(SquareMatrix::identity(4));
    for (const double p : rho.weights) CHECK(p == doctest::Approx(0.25).epsilon(1e-13));
    for (std::size_t i = 0; i < 16; ++i) {
      const bool diagonal_pair = (i == 0 || i == 5 || i == 10 || i == 15);
      CHECK(std::abs(psi.vector[i] - (diagonal_pair ? cplx(0.5, 0.0) : cplx(0.0, 0.0))) <=
            1e-12);
    }
  }
}

TEST_CASE("reconstruct_unitary fixtures") {
  SUBCASE("maximally mixed gives e^{-i/2} I") {
    RhoOperator rho{{0.5, 0.5}, SquareMatrix::identity(2), 1};
    const SquareMatrix w = reconstruct_unitary(rho);
    const cplx scale = std::exp(cplx(0.0, -0.5));
    CHECK(max_abs_diff(w, scale * SquareMatrix::identity(2)) < 1e-15);
  }
  SUBCASE("rho(Z) gives e^{i alpha} Z") {
    const SquareMatrix z = diag2(1.0, -1.0);
    const SquareMatrix w = reconstruct_unitary(build_rho(z));
    const cplx scale = std::exp(cplx(0.0, (kPi - 1.0) / 2.0));
    CHECK(max_abs_diff(w, scale * z) < 1e-12);
    CHECK(std::abs(hs_inner(z, w)) / 2.0 == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("rho(H) reconstructs H up to global phase") {
    const SquareMatrix h = hadamard();
    const SquareMatrix w = reconstruct_unitary(build_rho(h));
    CHECK(std::abs(hs_inner(h, w)) / 2.0 >= 1.0 - 1e-9);
  }
}

TEST_CASE("verify_roundtrip fixtures") {
  SUBCASE("identity") {
    const RoundtripReport r = verify_roundtrip(SquareMatrix::identity(2));
    CHECK(r.trace_error <= 1e-12);
    CHECK(r.hermiticity_error <= 1e-12);
    CHECK(r.partial_trace_error <= 1e-12);
    CHECK(r.reconstruction_fidelity == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.squared_norm == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("Z") {
    const RoundtripReport r = verify_roundtrip(diag2(1.0, -1.0));
    CHECK(r.trace_error <= 1e-10);
    CHECK(r.hermiticity_error <= 1e-10);
    CHECK(r.partial_trace_error <= 1e-10);
    CHECK(r.reconstruction_fidelity >= 1.0 - 1e-9);
    CHECK(r.squared_norm == doctest::Approx(kPi).epsilon(1e-12));
  }
  SUBCASE("random 8x8") {
    const RoundtripReport r = verify_roundtrip(random_unitary(3, 99));
    CHECK(r.trace_error <= 1e-10);
    CHECK(r.hermiticity_error <= 1e-10);
    CHECK(r.partial_trace_error <= 1e-10);
    CHECK(r.reconstruction_fidelity >= 1.0 - 1e-9);
  }
}

TEST_CASE("rho does not depend on the choice of eigenbasis for degenerate spectra") {
  PhaseSpectrum in_computational;
  in_computational.qubits = 1;
  in_computational.phases = {0.0, 0.0};
  in_computational.eigenbasis = SquareMatrix::identity(2);
  PhaseSpectrum in_hadamard = in_computational;
  in_hadamard.eigenbasis = hadamard();
  CHECK(max_abs_diff(build_rho(in_computational).matrix(), build_rho(in_hadamard).matrix()) <
        1e-10);
  // The purification agrees too: it depends on V only through rank projectors.
  const PurifiedState a = purify(build_rho(in_computational));
  const PurifiedState b = purify(build_rho(in_hadamard));
  for (std::size_t i = 0; i < a.vector.dim(); ++i)
    CHECK(std::abs(a.vector[i] - b.vector[i]) < 1e-12);
}

TEST_CASE("uniform no-wrap rephasing leaves the dual state unchanged") {
  // Diagonal 2-qubit unitary with phases (0, pi/4, pi/2, 3pi/4); shifting by
  // 2 pi / 4 wraps nothing, shifts alpha by the same amount, and keeps every
  // weight identical.
  SquareMatrix u(4);
  const double phases[4] = {0.0, kPi / 4.0, kPi / 2.0, 3.0 * kPi / 4.0};
  for (std::size_t i = 0; i < 4; ++i) u(i, i) = std::polar(1.0, -phases[i]);
  const double shift = 2.0 * kPi / 4.0;
  const SquareMatrix v = std::polar(1.0, -shift) * u;

  const PurifiedState pu = dualize(u);
  const PurifiedState pv = dualize(v);
  CHECK(std::abs(pu.squared_norm - pv.squared_norm) < 1e-12);
  for (std::size_t i = 0; i < pu.vector.dim(); ++i)
    CHECK(std::abs(pu.vector[i] - pv.vector[i]) < 1e-12);
}
