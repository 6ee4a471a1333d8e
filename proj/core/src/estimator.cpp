#include "qdual/estimator.hpp"

#include <cfenv>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace qdual {

namespace {

// Like penalty_bits but returns -1 instead of throwing, for the fold.
int penalty_or_negative(double overlap) {
  if (!(overlap > 0.0)) return -1;
  if (overlap >= 1.0 - 1e-12) return 0;
  const double snapped = std::nearbyint(overlap * 1e12) / 1e12;
  if (snapped <= 0.0) return -1;
  if (snapped >= 1.0) return 0;
  return std::max(static_cast<int>(std::ceil(-std::log2(snapped))), 0);
}

// Pure fold over the enumeration stream. Enumeration order is (length,
// then lexicographic bits), so keeping the first strict improvement
// realizes the canonical tie-break.
template <typename OverlapFn>
ComplexityEstimate minimize(int qubits, const Budget& budget, OverlapFn&& overlap_of) {
  ComplexityEstimate best;
  best.budget = budget;
  bool found = false;
  enumerate_programs(
      qubits, budget.max_program_bits, [&](const Program& p, const Circuit& c) {
        const double overlap = overlap_of(c);
        const int penalty = penalty_or_negative(overlap);
        if (penalty < 0 || penalty > budget.max_penalty_bits) return;
        const int value = p.length() + penalty;
        if (!found || value < best.value_bits) {
          found = true;
          best.value_bits = value;
          best.best_program = p;
          best.best_overlap = overlap;
          best.penalty_bits = penalty;
        }
      });
  if (!found)
    throw NoCandidateError("no program within budget has nonzero overlap under the penalty cap");
  best.exhausted = true;  // the fold saw every accepted program within budget
  return best;
}

}  // namespace

int penalty_bits(double overlap) {
  const int k = penalty_or_negative(overlap);
  if (k < 0) throw ZeroOverlapError("overlap must be positive");
  return k;
}

ComplexityEstimate estimate_state_complexity(const StateVector& target, const Budget& budget) {
  if (!target.is_normalized()) throw NotNormalizedError("target state is not normalized");
  return minimize(target.qubits(), budget, [&](const Circuit& c) {
    return fidelity_overlap(run_state(c), target);
  });
}

ComplexityEstimate estimate_unitary_complexity(const SquareMatrix& u, const Budget& budget,
                                               const Tolerances& tol) {
  if (!is_unitary(u, tol)) throw NotUnitaryError("target is not unitary within tolerance");
  const double denom = static_cast<double>(u.dim()) * static_cast<double>(u.dim());
  return minimize(u.qubits(), budget, [&](const Circuit& c) {
    return std::norm(hs_inner(run_unitary(c), u)) / denom;
  });
}

ComplexityEstimate estimate_dual_complexity(const SquareMatrix& u, const Budget& budget,
                                            const Tolerances& tol) {
  const PurifiedState dual = dualize(u, tol);
  StateVector target = dual.vector;
  const bool rescale = std::abs(dual.squared_norm - 1.0) > 1e-12;
  if (rescale) {
    const double inv = 1.0 / std::sqrt(dual.squared_norm);
    for (cplx& a : target.amplitudes()) a *= inv;
  }
  ComplexityEstimate estimate = estimate_state_complexity(target, budget);
  estimate.rescaled_input = rescale;
  estimate.input_squared_norm = dual.squared_norm;
  return estimate;
}

DualityReport compare_duality(const SquareMatrix& u, const Budget& unitary_budget,
                              const Budget& dual_budget, const Tolerances& tol) {
  DualityReport report;
  report.k_unitary = estimate_unitary_complexity(u, unitary_budget, tol);
  report.k_dual = estimate_dual_complexity(u, dual_budget, tol);
  report.delta = report.k_dual.value_bits - report.k_unitary.value_bits;
  if (report.k_dual.rescaled_input) {
    std::ostringstream note;
    note << "dual target rescaled by 1/sqrt(squared_norm), squared_norm="
         << std::setprecision(17) << report.k_dual.input_squared_norm;
    report.normalization_note = note.str();
  } else {
    report.normalization_note = "dual target already unit norm";
  }
  return report;
}

}  // namespace qdual
