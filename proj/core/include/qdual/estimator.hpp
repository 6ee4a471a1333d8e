#pragma once

// Machine-relative description-cost estimators. An estimate is the minimum
// over accepted programs p within budget of
//   l(p) + ceil(-log2(overlap(p, target)))
// i.e. exact-preparation cost plus an approximation penalty. Values are
// upper bounds relative to the fixed reference machine; ties break toward
// the shorter program, then lexicographically smaller bits.

#include <string>

#include "qdual/duality.hpp"
#include "qdual/linalg.hpp"
#include "qdual/machine.hpp"

namespace qdual {

struct Budget {
  int max_program_bits = 12;
  int max_penalty_bits = 8;  // candidates with a larger penalty are skipped
};

struct ComplexityEstimate {
  int value_bits = 0;  // l(best_program) + penalty_bits
  Program best_program;
  double best_overlap = 1.0;  // in (0, 1]
  int penalty_bits = 0;
  Budget budget;
  bool exhausted = true;  // every accepted program within budget was evaluated
  // Set by estimate_dual_complexity when |AR> needed rescaling to unit norm.
  bool rescaled_input = false;
  double input_squared_norm = 1.0;
};

struct DualityReport {
  ComplexityEstimate k_unitary;
  ComplexityEstimate k_dual;
  int delta = 0;  // k_dual.value_bits - k_unitary.value_bits
  std::string normalization_note;
};

// ceil(-log2 overlap) with a rounding guard: overlap within 1e-12 of 1
// returns 0, and overlaps are snapped to the absolute 1e-12 grid before the
// ceiling so values at exact powers of 1/2 are not tipped over by noise.
// Throws ZeroOverlapError when overlap <= 0 or rounds to 0.
int penalty_bits(double overlap);

// Minimum of l(p) + penalty over programs whose output state has nonzero
// overlap |<z|x>|^2 with the normalized target x.
ComplexityEstimate estimate_state_complexity(const StateVector& target,
                                             const Budget& budget);

// Same for unitaries, with overlap |hs_inner(W, U)|^2 / 2^(2n).
ComplexityEstimate estimate_unitary_complexity(const SquareMatrix& u,
                                               const Budget& budget,
                                               const Tolerances& tol = {});

// State-complexity of dualize(u) on 2n qubits. When some weight is
// negative, |AR> is rescaled by 1/sqrt(squared_norm) first and the estimate
// records it (rescaled_input, input_squared_norm).
ComplexityEstimate estimate_dual_complexity(const SquareMatrix& u,
                                            const Budget& budget,
                                            const Tolerances& tol = {});

DualityReport compare_duality(const SquareMatrix& u, const Budget& unitary_budget,
                              const Budget& dual_budget, const Tolerances& tol = {});

}  // namespace qdual
