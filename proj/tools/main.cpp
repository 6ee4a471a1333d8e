// Command-line front end: parse matrices/states, run the spectral-duality
// pipeline and the description-cost estimators, emit deterministic reports.
//
// Exit codes: 0 success, 2 input/parse error, 3 invariant violation
// (non-unitary input, convergence failure), 4 estimation infeasible.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qdual/duality.hpp"
#include "qdual/eigen.hpp"
#include "qdual/errors.hpp"
#include "qdual/estimator.hpp"
#include "qdual/io.hpp"
#include "qdual/linalg.hpp"
#include "qdual/machine.hpp"
#include "qdual/random.hpp"

namespace q = qdual;
using q::json;

namespace {

constexpr const char* kUnitaryOverlapNote =
    "unitary overlap = |tr(W^dagger U)|^2 / 2^(2n), both operators scaled to unit "
    "Hilbert-Schmidt norm";
constexpr const char* kStateOverlapNote = "state overlap = |<z|x>|^2 on unit vectors";

void emit(const json& report, const std::string& format) {
  if (format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << q::flatten_to_text(report);
}

q::SquareMatrix builtin_gate(const std::string& name) {
  q::SquareMatrix m(2);
  if (name == "I") return q::SquareMatrix::identity(2);
  if (name == "X") {
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
  }
  if (name == "Z") {
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
  }
  if (name == "S") {
    m(0, 0) = 1.0;
    m(1, 1) = q::cplx(0.0, 1.0);
    return m;
  }
  if (name == "T") {
    m(0, 0) = 1.0;
    m(1, 1) = std::exp(q::cplx(0.0, std::numbers::pi / 4.0));
    return m;
  }
  if (name == "H") {
    const double r = 1.0 / std::numbers::sqrt2;
    m(0, 0) = r;
    m(0, 1) = r;
    m(1, 0) = r;
    m(1, 1) = -r;
    return m;
  }
  throw q::ParseError("unknown gate name: " + name);
}

void run_dualize(const std::string& path, const q::Tolerances& tol, const std::string& format) {
  const q::SquareMatrix u = q::read_square_matrix_file(path);
  const q::PhaseSpectrum spectrum = q::unitary_eigendecomposition(u, tol);
  const q::RhoOperator rho = q::build_rho(spectrum);
  const q::PurifiedState psi = q::purify(rho);
  const q::RoundtripReport check = q::verify_roundtrip(u, rho);

  json j;
  j["qubits"] = u.qubits();
  j["phases"] = spectrum.phases;
  j["alpha"] = q::compute_alpha(spectrum).alpha;
  j["weights"] = rho.weights;
  json amps = json::array();
  for (std::size_t i = 0; i < psi.vector.dim(); ++i)
    amps.push_back(q::format_complex(psi.vector[i]));
  j["ar_amplitudes"] = amps;
  j["squared_norm"] = psi.squared_norm;
  j["trace_error"] = check.trace_error;
  j["hermiticity_error"] = check.hermiticity_error;
  j["partial_trace_error"] = check.partial_trace_error;
  j["reconstruction_fidelity"] = check.reconstruction_fidelity;
  emit(j, format);
}

void run_reconstruct(const std::string& path, const q::Tolerances& tol,
                     const std::string& format) {
  const q::SquareMatrix u = q::read_square_matrix_file(path);
  const q::PhaseSpectrum spectrum = q::unitary_eigendecomposition(u, tol);
  const q::RhoOperator rho = q::build_rho(spectrum);
  const q::SquareMatrix w = q::reconstruct_unitary(rho);

  json j;
  j["qubits"] = u.qubits();
  j["alpha"] = q::compute_alpha(spectrum).alpha;
  j["reconstruction_fidelity"] =
      std::abs(q::hs_inner(u, w)) / static_cast<double>(u.dim());
  json rows = json::array();
  for (std::size_t r = 0; r < w.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < w.dim(); ++c) row.push_back(q::format_complex(w(r, c)));
    rows.push_back(row);
  }
  j["matrix"] = rows;
  emit(j, format);
}

void run_estimate_state(const std::string& path, const q::Budget& budget,
                        const std::string& format) {
  const q::StateVector target = q::read_state_vector_file(path);
  json j = q::to_json(q::estimate_state_complexity(target, budget));
  j["overlap_convention"] = kStateOverlapNote;
  emit(j, format);
}

void run_estimate_unitary(const std::string& path, const q::Budget& budget,
                          const q::Tolerances& tol, const std::string& format) {
  const q::SquareMatrix u = q::read_square_matrix_file(path);
  json j = q::to_json(q::estimate_unitary_complexity(u, budget, tol));
  j["overlap_convention"] = kUnitaryOverlapNote;
  emit(j, format);
}

void run_compare(const std::string& path, const q::Budget& unitary_budget,
                 const q::Budget& dual_budget, const q::Tolerances& tol,
                 const std::string& format) {
  const q::SquareMatrix u = q::read_square_matrix_file(path);
  json j = q::to_json(q::compare_duality(u, unitary_budget, dual_budget, tol));
  j["overlap_convention"] = kUnitaryOverlapNote;
  emit(j, format);
}

struct SuiteRow {
  std::string name;
  int qubits = 1;
  q::DualityReport report;
};

void run_suite(const std::vector<std::string>& gates, int random_count, int random_qubits,
               std::uint64_t seed, const q::Budget& unitary_budget, const q::Budget& dual_budget,
               const q::Tolerances& tol, const std::string& format) {
  std::vector<SuiteRow> rows;
  for (const std::string& name : gates)
    rows.push_back({name, 1, q::compare_duality(builtin_gate(name), unitary_budget,
                                                dual_budget, tol)});
  for (int k = 0; k < random_count; ++k) {
    const q::SquareMatrix u = q::random_unitary(random_qubits, seed + static_cast<std::uint64_t>(k));
    rows.push_back({"random[" + std::to_string(k) + "]", random_qubits,
                    q::compare_duality(u, unitary_budget, dual_budget, tol)});
  }

  bool have_delta = false;
  int delta_min = 0, delta_max = 0;
  for (const SuiteRow& r : rows) {
    if (!have_delta) {
      delta_min = delta_max = r.report.delta;
      have_delta = true;
    } else {
      delta_min = std::min(delta_min, r.report.delta);
      delta_max = std::max(delta_max, r.report.delta);
    }
  }

  if (format == "json") {
    json j;
    j["machine"] = q::machine_family_fingerprint();
    json budgets;
    budgets["max_program_bits"] = unitary_budget.max_program_bits;
    budgets["dual_max_program_bits"] = dual_budget.max_program_bits;
    budgets["max_penalty_bits"] = unitary_budget.max_penalty_bits;
    j["budgets"] = budgets;
    json jrows = json::array();
    for (const SuiteRow& r : rows) {
      json row;
      row["name"] = r.name;
      row["qubits"] = r.qubits;
      row["k_unitary_bits"] = r.report.k_unitary.value_bits;
      row["k_dual_bits"] = r.report.k_dual.value_bits;
      row["delta"] = r.report.delta;
      row["squared_norm"] = r.report.k_dual.input_squared_norm;
      row["exhausted_unitary"] = r.report.k_unitary.exhausted;
      row["exhausted_dual"] = r.report.k_dual.exhausted;
      jrows.push_back(row);
    }
    j["rows"] = jrows;
    json summary;
    if (have_delta) {
      summary["delta_min"] = delta_min;
      summary["delta_max"] = delta_max;
    } else {
      summary["delta_min"] = nullptr;
      summary["delta_max"] = nullptr;
    }
    j["summary"] = summary;
    std::cout << j.dump(2) << "\n";
    return;
  }

  std::cout << "machine=" << q::machine_family_fingerprint() << "\n";
  std::cout << "budget.max_program_bits=" << unitary_budget.max_program_bits << "\n";
  std::cout << "budget.dual_max_program_bits=" << dual_budget.max_program_bits << "\n";
  std::cout << "budget.max_penalty_bits=" << unitary_budget.max_penalty_bits << "\n";
  std::cout << "name qubits k_unitary_bits k_dual_bits delta squared_norm"
               " exhausted_unitary exhausted_dual\n";
  for (const SuiteRow& r : rows) {
    std::cout << r.name << ' ' << r.qubits << ' ' << r.report.k_unitary.value_bits << ' '
              << r.report.k_dual.value_bits << ' ' << r.report.delta << ' '
              << q::format_real(r.report.k_dual.input_squared_norm) << ' '
              << (r.report.k_unitary.exhausted ? "true" : "false") << ' '
              << (r.report.k_dual.exhausted ? "true" : "false") << "\n";
  }
  if (have_delta) {
    std::cout << "summary_delta_min=" << delta_min << "\n";
    std::cout << "summary_delta_max=" << delta_max << "\n";
  } else {
    std::cout << "summary_delta_min=n/a\n";
    std::cout << "summary_delta_max=n/a\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"spectral duality of unitaries and bipartite states, with "
               "machine-relative description-cost estimates"};
  app.require_subcommand(1);

  std::string format = "text";
  double unitarity_tol = 1e-10;
  int budget_bits = 12;
  int budget_dual_bits = 15;
  int penalty_cap = 8;
  std::string input_path;
  std::vector<std::string> gates;
  int random_count = 0;
  int random_qubits = 1;
  std::uint64_t seed = 0;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  const auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", unitarity_tol, "unitarity tolerance for input checking")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  const auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget-bits", budget_bits, "max program length in bits")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--penalty-cap", penalty_cap, "max approximation penalty in bits")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  };
  const auto tolerances = [&] {
    q::Tolerances tol;
    tol.unitarity_tol = unitarity_tol;
    return tol;
  };

  CLI::App* dualize = app.add_subcommand("dualize", "map a unitary to its bipartite state");
  dualize->add_option("matrix", input_path, "unitary matrix file")->required();
  add_tol(dualize);
  add_format(dualize);
  dualize->callback([&] { run_dualize(input_path, tolerances(), format); });

  CLI::App* reconstruct =
      app.add_subcommand("reconstruct", "rebuild the unitary from its duality operator");
  reconstruct->add_option("matrix", input_path, "unitary matrix file")->required();
  add_tol(reconstruct);
  add_format(reconstruct);
  reconstruct->callback([&] { run_reconstruct(input_path, tolerances(), format); });

  CLI::App* est_state =
      app.add_subcommand("estimate-state", "description cost of a state vector");
  est_state->add_option("state", input_path, "state vector file")->required();
  add_budget(est_state);
  add_format(est_state);
  est_state->callback([&] {
    run_estimate_state(input_path, q::Budget{budget_bits, penalty_cap}, format);
  });

  CLI::App* est_unitary =
      app.add_subcommand("estimate-unitary", "description cost of a unitary");
  est_unitary->add_option("matrix", input_path, "unitary matrix file")->required();
  add_budget(est_unitary);
  add_tol(est_unitary);
  add_format(est_unitary);
  est_unitary->callback([&] {
    run_estimate_unitary(input_path, q::Budget{budget_bits, penalty_cap}, tolerances(), format);
  });

  CLI::App* compare =
      app.add_subcommand("compare", "unitary cost vs dual-state cost for one unitary");
  compare->add_option("matrix", input_path, "unitary matrix file")->required();
  add_budget(compare);
  compare->add_option("--budget-dual-bits", budget_dual_bits,
                      "max program length for the dual state")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_tol(compare);
  add_format(compare);
  compare->callback([&] {
    run_compare(input_path, q::Budget{budget_bits, penalty_cap},
                q::Budget{budget_dual_bits, penalty_cap}, tolerances(), format);
  });

  CLI::App* suite = app.add_subcommand("suite", "comparison table over built-in gates");
  suite->add_option("gates", gates, "gate names from {I, X, Z, S, T, H}");
  suite->add_option("--random", random_count, "append this many seeded random unitaries")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  suite->add_option("--qubits", random_qubits, "qubit count for random unitaries")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  suite->add_option("--seed", seed, "seed for random unitaries")->capture_default_str();
  add_budget(suite);
  suite->add_option("--budget-dual-bits", budget_dual_bits,
                    "max program length for the dual state")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_tol(suite);
  add_format(suite);
  suite->callback([&] {
    run_suite(gates, random_count, random_qubits, seed, q::Budget{budget_bits, penalty_cap},
              q::Budget{budget_dual_bits, penalty_cap}, tolerances(), format);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const q::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const q::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const q::NoCandidateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const q::Error& e) {
    // NotUnitary / NotNormalized / Convergence / ZeroOverlap: invariant failed.
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
