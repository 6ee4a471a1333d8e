#include "qdual/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "qdual/machine.hpp"

namespace qdual {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(cplx z) {
  const double re = z.real();
  double im = z.imag();
  if (im == 0.0) im = 0.0;  // normalize -0
  std::string out = format_real(re);
  out += im < 0.0 ? '-' : '+';
  out += format_real(std::abs(im));
  out += 'i';
  return out;
}

namespace {

double parse_double(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError("bad numeric literal in '" + std::string(whole) + "'");
  return value;
}

}  // namespace

cplx parse_complex(std::string_view token) {
  if (token.empty()) throw ParseError("empty complex literal");
  if (token.back() != 'i') return {parse_double(token, token), 0.0};
  const std::string_view body = token.substr(0, token.size() - 1);
  if (body.empty()) throw ParseError("bad complex literal 'i'");
  // Split at the last sign that starts the imaginary part (not a leading
  // sign, not an exponent sign).
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_double(body, token)};
  return {parse_double(body.substr(0, split), token), parse_double(body.substr(split), token)};
}

void write_square_matrix(std::ostream& out, const SquareMatrix& m) {
  out << "dim " << m.dim() << "\n";
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c) out << ' ';
      out << format_complex(m(r, c));
    }
    out << "\n";
  }
}

void write_state_vector(std::ostream& out, const StateVector& v) {
  out << "dim " << v.dim() << "\n";
  for (std::size_t i = 0; i < v.dim(); ++i) out << format_complex(v[i]) << "\n";
}

namespace {

std::size_t read_dim_header(std::istream& in) {
  std::string tag;
  if (!(in >> tag) || tag != "dim") throw ParseError("expected 'dim <d>' header");
  long long d = 0;
  if (!(in >> d) || d <= 0) throw ParseError("bad dimension in header");
  return static_cast<std::size_t>(d);
}

std::string next_token(std::istream& in) {
  std::string t;
  if (!(in >> t)) throw ParseError("unexpected end of input");
  return t;
}

void expect_end(std::istream& in) {
  std::string t;
  if (in >> t) throw ParseError("trailing data after entries: '" + t + "'");
}

}  // namespace

SquareMatrix read_square_matrix(std::istream& in) {
  const std::size_t d = read_dim_header(in);
  SquareMatrix m(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = parse_complex(next_token(in));
  expect_end(in);
  return m;
}

StateVector read_state_vector(std::istream& in) {
  const std::size_t d = read_dim_header(in);
  StateVector v(qubits_for_dim(d));
  for (std::size_t i = 0; i < d; ++i) v[i] = parse_complex(next_token(in));
  expect_end(in);
  return v;
}

namespace {

std::ifstream open_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open file: " + path);
  return f;
}

}  // namespace

SquareMatrix read_square_matrix_file(const std::string& path) {
  std::ifstream f = open_file(path);
  return read_square_matrix(f);
}

StateVector read_state_vector_file(const std::string& path) {
  std::ifstream f = open_file(path);
  return read_state_vector(f);
}

namespace {

void flatten(const json& node, const std::string& prefix, std::string& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (node.is_array()) {
    std::size_t i = 0;
    for (const auto& value : node) flatten(value, prefix + "." + std::to_string(i++), out);
  } else if (node.is_string()) {
    out += prefix;
    out += '=';
    out += node.get<std::string>();
    out += '\n';
  } else {
    out += prefix;
    out += '=';
    out += node.dump();
    out += '\n';
  }
}

}  // namespace

std::string flatten_to_text(const json& report) {
  std::string out;
  flatten(report, "", out);
  return out;
}

json to_json(const RoundtripReport& report) {
  json j;
  j["trace_error"] = report.trace_error;
  j["hermiticity_error"] = report.hermiticity_error;
  j["partial_trace_error"] = report.partial_trace_error;
  j["reconstruction_fidelity"] = report.reconstruction_fidelity;
  j["squared_norm"] = report.squared_norm;
  return j;
}

std::string to_text(const RoundtripReport& report) { return flatten_to_text(to_json(report)); }

json to_json(const ComplexityEstimate& estimate) {
  const Program& p = estimate.best_program;
  const auto circuit = decode_program(p.bits, p.qubits);
  json j;
  j["machine"] = machine_fingerprint(p.qubits);
  j["value_bits"] = estimate.value_bits;
  j["penalty_bits"] = estimate.penalty_bits;
  j["best_overlap"] = estimate.best_overlap;
  json bp;
  bp["bits"] = p.bits;
  bp["length"] = p.length();
  bp["circuit"] = circuit ? circuit_to_string(*circuit) : "<undecodable>";
  j["best_program"] = bp;
  json b;
  b["max_program_bits"] = estimate.budget.max_program_bits;
  b["max_penalty_bits"] = estimate.budget.max_penalty_bits;
  j["budget"] = b;
  j["exhausted"] = estimate.exhausted;
  j["rescaled_input"] = estimate.rescaled_input;
  j["input_squared_norm"] = estimate.input_squared_norm;
  return j;
}

std::string to_text(const ComplexityEstimate& estimate) {
  return flatten_to_text(to_json(estimate));
}

json to_json(const DualityReport& report) {
  json j;
  j["k_unitary"] = to_json(report.k_unitary);
  j["k_dual"] = to_json(report.k_dual);
  j["delta"] = report.delta;
  j["normalization_note"] = report.normalization_note;
  return j;
}

std::string to_text(const DualityReport& report) { return flatten_to_text(to_json(report)); }

}  // namespace qdual
