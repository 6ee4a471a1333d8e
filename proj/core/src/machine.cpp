#include "qdual/machine.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace qdual {

namespace {

constexpr int kOpcodeBits = 3;
// Opcode values in ascending numeric order; 110 and 111 are invalid.
constexpr int kOpH = 0, kOpS = 1, kOpT = 2, kOpX = 3, kOpCnot = 4, kOpHalt = 5;

void check_qubits(int qubits) {
  if (qubits < 1) throw DimensionError("machine needs at least one qubit");
}

void append_bits(std::string& out, int value, int width) {
  for (int b = width - 1; b >= 0; --b) out.push_back(((value >> b) & 1) ? '1' : '0');
}

}  // namespace

int index_field_width(int qubits) {
  check_qubits(qubits);
  return std::bit_width(static_cast<unsigned>(qubits - 1));
}

int halt_token_bits(int qubits) { return kOpcodeBits + index_field_width(qubits); }

std::string machine_fingerprint(int qubits) {
  std::ostringstream out;
  out << machine_family_fingerprint() << " qubits=" << qubits
      << " index_field_bits=" << index_field_width(qubits);
  return out.str();
}

std::string machine_family_fingerprint() {
  return "opcodes{000:H,001:S,010:T,011:X,100:CNOT,101:HALT}"
         " index_fields=ceil(log2 n) halt_field=0 prefix_free=halt-terminated";
}

std::optional<Circuit> decode_program(std::string_view bits, int qubits,
                                      std::string* reject_reason) {
  check_qubits(qubits);
  const auto reject = [&](const char* why) -> std::optional<Circuit> {
    if (reject_reason) *reject_reason = why;
    return std::nullopt;
  };
  for (const char c : bits)
    if (c != '0' && c != '1') return reject("non-binary character");

  const int w = index_field_width(qubits);
  const std::size_t len = bits.size();
  std::size_t pos = 0;
  const auto read_field = [&](int width) {
    int v = 0;
    for (int b = 0; b < width; ++b) v = (v << 1) | (bits[pos++] == '1');
    return v;
  };

  Circuit circuit{qubits, {}};
  while (true) {
    if (pos + kOpcodeBits > len) return reject("truncated opcode");
    const int op = read_field(kOpcodeBits);
    switch (op) {
      case kOpH:
      case kOpS:
      case kOpT:
      case kOpX: {
        if (pos + w > len) return reject("truncated index field");
        const int q = read_field(w);
        if (q >= qubits) return reject("qubit index out of range");
        circuit.gates.push_back({static_cast<GateKind>(op), q, 0});
        break;
      }
      case kOpCnot: {
        if (pos + 2 * w > len) return reject("truncated index field");
        const int c = read_field(w);
        const int t = read_field(w);
        if (c >= qubits || t >= qubits) return reject("qubit index out of range");
        if (c == t) return reject("CNOT control equals target");
        circuit.gates.push_back({GateKind::CNOT, c, t});
        break;
      }
      case kOpHalt: {
        if (pos + w > len) return reject("truncated HALT field");
        if (read_field(w) != 0) return reject("nonzero HALT field");
        if (pos != len) return reject("trailing bits after HALT");
        return circuit;
      }
      default:
        return reject("invalid opcode");
    }
  }
}

Program encode_circuit(const Circuit& circuit) {
  check_qubits(circuit.qubits);
  const int w = index_field_width(circuit.qubits);
  std::string bits;
  for (const Gate& g : circuit.gates) {
    if (g.q0 < 0 || g.q0 >= circuit.qubits ||
        (g.kind == GateKind::CNOT && (g.q1 < 0 || g.q1 >= circuit.qubits)))
      throw DimensionError("gate index out of range");
    append_bits(bits, static_cast<int>(g.kind), kOpcodeBits);
    append_bits(bits, g.q0, w);
    if (g.kind == GateKind::CNOT) {
      if (g.q0 == g.q1) throw Error("CNOT control equals target");
      append_bits(bits, g.q1, w);
    }
  }
  append_bits(bits, kOpHalt, kOpcodeBits);
  append_bits(bits, 0, w);
  return Program{std::move(bits), circuit.qubits};
}

std::string circuit_to_string(const Circuit& circuit) {
  std::ostringstream out;
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::H: out << "H(" << g.q0 << ") "; break;
      case GateKind::S: out << "S(" << g.q0 << ") "; break;
      case GateKind::T: out << "T(" << g.q0 << ") "; break;
      case GateKind::X: out << "X(" << g.q0 << ") "; break;
      case GateKind::CNOT: out << "CNOT(" << g.q0 << "," << g.q1 << ") "; break;
    }
  }
  out << "HALT";
  return out.str();
}

namespace {

// Apply a 2x2 gate to qubit q (qubit 0 = most significant index bit).
void apply_single(StateVector& v, int q, cplx g00, cplx g01, cplx g10, cplx g11) {
  const int n = v.qubits();
  const std::size_t stride = std::size_t{1} << (n - 1 - q);
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i & stride) continue;
    const cplx a0 = v[i], a1 = v[i | stride];
    v[i] = g00 * a0 + g01 * a1;
    v[i | stride] = g10 * a0 + g11 * a1;
  }
}

void apply_gate(StateVector& v, const Gate& g) {
  static const double r = 1.0 / std::numbers::sqrt2;
  static const cplx t8 = std::exp(cplx(0.0, std::numbers::pi / 4.0));
  switch (g.kind) {
    case GateKind::H: apply_single(v, g.q0, r, r, r, -r); break;
    case GateKind::S: apply_single(v, g.q0, 1.0, 0.0, 0.0, cplx(0.0, 1.0)); break;
    case GateKind::T: apply_single(v, g.q0, 1.0, 0.0, 0.0, t8); break;
    case GateKind::X: apply_single(v, g.q0, 0.0, 1.0, 1.0, 0.0); break;
    case GateKind::CNOT: {
      const int n = v.qubits();
      const std::size_t cbit = std::size_t{1} << (n - 1 - g.q0);
      const std::size_t tbit = std::size_t{1} << (n - 1 - g.q1);
      for (std::size_t i = 0; i < v.dim(); ++i)
        if ((i & cbit) && !(i & tbit)) std::swap(v[i], v[i | tbit]);
      break;
    }
  }
}

}  // namespace

StateVector run_state(const Circuit& circuit) {
  StateVector v = StateVector::basis_state(circuit.qubits, 0);
  for (const Gate& g : circuit.gates) apply_gate(v, g);
  return v;
}

SquareMatrix run_unitary(const Circuit& circuit) {
  const std::size_t d = std::size_t{1} << circuit.qubits;
  SquareMatrix u(d);
  for (std::size_t col = 0; col < d; ++col) {
    StateVector v = StateVector::basis_state(circuit.qubits, col);
    for (const Gate& g : circuit.gates) apply_gate(v, g);
    for (std::size_t row = 0; row < d; ++row) u(row, col) = v[row];
  }
  return u;
}

namespace {

// Gate tokens in ascending bit-string order. The token set is prefix-free,
// so appending tokens in this order enumerates equal-length programs in
// lexicographic order.
struct Token {
  Gate gate;
  std::string bits;
};

std::vector<Token> gate_tokens(int qubits) {
  const int w = index_field_width(qubits);
  std::vector<Token> tokens;
  for (const GateKind kind : {GateKind::H, GateKind::S, GateKind::T, GateKind::X})
    for (int q = 0; q < qubits; ++q) {
      Token t{{kind, q, 0}, {}};
      append_bits(t.bits, static_cast<int>(kind), kOpcodeBits);
      append_bits(t.bits, q, w);
      tokens.push_back(std::move(t));
    }
  for (int c = 0; c < qubits; ++c)
    for (int t = 0; t < qubits; ++t) {
      if (c == t) continue;
      Token tok{{GateKind::CNOT, c, t}, {}};
      append_bits(tok.bits, kOpCnot, kOpcodeBits);
      append_bits(tok.bits, c, w);
      append_bits(tok.bits, t, w);
      tokens.push_back(std::move(tok));
    }
  return tokens;
}

struct Enumerator {
  int qubits;
  std::vector<Token> tokens;
  std::string halt_bits;
  const std::function<void(const Program&, const Circuit&)>* visit;
  std::string bits;
  Circuit circuit;

  // Emit every gate-token tiling of exactly `remaining` bits, in order.
  void fill(int remaining) {
    if (remaining == 0) {
      const std::size_t mark = bits.size();
      bits += halt_bits;
      (*visit)(Program{bits, qubits}, circuit);
      bits.resize(mark);
      return;
    }
    for (const Token& t : tokens) {
      const int len = static_cast<int>(t.bits.size());
      if (len > remaining) continue;
      const std::size_t mark = bits.size();
      bits += t.bits;
      circuit.gates.push_back(t.gate);
      fill(remaining - len);
      circuit.gates.pop_back();
      bits.resize(mark);
    }
  }
};

}  // namespace

void enumerate_programs(int qubits, int max_bits,
                        const std::function<void(const Program&, const Circuit&)>& visit) {
  check_qubits(qubits);
  const int halt = halt_token_bits(qubits);
  if (max_bits < halt) return;

  Enumerator e{qubits, gate_tokens(qubits), {}, &visit, {}, Circuit{qubits, {}}};
  append_bits(e.halt_bits, kOpHalt, kOpcodeBits);
  append_bits(e.halt_bits, 0, index_field_width(qubits));
  for (int length = halt; length <= max_bits; ++length) e.fill(length - halt);
}

std::vector<std::pair<Program, Circuit>> collect_programs(int qubits, int max_bits) {
  std::vector<std::pair<Program, Circuit>> out;
  enumerate_programs(qubits, max_bits,
                     [&](const Program& p, const Circuit& c) { out.emplace_back(p, c); });
  return out;
}

}  // namespace qdual
