#pragma once

// The fixed reference machine: self-delimiting bit programs that decode to
// circuits over {H, S, T, X, CNOT}, plus evaluators for decoded circuits.
//
// Token layout, most significant bit first:
//   3-bit opcode: 000=H 001=S 010=T 011=X 100=CNOT 101=HALT (110/111 invalid)
//   followed by qubit-index fields of w = ceil(log2 n) bits each (w = 0 when
//   n = 1): one field for H/S/T/X, two (control, target) for CNOT, and one
//   all-zero field for HALT. A program is accepted iff its HALT token ends
//   exactly at the final bit; invalid opcodes, out-of-range indices, equal
//   CNOT operands, nonzero HALT fields, truncated tokens and trailing bits
//   are all rejected. The accepted set is prefix-free.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdual/linalg.hpp"

namespace qdual {

enum class GateKind { H, S, T, X, CNOT };

struct Gate {
  GateKind kind = GateKind::H;
  int q0 = 0;  // target, or control for CNOT
  int q1 = 0;  // CNOT target
};

struct Circuit {
  int qubits = 1;
  std::vector<Gate> gates;
};

// An accepted bit string for the n-qubit machine.
struct Program {
  std::string bits;  // ASCII '0'/'1'
  int qubits = 1;

  int length() const { return static_cast<int>(bits.size()); }
};

int index_field_width(int qubits);  // ceil(log2 n), 0 when n = 1
int halt_token_bits(int qubits);    // 3 + index_field_width

// One-line machine definition, printed by reports so every complexity
// number is traceable to the machine it is relative to.
std::string machine_fingerprint(int qubits);
std::string machine_family_fingerprint();

// Parse a bit string for the n-qubit machine. Returns the decoded circuit,
// or nullopt with the rejection reason in *reject_reason (when given).
std::optional<Circuit> decode_program(std::string_view bits, int qubits,
                                      std::string* reject_reason = nullptr);

// Exact inverse of decode_program on accepted programs.
Program encode_circuit(const Circuit& circuit);

// "H(0) CNOT(0,1) HALT"; the empty circuit prints as "HALT".
std::string circuit_to_string(const Circuit& circuit);

// Apply the circuit to |0...0>.
StateVector run_state(const Circuit& circuit);

// Product of the embedded gate matrices, first gate applied first.
// Column 0 equals run_state bit for bit.
SquareMatrix run_unitary(const Circuit& circuit);

// Every accepted program with length <= max_bits, in order of increasing
// length and lexicographic bit order within a length. Exhaustive and
// duplicate-free.
void enumerate_programs(int qubits, int max_bits,
                        const std::function<void(const Program&, const Circuit&)>& visit);

std::vector<std::pair<Program, Circuit>> collect_programs(int qubits, int max_bits);

}  // namespace qdual
