#pragma once

// External text interfaces: the matrix/state file format, complex literals,
// and the key=value / JSON serializations of the report types.
//
// File format: first line "dim <d>", then d rows of d (matrix) or 1 (state)
// whitespace-separated complex literals "a+bi" / "a-bi". The parser accepts
// scientific notation; the writer emits 17 significant digits so doubles
// round-trip exactly.

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "qdual/duality.hpp"
#include "qdual/estimator.hpp"
#include "qdual/linalg.hpp"

namespace qdual {

using json = nlohmann::ordered_json;

std::string format_real(double x);  // 17 significant digits
std::string format_complex(cplx z);
cplx parse_complex(std::string_view token);  // throws ParseError

void write_square_matrix(std::ostream& out, const SquareMatrix& m);
void write_state_vector(std::ostream& out, const StateVector& v);
SquareMatrix read_square_matrix(std::istream& in);
StateVector read_state_vector(std::istream& in);
SquareMatrix read_square_matrix_file(const std::string& path);
StateVector read_state_vector_file(const std::string& path);

// Dotted key=value lines for an arbitrary report object; every leaf of the
// JSON appears exactly once, so text and JSON outputs always agree.
std::string flatten_to_text(const json& report);

// Flat key=value lines (stable order); the JSON mirrors carry the same keys
// and values.
std::string to_text(const RoundtripReport& report);
json to_json(const RoundtripReport& report);
std::string to_text(const ComplexityEstimate& estimate);
json to_json(const ComplexityEstimate& estimate);
std::string to_text(const DualityReport& report);  // keys prefixed k_unitary. / k_dual.
json to_json(const DualityReport& report);

}  // namespace qdual
