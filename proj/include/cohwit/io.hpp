#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "cohwit/state.hpp"
#include "cohwit/witness.hpp"

namespace cohwit {

// Malformed input: unreadable file, bad JSON, wrong shape or types.
// Distinct from the validation errors raised once the numbers are in.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Shared complex-matrix document {"dim": d, "matrix": [[[re,im],...],...]},
// row-major. Enforces the shape, then leaves semantic checks to the caller.
Matrix parse_complex_matrix(const nlohmann::json& doc);
nlohmann::ordered_json complex_matrix_json(const Matrix& m);

DensityMatrix parse_state(const nlohmann::json& doc);
DensityMatrix load_state(const std::string& path);
nlohmann::ordered_json state_json(const DensityMatrix& state);

// A witness file carries either the dense matrix or the orientation list
// [{"j","k","theta"},...]. When both are present the matrix wins (our own
// witness files carry both; the matrix is the authoritative form). In
// orientation form, pairs not listed default to angle 0 and produce a
// warning; duplicate pairs are an error.
struct ParsedWitness {
  std::variant<Witness, NormalizedWitness> value;
  std::vector<std::string> warnings;

  int dim() const;
  // The plain-witness view, whichever form was read.
  Witness witness() const;
};

ParsedWitness parse_witness(const nlohmann::json& doc);
ParsedWitness load_witness(const std::string& path);
nlohmann::ordered_json orientation_entries(const NormalizedWitness& w);

// Shortest text that round-trips the double exactly (17 significant digits).
std::string format_double(double x);

}  // namespace cohwit
