#include "cohwit/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>

namespace cohwit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

int parse_dim(const json& doc) {
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  if (!doc.contains("dim")) throw ParseError("missing \"dim\"");
  const json& dim = doc.at("dim");
  if (!dim.is_number_integer()) throw ParseError("\"dim\" must be an integer");
  int d = dim.get<int>();
  if (d < 2) throw ParseError("\"dim\" must be at least 2");
  return d;
}

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace

Matrix parse_complex_matrix(const nlohmann::json& doc) {
  int d = parse_dim(doc);
  if (!doc.contains("matrix")) throw ParseError("missing \"matrix\"");
  const json& rows = doc.at("matrix");
  if (!rows.is_array() || static_cast<int>(rows.size()) != d)
    throw ParseError("\"matrix\" must be an array of dim rows");

  Matrix m(d, d);
  for (int r = 0; r < d; ++r) {
    const json& row = rows.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      throw ParseError("matrix row " + std::to_string(r) + " must have dim entries");
    for (int c = 0; c < d; ++c) {
      const json& entry = row.at(c);
      if (!entry.is_array() || entry.size() != 2 || !entry.at(0).is_number() ||
          !entry.at(1).is_number())
        throw ParseError("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                         ") must be [re, im]");
      m(r, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

nlohmann::ordered_json complex_matrix_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < m.cols(); ++c)
      row.push_back(ordered_json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

DensityMatrix parse_state(const nlohmann::json& doc) {
  return DensityMatrix::validated(parse_complex_matrix(doc));
}

DensityMatrix load_state(const std::string& path) { return parse_state(load_document(path)); }

nlohmann::ordered_json state_json(const DensityMatrix& state) {
  ordered_json doc;
  doc["dim"] = state.dim();
  doc["matrix"] = complex_matrix_json(state.matrix());
  return doc;
}

int ParsedWitness::dim() const {
  return std::holds_alternative<Witness>(value) ? std::get<Witness>(value).dim
                                                : std::get<NormalizedWitness>(value).dim;
}

Witness ParsedWitness::witness() const {
  return std::holds_alternative<Witness>(value) ? std::get<Witness>(value)
                                                : std::get<NormalizedWitness>(value).witness();
}

ParsedWitness parse_witness(const nlohmann::json& doc) {
  int d = parse_dim(doc);

  if (doc.contains("matrix")) return {witness_from_matrix(parse_complex_matrix(doc)), {}};

  if (!doc.contains("orientations"))
    throw ParseError("witness document needs \"matrix\" or \"orientations\"");
  const json& entries = doc.at("orientations");
  if (!entries.is_array()) throw ParseError("\"orientations\" must be an array");

  NormalizedWitness w;
  w.dim = d;
  w.orientations.assign(pair_count(d), 0.0);
  std::set<int> given;
  for (const json& entry : entries) {
    if (!entry.is_object() || !entry.contains("j") || !entry.contains("k") ||
        !entry.contains("theta"))
      throw ParseError("each orientation entry must be {\"j\", \"k\", \"theta\"}");
    if (!entry.at("j").is_number_integer() || !entry.at("k").is_number_integer() ||
        !entry.at("theta").is_number())
      throw ParseError("orientation entry fields have wrong types");
    int j = entry.at("j").get<int>();
    int k = entry.at("k").get<int>();
    if (j < 0 || k <= j || k >= d)
      throw ParseError("orientation pair (" + std::to_string(j) + "," + std::to_string(k) +
                       ") must satisfy 0 <= j < k < dim");
    int p = pair_index(d, j, k);
    if (!given.insert(p).second)
      throw ParseError("orientation pair (" + std::to_string(j) + "," + std::to_string(k) +
                       ") given twice");
    w.orientations[p] = wrap_angle(entry.at("theta").get<double>());
  }

  ParsedWitness out{std::move(w), {}};
  if (static_cast<int>(given.size()) < pair_count(d))
    for (auto [j, k] : index_pairs(d))
      if (!given.count(pair_index(d, j, k)))
        out.warnings.push_back("orientation for pair (" + std::to_string(j) + "," +
                               std::to_string(k) + ") missing; defaulting to 0");
  return out;
}

ParsedWitness load_witness(const std::string& path) { return parse_witness(load_document(path)); }

nlohmann::ordered_json orientation_entries(const NormalizedWitness& w) {
  ordered_json entries = ordered_json::array();
  for (auto [j, k] : index_pairs(w.dim)) {
    ordered_json entry;
    entry["j"] = j;
    entry["k"] = k;
    entry["theta"] = w.orientation(j, k);
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

}  // namespace cohwit
