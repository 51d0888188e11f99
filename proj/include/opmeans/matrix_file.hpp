#pragma once

// Matrix files: a UTF-8 JSON object {"dim": n, "data": [[...], ...]} (row-major).

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "opmeans/errors.hpp"
#include "opmeans/matrix.hpp"

namespace opmeans {

// Parses and validates: square, finite, symmetric within 1e-12 relative. Returns the symmetric part.
inline Matrix parse_matrix_json(const std::string& text, const std::string& source = "<string>") {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(source + ": malformed JSON: " + e.what());
  }
  if (!doc.is_object()) throw InputError(source + ": expected an object with \"dim\" and \"data\"");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw InputError(source + ": missing integer field \"dim\"");
  if (!doc.contains("data") || !doc["data"].is_array())
    throw InputError(source + ": missing array field \"data\"");
  const auto dim = doc["dim"].get<long long>();
  const auto& rows = doc["data"];
  if (dim < 1) throw InputError(source + ": \"dim\" must be positive");
  if (static_cast<long long>(rows.size()) != dim)
    throw InputError(source + ": \"data\" has " + std::to_string(rows.size()) + " rows, expected " +
                     std::to_string(dim));
  const auto n = static_cast<std::size_t>(dim);
  Matrix X(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != n)
      throw InputError(source + ": row " + std::to_string(i) + " must have " + std::to_string(n) +
                       " entries");
    for (std::size_t j = 0; j < n; ++j) {
      if (!row[j].is_number())
        throw InputError(source + ": entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not a number");
      X(i, j) = row[j].get<double>();
      if (!std::isfinite(X(i, j)))
        throw InputError(source + ": entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not finite");
    }
  }
  try {
    return symmetrize_checked(X);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

inline Matrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open matrix file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_json(buf.str(), path);
}

inline std::string matrix_to_json(const Matrix& X) {
  nlohmann::json doc;
  doc["dim"] = X.rows();
  doc["data"] = nlohmann::json::array();
  for (std::size_t i = 0; i < X.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < X.cols(); ++j) row.push_back(X(i, j));
    doc["data"].push_back(std::move(row));
  }
  return doc.dump();
}

}  // namespace opmeans
