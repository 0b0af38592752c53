#pragma once

#include <fstream>
#include <string>

#include "json.hpp"
#include "nashmix/game.hpp"

namespace nashmix {

// Game file format: {"R": [[...]], "C": [[...]]} row-major, optional "normalized": true.
inline Matrix matrix_from_json(const nlohmann::json& j, const char* name) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw input_error(std::string(name) + ": expected a non-empty array of rows");
  const std::size_t m = j.size();
  const std::size_t n = j[0].size();
  Matrix a(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw input_error(std::string(name) + ": ragged rows");
    for (std::size_t k = 0; k < n; ++k) {
      if (!j[i][k].is_number()) throw input_error(std::string(name) + ": non-numeric entry");
      a(i, k) = j[i][k].get<double>();
    }
  }
  return a;
}

inline nlohmann::json matrix_to_json(const Matrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(row);
  }
  return rows;
}

inline BimatrixGame game_from_json(const nlohmann::json& j) {
  if (!j.contains("R") || !j.contains("C")) throw input_error("game file needs \"R\" and \"C\"");
  Matrix R = matrix_from_json(j["R"], "R");
  Matrix C = matrix_from_json(j["C"], "C");
  if (j.value("normalized", false)) {
    if (R.rows() != C.rows() || R.cols() != C.cols()) throw input_error("R and C dimensions differ");
    if (!all_finite(R.data()) || !all_finite(C.data())) throw input_error("non-finite payoff entry");
    for (double v : R.data())
      if (v < -tol::tie || v > 1.0 + tol::tie) throw input_error("normalized game has entries outside [0,1]");
    for (double v : C.data())
      if (v < -tol::tie || v > 1.0 + tol::tie) throw input_error("normalized game has entries outside [0,1]");
    return BimatrixGame{R, C};
  }
  return normalize(R, C);
}

inline BimatrixGame load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open game file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw input_error("game file parse error: " + std::string(e.what()));
  }
  return game_from_json(j);
}

inline nlohmann::json game_to_json(const BimatrixGame& g) {
  nlohmann::json j;
  j["R"] = matrix_to_json(g.R);
  j["C"] = matrix_to_json(g.C);
  j["normalized"] = true;
  return j;
}

inline void save_game(const BimatrixGame& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write game file: " + path);
  out << game_to_json(g).dump(2) << "\n";
}

} // namespace nashmix
