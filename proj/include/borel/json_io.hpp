#ifndef BOREL_JSON_IO_HPP
#define BOREL_JSON_IO_HPP

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "borel/liestruct.hpp"
#include "borel/matrix.hpp"
#include "borel/orbits.hpp"

namespace borel::io {

using nlohmann::json;

/// {"rows": r, "cols": c, "entries": [["p/q", ...], ...]}
inline json matrix_to_json(const Matrix<Rational>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline Matrix<Rational> matrix_from_json(const json& j) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw std::invalid_argument("matrix_from_json: need rows, cols, entries");
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const json& e = j.at("entries");
  if (static_cast<int>(e.size()) != rows)
    throw std::invalid_argument("matrix_from_json: row count mismatch");
  Matrix<Rational> m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(e[i].size()) != cols)
      throw std::invalid_argument("matrix_from_json: column count mismatch");
    for (int jj = 0; jj < cols; ++jj)
      m(i, jj) = Rational::parse(e[i][jj].get<std::string>());
  }
  return m;
}

inline Matrix<Rational> read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  json j;
  in >> j;
  return matrix_from_json(j);
}

inline json index_pairs(const std::vector<lie::IJ>& slots) {
  json out = json::array();
  for (auto [i, j] : slots) out.push_back(json::array({i + 1, j + 1}));
  return out;
}

/// Full decomposition dump with 1-based index pairs.
inline json decomposition_to_json(const lie::Decomposition& dec) {
  json layers = json::array();
  for (int r = 1; r <= dec.R; ++r) {
    layers.push_back(json{{"r", r},
                          {"d", dec.d[r - 1]},
                          {"z", json::array({dec.z[r - 1].first + 1, dec.z[r - 1].second + 1})},
                          {"m", index_pairs(dec.m[r - 1])},
                          {"v_plus", index_pairs(dec.vp_r[r - 1])},
                          {"v_minus", index_pairs(dec.vm_r[r - 1])}});
  }
  json beta = json::array();
  for (int r = 1; r <= dec.R; ++r)
    beta.push_back(json{{"r", r}, {"plus", r}, {"minus", dec.n - r + 1}});
  return json{{"n", dec.n},
              {"R", dec.R},
              {"d", dec.d},
              {"dims",
               json{{"n_algebra", dec.dim_n()},
                    {"s", dec.dim_s()},
                    {"v_plus", dec.dim_v_plus()},
                    {"a_diamond", dec.dim_a_diamond()},
                    {"h", dec.dim_h()}}},
              {"layers", std::move(layers)},
              {"s", index_pairs(dec.s)},
              {"v_plus", index_pairs(dec.v_plus)},
              {"v_minus", index_pairs(dec.v_minus)},
              {"beta", std::move(beta)}};
}

/// Flat map keyed by slot names: "a1", "q0_2", "q_3_1", "p_0_2", "p_5_1", ...
/// (anti-diagonal momenta carry k = 0).
inline json chart_to_json(const orbits::ChartPoint& c) {
  json j;
  j["n"] = c.n;
  for (size_t i = 0; i < c.a.size(); ++i)
    j["a" + std::to_string(i + 1)] = c.a[i].str();
  for (size_t r = 0; r < c.q0.size(); ++r)
    j["q0_" + std::to_string(r + 1)] = c.q0[r].str();
  for (size_t r = 0; r < c.p0.size(); ++r)
    j["p_0_" + std::to_string(r + 1)] = c.p0[r].str();
  for (const auto& [key, v] : c.q)
    j["q_" + std::to_string(key.first) + "_" + std::to_string(key.second)] = v.str();
  for (const auto& [key, v] : c.p)
    j["p_" + std::to_string(key.first) + "_" + std::to_string(key.second)] = v.str();
  return j;
}

inline orbits::ChartPoint chart_from_json(const json& j) {
  orbits::ChartPoint c;
  c.n = j.at("n").get<int>();
  const int R = c.n / 2;
  orbits::ChartSlots slots = orbits::chart_slots(c.n);
  auto get = [&j](const std::string& key) {
    return Rational::parse(j.at(key).get<std::string>());
  };
  for (int i = 1; i <= slots.a_count; ++i) c.a.push_back(get("a" + std::to_string(i)));
  for (int r = 1; r <= R; ++r) c.q0.push_back(get("q0_" + std::to_string(r)));
  for (int r = 1; r <= R; ++r) c.p0.push_back(get("p_0_" + std::to_string(r)));
  for (auto [k, m] : slots.q_keys)
    c.q[{k, m}] = get("q_" + std::to_string(k) + "_" + std::to_string(m));
  for (auto [k, m] : slots.p_keys)
    c.p[{k, m}] = get("p_" + std::to_string(k) + "_" + std::to_string(m));
  return c;
}

}  // namespace borel::io

#endif
