#pragma once

// Seeded random inputs shared by the unit and acceptance suites.

#include "oracle.hpp"

#include "steincalc/knots.hpp"
#include "steincalc/plumbing.hpp"

#include <random>

namespace gen {

using steincalc::IntMatrix;
using steincalc::Move;
using steincalc::MoveKind;
using steincalc::PlumbingGraph;

inline long uniform(std::mt19937& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

inline oracle::Mat to_oracle(const IntMatrix& m) {
  oracle::Mat out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

// Random labelled tree on n vertices (Pruefer-free: attach each new vertex to
// an earlier one).
inline PlumbingGraph random_tree(std::mt19937& rng, int n) {
  std::vector<steincalc::PlumbingVertex> vs;
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) {
    const int genus = uniform(rng, 0, 5) == 0 ? static_cast<int>(uniform(rng, 1, 2)) : 0;
    vs.push_back({i, uniform(rng, -4, 3), genus});
    if (i > 0) es.emplace_back(static_cast<int>(uniform(rng, 0, i - 1)), i);
  }
  return PlumbingGraph(std::move(vs), std::move(es));
}

inline std::vector<Move> blow_down_candidates(const PlumbingGraph& g) {
  std::vector<Move> out;
  for (const auto& v : g.vertices())
    if (v.weight == -1 && v.genus == 0 && g.degree(v.id) <= 2) out.push_back({MoveKind::BlowDown, {v.id}});
  return out;
}

// A uniformly chosen valid blow-up or blow-down.
inline Move random_move(std::mt19937& rng, const PlumbingGraph& g) {
  auto downs = blow_down_candidates(g);
  const long kind = uniform(rng, 0, downs.empty() ? 1 : 2);
  if (kind == 2) return downs[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(downs.size()) - 1))];
  if (kind == 1 && !g.edges().empty()) {
    const auto& e = g.edges()[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(g.edges().size()) - 1))];
    return {MoveKind::BlowUpOnEdge, {e.first, e.second}};
  }
  const auto& v = g.vertices()[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(g.size()) - 1))];
  return {MoveKind::BlowUpAtVertex, {v.id}};
}

// V = S + P with S symmetric and P - P^T the standard symplectic form, so
// det(V - V^T) = 1 always.
inline IntMatrix random_seifert_matrix(std::mt19937& rng, int genus, long bound = 3) {
  const std::size_t n = static_cast<std::size_t>(2 * genus);
  IntMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) v(i, j) = v(j, i) = uniform(rng, -bound, bound);
  for (std::size_t i = 0; i + 1 < n; i += 2) v(i, i + 1) += 1;
  return v;
}

inline steincalc::SeifertMatrixK random_knot(std::mt19937& rng, int genus, const std::string& name) {
  return steincalc::SeifertMatrixK(name, random_seifert_matrix(rng, genus));
}

}  // namespace gen
