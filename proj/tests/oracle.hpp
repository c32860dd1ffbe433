#pragma once

// Test-only reference computations, written independently of the library's
// sparse elimination: dense row reduction on plain Scalar tables.

#include <random>
#include <vector>

#include "bhc/linalg.hpp"

namespace oracle {

using Table = std::vector<std::vector<bhc::Scalar>>;

inline std::size_t dense_rank(Table a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c].is_zero()) continue;
      bhc::Scalar f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t dense_rank(const bhc::LinearMap& f) { return dense_rank(f.dense()); }

inline Table multiply(const Table& a, const Table& b, bhc::Field f) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  Table out(n, std::vector<bhc::Scalar>(m, bhc::Scalar(f)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

inline bhc::LinearMap random_map(const bhc::Space& dom, const bhc::Space& cod, std::mt19937& rng, int density = 3) {
  std::uniform_int_distribution<int> val(-3, 3), hit(0, density);
  std::vector<std::vector<bhc::Scalar>> rows(cod.dim(), std::vector<bhc::Scalar>(dom.dim(), bhc::Scalar(dom.field())));
  for (auto& row : rows)
    for (auto& x : row)
      if (hit(rng) == 0) x = bhc::Scalar(dom.field(), static_cast<long>(val(rng)));
  return bhc::LinearMap::from_dense(dom, cod, rows);
}

}  // namespace oracle
