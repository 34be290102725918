#include "arbor/kirchhoff.hpp"

#include <utility>
#include <vector>

namespace arbor {

TreeCount default_guard_threshold() { return TreeCount(100'000'000); }

mpz_class bareiss_determinant(const IntMatrix& a) {
  const int n = a.rows;
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = static_cast<long>(a(i, j));

  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

TreeCount count_spanning_trees(const Graph& g, int deleted) {
  const int n = g.order();
  const IntMatrix lap = laplacian(g);
  IntMatrix minor(n - 1, n - 1);
  for (int i = 0, r = 0; i < n; ++i) {
    if (i == deleted) continue;
    for (int j = 0, c = 0; j < n; ++j) {
      if (j == deleted) continue;
      minor(r, c++) = lap(i, j);
    }
    ++r;
  }
  return bareiss_determinant(minor);
}

GuardDecision guard(const Graph& g, const TreeCount& threshold) {
  TreeCount count = count_spanning_trees(g);
  const bool proceed = count <= threshold;
  return {proceed, std::move(count)};
}

}  // namespace arbor
