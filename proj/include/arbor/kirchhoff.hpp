#pragma once

#include <gmpxx.h>

#include "arbor/graph.hpp"

namespace arbor {

using TreeCount = mpz_class;

/// Default guard threshold: 10^8 spanning trees.
TreeCount default_guard_threshold();

/// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class bareiss_determinant(const IntMatrix& a);

/// Number of spanning trees: the Laplacian cofactor with row and column
/// `deleted` removed. Any choice of `deleted` gives the same value.
TreeCount count_spanning_trees(const Graph& g, int deleted = 0);

struct GuardDecision {
  bool proceed;
  TreeCount count;
};

/// Refuses when count_spanning_trees(g) > threshold.
GuardDecision guard(const Graph& g, const TreeCount& threshold);

}  // namespace arbor
