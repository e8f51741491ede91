// Quotients of simplicial sets by relations saturated under faces and degeneracies.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "segal/sset.hpp"

namespace segal {

struct QuotientSet {
  SimplicialSet set;
  SimplicialMap projection;
  std::vector<std::vector<int>> class_of;  // [n][x] -> dense index in set
};

/// Identifies the named generators pairwise (same dimension) and saturates.
QuotientSet quotient(const SimplicialSet& x, const std::vector<std::pair<std::string, std::string>>& pairs,
                     const Budget& budget = {});

/// Identifies dense simplices: pairs[n] lists (a, b) in X_n.
QuotientSet quotient_dense(const SimplicialSet& x, const std::vector<std::vector<std::pair<int, int>>>& pairs,
                           const Budget& budget = {});

}  // namespace segal
