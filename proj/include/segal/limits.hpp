// Finite limits of simplicial sets: products, pullbacks and general
// constrained tuple sets (iterated fiber products, matching objects).
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "segal/sset.hpp"

namespace segal {

/// left_map(x[left]) == right_map(x[right]) must hold for a tuple x.
struct LimitConstraint {
  int left = 0;
  SimplicialMap left_map;
  int right = 0;
  SimplicialMap right_map;
};

/// Level-wise set of tuples (x_0, ..., x_{r-1}) of simplices of the factors satisfying all constraints.
class LimitSet {
 public:
  static LimitSet build(std::vector<SimplicialSet> factors, std::vector<LimitConstraint> constraints,
                        int truncation = -1, const Budget& budget = {});

  const SimplicialSet& set() const;
  const std::vector<SimplicialSet>& factors() const;
  const std::vector<int>& tuple(int n, int x) const;
  std::optional<int> find(int n, const std::vector<int>& tuple) const;

  SimplicialMap projection(int k) const;
  /// The map source -> limit with components legs[k] (each must land in factor k).
  SimplicialMap induced(const SimplicialSet& source, const std::vector<SimplicialMap>& legs) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

LimitSet product(const SimplicialSet& a, const SimplicialSet& b, const Budget& budget = {});
LimitSet product(const std::vector<SimplicialSet>& factors, const Budget& budget = {});
/// Fiber product of f : X -> Z and g : Y -> Z; factors are (X, Y).
LimitSet pullback(const SimplicialMap& f, const SimplicialMap& g, const Budget& budget = {});

/// Map between limits induced by component maps from.factor(k) -> to.factor(k).
SimplicialMap limit_map(const LimitSet& from, const LimitSet& to, const std::vector<SimplicialMap>& components);

}  // namespace segal
