// The finite Postnikov tower of an unstraightened action, level by level.
#pragma once

#include <vector>

#include "segal/functor.hpp"
#include "segal/gspace.hpp"

namespace segal {

struct TowerDiagram {
  int n_max = 0;
  int k = 0;
  SpaceMap base;                               // Bar(X, G) -> Bar(G)
  std::vector<LevelwiseApplication> stages;    // P_n applied level-wise, n = 0..n_max
  std::vector<SpaceMap> p_source, p_target;    // [n] : stage n -> stage n-1, n >= 1 (index 0 unused)
  std::vector<SpaceMap> tau_source, tau_target;  // [n] : base -> stage n
  std::vector<CheckEntry> checks;
  Verdict overall;
};

/// Stages P_n = cosk_{n+1} Ex^k applied to unstraighten(X, G) at external truncation M, with
/// p_n, tau_n and every commutation identity checked simplex-wise.
TowerDiagram build_tower(const GSpace& x, int n_max, int k, int ext_truncation = 3, const OracleOptions& opts = {},
                         bool stage_reports = false);
json to_json(const TowerDiagram& t);

}  // namespace segal
