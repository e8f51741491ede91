// Weak-equivalence and homotopy-cartesian verdicts from pi_0, homology and pi_1.
#pragma once

#include <string>

#include "segal/limits.hpp"
#include "segal/sset.hpp"
#include "segal/verdict.hpp"

namespace segal {

struct OracleOptions {
  int ex_stage = 1;  // Ex^k stages used when no fibrant model is available
  Budget budget;
};

/// REFUTED on a pi_0, homology (mapping cone) or pi_1 invariant mismatch; CERTIFIED for
/// isomorphisms and for homology isomorphisms between simply connected sides.
Verdict weak_equivalence_verdict(const SimplicialMap& f, int truncation = -1);

/// Homotopy pullback of L -> C <- R, with the legs into C (possibly after Ex^k).
struct HomotopyPullback {
  std::string mode;  // "strict", "path-space" or "ex-path-space"
  LimitSet limit;    // factors (L, R) or (L, path, R)
  SimplicialMap left_leg;   // L -> corner model
  SimplicialMap constant;   // corner model -> paths (path modes only)
  bool exact = true;        // false: verdicts built on this model are capped at CONSISTENT
  std::string note;

  const SimplicialSet& set() const { return limit.set(); }
  /// The comparison map from a cone A -> L, A -> R.
  SimplicialMap comparison(const SimplicialMap& to_left, const SimplicialMap& to_right) const;
  SimplicialMap to_left() const;
  SimplicialMap to_right() const;
};

HomotopyPullback homotopy_pullback(const SimplicialMap& left_down, const SimplicialMap& right_down, int truncation,
                                   const OracleOptions& opts = {});

Verdict is_homotopy_cartesian(const HomotopySquare& sq, int truncation = -1, const OracleOptions& opts = {});

}  // namespace segal
