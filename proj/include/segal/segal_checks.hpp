// Reedy fibrations, Segal spaces, Segal groups and Segal group actions.
#pragma once

#include <string>
#include <vector>

#include "segal/bisimplicial.hpp"
#include "segal/oracle.hpp"
#include "segal/verdict.hpp"

namespace segal {

struct CheckEntry {
  std::string name;
  int level = -1;  // external level, -1 if not level-specific
  Verdict verdict;
};

/// Per-condition verdicts. A failed Reedy check enters the overall verdict capped at
/// CONSISTENT: no fibrant replacement is computed, the remaining checks are homotopy invariant.
struct SegalReport {
  std::string kind;
  int ext_truncation = 0;
  int up_to = 0;
  std::vector<CheckEntry> checks;
  Verdict overall;

  void add(CheckEntry e);
  void add_report(const SegalReport& r, const std::string& prefix);
  const CheckEntry* find(const std::string& name, int level = -1) const;
};

json to_json(const CheckEntry& e);
json to_json(const SegalReport& r);

/// Relative matching maps A_n -> B_n x_{M_n B} M_n A for n <= up_to, each checked with is_fibration.
Verdict reedy_fibration_check(const SpaceMap& pi, int up_to, const Budget& budget = {});

/// The strict Segal map B_n -> B_1 x_{B_0} ... x_{B_0} B_1 along p_i = (i-1, i).
struct SegalMap {
  LimitSet target;
  SimplicialMap map;
};
SegalMap segal_map(const SimplicialSpace& b, int n, const Budget& budget = {});

/// Segal map verdict against the iterated homotopy pullback.
Verdict segal_verdict(const SimplicialSpace& b, int n, const OracleOptions& opts = {});

SegalReport is_segal_space(const SimplicialSpace& b, int up_to, const OracleOptions& opts = {});
/// (d_1, d_0) : B_2 -> B_1 x^h_{B_0} B_1, fibered over d_0 on both sides.
Verdict is_group_like(const SimplicialSpace& b, const OracleOptions& opts = {});
SegalReport is_segal_group(const SimplicialSpace& b, int up_to, const OracleOptions& opts = {});

/// alpha_k^* for the vertex k of [n].
SimplicialMap vertex_map(const SimplicialSpace& b, int n, int k);

/// Reedy fibration, target Segal group, and the squares (alpha_0^*, pi_n) homotopy cartesian.
SegalReport is_segal_group_action(const SpaceMap& pi, int up_to, const OracleOptions& opts = {});
/// The squares (alpha_n^*, pi_n), plus Segal space and group-like checks on the source.
SegalReport cross_check_inverted(const SpaceMap& pi, int up_to, const OracleOptions& opts = {});

/// pi_0(B_1) with the multiplication read off B_2, against pi_1 of the diagonal.
struct LoopsComparison {
  Verdict verdict;
  std::vector<std::string> pi0_names;        // components of B_1, by representative vertex
  std::vector<std::vector<int>> pi0_table;   // empty if no group structure was found
};
LoopsComparison loops_comparison(const SimplicialSpace& b, const OracleOptions& opts = {});

}  // namespace segal
