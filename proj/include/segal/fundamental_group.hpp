// Edge-path presentations of the fundamental group.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "segal/fpgroup.hpp"
#include "segal/sset.hpp"
#include "segal/verdict.hpp"

namespace segal {

struct Pi1Presentation {
  int basepoint = 0;                 // dense vertex index
  std::vector<int> tree_edges;       // dense 1-simplices of the spanning tree
  std::vector<int> generator_edges;  // dense 1-simplex behind each generator
  FpGroup group;                     // unsimplified presentation
};

/// Spanning tree of the basepoint's component; one relator per nondegenerate 2-simplex.
Pi1Presentation pi1_presentation(const SimplicialSet& x, int basepoint = 0);

/// Invariants used to compare fundamental groups.
struct Pi1Summary {
  std::optional<std::size_t> order;  // Todd-Coxeter, if it terminated
  std::size_t homs_s3 = 0;
  std::size_t homs_s4 = 0;
  std::size_t abelian_rank = 0;
  std::vector<Integer> abelian_torsion;
  FpGroup simplified;
};
Pi1Summary summarize(const FpGroup& g);

json to_json(const Pi1Presentation& p, const SimplicialSet& x);
json to_json(const Pi1Summary& s);

/// CERTIFIED if the group has the order of h and surjects onto it; REFUTED if an invariant differs.
Verdict compare_with_finite(const FpGroup& g, const FiniteGroup& h, int truncation);

/// Compares two presentations via order, abelianization and hom counts into S3 and S4.
Verdict compare_groups(const FpGroup& a, const FpGroup& b, int truncation);

}  // namespace segal
