// Horn-filling checks for Kan complexes and Kan fibrations, up to a dimension.
#pragma once

#include "segal/sset.hpp"
#include "segal/verdict.hpp"

namespace segal {

/// CERTIFIED if every horn of dimension <= max_dim (clamped to the truncation) fills.
Verdict kan_check(const SimplicialSet& x, int max_dim);
/// CERTIFIED if every horn lifting problem against f of dimension <= max_dim is solvable.
Verdict is_fibration(const SimplicialMap& f, int max_dim);

}  // namespace segal
