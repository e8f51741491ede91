// Endofunctors of simplicial sets (identity, Ex^k, coskeleta, Postnikov approximations,
// the constant empty functor), their axiom audit and level-wise application.
#pragma once

#include <string>
#include <vector>

#include "segal/bisimplicial.hpp"
#include "segal/limits.hpp"
#include "segal/mapping.hpp"
#include "segal/oracle.hpp"
#include "segal/segal_checks.hpp"

namespace segal {

enum class FunctorKind { Identity, Ex, Coskeleton, Postnikov, ConstantEmpty };

struct EndoFunctor {
  FunctorKind kind = FunctorKind::Identity;
  int n = 0;  // coskeleton degree; Postnikov stage
  int k = 0;  // Ex stage

  static EndoFunctor identity() { return {}; }
  static EndoFunctor ex(int k) { return {FunctorKind::Ex, 0, k}; }
  static EndoFunctor cosk(int n) { return {FunctorKind::Coskeleton, n, 0}; }
  /// cosk_{n+1} o Ex^k.
  static EndoFunctor postnikov(int n, int k) { return {FunctorKind::Postnikov, n, k}; }
  static EndoFunctor constant_empty() { return {FunctorKind::ConstantEmpty, 0, 0}; }
  /// Parses "identity", "ex:K", "cosk:N", "postnikov:N:K", "empty".
  static EndoFunctor parse(const std::string& spec);

  std::string name() const;
};

/// L X with the chain of mapping complexes that produced it and the unit X -> L X.
struct AppliedObject {
  SimplicialSet source;
  SimplicialSet value;
  std::vector<MappingComplex> stages;  // Ex stages first, then the coskeleton
  SimplicialMap unit;                  // absent for the constant empty functor
  bool has_unit = true;
};

AppliedObject apply(const EndoFunctor& l, const SimplicialSet& x, const Budget& budget = {});
/// L f : L X -> L Y.
SimplicialMap apply(const EndoFunctor& l, const AppliedObject& from, const AppliedObject& to, const SimplicialMap& f);
/// cosk_{n+1} Ex^k X.
SimplicialSet postnikov_approx(const SimplicialSet& x, int n, int k, const Budget& budget = {});

/// L(X x Y) -> L X x L Y.
struct ProductComparison {
  AppliedObject lx, ly, lxy;
  LimitSet target;
  SimplicialMap map;
};
ProductComparison product_comparison(const EndoFunctor& l, const SimplicialSet& x, const SimplicialSet& y,
                                     const Budget& budget = {});

/// Verdicts for L(*) ~ *, preservation of the corpus equivalences, and the product comparisons.
SegalReport functor_audit(const EndoFunctor& l, int truncation, const OracleOptions& opts = {});

/// L applied to every level of source and target, with the rebuilt structure maps.
struct LevelwiseApplication {
  SpaceMap map;
  std::vector<AppliedObject> source_levels;
  std::vector<AppliedObject> target_levels;
  SegalReport report;
};
LevelwiseApplication apply_levelwise(const EndoFunctor& l, const SpaceMap& pi, int up_to,
                                     const OracleOptions& opts = {}, bool run_checks = true);
SimplicialSpace apply_levelwise(const EndoFunctor& l, const SimplicialSpace& b, std::vector<AppliedObject>& levels,
                                const Budget& budget = {});

}  // namespace segal
