// Group actions on simplicial sets and the constructions built from them:
// bar constructions, W and W-bar, Borel constructions and homotopy fibers.
#pragma once

#include <vector>

#include "segal/bisimplicial.hpp"
#include "segal/group.hpp"
#include "segal/limits.hpp"
#include "segal/quotient.hpp"

namespace segal {

/// The underlying simplicial set of a simplicial group, with element <-> simplex tables.
struct GroupSet {
  SimplicialSet set;
  std::vector<std::vector<int>> simplex_of;  // [n][element] -> dense index
  std::vector<std::vector<int>> element_of;  // [n][dense index] -> element
};
GroupSet underlying_set(const SimplicialGroup& g, int truncation = -1);

/// A simplicial set with a level-wise right action of a simplicial group.
class GSpace {
 public:
  GSpace() = default;
  /// action[n][x][h] = x.h for x in X_n, h in G_n. Validates the action laws and
  /// compatibility with faces and degeneracies.
  static GSpace make(SimplicialSet x, SimplicialGroup g, std::vector<std::vector<std::vector<int>>> action);
  /// G acting trivially on x.
  static GSpace trivial(const SimplicialSet& x, const SimplicialGroup& g);
  static GSpace point(const SimplicialGroup& g, int truncation);
  /// G acting on itself by right multiplication.
  static GSpace translation(const SimplicialGroup& g, int truncation);
  /// Two copies of the translation action.
  static GSpace two_translations(const SimplicialGroup& g, int truncation);

  const SimplicialSet& space() const { return x_; }
  const SimplicialGroup& group() const { return g_; }
  int truncation() const { return x_.truncation(); }
  int act(int n, int x, int h) const { return action_[n][x][h]; }
  const std::vector<std::vector<std::vector<int>>>& action() const { return action_; }
  /// No simplex has a nontrivial stabilizer.
  bool is_free() const;

 private:
  SimplicialSet x_;
  SimplicialGroup g_;
  std::vector<std::vector<std::vector<int>>> action_;
};

/// The restriction to simplices of dimension <= truncation.
GSpace truncate(const GSpace& x, int truncation);

/// True if f : a -> b commutes with the actions (same group).
bool is_equivariant(const GSpace& a, const GSpace& b, const SimplicialMap& f);

/// Bar_n(X, G) = X x G^n -> Bar_n(G) = G^n for n <= M. Internal truncation is that of X.
/// d_0 applies the action, d_i (0 < i < n) multiplies g_i g_{i+1}, d_n drops g_n,
/// s_i inserts the identity after position i.
struct BarConstruction {
  SpaceMap map;
  std::vector<LimitSet> source_levels;  // factors (X, G, ..., G)
  std::vector<LimitSet> target_levels;  // factors (G, ..., G)
  GroupSet group;
};
BarConstruction bar_construction(const GSpace& x, int ext_truncation, const Budget& budget = {});
SpaceMap bar_action(const GSpace& x, int ext_truncation, const Budget& budget = {});
SimplicialSpace bar_group(const SimplicialGroup& g, int ext_truncation, int internal, const Budget& budget = {});

/// Tuple model of W G and W-bar G: (WG)_n = G_n x ... x G_0, (W-bar G)_n = G_{n-1} x ... x G_0.
struct WConstruction {
  GSpace w;                                 // free action h^{-1} on the first coordinate
  SimplicialSet wbar;
  SimplicialMap projection;                 // W G -> W-bar G
  std::vector<std::vector<std::vector<int>>> w_tuples;     // [n][dense] -> (g_n, ..., g_0)
  std::vector<std::vector<std::vector<int>>> wbar_tuples;  // [n][dense] -> (g_{n-1}, ..., g_0)
};
WConstruction w_construction(const SimplicialGroup& g, int truncation, const Budget& budget = {});
GSpace w(const SimplicialGroup& g, int truncation);
SimplicialSet wbar(const SimplicialGroup& g, int truncation);

/// X // G = (X x WG) / G with its projection to W-bar G.
struct Borel {
  SimplicialSet set;
  SimplicialMap projection;  // -> W-bar G
  LimitSet product;          // X x WG
  QuotientSet quotient;      // of product.set()
};
Borel borel(const GSpace& x, const Budget& budget = {});
/// (X // G) -> (Y // G) induced by an equivariant map.
SimplicialMap borel_map(const Borel& from, const Borel& to, const SimplicialMap& f);

/// A x_{W-bar G} WG with G acting on the WG factor.
GSpace homotopy_fiber(const SimplicialMap& f, const SimplicialGroup& g, const Budget& budget = {});

/// X / G.
QuotientSet orbit_quotient(const GSpace& x, const Budget& budget = {});

}  // namespace segal
