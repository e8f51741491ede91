// Finite groups and level-wise finite simplicial groups.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "segal/errors.hpp"

namespace segal {

class FiniteGroup {
 public:
  FiniteGroup();  // trivial group

  /// Validates closure, associativity, identity and inverses exhaustively.
  static FiniteGroup from_table(std::vector<std::string> names, std::vector<std::vector<int>> table);
  static FiniteGroup cyclic(int n);
  /// Permutations of {0..n-1} in lexicographic order, named in one-line notation; a*b = a o b.
  static FiniteGroup symmetric(int n);
  static FiniteGroup trivial() { return FiniteGroup(); }

  int order() const { return static_cast<int>(names_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int identity() const { return identity_; }
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  std::optional<int> find(const std::string& name) const;
  bool abelian() const;
  /// Elements of the subgroup generated by gens, ascending.
  std::vector<int> generated_by(const std::vector<int>& gens) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.names_ == b.names_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

/// True if phi : a -> b (as an element map) is a homomorphism.
bool is_homomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& phi);

/// Groups G_0..G_M with homomorphic face and degeneracy maps.
class SimplicialGroup {
 public:
  /// Validates homomorphisms and the simplicial identities.
  static SimplicialGroup make(std::vector<FiniteGroup> levels, std::vector<std::vector<std::vector<int>>> faces,
                              std::vector<std::vector<std::vector<int>>> degens);
  /// The discrete simplicial group with G in every level.
  static SimplicialGroup constant(const FiniteGroup& g, int truncation);

  int truncation() const { return static_cast<int>(levels_.size()) - 1; }
  const FiniteGroup& level(int n) const { return levels_[n]; }
  int face(int n, int i, int g) const { return faces_[n][i][g]; }
  int degeneracy(int n, int i, int g) const { return degens_[n][i][g]; }
  /// Set when every level is the same group with identity structure maps.
  const std::optional<FiniteGroup>& discrete() const { return discrete_; }

 private:
  std::vector<FiniteGroup> levels_;
  std::vector<std::vector<std::vector<int>>> faces_;   // [n][i][g], n >= 1
  std::vector<std::vector<std::vector<int>>> degens_;  // [n][i][g], n < M
  std::optional<FiniteGroup> discrete_;
};

}  // namespace segal
