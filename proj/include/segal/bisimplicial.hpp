// Simplicial spaces (truncated bisimplicial sets) and the functors c_*, const, d^*, d_*.
#pragma once

#include <vector>

#include "segal/limits.hpp"
#include "segal/mapping.hpp"
#include "segal/sset.hpp"
#include "segal/verdict.hpp"

namespace segal {

class SimplicialSpace {
 public:
  SimplicialSpace() = default;
  /// faces[n][i] : B_n -> B_{n-1} (n >= 1), degens[n][i] : B_n -> B_{n+1} (n < M).
  /// Validates the external simplicial identities simplex-wise.
  static SimplicialSpace make(std::vector<SimplicialSet> levels, std::vector<std::vector<SimplicialMap>> faces,
                              std::vector<std::vector<SimplicialMap>> degens);

  int ext_truncation() const { return static_cast<int>(levels_.size()) - 1; }
  /// Smallest internal truncation among the levels.
  int int_truncation() const;
  const SimplicialSet& level(int n) const { return levels_[n]; }
  const SimplicialMap& face(int n, int i) const { return faces_[n][i]; }
  const SimplicialMap& degeneracy(int n, int i) const { return degens_[n][i]; }
  /// theta^* : B_n -> B_k for theta : [k] -> [n].
  SimplicialMap operator_map(int n, const MonotoneMap& theta) const;

 private:
  std::vector<SimplicialSet> levels_;
  std::vector<std::vector<SimplicialMap>> faces_;
  std::vector<std::vector<SimplicialMap>> degens_;
};

class SpaceMap {
 public:
  SpaceMap() = default;
  /// Validates naturality against every external face and degeneracy.
  static SpaceMap make(SimplicialSpace source, SimplicialSpace target, std::vector<SimplicialMap> levels);
  static SpaceMap identity(const SimplicialSpace& b);

  const SimplicialSpace& source() const { return source_; }
  const SimplicialSpace& target() const { return target_; }
  const SimplicialMap& level(int n) const { return levels_[n]; }
  int ext_truncation() const { return source_.ext_truncation(); }

 private:
  SimplicialSpace source_;
  SimplicialSpace target_;
  std::vector<SimplicialMap> levels_;
};

/// c_* K: level n is the discrete set K_n, internal truncation `internal` (default K's).
SimplicialSpace const_discrete(const SimplicialSet& k, int ext_truncation = -1, int internal = -1);
/// Every level K with identity structure maps.
SimplicialSpace const_space(const SimplicialSet& k, int ext_truncation);
/// The terminal simplicial space.
SimplicialSpace terminal_space(int ext_truncation, int internal);
SpaceMap to_terminal(const SimplicialSpace& b);
/// Lower external truncation M and internal truncation T.
SimplicialSpace truncate_space(const SimplicialSpace& b, int ext_truncation, int internal);
SpaceMap truncate_space_map(const SpaceMap& f, int ext_truncation, int internal);

struct Diagonal {
  SimplicialSet set;
  std::vector<std::vector<int>> index;  // [n][x in (B_n)_n] -> dense index in set
};
/// d^* B, truncated at min(M, internal truncation).
Diagonal diagonal_with_index(const SimplicialSpace& b);
SimplicialSet diagonal(const SimplicialSpace& b);
SimplicialMap diagonal(const SpaceMap& f);

/// d_* A with levels A^{Delta^n}, n <= M, at internal truncation N - M.
struct DStar {
  SimplicialSpace space;
  std::vector<MappingComplex> complexes;  // level n
};
DStar d_star(const SimplicialSet& a, int ext_truncation, const Budget& budget = {});

/// The unit B -> d_* d^* B.
SpaceMap d_star_unit(const SimplicialSpace& b, const DStar& dd);
/// Level-wise pullback P_n = B_n x_{(d_* d^* B)_n} (d_* A)_n with its map to B, and the
/// fibration verdict for f that makes the strict pullback meaningful.
struct SlicedDStar {
  SpaceMap map;
  Verdict fibration;
};
SlicedDStar d_star_over(const SimplicialMap& f, const SimplicialSpace& b, const Budget& budget = {});

/// Number of maps of simplicial spaces B -> C.
std::size_t space_hom_count(const SimplicialSpace& b, const SimplicialSpace& c);

/// M_n B: tuples (a_0..a_n) in B_{n-1} with d_i a_j = d_{j-1} a_i for i < j; M_0 is a point.
LimitSet matching_object(const SimplicialSpace& b, int n, const Budget& budget = {});
/// B_n -> M_n B.
SimplicialMap matching_map(const SimplicialSpace& b, int n, const LimitSet& m);

}  // namespace segal
