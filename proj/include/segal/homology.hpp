// Normalized chains, integer homology, and connected components.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "segal/smith.hpp"
#include "segal/sset.hpp"
#include "segal/verdict.hpp"

namespace segal {

/// Normalized chain complex: generators are the nondegenerate simplices in degrees 0..N.
struct ChainComplex {
  int truncation = 0;
  std::vector<std::size_t> ranks;         // [k]
  std::vector<SparseMatrix> boundary;     // [k] : C_k -> C_{k-1}, k >= 1; boundary[0] is empty

  /// Throws std::logic_error if some composite of boundaries is nonzero.
  void assert_square_zero() const;
};

/// Boundary sum_i (-1)^i d_i with degenerate faces dropped.
ChainComplex normalized_chains(const SimplicialSet& x, int truncation = -1);
/// Mapping cone of the induced chain map, in degrees 0..N where N = f's truncation.
ChainComplex mapping_cone(const SimplicialMap& f, int truncation = -1);

struct HomologyGroup {
  int degree = 0;
  std::size_t rank = 0;
  std::vector<Integer> torsion;
  bool truncation_unsafe = false;

  bool operator==(const HomologyGroup& o) const { return rank == o.rank && torsion == o.torsion; }
  bool trivial() const { return rank == 0 && torsion.empty(); }
};

struct HomologySignature {
  int truncation = 0;
  std::vector<HomologyGroup> groups;  // degrees 0..N; degree N is truncation-unsafe

  /// Agreement in degrees 0..up_to (defaults to every truncation-safe degree).
  bool matches(const HomologySignature& o, int up_to = -1) const;
  std::string to_string(int up_to = -1) const;
};

HomologySignature homology(const ChainComplex& c);
HomologySignature homology(const SimplicialSet& x, int truncation = -1);

json to_json(const HomologyGroup& g);
json to_json(const HomologySignature& s);

/// Connected components: the class of each vertex, numbered by first occurrence.
std::vector<int> components(const SimplicialSet& x);
std::size_t pi0(const SimplicialSet& x);

}  // namespace segal
