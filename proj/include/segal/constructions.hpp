// Standard simplicial sets: simplices, boundaries, horns, the circle, nerves of finite posets.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "segal/sset.hpp"

namespace segal {

/// A finite poset given by its order relation.
struct Poset {
  int size = 0;
  std::vector<char> leq;  // size*size, row-major
  std::vector<std::string> names;

  bool le(int a, int b) const { return leq[static_cast<std::size_t>(a) * size + b] != 0; }
  bool lt(int a, int b) const { return a != b && le(a, b); }

  static Poset chain(int n);                                    // [n]
  static Poset product(const Poset& a, const Poset& b);         // product order
  static Poset nonempty_subsets(int n);                         // subsets of [n], inclusion
};

/// The nerve together with the strict chain behind every generator.
struct Nerve {
  SimplicialSet set;
  std::vector<std::vector<std::vector<int>>> chains;  // [dim][generator] -> strict chain
  std::map<std::vector<int>, GeneratorId> chain_index;

  /// Normal form of the (weakly increasing) chain c.
  SimplexRef ref_of(const std::vector<int>& weak_chain) const;
};

/// Nerve of P truncated at `truncation`, keeping only chains of dimension <= max_dim.
/// `keep(chain)` may drop further chains; the kept family must be closed under faces.
Nerve nerve(const Poset& p, int truncation, int max_dim = -1,
            const std::function<bool(const std::vector<int>&)>& keep = {});

/// Map of nerves induced by a monotone map on elements.
SimplicialMap nerve_map(const Nerve& source, const Nerve& target, const std::vector<int>& element_map);

SimplicialSet point(int truncation);
SimplicialSet discrete(int points, int truncation, const std::string& prefix = "p");

/// Delta^n with vertices 0..n; generators are named "[0,2]" etc.
SimplicialSet delta(int n, int truncation);

enum class BasicKind { Boundary, Horn, Circle };

/// boundary(n): the boundary of Delta^n; horn(n, i): Lambda^n_i; circle: Delta^1 / boundary.
SimplicialSet basic_complex(BasicKind kind, int n, int i, int truncation);
SimplicialSet boundary(int n, int truncation);
SimplicialSet horn(int n, int i, int truncation);
SimplicialSet circle(int truncation);

/// Generators of dimension <= n, same truncation.
SimplicialSet skeleton(const SimplicialSet& x, int n);
/// Inclusion sk_n X -> X.
SimplicialMap skeleton_inclusion(const SimplicialSet& skeleton, const SimplicialSet& x);

SimplicialSet disjoint_union(const SimplicialSet& a, const SimplicialSet& b);
/// Same generators, lower truncation.
SimplicialSet truncate(const SimplicialSet& x, int truncation);
SimplicialMap truncate(const SimplicialMap& f, int truncation);

/// The unique map to the point of the same truncation.
SimplicialMap to_point(const SimplicialSet& x);
/// Constant map from `x` at vertex v of `y`.
SimplicialMap constant_map(const SimplicialSet& x, const SimplicialSet& y, int vertex);

}  // namespace segal
