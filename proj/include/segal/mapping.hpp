// Mapping complexes m |-> hom(N(P^m), X) for cosimplicial families of finite posets.
// Coskeleta, Ex, path spaces and d_* are all instances.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "segal/constructions.hpp"
#include "segal/hom.hpp"

namespace segal {

struct PosetFamily {
  std::string name;
  std::vector<Poset> posets;  // P^0 .. P^T
  std::vector<Nerve> nerves;
  std::vector<std::vector<std::vector<int>>> cofaces;   // [m][i] : P^{m-1} -> P^m, m >= 1
  std::vector<std::vector<std::vector<int>>> codegens;  // [m][i] : P^{m+1} -> P^m, m < T
  std::vector<std::vector<int>> to_simplex;             // [m] : P^m -> [m], empty if none

  int truncation() const { return static_cast<int>(posets.size()) - 1; }
};

/// [m].
PosetFamily family_delta(int truncation);
/// [m] x [k]; to_simplex is the projection.
PosetFamily family_delta_times(int truncation, int k);
/// Chains of [m] of length <= n (sk_n of the simplex); to_simplex is the inclusion.
PosetFamily family_skeleton(int truncation, int n);
/// Nonempty subsets of [m] (barycentric subdivision); to_simplex is the last-vertex map.
PosetFamily family_subdivision(int truncation);

class MappingComplex {
 public:
  static MappingComplex build(std::shared_ptr<const PosetFamily> family, const SimplicialSet& x,
                              const Budget& budget = {});

  const SimplicialSet& set() const;
  const SimplicialSet& target() const;
  const PosetFamily& family() const;
  std::shared_ptr<const PosetFamily> family_ptr() const;
  /// Generator images of the element with dense index idx at level m.
  const GeneratorImages& element(int m, int idx) const;
  std::optional<int> find(int m, const GeneratorImages& images) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// x |-> x o to_simplex_m : X -> Map(P, X). X must reach the complex's truncation.
SimplicialMap unit_map(const MappingComplex& c);
/// f o - : Map(P, X) -> Map(P, Y). Both complexes must use the same family.
SimplicialMap postcompose(const MappingComplex& from, const MappingComplex& to, const SimplicialMap& f);
/// Restriction along natural element maps e_m : Q^m -> P^m, Map(P, X) -> Map(Q, X).
SimplicialMap restrict_along(const MappingComplex& from, const MappingComplex& to,
                             const std::vector<std::vector<int>>& element_maps);
/// Evaluation along chains e_m : [m] -> P^m, Map(P, X) -> X truncated to the complex.
SimplicialMap evaluate_along(const MappingComplex& from, const std::vector<std::vector<int>>& element_maps);

/// cosk_n X with its unit X -> cosk_n X.
struct Coskeleton {
  MappingComplex complex;
  SimplicialMap unit;
};
Coskeleton coskeleton(const SimplicialSet& x, int n, const Budget& budget = {});

/// Ex X with its unit X -> Ex X (last-vertex map).
struct ExResult {
  MappingComplex complex;
  SimplicialMap unit;
};
ExResult ex(const SimplicialSet& x, const Budget& budget = {});

/// The free path space X^{Delta^1}, truncated one below X, with endpoint evaluations and constant paths.
struct PathSpace {
  MappingComplex complex;
  SimplicialMap source;    // evaluation at 0
  SimplicialMap target;    // evaluation at 1
  SimplicialMap constant;  // X (truncated) -> X^{Delta^1}
};
PathSpace path_space(const SimplicialSet& x, const Budget& budget = {});

}  // namespace segal
