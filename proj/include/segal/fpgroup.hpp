// Finitely presented groups: simplification, coset enumeration, homomorphism counts.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "segal/group.hpp"
#include "segal/smith.hpp"

namespace segal {

/// Letters are +-(g+1) for generator g.
using Word = std::vector<int>;

struct FpGroup {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int rank() const { return static_cast<int>(generators.size()); }
};

Word free_reduce(const Word& w);
Word inverse_word(const Word& w);

/// Drops trivial relators and eliminates generators occurring exactly once in some relator.
FpGroup simplify(const FpGroup& g);

/// Order by Todd-Coxeter enumeration; nullopt if the coset table outgrows max_cosets.
std::optional<std::size_t> group_order(const FpGroup& g, std::size_t max_cosets = 200000);

/// Number of homomorphisms into h.
std::size_t hom_count(const FpGroup& g, const FiniteGroup& h);
/// Some surjective homomorphism into h (generator images), if one exists.
std::optional<std::vector<int>> surjection_onto(const FpGroup& g, const FiniteGroup& h);

struct Abelianization {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
};
Abelianization abelianization(const FpGroup& g);
Abelianization abelianization(const FiniteGroup& g);

/// Counts of homomorphisms into a finite group, computed directly on its table.
std::size_t hom_count(const FiniteGroup& g, const FiniteGroup& h);

std::string word_to_string(const FpGroup& g, const Word& w);

}  // namespace segal
