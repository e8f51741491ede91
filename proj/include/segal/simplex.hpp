// Simplicial operators and Eilenberg-Zilber normal forms.
#pragma once

#include <compare>
#include <string>
#include <vector>

namespace segal {

/// A nondegenerate generator, addressed by dimension and position within that dimension.
struct GeneratorId {
  int dim = 0;
  int index = 0;
  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

/// A simplex s_{j_1} ... s_{j_r} g with j_1 > ... > j_r (the unique normal form).
struct SimplexRef {
  std::vector<int> degeneracies;
  GeneratorId generator;

  int dim() const { return generator.dim + static_cast<int>(degeneracies.size()); }
  bool degenerate() const { return !degeneracies.empty(); }
  friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
};

/// Monotone map [k] -> [n], stored as its k+1 values.
using MonotoneMap = std::vector<int>;

MonotoneMap identity_map(int n);
/// delta^i : [n-1] -> [n], skipping i.
MonotoneMap coface_map(int n, int i);
/// sigma^i : [n+1] -> [n], hitting i twice.
MonotoneMap codegeneracy_map(int n, int i);
/// outer o inner.
MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner);

/// Surjection sigma with x o sigma = s_{word[0]} ... s_{word.back()} x, for x of dimension `base_dim`.
MonotoneMap degeneracy_surjection(int base_dim, const std::vector<int>& word);
/// Normal-form degeneracy word (descending) of a surjection.
std::vector<int> collapsed_indices(const MonotoneMap& surjection);
/// Normal form of an arbitrary degeneracy word.
std::vector<int> normalize_degeneracies(int base_dim, const std::vector<int>& word);

/// theta = coface(image) o surjection.
struct Factorization {
  MonotoneMap surjection;
  std::vector<int> image;
};
Factorization factor(const MonotoneMap& theta);

enum class OpKind { Face, Degeneracy };

struct Operator {
  OpKind kind;
  int index;
  friend bool operator==(const Operator&, const Operator&) = default;
};

/// A composite of face and degeneracy operators. The last entry is applied first.
using OperatorWord = std::vector<Operator>;

/// s_J d_I with J strictly decreasing and I strictly increasing.
struct NormalWord {
  std::vector<int> degeneracies;
  std::vector<int> faces;
  friend bool operator==(const NormalWord&, const NormalWord&) = default;
};

/// Rewrites a word to normal form using only the simplicial identities.
NormalWord normalize_word(OperatorWord word);
OperatorWord to_word(const NormalWord& w);

/// theta with w(x) = x o theta for x of dimension `source_dim`. Throws on out-of-range indices.
MonotoneMap word_to_map(const OperatorWord& word, int source_dim);
/// Dimension reached after applying `word` to a simplex of dimension `source_dim`.
int word_target_dim(const OperatorWord& word, int source_dim);

std::string to_string(const OperatorWord& word);
std::string degeneracy_prefix(const std::vector<int>& degeneracies);

/// Binomial coefficient, exact for the small arguments used here.
long long binomial(int n, int k);

}  // namespace segal
