// Finitely presented, truncated simplicial sets and the maps between them.
//
// A SimplicialSet stores only its nondegenerate generators and their faces.
// Every simplex of X_n (n <= truncation) is a normal-form SimplexRef; the
// dense level tables enumerate them in a fixed order so that constructions
// can work with plain integer indices.
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "segal/errors.hpp"
#include "segal/simplex.hpp"

namespace segal {

class SimplicialSet {
 public:
  struct Presentation {
    int truncation = 0;
    std::vector<std::vector<std::string>> names;              // [dim][generator]
    std::vector<std::vector<std::vector<SimplexRef>>> faces;  // [dim][generator][i], dim >= 1
  };

  /// The empty simplicial set, truncated at 0.
  SimplicialSet();

  /// Validates every face reference and every identity d_i d_j = d_{j-1} d_i (i < j).
  static SimplicialSet from_presentation(Presentation p, const Budget& budget = {});

  int truncation() const;
  const Presentation& presentation() const;

  int generator_count(int dim) const;
  std::vector<int> generator_counts() const;
  int total_generators() const;
  const std::string& generator_name(GeneratorId g) const;
  std::optional<GeneratorId> find_generator(std::string_view name) const;
  const SimplexRef& generator_face(GeneratorId g, int i) const;
  /// Position of g in the dimension-major ordering of all generators.
  int flat_index(GeneratorId g) const;
  GeneratorId from_flat_index(int k) const;

  /// s o theta, evaluated through the face table and normal-form rewriting.
  SimplexRef apply(const SimplexRef& s, const MonotoneMap& theta) const;
  SimplexRef face(int i, const SimplexRef& s) const;
  SimplexRef degeneracy(int i, const SimplexRef& s) const;
  SimplexRef evaluate(const OperatorWord& word, const SimplexRef& s) const;

  // Dense level tables.
  std::size_t size(int n) const;
  std::size_t total_size() const;
  int face(int n, int i, int x) const;
  int degeneracy(int n, int i, int x) const;
  /// Applies s_{word[0]} ... s_{word.back()} to x in X_n.
  int degenerate_by(int n, int x, const std::vector<int>& word) const;
  /// x o theta for theta : [k] -> [n].
  int operator_image(int n, int x, const MonotoneMap& theta) const;
  SimplexRef simplex(int n, int x) const;
  int index_of(const SimplexRef& s) const;
  int index_of(GeneratorId g) const;
  bool is_degenerate(int n, int x) const;
  std::string simplex_name(int n, int x) const;
  std::vector<int> boundary(int n, int x) const;
  /// All simplices of X_n whose face tuple equals `faces` (n >= 1).
  const std::vector<int>& with_boundary(int n, const std::vector<int>& faces) const;

  bool empty() const { return size(0) == 0; }

  friend bool operator==(const SimplicialSet& a, const SimplicialSet& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
  explicit SimplicialSet(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
};

/// Explicit level-wise data (all simplices, including degenerate ones).
struct LevelwiseSet {
  int truncation = 0;
  std::vector<std::size_t> sizes;                        // [n]
  std::vector<std::vector<std::vector<int>>> faces;      // [n][i][x], n >= 1
  std::vector<std::vector<std::vector<int>>> degens;     // [n][i][x], n < truncation
};

/// A SimplicialSet extracted from level-wise data, with old-index -> new-index relabelling.
struct Compressed {
  SimplicialSet set;
  std::vector<std::vector<int>> relabel;  // [n][old index] -> dense index in set
};

/// Recovers the normal-form presentation. `name(n, x)` names the nondegenerate simplices.
/// Throws InvalidObject if the level data violate the simplicial identities.
template <class NameFn>
Compressed compress(const LevelwiseSet& levels, NameFn&& name, const Budget& budget = {});

Compressed compress_impl(const LevelwiseSet& levels, const std::vector<std::vector<std::string>>& names_by_level,
                         const std::vector<std::vector<char>>& named, const Budget& budget);

class SimplicialMap {
 public:
  SimplicialMap() = default;

  static SimplicialMap from_images(SimplicialSet source, SimplicialSet target,
                                   std::vector<std::vector<SimplexRef>> images);
  static SimplicialMap from_dense(SimplicialSet source, SimplicialSet target, std::vector<std::vector<int>> levels);
  static SimplicialMap identity(const SimplicialSet& x);

  const SimplicialSet& source() const { return source_; }
  const SimplicialSet& target() const { return target_; }
  int operator()(int n, int x) const { return (*levels_)[n][x]; }
  const std::vector<int>& level(int n) const { return (*levels_)[n]; }
  SimplexRef image(GeneratorId g) const;
  /// True if every level is a bijection.
  bool is_isomorphism() const;

  friend bool operator==(const SimplicialMap& a, const SimplicialMap& b);

 private:
  SimplicialSet source_;
  SimplicialSet target_;
  std::shared_ptr<const std::vector<std::vector<int>>> levels_;
};

/// outer o inner.
SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner);

/// Four sets and maps top->right, top->left, right->corner, left->corner forming a commuting square.
struct HomotopySquare {
  SimplicialMap top_right;    // initial -> right
  SimplicialMap top_left;     // initial -> left
  SimplicialMap right_down;   // right -> corner
  SimplicialMap left_down;    // left -> corner

  /// Throws InvalidObject if the square does not commute simplex-wise.
  void validate() const;
};

// ---------------------------------------------------------------------------

template <class NameFn>
Compressed compress(const LevelwiseSet& levels, NameFn&& name, const Budget& budget) {
  std::vector<std::vector<std::string>> names(levels.truncation + 1);
  std::vector<std::vector<char>> named(levels.truncation + 1);
  // Names are produced lazily: only nondegenerate simplices need them, but
  // deciding degeneracy happens inside compress_impl, so we pass a filler.
  for (int n = 0; n <= levels.truncation; ++n) {
    names[n].resize(levels.sizes[n]);
    named[n].assign(levels.sizes[n], 0);
    for (std::size_t x = 0; x < levels.sizes[n]; ++x) {
      bool degenerate = false;
      if (n >= 1) {
        for (int i = 0; i < n && !degenerate; ++i) {
          int y = levels.faces[n][i][x];
          if (levels.degens[n - 1][i][y] == static_cast<int>(x)) degenerate = true;
        }
      }
      if (!degenerate) {
        names[n][x] = name(n, static_cast<int>(x));
        named[n][x] = 1;
      }
    }
  }
  return compress_impl(levels, names, named, budget);
}

}  // namespace segal
