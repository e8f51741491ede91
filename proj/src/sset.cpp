#include "segal/sset.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "segal/hash_util.hpp"

namespace segal {

InvalidObject::InvalidObject(std::vector<std::string> violations)
    : std::runtime_error([&] {
        std::string msg = "invalid object";
        if (!violations.empty()) msg += ": " + violations.front();
        if (violations.size() > 1) msg += " (+" + std::to_string(violations.size() - 1) + " more)";
        return msg;
      }()),
      violations_(std::move(violations)) {}

namespace {

// k-subsets of {0..n-1} in colex order, each stored as a descending degeneracy word.
const std::vector<std::vector<int>>& subsets(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({n, k});
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(binomial(n, k)));
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      long long rank = 0;
      for (int i = 0; i < k; ++i) rank += binomial(cur[i], i + 1);
      std::vector<int> word(cur.rbegin(), cur.rend());
      out[static_cast<std::size_t>(rank)] = std::move(word);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return cache.emplace(std::make_pair(n, k), std::move(out)).first->second;
}

long long colex_rank(const std::vector<int>& descending) {
  long long rank = 0;
  int k = static_cast<int>(descending.size());
  for (int i = 0; i < k; ++i) rank += binomial(descending[k - 1 - i], i + 1);
  return rank;
}

}  // namespace

struct SimplicialSet::Data {
  Presentation p;
  std::vector<int> flat_offset;
  std::unordered_map<std::string, GeneratorId> by_name;
  std::vector<std::vector<std::size_t>> level_offset;  // [n][m]
  std::vector<std::size_t> sizes;
  std::vector<std::vector<std::vector<int>>> faces;
  std::vector<std::vector<std::vector<int>>> degens;

  using BoundaryIndex = std::unordered_map<std::vector<int>, std::vector<int>, VecHash>;
  mutable std::mutex mu;
  mutable std::vector<std::unique_ptr<BoundaryIndex>> boundary_index;
};

SimplicialSet::SimplicialSet() {
  Presentation p;
  p.truncation = 0;
  p.names.resize(1);
  p.faces.resize(1);
  *this = from_presentation(std::move(p));
}

SimplicialSet SimplicialSet::from_presentation(Presentation p, const Budget& budget) {
  std::vector<std::string> errors;
  if (p.truncation < 0) throw InvalidObject({"negative truncation"});
  if (p.truncation > 16) throw InvalidObject({"truncation above 16 is not supported"});
  const int N = p.truncation;
  if (static_cast<int>(p.names.size()) > N + 1) {
    for (std::size_t d = N + 1; d < p.names.size(); ++d)
      if (!p.names[d].empty()) errors.push_back("generators above the truncation in dimension " + std::to_string(d));
  }
  p.names.resize(N + 1);
  p.faces.resize(N + 1);

  auto data = std::make_shared<Data>();
  for (int d = 0; d <= N; ++d) {
    if (d == 0) {
      p.faces[0].assign(p.names[0].size(), {});
    } else if (p.faces[d].size() != p.names[d].size()) {
      errors.push_back("dimension " + std::to_string(d) + ": face table size does not match generator count");
      p.faces[d].resize(p.names[d].size());
    }
    for (std::size_t g = 0; g < p.names[d].size(); ++g) {
      const std::string& nm = p.names[d][g];
      if (nm.empty()) errors.push_back("empty generator name in dimension " + std::to_string(d));
      if (!data->by_name.emplace(nm, GeneratorId{d, static_cast<int>(g)}).second)
        errors.push_back("duplicate generator name '" + nm + "'");
    }
  }

  // Face references: existence, dimension, normal form.
  for (int d = 1; d <= N; ++d) {
    for (std::size_t g = 0; g < p.names[d].size(); ++g) {
      auto& fs = p.faces[d][g];
      const std::string& nm = p.names[d][g];
      if (static_cast<int>(fs.size()) != d + 1) {
        errors.push_back("generator '" + nm + "' has " + std::to_string(fs.size()) + " faces, expected " +
                         std::to_string(d + 1));
        continue;
      }
      for (int i = 0; i <= d; ++i) {
        const SimplexRef& r = fs[i];
        const auto& gid = r.generator;
        std::string where = "d" + std::to_string(i) + "(" + nm + ")";
        if (gid.dim < 0 || gid.dim >= d || gid.index < 0 ||
            gid.index >= static_cast<int>(p.names[gid.dim].size())) {
          errors.push_back(where + " refers to a missing generator");
          continue;
        }
        if (r.dim() != d - 1) {
          errors.push_back(where + " has dimension " + std::to_string(r.dim()) + ", expected " + std::to_string(d - 1));
          continue;
        }
        bool valid = true;
        for (std::size_t k = 0; k < r.degeneracies.size(); ++k) {
          int j = r.degeneracies[k];
          int max_j = r.dim() - 1 - static_cast<int>(k);
          if (j < 0 || j > max_j || (k > 0 && j >= r.degeneracies[k - 1])) valid = false;
        }
        if (!valid) errors.push_back(where + " has a degeneracy word that is not in normal form");
      }
    }
  }
  if (!errors.empty()) throw InvalidObject(std::move(errors));

  data->p = std::move(p);
  SimplicialSet x(data);

  // Simplicial identities on generators.
  for (int d = 2; d <= N; ++d) {
    for (std::size_t g = 0; g < data->p.names[d].size(); ++g) {
      const auto& fs = data->p.faces[d][g];
      for (int j = 1; j <= d; ++j)
        for (int i = 0; i < j; ++i) {
          SimplexRef lhs = x.face(i, fs[j]);
          SimplexRef rhs = x.face(j - 1, fs[i]);
          if (!(lhs == rhs))
            errors.push_back("generator '" + data->p.names[d][g] + "' violates d" + std::to_string(i) + "d" +
                             std::to_string(j) + " = d" + std::to_string(j - 1) + "d" + std::to_string(i));
        }
    }
  }
  if (!errors.empty()) throw InvalidObject(std::move(errors));

  // Sizes and budget.
  data->flat_offset.assign(N + 2, 0);
  for (int d = 0; d <= N; ++d)
    data->flat_offset[d + 1] = data->flat_offset[d] + static_cast<int>(data->p.names[d].size());
  data->level_offset.assign(N + 1, {});
  data->sizes.assign(N + 1, 0);
  std::size_t total = 0;
  for (int n = 0; n <= N; ++n) {
    data->level_offset[n].assign(n + 1, 0);
    std::size_t off = 0;
    for (int m = n; m >= 0; --m) {
      data->level_offset[n][m] = off;
      off += data->p.names[m].size() * static_cast<std::size_t>(binomial(n, m));
    }
    data->sizes[n] = off;
    total += off;
    if (total > budget.max_simplices)
      throw BudgetExceeded("simplicial set exceeds the budget of " + std::to_string(budget.max_simplices) +
                           " simplices at level " + std::to_string(n));
  }

  // Dense tables.
  data->faces.assign(N + 1, {});
  data->degens.assign(N + 1, {});
  for (int n = 0; n <= N; ++n) {
    if (n >= 1) {
      data->faces[n].assign(n + 1, std::vector<int>(data->sizes[n]));
      for (int i = 0; i <= n; ++i) {
        MonotoneMap cf = coface_map(n, i);
        for (std::size_t s = 0; s < data->sizes[n]; ++s)
          data->faces[n][i][s] = x.index_of(x.apply(x.simplex(n, static_cast<int>(s)), cf));
      }
    }
    if (n < N) {
      data->degens[n].assign(n + 1, std::vector<int>(data->sizes[n]));
      for (std::size_t s = 0; s < data->sizes[n]; ++s) {
        SimplexRef r = x.simplex(n, static_cast<int>(s));
        for (int i = 0; i <= n; ++i) {
          std::vector<int> word{i};
          word.insert(word.end(), r.degeneracies.begin(), r.degeneracies.end());
          data->degens[n][i][s] = x.index_of(SimplexRef{normalize_degeneracies(r.generator.dim, word), r.generator});
        }
      }
    }
  }
  data->boundary_index.resize(N + 1);
  return x;
}

int SimplicialSet::truncation() const { return data_->p.truncation; }
const SimplicialSet::Presentation& SimplicialSet::presentation() const { return data_->p; }

int SimplicialSet::generator_count(int dim) const {
  if (dim < 0 || dim > truncation()) return 0;
  return static_cast<int>(data_->p.names[dim].size());
}

std::vector<int> SimplicialSet::generator_counts() const {
  std::vector<int> c;
  for (int d = 0; d <= truncation(); ++d) c.push_back(generator_count(d));
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

int SimplicialSet::total_generators() const { return data_->flat_offset.back(); }

const std::string& SimplicialSet::generator_name(GeneratorId g) const { return data_->p.names.at(g.dim).at(g.index); }

std::optional<GeneratorId> SimplicialSet::find_generator(std::string_view name) const {
  auto it = data_->by_name.find(std::string(name));
  if (it == data_->by_name.end()) return std::nullopt;
  return it->second;
}

const SimplexRef& SimplicialSet::generator_face(GeneratorId g, int i) const {
  return data_->p.faces.at(g.dim).at(g.index).at(i);
}

int SimplicialSet::flat_index(GeneratorId g) const { return data_->flat_offset[g.dim] + g.index; }

GeneratorId SimplicialSet::from_flat_index(int k) const {
  int d = 0;
  while (data_->flat_offset[d + 1] <= k) ++d;
  return {d, k - data_->flat_offset[d]};
}

SimplexRef SimplicialSet::apply(const SimplexRef& s, const MonotoneMap& theta) const {
  for (int v : theta)
    if (v < 0 || v > s.dim()) throw std::out_of_range("operator does not apply to a simplex of this dimension");
  MonotoneMap phi = compose(degeneracy_surjection(s.generator.dim, s.degeneracies), theta);
  GeneratorId g = s.generator;
  while (true) {
    Factorization f = factor(phi);
    if (static_cast<int>(f.image.size()) == g.dim + 1) return {collapsed_indices(f.surjection), g};
    int missing = g.dim;
    for (int v = g.dim, pos = static_cast<int>(f.image.size()) - 1; v >= 0; --v) {
      if (pos >= 0 && f.image[pos] == v) {
        --pos;
        continue;
      }
      missing = v;
      break;
    }
    const SimplexRef& r = data_->p.faces[g.dim][g.index][missing];
    MonotoneMap psi = phi;
    for (int& v : psi)
      if (v > missing) --v;
    phi = compose(degeneracy_surjection(r.generator.dim, r.degeneracies), psi);
    g = r.generator;
  }
}

SimplexRef SimplicialSet::face(int i, const SimplexRef& s) const {
  if (s.dim() < 1 || i < 0 || i > s.dim()) throw std::out_of_range("face index out of range");
  return apply(s, coface_map(s.dim(), i));
}

SimplexRef SimplicialSet::degeneracy(int i, const SimplexRef& s) const {
  if (i < 0 || i > s.dim()) throw std::out_of_range("degeneracy index out of range");
  return apply(s, codegeneracy_map(s.dim(), i));
}

SimplexRef SimplicialSet::evaluate(const OperatorWord& word, const SimplexRef& s) const {
  return apply(s, word_to_map(word, s.dim()));
}

std::size_t SimplicialSet::size(int n) const {
  if (n < 0 || n > truncation()) throw std::out_of_range("level above truncation");
  return data_->sizes[n];
}

std::size_t SimplicialSet::total_size() const {
  return std::accumulate(data_->sizes.begin(), data_->sizes.end(), std::size_t{0});
}

int SimplicialSet::face(int n, int i, int x) const { return data_->faces[n][i][x]; }
int SimplicialSet::degeneracy(int n, int i, int x) const { return data_->degens[n][i][x]; }

int SimplicialSet::degenerate_by(int n, int x, const std::vector<int>& word) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (n >= truncation()) throw std::out_of_range("degeneracy leaves the truncation");
    x = data_->degens[n][*it][x];
    ++n;
  }
  return x;
}

int SimplicialSet::operator_image(int n, int x, const MonotoneMap& theta) const {
  Factorization f = factor(theta);
  // Remove the vertices outside the image, highest first, then degenerate.
  int cur = n;
  std::vector<char> keep(n + 1, 0);
  for (int v : f.image) keep.at(v) = 1;
  for (int v = n; v >= 0; --v) {
    if (!keep[v]) {
      x = data_->faces[cur][v][x];
      --cur;
    }
  }
  return degenerate_by(cur, x, collapsed_indices(f.surjection));
}

SimplexRef SimplicialSet::simplex(int n, int x) const {
  const auto& off = data_->level_offset[n];
  for (int m = n; m >= 0; --m) {
    std::size_t block = static_cast<std::size_t>(binomial(n, m));
    std::size_t count = data_->p.names[m].size() * block;
    std::size_t ux = static_cast<std::size_t>(x);
    if (ux >= off[m] && ux < off[m] + count) {
      std::size_t rel = ux - off[m];
      int g = static_cast<int>(rel / block);
      int rank = static_cast<int>(rel % block);
      return {subsets(n, n - m)[rank], GeneratorId{m, g}};
    }
  }
  throw std::out_of_range("simplex index out of range");
}

int SimplicialSet::index_of(const SimplexRef& s) const {
  int n = s.dim();
  int m = s.generator.dim;
  return static_cast<int>(data_->level_offset.at(n).at(m) +
                          static_cast<std::size_t>(s.generator.index) * static_cast<std::size_t>(binomial(n, m)) +
                          static_cast<std::size_t>(colex_rank(s.degeneracies)));
}

int SimplicialSet::index_of(GeneratorId g) const { return index_of(SimplexRef{{}, g}); }

bool SimplicialSet::is_degenerate(int n, int x) const {
  return static_cast<std::size_t>(x) >= data_->p.names[n].size();
}

std::string SimplicialSet::simplex_name(int n, int x) const {
  SimplexRef r = simplex(n, x);
  return degeneracy_prefix(r.degeneracies) + generator_name(r.generator);
}

std::vector<int> SimplicialSet::boundary(int n, int x) const {
  std::vector<int> b(n + 1);
  for (int i = 0; i <= n; ++i) b[i] = data_->faces[n][i][x];
  return b;
}

const std::vector<int>& SimplicialSet::with_boundary(int n, const std::vector<int>& faces) const {
  static const std::vector<int> kEmpty;
  const Data::BoundaryIndex* index = nullptr;
  {
    std::lock_guard lock(data_->mu);
    auto& slot = data_->boundary_index.at(n);
    if (!slot) {
      slot = std::make_unique<Data::BoundaryIndex>();
      for (std::size_t s = 0; s < data_->sizes[n]; ++s) (*slot)[boundary(n, static_cast<int>(s))].push_back(static_cast<int>(s));
    }
    index = slot.get();
  }
  auto it = index->find(faces);
  return it == index->end() ? kEmpty : it->second;
}

bool operator==(const SimplicialSet& a, const SimplicialSet& b) {
  if (a.data_ == b.data_) return true;
  const auto& p = a.data_->p;
  const auto& q = b.data_->p;
  return p.truncation == q.truncation && p.names == q.names && p.faces == q.faces;
}

Compressed compress_impl(const LevelwiseSet& levels, const std::vector<std::vector<std::string>>& names_by_level,
                         const std::vector<std::vector<char>>& named, const Budget& budget) {
  const int N = levels.truncation;
  std::size_t total = 0;
  for (int n = 0; n <= N; ++n) total += levels.sizes[n];
  if (total > budget.max_simplices)
    throw BudgetExceeded("level-wise construction exceeds the budget of " + std::to_string(budget.max_simplices) +
                         " simplices");

  SimplicialSet::Presentation p;
  p.truncation = N;
  p.names.resize(N + 1);
  p.faces.resize(N + 1);
  std::vector<std::vector<SimplexRef>> refs(N + 1);
  std::unordered_set<std::string> used;
  for (int n = 0; n <= N; ++n) {
    refs[n].resize(levels.sizes[n]);
    for (std::size_t x = 0; x < levels.sizes[n]; ++x) {
      int top = -1;
      if (n >= 1) {
        for (int i = n - 1; i >= 0; --i) {
          int y = levels.faces[n][i][x];
          if (levels.degens[n - 1][i][y] == static_cast<int>(x)) {
            top = i;
            break;
          }
        }
      }
      if (top < 0) {
        GeneratorId g{n, static_cast<int>(p.names[n].size())};
        std::string nm = named[n][x] ? names_by_level[n][x] : "#" + std::to_string(n) + "." + std::to_string(x);
        if (nm.empty() || used.count(nm)) nm += "@" + std::to_string(n);
        if (used.count(nm)) nm += "." + std::to_string(x);
        used.insert(nm);
        p.names[n].push_back(std::move(nm));
        std::vector<SimplexRef> fs;
        if (n >= 1)
          for (int i = 0; i <= n; ++i) fs.push_back(refs[n - 1][levels.faces[n][i][x]]);
        p.faces[n].push_back(std::move(fs));
        refs[n][x] = SimplexRef{{}, g};
      } else {
        const SimplexRef& r = refs[n - 1][levels.faces[n][top][x]];
        std::vector<int> word{top};
        word.insert(word.end(), r.degeneracies.begin(), r.degeneracies.end());
        refs[n][x] = SimplexRef{normalize_degeneracies(r.generator.dim, word), r.generator};
      }
    }
  }

  Compressed out{SimplicialSet::from_presentation(std::move(p), budget), {}};
  const SimplicialSet& s = out.set;
  out.relabel.resize(N + 1);
  std::vector<std::string> errors;
  for (int n = 0; n <= N; ++n) {
    if (s.size(n) != levels.sizes[n]) {
      errors.push_back("level " + std::to_string(n) + " is not generated freely by its nondegenerate simplices");
      break;
    }
    out.relabel[n].resize(levels.sizes[n]);
    std::vector<char> hit(levels.sizes[n], 0);
    for (std::size_t x = 0; x < levels.sizes[n]; ++x) {
      int idx = s.index_of(refs[n][x]);
      out.relabel[n][x] = idx;
      if (hit[idx]++) errors.push_back("level " + std::to_string(n) + ": two simplices share a normal form");
    }
  }
  if (errors.empty()) {
    for (int n = 0; n <= N && errors.size() < 16; ++n) {
      for (std::size_t x = 0; x < levels.sizes[n]; ++x) {
        int nx = out.relabel[n][x];
        for (int i = 0; n >= 1 && i <= n; ++i)
          if (s.face(n, i, nx) != out.relabel[n - 1][levels.faces[n][i][x]])
            errors.push_back("level " + std::to_string(n) + ": face d" + std::to_string(i) +
                             " violates the simplicial identities");
        for (int i = 0; n < N && i <= n; ++i)
          if (s.degeneracy(n, i, nx) != out.relabel[n + 1][levels.degens[n][i][x]])
            errors.push_back("level " + std::to_string(n) + ": degeneracy s" + std::to_string(i) +
                             " violates the simplicial identities");
        if (errors.size() >= 16) break;
      }
    }
  }
  if (!errors.empty()) throw InvalidObject(std::move(errors));
  return out;
}

// ---------------------------------------------------------------------------

SimplicialMap SimplicialMap::from_images(SimplicialSet source, SimplicialSet target,
                                         std::vector<std::vector<SimplexRef>> images) {
  std::vector<std::string> errors;
  const int N = source.truncation();
  if (target.truncation() < N) throw InvalidObject({"map target is truncated below its source"});
  images.resize(N + 1);
  for (int d = 0; d <= N; ++d) {
    if (static_cast<int>(images[d].size()) != source.generator_count(d)) {
      errors.push_back("dimension " + std::to_string(d) + ": image count does not match generator count");
      continue;
    }
    for (int g = 0; g < source.generator_count(d); ++g) {
      const SimplexRef& r = images[d][g];
      const auto& gid = r.generator;
      if (gid.dim < 0 || gid.dim > target.truncation() || gid.index < 0 ||
          gid.index >= target.generator_count(gid.dim) || r.dim() != d)
        errors.push_back("image of '" + source.generator_name({d, g}) + "' is not a " + std::to_string(d) +
                         "-simplex of the target");
    }
  }
  if (!errors.empty()) throw InvalidObject(std::move(errors));

  auto map_ref = [&](const SimplexRef& r) {
    const SimplexRef& img = images[r.generator.dim][r.generator.index];
    std::vector<int> word = r.degeneracies;
    word.insert(word.end(), img.degeneracies.begin(), img.degeneracies.end());
    return SimplexRef{normalize_degeneracies(img.generator.dim, word), img.generator};
  };
  for (int d = 1; d <= N; ++d)
    for (int g = 0; g < source.generator_count(d); ++g)
      for (int i = 0; i <= d; ++i) {
        SimplexRef lhs = target.face(i, images[d][g]);
        SimplexRef rhs = map_ref(source.generator_face({d, g}, i));
        if (!(lhs == rhs))
          errors.push_back("map does not commute with d" + std::to_string(i) + " on '" +
                           source.generator_name({d, g}) + "'");
      }
  if (!errors.empty()) throw InvalidObject(std::move(errors));

  auto levels = std::make_shared<std::vector<std::vector<int>>>(N + 1);
  for (int n = 0; n <= N; ++n) {
    (*levels)[n].resize(source.size(n));
    for (std::size_t x = 0; x < source.size(n); ++x)
      (*levels)[n][x] = target.index_of(map_ref(source.simplex(n, static_cast<int>(x))));
  }
  SimplicialMap m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.levels_ = std::move(levels);
  return m;
}

SimplicialMap SimplicialMap::from_dense(SimplicialSet source, SimplicialSet target,
                                        std::vector<std::vector<int>> levels) {
  const int N = source.truncation();
  if (target.truncation() < N) throw InvalidObject({"map target is truncated below its source"});
  std::vector<std::string> errors;
  if (static_cast<int>(levels.size()) != N + 1) throw InvalidObject({"map has the wrong number of levels"});
  for (int n = 0; n <= N; ++n) {
    if (levels[n].size() != source.size(n)) throw InvalidObject({"map level " + std::to_string(n) + " has wrong size"});
    for (int v : levels[n])
      if (v < 0 || static_cast<std::size_t>(v) >= target.size(n))
        throw InvalidObject({"map level " + std::to_string(n) + " has an out-of-range image"});
  }
  for (int n = 0; n <= N && errors.size() < 16; ++n)
    for (std::size_t x = 0; x < source.size(n); ++x) {
      int fx = levels[n][x];
      for (int i = 0; n >= 1 && i <= n; ++i)
        if (target.face(n, i, fx) != levels[n - 1][source.face(n, i, static_cast<int>(x))]) {
          errors.push_back("map does not commute with d" + std::to_string(i) + " at '" +
                           source.simplex_name(n, static_cast<int>(x)) + "'");
        }
      for (int i = 0; n < N && i <= n; ++i)
        if (target.degeneracy(n, i, fx) != levels[n + 1][source.degeneracy(n, i, static_cast<int>(x))])
          errors.push_back("map does not commute with s" + std::to_string(i) + " at '" +
                           source.simplex_name(n, static_cast<int>(x)) + "'");
      if (errors.size() >= 16) break;
    }
  if (!errors.empty()) throw InvalidObject(std::move(errors));
  SimplicialMap m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.levels_ = std::make_shared<std::vector<std::vector<int>>>(std::move(levels));
  return m;
}

SimplicialMap SimplicialMap::identity(const SimplicialSet& x) {
  auto levels = std::make_shared<std::vector<std::vector<int>>>(x.truncation() + 1);
  for (int n = 0; n <= x.truncation(); ++n) {
    (*levels)[n].resize(x.size(n));
    std::iota((*levels)[n].begin(), (*levels)[n].end(), 0);
  }
  SimplicialMap m;
  m.source_ = x;
  m.target_ = x;
  m.levels_ = std::move(levels);
  return m;
}

SimplexRef SimplicialMap::image(GeneratorId g) const {
  return target_.simplex(g.dim, (*levels_)[g.dim][source_.index_of(g)]);
}

bool SimplicialMap::is_isomorphism() const {
  if (source_.truncation() != target_.truncation()) return false;
  for (int n = 0; n <= source_.truncation(); ++n) {
    if (source_.size(n) != target_.size(n)) return false;
    std::vector<char> hit(target_.size(n), 0);
    for (int v : (*levels_)[n])
      if (hit[v]++) return false;
  }
  return true;
}

bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && *a.levels_ == *b.levels_;
}

SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner) {
  // Truncations may differ as long as the shared levels agree and inner's source fits.
  if (!(inner.target() == outer.source())) {
    const auto& p = inner.target().presentation();
    const auto& q = outer.source().presentation();
    int t = std::min(p.truncation, q.truncation);
    bool ok = inner.source().truncation() <= t;
    for (int d = 0; ok && d <= t; ++d) ok = p.names[d] == q.names[d] && p.faces[d] == q.faces[d];
    if (!ok) throw InvalidObject({"composed maps do not match"});
  }
  const int N = inner.source().truncation();
  std::vector<std::vector<int>> levels(N + 1);
  for (int n = 0; n <= N; ++n) {
    levels[n].resize(inner.source().size(n));
    for (std::size_t x = 0; x < levels[n].size(); ++x) levels[n][x] = outer(n, inner(n, static_cast<int>(x)));
  }
  return SimplicialMap::from_dense(inner.source(), outer.target(), std::move(levels));
}

void HomotopySquare::validate() const {
  std::vector<std::string> errors;
  if (!(top_right.source() == top_left.source())) errors.push_back("square legs have different sources");
  if (!(top_right.target() == right_down.source())) errors.push_back("right edge does not match");
  if (!(top_left.target() == left_down.source())) errors.push_back("left edge does not match");
  if (!(right_down.target() == left_down.target())) errors.push_back("square has two different corners");
  if (!errors.empty()) throw InvalidObject(std::move(errors));
  const SimplicialSet& a = top_right.source();
  for (int n = 0; n <= a.truncation(); ++n)
    for (std::size_t x = 0; x < a.size(n); ++x)
      if (right_down(n, top_right(n, static_cast<int>(x))) != left_down(n, top_left(n, static_cast<int>(x))))
        throw InvalidObject({"square does not commute at '" + a.simplex_name(n, static_cast<int>(x)) + "'"});
}

}  // namespace segal
