#include "segal/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace segal {

namespace {

std::vector<int> descending_word(int k) {
  std::vector<int> w;
  for (int j = k - 1; j >= 0; --j) w.push_back(j);
  return w;
}

std::string chain_name(const Poset& p, const std::vector<int>& c) {
  std::string s = "[";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += ",";
    s += p.names[c[k]];
  }
  return s + "]";
}

}  // namespace

Poset Poset::chain(int n) {
  Poset p;
  p.size = n + 1;
  p.leq.assign(static_cast<std::size_t>(p.size) * p.size, 0);
  for (int a = 0; a <= n; ++a) {
    p.names.push_back(std::to_string(a));
    for (int b = a; b <= n; ++b) p.leq[static_cast<std::size_t>(a) * p.size + b] = 1;
  }
  return p;
}

Poset Poset::product(const Poset& a, const Poset& b) {
  Poset p;
  p.size = a.size * b.size;
  p.leq.assign(static_cast<std::size_t>(p.size) * p.size, 0);
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < b.size; ++y) p.names.push_back("(" + a.names[x] + "," + b.names[y] + ")");
  for (int u = 0; u < p.size; ++u)
    for (int v = 0; v < p.size; ++v)
      p.leq[static_cast<std::size_t>(u) * p.size + v] = a.le(u / b.size, v / b.size) && b.le(u % b.size, v % b.size);
  return p;
}

Poset Poset::nonempty_subsets(int n) {
  // Element k encodes the subset with bitmask k+1.
  Poset p;
  p.size = (1 << (n + 1)) - 1;
  p.leq.assign(static_cast<std::size_t>(p.size) * p.size, 0);
  for (int u = 0; u < p.size; ++u) {
    int mu = u + 1;
    std::string nm = "{";
    bool first = true;
    for (int b = 0; b <= n; ++b)
      if (mu & (1 << b)) {
        if (!first) nm += ",";
        nm += std::to_string(b);
        first = false;
      }
    p.names.push_back(nm + "}");
    for (int v = 0; v < p.size; ++v) {
      int mv = v + 1;
      p.leq[static_cast<std::size_t>(u) * p.size + v] = (mu & mv) == mu;
    }
  }
  return p;
}

SimplexRef Nerve::ref_of(const std::vector<int>& c) const {
  std::vector<int> strict;
  std::vector<int> word;
  for (int j = static_cast<int>(c.size()) - 2; j >= 0; --j)
    if (c[j] == c[j + 1]) word.push_back(j);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (k == 0 || c[k] != c[k - 1]) strict.push_back(c[k]);
  auto it = chain_index.find(strict);
  if (it == chain_index.end()) throw std::out_of_range("chain is not a simplex of this nerve");
  return {word, it->second};
}

Nerve nerve(const Poset& p, int truncation, int max_dim, const std::function<bool(const std::vector<int>&)>& keep) {
  if (max_dim < 0 || max_dim > truncation) max_dim = truncation;
  Nerve nv;
  nv.chains.assign(truncation + 1, {});
  std::vector<int> cur;
  // Chains are produced in lexicographic order of their element sequences.
  std::vector<std::vector<std::vector<int>>> all(max_dim + 1);
  auto rec = [&](auto&& self) -> void {
    int k = static_cast<int>(cur.size()) - 1;
    if (k >= 0) all[k].push_back(cur);
    if (k == max_dim) return;
    for (int b = 0; b < p.size; ++b) {
      if (!cur.empty() && !p.lt(cur.back(), b)) continue;
      cur.push_back(b);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  SimplicialSet::Presentation pr;
  pr.truncation = truncation;
  pr.names.resize(truncation + 1);
  pr.faces.resize(truncation + 1);
  for (int k = 0; k <= max_dim; ++k) {
    std::sort(all[k].begin(), all[k].end());
    for (auto& c : all[k]) {
      if (keep && !keep(c)) continue;
      GeneratorId g{k, static_cast<int>(nv.chains[k].size())};
      nv.chain_index.emplace(c, g);
      pr.names[k].push_back(chain_name(p, c));
      std::vector<SimplexRef> fs;
      if (k >= 1) {
        for (int i = 0; i <= k; ++i) {
          std::vector<int> f = c;
          f.erase(f.begin() + i);
          auto it = nv.chain_index.find(f);
          if (it == nv.chain_index.end()) throw InvalidObject({"kept chains are not closed under faces"});
          fs.push_back({{}, it->second});
        }
      }
      pr.faces[k].push_back(std::move(fs));
      nv.chains[k].push_back(c);
    }
  }
  nv.set = SimplicialSet::from_presentation(std::move(pr));
  return nv;
}

SimplicialMap nerve_map(const Nerve& source, const Nerve& target, const std::vector<int>& element_map) {
  const int N = source.set.truncation();
  std::vector<std::vector<SimplexRef>> images(N + 1);
  for (int d = 0; d <= N; ++d)
    for (const auto& c : source.chains[d]) {
      std::vector<int> img;
      for (int e : c) img.push_back(element_map.at(e));
      images[d].push_back(target.ref_of(img));
    }
  return SimplicialMap::from_images(source.set, target.set, std::move(images));
}

SimplicialSet point(int truncation) { return discrete(1, truncation, "*"); }

SimplicialSet discrete(int points, int truncation, const std::string& prefix) {
  SimplicialSet::Presentation p;
  p.truncation = truncation;
  p.names.resize(truncation + 1);
  p.faces.resize(truncation + 1);
  for (int k = 0; k < points; ++k) {
    p.names[0].push_back(points == 1 && prefix == "*" ? "*" : prefix + std::to_string(k));
    p.faces[0].push_back({});
  }
  return SimplicialSet::from_presentation(std::move(p));
}

SimplicialSet delta(int n, int truncation) {
  if (n < 0) throw std::out_of_range("negative simplex dimension");
  return nerve(Poset::chain(n), truncation).set;
}

SimplicialSet boundary(int n, int truncation) {
  if (n < 1) throw std::out_of_range("boundary needs n >= 1");
  return nerve(Poset::chain(n), truncation, -1, [n](const std::vector<int>& c) {
           return static_cast<int>(c.size()) < n + 1;
         }).set;
}

SimplicialSet horn(int n, int i, int truncation) {
  if (n < 1) throw std::out_of_range("horn needs n >= 1");
  if (i < 0 || i > n) throw std::out_of_range("horn index out of range");
  return nerve(Poset::chain(n), truncation, -1, [n, i](const std::vector<int>& c) {
           if (static_cast<int>(c.size()) == n + 1) return false;
           if (static_cast<int>(c.size()) == n && std::find(c.begin(), c.end(), i) == c.end()) return false;
           return true;
         }).set;
}

SimplicialSet circle(int truncation) {
  SimplicialSet::Presentation p;
  p.truncation = truncation;
  p.names.resize(truncation + 1);
  p.faces.resize(truncation + 1);
  p.names[0] = {"v"};
  p.faces[0] = {{}};
  if (truncation >= 1) {
    p.names[1] = {"e"};
    p.faces[1] = {{SimplexRef{{}, {0, 0}}, SimplexRef{{}, {0, 0}}}};
  }
  return SimplicialSet::from_presentation(std::move(p));
}

SimplicialSet basic_complex(BasicKind kind, int n, int i, int truncation) {
  switch (kind) {
    case BasicKind::Boundary:
      return boundary(n, truncation);
    case BasicKind::Horn:
      return horn(n, i, truncation);
    case BasicKind::Circle:
      return circle(truncation);
  }
  throw std::invalid_argument("unknown complex kind");
}

SimplicialSet skeleton(const SimplicialSet& x, int n) {
  SimplicialSet::Presentation p = x.presentation();
  for (int d = n + 1; d <= p.truncation; ++d) {
    p.names[d].clear();
    p.faces[d].clear();
  }
  return SimplicialSet::from_presentation(std::move(p));
}

SimplicialMap skeleton_inclusion(const SimplicialSet& sk, const SimplicialSet& x) {
  std::vector<std::vector<SimplexRef>> images(sk.truncation() + 1);
  for (int d = 0; d <= sk.truncation(); ++d)
    for (int g = 0; g < sk.generator_count(d); ++g) {
      auto id = x.find_generator(sk.generator_name({d, g}));
      if (!id) throw InvalidObject({"skeleton generator missing from the ambient set"});
      images[d].push_back({{}, *id});
    }
  return SimplicialMap::from_images(sk, x, std::move(images));
}

SimplicialSet disjoint_union(const SimplicialSet& a, const SimplicialSet& b) {
  int N = std::min(a.truncation(), b.truncation());
  SimplicialSet::Presentation p;
  p.truncation = N;
  p.names.resize(N + 1);
  p.faces.resize(N + 1);
  for (int d = 0; d <= N; ++d) {
    for (int g = 0; g < a.generator_count(d); ++g) {
      p.names[d].push_back("L." + a.generator_name({d, g}));
      std::vector<SimplexRef> fs;
      for (int i = 0; d >= 1 && i <= d; ++i) fs.push_back(a.generator_face({d, g}, i));
      p.faces[d].push_back(std::move(fs));
    }
    int shift = a.generator_count(d);
    for (int g = 0; g < b.generator_count(d); ++g) {
      p.names[d].push_back("R." + b.generator_name({d, g}));
      std::vector<SimplexRef> fs;
      for (int i = 0; d >= 1 && i <= d; ++i) {
        SimplexRef r = b.generator_face({d, g}, i);
        r.generator.index += a.generator_count(r.generator.dim);
        fs.push_back(std::move(r));
      }
      (void)shift;
      p.faces[d].push_back(std::move(fs));
    }
  }
  return SimplicialSet::from_presentation(std::move(p));
}

SimplicialSet truncate(const SimplicialSet& x, int truncation) {
  if (truncation > x.truncation()) throw std::out_of_range("cannot raise the truncation");
  SimplicialSet::Presentation p = x.presentation();
  p.truncation = truncation;
  p.names.resize(truncation + 1);
  p.faces.resize(truncation + 1);
  return SimplicialSet::from_presentation(std::move(p));
}

SimplicialMap truncate(const SimplicialMap& f, int truncation) {
  std::vector<std::vector<int>> levels;
  for (int n = 0; n <= truncation; ++n) levels.push_back(f.level(n));
  return SimplicialMap::from_dense(truncate(f.source(), truncation), truncate(f.target(), truncation),
                                   std::move(levels));
}

SimplicialMap to_point(const SimplicialSet& x) { return constant_map(x, point(x.truncation()), 0); }

SimplicialMap constant_map(const SimplicialSet& x, const SimplicialSet& y, int vertex) {
  std::vector<std::vector<SimplexRef>> images(x.truncation() + 1);
  for (int d = 0; d <= x.truncation(); ++d)
    images[d].assign(x.generator_count(d), SimplexRef{descending_word(d), GeneratorId{0, vertex}});
  return SimplicialMap::from_images(x, y, std::move(images));
}

}  // namespace segal
