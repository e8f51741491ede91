#include "segal/quotient.hpp"

#include <deque>
#include <numeric>
#include <tuple>

namespace segal {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  // Keeps the smaller index as root.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

QuotientSet quotient_dense(const SimplicialSet& x, const std::vector<std::vector<std::pair<int, int>>>& pairs,
                           const Budget& budget) {
  const int N = x.truncation();
  std::vector<UnionFind> uf;
  for (int n = 0; n <= N; ++n) uf.emplace_back(x.size(n));
  std::deque<std::tuple<int, int, int>> work;
  auto unite = [&](int n, int a, int b) {
    if (uf[n].unite(a, b)) work.emplace_back(n, a, b);
  };
  for (int n = 0; n < static_cast<int>(pairs.size()) && n <= N; ++n)
    for (auto [a, b] : pairs[n]) {
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= x.size(n) || static_cast<std::size_t>(b) >= x.size(n))
        throw InvalidObject({"quotient relation refers to a missing simplex"});
      unite(n, a, b);
    }
  while (!work.empty()) {
    auto [n, a, b] = work.front();
    work.pop_front();
    for (int i = 0; n >= 1 && i <= n; ++i) unite(n - 1, x.face(n, i, a), x.face(n, i, b));
    for (int i = 0; n < N && i <= n; ++i) unite(n + 1, x.degeneracy(n, i, a), x.degeneracy(n, i, b));
  }

  LevelwiseSet lv;
  lv.truncation = N;
  lv.sizes.assign(N + 1, 0);
  lv.faces.assign(N + 1, {});
  lv.degens.assign(N + 1, {});
  std::vector<std::vector<int>> cls(N + 1), rep(N + 1);
  for (int n = 0; n <= N; ++n) {
    cls[n].assign(x.size(n), -1);
    for (std::size_t s = 0; s < x.size(n); ++s) {
      int r = uf[n].find(static_cast<int>(s));
      if (cls[n][r] < 0) {
        cls[n][r] = static_cast<int>(rep[n].size());
        rep[n].push_back(r);
      }
      cls[n][s] = cls[n][r];
    }
    lv.sizes[n] = rep[n].size();
  }
  for (int n = 0; n <= N; ++n) {
    if (n >= 1) {
      lv.faces[n].assign(n + 1, std::vector<int>(lv.sizes[n]));
      for (int i = 0; i <= n; ++i)
        for (std::size_t c = 0; c < lv.sizes[n]; ++c) lv.faces[n][i][c] = cls[n - 1][x.face(n, i, rep[n][c])];
    }
    if (n < N) {
      lv.degens[n].assign(n + 1, std::vector<int>(lv.sizes[n]));
      for (int i = 0; i <= n; ++i)
        for (std::size_t c = 0; c < lv.sizes[n]; ++c) lv.degens[n][i][c] = cls[n + 1][x.degeneracy(n, i, rep[n][c])];
    }
  }
  Compressed comp = compress(lv, [&](int n, int c) { return x.simplex_name(n, rep[n][c]); }, budget);

  QuotientSet out;
  out.set = comp.set;
  out.class_of.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    out.class_of[n].resize(x.size(n));
    for (std::size_t s = 0; s < x.size(n); ++s) out.class_of[n][s] = comp.relabel[n][cls[n][s]];
  }
  out.projection = SimplicialMap::from_dense(x, out.set, out.class_of);
  return out;
}

QuotientSet quotient(const SimplicialSet& x, const std::vector<std::pair<std::string, std::string>>& pairs,
                     const Budget& budget) {
  std::vector<std::string> errors;
  std::vector<std::vector<std::pair<int, int>>> dense(x.truncation() + 1);
  for (const auto& [a, b] : pairs) {
    auto ga = x.find_generator(a);
    auto gb = x.find_generator(b);
    if (!ga) errors.push_back("unknown generator '" + a + "'");
    if (!gb) errors.push_back("unknown generator '" + b + "'");
    if (!ga || !gb) continue;
    if (ga->dim != gb->dim) {
      errors.push_back("cannot identify '" + a + "' with '" + b + "' of a different dimension");
      continue;
    }
    dense[ga->dim].emplace_back(x.index_of(*ga), x.index_of(*gb));
  }
  if (!errors.empty()) throw InvalidObject(std::move(errors));
  return quotient_dense(x, dense, budget);
}

}  // namespace segal
