#include "segal/homology.hpp"

#include <numeric>
#include <stdexcept>

namespace segal {

namespace {

// Dense index of each nondegenerate k-simplex among the generators of degree k.
std::vector<int> generator_slots(const SimplicialSet& x, int k) {
  std::vector<int> slot(x.size(k), -1);
  for (int g = 0; g < x.generator_count(k); ++g) slot[x.index_of(GeneratorId{k, g})] = g;
  return slot;
}

}  // namespace

void ChainComplex::assert_square_zero() const {
  for (int k = 2; k <= truncation; ++k) {
    const SparseMatrix& a = boundary[k - 1];
    const SparseMatrix& b = boundary[k];
    for (int c = 0; c < b.cols; ++c) {
      std::map<int, Integer> acc;
      for (const auto& [mid, v] : b.column[c])
        for (const auto& [r, w] : a.column[mid]) acc[r] += v * w;
      for (const auto& [r, v] : acc)
        if (v != 0) throw std::logic_error("boundary composite d" + std::to_string(k - 1) + " d" + std::to_string(k) + " is nonzero");
    }
  }
}

ChainComplex normalized_chains(const SimplicialSet& x, int truncation) {
  const int N = truncation < 0 ? x.truncation() : std::min(truncation, x.truncation());
  ChainComplex c;
  c.truncation = N;
  c.ranks.resize(N + 1);
  c.boundary.resize(N + 1);
  std::vector<std::vector<int>> slots(N + 1);
  for (int k = 0; k <= N; ++k) {
    c.ranks[k] = x.generator_count(k);
    slots[k] = generator_slots(x, k);
  }
  for (int k = 1; k <= N; ++k) {
    SparseMatrix m(static_cast<int>(c.ranks[k - 1]), static_cast<int>(c.ranks[k]));
    for (int g = 0; g < x.generator_count(k); ++g) {
      int s = x.index_of(GeneratorId{k, g});
      for (int i = 0; i <= k; ++i) {
        int row = slots[k - 1][x.face(k, i, s)];
        if (row >= 0) m.add(row, g, i % 2 == 0 ? 1 : -1);
      }
    }
    c.boundary[k] = std::move(m);
  }
  return c;
}

ChainComplex mapping_cone(const SimplicialMap& f, int truncation) {
  const SimplicialSet& x = f.source();
  const SimplicialSet& y = f.target();
  int N = std::min(x.truncation(), y.truncation());
  if (truncation >= 0) N = std::min(N, truncation);
  ChainComplex cx = normalized_chains(x, N);
  ChainComplex cy = normalized_chains(y, N);
  // cone_k = C_{k-1}X (first) + C_k Y (second); d(a, b) = (-da, f a + db).
  ChainComplex c;
  c.truncation = N;
  c.ranks.resize(N + 1);
  c.boundary.resize(N + 1);
  auto xr = [&](int k) -> int { return k < 0 ? 0 : static_cast<int>(cx.ranks[k]); };
  for (int k = 0; k <= N; ++k) c.ranks[k] = xr(k - 1) + cy.ranks[k];
  std::vector<std::vector<int>> yslots(N + 1);
  for (int k = 0; k <= N; ++k) yslots[k] = generator_slots(y, k);
  for (int k = 1; k <= N; ++k) {
    SparseMatrix m(static_cast<int>(c.ranks[k - 1]), static_cast<int>(c.ranks[k]));
    const int xo_src = xr(k - 1), xo_tgt = xr(k - 2);
    // -d on the X part (X degree k-1 -> k-2).
    if (k >= 2)
      for (int col = 0; col < xr(k - 1); ++col)
        for (const auto& [r, v] : cx.boundary[k - 1].column[col]) m.add(r, col, -v);
    // f on the X part (X degree k-1 -> Y degree k-1).
    for (int g = 0; g < x.generator_count(k - 1); ++g) {
      int img = f(k - 1, x.index_of(GeneratorId{k - 1, g}));
      int row = yslots[k - 1][img];
      if (row >= 0) m.add(xo_tgt + row, g, 1);
    }
    // d on the Y part.
    for (int col = 0; col < static_cast<int>(cy.ranks[k]); ++col)
      for (const auto& [r, v] : cy.boundary[k].column[col]) m.add(xo_tgt + r, xo_src + col, v);
    c.boundary[k] = std::move(m);
  }
  return c;
}

bool HomologySignature::matches(const HomologySignature& o, int up_to) const {
  int top = up_to < 0 ? std::min(truncation, o.truncation) - 1 : up_to;
  for (int k = 0; k <= top; ++k) {
    if (k >= static_cast<int>(groups.size()) || k >= static_cast<int>(o.groups.size())) return false;
    if (!(groups[k] == o.groups[k])) return false;
  }
  return true;
}

std::string HomologySignature::to_string(int up_to) const {
  int top = up_to < 0 ? truncation - 1 : std::min(up_to, static_cast<int>(groups.size()) - 1);
  std::string s;
  for (int k = 0; k <= top; ++k) {
    if (k) s += "; ";
    const auto& g = groups[k];
    std::string part;
    if (g.rank == 1) part = "Z";
    if (g.rank > 1) part = "Z^" + std::to_string(g.rank);
    for (const auto& t : g.torsion) part += (part.empty() ? "" : "+") + ("Z/" + t.str());
    s += part.empty() ? "0" : part;
  }
  return s;
}

HomologySignature homology(const ChainComplex& c) {
  const int N = c.truncation;
  std::vector<ElementaryDivisors> ed(N + 2);
  for (int k = 1; k <= N; ++k) ed[k] = elementary_divisors(c.boundary[k]);
  HomologySignature s;
  s.truncation = N;
  for (int k = 0; k <= N; ++k) {
    HomologyGroup g;
    g.degree = k;
    std::size_t out_rank = k >= 1 ? ed[k].rank : 0;
    std::size_t in_rank = k + 1 <= N ? ed[k + 1].rank : 0;
    g.rank = c.ranks[k] - out_rank - in_rank;
    if (k + 1 <= N) g.torsion = ed[k + 1].torsion;
    g.truncation_unsafe = k == N;
    s.groups.push_back(std::move(g));
  }
  return s;
}

HomologySignature homology(const SimplicialSet& x, int truncation) {
  return homology(normalized_chains(x, truncation));
}

json to_json(const HomologyGroup& g) {
  json t = json::array();
  for (const auto& d : g.torsion) t.push_back(std::stoll(d.str()));
  json j{{"degree", g.degree}, {"rank", g.rank}, {"torsion", t}};
  if (g.truncation_unsafe) j["truncation_unsafe"] = true;
  return j;
}

json to_json(const HomologySignature& s) {
  json a = json::array();
  for (const auto& g : s.groups) a.push_back(to_json(g));
  return a;
}

std::vector<int> components(const SimplicialSet& x) {
  const int v = static_cast<int>(x.size(0));
  std::vector<int> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  if (x.truncation() >= 1)
    for (int g = 0; g < x.generator_count(1); ++g) {
      int e = x.index_of(GeneratorId{1, g});
      int a = find(x.face(1, 0, e)), b = find(x.face(1, 1, e));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> label(v, -1), out(v);
  int next = 0;
  for (int a = 0; a < v; ++a) {
    int r = find(a);
    if (label[r] < 0) label[r] = next++;
    out[a] = label[r];
  }
  return out;
}

std::size_t pi0(const SimplicialSet& x) {
  auto c = components(x);
  std::size_t n = 0;
  for (int l : c) n = std::max<std::size_t>(n, l + 1);
  return n;
}

}  // namespace segal
