#include "segal/fpgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

namespace segal {

Word free_reduce(const Word& w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

namespace {

Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  std::size_t a = 0, b = w.size();
  while (b - a >= 2 && w[a] == -w[b - 1]) {
    ++a;
    --b;
  }
  return Word(w.begin() + a, w.begin() + b);
}

void tidy(FpGroup& g) {
  std::set<Word> seen;
  std::vector<Word> rel;
  for (auto& r : g.relators) {
    Word c = cyclic_reduce(r);
    if (c.empty()) continue;
    if (seen.insert(c).second) rel.push_back(std::move(c));
  }
  g.relators = std::move(rel);
}

}  // namespace

FpGroup simplify(const FpGroup& input) {
  FpGroup g = input;
  tidy(g);
  constexpr std::size_t kMaxLength = 20000;
  for (;;) {
    // Shortest relator in which some generator occurs exactly once.
    int best_r = -1, best_gen = -1;
    for (int r = 0; r < static_cast<int>(g.relators.size()); ++r) {
      if (best_r >= 0 && g.relators[r].size() >= g.relators[best_r].size()) continue;
      std::vector<int> count(g.rank(), 0);
      for (int l : g.relators[r]) ++count[std::abs(l) - 1];
      for (int k = 0; k < g.rank(); ++k)
        if (count[k] == 1) {
          best_r = r;
          best_gen = k;
          break;
        }
    }
    if (best_r < 0) break;
    const Word& r = g.relators[best_r];
    std::size_t pos = 0;
    while (std::abs(r[pos]) - 1 != best_gen) ++pos;
    int eps = r[pos] > 0 ? 1 : -1;
    Word u(r.begin(), r.begin() + pos), v(r.begin() + pos + 1, r.end());
    // r = u x v = 1 with x = g^eps, so x = u^-1 v^-1.
    Word x = inverse_word(u);
    Word vi = inverse_word(v);
    x.insert(x.end(), vi.begin(), vi.end());
    Word gen_value = eps > 0 ? x : inverse_word(x);
    Word gen_inverse = inverse_word(gen_value);
    std::vector<Word> rel;
    std::size_t total = 0;
    for (int k = 0; k < static_cast<int>(g.relators.size()); ++k) {
      if (k == best_r) continue;
      Word w;
      for (int l : g.relators[k]) {
        if (std::abs(l) - 1 == best_gen) {
          const Word& sub = l > 0 ? gen_value : gen_inverse;
          w.insert(w.end(), sub.begin(), sub.end());
        } else {
          w.push_back(l);
        }
      }
      total += w.size();
      rel.push_back(std::move(w));
    }
    if (total > kMaxLength) break;
    // Renumber the generators above best_gen.
    for (auto& w : rel)
      for (int& l : w) {
        int k = std::abs(l) - 1;
        if (k > best_gen) l = l > 0 ? l - 1 : l + 1;
      }
    g.generators.erase(g.generators.begin() + best_gen);
    g.relators = std::move(rel);
    tidy(g);
  }
  return g;
}

std::optional<std::size_t> group_order(const FpGroup& g, std::size_t max_cosets) {
  const int cols = 2 * g.rank();
  if (cols == 0) return 1;
  auto col_of = [](int l) { return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0); };
  std::vector<std::vector<int>> rels;
  for (const auto& r : g.relators) {
    std::vector<int> c;
    for (int l : r) c.push_back(col_of(l));
    rels.push_back(std::move(c));
  }
  std::vector<std::vector<int>> table;
  std::vector<int> parent;
  auto new_coset = [&]() -> int {
    if (table.size() >= max_cosets) return -1;
    table.emplace_back(cols, -1);
    parent.push_back(static_cast<int>(parent.size()));
    return static_cast<int>(table.size()) - 1;
  };
  auto rep = [&](int c) {
    int r = c;
    while (parent[r] != r) r = parent[r];
    while (parent[c] != r) {
      int n = parent[c];
      parent[c] = r;
      c = n;
    }
    return r;
  };
  std::vector<int> queue;
  auto merge = [&](int k, int l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent[l] = k;
    queue.push_back(l);
  };
  auto coincidence = [&](int a, int b) {
    queue.clear();
    merge(a, b);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int e = queue[q];
      for (int x = 0; x < cols; ++x) {
        int f = table[e][x];
        if (f < 0) continue;
        table[f][x ^ 1] = -1;
        int e1 = rep(e), f1 = rep(f);
        if (table[e1][x] >= 0)
          merge(f1, table[e1][x]);
        else if (table[f1][x ^ 1] >= 0)
          merge(e1, table[f1][x ^ 1]);
        else {
          table[e1][x] = f1;
          table[f1][x ^ 1] = e1;
        }
      }
    }
  };
  bool overflow = false;
  auto define = [&](int c, int x) {
    int d = new_coset();
    if (d < 0) {
      overflow = true;
      return;
    }
    table[c][x] = d;
    table[d][x ^ 1] = c;
  };
  auto scan_and_fill = [&](int c, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && table[f][w[i]] >= 0) f = table[f][w[i++]];
      if (i > j) {
        if (f != c) coincidence(f, c);
        return;
      }
      while (j >= i && table[b][w[j] ^ 1] >= 0) b = table[b][w[j--] ^ 1];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table[f][w[i]] = b;
        table[b][w[i] ^ 1] = f;
        return;
      }
      define(f, w[i]);
      if (overflow) return;
    }
  };
  new_coset();
  for (std::size_t c = 0; c < table.size(); ++c) {
    if (parent[c] != static_cast<int>(c)) continue;
    for (const auto& r : rels) {
      scan_and_fill(static_cast<int>(c), r);
      if (overflow) return std::nullopt;
      if (parent[c] != static_cast<int>(c)) break;
    }
    if (parent[c] != static_cast<int>(c)) continue;
    for (int x = 0; x < cols; ++x)
      if (table[c][x] < 0) {
        define(static_cast<int>(c), x);
        if (overflow) return std::nullopt;
      }
  }
  std::size_t live = 0;
  for (std::size_t c = 0; c < table.size(); ++c)
    if (parent[c] == static_cast<int>(c)) ++live;
  return live;
}

namespace {

// Backtracking over generator images; relators are checked once all their letters are assigned.
void for_each_assignment(const FpGroup& g, const FiniteGroup& h, const std::function<bool(const std::vector<int>&)>& visit) {
  const int k = g.rank();
  std::vector<std::vector<const Word*>> ready(k + 1);
  for (const auto& r : g.relators) {
    int top = 0;
    for (int l : r) top = std::max(top, std::abs(l));
    ready[top].push_back(&r);
  }
  std::vector<int> img(k, 0);
  auto holds = [&](const Word& w) {
    int acc = h.identity();
    for (int l : w) {
      int x = img[std::abs(l) - 1];
      acc = h.mul(acc, l > 0 ? x : h.inv(x));
    }
    return acc == h.identity();
  };
  for (const Word* w : ready[0])
    if (!holds(*w)) return;
  bool stop = false;
  auto rec = [&](auto&& self, int i) -> void {
    if (stop) return;
    if (i == k) {
      if (!visit(img)) stop = true;
      return;
    }
    for (int a = 0; a < h.order() && !stop; ++a) {
      img[i] = a;
      bool ok = true;
      for (const Word* w : ready[i + 1])
        if (!holds(*w)) {
          ok = false;
          break;
        }
      if (ok) self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

std::size_t hom_count(const FpGroup& g, const FiniteGroup& h) {
  std::size_t n = 0;
  for_each_assignment(g, h, [&](const std::vector<int>&) {
    ++n;
    return true;
  });
  return n;
}

std::optional<std::vector<int>> surjection_onto(const FpGroup& g, const FiniteGroup& h) {
  std::optional<std::vector<int>> out;
  for_each_assignment(g, h, [&](const std::vector<int>& img) {
    if (static_cast<int>(h.generated_by(img).size()) == h.order()) {
      out = img;
      return false;
    }
    return true;
  });
  return out;
}

Abelianization abelianization(const FpGroup& g) {
  SparseMatrix m(static_cast<int>(g.relators.size()), g.rank());
  for (int r = 0; r < static_cast<int>(g.relators.size()); ++r)
    for (int l : g.relators[r]) m.add(r, std::abs(l) - 1, l > 0 ? 1 : -1);
  ElementaryDivisors ed = elementary_divisors(m);
  return {static_cast<std::size_t>(g.rank()) - ed.rank, ed.torsion};
}

namespace {

FpGroup table_presentation(const FiniteGroup& g) {
  FpGroup p;
  for (int a = 0; a < g.order(); ++a) p.generators.push_back(g.name(a));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) p.relators.push_back({a + 1, b + 1, -(g.mul(a, b) + 1)});
  return p;
}

}  // namespace

Abelianization abelianization(const FiniteGroup& g) { return abelianization(table_presentation(g)); }

std::size_t hom_count(const FiniteGroup& g, const FiniteGroup& h) {
  // Greedy generating set; each element is a word in it via a BFS tree.
  std::vector<int> gens;
  while (static_cast<int>(g.generated_by(gens).size()) < g.order()) {
    auto sub = g.generated_by(gens);
    std::vector<char> in(g.order(), 0);
    for (int x : sub) in[x] = 1;
    for (int a = 0; a < g.order(); ++a)
      if (!in[a]) {
        gens.push_back(a);
        break;
      }
  }
  std::vector<int> from(g.order(), -1), via(g.order(), -1), order{g.identity()};
  from[g.identity()] = g.identity();
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int s = 0; s < static_cast<int>(gens.size()); ++s) {
      int y = g.mul(order[k], gens[s]);
      if (from[y] < 0) {
        from[y] = order[k];
        via[y] = s;
        order.push_back(y);
      }
    }
  std::size_t count = 0;
  std::vector<int> img(gens.size(), 0), phi(g.order());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == gens.size()) {
      phi[g.identity()] = h.identity();
      for (std::size_t k = 1; k < order.size(); ++k) {
        int y = order[k];
        phi[y] = h.mul(phi[from[y]], img[via[y]]);
      }
      if (is_homomorphism(g, h, phi)) ++count;
      return;
    }
    for (int a = 0; a < h.order(); ++a) {
      img[i] = a;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return count;
}

std::string word_to_string(const FpGroup& g, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += "*";
    s += g.generators[std::abs(w[k]) - 1];
    if (w[k] < 0) s += "^-1";
  }
  return s;
}

}  // namespace segal
