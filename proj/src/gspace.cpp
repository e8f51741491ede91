#include "segal/gspace.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "segal/constructions.hpp"

namespace segal {

namespace {

bool same_group(const SimplicialGroup& a, const SimplicialGroup& b) {
  if (a.truncation() != b.truncation()) return false;
  for (int n = 0; n <= a.truncation(); ++n)
    if (!(a.level(n) == b.level(n))) return false;
  return true;
}

// Element-level data of a G-set: compress it and carry the action over.
GSpace from_levelwise(const LevelwiseSet& lv, const std::vector<std::vector<std::string>>& names, const SimplicialGroup& g,
                      const std::vector<std::vector<std::vector<int>>>& action) {
  Compressed c = compress(lv, [&](int n, int x) { return names[n][x]; });
  std::vector<std::vector<std::vector<int>>> act(lv.truncation + 1);
  for (int n = 0; n <= lv.truncation; ++n) {
    act[n].assign(lv.sizes[n], {});
    for (std::size_t x = 0; x < lv.sizes[n]; ++x) {
      std::vector<int> row(g.level(n).order());
      for (int h = 0; h < g.level(n).order(); ++h) row[h] = c.relabel[n][action[n][x][h]];
      act[n][c.relabel[n][x]] = std::move(row);
    }
  }
  return GSpace::make(c.set, g, std::move(act));
}

// `copies` copies of G acting on itself from the right.
GSpace translation_copies(const SimplicialGroup& g, int T, int copies) {
  if (T > g.truncation()) throw InvalidObject({"group is truncated below the requested truncation"});
  LevelwiseSet lv;
  lv.truncation = T;
  lv.sizes.resize(T + 1);
  lv.faces.resize(T + 1);
  lv.degens.resize(T + 1);
  std::vector<std::vector<std::string>> names(T + 1);
  std::vector<std::vector<std::vector<int>>> action(T + 1);
  for (int n = 0; n <= T; ++n) {
    const FiniteGroup& gn = g.level(n);
    const int k = gn.order();
    lv.sizes[n] = static_cast<std::size_t>(k) * copies;
    for (int c = 0; c < copies; ++c)
      for (int a = 0; a < k; ++a) {
        names[n].push_back(copies == 1 ? gn.name(a) : std::string(c == 0 ? "L." : "R.") + gn.name(a));
        std::vector<int> row(k);
        for (int h = 0; h < k; ++h) row[h] = c * k + gn.mul(a, h);
        action[n].push_back(std::move(row));
      }
    if (n >= 1) {
      lv.faces[n].assign(n + 1, std::vector<int>(lv.sizes[n]));
      const int kp = g.level(n - 1).order();
      for (int i = 0; i <= n; ++i)
        for (int c = 0; c < copies; ++c)
          for (int a = 0; a < k; ++a) lv.faces[n][i][c * k + a] = c * kp + g.face(n, i, a);
    }
    if (n < T) {
      lv.degens[n].assign(n + 1, std::vector<int>(lv.sizes[n]));
      const int kn = g.level(n + 1).order();
      for (int i = 0; i <= n; ++i)
        for (int c = 0; c < copies; ++c)
          for (int a = 0; a < k; ++a) lv.degens[n][i][c * k + a] = c * kn + g.degeneracy(n, i, a);
    }
  }
  return from_levelwise(lv, names, g, action);
}

template <class F>
SimplicialMap tuple_map(const LimitSet& from, const LimitSet& to, F&& f) {
  const int T = from.set().truncation();
  std::vector<std::vector<int>> dense(T + 1);
  for (int m = 0; m <= T; ++m) {
    dense[m].resize(from.set().size(m));
    for (std::size_t x = 0; x < dense[m].size(); ++x) {
      auto y = to.find(m, f(m, from.tuple(m, static_cast<int>(x))));
      if (!y) throw std::logic_error("tuple map leaves its target");
      dense[m][x] = *y;
    }
  }
  return SimplicialMap::from_dense(from.set(), to.set(), std::move(dense));
}

}  // namespace

GroupSet underlying_set(const SimplicialGroup& g, int truncation) {
  const int T = truncation < 0 ? g.truncation() : truncation;
  if (T > g.truncation()) throw InvalidObject({"group is truncated below the requested truncation"});
  LevelwiseSet lv;
  lv.truncation = T;
  lv.sizes.resize(T + 1);
  lv.faces.resize(T + 1);
  lv.degens.resize(T + 1);
  for (int n = 0; n <= T; ++n) {
    lv.sizes[n] = g.level(n).order();
    if (n >= 1) {
      lv.faces[n].assign(n + 1, std::vector<int>(lv.sizes[n]));
      for (int i = 0; i <= n; ++i)
        for (std::size_t a = 0; a < lv.sizes[n]; ++a) lv.faces[n][i][a] = g.face(n, i, static_cast<int>(a));
    }
    if (n < T) {
      lv.degens[n].assign(n + 1, std::vector<int>(lv.sizes[n]));
      for (int i = 0; i <= n; ++i)
        for (std::size_t a = 0; a < lv.sizes[n]; ++a) lv.degens[n][i][a] = g.degeneracy(n, i, static_cast<int>(a));
    }
  }
  Compressed c = compress(lv, [&](int n, int x) { return g.level(n).name(x); });
  GroupSet out;
  out.set = c.set;
  out.simplex_of = c.relabel;
  out.element_of.resize(T + 1);
  for (int n = 0; n <= T; ++n) {
    out.element_of[n].resize(lv.sizes[n]);
    for (std::size_t a = 0; a < lv.sizes[n]; ++a) out.element_of[n][c.relabel[n][a]] = static_cast<int>(a);
  }
  return out;
}

GSpace GSpace::make(SimplicialSet x, SimplicialGroup g, std::vector<std::vector<std::vector<int>>> action) {
  const int N = x.truncation();
  std::vector<std::string> errors;
  if (g.truncation() < N) throw InvalidObject({"group is truncated below the space"});
  if (static_cast<int>(action.size()) != N + 1) throw InvalidObject({"action needs one table per level 0..N"});
  for (int n = 0; n <= N; ++n) {
    const int k = g.level(n).order();
    if (action[n].size() != x.size(n)) {
      errors.push_back("action table on level " + std::to_string(n) + " has the wrong number of rows");
      continue;
    }
    for (std::size_t s = 0; s < x.size(n); ++s) {
      if (static_cast<int>(action[n][s].size()) != k) {
        errors.push_back("action row for '" + x.simplex_name(n, static_cast<int>(s)) + "' has the wrong length");
        continue;
      }
      for (int v : action[n][s])
        if (v < 0 || v >= static_cast<int>(x.size(n))) {
          errors.push_back("action of '" + x.simplex_name(n, static_cast<int>(s)) + "' leaves the space");
          break;
        }
    }
  }
  if (!errors.empty()) throw InvalidObject(std::move(errors));
  auto report = [&](std::string msg) {
    if (errors.size() < 32) errors.push_back(std::move(msg));
  };
  for (int n = 0; n <= N; ++n) {
    const FiniteGroup& gn = g.level(n);
    for (std::size_t s = 0; s < x.size(n); ++s) {
      const int xs = static_cast<int>(s);
      const std::string name = x.simplex_name(n, xs);
      if (action[n][s][gn.identity()] != xs) report("identity does not act trivially on '" + name + "'");
      for (int a = 0; a < gn.order(); ++a)
        for (int b = 0; b < gn.order(); ++b)
          if (action[n][action[n][s][a]][b] != action[n][s][gn.mul(a, b)]) {
            report("(x.a).b != x.(ab) at '" + name + "', a=" + gn.name(a) + ", b=" + gn.name(b));
            a = gn.order();
            break;
          }
      for (int h = 0; h < gn.order(); ++h) {
        for (int i = 0; n >= 1 && i <= n; ++i)
          if (x.face(n, i, action[n][s][h]) != action[n - 1][x.face(n, i, xs)][g.face(n, i, h)])
            report("action does not commute with d" + std::to_string(i) + " at '" + name + "', h=" + gn.name(h));
        for (int i = 0; n < N && i <= n; ++i)
          if (x.degeneracy(n, i, action[n][s][h]) != action[n + 1][x.degeneracy(n, i, xs)][g.degeneracy(n, i, h)])
            report("action does not commute with s" + std::to_string(i) + " at '" + name + "', h=" + gn.name(h));
      }
    }
  }
  if (!errors.empty()) throw InvalidObject(std::move(errors));
  GSpace out;
  out.x_ = std::move(x);
  out.g_ = std::move(g);
  out.action_ = std::move(action);
  return out;
}

GSpace GSpace::trivial(const SimplicialSet& x, const SimplicialGroup& g) {
  std::vector<std::vector<std::vector<int>>> action(x.truncation() + 1);
  for (int n = 0; n <= x.truncation(); ++n)
    for (std::size_t s = 0; s < x.size(n); ++s) action[n].emplace_back(g.level(n).order(), static_cast<int>(s));
  return make(x, g, std::move(action));
}

GSpace GSpace::point(const SimplicialGroup& g, int truncation) { return trivial(segal::point(truncation), g); }

GSpace GSpace::translation(const SimplicialGroup& g, int truncation) { return translation_copies(g, truncation, 1); }

GSpace GSpace::two_translations(const SimplicialGroup& g, int truncation) {
  return translation_copies(g, truncation, 2);
}

bool GSpace::is_free() const {
  for (int n = 0; n <= truncation(); ++n)
    for (std::size_t s = 0; s < x_.size(n); ++s)
      for (int h = 0; h < g_.level(n).order(); ++h)
        if (h != g_.level(n).identity() && action_[n][s][h] == static_cast<int>(s)) return false;
  return true;
}

GSpace truncate(const GSpace& x, int truncation) {
  if (truncation >= x.truncation()) return x;
  std::vector<std::vector<std::vector<int>>> act(x.action().begin(), x.action().begin() + truncation + 1);
  return GSpace::make(truncate(x.space(), truncation), x.group(), std::move(act));
}

bool is_equivariant(const GSpace& a, const GSpace& b, const SimplicialMap& f) {
  if (!same_group(a.group(), b.group())) return false;
  const int T = std::min(a.truncation(), f.source().truncation());
  for (int n = 0; n <= T; ++n)
    for (std::size_t s = 0; s < a.space().size(n); ++s)
      for (int h = 0; h < a.group().level(n).order(); ++h)
        if (f(n, a.act(n, static_cast<int>(s), h)) != b.act(n, f(n, static_cast<int>(s)), h)) return false;
  return true;
}

BarConstruction bar_construction(const GSpace& x, int M, const Budget& budget) {
  const int T = x.truncation();
  const SimplicialGroup& g = x.group();
  BarConstruction out;
  out.group = underlying_set(g, T);
  const GroupSet& gs = out.group;
  for (int n = 0; n <= M; ++n) {
    std::vector<SimplicialSet> src{x.space()};
    std::vector<SimplicialSet> tgt;
    for (int k = 0; k < n; ++k) {
      src.push_back(gs.set);
      tgt.push_back(gs.set);
    }
    out.source_levels.push_back(LimitSet::build(std::move(src), {}, T, budget));
    out.target_levels.push_back(LimitSet::build(std::move(tgt), {}, T, budget));
  }
  auto mul = [&](int m, int a, int b) {
    return gs.simplex_of[m][g.level(m).mul(gs.element_of[m][a], gs.element_of[m][b])];
  };
  // with_x: tuples start with the X coordinate.
  auto face_fn = [&](int n, int i, bool with_x) {
    return [&, n, i, with_x](int m, const std::vector<int>& t) {
      const int o = with_x ? 1 : 0;  // offset of g_1
      std::vector<int> r;
      if (i == 0) {
        if (with_x) r.push_back(x.act(m, t[0], gs.element_of[m][t[1]]));
        r.insert(r.end(), t.begin() + o + 1, t.end());
      } else if (i == n) {
        r.assign(t.begin(), t.end() - 1);
      } else {
        r.assign(t.begin(), t.begin() + o + i - 1);
        r.push_back(mul(m, t[o + i - 1], t[o + i]));
        r.insert(r.end(), t.begin() + o + i + 1, t.end());
      }
      return r;
    };
  };
  auto degen_fn = [&](int i, bool with_x) {
    return [&, i, with_x](int m, const std::vector<int>& t) {
      const int o = with_x ? 1 : 0;
      std::vector<int> r(t.begin(), t.begin() + o + i);
      r.push_back(gs.simplex_of[m][g.level(m).identity()]);
      r.insert(r.end(), t.begin() + o + i, t.end());
      return r;
    };
  };
  auto make_space = [&](const std::vector<LimitSet>& lv, bool with_x) {
    std::vector<SimplicialSet> levels;
    for (const auto& l : lv) levels.push_back(l.set());
    std::vector<std::vector<SimplicialMap>> faces(M + 1), degens(M + 1);
    for (int n = 1; n <= M; ++n)
      for (int i = 0; i <= n; ++i) faces[n].push_back(tuple_map(lv[n], lv[n - 1], face_fn(n, i, with_x)));
    for (int n = 0; n < M; ++n)
      for (int i = 0; i <= n; ++i) degens[n].push_back(tuple_map(lv[n], lv[n + 1], degen_fn(i, with_x)));
    return SimplicialSpace::make(std::move(levels), std::move(faces), std::move(degens));
  };
  SimplicialSpace a = make_space(out.source_levels, true);
  SimplicialSpace b = make_space(out.target_levels, false);
  std::vector<SimplicialMap> proj;
  for (int n = 0; n <= M; ++n)
    proj.push_back(tuple_map(out.source_levels[n], out.target_levels[n],
                             [](int, const std::vector<int>& t) { return std::vector<int>(t.begin() + 1, t.end()); }));
  out.map = SpaceMap::make(std::move(a), std::move(b), std::move(proj));
  return out;
}

SpaceMap bar_action(const GSpace& x, int M, const Budget& budget) { return bar_construction(x, M, budget).map; }

SimplicialSpace bar_group(const SimplicialGroup& g, int M, int internal, const Budget& budget) {
  return bar_construction(GSpace::point(g, internal), M, budget).map.target();
}

WConstruction w_construction(const SimplicialGroup& g, int T, const Budget& budget) {
  if (T > g.truncation()) throw InvalidObject({"group is truncated below the requested truncation"});
  // W-bar up to level T+1; (WG)_n is (W-bar G)_{n+1} with shifted structure maps.
  const int L = T + 1;
  std::vector<std::vector<std::vector<int>>> tuples(L + 1);
  std::vector<std::map<std::vector<int>, int>> index(L + 1);
  std::size_t total = 0;
  for (int n = 0; n <= L; ++n) {
    std::vector<int> t(n, 0);
    while (true) {
      index[n].emplace(t, static_cast<int>(tuples[n].size()));
      tuples[n].push_back(t);
      if (++total > budget.max_simplices) throw BudgetExceeded("W construction exceeds the simplex budget");
      int j = n - 1;
      // position j holds an element of G_{n-1-j}
      while (j >= 0 && ++t[j] == g.level(n - 1 - j).order()) t[j--] = 0;
      if (j < 0) break;
    }
  }
  auto face = [&](int n, int i, const std::vector<int>& w) {
    std::vector<int> r;
    if (i == 0) return std::vector<int>(w.begin() + 1, w.end());
    for (int j = 0; j <= i - 2; ++j) r.push_back(g.face(n - 1 - j, i - 1 - j, w[j]));
    if (i < n) {
      const int lvl = n - i - 1;
      r.push_back(g.level(lvl).mul(g.face(n - i, 0, w[i - 1]), w[i]));
      r.insert(r.end(), w.begin() + i + 1, w.end());
    }
    return r;
  };
  auto degen = [&](int n, int i, const std::vector<int>& w) {
    std::vector<int> r;
    for (int j = 0; j <= i - 1; ++j) r.push_back(g.degeneracy(n - 1 - j, i - 1 - j, w[j]));
    r.push_back(g.level(n - i).identity());
    r.insert(r.end(), w.begin() + i, w.end());
    return r;
  };
  auto name_of = [&](const std::vector<int>& w, bool as_w) {
    std::string s = as_w ? "(" : "[";
    for (std::size_t j = 0; j < w.size(); ++j) {
      const int lvl = static_cast<int>(w.size()) - 1 - static_cast<int>(j);
      if (j) s += (as_w && j == 1) ? ";" : "|";
      s += g.level(lvl).name(w[j]);
    }
    return s + (as_w ? ")" : "]");
  };
  auto build = [&](bool as_w) {
    const int top = T;
    LevelwiseSet lv;
    lv.truncation = top;
    lv.sizes.resize(top + 1);
    lv.faces.resize(top + 1);
    lv.degens.resize(top + 1);
    const int sh = as_w ? 1 : 0;
    for (int n = 0; n <= top; ++n) {
      const auto& tp = tuples[n + sh];
      lv.sizes[n] = tp.size();
      if (n >= 1) {
        lv.faces[n].assign(n + 1, std::vector<int>(tp.size()));
        for (int i = 0; i <= n; ++i)
          for (std::size_t x = 0; x < tp.size(); ++x) lv.faces[n][i][x] = index[n - 1 + sh].at(face(n + sh, i + sh, tp[x]));
      }
      if (n < top) {
        lv.degens[n].assign(n + 1, std::vector<int>(tp.size()));
        for (int i = 0; i <= n; ++i)
          for (std::size_t x = 0; x < tp.size(); ++x) lv.degens[n][i][x] = index[n + 1 + sh].at(degen(n + sh, i + sh, tp[x]));
      }
    }
    return std::make_pair(lv, sh);
  };
  WConstruction out;
  {
    auto [lv, sh] = build(false);
    Compressed c = compress(lv, [&](int n, int x) { return name_of(tuples[n][x], false); }, budget);
    out.wbar = c.set;
    out.wbar_tuples.resize(T + 1);
    for (int n = 0; n <= T; ++n) {
      out.wbar_tuples[n].resize(tuples[n].size());
      for (std::size_t x = 0; x < tuples[n].size(); ++x) out.wbar_tuples[n][c.relabel[n][x]] = tuples[n][x];
    }
  }
  {
    auto [lv, sh] = build(true);
    std::vector<std::vector<std::string>> names(T + 1);
    std::vector<std::vector<std::vector<int>>> action(T + 1);
    for (int n = 0; n <= T; ++n) {
      const FiniteGroup& gn = g.level(n);
      for (const auto& w : tuples[n + 1]) {
        names[n].push_back(name_of(w, true));
        std::vector<int> row(gn.order());
        for (int h = 0; h < gn.order(); ++h) {
          std::vector<int> v = w;
          v[0] = gn.mul(gn.inv(h), w[0]);
          row[h] = index[n + 1].at(v);
        }
        action[n].push_back(std::move(row));
      }
    }
    Compressed c = compress(lv, [&](int n, int x) { return names[n][x]; }, budget);
    std::vector<std::vector<std::vector<int>>> act(T + 1);
    out.w_tuples.resize(T + 1);
    for (int n = 0; n <= T; ++n) {
      act[n].resize(lv.sizes[n]);
      out.w_tuples[n].resize(lv.sizes[n]);
      for (std::size_t x = 0; x < lv.sizes[n]; ++x) {
        std::vector<int> row = action[n][x];
        for (int& v : row) v = c.relabel[n][v];
        act[n][c.relabel[n][x]] = std::move(row);
        out.w_tuples[n][c.relabel[n][x]] = tuples[n + 1][x];
      }
    }
    out.w = GSpace::make(c.set, g, std::move(act));
  }
  std::map<std::vector<int>, int> wbar_index;
  std::vector<std::vector<int>> proj(T + 1);
  for (int n = 0; n <= T; ++n) {
    std::map<std::vector<int>, int> idx;
    for (std::size_t x = 0; x < out.wbar_tuples[n].size(); ++x) idx.emplace(out.wbar_tuples[n][x], static_cast<int>(x));
    proj[n].resize(out.w_tuples[n].size());
    for (std::size_t x = 0; x < out.w_tuples[n].size(); ++x) {
      const auto& w = out.w_tuples[n][x];
      proj[n][x] = idx.at(std::vector<int>(w.begin() + 1, w.end()));
    }
  }
  out.projection = SimplicialMap::from_dense(out.w.space(), out.wbar, std::move(proj));
  return out;
}

GSpace w(const SimplicialGroup& g, int truncation) { return w_construction(g, truncation).w; }
SimplicialSet wbar(const SimplicialGroup& g, int truncation) { return w_construction(g, truncation).wbar; }

Borel borel(const GSpace& x, const Budget& budget) {
  const int T = x.truncation();
  WConstruction wc = w_construction(x.group(), T, budget);
  LimitSet prod = LimitSet::build({x.space(), wc.w.space()}, {}, T, budget);
  std::vector<std::vector<std::pair<int, int>>> pairs(T + 1);
  for (int n = 0; n <= T; ++n) {
    const FiniteGroup& gn = x.group().level(n);
    for (std::size_t p = 0; p < prod.set().size(n); ++p) {
      const auto& t = prod.tuple(n, static_cast<int>(p));
      for (int h = 0; h < gn.order(); ++h) {
        if (h == gn.identity()) continue;
        auto q = prod.find(n, {x.act(n, t[0], h), wc.w.act(n, t[1], h)});
        pairs[n].emplace_back(static_cast<int>(p), *q);
      }
    }
  }
  QuotientSet q = quotient_dense(prod.set(), pairs, budget);
  std::vector<std::vector<int>> proj(T + 1);
  for (int n = 0; n <= T; ++n) {
    proj[n].assign(q.set.size(n), -1);
    for (std::size_t p = 0; p < prod.set().size(n); ++p)
      proj[n][q.class_of[n][p]] = wc.projection(n, prod.tuple(n, static_cast<int>(p))[1]);
  }
  Borel out{q.set, SimplicialMap::from_dense(q.set, wc.wbar, std::move(proj)), prod, q};
  return out;
}

SimplicialMap borel_map(const Borel& from, const Borel& to, const SimplicialMap& f) {
  const int T = from.set.truncation();
  std::vector<std::vector<int>> dense(T + 1);
  for (int n = 0; n <= T; ++n) {
    dense[n].assign(from.set.size(n), -1);
    for (std::size_t p = 0; p < from.product.set().size(n); ++p) {
      const auto& t = from.product.tuple(n, static_cast<int>(p));
      auto q = to.product.find(n, {f(n, t[0]), t[1]});
      if (!q) throw InvalidObject({"map does not fit the Borel constructions"});
      dense[n][from.quotient.class_of[n][p]] = to.quotient.class_of[n][*q];
    }
  }
  return SimplicialMap::from_dense(from.set, to.set, std::move(dense));
}

GSpace homotopy_fiber(const SimplicialMap& f, const SimplicialGroup& g, const Budget& budget) {
  const int T = f.source().truncation();
  WConstruction wc = w_construction(g, T, budget);
  if (!(f.target() == wc.wbar)) throw InvalidObject({"map does not land in W-bar G"});
  LimitSet pb = pullback(f, wc.projection, budget);
  std::vector<std::vector<std::vector<int>>> action(T + 1);
  for (int n = 0; n <= T; ++n)
    for (std::size_t p = 0; p < pb.set().size(n); ++p) {
      const auto& t = pb.tuple(n, static_cast<int>(p));
      std::vector<int> row(g.level(n).order());
      for (int h = 0; h < g.level(n).order(); ++h) row[h] = *pb.find(n, {t[0], wc.w.act(n, t[1], h)});
      action[n].push_back(std::move(row));
    }
  return GSpace::make(pb.set(), g, std::move(action));
}

QuotientSet orbit_quotient(const GSpace& x, const Budget& budget) {
  std::vector<std::vector<std::pair<int, int>>> pairs(x.truncation() + 1);
  for (int n = 0; n <= x.truncation(); ++n)
    for (std::size_t s = 0; s < x.space().size(n); ++s)
      for (int h = 0; h < x.group().level(n).order(); ++h)
        if (h != x.group().level(n).identity()) pairs[n].emplace_back(static_cast<int>(s), x.act(n, static_cast<int>(s), h));
  return quotient_dense(x.space(), pairs, budget);
}

}  // namespace segal
