#include "segal/bisimplicial.hpp"

#include <map>
#include <stdexcept>

#include "segal/constructions.hpp"
#include "segal/hom.hpp"
#include "segal/kan.hpp"

namespace segal {

namespace {

SimplicialSet discrete_named(const std::vector<std::string>& names, int truncation) {
  SimplicialSet::Presentation p;
  p.truncation = truncation;
  p.names.resize(truncation + 1);
  p.faces.resize(truncation + 1);
  p.names[0] = names;
  p.faces[0].assign(names.size(), {});
  return SimplicialSet::from_presentation(std::move(p));
}

// Map of discrete sets given on vertices.
SimplicialMap discrete_map(const SimplicialSet& a, const SimplicialSet& b, const std::vector<int>& on_vertices) {
  std::vector<std::vector<SimplexRef>> images(a.truncation() + 1);
  for (int v : on_vertices) images[0].push_back(SimplexRef{{}, {0, v}});
  return SimplicialMap::from_images(a, b, std::move(images));
}

SimplicialMap trunc_map(const SimplicialMap& f, int T) {
  if (f.source().truncation() == T && f.target().truncation() == T) return f;
  return truncate(f, T);
}

}  // namespace

int SimplicialSpace::int_truncation() const {
  int t = levels_.empty() ? 0 : levels_[0].truncation();
  for (const auto& l : levels_) t = std::min(t, l.truncation());
  return t;
}

SimplicialSpace SimplicialSpace::make(std::vector<SimplicialSet> levels, std::vector<std::vector<SimplicialMap>> faces,
                                      std::vector<std::vector<SimplicialMap>> degens) {
  const int M = static_cast<int>(levels.size()) - 1;
  if (M < 0) throw InvalidObject({"simplicial space has no levels"});
  faces.resize(M + 1);
  degens.resize(M + 1);
  std::vector<std::string> errors;
  auto same = [](const SimplicialSet& a, const SimplicialSet& b) { return a == b; };
  for (int n = 1; n <= M; ++n) {
    if (static_cast<int>(faces[n].size()) != n + 1) {
      errors.push_back("level " + std::to_string(n) + " needs " + std::to_string(n + 1) + " external faces");
      continue;
    }
    for (int i = 0; i <= n; ++i)
      if (!same(faces[n][i].source(), levels[n]) || !same(faces[n][i].target(), levels[n - 1]))
        errors.push_back("external face d" + std::to_string(i) + " on level " + std::to_string(n) +
                         " has the wrong source or target");
  }
  for (int n = 0; n < M; ++n) {
    if (static_cast<int>(degens[n].size()) != n + 1) {
      errors.push_back("level " + std::to_string(n) + " needs " + std::to_string(n + 1) + " external degeneracies");
      continue;
    }
    for (int i = 0; i <= n; ++i)
      if (!same(degens[n][i].source(), levels[n]) || !same(degens[n][i].target(), levels[n + 1]))
        errors.push_back("external degeneracy s" + std::to_string(i) + " on level " + std::to_string(n) +
                         " has the wrong source or target");
  }
  if (!errors.empty()) throw InvalidObject(std::move(errors));

  int T = levels[0].truncation();
  for (const auto& l : levels) T = std::min(T, l.truncation());
  auto check = [&](int n, const std::string& what, auto&& lhs, auto&& rhs) {
    for (int m = 0; m <= T; ++m)
      for (std::size_t x = 0; x < levels[n].size(m); ++x)
        if (lhs(m, static_cast<int>(x)) != rhs(m, static_cast<int>(x))) {
          errors.push_back("external identity " + what + " fails on level " + std::to_string(n) + " at '" +
                           levels[n].simplex_name(m, static_cast<int>(x)) + "'");
          return;
        }
  };
  for (int n = 2; n <= M; ++n)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        check(n, "d" + std::to_string(i) + "d" + std::to_string(j),
              [&](int m, int x) { return faces[n - 1][i](m, faces[n][j](m, x)); },
              [&](int m, int x) { return faces[n - 1][j - 1](m, faces[n][i](m, x)); });
  for (int n = 0; n < M; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        std::string what = "d" + std::to_string(i) + "s" + std::to_string(j);
        auto lhs = [&](int m, int x) { return faces[n + 1][i](m, degens[n][j](m, x)); };
        if (i == j || i == j + 1)
          check(n, what, lhs, [](int, int x) { return x; });
        else if (i < j)
          check(n, what, lhs, [&](int m, int x) { return degens[n - 1][j - 1](m, faces[n][i](m, x)); });
        else
          check(n, what, lhs, [&](int m, int x) { return degens[n - 1][j](m, faces[n][i - 1](m, x)); });
      }
  for (int n = 0; n + 1 < M; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        check(n, "s" + std::to_string(i) + "s" + std::to_string(j),
              [&](int m, int x) { return degens[n + 1][i](m, degens[n][j](m, x)); },
              [&](int m, int x) { return degens[n + 1][j + 1](m, degens[n][i](m, x)); });
  if (!errors.empty()) throw InvalidObject(std::move(errors));
  SimplicialSpace s;
  s.levels_ = std::move(levels);
  s.faces_ = std::move(faces);
  s.degens_ = std::move(degens);
  return s;
}

SimplicialMap SimplicialSpace::operator_map(int n, const MonotoneMap& theta) const {
  Factorization fz = factor(theta);
  SimplicialMap cur = SimplicialMap::identity(levels_[n]);
  int dim = n;
  std::vector<char> keep(n + 1, 0);
  for (int v : fz.image) keep[v] = 1;
  for (int j = n; j >= 0; --j)
    if (!keep[j]) {
      cur = compose(faces_[dim][j], cur);
      --dim;
    }
  std::vector<int> word = collapsed_indices(fz.surjection);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    cur = compose(degens_[dim][*it], cur);
    ++dim;
  }
  return cur;
}

SpaceMap SpaceMap::make(SimplicialSpace source, SimplicialSpace target, std::vector<SimplicialMap> levels) {
  const int M = source.ext_truncation();
  if (target.ext_truncation() < M) throw InvalidObject({"space map target has a lower external truncation"});
  if (static_cast<int>(levels.size()) != M + 1) throw InvalidObject({"space map has the wrong number of levels"});
  std::vector<std::string> errors;
  for (int n = 0; n <= M; ++n)
    if (!(levels[n].source() == source.level(n)) || !(levels[n].target() == target.level(n)))
      errors.push_back("space map level " + std::to_string(n) + " has the wrong source or target");
  if (!errors.empty()) throw InvalidObject(std::move(errors));
  const int T = source.int_truncation();
  auto natural = [&](int n, const SimplicialMap& src_op, const SimplicialMap& tgt_op, int n_to, const std::string& what) {
    for (int m = 0; m <= T; ++m)
      for (std::size_t x = 0; x < source.level(n).size(m); ++x) {
        int a = tgt_op(m, levels[n](m, static_cast<int>(x)));
        int b = levels[n_to](m, src_op(m, static_cast<int>(x)));
        if (a != b) {
          errors.push_back("space map is not natural for " + what + " on level " + std::to_string(n) + " at '" +
                           source.level(n).simplex_name(m, static_cast<int>(x)) + "'");
          return;
        }
      }
  };
  for (int n = 1; n <= M; ++n)
    for (int i = 0; i <= n; ++i) natural(n, source.face(n, i), target.face(n, i), n - 1, "d" + std::to_string(i));
  for (int n = 0; n < M; ++n)
    for (int i = 0; i <= n; ++i)
      natural(n, source.degeneracy(n, i), target.degeneracy(n, i), n + 1, "s" + std::to_string(i));
  if (!errors.empty()) throw InvalidObject(std::move(errors));
  SpaceMap f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.levels_ = std::move(levels);
  return f;
}

SpaceMap SpaceMap::identity(const SimplicialSpace& b) {
  std::vector<SimplicialMap> levels;
  for (int n = 0; n <= b.ext_truncation(); ++n) levels.push_back(SimplicialMap::identity(b.level(n)));
  return make(b, b, std::move(levels));
}

SimplicialSpace const_discrete(const SimplicialSet& k, int ext_truncation, int internal) {
  const int M = ext_truncation < 0 ? k.truncation() : ext_truncation;
  const int T = internal < 0 ? k.truncation() : internal;
  if (M > k.truncation()) throw InvalidObject({"external truncation exceeds the truncation of K"});
  std::vector<SimplicialSet> levels;
  for (int n = 0; n <= M; ++n) {
    std::vector<std::string> names;
    for (std::size_t x = 0; x < k.size(n); ++x) names.push_back(k.simplex_name(n, static_cast<int>(x)));
    levels.push_back(discrete_named(names, T));
  }
  std::vector<std::vector<SimplicialMap>> faces(M + 1), degens(M + 1);
  for (int n = 1; n <= M; ++n)
    for (int i = 0; i <= n; ++i) {
      std::vector<int> v(k.size(n));
      for (std::size_t x = 0; x < v.size(); ++x) v[x] = k.face(n, i, static_cast<int>(x));
      faces[n].push_back(discrete_map(levels[n], levels[n - 1], v));
    }
  for (int n = 0; n < M; ++n)
    for (int i = 0; i <= n; ++i) {
      std::vector<int> v(k.size(n));
      for (std::size_t x = 0; x < v.size(); ++x) v[x] = k.degeneracy(n, i, static_cast<int>(x));
      degens[n].push_back(discrete_map(levels[n], levels[n + 1], v));
    }
  return SimplicialSpace::make(std::move(levels), std::move(faces), std::move(degens));
}

SimplicialSpace const_space(const SimplicialSet& k, int ext_truncation) {
  std::vector<SimplicialSet> levels(ext_truncation + 1, k);
  std::vector<std::vector<SimplicialMap>> faces(ext_truncation + 1), degens(ext_truncation + 1);
  SimplicialMap id = SimplicialMap::identity(k);
  for (int n = 1; n <= ext_truncation; ++n) faces[n].assign(n + 1, id);
  for (int n = 0; n < ext_truncation; ++n) degens[n].assign(n + 1, id);
  return SimplicialSpace::make(std::move(levels), std::move(faces), std::move(degens));
}

SimplicialSpace terminal_space(int ext_truncation, int internal) {
  return const_space(point(internal), ext_truncation);
}

SpaceMap to_terminal(const SimplicialSpace& b) {
  SimplicialSpace t = terminal_space(b.ext_truncation(), b.int_truncation());
  std::vector<SimplicialMap> levels;
  for (int n = 0; n <= b.ext_truncation(); ++n) {
    const SimplicialSet& l = b.level(n);
    SimplicialSet src = l.truncation() == b.int_truncation() ? l : truncate(l, b.int_truncation());
    if (!(src == l)) throw InvalidObject({"levels must share one internal truncation"});
    levels.push_back(to_point(src));
  }
  return SpaceMap::make(b, t, std::move(levels));
}

SimplicialSpace truncate_space(const SimplicialSpace& b, int M, int T) {
  std::vector<SimplicialSet> levels;
  for (int n = 0; n <= M; ++n)
    levels.push_back(b.level(n).truncation() == T ? b.level(n) : truncate(b.level(n), T));
  std::vector<std::vector<SimplicialMap>> faces(M + 1), degens(M + 1);
  for (int n = 1; n <= M; ++n)
    for (int i = 0; i <= n; ++i) faces[n].push_back(trunc_map(b.face(n, i), T));
  for (int n = 0; n < M; ++n)
    for (int i = 0; i <= n; ++i) degens[n].push_back(trunc_map(b.degeneracy(n, i), T));
  return SimplicialSpace::make(std::move(levels), std::move(faces), std::move(degens));
}

SpaceMap truncate_space_map(const SpaceMap& f, int M, int T) {
  std::vector<SimplicialMap> levels;
  for (int n = 0; n <= M; ++n) levels.push_back(trunc_map(f.level(n), T));
  return SpaceMap::make(truncate_space(f.source(), M, T), truncate_space(f.target(), M, T), std::move(levels));
}

Diagonal diagonal_with_index(const SimplicialSpace& b) {
  const int D = std::min(b.ext_truncation(), b.int_truncation());
  LevelwiseSet lv;
  lv.truncation = D;
  lv.sizes.assign(D + 1, 0);
  lv.faces.assign(D + 1, {});
  lv.degens.assign(D + 1, {});
  for (int n = 0; n <= D; ++n) lv.sizes[n] = b.level(n).size(n);
  for (int n = 0; n <= D; ++n) {
    if (n >= 1) {
      lv.faces[n].assign(n + 1, std::vector<int>(lv.sizes[n]));
      for (int i = 0; i <= n; ++i)
        for (std::size_t x = 0; x < lv.sizes[n]; ++x)
          lv.faces[n][i][x] = b.level(n - 1).face(n, i, b.face(n, i)(n, static_cast<int>(x)));
    }
    if (n < D) {
      lv.degens[n].assign(n + 1, std::vector<int>(lv.sizes[n]));
      for (int i = 0; i <= n; ++i)
        for (std::size_t x = 0; x < lv.sizes[n]; ++x)
          lv.degens[n][i][x] = b.level(n + 1).degeneracy(n, i, b.degeneracy(n, i)(n, static_cast<int>(x)));
    }
  }
  Compressed c = compress(lv, [&](int n, int x) { return b.level(n).generator_name(b.level(n).simplex(n, x).generator); });
  return {std::move(c.set), std::move(c.relabel)};
}

SimplicialSet diagonal(const SimplicialSpace& b) { return diagonal_with_index(b).set; }

SimplicialMap diagonal(const SpaceMap& f) {
  Diagonal s = diagonal_with_index(f.source());
  Diagonal t = diagonal_with_index(f.target());
  const int D = s.set.truncation();
  std::vector<std::vector<int>> levels(D + 1);
  for (int n = 0; n <= D; ++n) {
    levels[n].resize(s.set.size(n));
    for (std::size_t x = 0; x < f.source().level(n).size(n); ++x)
      levels[n][s.index[n][x]] = t.index[n][f.level(n)(n, static_cast<int>(x))];
  }
  return SimplicialMap::from_dense(s.set, t.set, std::move(levels));
}

DStar d_star(const SimplicialSet& a, int M, const Budget& budget) {
  const int T = a.truncation() - M;
  if (T < 0) throw InvalidObject({"d_* needs the truncation of A to be at least the external truncation"});
  DStar out;
  for (int n = 0; n <= M; ++n) {
    auto fam = std::make_shared<const PosetFamily>(family_delta_times(T, n));
    out.complexes.push_back(MappingComplex::build(fam, a, budget));
  }
  std::vector<SimplicialSet> levels;
  for (const auto& c : out.complexes) levels.push_back(c.set());
  auto along = [&](int from_n, int to_n, const MonotoneMap& theta) {
    // [m] x [to_n] -> [m] x [from_n], (a, b) -> (a, theta(b)).
    std::vector<std::vector<int>> maps(T + 1);
    for (int m = 0; m <= T; ++m) {
      maps[m].resize((m + 1) * (to_n + 1));
      for (int x = 0; x <= m; ++x)
        for (int y = 0; y <= to_n; ++y) maps[m][x * (to_n + 1) + y] = x * (from_n + 1) + theta[y];
    }
    return restrict_along(out.complexes[from_n], out.complexes[to_n], maps);
  };
  std::vector<std::vector<SimplicialMap>> faces(M + 1), degens(M + 1);
  for (int n = 1; n <= M; ++n)
    for (int i = 0; i <= n; ++i) faces[n].push_back(along(n, n - 1, coface_map(n, i)));
  for (int n = 0; n < M; ++n)
    for (int i = 0; i <= n; ++i) degens[n].push_back(along(n, n + 1, codegeneracy_map(n, i)));
  out.space = SimplicialSpace::make(std::move(levels), std::move(faces), std::move(degens));
  return out;
}

SpaceMap d_star_unit(const SimplicialSpace& b, const DStar& dd) {
  Diagonal diag = diagonal_with_index(b);
  if (!(dd.complexes[0].target() == diag.set)) throw InvalidObject({"d_* was not built on the diagonal of B"});
  const int M = dd.space.ext_truncation();
  const int T = dd.space.int_truncation();
  SimplicialSpace bt = truncate_space(b, M, T);
  std::vector<SimplicialMap> levels;
  for (int n = 0; n <= M; ++n) {
    const MappingComplex& c = dd.complexes[n];
    const PosetFamily& fam = c.family();
    std::map<MonotoneMap, SimplicialMap> ext_ops;
    std::vector<std::vector<int>> dense(T + 1);
    for (int m = 0; m <= T; ++m) {
      const Nerve& nv = fam.nerves[m];
      std::vector<std::pair<MonotoneMap, MonotoneMap>> ab;  // (alpha, beta) per generator
      for (const auto& lvl : nv.chains)
        for (const auto& ch : lvl) {
          MonotoneMap al, be;
          for (int u : ch) {
            al.push_back(u / (n + 1));
            be.push_back(u % (n + 1));
          }
          if (!ext_ops.count(be)) ext_ops.emplace(be, b.operator_map(n, be));
          ab.emplace_back(std::move(al), std::move(be));
        }
      dense[m].resize(bt.level(n).size(m));
      GeneratorImages img(ab.size());
      for (std::size_t x = 0; x < dense[m].size(); ++x) {
        for (std::size_t g = 0; g < ab.size(); ++g) {
          int k = static_cast<int>(ab[g].first.size()) - 1;
          int y = ext_ops.at(ab[g].second)(m, static_cast<int>(x));
          int z = b.level(k).operator_image(m, y, ab[g].first);
          img[g] = diag.index[k][z];
        }
        auto idx = c.find(m, img);
        if (!idx) throw std::logic_error("unit of d^* -| d_* leaves the mapping complex");
        dense[m][x] = *idx;
      }
    }
    levels.push_back(SimplicialMap::from_dense(bt.level(n), c.set(), std::move(dense)));
  }
  return SpaceMap::make(bt, dd.space, std::move(levels));
}

SlicedDStar d_star_over(const SimplicialMap& f, const SimplicialSpace& b, const Budget& budget) {
  SimplicialSet db = diagonal(b);
  if (!(f.target() == db)) throw InvalidObject({"map does not land in the diagonal of B"});
  const int M = b.ext_truncation();
  const int N = std::min(f.source().truncation(), db.truncation());
  SimplicialMap ft = trunc_map(f, N);
  Verdict fib = is_fibration(ft, N);
  DStar da = d_star(ft.source(), M, budget);
  // d_* of the diagonal is built on the untruncated diagonal so the unit sees the same object.
  DStar ddb = d_star(db, M, budget);
  if (ddb.space.int_truncation() != da.space.int_truncation())
    throw InvalidObject({"d_* over B needs A at least as truncated as d^* B"});
  SpaceMap unit = d_star_unit(b, ddb);
  const int T = da.space.int_truncation();
  std::vector<LimitSet> ps;
  for (int n = 0; n <= M; ++n) {
    SimplicialMap fn = postcompose(da.complexes[n], ddb.complexes[n], ft);
    ps.push_back(pullback(unit.level(n), fn, budget));
  }
  std::vector<SimplicialSet> levels;
  for (const auto& p : ps) levels.push_back(p.set());
  const SimplicialSpace& bt = unit.source();
  std::vector<std::vector<SimplicialMap>> faces(M + 1), degens(M + 1);
  for (int n = 1; n <= M; ++n)
    for (int i = 0; i <= n; ++i)
      faces[n].push_back(limit_map(ps[n], ps[n - 1], {bt.face(n, i), da.space.face(n, i)}));
  for (int n = 0; n < M; ++n)
    for (int i = 0; i <= n; ++i)
      degens[n].push_back(limit_map(ps[n], ps[n + 1], {bt.degeneracy(n, i), da.space.degeneracy(n, i)}));
  SimplicialSpace p = SimplicialSpace::make(std::move(levels), std::move(faces), std::move(degens));
  std::vector<SimplicialMap> proj;
  for (int n = 0; n <= M; ++n) proj.push_back(ps[n].projection(0));
  (void)T;
  return {SpaceMap::make(p, bt, std::move(proj)), fib};
}

std::size_t space_hom_count(const SimplicialSpace& b, const SimplicialSpace& c) {
  const int M = b.ext_truncation();
  if (c.ext_truncation() < M) throw InvalidObject({"target has a lower external truncation"});
  std::vector<std::vector<SimplicialMap>> cands(M + 1);
  for (int n = 0; n <= M; ++n)
    for (const auto& img : hom_images(b.level(n), c.level(n))) cands[n].push_back(map_from_images(b.level(n), c.level(n), img));
  const int T = b.int_truncation();
  std::vector<const SimplicialMap*> chosen(M + 1, nullptr);
  auto compatible = [&](int n) {
    const SimplicialMap& fn = *chosen[n];
    if (n == 0) return true;
    const SimplicialMap& fp = *chosen[n - 1];
    for (int m = 0; m <= T; ++m) {
      for (int i = 0; i <= n; ++i)
        for (std::size_t x = 0; x < b.level(n).size(m); ++x)
          if (c.face(n, i)(m, fn(m, static_cast<int>(x))) != fp(m, b.face(n, i)(m, static_cast<int>(x)))) return false;
      for (int i = 0; i < n; ++i)
        for (std::size_t x = 0; x < b.level(n - 1).size(m); ++x)
          if (c.degeneracy(n - 1, i)(m, fp(m, static_cast<int>(x))) != fn(m, b.degeneracy(n - 1, i)(m, static_cast<int>(x))))
            return false;
    }
    return true;
  };
  std::size_t count = 0;
  auto rec = [&](auto&& self, int n) -> void {
    if (n > M) {
      ++count;
      return;
    }
    for (const auto& f : cands[n]) {
      chosen[n] = &f;
      if (compatible(n)) self(self, n + 1);
    }
  };
  rec(rec, 0);
  return count;
}

LimitSet matching_object(const SimplicialSpace& b, int n, const Budget& budget) {
  const int T = b.int_truncation();
  if (n == 0) return LimitSet::build({}, {}, T, budget);
  std::vector<SimplicialSet> factors(n + 1, b.level(n - 1));
  std::vector<LimitConstraint> cons;
  if (n >= 2)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) cons.push_back(LimitConstraint{j, b.face(n - 1, i), i, b.face(n - 1, j - 1)});
  return LimitSet::build(std::move(factors), std::move(cons), T, budget);
}

SimplicialMap matching_map(const SimplicialSpace& b, int n, const LimitSet& m) {
  std::vector<SimplicialMap> legs;
  for (int i = 0; n >= 1 && i <= n; ++i) legs.push_back(b.face(n, i));
  return m.induced(b.level(n), legs);
}

}  // namespace segal
