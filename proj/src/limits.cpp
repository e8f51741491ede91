#include "segal/limits.hpp"

#include <algorithm>
#include <unordered_map>

#include "segal/hash_util.hpp"

namespace segal {

struct LimitSet::Data {
  SimplicialSet set;
  std::vector<SimplicialSet> factors;
  std::vector<std::vector<std::vector<int>>> tuples;  // [n][x]
  std::vector<std::unordered_map<std::vector<int>, int, VecHash>> lookup;
};

LimitSet LimitSet::build(std::vector<SimplicialSet> factors, std::vector<LimitConstraint> constraints,
                         int truncation, const Budget& budget) {
  int N = truncation;
  for (const auto& f : factors) N = N < 0 ? f.truncation() : std::min(N, f.truncation());
  if (N < 0) N = 0;
  const int r = static_cast<int>(factors.size());
  for (const auto& c : constraints) {
    if (c.left < 0 || c.left >= r || c.right < 0 || c.right >= r)
      throw InvalidObject({"limit constraint refers to a missing factor"});
    if (!(c.left_map.source() == factors[c.left]) || !(c.right_map.source() == factors[c.right]) ||
        !(c.left_map.target() == c.right_map.target()))
      throw InvalidObject({"limit constraint maps do not match their factors"});
    if (c.left_map.source().truncation() < N || c.right_map.source().truncation() < N)
      throw InvalidObject({"limit constraint maps are truncated too low"});
  }

  // For factor k: the constraint used to generate candidates, and the ones merely checked.
  struct Plan {
    int generator = -1;
    bool k_is_left = false;
    std::vector<int> checks;
  };
  std::vector<Plan> plans(r);
  for (int ci = 0; ci < static_cast<int>(constraints.size()); ++ci) {
    const auto& c = constraints[ci];
    int k = std::max(c.left, c.right);
    Plan& pl = plans[k];
    if (pl.generator < 0 && c.left != c.right) {
      pl.generator = ci;
      pl.k_is_left = c.left == k;
    } else {
      pl.checks.push_back(ci);
    }
  }

  LevelwiseSet lv;
  lv.truncation = N;
  lv.sizes.assign(N + 1, 0);
  lv.faces.assign(N + 1, {});
  lv.degens.assign(N + 1, {});
  std::vector<std::vector<std::vector<int>>> tuples(N + 1);
  std::vector<std::unordered_map<std::vector<int>, int, VecHash>> lookup(N + 1);
  std::size_t total = 0;

  for (int n = 0; n <= N; ++n) {
    // Fibers of the generating maps at this level.
    std::vector<std::vector<std::vector<int>>> fibers(r);
    for (int k = 0; k < r; ++k) {
      if (plans[k].generator < 0) continue;
      const auto& c = constraints[plans[k].generator];
      const SimplicialMap& m = plans[k].k_is_left ? c.left_map : c.right_map;
      fibers[k].assign(m.target().size(n), {});
      for (std::size_t x = 0; x < factors[k].size(n); ++x) fibers[k][m(n, static_cast<int>(x))].push_back(static_cast<int>(x));
    }
    std::vector<int> cur(r);
    std::vector<int> all_idx;
    auto rec = [&](auto&& self, int k) -> void {
      if (k == r) {
        lookup[n].emplace(cur, static_cast<int>(tuples[n].size()));
        tuples[n].push_back(cur);
        if (++total > budget.max_simplices)
          throw BudgetExceeded("limit construction exceeds the budget of " + std::to_string(budget.max_simplices) +
                               " simplices");
        return;
      }
      auto try_candidate = [&](int x) {
        cur[k] = x;
        for (int ci : plans[k].checks) {
          const auto& c = constraints[ci];
          if (c.left_map(n, cur[c.left]) != c.right_map(n, cur[c.right])) return;
        }
        self(self, k + 1);
      };
      if (plans[k].generator >= 0) {
        const auto& c = constraints[plans[k].generator];
        int v = plans[k].k_is_left ? c.right_map(n, cur[c.right]) : c.left_map(n, cur[c.left]);
        for (int x : fibers[k][v]) try_candidate(x);
      } else {
        for (std::size_t x = 0; x < factors[k].size(n); ++x) try_candidate(static_cast<int>(x));
      }
    };
    rec(rec, 0);
    lv.sizes[n] = tuples[n].size();
  }

  auto find_at = [&](int n, const std::vector<int>& t) {
    auto it = lookup[n].find(t);
    if (it == lookup[n].end()) throw InvalidObject({"limit is not closed under simplicial operators"});
    return it->second;
  };
  for (int n = 0; n <= N; ++n) {
    if (n >= 1) {
      lv.faces[n].assign(n + 1, std::vector<int>(lv.sizes[n]));
      for (int i = 0; i <= n; ++i)
        for (std::size_t x = 0; x < lv.sizes[n]; ++x) {
          std::vector<int> t(r);
          for (int k = 0; k < r; ++k) t[k] = factors[k].face(n, i, tuples[n][x][k]);
          lv.faces[n][i][x] = find_at(n - 1, t);
        }
    }
    if (n < N) {
      lv.degens[n].assign(n + 1, std::vector<int>(lv.sizes[n]));
      for (int i = 0; i <= n; ++i)
        for (std::size_t x = 0; x < lv.sizes[n]; ++x) {
          std::vector<int> t(r);
          for (int k = 0; k < r; ++k) t[k] = factors[k].degeneracy(n, i, tuples[n][x][k]);
          lv.degens[n][i][x] = find_at(n + 1, t);
        }
    }
  }

  Compressed comp = compress(
      lv,
      [&](int n, int x) {
        if (r == 0) return std::string("*");
        std::string s = "(";
        for (int k = 0; k < r; ++k) {
          if (k) s += ",";
          s += factors[k].simplex_name(n, tuples[n][x][k]);
        }
        return s + ")";
      },
      budget);

  auto data = std::make_shared<Data>();
  data->set = comp.set;
  data->factors = std::move(factors);
  data->tuples.resize(N + 1);
  data->lookup.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    data->tuples[n].resize(lv.sizes[n]);
    for (std::size_t x = 0; x < lv.sizes[n]; ++x) {
      int nx = comp.relabel[n][x];
      data->lookup[n].emplace(tuples[n][x], nx);
      data->tuples[n][nx] = std::move(tuples[n][x]);
    }
  }
  LimitSet out;
  out.data_ = std::move(data);
  return out;
}

const SimplicialSet& LimitSet::set() const { return data_->set; }
const std::vector<SimplicialSet>& LimitSet::factors() const { return data_->factors; }
const std::vector<int>& LimitSet::tuple(int n, int x) const { return data_->tuples[n][x]; }

std::optional<int> LimitSet::find(int n, const std::vector<int>& tuple) const {
  auto it = data_->lookup[n].find(tuple);
  if (it == data_->lookup[n].end()) return std::nullopt;
  return it->second;
}

SimplicialMap LimitSet::projection(int k) const {
  const int N = set().truncation();
  std::vector<std::vector<int>> levels(N + 1);
  for (int n = 0; n <= N; ++n) {
    levels[n].resize(set().size(n));
    for (std::size_t x = 0; x < levels[n].size(); ++x) levels[n][x] = data_->tuples[n][x][k];
  }
  SimplicialSet tgt = data_->factors[k];
  return SimplicialMap::from_dense(set(), tgt, std::move(levels));
}

SimplicialMap LimitSet::induced(const SimplicialSet& source, const std::vector<SimplicialMap>& legs) const {
  const int N = source.truncation();
  if (N > set().truncation()) throw InvalidObject({"source is truncated above the limit"});
  if (legs.size() != data_->factors.size()) throw InvalidObject({"wrong number of legs for the limit"});
  std::vector<std::vector<int>> levels(N + 1);
  std::vector<int> t(legs.size());
  for (int n = 0; n <= N; ++n) {
    levels[n].resize(source.size(n));
    for (std::size_t x = 0; x < source.size(n); ++x) {
      for (std::size_t k = 0; k < legs.size(); ++k) t[k] = legs[k](n, static_cast<int>(x));
      auto idx = find(n, t);
      if (!idx)
        throw InvalidObject({"legs do not satisfy the limit constraints at '" +
                             source.simplex_name(n, static_cast<int>(x)) + "'"});
      levels[n][x] = *idx;
    }
  }
  return SimplicialMap::from_dense(source, set(), std::move(levels));
}

LimitSet product(const SimplicialSet& a, const SimplicialSet& b, const Budget& budget) {
  return LimitSet::build({a, b}, {}, -1, budget);
}

LimitSet product(const std::vector<SimplicialSet>& factors, const Budget& budget) {
  return LimitSet::build(factors, {}, -1, budget);
}

LimitSet pullback(const SimplicialMap& f, const SimplicialMap& g, const Budget& budget) {
  return LimitSet::build({f.source(), g.source()}, {LimitConstraint{0, f, 1, g}}, -1, budget);
}

SimplicialMap limit_map(const LimitSet& from, const LimitSet& to, const std::vector<SimplicialMap>& components) {
  std::vector<SimplicialMap> legs;
  for (std::size_t k = 0; k < components.size(); ++k) legs.push_back(compose(components[k], from.projection(static_cast<int>(k))));
  return to.induced(from.set(), legs);
}

}  // namespace segal
