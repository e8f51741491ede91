#include "segal/oracle.hpp"

#include <algorithm>

#include "segal/constructions.hpp"
#include "segal/fundamental_group.hpp"
#include "segal/homology.hpp"
#include "segal/kan.hpp"
#include "segal/mapping.hpp"

namespace segal {

namespace {

bool levelwise_bijective(const SimplicialMap& f, int N) {
  for (int n = 0; n <= N; ++n) {
    if (f.source().size(n) != f.target().size(n)) return false;
    std::vector<char> hit(f.target().size(n), 0);
    for (int v : f.level(n))
      if (hit[v]++) return false;
  }
  return true;
}

SimplicialMap truncate_to(const SimplicialMap& f, int T) {
  if (f.source().truncation() == T && f.target().truncation() == T) return f;
  return truncate(f, T);
}

}  // namespace

Verdict weak_equivalence_verdict(const SimplicialMap& f, int truncation) {
  const SimplicialSet& x = f.source();
  const SimplicialSet& y = f.target();
  int N = std::min(x.truncation(), y.truncation());
  if (truncation >= 0) N = std::min(N, truncation);
  if (levelwise_bijective(f, N)) return Verdict::certified(N, "isomorphism through the truncation");

  // pi_0.
  auto cx = components(x);
  auto cy = components(y);
  std::size_t nx = 0, ny = 0;
  for (int c : cx) nx = std::max<std::size_t>(nx, c + 1);
  for (int c : cy) ny = std::max<std::size_t>(ny, c + 1);
  std::vector<int> induced(nx, -1);
  for (std::size_t v = 0; v < x.size(0); ++v) induced[cx[v]] = cy[f(0, static_cast<int>(v))];
  std::vector<int> hit(ny, 0);
  for (int c : induced) ++hit[c];
  for (std::size_t c = 0; c < ny; ++c)
    if (hit[c] != 1) {
      json w{{"invariant", "pi0"}, {"source_components", nx}, {"target_components", ny}};
      return Verdict::refuted(N, "map is not a bijection on components", w);
    }
  if (N == 0) return Verdict::certified(0, "bijection on components");

  // Homology: the mapping cone is acyclic through N-1 and both sides agree there.
  HomologySignature hx = homology(x, N), hy = homology(y, N);
  HomologySignature hc = homology(mapping_cone(f, N));
  for (int k = 0; k <= N - 1; ++k) {
    if (!hc.groups[k].trivial() || !(hx.groups[k] == hy.groups[k])) {
      json w{{"invariant", "homology"},
             {"degree", k},
             {"source", to_json(hx.groups[k])},
             {"target", to_json(hy.groups[k])},
             {"mapping_cone", to_json(hc.groups[k])}};
      return Verdict::refuted(N, "induced map is not a homology isomorphism in degree " + std::to_string(k), w);
    }
  }

  // pi_1 on every component.
  bool simply_connected = true;
  std::vector<char> done(nx, 0);
  for (std::size_t v = 0; v < x.size(0); ++v) {
    if (done[cx[v]]) continue;
    done[cx[v]] = 1;
    FpGroup gx = simplify(pi1_presentation(x, static_cast<int>(v)).group);
    FpGroup gy = simplify(pi1_presentation(y, f(0, static_cast<int>(v))).group);
    auto ox = group_order(gx), oy = group_order(gy);
    if (ox && oy && *ox == 1 && *oy == 1) continue;
    simply_connected = false;
    Verdict g = compare_groups(gx, gy, N);
    if (g.refuted()) {
      json w = g.witness;
      w["invariant"] = "pi1";
      w["vertex"] = x.simplex_name(0, static_cast<int>(v));
      return Verdict::refuted(N, g.note, w);
    }
  }
  if (simply_connected)
    return Verdict::certified(N, "simply connected with a homology isomorphism through degree " + std::to_string(N - 1));
  return Verdict::consistent(N, "invariants agree but a fundamental group is nontrivial");
}

SimplicialMap HomotopyPullback::comparison(const SimplicialMap& to_left, const SimplicialMap& to_right) const {
  const int T = set().truncation();
  SimplicialMap l = truncate_to(to_left, T);
  SimplicialMap r = truncate_to(to_right, T);
  if (mode == "strict") return limit.induced(l.source(), {l, r});
  SimplicialMap path = compose(constant, compose(left_leg, l));
  return limit.induced(l.source(), {l, path, r});
}

SimplicialMap HomotopyPullback::to_left() const { return limit.projection(0); }

SimplicialMap HomotopyPullback::to_right() const {
  return limit.projection(static_cast<int>(limit.factors().size()) - 1);
}

HomotopyPullback homotopy_pullback(const SimplicialMap& left_down, const SimplicialMap& right_down, int truncation,
                                   const OracleOptions& opts) {
  int N = std::min({left_down.source().truncation(), right_down.source().truncation(), left_down.target().truncation()});
  if (truncation >= 0) N = std::min(N, truncation);
  SimplicialMap ld = truncate_to(left_down, N);
  SimplicialMap rd = truncate_to(right_down, N);
  const SimplicialSet& c = ld.target();

  HomotopyPullback hp;
  if (is_fibration(rd, N).certified() || is_fibration(ld, N).certified()) {
    hp.mode = "strict";
    hp.limit = pullback(ld, rd, opts.budget);
    hp.left_leg = ld;
    return hp;
  }
  auto path_model = [&](const SimplicialMap& l, const SimplicialMap& r) {
    PathSpace ps = path_space(l.target(), opts.budget);
    hp.limit = LimitSet::build({l.source(), ps.complex.set(), r.source()},
                               {LimitConstraint{0, l, 1, ps.source}, LimitConstraint{1, ps.target, 2, r}}, -1,
                               opts.budget);
    hp.left_leg = l;
    hp.constant = ps.constant;
  };
  if (N >= 1 && kan_check(c, N).certified()) {
    hp.mode = "path-space";
    path_model(ld, rd);
    return hp;
  }
  hp.exact = false;
  hp.note = "corner is not Kan and neither leg is a fibration";
  if (N >= 1) {
    try {
      SimplicialMap unit = SimplicialMap::identity(c);
      for (int k = 0; k < opts.ex_stage; ++k) {
        ExResult e = ex(unit.target(), opts.budget);
        unit = compose(e.unit, unit);
      }
      hp.mode = "ex-path-space";
      path_model(compose(unit, ld), compose(unit, rd));
      hp.note += "; used Ex^" + std::to_string(opts.ex_stage) + " of the corner";
      return hp;
    } catch (const BudgetExceeded&) {
      hp.note += "; Ex replacement exceeded the budget";
    }
  }
  hp.mode = "strict";
  hp.limit = pullback(ld, rd, opts.budget);
  hp.left_leg = ld;
  return hp;
}

Verdict is_homotopy_cartesian(const HomotopySquare& sq, int truncation, const OracleOptions& opts) {
  sq.validate();
  int N = std::min({sq.top_right.source().truncation(), sq.top_right.target().truncation(),
                    sq.top_left.target().truncation(), sq.right_down.target().truncation()});
  if (truncation >= 0) N = std::min(N, truncation);
  HomotopyPullback hp = homotopy_pullback(sq.left_down, sq.right_down, N, opts);
  SimplicialMap cmp = hp.comparison(sq.top_left, sq.top_right);
  Verdict v = weak_equivalence_verdict(cmp, hp.set().truncation());
  std::string mode = "homotopy pullback model: " + hp.mode;
  v.note = v.note.empty() ? mode : v.note + "; " + mode;
  if (!hp.exact) v = cap_consistent(v, hp.note);
  return v;
}

}  // namespace segal
