#include "segal/tower.hpp"

#include "segal/fundamental_group.hpp"
#include "segal/homology.hpp"

namespace segal {

namespace {

SimplicialMap coskeleton_restriction(const AppliedObject& from, const AppliedObject& to) {
  const MappingComplex& a = from.stages.back();
  const MappingComplex& b = to.stages.back();
  const int T = a.family().truncation();
  std::vector<std::vector<int>> ids(T + 1);
  for (int m = 0; m <= T; ++m)
    for (int j = 0; j <= m; ++j) ids[m].push_back(j);
  return restrict_along(a, b, ids);
}

// Builds a space map, recording a refutation instead of throwing.
bool make_map(const SimplicialSpace& s, const SimplicialSpace& t, std::vector<SimplicialMap> levels, SpaceMap& out,
              std::vector<CheckEntry>& checks, const std::string& name, int n, int T) {
  try {
    out = SpaceMap::make(s, t, std::move(levels));
    checks.push_back({name, n, Verdict::certified(T, "commutes with every external face and degeneracy")});
    return true;
  } catch (const InvalidObject& e) {
    checks.push_back({name, n, Verdict::refuted(T, "not a map of simplicial spaces", {{"violations", e.violations()}})});
    return false;
  }
}

Verdict equal_levels(const std::vector<SimplicialMap>& a, const std::vector<SimplicialMap>& b, int T) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!(a[j] == b[j])) return Verdict::refuted(T, "maps differ", {{"ext_level", j}});
  return Verdict::certified(T, "equal simplex-wise");
}

std::vector<SimplicialMap> composite(const SpaceMap& outer, const SpaceMap& inner) {
  std::vector<SimplicialMap> out;
  for (int j = 0; j <= inner.ext_truncation(); ++j) out.push_back(compose(outer.level(j), inner.level(j)));
  return out;
}

std::vector<SimplicialMap> levels_of(const SpaceMap& f) {
  std::vector<SimplicialMap> out;
  for (int j = 0; j <= f.ext_truncation(); ++j) out.push_back(f.level(j));
  return out;
}

}  // namespace

TowerDiagram build_tower(const GSpace& x, int n_max, int k, int M, const OracleOptions& opts, bool stage_reports) {
  TowerDiagram t;
  t.n_max = n_max;
  t.k = k;
  t.base = bar_action(x, M, opts.budget);
  const int T = x.truncation();
  t.p_source.resize(n_max + 1);
  t.p_target.resize(n_max + 1);
  t.tau_source.resize(n_max + 1);
  t.tau_target.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    t.stages.push_back(apply_levelwise(EndoFunctor::postnikov(n, k), t.base, M, opts, stage_reports));
    const LevelwiseApplication& st = t.stages.back();
    std::vector<SimplicialMap> ts, tt;
    for (int j = 0; j <= M; ++j) {
      ts.push_back(st.source_levels[j].unit);
      tt.push_back(st.target_levels[j].unit);
    }
    bool ok_s = make_map(t.base.source(), st.map.source(), ts, t.tau_source[n], t.checks, "tau_source_natural", n, T);
    bool ok_t = make_map(t.base.target(), st.map.target(), tt, t.tau_target[n], t.checks, "tau_target_natural", n, T);
    if (ok_s && ok_t)
      t.checks.push_back({"tau_square", n,
                          equal_levels(composite(st.map, t.tau_source[n]), composite(t.tau_target[n], t.base), T)});
    if (n == 0) continue;
    const LevelwiseApplication& prev = t.stages[n - 1];
    std::vector<SimplicialMap> ps, pt;
    for (int j = 0; j <= M; ++j) {
      ps.push_back(coskeleton_restriction(st.source_levels[j], prev.source_levels[j]));
      pt.push_back(coskeleton_restriction(st.target_levels[j], prev.target_levels[j]));
    }
    bool okp_s = make_map(st.map.source(), prev.map.source(), ps, t.p_source[n], t.checks, "p_source_natural", n, T);
    bool okp_t = make_map(st.map.target(), prev.map.target(), pt, t.p_target[n], t.checks, "p_target_natural", n, T);
    if (okp_s && okp_t)
      t.checks.push_back({"p_square", n,
                          equal_levels(composite(prev.map, t.p_source[n]), composite(t.p_target[n], st.map), T)});
    if (okp_s && ok_s)
      t.checks.push_back({"p_tau_source", n,
                          equal_levels(composite(t.p_source[n], t.tau_source[n]), levels_of(t.tau_source[n - 1]), T)});
    if (okp_t && ok_t)
      t.checks.push_back({"p_tau_target", n,
                          equal_levels(composite(t.p_target[n], t.tau_target[n]), levels_of(t.tau_target[n - 1]), T)});
  }
  for (std::size_t i = 0; i < t.checks.size(); ++i)
    t.overall = i == 0 ? t.checks[i].verdict : meet(t.overall, t.checks[i].verdict);
  return t;
}

json to_json(const TowerDiagram& t) {
  json j;
  j["n_max"] = t.n_max;
  j["ex_stage"] = t.k;
  j["ext_truncation"] = t.base.ext_truncation();
  json stages = json::array();
  for (std::size_t n = 0; n < t.stages.size(); ++n) {
    const LevelwiseApplication& st = t.stages[n];
    json s;
    s["n"] = n;
    s["functor"] = EndoFunctor::postnikov(static_cast<int>(n), t.k).name();
    json levels = json::array();
    for (int l = 0; l <= st.map.ext_truncation(); ++l) {
      const SimplicialSet& a = st.map.source().level(l);
      json e;
      e["level"] = l;
      e["source_homology"] = homology(a).to_string();
      e["target_homology"] = homology(st.map.target().level(l)).to_string();
      if (!a.empty() && a.truncation() >= 2) {
        Pi1Summary ps = summarize(pi1_presentation(a, 0).group);
        if (ps.order) e["source_pi1_order"] = *ps.order;
      }
      levels.push_back(std::move(e));
    }
    s["levels"] = std::move(levels);
    if (!st.report.checks.empty()) s["report"] = to_json(st.report);
    stages.push_back(std::move(s));
  }
  j["stages"] = std::move(stages);
  json cs = json::array();
  for (const auto& c : t.checks) cs.push_back(to_json(c));
  j["checks"] = std::move(cs);
  j["overall"] = to_json(t.overall);
  return j;
}

}  // namespace segal
