#include "segal/straightening.hpp"

#include "segal/constructions.hpp"
#include "segal/kan.hpp"

namespace segal {

Unstraightening unstraighten(const GSpace& x, int M, int up_to, const OracleOptions& opts) {
  Unstraightening out;
  out.bar = bar_construction(x, M, opts.budget);
  out.report.kind = "unstraighten";
  out.report.ext_truncation = M;
  out.report.up_to = std::min(up_to, M);
  out.report.add_report(is_segal_group_action(out.bar.map, up_to, opts), "action");
  out.report.add_report(cross_check_inverted(out.bar.map, up_to, opts), "cross_check");
  return out;
}

GSpace straighten(const SpaceMap& pi, const SimplicialGroup& g, const Budget& budget) {
  const int M = pi.ext_truncation();
  const int T = pi.target().int_truncation();
  BarConstruction gg = bar_construction(GSpace::translation(g, T), M, budget);
  const SimplicialSpace& bar = gg.map.target();
  bool same = pi.target().ext_truncation() == M;
  for (int n = 0; n <= M && same; ++n) same = pi.target().level(n) == bar.level(n);
  if (!same) throw InvalidObject({"the target of the action is not Bar(G) for the given group"});
  if (pi.source().int_truncation() < T) throw InvalidObject({"source levels are truncated below the target"});

  std::vector<LimitSet> ps;
  for (int n = 0; n <= M; ++n) {
    SimplicialMap pn = pi.level(n).source().truncation() == T ? pi.level(n) : truncate(pi.level(n), T);
    ps.push_back(pullback(pn, gg.map.level(n), budget));
  }
  auto src_face = [&](int n, int i) {
    const SimplicialMap& f = pi.source().face(n, i);
    return f.source().truncation() == T ? f : truncate(f, T);
  };
  auto src_degen = [&](int n, int i) {
    const SimplicialMap& f = pi.source().degeneracy(n, i);
    return f.source().truncation() == T ? f : truncate(f, T);
  };
  std::vector<SimplicialSet> levels;
  for (const auto& p : ps) levels.push_back(p.set());
  std::vector<std::vector<SimplicialMap>> faces(M + 1), degens(M + 1);
  for (int n = 1; n <= M; ++n)
    for (int i = 0; i <= n; ++i)
      faces[n].push_back(limit_map(ps[n], ps[n - 1], {src_face(n, i), gg.map.source().face(n, i)}));
  for (int n = 0; n < M; ++n)
    for (int i = 0; i <= n; ++i)
      degens[n].push_back(limit_map(ps[n], ps[n + 1], {src_degen(n, i), gg.map.source().degeneracy(n, i)}));
  SimplicialSpace p = SimplicialSpace::make(std::move(levels), std::move(faces), std::move(degens));
  Diagonal d = diagonal_with_index(p);
  const int D = d.set.truncation();
  const GroupSet& gs = gg.group;
  std::vector<std::vector<std::vector<int>>> action(D + 1);
  for (int n = 0; n <= D; ++n) {
    const FiniteGroup& gn = g.level(n);
    std::vector<int> from_diag(d.set.size(n));
    for (std::size_t z = 0; z < d.index[n].size(); ++z) from_diag[d.index[n][z]] = static_cast<int>(z);
    action[n].resize(d.set.size(n));
    for (std::size_t z = 0; z < from_diag.size(); ++z) {
      const auto& pt = ps[n].tuple(n, from_diag[z]);
      const auto& bt = gg.source_levels[n].tuple(n, pt[1]);
      std::vector<int> row(gn.order());
      for (int h = 0; h < gn.order(); ++h) {
        std::vector<int> b2 = bt;
        b2[0] = gs.simplex_of[n][gn.mul(gn.inv(h), gs.element_of[n][bt[0]])];
        int b = *gg.source_levels[n].find(n, b2);
        row[h] = d.index[n][*ps[n].find(n, {pt[0], b})];
      }
      action[n][z] = std::move(row);
    }
  }
  return GSpace::make(d.set, g, std::move(action));
}

RoundTrip roundtrip(const GSpace& x, int up_to, const Budget& budget) {
  const int N = x.truncation();
  RoundTrip r;
  r.compared_up_to = up_to;
  BarConstruction bar = bar_construction(x, N, budget);
  GSpace s = straighten(bar.map, x.group(), budget);
  r.original = homology(x.space(), N);
  r.underlying = homology(s.space(), s.truncation());
  r.borel = homology(borel(x, budget).set, N);
  r.quotient = homology(orbit_quotient(s, budget).set, s.truncation());
  const bool a = r.original.matches(r.underlying, up_to);
  const bool b = r.borel.matches(r.quotient, up_to);
  if (a && b) {
    r.verdict = Verdict::certified(up_to + 1, "homology signatures agree through degree " + std::to_string(up_to));
  } else {
    json w;
    w["degree_range"] = up_to;
    if (!a) w["underlying"] = {{"expected", r.original.to_string(up_to)}, {"found", r.underlying.to_string(up_to)}};
    if (!b) w["quotient"] = {{"expected", r.borel.to_string(up_to)}, {"found", r.quotient.to_string(up_to)}};
    r.verdict = Verdict::refuted(up_to + 1, "homology signatures differ", w);
  }
  return r;
}

json to_json(const RoundTrip& r) {
  json j;
  j["compared_up_to"] = r.compared_up_to;
  j["original"] = to_json(r.original);
  j["underlying"] = to_json(r.underlying);
  j["borel"] = to_json(r.borel);
  j["quotient"] = to_json(r.quotient);
  j["result"] = to_json(r.verdict);
  return j;
}

BorelHolim borel_holim_check(const GCospan& c, int truncation, const OracleOptions& opts) {
  std::vector<std::string> errors;
  if (!is_equivariant(c.x, c.y, c.f)) errors.push_back("X -> Y is not equivariant");
  if (!is_equivariant(c.z, c.y, c.g)) errors.push_back("Z -> Y is not equivariant");
  if (!errors.empty()) throw InvalidObject(std::move(errors));
  const int N = std::min({truncation, c.x.truncation(), c.y.truncation(), c.z.truncation()});
  SimplicialMap f = truncate(c.f, N);
  SimplicialMap g = truncate(c.g, N);
  GSpace x = truncate(c.x, N), y = truncate(c.y, N), z = truncate(c.z, N);
  BorelHolim out;
  bool exact = true;
  std::string note;

  // X x^h_Y Z: strict when a leg is a fibration.
  if (!is_fibration(f, N).certified() && !is_fibration(g, N).certified()) {
    exact = false;
    note = "neither leg of the G-cospan is a fibration; the strict pullback stands in for the homotopy pullback";
  }
  LimitSet p = pullback(f, g, opts.budget);
  std::vector<std::vector<std::vector<int>>> act(N + 1);
  for (int n = 0; n <= N; ++n)
    for (std::size_t q = 0; q < p.set().size(n); ++q) {
      const auto& t = p.tuple(n, static_cast<int>(q));
      std::vector<int> row(x.group().level(n).order());
      for (int h = 0; h < static_cast<int>(row.size()); ++h) row[h] = *p.find(n, {x.act(n, t[0], h), z.act(n, t[1], h)});
      act[n].push_back(std::move(row));
    }
  GSpace pg = GSpace::make(p.set(), x.group(), std::move(act));

  Borel bp = borel(pg, opts.budget), bx = borel(x, opts.budget), by = borel(y, opts.budget), bz = borel(z, opts.budget);
  HomotopyPullback hp = homotopy_pullback(borel_map(bx, by, f), borel_map(bz, by, g), N, opts);
  out.mode = hp.mode;
  exact = exact && hp.exact;
  if (!hp.note.empty()) note = note.empty() ? hp.note : note + "; " + hp.note;
  SimplicialMap cmp =
      hp.comparison(borel_map(bp, bx, p.projection(0)), borel_map(bp, bz, p.projection(1)));
  out.lhs = homology(bp.set, N);
  out.rhs = homology(hp.set(), hp.set().truncation());
  out.verdict = weak_equivalence_verdict(cmp, hp.set().truncation());
  out.verdict.note += (out.verdict.note.empty() ? "" : "; ") + std::string("homotopy pullback model: ") + hp.mode;
  if (!exact) out.verdict = cap_consistent(out.verdict, note);
  return out;
}

json to_json(const BorelHolim& r) {
  json j;
  j["mode"] = r.mode;
  j["lhs_homology"] = to_json(r.lhs);
  j["rhs_homology"] = to_json(r.rhs);
  j["result"] = to_json(r.verdict);
  return j;
}

}  // namespace segal
