#include "segal/segal_checks.hpp"

#include <algorithm>

#include "segal/constructions.hpp"
#include "segal/fundamental_group.hpp"
#include "segal/group.hpp"
#include "segal/homology.hpp"
#include "segal/kan.hpp"

namespace segal {

namespace {

const std::string kReedy = "reedy_fibration";

bool is_reedy(const std::string& name) { return name == kReedy || name.ends_with("." + kReedy); }

SimplicialSpace common_truncation(const SimplicialSpace& b) {
  const int T = b.int_truncation();
  for (int n = 0; n <= b.ext_truncation(); ++n)
    if (b.level(n).truncation() != T) return truncate_space(b, b.ext_truncation(), T);
  return b;
}

SpaceMap common_truncation(const SpaceMap& f) {
  const int T = std::min(f.source().int_truncation(), f.target().int_truncation());
  const int M = f.ext_truncation();
  bool same = f.target().ext_truncation() == M;
  for (int n = 0; n <= M && same; ++n)
    same = f.source().level(n).truncation() == T && f.target().level(n).truncation() == T;
  return same ? f : truncate_space_map(f, M, T);
}

Verdict at_level(Verdict v, int n) {
  if (v.witness.is_object()) v.witness["level"] = n;
  return v;
}

}  // namespace

void SegalReport::add(CheckEntry e) {
  Verdict contribution = e.verdict;
  if (is_reedy(e.name) && contribution.refuted())
    contribution = cap_consistent(contribution, "not Reedy fibrant; no fibrant replacement is computed");
  overall = checks.empty() ? contribution : meet(overall, contribution);
  checks.push_back(std::move(e));
}

void SegalReport::add_report(const SegalReport& r, const std::string& prefix) {
  for (const auto& e : r.checks) {
    CheckEntry c = e;
    c.name = prefix + "." + e.name;
    Verdict contribution = c.verdict;
    if (is_reedy(e.name) && contribution.refuted())
      contribution = cap_consistent(contribution, "not Reedy fibrant; no fibrant replacement is computed");
    overall = checks.empty() ? contribution : meet(overall, contribution);
    checks.push_back(std::move(c));
  }
}

const CheckEntry* SegalReport::find(const std::string& name, int level) const {
  for (const auto& e : checks)
    if (e.name == name && e.level == level) return &e;
  return nullptr;
}

json to_json(const CheckEntry& e) {
  json j;
  j["name"] = e.name;
  if (e.level >= 0) j["level"] = e.level;
  j["result"] = to_json(e.verdict);
  return j;
}

json to_json(const SegalReport& r) {
  json j;
  j["kind"] = r.kind;
  j["ext_truncation"] = r.ext_truncation;
  j["up_to"] = r.up_to;
  json cs = json::array();
  for (const auto& e : r.checks) cs.push_back(to_json(e));
  j["checks"] = std::move(cs);
  j["overall"] = to_json(r.overall);
  return j;
}

Verdict reedy_fibration_check(const SpaceMap& pi0, int up_to, const Budget& budget) {
  SpaceMap pi = common_truncation(pi0);
  const SimplicialSpace& a = pi.source();
  const SimplicialSpace& b = pi.target();
  const int T = a.int_truncation();
  const int top = std::min(up_to, pi.ext_truncation());
  Verdict out = Verdict::certified(T);
  for (int n = 0; n <= top; ++n) {
    LimitSet ma = matching_object(a, n, budget);
    LimitSet mb = matching_object(b, n, budget);
    std::vector<SimplicialMap> comps(n == 0 ? 0 : n + 1, n == 0 ? SimplicialMap() : pi.level(n - 1));
    SimplicialMap mpi = limit_map(ma, mb, comps);
    LimitSet p = pullback(matching_map(b, n, mb), mpi, budget);
    SimplicialMap rel = p.induced(a.level(n), {pi.level(n), matching_map(a, n, ma)});
    Verdict v = is_fibration(rel, T);
    if (v.refuted()) {
      v.note = "relative matching map at level " + std::to_string(n) + " is not a Kan fibration";
      return at_level(v, n);
    }
    out = meet(out, v);
  }
  return out;
}

SegalMap segal_map(const SimplicialSpace& b0, int n, const Budget& budget) {
  SimplicialSpace b = common_truncation(b0);
  if (n < 1 || n > b.ext_truncation()) throw InvalidObject({"Segal map level out of range"});
  std::vector<SimplicialSet> factors(n, b.level(1));
  std::vector<LimitConstraint> cons;
  for (int k = 0; k + 1 < n; ++k) cons.push_back(LimitConstraint{k, b.face(1, 0), k + 1, b.face(1, 1)});
  LimitSet target = LimitSet::build(std::move(factors), std::move(cons), b.int_truncation(), budget);
  std::vector<SimplicialMap> legs;
  for (int i = 1; i <= n; ++i) legs.push_back(b.operator_map(n, {i - 1, i}));
  SimplicialMap map = target.induced(b.level(n), legs);
  return {std::move(target), std::move(map)};
}

Verdict segal_verdict(const SimplicialSpace& b0, int n, const OracleOptions& opts) {
  SimplicialSpace b = common_truncation(b0);
  const int T = b.int_truncation();
  if (n == 1) return Verdict::certified(T, "the Segal map at level 1 is the identity");
  // P_k = P_{k-1} x^h_{B_0} B_1, glued along the last edge's target and the next edge's source.
  SimplicialMap cmp = b.operator_map(n, {0, 1});
  SimplicialMap last = SimplicialMap::identity(b.level(1));  // P -> B_1, the last edge
  bool exact = true;
  std::vector<std::string> modes;
  std::string notes;
  int N = T;
  for (int k = 2; k <= n; ++k) {
    HomotopyPullback hp = homotopy_pullback(compose(b.face(1, 0), last), b.face(1, 1), N, opts);
    SimplicialMap edge = b.operator_map(n, {k - 1, k});
    cmp = hp.comparison(cmp, edge);
    last = hp.to_right();
    N = hp.set().truncation();
    exact = exact && hp.exact;
    modes.push_back(hp.mode);
    if (!hp.note.empty()) notes = hp.note;
  }
  Verdict v = weak_equivalence_verdict(cmp, N);
  std::string m = "homotopy pullback models:";
  for (const auto& s : modes) m += " " + s;
  v.note = v.note.empty() ? m : v.note + "; " + m;
  if (!exact) v = cap_consistent(v, notes);
  SegalMap strict = segal_map(b, n, opts.budget);
  if (v.refuted()) {
    json sizes = json::array();
    for (int m2 = 0; m2 <= T; ++m2)
      sizes.push_back({{"internal", m2}, {"source", b.level(n).size(m2)}, {"strict_target", strict.target.set().size(m2)}});
    v.witness["cardinalities"] = sizes;
  }
  v.note += strict.map.is_isomorphism() ? "; strict Segal map is a bijection" : "; strict Segal map is not a bijection";
  return v;
}

SegalReport is_segal_space(const SimplicialSpace& b0, int up_to, const OracleOptions& opts) {
  SimplicialSpace b = common_truncation(b0);
  SegalReport r;
  r.kind = "segal_space";
  r.ext_truncation = b.ext_truncation();
  r.up_to = std::min(up_to, b.ext_truncation());
  r.add({kReedy, -1, reedy_fibration_check(to_terminal(b), r.up_to, opts.budget)});
  for (int n = 2; n <= r.up_to; ++n) r.add({"segal_map", n, at_level(segal_verdict(b, n, opts), n)});
  return r;
}

Verdict is_group_like(const SimplicialSpace& b0, const OracleOptions& opts) {
  SimplicialSpace b = common_truncation(b0);
  if (b.ext_truncation() < 2) throw InvalidObject({"group-like check needs external truncation >= 2"});
  HomotopySquare sq{b.face(2, 0), b.face(2, 1), b.face(1, 0), b.face(1, 0)};
  Verdict v = is_homotopy_cartesian(sq, b.int_truncation(), opts);
  return v;
}

SegalReport is_segal_group(const SimplicialSpace& b0, int up_to, const OracleOptions& opts) {
  SimplicialSpace b = common_truncation(b0);
  SegalReport r = is_segal_space(b, up_to, opts);
  r.kind = "segal_group";
  if (b.ext_truncation() >= 2) r.add({"group_like", 2, is_group_like(b, opts)});
  r.add({"b0_contractible", 0, weak_equivalence_verdict(to_point(b.level(0)), b.int_truncation())});
  return r;
}

SimplicialMap vertex_map(const SimplicialSpace& b, int n, int k) { return b.operator_map(n, {k}); }

namespace {

Verdict vertex_square(const SpaceMap& pi, int n, int k, const OracleOptions& opts) {
  const SimplicialSpace& a = pi.source();
  const SimplicialSpace& b = pi.target();
  HomotopySquare sq{vertex_map(a, n, k), pi.level(n), pi.level(0), vertex_map(b, n, k)};
  return at_level(is_homotopy_cartesian(sq, a.int_truncation(), opts), n);
}

}  // namespace

SegalReport is_segal_group_action(const SpaceMap& pi0, int up_to, const OracleOptions& opts) {
  SpaceMap pi = common_truncation(pi0);
  SegalReport r;
  r.kind = "segal_group_action";
  r.ext_truncation = pi.ext_truncation();
  r.up_to = std::min(up_to, pi.ext_truncation());
  r.add({kReedy, -1, reedy_fibration_check(pi, r.up_to, opts.budget)});
  r.add_report(is_segal_group(pi.target(), r.up_to, opts), "target");
  for (int n = 1; n <= r.up_to; ++n) r.add({"alpha0_square", n, vertex_square(pi, n, 0, opts)});
  return r;
}

SegalReport cross_check_inverted(const SpaceMap& pi0, int up_to, const OracleOptions& opts) {
  SpaceMap pi = common_truncation(pi0);
  SegalReport r;
  r.kind = "cross_check_inverted";
  r.ext_truncation = pi.ext_truncation();
  r.up_to = std::min(up_to, pi.ext_truncation());
  for (int n = 1; n <= r.up_to; ++n) r.add({"alphan_square", n, vertex_square(pi, n, n, opts)});
  r.add_report(is_segal_space(pi.source(), r.up_to, opts), "source");
  if (pi.ext_truncation() >= 2) r.add({"source.group_like", 2, is_group_like(pi.source(), opts)});
  return r;
}

LoopsComparison loops_comparison(const SimplicialSpace& b0, const OracleOptions& opts) {
  (void)opts;
  SimplicialSpace b = common_truncation(b0);
  LoopsComparison out;
  if (b.ext_truncation() < 2 || b.int_truncation() < 0)
    throw InvalidObject({"loops comparison needs external truncation >= 2"});
  const SimplicialSet& b1 = b.level(1);
  const SimplicialSet& b2 = b.level(2);
  std::vector<int> comp = components(b1);
  const int k = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> rep(k, -1);
  for (std::size_t v = 0; v < comp.size(); ++v)
    if (rep[comp[v]] < 0) rep[comp[v]] = static_cast<int>(v);
  for (int c = 0; c < k; ++c) out.pi0_names.push_back(b1.simplex_name(0, rep[c]));
  const int D = std::min(b.ext_truncation(), b.int_truncation());
  std::vector<std::vector<int>> table(k, std::vector<int>(k, -1));
  for (std::size_t c = 0; c < b2.size(0); ++c) {
    const int x = comp[b.face(2, 2)(0, static_cast<int>(c))];
    const int y = comp[b.face(2, 0)(0, static_cast<int>(c))];
    const int z = comp[b.face(2, 1)(0, static_cast<int>(c))];
    if (table[x][y] < 0) {
      table[x][y] = z;
    } else if (table[x][y] != z) {
      out.verdict = Verdict::refuted(D, "composition on pi_0(B_1) is not well defined",
                                     {{"invariant", "pi0_multiplication"},
                                      {"left", out.pi0_names[x]},
                                      {"right", out.pi0_names[y]},
                                      {"products", {out.pi0_names[table[x][y]], out.pi0_names[z]}}});
      return out;
    }
  }
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      if (table[x][y] < 0) {
        out.verdict = Verdict::refuted(
            D, "no 2-simplex composes these components",
            {{"invariant", "pi0_multiplication"}, {"left", out.pi0_names[x]}, {"right", out.pi0_names[y]}});
        return out;
      }
  FiniteGroup h;
  try {
    h = FiniteGroup::from_table(out.pi0_names, table);
  } catch (const InvalidObject& e) {
    out.verdict = Verdict::refuted(D, "pi_0(B_1) is not a group",
                                   {{"invariant", "pi0_group_laws"}, {"violations", e.violations()}});
    return out;
  }
  out.pi0_table = table;
  SimplicialSet d = diagonal(b);
  if (d.truncation() < 2) {
    out.verdict = Verdict::consistent(D, "diagonal truncated below dimension 2");
    return out;
  }
  Pi1Presentation p = pi1_presentation(d, 0);
  out.verdict = compare_with_finite(p.group, h, D);
  out.verdict.note = "pi_1 of the diagonal against pi_0(B_1) of order " + std::to_string(h.order()) +
                     (out.verdict.note.empty() ? "" : "; " + out.verdict.note);
  return out;
}

}  // namespace segal
