// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "segal/bisimplicial.hpp"
#include "segal/constructions.hpp"
#include "segal/functor.hpp"
#include "segal/fundamental_group.hpp"
#include "segal/gspace.hpp"
#include "segal/homology.hpp"
#include "segal/kan.hpp"
#include "segal/segal_checks.hpp"
#include "segal/smith.hpp"
#include "segal/straightening.hpp"
#include "segal/tower.hpp"

using namespace segal;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

SimplicialGroup constant(const FiniteGroup& g, int n) { return SimplicialGroup::constant(g, n); }

const std::vector<FiniteGroup>& corpus_groups() {
  static const std::vector<FiniteGroup> g = {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)};
  return g;
}

std::string gname(const FiniteGroup& g) {
  return g.order() == 6 ? "S3" : "Z/" + std::to_string(g.order());
}

std::vector<GSpace> corpus_gspaces(const SimplicialGroup& g, int n) {
  return {GSpace::point(g, n), GSpace::translation(g, n), GSpace::two_translations(g, n),
          GSpace::trivial(circle(n), g)};
}

const char* kSpaceNames[] = {"pt", "translation", "two translations", "trivial S1"};

// 1
Outcome segal_groups() {
  Outcome o;
  for (const FiniteGroup& g : corpus_groups()) {
    auto t0 = Clock::now();
    SimplicialSpace b = bar_group(constant(g, 3), 3, 3);
    SegalReport r = is_segal_group(b, 3);
    o.require(r.overall.certified(), gname(g) + ": is_segal_group not certified");
    for (int n = 1; n <= 3; ++n)
      o.require(segal_map(b, n).map.is_isomorphism(), gname(g) + ": Segal map " + std::to_string(n) + " not bijective");
    double dt = seconds_since(t0);
    o.require(dt < 10.0, gname(g) + ": took " + std::to_string(dt) + "s");
  }
  return o;
}

// 2
Outcome actions() {
  Outcome o;
  for (const FiniteGroup& g : corpus_groups()) {
    SimplicialGroup sg = constant(g, 3);
    auto xs = corpus_gspaces(sg, 3);
    for (std::size_t k = 0; k < xs.size(); ++k) {
      std::string tag = gname(g) + " " + kSpaceNames[k];
      Unstraightening u = unstraighten(xs[k], 3, 3);
      o.require(!is_segal_group_action(u.bar.map, 3).overall.refuted(), tag + ": action refuted");
      o.require(!cross_check_inverted(u.bar.map, 3).overall.refuted(), tag + ": cross-check refuted");
    }
    // Translation: (x, g_1, ..., g_n) -> (x g_1 ... g_n, g_1, ..., g_n), recomputed from the tuples.
    GSpace x = GSpace::translation(sg, 3);
    BarConstruction bc = bar_construction(x, 3);
    GroupSet xs0 = underlying_set(sg, 3);
    const SimplicialSpace& a = bc.map.source();
    for (int n = 1; n <= 3; ++n) {
      SimplicialMap alpha = vertex_map(a, n, n);
      for (std::size_t v = 0; v < a.level(n).size(0); ++v) {
        std::vector<int> t = bc.source_levels[n].tuple(0, static_cast<int>(v));
        int prod = g.identity();
        for (int i = 1; i <= n; ++i) prod = g.mul(prod, bc.group.element_of[0][t[i]]);
        int expect = xs0.simplex_of[0][g.mul(xs0.element_of[0][t[0]], prod)];
        int got = bc.source_levels[0].tuple(0, alpha(0, static_cast<int>(v)))[0];
        o.require(got == expect, gname(g) + ": alpha_n mismatch at level " + std::to_string(n));
        std::vector<int> b = bc.target_levels[n].tuple(0, bc.map.level(n)(0, static_cast<int>(v)));
        for (int i = 1; i <= n; ++i)
          o.require(b[i - 1] == t[i], gname(g) + ": pi_n mismatch at level " + std::to_string(n));
      }
    }
  }
  return o;
}

// 3
Outcome diagonal_kan() {
  Outcome o;
  for (const FiniteGroup& g : corpus_groups())
    o.require(kan_check(diagonal(bar_group(constant(g, 3), 3, 3)), 3).certified(), gname(g) + ": diagonal not Kan");
  return o;
}

// 4
Outcome loops() {
  Outcome o;
  for (const FiniteGroup& g : corpus_groups()) {
    SimplicialSpace b = bar_group(constant(g, 3), 3, 3);
    LoopsComparison lc = loops_comparison(b);
    o.require(lc.verdict.certified(), gname(g) + ": loops comparison not certified");
    o.require(lc.pi0_table.size() == static_cast<std::size_t>(g.order()), gname(g) + ": pi_0 B_1 has wrong order");
    // Independent: pi_1 of the diagonal from edge paths, against G.
    o.require(compare_with_finite(pi1_presentation(diagonal(b)).group, g, 3).certified(),
              gname(g) + ": pi_1 of the diagonal differs from G");
  }
  return o;
}

// 5
Outcome diagonal_vs_wbar() {
  Outcome o;
  SimplicialGroup z2 = constant(FiniteGroup::cyclic(2), 5);
  std::string lhs = homology(diagonal(bar_group(z2, 5, 5))).to_string(3);
  std::string rhs = homology(wbar(z2, 5)).to_string(3);
  o.require(lhs == "Z; Z/2; 0; Z/2", "d*Bar(Z/2) is " + lhs);
  o.require(rhs == "Z; Z/2; 0; Z/2", "W-bar(Z/2) is " + rhs);
  return o;
}

// 6
Outcome roundtrips() {
  Outcome o;
  SimplicialGroup z2 = constant(FiniteGroup::cyclic(2), 5);
  auto xs = corpus_gspaces(z2, 5);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    auto t0 = Clock::now();
    RoundTrip r = roundtrip(xs[k], 3);
    double dt = seconds_since(t0);
    std::string tag = kSpaceNames[k];
    o.require(r.verdict.certified(), tag + ": round trip not certified");
    o.require(r.original.matches(r.underlying, 3), tag + ": underlying homology differs");
    o.require(r.borel.matches(r.quotient, 3), tag + ": quotient homology differs from the Borel construction");
    o.require(dt < 60.0, tag + ": took " + std::to_string(dt) + "s");
  }
  return o;
}

// 7
Outcome borel_holims() {
  Outcome o;
  SimplicialGroup z2 = constant(FiniteGroup::cyclic(2), 3);
  GSpace pt = GSpace::point(z2, 3), tr = GSpace::translation(z2, 3), c = GSpace::trivial(circle(3), z2);
  GSpace two = GSpace::trivial(discrete(2, 3), z2);
  std::vector<GCospan> cs = {
      {tr, pt, c, to_point(tr.space()), to_point(c.space())},
      {tr, tr, tr, SimplicialMap::identity(tr.space()), SimplicialMap::identity(tr.space())},
      {pt, two, pt, constant_map(pt.space(), two.space(), 0), constant_map(pt.space(), two.space(), 0)}};
  for (std::size_t k = 0; k < cs.size(); ++k) {
    BorelHolim r = borel_holim_check(cs[k], 3);
    o.require(r.verdict.certified(), "cospan " + std::to_string(k + 1) + " not certified");
    o.require(r.lhs.matches(r.rhs, 2), "cospan " + std::to_string(k + 1) + " homology differs");
  }
  return o;
}

// 8
Outcome invariance() {
  Outcome o;
  SimplicialGroup z2 = constant(FiniteGroup::cyclic(2), 3);
  SpaceMap pi = bar_action(GSpace::trivial(circle(3), z2), 3);
  LevelwiseApplication p1 = apply_levelwise(EndoFunctor::postnikov(1, 0), pi, 3);
  o.require(!p1.report.overall.refuted(), "P_1 image refuted");
  SegalReport base = is_segal_group_action(pi, 3);
  LevelwiseApplication id = apply_levelwise(EndoFunctor::identity(), pi, 3);
  o.require(id.report.overall.kind == base.overall.kind, "identity changes the overall verdict");
  o.require(id.report.checks.size() == base.checks.size(), "identity changes the report shape");
  for (std::size_t i = 0; i < base.checks.size() && i < id.report.checks.size(); ++i) {
    const CheckEntry &a = base.checks[i], &b = id.report.checks[i];
    o.require(a.name == b.name && a.level == b.level && a.verdict.kind == b.verdict.kind,
              "identity changes check " + a.name);
  }
  return o;
}

// 9
Outcome tower() {
  Outcome o;
  SimplicialGroup z2 = constant(FiniteGroup::cyclic(2), 3);
  TowerDiagram t = build_tower(GSpace::trivial(circle(3), z2), 2, 0);
  for (const auto& c : t.checks) o.require(c.verdict.certified(), c.name + " not certified");
  o.require(t.overall.certified(), "overall not certified");
  // p_n o tau_n = tau_{n-1} and p_n squares, recomputed simplex by simplex.
  for (int n = 1; n <= 2; ++n)
    for (int j = 0; j <= 3; ++j) {
      o.require(compose(t.p_source[n].level(j), t.tau_source[n].level(j)) == t.tau_source[n - 1].level(j),
                "p_tau_source " + std::to_string(n));
      o.require(compose(t.p_target[n].level(j), t.tau_target[n].level(j)) == t.tau_target[n - 1].level(j),
                "p_tau_target " + std::to_string(n));
      o.require(compose(t.stages[n - 1].map.level(j), t.p_source[n].level(j)) ==
                    compose(t.p_target[n].level(j), t.stages[n].map.level(j)),
                "p square " + std::to_string(n));
    }
  for (int n = 0; n <= 2; ++n)
    for (int j = 0; j <= 3; ++j)
      o.require(compose(t.stages[n].map.level(j), t.tau_source[n].level(j)) ==
                    compose(t.tau_target[n].level(j), t.base.level(j)),
                "tau square " + std::to_string(n));
  return o;
}

// 10
Integer iabs(Integer a) { return a < 0 ? Integer(-a) : a; }

Integer gcd(Integer a, Integer b) {
  a = iabs(a);
  b = iabs(b);
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::size_t rational_rank(Matrix m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      Integer f = m[r][c], g = m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] * g - m[rank][k] * f;
    }
    ++rank;
  }
  return rank;
}

bool snf_ok(const Matrix& m) {
  const std::size_t r = m.size(), c = m[0].size();
  SmithResult s = smith_normal_form(m);
  if (multiply(multiply(s.U, m), s.V) != s.S) return false;
  if (iabs(determinant(s.U)) != 1 || iabs(determinant(s.V)) != 1) return false;
  std::vector<Integer> diag;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (i != j && s.S[i][j] != 0) return false;
      if (i == j && s.S[i][i] != 0) {
        if (diag.size() != i || s.S[i][i] < 0) return false;
        diag.push_back(s.S[i][i]);
      }
    }
  for (std::size_t k = 0; k + 1 < diag.size(); ++k)
    if (diag[k + 1] % diag[k] != 0) return false;
  if (diag.size() != rational_rank(m)) return false;
  Integer g = 0;
  for (const auto& row : m)
    for (const auto& v : row) g = gcd(g, v);
  if (!diag.empty() && diag[0] != g) return false;
  if (r == c) {
    Integer det = iabs(determinant(m)), prod = 1;
    for (const auto& d : diag) prod *= d;
    if (det == 0 ? diag.size() == r : prod != det) return false;
  }
  return true;
}

bool square_zero(const ChainComplex& c) {
  for (std::size_t k = 2; k < c.boundary.size(); ++k)
    for (const auto& row : multiply(c.boundary[k - 1].dense(), c.boundary[k].dense()))
      for (const auto& v : row)
        if (v != 0) return false;
  return true;
}

Outcome oracles() {
  Outcome o;
  SimplicialSet torus = product(circle(3), circle(3)).set();
  o.require(homology(circle(3)).to_string(1) == "Z; Z", "H(S1)");
  o.require(homology(torus).to_string(2) == "Z; Z^2; Z", "H(T2)");
  o.require(homology(boundary(3, 3)).to_string(2) == "Z; 0; Z", "H(dDelta3)");

  std::mt19937 rng(314159);
  int bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int r = std::uniform_int_distribution<int>(1, 8)(rng), c = std::uniform_int_distribution<int>(1, 8)(rng);
    int density = std::uniform_int_distribution<int>(1, 4)(rng);
    Matrix m(r, std::vector<Integer>(c, 0));
    for (auto& row : m)
      for (auto& v : row)
        if (std::uniform_int_distribution<int>(0, 3)(rng) < density) v = std::uniform_int_distribution<int>(-12, 12)(rng);
    if (!snf_ok(m)) ++bad;
  }
  o.require(bad == 0, std::to_string(bad) + " SNF failures");

  SimplicialGroup z2 = constant(FiniteGroup::cyclic(2), 4);
  SimplicialGroup s3 = constant(FiniteGroup::symmetric(3), 3);
  std::vector<SimplicialSet> xs = {circle(4),
                                   torus,
                                   boundary(3, 4),
                                   delta(3, 4),
                                   horn(3, 1, 4),
                                   wbar(z2, 4),
                                   w(z2, 4).space(),
                                   borel(GSpace::translation(z2, 4)).set,
                                   diagonal(bar_group(z2, 4, 4)),
                                   diagonal(bar_group(s3, 3, 3)),
                                   ex(circle(3)).complex.set(),
                                   coskeleton(circle(3), 1).complex.set()};
  for (const auto& x : xs) o.require(square_zero(normalized_chains(x)), "boundary does not square to zero");

  // Operator words: dense tables against normal-form rewriting and the monotone map of the word.
  std::mt19937 wrng(271828);
  int violations = 0;
  const std::vector<SimplicialSet> fz = {delta(3, 5), torus, boundary(3, 5), wbar(constant(FiniteGroup::cyclic(3), 4), 4)};
  for (int k = 0; k < 10000; ++k) {
    const SimplicialSet& x = fz[k % fz.size()];
    const int N = x.truncation();
    int n = std::uniform_int_distribution<int>(0, N)(wrng);
    int s = std::uniform_int_distribution<int>(0, static_cast<int>(x.size(n)) - 1)(wrng);
    int len = std::uniform_int_distribution<int>(1, 7)(wrng);
    OperatorWord word;
    int d = n, dense = s;
    for (int step = 0; step < len; ++step) {
      bool face = d > 0 && (d == N || wrng() % 2 == 0);
      int i = std::uniform_int_distribution<int>(0, d)(wrng);
      if (face) {
        dense = x.face(d--, i, dense);
        word.insert(word.begin(), Operator{OpKind::Face, i});
      } else {
        dense = x.degeneracy(d++, i, dense);
        word.insert(word.begin(), Operator{OpKind::Degeneracy, i});
      }
    }
    NormalWord nw = normalize_word(word);
    if (x.index_of(x.evaluate(word, x.simplex(n, s))) != dense) ++violations;
    if (x.operator_image(n, s, word_to_map(word, n)) != dense) ++violations;
    if (x.index_of(x.evaluate(to_word(nw), x.simplex(n, s))) != dense) ++violations;
  }
  o.require(violations == 0, std::to_string(violations) + " operator word violations");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Segal group certification", segal_groups},
      {"actions and inverted squares", actions},
      {"diagonal is Kan", diagonal_kan},
      {"loops comparison", loops},
      {"diagonal vs W-bar homology", diagonal_vs_wbar},
      {"round trips", roundtrips},
      {"Borel construction and homotopy pullbacks", borel_holims},
      {"level-wise invariance", invariance},
      {"Postnikov tower", tower},
      {"oracle sanity", oracles},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double dt = seconds_since(t0);
    std::printf("%s criterion %zu (%s) %.2fs%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, dt,
                o.ok ? "" : ": ", o.note.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
