#include <doctest.h>

#include "segal/bisimplicial.hpp"
#include "segal/constructions.hpp"
#include "segal/gspace.hpp"
#include "segal/hom.hpp"
#include "segal/homology.hpp"
#include "segal/kan.hpp"
#include "segal/segal_checks.hpp"
#include "segal/straightening.hpp"

using namespace segal;

namespace {

SimplicialGroup constant(const FiniteGroup& g, int n) { return SimplicialGroup::constant(g, n); }

SimplicialMap discrete_map(const SimplicialSet& s, const SimplicialSet& t, const std::vector<int>& f) {
  std::vector<std::vector<SimplexRef>> images(s.truncation() + 1);
  for (int v : f) images[0].push_back(SimplexRef{{}, {0, v}});
  return SimplicialMap::from_images(s, t, std::move(images));
}

// Nerve of a finite monoid written out directly: level n is the discrete set of n-tuples,
// d_0 drops the first entry, d_i multiplies entries i and i+1, d_n drops the last, s_i inserts
// the unit. With `double_top` the top level carries two copies of every tuple.
SimplicialSpace monoid_nerve(const std::vector<std::vector<int>>& table, int unit, int M, int T,
                             bool double_top = false) {
  const int k = static_cast<int>(table.size());
  auto power = [&](int n) {
    int p = 1;
    for (int i = 0; i < n; ++i) p *= k;
    return p;
  };
  auto decode = [&](int n, int idx) {
    std::vector<int> t(n);
    for (int i = n - 1; i >= 0; --i, idx /= k) t[i] = idx % k;
    return t;
  };
  auto encode = [&](const std::vector<int>& t) {
    int idx = 0;
    for (int v : t) idx = idx * k + v;
    return idx;
  };
  auto copies = [&](int n) { return double_top && n == M ? 2 : 1; };
  std::vector<SimplicialSet> levels;
  for (int n = 0; n <= M; ++n) levels.push_back(discrete(power(n) * copies(n), T, "t"));
  std::vector<std::vector<SimplicialMap>> faces(M + 1), degens(M + 1);
  for (int n = 1; n <= M; ++n)
    for (int i = 0; i <= n; ++i) {
      std::vector<int> f;
      for (int c = 0; c < copies(n); ++c)
        for (int x = 0; x < power(n); ++x) {
          auto t = decode(n, x);
          if (i == 0) t.erase(t.begin());
          else if (i == n) t.pop_back();
          else {
            t[i - 1] = table[t[i - 1]][t[i]];
            t.erase(t.begin() + i);
          }
          f.push_back(encode(t));
        }
      faces[n].push_back(discrete_map(levels[n], levels[n - 1], f));
    }
  for (int n = 0; n < M; ++n)
    for (int i = 0; i <= n; ++i) {
      std::vector<int> f;
      for (int x = 0; x < power(n); ++x) {
        auto t = decode(n, x);
        t.insert(t.begin() + i, unit);
        f.push_back(encode(t));
      }
      degens[n].push_back(discrete_map(levels[n], levels[n + 1], f));
    }
  return SimplicialSpace::make(std::move(levels), std::move(faces), std::move(degens));
}

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

// The constant point mapped into B at the degenerate vertices.
SpaceMap point_into(const SimplicialSpace& b) {
  SimplicialSpace pt = terminal_space(b.ext_truncation(), b.int_truncation());
  std::vector<SimplicialMap> levels;
  SimplicialMap base = constant_map(pt.level(0), b.level(0), 0);
  for (int n = 0; n <= b.ext_truncation(); ++n) {
    SimplicialMap up = b.operator_map(0, std::vector<int>(n + 1, 0));
    levels.push_back(compose(up, compose(base, SimplicialMap::identity(pt.level(n)))));
  }
  return SpaceMap::make(pt, b, std::move(levels));
}

}  // namespace

TEST_CASE("constant simplicial spaces and the diagonal") {
  SimplicialSpace t = const_discrete(point(3), 3);
  for (int n = 0; n <= 3; ++n) CHECK(t.level(n).size(0) == 1);
  SimplicialSet c = circle(3);
  SimplicialSpace cc = const_discrete(c, 3);
  for (int n = 0; n <= 3; ++n) {
    CHECK(cc.level(n).size(0) == static_cast<std::size_t>(n + 1));
    CHECK(cc.level(n).generator_counts()[0] == n + 1);
  }
  CHECK(diagonal(cc) == c);
  SimplicialSet x = product(circle(3), delta(1, 3)).set();
  CHECK(diagonal(const_discrete(x, 3)) == x);
  SimplicialSpace k = const_space(c, 3);
  for (int n = 0; n <= 3; ++n) CHECK(k.level(n) == c);
  CHECK(homology(diagonal(k)).matches(homology(c)));
  SimplicialSpace cp = const_space(point(3), 3), dp = const_discrete(point(3), 3);
  // Equal up to the names of the vertices.
  for (int n = 0; n <= 3; ++n) {
    CHECK(cp.level(n).generator_counts() == dp.level(n).generator_counts());
    CHECK(hom_count(cp.level(n), dp.level(n)) == 1);
  }
}

TEST_CASE("bar construction of Z/2 against the directly built nerve") {
  SimplicialSpace bar = bar_group(constant(FiniteGroup::cyclic(2), 5), 5, 5);
  SimplicialSpace nerve = monoid_nerve(cyclic_table(2), 0, 5, 5);
  for (int n = 0; n <= 5; ++n) {
    CHECK(bar.level(n).size(0) == (std::size_t{1} << n));
    CHECK(bar.level(n).size(0) == nerve.level(n).size(0));
  }
  SimplicialSet d = diagonal(bar);
  for (int n = 0; n <= 5; ++n) CHECK(d.size(n) == (std::size_t{1} << n));
  CHECK(homology(d).to_string(3) == "Z; Z/2; 0; Z/2");
  CHECK(homology(d).matches(homology(diagonal(nerve)), 4));
  CHECK(homology(d).matches(homology(wbar(constant(FiniteGroup::cyclic(2), 5), 5)), 3));
}

TEST_CASE("d_* and the adjunction") {
  DStar pt = d_star(point(4), 2);
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= pt.space.level(n).truncation(); ++m) CHECK(pt.space.level(n).size(m) == 1);
  SimplicialSet a = circle(4);
  DStar da = d_star(a, 2);
  for (int m = 0; m <= da.space.level(0).truncation(); ++m) CHECK(da.space.level(0).size(m) == a.size(m));
  // |hom(d^* B, K)| = |hom(B, d_* K)|.
  for (const SimplicialSet& k : {circle(4), delta(1, 4), boundary(2, 4)}) {
    DStar dk = d_star(k, 2);
    const int T = dk.space.int_truncation();
    for (const SimplicialSpace& b :
         {const_discrete(delta(1, 2), 2, T), const_discrete(circle(2), 2, T), const_space(delta(1, T), 2)}) {
      SimplicialSet db = diagonal(b);
      CHECK(space_hom_count(b, dk.space) == hom_count(db, truncate(k, db.truncation())));
    }
  }
}

TEST_CASE("matching objects") {
  SimplicialSpace bar = bar_group(constant(FiniteGroup::cyclic(2), 3), 3, 3);
  LimitSet m1 = matching_object(bar, 1);
  CHECK(m1.set().size(0) == bar.level(0).size(0) * bar.level(0).size(0));
  // M_2: triples of edges (x0, x1, x2) glued as a boundary of a 2-simplex, counted directly.
  const SimplicialSet& b1 = bar.level(1);
  std::size_t triples = 0;
  for (std::size_t x0 = 0; x0 < b1.size(0); ++x0)
    for (std::size_t x1 = 0; x1 < b1.size(0); ++x1)
      for (std::size_t x2 = 0; x2 < b1.size(0); ++x2) {
        auto d = [&](std::size_t x, int i) { return bar.face(1, i)(0, static_cast<int>(x)); };
        if (d(x0, 1) == d(x2, 0) && d(x0, 0) == d(x1, 0) && d(x1, 1) == d(x2, 1)) ++triples;
      }
  CHECK(matching_object(bar, 2).set().size(0) == triples);
  CHECK(triples == 8);
  SimplicialMap mm = matching_map(bar, 2, matching_object(bar, 2));
  CHECK(mm.source() == bar.level(2));
  BarConstruction bc = bar_construction(GSpace::two_translations(constant(FiniteGroup::cyclic(2), 3), 3), 3);
  CHECK(reedy_fibration_check(bc.map, 2).certified());
  BarConstruction tr = bar_construction(GSpace::translation(constant(FiniteGroup::cyclic(2), 3), 3), 3);
  CHECK(reedy_fibration_check(tr.map, 2).certified());
}

TEST_CASE("Segal spaces") {
  for (const FiniteGroup& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::trivial()}) {
    SimplicialSpace bar = bar_group(constant(g, 3), 3, 3);
    for (int n = 2; n <= 3; ++n) CHECK(segal_map(bar, n).map.is_isomorphism());
    SegalReport r = is_segal_group(bar, 3);
    CHECK(r.overall.certified());
    CHECK(r.find("group_like", 2));
  }
  // max on {0, 1}: a Segal space that is not group-like.
  SimplicialSpace maxm = monoid_nerve({{0, 1}, {1, 1}}, 0, 3, 3);
  for (int n = 2; n <= 3; ++n) CHECK(segal_map(maxm, n).map.is_isomorphism());
  CHECK(is_segal_space(maxm, 3).overall.certified());
  Verdict gl = is_group_like(maxm);
  CHECK(gl.refuted());
  CHECK(!gl.witness.is_null());
  CHECK(is_segal_group(maxm, 3).overall.refuted());
  // Doubling B_2 breaks the Segal condition at n = 2.
  SimplicialSpace doubled = monoid_nerve(cyclic_table(2), 0, 2, 3, true);
  SegalReport r = is_segal_space(doubled, 2);
  const CheckEntry* e = r.find("segal_map", 2);
  REQUIRE(e);
  CHECK(e->verdict.refuted());
  CHECK(!e->verdict.witness.is_null());
  CHECK(r.overall.refuted());
}

TEST_CASE("Segal group actions") {
  SimplicialGroup z2 = constant(FiniteGroup::cyclic(2), 3);
  for (const GSpace& x : {GSpace::translation(z2, 3), GSpace::point(z2, 3)}) {
    SpaceMap pi = bar_action(x, 3);
    CHECK(is_segal_group_action(pi, 3).overall.certified());
    CHECK(cross_check_inverted(pi, 3).overall.certified());
  }
  SpaceMap c = point_into(bar_group(z2, 3, 3));
  SegalReport r = is_segal_group_action(c, 3);
  const CheckEntry* a1 = r.find("alpha0_square", 1);
  REQUIRE(a1);
  CHECK(a1->verdict.refuted());
  CHECK(r.overall.refuted());
  SpaceMap circle_pi = bar_action(GSpace::trivial(circle(3), z2), 3);
  CHECK(!is_segal_group_action(circle_pi, 3).overall.refuted());
  CHECK(!cross_check_inverted(circle_pi, 3).overall.refuted());
}

TEST_CASE("an action that passes is never refuted by the inverted cross-check") {
  for (const FiniteGroup& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)}) {
    SimplicialGroup sg = constant(g, 3);
    for (const GSpace& x : {GSpace::point(sg, 3), GSpace::translation(sg, 3), GSpace::two_translations(sg, 3),
                            GSpace::trivial(circle(3), sg)}) {
      Unstraightening u = unstraighten(x, 3, 3);
      bool action_ok = true, cross_ok = true;
      for (const auto& e : u.report.checks) {
        if (e.name.rfind("action.", 0) == 0 && e.verdict.refuted() && e.name != "action.reedy_fibration")
          action_ok = false;
        if (e.name.rfind("cross_check.", 0) == 0 && e.verdict.refuted() && !e.name.ends_with("reedy_fibration"))
          cross_ok = false;
      }
      CHECK(action_ok);
      if (action_ok) CHECK(cross_ok);
    }
  }
}

TEST_CASE("loops comparison and the diagonal of Bar(G)") {
  for (const FiniteGroup& g : {FiniteGroup::cyclic(2), FiniteGroup::symmetric(3), FiniteGroup::trivial()}) {
    SimplicialSpace bar = bar_group(constant(g, 3), 3, 3);
    LoopsComparison l = loops_comparison(bar);
    CHECK(l.verdict.certified());
    CHECK(l.pi0_names.size() == static_cast<std::size_t>(g.order()));
    CHECK(kan_check(diagonal(bar), 3).certified());
  }
  // The pi_0 table of Bar(S3) is a group table isomorphic to S3: same number of
  // homomorphisms into S3.
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  LoopsComparison l = loops_comparison(bar_group(constant(s3, 3), 3, 3));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < l.pi0_names.size(); ++i) names.push_back(std::to_string(i));
  FiniteGroup p = FiniteGroup::from_table(names, l.pi0_table);
  CHECK(!p.abelian());
}
