#include <doctest.h>

#include "segal/constructions.hpp"
#include "segal/functor.hpp"
#include "segal/fundamental_group.hpp"
#include "segal/gspace.hpp"
#include "segal/hom.hpp"
#include "segal/homology.hpp"
#include "segal/straightening.hpp"
#include "segal/tower.hpp"

using namespace segal;

namespace {

SimplicialGroup constant(const FiniteGroup& g, int n) { return SimplicialGroup::constant(g, n); }

// Reports compared without the verdict notes.
std::vector<std::tuple<std::string, int, VerdictKind>> shape(const SegalReport& r) {
  std::vector<std::tuple<std::string, int, VerdictKind>> out;
  for (const auto& e : r.checks) out.emplace_back(e.name, e.level, e.verdict.kind);
  return out;
}

}  // namespace

TEST_CASE("functor names") {
  for (std::string s : {"identity", "ex:2", "cosk:3", "postnikov:1:0", "empty"})
    CHECK(EndoFunctor::parse(s).name() == s);
  CHECK(EndoFunctor::parse("id").kind == FunctorKind::Identity);
  CHECK_THROWS_AS(EndoFunctor::parse("cosk"), InvalidObject);
  CHECK_THROWS_AS(EndoFunctor::parse("ex:x"), InvalidObject);
}

TEST_CASE("Postnikov approximations") {
  SimplicialSet p = postnikov_approx(point(3), 1, 1);
  for (int m = 0; m <= 3; ++m) CHECK(p.size(m) == 1);
  SimplicialSet b = wbar(constant(FiniteGroup::cyclic(2), 3), 3);
  SimplicialSet p1 = postnikov_approx(b, 1, 0);
  Pi1Summary s = summarize(pi1_presentation(p1).group);
  REQUIRE(s.order);
  CHECK(*s.order == 2);
  SimplicialSet p0 = postnikov_approx(b, 0, 0);
  CHECK(homology(p0).to_string(1) == "Z; 0");
  // cosk_{n+1} of a discrete set is discrete in low degrees.
  SimplicialSet d = postnikov_approx(discrete(2, 3), 1, 0);
  for (int m = 0; m <= 3; ++m) CHECK(d.size(m) == 2);
}

TEST_CASE("functoriality of the applied maps") {
  EndoFunctor l = EndoFunctor::postnikov(0, 0);
  SimplicialSet x = circle(3), y = product(circle(3), delta(1, 3)).set();
  AppliedObject lx = apply(l, x), ly = apply(l, y);
  SimplicialMap id = apply(l, lx, lx, SimplicialMap::identity(x));
  CHECK(id == SimplicialMap::identity(lx.value));
  for (const auto& f : hom_set(x, y)) {
    SimplicialMap lf = apply(l, lx, ly, f);
    // Naturality of the unit.
    CHECK(compose(lf, lx.unit) == compose(ly.unit, f));
    for (const auto& g : hom_set(y, x)) {
      SimplicialMap lg = apply(l, ly, lx, g);
      CHECK(apply(l, lx, lx, compose(g, f)) == compose(lg, lf));
    }
  }
}

TEST_CASE("functor audits") {
  SegalReport ex = functor_audit(EndoFunctor::ex(1), 3);
  for (int i = 0; i <= 2; ++i) {
    const CheckEntry* e = ex.find("product_comparison", i);
    REQUIRE(e);
    CHECK(e->verdict.certified());
  }
  ProductComparison pc = product_comparison(EndoFunctor::ex(1), circle(3), delta(1, 3));
  CHECK(pc.map.is_isomorphism());
  SegalReport cosk = functor_audit(EndoFunctor::cosk(2), 3);
  REQUIRE(cosk.find("preserves_point"));
  CHECK(cosk.find("preserves_point")->verdict.certified());
  CHECK(cosk.overall.certified());
  SegalReport empty = functor_audit(EndoFunctor::constant_empty(), 3);
  CHECK(empty.find("preserves_point")->verdict.refuted());
  CHECK(empty.overall.refuted());
  CHECK(functor_audit(EndoFunctor::identity(), 3).overall.certified());
  CHECK(functor_audit(EndoFunctor::postnikov(1, 0), 3).overall.certified());
}

TEST_CASE("level-wise application") {
  SimplicialGroup z2 = constant(FiniteGroup::cyclic(2), 3);
  SpaceMap circle_pi = bar_action(GSpace::trivial(circle(3), z2), 3);
  SegalReport base = is_segal_group_action(circle_pi, 3);
  LevelwiseApplication id = apply_levelwise(EndoFunctor::identity(), circle_pi, 3);
  CHECK(shape(id.report) == shape(base));
  CHECK(id.report.overall.kind == base.overall.kind);
  LevelwiseApplication p1 = apply_levelwise(EndoFunctor::postnikov(1, 0), circle_pi, 3);
  CHECK(!p1.report.overall.refuted());

  SpaceMap tr = bar_action(GSpace::translation(z2, 3), 3);
  LevelwiseApplication c2 = apply_levelwise(EndoFunctor::postnikov(1, 0), tr, 3);
  CHECK(c2.report.overall.certified());
  for (int n = 0; n <= 3; ++n) {
    CHECK(c2.map.source().level(n).size(0) == tr.source().level(n).size(0));
    CHECK(c2.source_levels[n].unit.is_isomorphism());
  }
}

TEST_CASE("Postnikov towers") {
  SimplicialGroup z2 = constant(FiniteGroup::cyclic(2), 3);
  TowerDiagram t = build_tower(GSpace::trivial(circle(3), z2), 2, 0);
  CHECK(t.overall.certified());
  int p_checks = 0, squares = 0;
  for (const auto& c : t.checks) {
    CHECK(c.verdict.certified());
    if (c.name.rfind("p_tau", 0) == 0) ++p_checks;
    if (c.name.ends_with("square")) ++squares;
  }
  CHECK(p_checks == 4);
  CHECK(squares == 5);
  // p_n o tau_n = tau_{n-1}, recomputed here level by level.
  for (int n = 1; n <= 2; ++n)
    for (int j = 0; j <= 3; ++j)
      CHECK(compose(t.p_source[n].level(j), t.tau_source[n].level(j)) == t.tau_source[n - 1].level(j));
  // Stage 0 levels have trivial fundamental group.
  for (int j = 0; j <= 3; ++j) {
    Pi1Summary s = summarize(pi1_presentation(t.stages[0].map.source().level(j)).group);
    REQUIRE(s.order);
    CHECK(*s.order == 1);
  }
  TowerDiagram pt = build_tower(GSpace::point(z2, 3), 1, 0);
  CHECK(pt.overall.certified());
  json j = to_json(t);
  CHECK(j["stages"].size() == 3);
  CHECK(j["overall"]["verdict"] == "CERTIFIED");
}
