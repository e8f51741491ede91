#include <doctest.h>

#include "segal/constructions.hpp"
#include "segal/fundamental_group.hpp"
#include "segal/gspace.hpp"
#include "segal/homology.hpp"
#include "segal/kan.hpp"
#include "segal/segal_checks.hpp"
#include "segal/straightening.hpp"

using namespace segal;

namespace {

SimplicialGroup constant(const FiniteGroup& g, int n) { return SimplicialGroup::constant(g, n); }

std::string sig(const SimplicialSet& x, int up_to) { return homology(x).to_string(up_to); }

const std::vector<FiniteGroup>& corpus_groups() {
  static const std::vector<FiniteGroup> g = {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)};
  return g;
}

// Vertex tuple (x, g_1, ..., g_n) of Bar_n(X, G) as elements: x as a dense vertex, g_i as group elements.
std::vector<int> vertex_tuple(const BarConstruction& bc, int n, int v) {
  std::vector<int> t = bc.source_levels[n].tuple(0, v);
  for (int i = 1; i <= n; ++i) t[i] = bc.group.element_of[0][t[i]];
  return t;
}

}  // namespace

TEST_CASE("bar constructions") {
  SimplicialGroup z2 = constant(FiniteGroup::cyclic(2), 3);
  SimplicialSpace bar = bar_group(z2, 3, 3);
  for (int n = 0; n <= 3; ++n) CHECK(bar.level(n).size(0) == (std::size_t{1} << n));
  CHECK(is_segal_group(bar_group(constant(FiniteGroup::symmetric(3), 3), 3, 3), 3).overall.certified());
}

TEST_CASE("bar action faces and the vertex maps follow the tuple formulas") {
  // d_0(x, g) = x.g on level 1, and alpha_n^*(x, g_1, ..., g_n) = x.g_1...g_n, checked element-wise.
  for (const FiniteGroup& g : corpus_groups()) {
    SimplicialGroup sg = constant(g, 2);
    GSpace x = GSpace::translation(sg, 2);
    BarConstruction bc = bar_construction(x, 3);
    GroupSet xs = underlying_set(sg, 2);
    const SimplicialSpace& a = bc.map.source();
    int mismatches = 0;
    for (std::size_t v = 0; v < a.level(1).size(0); ++v) {
      auto t = vertex_tuple(bc, 1, static_cast<int>(v));
      int d0 = a.face(1, 0)(0, static_cast<int>(v));
      int expect = x.act(0, t[0], t[1]);
      if (bc.source_levels[0].tuple(0, d0)[0] != expect) ++mismatches;
    }
    for (int n = 1; n <= 3; ++n) {
      SimplicialMap alpha = vertex_map(a, n, n);
      SimplicialMap alpha0 = vertex_map(a, n, 0);
      for (std::size_t v = 0; v < a.level(n).size(0); ++v) {
        auto t = vertex_tuple(bc, n, static_cast<int>(v));
        int prod = g.identity();
        for (int i = 1; i <= n; ++i) prod = g.mul(prod, t[i]);
        int expect = xs.simplex_of[0][g.mul(xs.element_of[0][t[0]], prod)];
        if (bc.source_levels[0].tuple(0, alpha(0, static_cast<int>(v)))[0] != expect) ++mismatches;
        if (bc.source_levels[0].tuple(0, alpha0(0, static_cast<int>(v)))[0] != t[0]) ++mismatches;
        // pi_n forgets x.
        auto b = bc.target_levels[n].tuple(0, bc.map.level(n)(0, static_cast<int>(v)));
        for (int i = 1; i <= n; ++i)
          if (bc.group.element_of[0][b[i - 1]] != t[i]) ++mismatches;
      }
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("W and W-bar") {
  SimplicialGroup z2 = constant(FiniteGroup::cyclic(2), 5);
  WConstruction wc = w_construction(z2, 5);
  for (int n = 0; n <= 5; ++n) {
    CHECK(wc.w.space().size(n) == (std::size_t{1} << (n + 1)));
    CHECK(wc.wbar.size(n) == (std::size_t{1} << n));
  }
  CHECK(sig(wc.w.space(), 4) == "Z; 0; 0; 0; 0");
  CHECK(wc.w.is_free());
  for (const FiniteGroup& g : corpus_groups()) {
    WConstruction c = w_construction(constant(g, 3), 3);
    CHECK(kan_check(c.wbar, 3).certified());
    CHECK(is_fibration(c.projection, 3).certified());
    CHECK(compare_with_finite(pi1_presentation(c.wbar).group, g, 3).certified());
  }
}

TEST_CASE("G-space validation") {
  SimplicialGroup z2 = constant(FiniteGroup::cyclic(2), 2);
  SimplicialSet c = circle(2);
  std::vector<std::vector<std::vector<int>>> bad(3);
  for (int n = 0; n <= 2; ++n)
    for (std::size_t x = 0; x < c.size(n); ++x) bad[n].push_back({static_cast<int>(x), static_cast<int>(x)});
  CHECK_NOTHROW(GSpace::make(c, z2, bad));
  // Swapping the two 1-simplices of the circle is not compatible with the faces of the 2-simplices.
  bad[1][0] = {0, 1};
  bad[1][1] = {1, 0};
  CHECK_THROWS_AS(GSpace::make(c, z2, bad), InvalidObject);
}

TEST_CASE("Borel constructions") {
  SimplicialGroup z2 = constant(FiniteGroup::cyclic(2), 4);
  CHECK(homology(borel(GSpace::point(z2, 4)).set).matches(homology(wbar(z2, 4)), 3));
  CHECK(sig(borel(GSpace::translation(z2, 4)).set, 3) == "Z; 0; 0; 0");
  CHECK(sig(borel(GSpace::two_translations(z2, 4)).set, 3) == "Z^2; 0; 0; 0");
  // Free action: the Borel construction has the homology of the strict quotient.
  GSpace free = GSpace::two_translations(z2, 4);
  CHECK(homology(borel(free).set).matches(homology(orbit_quotient(free).set), 3));
}

TEST_CASE("homotopy fibers over W-bar") {
  SimplicialGroup z2 = constant(FiniteGroup::cyclic(2), 4);
  WConstruction wc = w_construction(z2, 4);
  GSpace f1 = homotopy_fiber(SimplicialMap::identity(wc.wbar), z2);
  CHECK(sig(f1.space(), 3) == "Z; 0; 0; 0");
  GSpace f2 = homotopy_fiber(constant_map(point(4), wc.wbar, 0), z2);
  CHECK(sig(f2.space(), 3) == "Z^2; 0; 0; 0");
  GSpace f3 = homotopy_fiber(wc.projection, z2);
  CHECK(sig(f3.space(), 3) == "Z^2; 0; 0; 0");
}

TEST_CASE("unstraightening and straightening") {
  SimplicialGroup z2 = constant(FiniteGroup::cyclic(2), 3);
  CHECK(unstraighten(GSpace::translation(z2, 3), 3, 3).report.overall.certified());
  CHECK(unstraighten(GSpace::point(z2, 3), 3, 3).report.overall.certified());
  CHECK(!unstraighten(GSpace::trivial(circle(3), z2), 3, 3).report.overall.refuted());

  GSpace p = straighten(bar_action(GSpace::point(z2, 3), 3), z2);
  CHECK(sig(p.space(), 2) == "Z; 0; 0");
  CHECK(homology(orbit_quotient(p).set).matches(homology(wbar(z2, 3)), 2));
  GSpace t = straighten(bar_action(GSpace::translation(z2, 3), 3), z2);
  CHECK(sig(t.space(), 2) == "Z^2; 0; 0");
  GSpace c = straighten(bar_action(GSpace::trivial(circle(3), z2), 3), z2);
  CHECK(sig(c.space(), 2) == "Z; Z; 0");
  CHECK(homology(orbit_quotient(c).set).matches(homology(product(circle(3), wbar(z2, 3)).set()), 2));

  // A target that is not Bar(G) for the given group is refused.
  SimplicialGroup z3 = constant(FiniteGroup::cyclic(3), 3);
  CHECK_THROWS_AS(straighten(bar_action(GSpace::point(z2, 3), 3), z3), InvalidObject);
}

TEST_CASE("round trips") {
  SimplicialGroup z2 = constant(FiniteGroup::cyclic(2), 4);
  for (const GSpace& x : {GSpace::point(z2, 4), GSpace::translation(z2, 4), GSpace::trivial(circle(4), z2)}) {
    RoundTrip r = roundtrip(x, 2);
    CHECK(r.verdict.certified());
    CHECK(r.original.matches(r.underlying, 2));
  }
}

TEST_CASE("Borel construction against homotopy pullbacks") {
  SimplicialGroup z2 = constant(FiniteGroup::cyclic(2), 3);
  GSpace pt = GSpace::point(z2, 3), tr = GSpace::translation(z2, 3), c = GSpace::trivial(circle(3), z2);
  // Y = point.
  GCospan a{tr, pt, c, to_point(tr.space()), to_point(c.space())};
  BorelHolim ra = borel_holim_check(a, 3);
  CHECK(ra.verdict.certified());
  CHECK(ra.lhs.matches(ra.rhs, 2));
  // X = Y = Z = G with identity legs.
  GCospan b{tr, tr, tr, SimplicialMap::identity(tr.space()), SimplicialMap::identity(tr.space())};
  BorelHolim rb = borel_holim_check(b, 3);
  CHECK(rb.verdict.certified());
  CHECK(rb.lhs.to_string(2) == "Z; 0; 0");
  // Non-equivariant legs are rejected.
  GCospan bad{tr, tr, tr, constant_map(tr.space(), tr.space(), 0), SimplicialMap::identity(tr.space())};
  CHECK_THROWS_AS(borel_holim_check(bad, 3), InvalidObject);
}
