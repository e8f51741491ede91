#include <doctest.h>

#include <random>

#include "segal/constructions.hpp"
#include "segal/gspace.hpp"
#include "segal/hom.hpp"
#include "segal/homology.hpp"
#include "segal/kan.hpp"
#include "segal/limits.hpp"
#include "segal/mapping.hpp"
#include "segal/quotient.hpp"

using namespace segal;

namespace {

std::vector<int> counts(const SimplicialSet& x) { return x.generator_counts(); }

std::vector<int> trimmed_counts(const SimplicialSet& x) {
  auto c = x.generator_counts();
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

std::vector<std::size_t> sizes(const SimplicialSet& x) {
  std::vector<std::size_t> s;
  for (int n = 0; n <= x.truncation(); ++n) s.push_back(x.size(n));
  return s;
}

Operator F(int i) { return {OpKind::Face, i}; }
Operator D(int i) { return {OpKind::Degeneracy, i}; }

SimplicialSet torus(int n) { return product(circle(n), circle(n)).set(); }

}  // namespace

TEST_CASE("standard simplices and basic complexes") {
  CHECK(trimmed_counts(delta(2, 4)) == std::vector<int>{3, 3, 1});
  CHECK(trimmed_counts(delta(3, 4)) == std::vector<int>{4, 6, 4, 1});
  CHECK(trimmed_counts(delta(0, 3)) == std::vector<int>{1});
  CHECK(trimmed_counts(boundary(2, 3)) == std::vector<int>{3, 3});
  CHECK(trimmed_counts(horn(2, 1, 3)) == std::vector<int>{3, 2});
  CHECK(trimmed_counts(circle(3)) == std::vector<int>{1, 1});
  // Level sizes of Delta^n are the numbers of monotone maps [m] -> [n].
  SimplicialSet d2 = delta(2, 4);
  for (int m = 0; m <= 4; ++m) CHECK(d2.size(m) == static_cast<std::size_t>(binomial(m + 3, 2)));
}

TEST_CASE("normal form rewriting") {
  CHECK(normalize_word({D(0), D(0)}) == NormalWord{{1, 0}, {}});
  CHECK(normalize_word({F(1), D(0)}) == NormalWord{{}, {}});
  CHECK(normalize_word({F(3), D(1)}) == NormalWord{{1}, {2}});
  SimplicialSet c = circle(3);
  SimplexRef e{{}, *c.find_generator("e")};
  SimplexRef v{{}, *c.find_generator("v")};
  CHECK(c.face(0, e) == v);
  CHECK(c.face(0, c.degeneracy(0, e)) == e);
  SimplicialSet d2 = delta(2, 3);
  SimplexRef top{{}, *d2.find_generator("[0,1,2]")};
  CHECK(d2.generator_name(d2.face(1, top).generator) == "[0,2]");
}

TEST_CASE("a presentation violating d0 d0 = d0 d1 is rejected naming the generator") {
  SimplicialSet::Presentation p;
  p.truncation = 2;
  p.names = {{"a", "b"}, {"e", "f"}, {"t"}};
  auto r = [](int d, int i) { return SimplexRef{{}, {d, i}}; };
  p.faces = {{}, {{r(0, 1), r(0, 0)}, {r(0, 0), r(0, 0)}}, {{{r(1, 0), r(1, 1), r(1, 1)}}}};
  try {
    SimplicialSet::from_presentation(p);
    FAIL("accepted");
  } catch (const InvalidObject& e) {
    bool named = false;
    for (const auto& v : e.violations()) named = named || v.find("'t'") != std::string::npos;
    CHECK(named);
  }
}

TEST_CASE("random operator words agree with table walks and monotone maps") {
  // Three evaluations: dense face/degeneracy tables, normal-form rewriting on SimplexRefs,
  // and the monotone map of the word. On Delta^3 a fourth: the vertex sequence itself.
  std::mt19937 rng(20240611);
  const std::vector<SimplicialSet> corpus = {delta(3, 5), torus(4), circle(5), boundary(3, 5),
                                             wbar(SimplicialGroup::constant(FiniteGroup::cyclic(2), 5), 5)};
  int violations = 0;
  const int kWords = 10000;
  for (int w = 0; w < kWords; ++w) {
    const SimplicialSet& x = corpus[w % corpus.size()];
    const int N = x.truncation();
    int n = std::uniform_int_distribution<int>(0, N)(rng);
    int s = std::uniform_int_distribution<int>(0, static_cast<int>(x.size(n)) - 1)(rng);
    OperatorWord word;
    int len = std::uniform_int_distribution<int>(1, 6)(rng);
    int d = n, dense = s;
    std::vector<int> verts;  // Delta^3 only
    const bool is_delta = (w % corpus.size()) == 0;
    if (is_delta)
      for (int j = 0; j <= n; ++j) verts.push_back(x.operator_image(n, s, {j}));
    for (int k = 0; k < len; ++k) {
      bool face = d > 0 && (d == N || rng() % 2 == 0);
      int i = std::uniform_int_distribution<int>(0, d)(rng);
      if (face) {
        dense = x.face(d, i, dense);
        if (is_delta) verts.erase(verts.begin() + i);
        --d;
      } else {
        dense = x.degeneracy(d, i, dense);
        if (is_delta) verts.insert(verts.begin() + i, verts[i]);
        ++d;
      }
      word.insert(word.begin(), face ? F(i) : D(i));
    }
    SimplexRef rewritten = x.evaluate(word, x.simplex(n, s));
    int via_map = x.operator_image(n, s, word_to_map(word, n));
    NormalWord nw = normalize_word(word);
    if (x.index_of(rewritten) != dense || via_map != dense || normalize_word(to_word(nw)) != nw ||
        x.index_of(x.evaluate(to_word(nw), x.simplex(n, s))) != dense)
      ++violations;
    if (is_delta)
      for (int j = 0; j <= d; ++j)
        if (x.operator_image(d, dense, {j}) != verts[j]) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("products") {
  LimitSet sq = product(delta(1, 3), delta(1, 3));
  CHECK(trimmed_counts(sq.set()) == std::vector<int>{4, 5, 2});
  SimplicialSet x = torus(3);
  LimitSet px = product(point(3), x);
  CHECK(px.projection(1).is_isomorphism());
  LimitSet ab = product(circle(3), delta(1, 3)), ba = product(delta(1, 3), circle(3));
  CHECK(counts(ab.set()) == counts(ba.set()));
  CHECK(sizes(ab.set()) == sizes(ba.set()));
  SimplicialMap swap = ba.induced(ab.set(), {ab.projection(1), ab.projection(0)});
  CHECK(swap.is_isomorphism());
}

TEST_CASE("pullbacks") {
  SimplicialSet a = circle(3), b = delta(2, 3);
  LimitSet pb = pullback(to_point(a), to_point(b));
  CHECK(sizes(pb.set()) == sizes(product(a, b).set()));
  SimplicialSet t = torus(3);
  SimplicialMap f = product(circle(3), circle(3)).projection(0);
  LimitSet along_id = pullback(SimplicialMap::identity(f.target()), f);
  CHECK(along_id.projection(1).is_isomorphism());
  // Fiber of W(Z/2) -> W-bar(Z/2) over the base vertex: two points in every level.
  WConstruction wc = w_construction(SimplicialGroup::constant(FiniteGroup::cyclic(2), 4), 4);
  LimitSet fib = pullback(wc.projection, constant_map(point(4), wc.wbar, 0));
  CHECK(trimmed_counts(fib.set()) == std::vector<int>{2});
  for (int n = 0; n <= 4; ++n) CHECK(fib.set().size(n) == 2);
}

TEST_CASE("pullback universal property on enumerable cones") {
  // Cones K -> X, K -> Y over Z correspond to maps K -> X x_Z Y.
  SimplicialSet x = delta(1, 2), y = circle(2), z = circle(2);
  SimplicialMap f = hom_set(x, z)[1], g = SimplicialMap::identity(y);
  LimitSet p = pullback(f, g);
  for (const SimplicialSet& k : {delta(1, 2), circle(2), horn(2, 0, 2)}) {
    std::size_t cones = 0;
    for (const auto& a : hom_set(k, x))
      for (const auto& b : hom_set(k, y))
        if (compose(f, a) == compose(g, b)) ++cones;
    CHECK(cones == hom_count(k, p.set()));
  }
}

TEST_CASE("quotients") {
  QuotientSet q = quotient(delta(1, 3), {{"[0]", "[1]"}});
  CHECK(trimmed_counts(q.set) == std::vector<int>{1, 1});
  CHECK(homology(q.set).matches(homology(circle(3))));
  QuotientSet same = quotient(torus(3), {});
  CHECK(sizes(same.set) == sizes(torus(3)));
  QuotientSet orbit = quotient(discrete(2, 3), {{"p0", "p1"}});
  CHECK(trimmed_counts(orbit.set) == std::vector<int>{1});
}

TEST_CASE("coskeleta") {
  for (int k = 0; k <= 2; ++k)
    for (int n = k; n <= 3; ++n) CHECK(sizes(coskeleton(delta(k, 3), n).complex.set()) == sizes(delta(k, 3)));
  SimplicialSet c0 = coskeleton(discrete(2, 3), 0).complex.set();
  for (int m = 0; m <= 3; ++m) CHECK(c0.size(m) == (std::size_t{1} << (m + 1)));
  CHECK(coskeleton(circle(2), 1).complex.set().size(2) == 8);
}

TEST_CASE("coskeleton adjunction on small instances") {
  // hom(X, cosk_n Y) ~ hom(sk_n X, Y).
  SimplicialSet y = circle(2);
  SimplicialSet cy = coskeleton(y, 1).complex.set();
  for (const SimplicialSet& x : {delta(2, 2), boundary(2, 2), circle(2)})
    CHECK(hom_count(x, cy) == hom_count(skeleton(x, 1), y));
}

TEST_CASE("Ex") {
  CHECK(sizes(ex(point(3)).complex.set()) == sizes(point(3)));
  SimplicialSet c = circle(3);
  SimplicialSet exc = ex(c).complex.set();
  CHECK(exc.size(0) == c.size(0));
  CHECK(exc.size(1) == 4);
  CHECK(ex(torus(2)).complex.set().size(0) == torus(2).size(0));
}

TEST_CASE("hom sets") {
  for (const SimplicialSet& x : {circle(3), torus(3), delta(2, 3)})
    for (int n = 0; n <= 2; ++n) CHECK(hom_count(delta(n, 3), x) == x.size(n));
  CHECK(hom_count(delta(1, 3), delta(1, 3)) == 3);
  CHECK(hom_count(circle(3), circle(3)) == 2);
  CHECK(hom_set(circle(3), circle(3)).size() == 2);
}

TEST_CASE("Kan conditions and fibrations") {
  Verdict c = kan_check(circle(2), 2);
  CHECK(c.refuted());
  CHECK(!c.witness.is_null());
  CHECK(kan_check(delta(1, 2), 2).refuted());
  SimplicialGroup z2 = SimplicialGroup::constant(FiniteGroup::cyclic(2), 4);
  WConstruction wc = w_construction(z2, 4);
  CHECK(kan_check(wc.wbar, 3).certified());
  CHECK(is_fibration(wc.projection, 3).certified());
  for (const SimplicialSet& x : {circle(2), delta(2, 2), wc.wbar})
    CHECK(is_fibration(to_point(x), 2).kind == kan_check(x, 2).kind);
  CHECK(is_fibration(SimplicialMap::identity(torus(3)), 3).certified());
}
