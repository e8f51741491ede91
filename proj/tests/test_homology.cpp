#include <doctest.h>

#include <random>

#include "segal/bisimplicial.hpp"
#include "segal/constructions.hpp"
#include "segal/fundamental_group.hpp"
#include "segal/gspace.hpp"
#include "segal/homology.hpp"
#include "segal/limits.hpp"
#include "segal/mapping.hpp"
#include "segal/oracle.hpp"
#include "segal/smith.hpp"

using namespace segal;

namespace {

SimplicialSet torus(int n) { return product(circle(n), circle(n)).set(); }
SimplicialGroup constant(const FiniteGroup& g, int n) { return SimplicialGroup::constant(g, n); }

Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Rank over Q by fraction-free elimination.
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

bool square_zero(const ChainComplex& c) {
  for (std::size_t k = 2; k < c.boundary.size(); ++k) {
    Matrix prod = multiply(c.boundary[k - 1].dense(), c.boundary[k].dense());
    for (const auto& row : prod)
      for (const auto& v : row)
        if (v != 0) return false;
  }
  return true;
}

std::string sig(const SimplicialSet& x, int up_to) { return homology(x).to_string(up_to); }

}  // namespace

TEST_CASE("normalized chains") {
  ChainComplex c = normalized_chains(circle(3));
  CHECK(c.ranks[0] == 1);
  CHECK(c.ranks[1] == 1);
  CHECK(c.boundary[1].dense() == Matrix{{0}});
  ChainComplex d = normalized_chains(delta(1, 3));
  CHECK(d.ranks[0] == 2);
  CHECK(d.ranks[1] == 1);
  Matrix b = d.boundary[1].dense();
  CHECK(((b[0][0] == -1 && b[1][0] == 1) || (b[0][0] == 1 && b[1][0] == -1)));
  ChainComplex t = normalized_chains(torus(3));
  CHECK(t.ranks[0] == 1);
  CHECK(t.ranks[1] == 3);
  CHECK(t.ranks[2] == 2);
}

TEST_CASE("Smith normal form examples") {
  Matrix id = identity_matrix(3);
  CHECK(smith_normal_form(id).S == id);
  CHECK(smith_normal_form(Matrix{{0}}).S == Matrix{{0}});
  Matrix m{{2, 4}, {6, 8}};
  CHECK(smith_normal_form(m).S == Matrix{{2, 0}, {0, 4}});
}

TEST_CASE("Smith normal form property suite") {
  std::mt19937 rng(7);
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int r = std::uniform_int_distribution<int>(1, 8)(rng), c = std::uniform_int_distribution<int>(1, 8)(rng);
    int density = std::uniform_int_distribution<int>(1, 4)(rng);
    Matrix m(r, std::vector<Integer>(c, 0));
    for (auto& row : m)
      for (auto& v : row)
        if (std::uniform_int_distribution<int>(0, 3)(rng) < density) v = std::uniform_int_distribution<int>(-9, 9)(rng);
    SmithResult s = smith_normal_form(m);
    bool ok = multiply(multiply(s.U, m), s.V) == s.S;
    Integer du = determinant(s.U), dv = determinant(s.V);
    ok = ok && (du == 1 || du == -1) && (dv == 1 || dv == -1);
    std::vector<Integer> diag;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        if (i != j && s.S[i][j] != 0) ok = false;
        if (i == j && s.S[i][i] != 0) diag.push_back(s.S[i][i]);
      }
    for (std::size_t k = 0; k < diag.size(); ++k) {
      if (diag[k] < 0) ok = false;
      if (k + 1 < diag.size() && diag[k + 1] % diag[k] != 0) ok = false;
      if (s.S[k][k] == 0) ok = false;  // nonzero entries come first
    }
    // Independent invariants: rank, first divisor = gcd of entries, product = |det|.
    ok = ok && diag.size() == rational_rank(m);
    Integer g = 0;
    for (const auto& row : m)
      for (const auto& v : row) g = gcd(g, v);
    if (!diag.empty()) ok = ok && diag[0] == g;
    if (r == c) {
      Integer det = determinant(m), prod = 1;
      if (det < 0) det = -det;
      for (const auto& d : diag) prod *= d;
      ok = ok && (det == 0 ? diag.size() < static_cast<std::size_t>(r) : prod == det);
    }
    if (!ok) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("homology of the corpus spaces") {
  CHECK(sig(circle(3), 1) == "Z; Z");
  CHECK(sig(torus(3), 2) == "Z; Z^2; Z");
  CHECK(sig(boundary(3, 4), 2) == "Z; 0; Z");
  CHECK(sig(delta(3, 4), 3) == "Z; 0; 0; 0");
  CHECK(sig(discrete(2, 3), 2) == "Z^2; 0; 0");
  CHECK(sig(wbar(constant(FiniteGroup::cyclic(2), 5), 5), 3) == "Z; Z/2; 0; Z/2");
  CHECK(sig(wbar(constant(FiniteGroup::cyclic(3), 4), 4), 3) == "Z; Z/3; 0; Z/3");
}

TEST_CASE("boundary squares to zero on every constructed complex") {
  SimplicialGroup z2 = constant(FiniteGroup::cyclic(2), 4);
  std::vector<SimplicialSet> xs = {circle(4),
                                   torus(3),
                                   boundary(3, 4),
                                   horn(3, 1, 4),
                                   wbar(z2, 4),
                                   w(z2, 4).space(),
                                   borel(GSpace::trivial(circle(3), constant(FiniteGroup::cyclic(2), 3))).set,
                                   diagonal(bar_group(constant(FiniteGroup::symmetric(3), 3), 3, 3)),
                                   ex(circle(3)).complex.set(),
                                   coskeleton(circle(3), 1).complex.set()};
  for (const auto& x : xs) {
    ChainComplex c = normalized_chains(x);
    CHECK(square_zero(c));
    CHECK_NOTHROW(c.assert_square_zero());
  }
  SimplicialMap f = to_point(circle(3));
  CHECK(square_zero(mapping_cone(f)));
}

TEST_CASE("Euler characteristic") {
  for (const SimplicialSet& x : {torus(4), boundary(3, 5), circle(4), delta(2, 4)}) {
    HomologySignature h = homology(x);
    long long chi_h = 0, chi_c = 0;
    auto counts = x.generator_counts();
    for (int k = 0; k + 1 < x.truncation(); ++k) {
      chi_h += (k % 2 ? -1 : 1) * static_cast<long long>(h.groups[k].rank);
      chi_c += (k % 2 ? -1 : 1) * counts[k];
    }
    CHECK(chi_h == chi_c);
  }
}

TEST_CASE("components and fundamental groups") {
  CHECK(pi0(circle(3)) == 1);
  CHECK(pi0(discrete(3, 2)) == 3);
  Pi1Summary d2 = summarize(pi1_presentation(delta(2, 3)).group);
  REQUIRE(d2.order);
  CHECK(*d2.order == 1);
  Pi1Summary b = summarize(pi1_presentation(wbar(constant(FiniteGroup::cyclic(2), 3), 3)).group);
  REQUIRE(b.order);
  CHECK(*b.order == 2);
  Pi1Summary t = summarize(pi1_presentation(torus(3)).group);
  CHECK(t.abelian_rank == 2);
  CHECK(!t.order);
  Pi1Summary s = summarize(pi1_presentation(wbar(constant(FiniteGroup::symmetric(3), 3), 3)).group);
  REQUIRE(s.order);
  CHECK(*s.order == 6);
  CHECK(compare_with_finite(pi1_presentation(wbar(constant(FiniteGroup::symmetric(3), 3), 3)).group,
                            FiniteGroup::symmetric(3), 3)
            .certified());
  CHECK(compare_with_finite(pi1_presentation(wbar(constant(FiniteGroup::cyclic(6), 3), 3)).group,
                            FiniteGroup::symmetric(3), 3)
            .refuted());
}

TEST_CASE("weak equivalence verdicts") {
  for (int n = 0; n <= 3; ++n) CHECK(weak_equivalence_verdict(to_point(delta(n, 4))).certified());
  Verdict c = weak_equivalence_verdict(to_point(circle(3)));
  CHECK(c.refuted());
  CHECK(c.witness["invariant"] == "homology");
  SimplicialGroup z2 = constant(FiniteGroup::cyclic(2), 5);
  CHECK(weak_equivalence_verdict(to_point(w(z2, 5).space())).certified());
  CHECK(weak_equivalence_verdict(SimplicialMap::identity(torus(3))).certified());
  CHECK(weak_equivalence_verdict(to_point(discrete(2, 3))).refuted());
}

TEST_CASE("homotopy cartesian squares") {
  SimplicialSet x = circle(3), y = delta(1, 3);
  SimplicialMap ix = SimplicialMap::identity(x);
  CHECK(is_homotopy_cartesian({ix, ix, ix, ix}).certified());
  LimitSet p = product(x, y);
  CHECK(is_homotopy_cartesian({p.projection(1), p.projection(0), to_point(y), to_point(x)}).certified());
  // Fiber of W -> W-bar over the base vertex.
  WConstruction wc = w_construction(constant(FiniteGroup::cyclic(2), 4), 4);
  SimplicialMap base = constant_map(point(4), wc.wbar, 0);
  LimitSet fib = pullback(wc.projection, base);
  CHECK(is_homotopy_cartesian({fib.projection(1), fib.projection(0), base, wc.projection}).certified());
  // A non-cartesian square: point -> circle over the point.
  SimplicialSet pt = point(3);
  SimplicialMap v = constant_map(pt, x, 0);
  CHECK(is_homotopy_cartesian({SimplicialMap::identity(pt), v, to_point(pt), to_point(x)}).refuted());
}
