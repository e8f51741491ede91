#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "segal/fpgroup.hpp"
#include "segal/group.hpp"

using namespace segal;

namespace {

bool rejected(std::vector<std::string> names, std::vector<std::vector<int>> table, const std::string& fragment) {
  try {
    FiniteGroup::from_table(std::move(names), std::move(table));
  } catch (const InvalidObject& e) {
    for (const auto& v : e.violations())
      if (v.find(fragment) != std::string::npos) return true;
  }
  return false;
}

// <a, b | a^m, b^n, (ab)^k>
FpGroup triangle(int m, int n, int k) {
  FpGroup g{{"a", "b"}, {}};
  g.relators.push_back(Word(m, 1));
  g.relators.push_back(Word(n, 2));
  Word ab;
  for (int i = 0; i < k; ++i) ab.insert(ab.end(), {1, 2});
  g.relators.push_back(ab);
  return g;
}

}  // namespace

TEST_CASE("finite group tables") {
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  CHECK(z3.order() == 3);
  CHECK(z3.abelian());
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(!s3.abelian());
  for (int a = 0; a < 6; ++a) {
    CHECK(s3.mul(a, s3.inv(a)) == s3.identity());
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c) CHECK(s3.mul(s3.mul(a, b), c) == s3.mul(a, s3.mul(b, c)));
  }
  // Permutation composition, checked against the names.
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      const std::string &pa = s3.name(a), &pb = s3.name(b), &pab = s3.name(s3.mul(a, b));
      for (int i = 0; i < 3; ++i) CHECK(pab[i] == pa[pb[i] - '0']);
    }
  CHECK(s3.generated_by({1}).size() == 2);
  CHECK(FiniteGroup::trivial().order() == 1);
}

TEST_CASE("invalid tables are rejected") {
  CHECK(rejected({"a", "b"}, {{0, 1}, {1, 1}}, "inverse"));
  // Non-associative: a quasigroup of order 3 that is not a group.
  CHECK(rejected({"e", "x", "y"}, {{0, 1, 2}, {1, 0, 0}, {2, 0, 1}}, ""));
  CHECK(rejected({"e", "e"}, {{0, 1}, {1, 0}}, "duplicate"));
  CHECK(rejected({"e", "x"}, {{0, 1}}, "rows"));
}

TEST_CASE("simplicial groups") {
  SimplicialGroup g = SimplicialGroup::constant(FiniteGroup::cyclic(2), 3);
  CHECK(g.truncation() == 3);
  REQUIRE(g.discrete());
  CHECK(g.face(2, 1, 1) == 1);
  // A level map that is not a homomorphism is rejected.
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  CHECK_THROWS_AS(SimplicialGroup::make({z2, z2}, {{}, {{1, 0}, {0, 1}}}, {{{0, 1}}}), InvalidObject);
}

TEST_CASE("coset enumeration and homomorphism counts") {
  CHECK(group_order(triangle(2, 3, 3)) == 12u);   // A4
  CHECK(group_order(triangle(2, 3, 4)) == 24u);   // S4
  CHECK(group_order(triangle(2, 2, 3)) == 6u);    // S3
  CHECK(group_order(FpGroup{{"a"}, {Word(5, 1)}}) == 5u);
  FpGroup free2{{"a", "b"}, {}};
  CHECK(!group_order(free2, 2000));
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  // Homs from the free group on 2 letters: |S3|^2.
  CHECK(hom_count(free2, s3) == 36);
  // Homs Z/2 -> S3: the identity and the three transpositions.
  CHECK(hom_count(FpGroup{{"a"}, {Word(2, 1)}}, s3) == 4);
  CHECK(hom_count(FiniteGroup::cyclic(2), s3) == 4);
  CHECK(hom_count(s3, s3) == 10);
  CHECK(surjection_onto(triangle(2, 2, 3), s3).has_value());
  CHECK(!surjection_onto(FpGroup{{"a"}, {Word(6, 1)}}, s3).has_value());
  Abelianization ab = abelianization(s3);
  CHECK(ab.rank == 0);
  CHECK(ab.torsion == std::vector<Integer>{2});
  Abelianization z = abelianization(FpGroup{{"a", "b"}, {{1, 2, -1, -2}}});
  CHECK(z.rank == 2);
  CHECK(z.torsion.empty());
}

TEST_CASE("simplification keeps the group") {
  FpGroup g{{"a", "b", "c"}, {{3, -1, -2}, {1, 1}, {2, 2, 2}, {1, 2, -1, -2}}};  // c = ba, a^2, b^3, [a,b]: Z/6
  FpGroup s = simplify(g);
  CHECK(s.rank() < g.rank());
  CHECK(group_order(s) == 6u);
  CHECK(free_reduce({1, -1, 2, 3, -3}) == Word{2});
  CHECK(inverse_word({1, -2}) == Word{2, -1});
}
