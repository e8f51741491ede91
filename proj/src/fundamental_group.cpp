#include "segal/fundamental_group.hpp"

#include <stdexcept>

namespace segal {

Pi1Presentation pi1_presentation(const SimplicialSet& x, int basepoint) {
  if (x.empty()) throw InvalidObject({"fundamental group of the empty set"});
  if (basepoint < 0 || static_cast<std::size_t>(basepoint) >= x.size(0))
    throw InvalidObject({"basepoint is not a vertex"});
  Pi1Presentation p;
  p.basepoint = basepoint;
  const int V = static_cast<int>(x.size(0));
  std::vector<int> nondeg_edges;
  if (x.truncation() >= 1)
    for (int g = 0; g < x.generator_count(1); ++g) nondeg_edges.push_back(x.index_of(GeneratorId{1, g}));
  // BFS spanning tree over nondegenerate edges, in edge order.
  std::vector<std::vector<int>> incident(V);
  for (int e : nondeg_edges) {
    incident[x.face(1, 1, e)].push_back(e);
    incident[x.face(1, 0, e)].push_back(e);
  }
  std::vector<char> reached(V, 0);
  std::vector<char> in_tree(x.truncation() >= 1 ? x.size(1) : 0, 0);
  std::vector<int> queue{basepoint};
  reached[basepoint] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (int e : incident[queue[k]]) {
      int a = x.face(1, 1, e), b = x.face(1, 0, e);
      int other = a == queue[k] ? b : a;
      if (!reached[other]) {
        reached[other] = 1;
        in_tree[e] = 1;
        p.tree_edges.push_back(e);
        queue.push_back(other);
      }
    }
  std::vector<int> gen_of(in_tree.size(), -1);
  for (int e : nondeg_edges)
    if (reached[x.face(1, 1, e)] && !in_tree[e]) {
      gen_of[e] = static_cast<int>(p.generator_edges.size());
      p.generator_edges.push_back(e);
      p.group.generators.push_back(x.simplex_name(1, e));
    }
  if (x.truncation() >= 2)
    for (int g = 0; g < x.generator_count(2); ++g) {
      int s = x.index_of(GeneratorId{2, g});
      if (!reached[x.face(1, 1, x.face(2, 2, s))]) continue;
      // d2 = (0,1), d0 = (1,2), d1 = (0,2): word g01 g12 g02^-1.
      Word w;
      int e01 = x.face(2, 2, s), e12 = x.face(2, 0, s), e02 = x.face(2, 1, s);
      if (gen_of[e01] >= 0) w.push_back(gen_of[e01] + 1);
      if (gen_of[e12] >= 0) w.push_back(gen_of[e12] + 1);
      if (gen_of[e02] >= 0) w.push_back(-(gen_of[e02] + 1));
      p.group.relators.push_back(std::move(w));
    }
  return p;
}

Pi1Summary summarize(const FpGroup& g) {
  Pi1Summary s;
  s.simplified = simplify(g);
  s.order = group_order(s.simplified);
  s.homs_s3 = hom_count(s.simplified, FiniteGroup::symmetric(3));
  s.homs_s4 = hom_count(s.simplified, FiniteGroup::symmetric(4));
  Abelianization ab = abelianization(s.simplified);
  s.abelian_rank = ab.rank;
  s.abelian_torsion = ab.torsion;
  return s;
}

json to_json(const Pi1Presentation& p, const SimplicialSet& x) {
  json rel = json::array();
  for (const auto& r : p.group.relators) rel.push_back(word_to_string(p.group, r));
  return json{{"basepoint", x.simplex_name(0, p.basepoint)}, {"generators", p.group.generators}, {"relators", rel}};
}

json to_json(const Pi1Summary& s) {
  json t = json::array();
  for (const auto& d : s.abelian_torsion) t.push_back(std::stoll(d.str()));
  json rel = json::array();
  for (const auto& r : s.simplified.relators) rel.push_back(word_to_string(s.simplified, r));
  json j{{"order", s.order ? json(*s.order) : json(nullptr)},
         {"homs_into_S3", s.homs_s3},
         {"homs_into_S4", s.homs_s4},
         {"abelianization", {{"rank", s.abelian_rank}, {"torsion", t}}},
         {"simplified", {{"generators", s.simplified.generators}, {"relators", rel}}}};
  return j;
}

Verdict compare_with_finite(const FpGroup& g, const FiniteGroup& h, int truncation) {
  FpGroup s = simplify(g);
  auto order = group_order(s);
  json w{{"expected_order", h.order()}};
  if (order && static_cast<int>(*order) != h.order()) {
    w["order"] = *order;
    return Verdict::refuted(truncation, "group orders differ", w);
  }
  std::size_t a3 = hom_count(s, FiniteGroup::symmetric(3)), b3 = hom_count(h, FiniteGroup::symmetric(3));
  std::size_t a4 = hom_count(s, FiniteGroup::symmetric(4)), b4 = hom_count(h, FiniteGroup::symmetric(4));
  if (a3 != b3 || a4 != b4) {
    w["homs_into_S3"] = {a3, b3};
    w["homs_into_S4"] = {a4, b4};
    return Verdict::refuted(truncation, "homomorphism counts differ", w);
  }
  if (!order) return Verdict::consistent(truncation, "coset enumeration did not terminate", w);
  if (h.order() > 24) return Verdict::consistent(truncation, "order beyond the certifiable range", w);
  auto surj = surjection_onto(s, h);
  if (!surj) return Verdict::refuted(truncation, "no surjection onto the finite group", w);
  // Equal finite orders plus a surjection give an isomorphism.
  return Verdict::certified(truncation);
}

Verdict compare_groups(const FpGroup& a, const FpGroup& b, int truncation) {
  Pi1Summary sa = summarize(a), sb = summarize(b);
  json w{{"left", to_json(sa)}, {"right", to_json(sb)}};
  if (sa.order && sb.order && *sa.order != *sb.order) return Verdict::refuted(truncation, "group orders differ", w);
  if (sa.abelian_rank != sb.abelian_rank || sa.abelian_torsion != sb.abelian_torsion)
    return Verdict::refuted(truncation, "abelianizations differ", w);
  if (sa.homs_s3 != sb.homs_s3 || sa.homs_s4 != sb.homs_s4)
    return Verdict::refuted(truncation, "homomorphism counts differ", w);
  if (sa.order && sb.order && *sa.order == 1) return Verdict::certified(truncation);
  return Verdict::consistent(truncation, "fundamental groups agree on all computed invariants", w);
}

}  // namespace segal
