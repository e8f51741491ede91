#include "segal/functor.hpp"

#include <sstream>
#include <stdexcept>

#include "segal/constructions.hpp"

namespace segal {

namespace {

SimplicialSet empty_set(int truncation) {
  SimplicialSet::Presentation p;
  p.truncation = truncation;
  p.names.resize(truncation + 1);
  p.faces.resize(truncation + 1);
  return SimplicialSet::from_presentation(std::move(p));
}

}  // namespace

EndoFunctor EndoFunctor::parse(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  auto num = [&](std::size_t i) {
    if (i >= parts.size()) throw InvalidObject({"functor '" + spec + "' is missing a parameter"});
    try {
      int v = std::stoi(parts[i]);
      if (v < 0) throw InvalidObject({"functor parameters must be natural numbers"});
      return v;
    } catch (const std::logic_error&) {
      throw InvalidObject({"functor '" + spec + "' has a malformed parameter"});
    }
  };
  if (parts.empty()) throw InvalidObject({"empty functor name"});
  const std::string& head = parts[0];
  if (head == "identity" || head == "id") return identity();
  if (head == "ex") return ex(parts.size() > 1 ? num(1) : 1);
  if (head == "cosk") return cosk(num(1));
  if (head == "postnikov") return postnikov(num(1), parts.size() > 2 ? num(2) : 1);
  if (head == "empty") return constant_empty();
  throw InvalidObject({"unknown functor '" + spec + "'"});
}

std::string EndoFunctor::name() const {
  switch (kind) {
    case FunctorKind::Identity:
      return "identity";
    case FunctorKind::Ex:
      return "ex:" + std::to_string(k);
    case FunctorKind::Coskeleton:
      return "cosk:" + std::to_string(n);
    case FunctorKind::Postnikov:
      return "postnikov:" + std::to_string(n) + ":" + std::to_string(k);
    case FunctorKind::ConstantEmpty:
      return "empty";
  }
  return "?";
}

AppliedObject apply(const EndoFunctor& l, const SimplicialSet& x, const Budget& budget) {
  AppliedObject out;
  out.source = x;
  if (l.kind == FunctorKind::ConstantEmpty) {
    out.value = empty_set(x.truncation());
    out.has_unit = false;
    return out;
  }
  SimplicialSet cur = x;
  SimplicialMap unit = SimplicialMap::identity(x);
  const int exs = (l.kind == FunctorKind::Ex || l.kind == FunctorKind::Postnikov) ? l.k : 0;
  for (int i = 0; i < exs; ++i) {
    ExResult e = ex(cur, budget);
    unit = compose(e.unit, unit);
    cur = e.complex.set();
    out.stages.push_back(e.complex);
  }
  if (l.kind == FunctorKind::Coskeleton || l.kind == FunctorKind::Postnikov) {
    Coskeleton c = coskeleton(cur, l.kind == FunctorKind::Coskeleton ? l.n : l.n + 1, budget);
    unit = compose(c.unit, unit);
    cur = c.complex.set();
    out.stages.push_back(c.complex);
  }
  out.value = cur;
  out.unit = unit;
  return out;
}

SimplicialMap apply(const EndoFunctor& l, const AppliedObject& from, const AppliedObject& to, const SimplicialMap& f) {
  if (!(f.source() == from.source) || !(f.target() == to.source))
    throw std::invalid_argument("map does not match the applied objects");
  if (l.kind == FunctorKind::ConstantEmpty)
    return SimplicialMap::from_dense(from.value, to.value, std::vector<std::vector<int>>(from.value.truncation() + 1));
  SimplicialMap g = f;
  for (std::size_t i = 0; i < from.stages.size(); ++i) g = postcompose(from.stages[i], to.stages[i], g);
  return g;
}

SimplicialSet postnikov_approx(const SimplicialSet& x, int n, int k, const Budget& budget) {
  return apply(EndoFunctor::postnikov(n, k), x, budget).value;
}

ProductComparison product_comparison(const EndoFunctor& l, const SimplicialSet& x, const SimplicialSet& y,
                                     const Budget& budget) {
  LimitSet p = product(x, y, budget);
  ProductComparison out;
  out.lx = apply(l, x, budget);
  out.ly = apply(l, y, budget);
  out.lxy = apply(l, p.set(), budget);
  out.target = product(out.lx.value, out.ly.value, budget);
  out.map = out.target.induced(out.lxy.value, {apply(l, out.lxy, out.lx, p.projection(0)),
                                               apply(l, out.lxy, out.ly, p.projection(1))});
  return out;
}

SegalReport functor_audit(const EndoFunctor& l, int T, const OracleOptions& opts) {
  SegalReport r;
  r.kind = "functor_audit:" + l.name();
  r.up_to = T;
  const SimplicialSet pt = point(T);
  {
    AppliedObject lp = apply(l, pt, opts.budget);
    r.add({"preserves_point", -1, weak_equivalence_verdict(to_point(lp.value), T)});
  }
  // Known weak equivalences.
  std::vector<std::pair<std::string, SimplicialMap>> equivalences;
  equivalences.emplace_back("delta1_to_point", to_point(delta(1, T)));
  equivalences.emplace_back("delta2_to_point", to_point(delta(2, T)));
  equivalences.emplace_back("vertex_of_delta2", constant_map(pt, delta(2, T), 0));
  equivalences.emplace_back("horn21_into_delta2",
                            skeleton_inclusion(horn(2, 1, T), delta(2, T)));
  for (std::size_t i = 0; i < equivalences.size(); ++i) {
    const auto& [name, f] = equivalences[i];
    AppliedObject a = apply(l, f.source(), opts.budget);
    AppliedObject b = apply(l, f.target(), opts.budget);
    Verdict v = weak_equivalence_verdict(apply(l, a, b, f), T);
    v.note = name + (v.note.empty() ? "" : ": " + v.note);
    r.add({"preserves_weak_equivalences", static_cast<int>(i), v});
  }
  std::vector<std::pair<SimplicialSet, SimplicialSet>> pairs{
      {pt, pt}, {discrete(2, T), delta(1, T)}, {delta(1, T), circle(T)}};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    ProductComparison pc = product_comparison(l, pairs[i].first, pairs[i].second, opts.budget);
    r.add({"product_comparison", static_cast<int>(i), weak_equivalence_verdict(pc.map, T)});
  }
  return r;
}

SimplicialSpace apply_levelwise(const EndoFunctor& l, const SimplicialSpace& b, std::vector<AppliedObject>& levels,
                                const Budget& budget) {
  const int M = b.ext_truncation();
  levels.clear();
  for (int n = 0; n <= M; ++n) levels.push_back(apply(l, b.level(n), budget));
  std::vector<SimplicialSet> sets;
  for (const auto& a : levels) sets.push_back(a.value);
  std::vector<std::vector<SimplicialMap>> faces(M + 1), degens(M + 1);
  for (int n = 1; n <= M; ++n)
    for (int i = 0; i <= n; ++i) faces[n].push_back(apply(l, levels[n], levels[n - 1], b.face(n, i)));
  for (int n = 0; n < M; ++n)
    for (int i = 0; i <= n; ++i) degens[n].push_back(apply(l, levels[n], levels[n + 1], b.degeneracy(n, i)));
  return SimplicialSpace::make(std::move(sets), std::move(faces), std::move(degens));
}

LevelwiseApplication apply_levelwise(const EndoFunctor& l, const SpaceMap& pi, int up_to, const OracleOptions& opts,
                                     bool run_checks) {
  LevelwiseApplication out;
  SimplicialSpace a = apply_levelwise(l, pi.source(), out.source_levels, opts.budget);
  SimplicialSpace b = apply_levelwise(l, pi.target(), out.target_levels, opts.budget);
  std::vector<SimplicialMap> maps;
  for (int n = 0; n <= pi.ext_truncation(); ++n)
    maps.push_back(apply(l, out.source_levels[n], out.target_levels[n], pi.level(n)));
  out.map = SpaceMap::make(std::move(a), std::move(b), std::move(maps));
  if (run_checks) out.report = is_segal_group_action(out.map, up_to, opts);
  return out;
}

}  // namespace segal
