#include "segal/hom.hpp"

#include <stdexcept>

#include "segal/constructions.hpp"

namespace segal {

int image_of(const SimplicialSet& k, const SimplicialSet& x, const GeneratorImages& img, const SimplexRef& r) {
  int g = img[k.flat_index(r.generator)];
  if (r.degeneracies.empty()) return g;
  return x.degenerate_by(r.generator.dim, g, r.degeneracies);
}

void for_each_hom(const SimplicialSet& k, const SimplicialSet& x,
                  const std::function<bool(const GeneratorImages&)>& visit, const std::vector<int>& fixed) {
  const int total = k.total_generators();
  int top = 0;
  for (int d = 0; d <= k.truncation(); ++d)
    if (k.generator_count(d) > 0) top = d;
  if (total > 0 && top > x.truncation()) throw std::invalid_argument("hom source has generators above the target truncation");
  GeneratorImages img(total, -1);
  // Post-order over the face relation starting from the top generators, so a
  // simplex is assigned right after its faces and dead branches die early.
  std::vector<int> order;
  std::vector<char> seen(total, 0);
  auto visit_gen = [&](auto&& self, int f) -> void {
    if (seen[f]) return;
    seen[f] = 1;
    GeneratorId g = k.from_flat_index(f);
    for (int i = 0; i <= g.dim && g.dim >= 1; ++i) self(self, k.flat_index(k.generator_face(g, i).generator));
    order.push_back(f);
  };
  for (int d = k.truncation(); d >= 0; --d)
    for (int g = 0; g < k.generator_count(d); ++g) visit_gen(visit_gen, k.flat_index({d, g}));
  bool stop = false;
  auto rec = [&](auto&& self, int f) -> void {
    if (stop) return;
    if (f == total) {
      if (!visit(img)) stop = true;
      return;
    }
    const int slot = order[f];
    GeneratorId g = k.from_flat_index(slot);
    int pin = slot < static_cast<int>(fixed.size()) ? fixed[slot] : -1;
    if (g.dim == 0) {
      if (pin >= 0) {
        img[slot] = pin;
        self(self, f + 1);
      } else {
        for (std::size_t v = 0; v < x.size(0) && !stop; ++v) {
          img[slot] = static_cast<int>(v);
          self(self, f + 1);
        }
      }
      return;
    }
    std::vector<int> fs(g.dim + 1);
    for (int i = 0; i <= g.dim; ++i) fs[i] = image_of(k, x, img, k.generator_face(g, i));
    const auto& cands = x.with_boundary(g.dim, fs);
    if (pin >= 0) {
      for (int c : cands)
        if (c == pin) {
          img[slot] = c;
          self(self, f + 1);
        }
      return;
    }
    for (int c : cands) {
      if (stop) break;
      img[slot] = c;
      self(self, f + 1);
    }
  };
  rec(rec, 0);
}

std::vector<GeneratorImages> hom_images(const SimplicialSet& k, const SimplicialSet& x, const Budget& budget) {
  std::vector<GeneratorImages> out;
  for_each_hom(k, x, [&](const GeneratorImages& img) {
    out.push_back(img);
    if (out.size() > budget.max_simplices)
      throw BudgetExceeded("hom enumeration exceeds the budget of " + std::to_string(budget.max_simplices));
    return true;
  });
  return out;
}

std::size_t hom_count(const SimplicialSet& k, const SimplicialSet& x) {
  std::size_t c = 0;
  for_each_hom(k, x, [&](const GeneratorImages&) {
    ++c;
    return true;
  });
  return c;
}

SimplicialMap map_from_images(const SimplicialSet& k, const SimplicialSet& x, const GeneratorImages& img) {
  SimplicialSet src = k.truncation() <= x.truncation() ? k : truncate(k, x.truncation());
  const int N = src.truncation();
  std::vector<std::vector<int>> levels(N + 1);
  for (int n = 0; n <= N; ++n) {
    levels[n].resize(src.size(n));
    for (std::size_t s = 0; s < src.size(n); ++s) levels[n][s] = image_of(src, x, img, src.simplex(n, static_cast<int>(s)));
  }
  return SimplicialMap::from_dense(src, x, std::move(levels));
}

std::vector<SimplicialMap> hom_set(const SimplicialSet& k, const SimplicialSet& x, const Budget& budget) {
  std::vector<SimplicialMap> out;
  for (const auto& img : hom_images(k, x, budget)) out.push_back(map_from_images(k, x, img));
  return out;
}

}  // namespace segal
