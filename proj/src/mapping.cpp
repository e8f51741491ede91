#include "segal/mapping.hpp"

#include <stdexcept>
#include <unordered_map>

#include "segal/hash_util.hpp"

namespace segal {

namespace {

std::vector<int> coface_elements(int m, int i) {
  std::vector<int> e(m);
  for (int j = 0; j < m; ++j) e[j] = j < i ? j : j + 1;
  return e;
}

std::vector<int> codegeneracy_elements(int m, int i) {
  std::vector<int> e(m + 2);
  for (int j = 0; j <= m + 1; ++j) e[j] = j <= i ? j : j - 1;
  return e;
}

// Poset structure maps built from maps on [m]; `lift` turns a map [a] -> [b] into P^a -> P^b.
template <class Lift>
void fill_structure(PosetFamily& f, int T, Lift&& lift) {
  f.cofaces.assign(T + 1, {});
  f.codegens.assign(T + 1, {});
  for (int m = 1; m <= T; ++m)
    for (int i = 0; i <= m; ++i) f.cofaces[m].push_back(lift(m - 1, m, coface_elements(m, i)));
  for (int m = 0; m < T; ++m)
    for (int i = 0; i <= m; ++i) f.codegens[m].push_back(lift(m + 1, m, codegeneracy_elements(m, i)));
}

// Normal forms in `a` of the images of every generator of `b` (flat order) under e : P_b -> P_a.
std::vector<SimplexRef> transport_refs(const Nerve& a, const Nerve& b, const std::vector<int>& e) {
  std::vector<SimplexRef> out;
  for (const auto& level : b.chains)
    for (const auto& c : level) {
      std::vector<int> img;
      img.reserve(c.size());
      for (int v : c) img.push_back(e[v]);
      out.push_back(a.ref_of(img));
    }
  return out;
}

GeneratorImages pull(const SimplicialSet& a, const SimplicialSet& x, const GeneratorImages& phi,
                     const std::vector<SimplexRef>& refs) {
  GeneratorImages out(refs.size());
  for (std::size_t k = 0; k < refs.size(); ++k) out[k] = image_of(a, x, phi, refs[k]);
  return out;
}

}  // namespace

PosetFamily family_delta(int T) {
  PosetFamily f;
  f.name = "delta";
  for (int m = 0; m <= T; ++m) {
    f.posets.push_back(Poset::chain(m));
    f.nerves.push_back(nerve(f.posets.back(), m));
    std::vector<int> id(m + 1);
    for (int j = 0; j <= m; ++j) id[j] = j;
    f.to_simplex.push_back(id);
  }
  fill_structure(f, T, [](int, int, const std::vector<int>& e) { return e; });
  return f;
}

PosetFamily family_delta_times(int T, int k) {
  PosetFamily f;
  f.name = "delta_x_delta" + std::to_string(k);
  Poset ck = Poset::chain(k);
  for (int m = 0; m <= T; ++m) {
    f.posets.push_back(Poset::product(Poset::chain(m), ck));
    f.nerves.push_back(nerve(f.posets.back(), m + k));
    std::vector<int> proj(f.posets.back().size);
    for (int u = 0; u < f.posets.back().size; ++u) proj[u] = u / (k + 1);
    f.to_simplex.push_back(proj);
  }
  fill_structure(f, T, [k](int a, int, const std::vector<int>& e) {
    std::vector<int> out((a + 1) * (k + 1));
    for (int x = 0; x <= a; ++x)
      for (int y = 0; y <= k; ++y) out[x * (k + 1) + y] = e[x] * (k + 1) + y;
    return out;
  });
  return f;
}

PosetFamily family_skeleton(int T, int n) {
  PosetFamily f;
  f.name = "skeleton" + std::to_string(n);
  for (int m = 0; m <= T; ++m) {
    f.posets.push_back(Poset::chain(m));
    f.nerves.push_back(nerve(f.posets.back(), m, std::min(n, m)));
    std::vector<int> id(m + 1);
    for (int j = 0; j <= m; ++j) id[j] = j;
    f.to_simplex.push_back(id);
  }
  fill_structure(f, T, [](int, int, const std::vector<int>& e) { return e; });
  return f;
}

PosetFamily family_subdivision(int T) {
  PosetFamily f;
  f.name = "subdivision";
  for (int m = 0; m <= T; ++m) {
    f.posets.push_back(Poset::nonempty_subsets(m));
    f.nerves.push_back(nerve(f.posets.back(), m));
    std::vector<int> last(f.posets.back().size);
    for (int u = 0; u < f.posets.back().size; ++u) {
      int mask = u + 1, top = 0;
      for (int b = 0; b <= m; ++b)
        if (mask & (1 << b)) top = b;
      last[u] = top;
    }
    f.to_simplex.push_back(last);
  }
  fill_structure(f, T, [](int a, int, const std::vector<int>& e) {
    std::vector<int> out((1 << (a + 1)) - 1);
    for (int u = 0; u < static_cast<int>(out.size()); ++u) {
      int mask = u + 1, img = 0;
      for (int b = 0; b <= a; ++b)
        if (mask & (1 << b)) img |= 1 << e[b];
      out[u] = img - 1;
    }
    return out;
  });
  return f;
}

struct MappingComplex::Data {
  std::shared_ptr<const PosetFamily> family;
  SimplicialSet target;
  SimplicialSet set;
  std::vector<std::vector<GeneratorImages>> elements;
  std::vector<std::unordered_map<GeneratorImages, int, VecHash>> lookup;
};

MappingComplex MappingComplex::build(std::shared_ptr<const PosetFamily> family, const SimplicialSet& x,
                                     const Budget& budget) {
  const PosetFamily& f = *family;
  const int T = f.truncation();
  std::vector<std::vector<GeneratorImages>> elems(T + 1);
  std::vector<std::unordered_map<GeneratorImages, int, VecHash>> lookup(T + 1);
  std::size_t total = 0;
  for (int m = 0; m <= T; ++m) {
    for_each_hom(f.nerves[m].set, x, [&](const GeneratorImages& img) {
      lookup[m].emplace(img, static_cast<int>(elems[m].size()));
      elems[m].push_back(img);
      if (++total > budget.max_simplices)
        throw BudgetExceeded("mapping complex (" + f.name + ") exceeds the budget of " +
                             std::to_string(budget.max_simplices) + " simplices");
      return true;
    });
  }

  LevelwiseSet lv;
  lv.truncation = T;
  lv.sizes.assign(T + 1, 0);
  lv.faces.assign(T + 1, {});
  lv.degens.assign(T + 1, {});
  for (int m = 0; m <= T; ++m) lv.sizes[m] = elems[m].size();
  auto at = [&](int m, const GeneratorImages& g) {
    auto it = lookup[m].find(g);
    if (it == lookup[m].end()) throw std::logic_error("mapping complex is not closed under structure maps");
    return it->second;
  };
  for (int m = 0; m <= T; ++m) {
    const SimplicialSet& qm = f.nerves[m].set;
    if (m >= 1) {
      lv.faces[m].resize(m + 1);
      for (int i = 0; i <= m; ++i) {
        auto refs = transport_refs(f.nerves[m], f.nerves[m - 1], f.cofaces[m][i]);
        lv.faces[m][i].resize(lv.sizes[m]);
        for (std::size_t e = 0; e < lv.sizes[m]; ++e) lv.faces[m][i][e] = at(m - 1, pull(qm, x, elems[m][e], refs));
      }
    }
    if (m < T) {
      lv.degens[m].resize(m + 1);
      for (int i = 0; i <= m; ++i) {
        auto refs = transport_refs(f.nerves[m], f.nerves[m + 1], f.codegens[m][i]);
        lv.degens[m][i].resize(lv.sizes[m]);
        for (std::size_t e = 0; e < lv.sizes[m]; ++e) lv.degens[m][i][e] = at(m + 1, pull(qm, x, elems[m][e], refs));
      }
    }
  }

  // Elements are named by the images of the maximal chains, which determine the map.
  std::vector<std::vector<int>> maximal(T + 1);
  for (int m = 0; m <= T; ++m) {
    const SimplicialSet& qm = f.nerves[m].set;
    std::vector<char> is_face(qm.total_generators(), 0);
    for (int d = 1; d <= qm.truncation(); ++d)
      for (int g = 0; g < qm.generator_count(d); ++g)
        for (int i = 0; i <= d; ++i) is_face[qm.flat_index(qm.generator_face({d, g}, i).generator)] = 1;
    for (int k = 0; k < qm.total_generators(); ++k)
      if (!is_face[k]) maximal[m].push_back(k);
  }
  Compressed comp = compress(
      lv,
      [&](int m, int e) {
        const SimplicialSet& qm = f.nerves[m].set;
        std::string s = "<";
        bool first = true;
        for (int k : maximal[m]) {
          if (!first) s += "|";
          first = false;
          s += x.simplex_name(qm.from_flat_index(k).dim, elems[m][e][k]);
        }
        return s + ">";
      },
      budget);

  auto data = std::make_shared<Data>();
  data->family = std::move(family);
  data->target = x;
  data->set = comp.set;
  data->elements.resize(T + 1);
  data->lookup.resize(T + 1);
  for (int m = 0; m <= T; ++m) {
    data->elements[m].resize(lv.sizes[m]);
    for (std::size_t e = 0; e < lv.sizes[m]; ++e) {
      int ne = comp.relabel[m][e];
      data->lookup[m].emplace(elems[m][e], ne);
      data->elements[m][ne] = std::move(elems[m][e]);
    }
  }
  MappingComplex out;
  out.data_ = std::move(data);
  return out;
}

const SimplicialSet& MappingComplex::set() const { return data_->set; }
const SimplicialSet& MappingComplex::target() const { return data_->target; }
const PosetFamily& MappingComplex::family() const { return *data_->family; }
std::shared_ptr<const PosetFamily> MappingComplex::family_ptr() const { return data_->family; }
const GeneratorImages& MappingComplex::element(int m, int idx) const { return data_->elements[m][idx]; }

std::optional<int> MappingComplex::find(int m, const GeneratorImages& images) const {
  auto it = data_->lookup[m].find(images);
  if (it == data_->lookup[m].end()) return std::nullopt;
  return it->second;
}

SimplicialMap unit_map(const MappingComplex& c) {
  const PosetFamily& f = c.family();
  const int T = f.truncation();
  const SimplicialSet& x = c.target();
  if (x.truncation() < T) throw std::invalid_argument("unit map needs the target at the complex truncation");
  SimplicialSet src = x.truncation() == T ? x : truncate(x, T);
  std::vector<std::vector<int>> levels(T + 1);
  for (int m = 0; m <= T; ++m) {
    const Nerve& nv = f.nerves[m];
    std::vector<MonotoneMap> thetas;
    for (const auto& level : nv.chains)
      for (const auto& ch : level) {
        MonotoneMap th;
        for (int v : ch) th.push_back(f.to_simplex[m][v]);
        thetas.push_back(th);
      }
    levels[m].resize(src.size(m));
    GeneratorImages img(thetas.size());
    for (std::size_t s = 0; s < src.size(m); ++s) {
      for (std::size_t k = 0; k < thetas.size(); ++k) img[k] = x.operator_image(m, static_cast<int>(s), thetas[k]);
      auto idx = c.find(m, img);
      if (!idx) throw std::logic_error("unit map leaves the mapping complex");
      levels[m][s] = *idx;
    }
  }
  return SimplicialMap::from_dense(src, c.set(), std::move(levels));
}

SimplicialMap postcompose(const MappingComplex& from, const MappingComplex& to, const SimplicialMap& f) {
  if (from.family_ptr() != to.family_ptr() && from.family().name != to.family().name)
    throw std::invalid_argument("postcompose needs complexes over the same family");
  const PosetFamily& fam = from.family();
  const int T = fam.truncation();
  std::vector<std::vector<int>> levels(T + 1);
  for (int m = 0; m <= T; ++m) {
    const SimplicialSet& qm = fam.nerves[m].set;
    std::vector<int> dims;
    for (int k = 0; k < qm.total_generators(); ++k) dims.push_back(qm.from_flat_index(k).dim);
    levels[m].resize(from.set().size(m));
    GeneratorImages img(dims.size());
    for (std::size_t e = 0; e < levels[m].size(); ++e) {
      const auto& phi = from.element(m, static_cast<int>(e));
      for (std::size_t k = 0; k < dims.size(); ++k) img[k] = f(dims[k], phi[k]);
      auto idx = to.find(m, img);
      if (!idx) throw std::logic_error("postcomposition leaves the mapping complex");
      levels[m][e] = *idx;
    }
  }
  return SimplicialMap::from_dense(from.set(), to.set(), std::move(levels));
}

SimplicialMap restrict_along(const MappingComplex& from, const MappingComplex& to,
                             const std::vector<std::vector<int>>& element_maps) {
  const PosetFamily& pf = from.family();
  const PosetFamily& qf = to.family();
  const int T = std::min(pf.truncation(), qf.truncation());
  if (to.set().truncation() < T) throw std::invalid_argument("restriction target truncated too low");
  SimplicialSet src = from.set().truncation() == T ? from.set() : truncate(from.set(), T);
  std::vector<std::vector<int>> levels(T + 1);
  for (int m = 0; m <= T; ++m) {
    auto refs = transport_refs(pf.nerves[m], qf.nerves[m], element_maps[m]);
    levels[m].resize(src.size(m));
    for (std::size_t e = 0; e < levels[m].size(); ++e) {
      auto img = pull(pf.nerves[m].set, from.target(), from.element(m, static_cast<int>(e)), refs);
      auto idx = to.find(m, img);
      if (!idx) throw std::logic_error("restriction leaves the mapping complex");
      levels[m][e] = *idx;
    }
  }
  return SimplicialMap::from_dense(src, to.set(), std::move(levels));
}

SimplicialMap evaluate_along(const MappingComplex& from, const std::vector<std::vector<int>>& element_maps) {
  const PosetFamily& pf = from.family();
  const int T = pf.truncation();
  std::vector<std::vector<int>> levels(T + 1);
  for (int m = 0; m <= T; ++m) {
    SimplexRef r = pf.nerves[m].ref_of(element_maps[m]);
    levels[m].resize(from.set().size(m));
    for (std::size_t e = 0; e < levels[m].size(); ++e)
      levels[m][e] = image_of(pf.nerves[m].set, from.target(), from.element(m, static_cast<int>(e)), r);
  }
  return SimplicialMap::from_dense(from.set(), from.target(), std::move(levels));
}

Coskeleton coskeleton(const SimplicialSet& x, int n, const Budget& budget) {
  const int N = x.truncation();
  auto fam = std::make_shared<const PosetFamily>(family_skeleton(N, std::min(n, N)));
  MappingComplex c = MappingComplex::build(fam, x, budget);
  SimplicialMap u = unit_map(c);
  return {std::move(c), std::move(u)};
}

ExResult ex(const SimplicialSet& x, const Budget& budget) {
  auto fam = std::make_shared<const PosetFamily>(family_subdivision(x.truncation()));
  MappingComplex c = MappingComplex::build(fam, x, budget);
  SimplicialMap u = unit_map(c);
  return {std::move(c), std::move(u)};
}

PathSpace path_space(const SimplicialSet& x, const Budget& budget) {
  const int N = x.truncation();
  if (N < 1) throw std::invalid_argument("path space needs truncation >= 1");
  const int T = N - 1;
  auto fam = std::make_shared<const PosetFamily>(family_delta_times(T, 1));
  MappingComplex c = MappingComplex::build(fam, x, budget);
  std::vector<std::vector<int>> e0(T + 1), e1(T + 1);
  for (int m = 0; m <= T; ++m)
    for (int j = 0; j <= m; ++j) {
      e0[m].push_back(2 * j);
      e1[m].push_back(2 * j + 1);
    }
  SimplicialMap s = evaluate_along(c, e0);
  SimplicialMap t = evaluate_along(c, e1);
  SimplicialMap k = unit_map(c);
  return {std::move(c), std::move(s), std::move(t), std::move(k)};
}

}  // namespace segal
