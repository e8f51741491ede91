#include "segal/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace segal {

MonotoneMap identity_map(int n) {
  MonotoneMap m(n + 1);
  for (int t = 0; t <= n; ++t) m[t] = t;
  return m;
}

MonotoneMap coface_map(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw std::out_of_range("coface index out of range");
  MonotoneMap m(n);
  for (int t = 0; t < n; ++t) m[t] = t < i ? t : t + 1;
  return m;
}

MonotoneMap codegeneracy_map(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw std::out_of_range("codegeneracy index out of range");
  MonotoneMap m(n + 2);
  for (int t = 0; t <= n + 1; ++t) m[t] = t <= i ? t : t - 1;
  return m;
}

MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner) {
  MonotoneMap m(inner.size());
  for (std::size_t t = 0; t < inner.size(); ++t) m[t] = outer.at(inner[t]);
  return m;
}

MonotoneMap degeneracy_surjection(int base_dim, const std::vector<int>& word) {
  // x o sigma^{w_r} o ... o sigma^{w_1}, so sigma^{w_1} is applied to vertices first.
  int dim = base_dim + static_cast<int>(word.size());
  MonotoneMap m = identity_map(dim);
  int cur = dim;
  for (int idx : word) {
    if (idx < 0 || idx > cur - 1) throw std::out_of_range("degeneracy index out of range");
    for (int& v : m) v = v <= idx ? v : v - 1;
    --cur;
  }
  return m;
}

std::vector<int> collapsed_indices(const MonotoneMap& surjection) {
  std::vector<int> out;
  for (int j = static_cast<int>(surjection.size()) - 2; j >= 0; --j)
    if (surjection[j] == surjection[j + 1]) out.push_back(j);
  return out;
}

std::vector<int> normalize_degeneracies(int base_dim, const std::vector<int>& word) {
  return collapsed_indices(degeneracy_surjection(base_dim, word));
}

Factorization factor(const MonotoneMap& theta) {
  Factorization f;
  f.surjection.resize(theta.size());
  for (std::size_t t = 0; t < theta.size(); ++t) {
    if (f.image.empty() || f.image.back() != theta[t]) f.image.push_back(theta[t]);
    f.surjection[t] = static_cast<int>(f.image.size()) - 1;
  }
  return f;
}

NormalWord normalize_word(OperatorWord w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      Operator a = w[k], b = w[k + 1];
      if (a.kind == OpKind::Face && b.kind == OpKind::Face && a.index >= b.index) {
        w[k] = {OpKind::Face, b.index};
        w[k + 1] = {OpKind::Face, a.index + 1};
      } else if (a.kind == OpKind::Degeneracy && b.kind == OpKind::Degeneracy && a.index <= b.index) {
        w[k] = {OpKind::Degeneracy, b.index + 1};
        w[k + 1] = {OpKind::Degeneracy, a.index};
      } else if (a.kind == OpKind::Face && b.kind == OpKind::Degeneracy) {
        int i = a.index, j = b.index;
        if (i < j) {
          w[k] = {OpKind::Degeneracy, j - 1};
          w[k + 1] = {OpKind::Face, i};
        } else if (i == j || i == j + 1) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(k), w.begin() + static_cast<std::ptrdiff_t>(k) + 2);
        } else {
          w[k] = {OpKind::Degeneracy, j};
          w[k + 1] = {OpKind::Face, i - 1};
        }
      } else {
        continue;
      }
      changed = true;
      break;
    }
  }
  NormalWord out;
  for (const Operator& op : w) {
    if (op.kind == OpKind::Degeneracy)
      out.degeneracies.push_back(op.index);
    else
      out.faces.push_back(op.index);
  }
  return out;
}

OperatorWord to_word(const NormalWord& w) {
  OperatorWord out;
  for (int j : w.degeneracies) out.push_back({OpKind::Degeneracy, j});
  for (int i : w.faces) out.push_back({OpKind::Face, i});
  return out;
}

int word_target_dim(const OperatorWord& word, int source_dim) {
  int cur = source_dim;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur += it->kind == OpKind::Face ? -1 : 1;
  return cur;
}

MonotoneMap word_to_map(const OperatorWord& word, int source_dim) {
  // Collect the maps in application order; theta applies the last-collected first.
  std::vector<MonotoneMap> steps;
  int cur = source_dim;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->kind == OpKind::Face) {
      if (cur < 1 || it->index < 0 || it->index > cur) throw std::out_of_range("face operator out of range");
      steps.push_back(coface_map(cur, it->index));
      --cur;
    } else {
      if (it->index < 0 || it->index > cur) throw std::out_of_range("degeneracy operator out of range");
      steps.push_back(codegeneracy_map(cur, it->index));
      ++cur;
    }
  }
  MonotoneMap theta = identity_map(cur);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) theta = compose(*it, theta);
  return theta;
}

std::string to_string(const OperatorWord& word) {
  std::string s;
  for (const Operator& op : word) s += (op.kind == OpKind::Face ? "d" : "s") + std::to_string(op.index);
  return s;
}

std::string degeneracy_prefix(const std::vector<int>& degeneracies) {
  std::string s;
  for (int j : degeneracies) s += "s" + std::to_string(j) + " ";
  return s;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace segal
