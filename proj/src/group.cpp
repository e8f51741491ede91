#include "segal/group.hpp"

#include <algorithm>
#include <numeric>

namespace segal {

FiniteGroup::FiniteGroup() : names_{"e"}, table_{{0}}, inverse_{0}, identity_(0) {}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> names, std::vector<std::vector<int>> table) {
  std::vector<std::string> errors;
  const int n = static_cast<int>(names.size());
  if (n == 0) throw InvalidObject({"group has no elements"});
  {
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) errors.push_back("duplicate element names");
  }
  if (static_cast<int>(table.size()) != n) errors.push_back("multiplication table has the wrong number of rows");
  for (int a = 0; a < static_cast<int>(table.size()); ++a) {
    if (static_cast<int>(table[a].size()) != n) errors.push_back("row " + std::to_string(a) + " has the wrong length");
    for (int v : table[a])
      if (v < 0 || v >= n) {
        errors.push_back("row " + std::to_string(a) + " has an entry outside the group");
        break;
      }
  }
  if (!errors.empty()) throw InvalidObject(std::move(errors));
  for (int a = 0; a < n && errors.size() < 16; ++a)
    for (int b = 0; b < n && errors.size() < 16; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          errors.push_back("not associative: (" + names[a] + "*" + names[b] + ")*" + names[c] + " != " + names[a] +
                           "*(" + names[b] + "*" + names[c] + ")");
          break;
        }
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
    if (ok) e = a;
  }
  if (e < 0) errors.push_back("no identity element");
  std::vector<int> inverse(n, -1);
  if (e >= 0)
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        if (table[a][b] == e && table[b][a] == e) {
          inverse[a] = b;
          break;
        }
      if (inverse[a] < 0) errors.push_back("element '" + names[a] + "' has no inverse");
    }
  if (!errors.empty()) throw InvalidObject(std::move(errors));
  FiniteGroup g;
  g.names_ = std::move(names);
  g.table_ = std::move(table);
  g.inverse_ = std::move(inverse);
  g.identity_ = e;
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw InvalidObject({"cyclic group order must be positive"});
  std::vector<std::string> names;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return from_table(std::move(names), std::move(t));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1) throw InvalidObject({"symmetric group degree must be positive"});
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (const auto& q : perms) {
    std::string s;
    for (int v : q) s += std::to_string(v);
    names.push_back(s);
  }
  const int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<int>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  return from_table(std::move(names), std::move(t));
}

std::optional<int> FiniteGroup::find(const std::string& name) const {
  for (int a = 0; a < order(); ++a)
    if (names_[a] == name) return a;
  return std::nullopt;
}

bool FiniteGroup::abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < a; ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

std::vector<int> FiniteGroup::generated_by(const std::vector<int>& gens) const {
  std::vector<char> in(order(), 0);
  std::vector<int> queue{identity_};
  in[identity_] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (int g : gens) {
      int h = table_[queue[k]][g];
      if (!in[h]) {
        in[h] = 1;
        queue.push_back(h);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool is_homomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& phi) {
  if (static_cast<int>(phi.size()) != a.order()) return false;
  for (int v : phi)
    if (v < 0 || v >= b.order()) return false;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
  return true;
}

SimplicialGroup SimplicialGroup::make(std::vector<FiniteGroup> levels, std::vector<std::vector<std::vector<int>>> faces,
                                      std::vector<std::vector<std::vector<int>>> degens) {
  std::vector<std::string> errors;
  const int M = static_cast<int>(levels.size()) - 1;
  if (M < 0) throw InvalidObject({"simplicial group has no levels"});
  faces.resize(M + 1);
  degens.resize(M + 1);
  for (int n = 1; n <= M; ++n) {
    if (static_cast<int>(faces[n].size()) != n + 1) {
      errors.push_back("level " + std::to_string(n) + " needs " + std::to_string(n + 1) + " face maps");
      continue;
    }
    for (int i = 0; i <= n; ++i)
      if (!is_homomorphism(levels[n], levels[n - 1], faces[n][i]))
        errors.push_back("face d" + std::to_string(i) + " on level " + std::to_string(n) + " is not a homomorphism");
  }
  for (int n = 0; n < M; ++n) {
    if (static_cast<int>(degens[n].size()) != n + 1) {
      errors.push_back("level " + std::to_string(n) + " needs " + std::to_string(n + 1) + " degeneracy maps");
      continue;
    }
    for (int i = 0; i <= n; ++i)
      if (!is_homomorphism(levels[n], levels[n + 1], degens[n][i]))
        errors.push_back("degeneracy s" + std::to_string(i) + " on level " + std::to_string(n) +
                         " is not a homomorphism");
  }
  if (!errors.empty()) throw InvalidObject(std::move(errors));
  // Simplicial identities, elementwise.
  for (int n = 2; n <= M; ++n)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int g = 0; g < levels[n].order(); ++g)
          if (faces[n - 1][i][faces[n][j][g]] != faces[n - 1][j - 1][faces[n][i][g]]) {
            errors.push_back("d" + std::to_string(i) + "d" + std::to_string(j) + " != d" + std::to_string(j - 1) + "d" +
                             std::to_string(i) + " on level " + std::to_string(n));
            g = levels[n].order();
          }
  for (int n = 0; n < M; ++n)
    for (int j = 0; j <= n; ++j)
      for (int g = 0; g < levels[n].order(); ++g) {
        int s = degens[n][j][g];
        for (int i = 0; i <= n + 1; ++i) {
          int d = faces[n + 1][i][s];
          int want;
          if (i == j || i == j + 1)
            want = g;
          else if (i < j)
            want = degens[n - 1][j - 1][faces[n][i][g]];
          else
            want = degens[n - 1][j][faces[n][i - 1][g]];
          if (d != want) {
            errors.push_back("d" + std::to_string(i) + "s" + std::to_string(j) + " identity fails on level " +
                             std::to_string(n));
            break;
          }
        }
      }
  if (!errors.empty()) throw InvalidObject(std::move(errors));
  SimplicialGroup out;
  out.levels_ = std::move(levels);
  out.faces_ = std::move(faces);
  out.degens_ = std::move(degens);
  return out;
}

SimplicialGroup SimplicialGroup::constant(const FiniteGroup& g, int truncation) {
  std::vector<int> id(g.order());
  std::iota(id.begin(), id.end(), 0);
  std::vector<FiniteGroup> levels(truncation + 1, g);
  std::vector<std::vector<std::vector<int>>> faces(truncation + 1), degens(truncation + 1);
  for (int n = 1; n <= truncation; ++n) faces[n].assign(n + 1, id);
  for (int n = 0; n < truncation; ++n) degens[n].assign(n + 1, id);
  SimplicialGroup s = make(std::move(levels), std::move(faces), std::move(degens));
  s.discrete_ = g;
  return s;
}

}  // namespace segal
