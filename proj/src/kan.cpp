#include "segal/kan.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "segal/constructions.hpp"
#include "segal/hash_util.hpp"
#include "segal/hom.hpp"

namespace segal {

namespace {

using PartialIndex = std::unordered_map<std::vector<int>, std::vector<int>, VecHash>;

// Faces of every n-simplex with the i-th dropped.
PartialIndex partial_index(const SimplicialSet& x, int n, int i) {
  PartialIndex idx;
  std::vector<int> key(n);
  for (std::size_t s = 0; s < x.size(n); ++s) {
    int p = 0;
    for (int k = 0; k <= n; ++k)
      if (k != i) key[p++] = x.face(n, k, static_cast<int>(s));
    idx[key].push_back(static_cast<int>(s));
  }
  return idx;
}

// Flat generator index in horn(n, i) of the face opposite vertex k (k != i).
std::vector<int> horn_face_slots(const SimplicialSet& h, int n, int i) {
  std::vector<int> slots;
  for (int k = 0; k <= n; ++k) {
    if (k == i) continue;
    std::string name = "[";
    bool first = true;
    for (int v = 0; v <= n; ++v) {
      if (v == k) continue;
      if (!first) name += ",";
      name += std::to_string(v);
      first = false;
    }
    name += "]";
    slots.push_back(h.flat_index(*h.find_generator(name)));
  }
  return slots;
}

json horn_witness(const SimplicialSet& x, int n, int i, const std::vector<int>& faces) {
  json fs = json::array();
  int p = 0;
  for (int k = 0; k <= n; ++k) {
    if (k == i)
      fs.push_back(nullptr);
    else
      fs.push_back(x.simplex_name(n - 1, faces[p++]));
  }
  return json{{"horn", {{"n", n}, {"i", i}, {"faces", fs}}}};
}

}  // namespace

Verdict kan_check(const SimplicialSet& x, int max_dim) {
  int top = std::min(max_dim, x.truncation());
  for (int n = 1; n <= top; ++n)
    for (int i = 0; i <= n; ++i) {
      SimplicialSet h = horn(n, i, n - 1);
      auto slots = horn_face_slots(h, n, i);
      PartialIndex idx = partial_index(x, n, i);
      std::vector<int> key(n);
      bool failed = false;
      for_each_hom(h, x, [&](const GeneratorImages& img) {
        for (int p = 0; p < n; ++p) key[p] = img[slots[p]];
        if (!idx.count(key)) {
          failed = true;
          return false;
        }
        return true;
      });
      if (failed)
        return Verdict::refuted(top, "horn without filler", horn_witness(x, n, i, key));
    }
  Verdict v = Verdict::certified(top);
  if (top < max_dim) v.note = "horn dimensions above the truncation were not checked";
  return v;
}

Verdict is_fibration(const SimplicialMap& f, int max_dim) {
  const SimplicialSet& x = f.source();
  const SimplicialSet& y = f.target();
  int top = std::min(max_dim, x.truncation());
  for (int n = 1; n <= top; ++n)
    for (int i = 0; i <= n; ++i) {
      SimplicialSet h = horn(n, i, n - 1);
      auto slots = horn_face_slots(h, n, i);
      PartialIndex xi = partial_index(x, n, i);
      PartialIndex yi = partial_index(y, n, i);
      std::vector<int> key(n), fkey(n);
      int bad_target = -1;
      for_each_hom(h, x, [&](const GeneratorImages& img) {
        for (int p = 0; p < n; ++p) {
          key[p] = img[slots[p]];
          fkey[p] = f(n - 1, key[p]);
        }
        auto yt = yi.find(fkey);
        if (yt == yi.end()) return true;  // no lifting problem over this horn
        auto xt = xi.find(key);
        for (int z : yt->second) {
          bool lifted = false;
          if (xt != xi.end())
            for (int s : xt->second)
              if (f(n, s) == z) {
                lifted = true;
                break;
              }
          if (!lifted) {
            bad_target = z;
            return false;
          }
        }
        return true;
      });
      if (bad_target >= 0) {
        json w = horn_witness(x, n, i, key);
        w["target_simplex"] = y.simplex_name(n, bad_target);
        return Verdict::refuted(top, "horn lifting problem without solution", w);
      }
    }
  Verdict v = Verdict::certified(top);
  if (top < max_dim) v.note = "horn dimensions above the truncation were not checked";
  return v;
}

}  // namespace segal
