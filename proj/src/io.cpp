#include "segal/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace segal {

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  return j;
}

json ref_json(const SimplicialSet& x, const SimplexRef& r) {
  return {{"s", r.degeneracies}, {"g", x.generator_name(r.generator)}};
}

SimplexRef ref_from_json(const json& j, const SimplicialSet::Presentation* p, const SimplicialSet* x,
                         const std::string& where) {
  std::string name;
  std::vector<int> degens;
  if (j.is_string()) {
    name = j.get<std::string>();
  } else {
    name = as_string(field(j, "g", where), where + ".g");
    if (j.contains("s")) {
      const json& s = as_array(j["s"], where + ".s");
      for (std::size_t k = 0; k < s.size(); ++k) degens.push_back(as_int(s[k], where + ".s"));
    }
  }
  if (x) {
    auto g = x->find_generator(name);
    if (!g) throw InvalidObject({where + ": unknown generator '" + name + "'"});
    return {degens, *g};
  }
  for (std::size_t d = 0; d < p->names.size(); ++d)
    for (std::size_t g = 0; g < p->names[d].size(); ++g)
      if (p->names[d][g] == name) return {degens, {static_cast<int>(d), static_cast<int>(g)}};
  throw InvalidObject({where + ": unknown generator '" + name + "'"});
}

json images_json(const SimplicialMap& f) {
  json im = json::object();
  const SimplicialSet& s = f.source();
  for (int d = 0; d <= s.truncation(); ++d)
    for (int g = 0; g < s.generator_count(d); ++g) im[s.generator_name({d, g})] = ref_json(f.target(), f.image({d, g}));
  return im;
}

std::map<std::string, int> simplex_names(const SimplicialSet& x, int n) {
  std::map<std::string, int> out;
  for (std::size_t i = 0; i < x.size(n); ++i)
    if (!out.emplace(x.simplex_name(n, static_cast<int>(i)), static_cast<int>(i)).second)
      throw ParseError("simplex name '" + x.simplex_name(n, static_cast<int>(i)) + "' is ambiguous");
  return out;
}

void check_kind(const json& j, const char* kind, const std::string& where) {
  if (j.is_object() && j.contains("kind") && j["kind"] != kind)
    throw ParseError(where + ": expected kind '" + kind + "', found " + j["kind"].dump());
}

}  // namespace

json to_json(const SimplicialSet& x) {
  json j;
  j["kind"] = "simplicial_set";
  j["truncation"] = x.truncation();
  json gens = json::array(), faces = json::object();
  for (int d = 0; d <= x.truncation(); ++d) {
    json row = json::array();
    for (int g = 0; g < x.generator_count(d); ++g) {
      row.push_back(x.generator_name({d, g}));
      if (d == 0) continue;
      json fs = json::array();
      for (int i = 0; i <= d; ++i) fs.push_back(ref_json(x, x.generator_face({d, g}, i)));
      faces[x.generator_name({d, g})] = std::move(fs);
    }
    gens.push_back(std::move(row));
  }
  j["generators"] = std::move(gens);
  j["faces"] = std::move(faces);
  return j;
}

json to_json(const SimplicialMap& f) {
  return {{"kind", "simplicial_map"}, {"source", to_json(f.source())}, {"target", to_json(f.target())},
          {"images", images_json(f)}};
}

json to_json(const SimplicialSpace& b) {
  json j;
  j["kind"] = "simplicial_space";
  j["ext_truncation"] = b.ext_truncation();
  json levels = json::array(), faces = json::array(), degens = json::array();
  for (int n = 0; n <= b.ext_truncation(); ++n) levels.push_back(to_json(b.level(n)));
  for (int n = 1; n <= b.ext_truncation(); ++n) {
    json row = json::array();
    for (int i = 0; i <= n; ++i) row.push_back(images_json(b.face(n, i)));
    faces.push_back(std::move(row));
  }
  for (int n = 0; n < b.ext_truncation(); ++n) {
    json row = json::array();
    for (int i = 0; i <= n; ++i) row.push_back(images_json(b.degeneracy(n, i)));
    degens.push_back(std::move(row));
  }
  j["levels"] = std::move(levels);
  j["ext_faces"] = std::move(faces);
  j["ext_degen"] = std::move(degens);
  return j;
}

json to_json(const SpaceMap& f) {
  json levels = json::array();
  for (int n = 0; n <= f.ext_truncation(); ++n) levels.push_back(images_json(f.level(n)));
  return {{"kind", "space_map"}, {"source", to_json(f.source())}, {"target", to_json(f.target())},
          {"levels", std::move(levels)}};
}

json to_json(const FiniteGroup& g) {
  return {{"kind", "finite_group"}, {"elements", g.names()}, {"table", g.table()}};
}

json to_json(const SimplicialGroup& g) {
  if (g.discrete()) return to_json(*g.discrete());
  json j;
  j["kind"] = "simplicial_group";
  json levels = json::array(), faces = json::array(), degens = json::array();
  for (int n = 0; n <= g.truncation(); ++n) levels.push_back(to_json(g.level(n)));
  for (int n = 1; n <= g.truncation(); ++n) {
    json row = json::array();
    for (int i = 0; i <= n; ++i) {
      std::vector<int> m(g.level(n).order());
      for (int h = 0; h < g.level(n).order(); ++h) m[h] = g.face(n, i, h);
      row.push_back(m);
    }
    faces.push_back(std::move(row));
  }
  for (int n = 0; n < g.truncation(); ++n) {
    json row = json::array();
    for (int i = 0; i <= n; ++i) {
      std::vector<int> m(g.level(n).order());
      for (int h = 0; h < g.level(n).order(); ++h) m[h] = g.degeneracy(n, i, h);
      row.push_back(m);
    }
    degens.push_back(std::move(row));
  }
  j["levels"] = std::move(levels);
  j["faces"] = std::move(faces);
  j["degens"] = std::move(degens);
  return j;
}

json to_json(const GSpace& x) {
  json j;
  j["kind"] = "gspace";
  j["space"] = to_json(x.space());
  j["group"] = to_json(x.group());
  json action = json::array();
  for (int n = 0; n <= x.truncation(); ++n) {
    json lv = json::object();
    for (std::size_t s = 0; s < x.space().size(n); ++s) {
      json row = json::array();
      for (int h = 0; h < x.group().level(n).order(); ++h)
        row.push_back(x.space().simplex_name(n, x.act(n, static_cast<int>(s), h)));
      lv[x.space().simplex_name(n, static_cast<int>(s))] = std::move(row);
    }
    action.push_back(std::move(lv));
  }
  j["action"] = std::move(action);
  return j;
}

SimplicialSet simplicial_set_from_json(const json& j) {
  const std::string w = "simplicial_set";
  check_kind(j, "simplicial_set", w);
  SimplicialSet::Presentation p;
  p.truncation = as_int(field(j, "truncation", w), w + ".truncation");
  const json& gens = as_array(field(j, "generators", w), w + ".generators");
  for (std::size_t d = 0; d < gens.size(); ++d) {
    std::vector<std::string> row;
    for (const auto& n : as_array(gens[d], w + ".generators[" + std::to_string(d) + "]"))
      row.push_back(as_string(n, w + ".generators"));
    p.names.push_back(std::move(row));
  }
  const json empty = json::object();
  const json& faces = j.contains("faces") ? j["faces"] : empty;
  if (!faces.is_object()) throw ParseError(w + ".faces: expected an object");
  std::vector<std::string> errors;
  p.faces.resize(p.names.size());
  for (std::size_t d = 1; d < p.names.size(); ++d)
    for (const auto& name : p.names[d]) {
      std::vector<SimplexRef> fs;
      auto it = faces.find(name);
      if (it == faces.end()) {
        errors.push_back("generator '" + name + "' has no faces listed");
      } else {
        const json& arr = as_array(*it, w + ".faces." + name);
        for (std::size_t i = 0; i < arr.size(); ++i) {
          try {
            fs.push_back(ref_from_json(arr[i], &p, nullptr, "d" + std::to_string(i) + "(" + name + ")"));
          } catch (const InvalidObject& e) {
            errors.insert(errors.end(), e.violations().begin(), e.violations().end());
            fs.push_back(SimplexRef{{}, {-1, -1}});
          }
        }
      }
      p.faces[d].push_back(std::move(fs));
    }
  for (const auto& [k, v] : faces.items()) {
    bool known = false;
    for (std::size_t d = 1; d < p.names.size() && !known; ++d)
      for (const auto& n : p.names[d]) known = known || n == k;
    if (!known) errors.push_back("faces listed for unknown generator '" + k + "'");
  }
  if (!errors.empty()) throw InvalidObject(std::move(errors));
  return SimplicialSet::from_presentation(std::move(p));
}

SimplicialMap map_from_json_images(const json& images, const SimplicialSet& source, const SimplicialSet& target) {
  if (!images.is_object()) throw ParseError("images: expected an object");
  std::vector<std::string> errors;
  std::vector<std::vector<SimplexRef>> im(source.truncation() + 1);
  for (int d = 0; d <= source.truncation(); ++d)
    for (int g = 0; g < source.generator_count(d); ++g) {
      const std::string& name = source.generator_name({d, g});
      auto it = images.find(name);
      if (it == images.end()) {
        errors.push_back("no image given for '" + name + "'");
        im[d].push_back(SimplexRef{{}, {-1, -1}});
        continue;
      }
      try {
        im[d].push_back(ref_from_json(*it, nullptr, &target, "image of '" + name + "'"));
      } catch (const InvalidObject& e) {
        errors.insert(errors.end(), e.violations().begin(), e.violations().end());
        im[d].push_back(SimplexRef{{}, {-1, -1}});
      }
    }
  if (!errors.empty()) throw InvalidObject(std::move(errors));
  return SimplicialMap::from_images(source, target, std::move(im));
}

SimplicialMap simplicial_map_from_json(const json& j) {
  check_kind(j, "simplicial_map", "simplicial_map");
  SimplicialSet s = simplicial_set_from_json(field(j, "source", "simplicial_map"));
  SimplicialSet t = simplicial_set_from_json(field(j, "target", "simplicial_map"));
  return map_from_json_images(field(j, "images", "simplicial_map"), s, t);
}

SimplicialSpace simplicial_space_from_json(const json& j) {
  const std::string w = "simplicial_space";
  check_kind(j, "simplicial_space", w);
  const int M = as_int(field(j, "ext_truncation", w), w + ".ext_truncation");
  const json& lv = as_array(field(j, "levels", w), w + ".levels");
  if (M < 0 || static_cast<int>(lv.size()) != M + 1) throw ParseError(w + ": expected ext_truncation + 1 levels");
  std::vector<SimplicialSet> levels;
  for (const auto& l : lv) levels.push_back(simplicial_set_from_json(l));
  const json& fj = as_array(field(j, "ext_faces", w), w + ".ext_faces");
  const json& dj = as_array(field(j, "ext_degen", w), w + ".ext_degen");
  if (static_cast<int>(fj.size()) != M || static_cast<int>(dj.size()) != M)
    throw ParseError(w + ": expected ext_truncation rows of external faces and degeneracies");
  std::vector<std::string> errors;
  std::vector<std::vector<SimplicialMap>> faces(M + 1), degens(M + 1);
  auto read = [&](const json& im, int from, int to, const std::string& what) -> SimplicialMap {
    try {
      return map_from_json_images(im, levels[from], levels[to]);
    } catch (const InvalidObject& e) {
      for (const auto& v : e.violations()) errors.push_back(what + ": " + v);
      return SimplicialMap();
    }
  };
  for (int n = 1; n <= M; ++n) {
    const json& row = as_array(fj[n - 1], w + ".ext_faces");
    if (static_cast<int>(row.size()) != n + 1) throw ParseError(w + ".ext_faces: level " + std::to_string(n) + " needs " + std::to_string(n + 1) + " maps");
    for (int i = 0; i <= n; ++i) faces[n].push_back(read(row[i], n, n - 1, "d" + std::to_string(i) + " on level " + std::to_string(n)));
  }
  for (int n = 0; n < M; ++n) {
    const json& row = as_array(dj[n], w + ".ext_degen");
    if (static_cast<int>(row.size()) != n + 1) throw ParseError(w + ".ext_degen: level " + std::to_string(n) + " needs " + std::to_string(n + 1) + " maps");
    for (int i = 0; i <= n; ++i) degens[n].push_back(read(row[i], n, n + 1, "s" + std::to_string(i) + " on level " + std::to_string(n)));
  }
  if (!errors.empty()) throw InvalidObject(std::move(errors));
  return SimplicialSpace::make(std::move(levels), std::move(faces), std::move(degens));
}

SpaceMap space_map_from_json(const json& j) {
  const std::string w = "space_map";
  check_kind(j, "space_map", w);
  SimplicialSpace s = simplicial_space_from_json(field(j, "source", w));
  SimplicialSpace t = simplicial_space_from_json(field(j, "target", w));
  const json& lv = as_array(field(j, "levels", w), w + ".levels");
  if (static_cast<int>(lv.size()) != s.ext_truncation() + 1) throw ParseError(w + ": one map per source level expected");
  if (t.ext_truncation() < s.ext_truncation()) throw ParseError(w + ": target has fewer levels than source");
  std::vector<SimplicialMap> maps;
  for (int n = 0; n <= s.ext_truncation(); ++n) maps.push_back(map_from_json_images(lv[n], s.level(n), t.level(n)));
  return SpaceMap::make(std::move(s), std::move(t), std::move(maps));
}

FiniteGroup finite_group_from_json(const json& j) {
  const std::string w = "finite_group";
  check_kind(j, "finite_group", w);
  std::vector<std::string> names;
  for (const auto& n : as_array(field(j, "elements", w), w + ".elements")) names.push_back(as_string(n, w + ".elements"));
  std::vector<std::vector<int>> table;
  for (const auto& row : as_array(field(j, "table", w), w + ".table")) {
    std::vector<int> r;
    for (const auto& v : as_array(row, w + ".table")) {
      if (v.is_string()) {
        auto it = std::find(names.begin(), names.end(), v.get<std::string>());
        if (it == names.end()) throw InvalidObject({"table entry '" + v.get<std::string>() + "' is not an element"});
        r.push_back(static_cast<int>(it - names.begin()));
      } else {
        r.push_back(as_int(v, w + ".table"));
      }
    }
    table.push_back(std::move(r));
  }
  return FiniteGroup::from_table(std::move(names), std::move(table));
}

SimplicialGroup simplicial_group_from_json(const json& j, int truncation) {
  if (j.is_object() && j.contains("elements")) return SimplicialGroup::constant(finite_group_from_json(j), truncation);
  const std::string w = "simplicial_group";
  check_kind(j, "simplicial_group", w);
  std::vector<FiniteGroup> levels;
  for (const auto& l : as_array(field(j, "levels", w), w + ".levels")) levels.push_back(finite_group_from_json(l));
  auto maps = [&](const char* key) {
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& row : as_array(field(j, key, w), w + "." + key)) {
      std::vector<std::vector<int>> r;
      for (const auto& m : as_array(row, w + "." + key)) {
        std::vector<int> v;
        for (const auto& x : as_array(m, w + "." + key)) v.push_back(as_int(x, w + "." + key));
        r.push_back(std::move(v));
      }
      out.push_back(std::move(r));
    }
    return out;
  };
  auto faces = maps("faces");
  faces.insert(faces.begin(), std::vector<std::vector<int>>{});
  return SimplicialGroup::make(std::move(levels), std::move(faces), maps("degens"));
}

GSpace gspace_from_json(const json& j) {
  const std::string w = "gspace";
  check_kind(j, "gspace", w);
  SimplicialSet x = simplicial_set_from_json(field(j, "space", w));
  SimplicialGroup g = simplicial_group_from_json(field(j, "group", w), x.truncation());
  const json& aj = as_array(field(j, "action", w), w + ".action");
  if (static_cast<int>(aj.size()) != x.truncation() + 1) throw ParseError(w + ".action: one table per level expected");
  std::vector<std::string> errors;
  std::vector<std::vector<std::vector<int>>> action(x.truncation() + 1);
  for (int n = 0; n <= x.truncation() && n <= g.truncation(); ++n) {
    auto names = simplex_names(x, n);
    const json& lv = aj[n];
    if (!lv.is_object()) throw ParseError(w + ".action[" + std::to_string(n) + "]: expected an object");
    action[n].assign(x.size(n), std::vector<int>(g.level(n).order(), 0));
    for (std::size_t s = 0; s < x.size(n); ++s) {
      const std::string sn = x.simplex_name(n, static_cast<int>(s));
      auto it = lv.find(sn);
      if (it == lv.end() || !it->is_array() || static_cast<int>(it->size()) != g.level(n).order()) {
        errors.push_back("level " + std::to_string(n) + ": action on '" + sn + "' missing or of the wrong length");
        continue;
      }
      for (int h = 0; h < g.level(n).order(); ++h) {
        const json& v = (*it)[h];
        auto t = v.is_string() ? names.find(v.get<std::string>()) : names.end();
        if (t == names.end()) {
          errors.push_back("level " + std::to_string(n) + ": '" + sn + "' acted on by " + g.level(n).name(h) +
                           " gives " + v.dump() + ", which is not a simplex");
          continue;
        }
        action[n][s][h] = t->second;
      }
    }
  }
  if (!errors.empty()) throw InvalidObject(std::move(errors));
  return GSpace::make(std::move(x), std::move(g), std::move(action));
}

AnyObject object_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  std::string kind = j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  if (kind.empty()) {
    if (j.contains("elements")) kind = "finite_group";
    else if (j.contains("action")) kind = "gspace";
    else if (j.contains("ext_truncation")) kind = "simplicial_space";
    else if (j.contains("images")) kind = "simplicial_map";
    else if (j.contains("levels")) kind = "space_map";
    else kind = "simplicial_set";
  }
  if (kind == "simplicial_set") return simplicial_set_from_json(j);
  if (kind == "simplicial_map") return simplicial_map_from_json(j);
  if (kind == "simplicial_space") return simplicial_space_from_json(j);
  if (kind == "space_map") return space_map_from_json(j);
  if (kind == "finite_group") return finite_group_from_json(j);
  if (kind == "gspace") return gspace_from_json(j);
  throw ParseError("unknown object kind '" + kind + "'");
}

std::string kind_of(const AnyObject& o) {
  static const char* names[] = {"simplicial_set", "simplicial_map", "simplicial_space", "space_map", "finite_group", "gspace"};
  return names[o.index()];
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": malformed JSON: " + e.what());
  }
}

AnyObject read_object_file(const std::string& path) { return object_from_json(read_json_file(path)); }

}  // namespace segal
