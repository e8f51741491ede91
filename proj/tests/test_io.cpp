#include <doctest.h>

#include <fstream>

#include "segal/constructions.hpp"
#include "segal/homology.hpp"
#include "segal/io.hpp"

using namespace segal;

namespace {

std::vector<std::string> violations(const json& j) {
  try {
    object_from_json(j);
  } catch (const InvalidObject& e) {
    return e.violations();
  }
  return {};
}

bool mentions(const std::vector<std::string>& v, const std::string& s) {
  for (const auto& x : v)
    if (x.find(s) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("a well-formed circle file") {
  json j = json::parse(R"({"truncation": 3, "generators": [["v"], ["e"]],
                           "faces": {"e": [{"s": [], "g": "v"}, "v"]}})");
  SimplicialSet c = simplicial_set_from_json(j);
  CHECK(c.generator_count(0) == 1);
  CHECK(c.generator_count(1) == 1);
  CHECK(c.total_generators() == 2);
  CHECK(homology(c).to_string(1) == "Z; Z");
  CHECK(c == circle(3));
}

TEST_CASE("invalid simplicial sets list every violation") {
  // d0 d0 != d0 d1 on t, plus an unknown face reference on f.
  json j = json::parse(R"({"truncation": 2, "generators": [["a", "b"], ["e", "f"], ["t"]],
                           "faces": {"e": ["b", "a"], "f": ["a", "zz"], "t": ["e", "e", "e"]}})");
  auto v = violations(j);
  CHECK(mentions(v, "zz"));
  json k = json::parse(R"({"truncation": 2, "generators": [["a", "b"], ["e"], ["t"]],
                           "faces": {"e": ["b", "a"], "t": ["e", "e", "e"]}})");
  auto w = violations(k);
  CHECK(mentions(w, "'t'"));
  CHECK_THROWS_AS(object_from_json(json::parse(R"({"truncation": "x"})")), ParseError);
}

TEST_CASE("invalid groups are rejected") {
  auto v = violations(json::parse(R"({"elements": ["e", "x", "y"], "table": [[0,1,2],[1,0,0],[2,0,1]]})"));
  CHECK(!v.empty());
  CHECK(violations(json::parse(R"({"elements": ["e", "x"], "table": [["e","x"],["x","e"]]})")).empty());
}

TEST_CASE("objects survive a round trip through JSON") {
  SimplicialGroup z2 = SimplicialGroup::constant(FiniteGroup::cyclic(2), 2);
  SimplicialSet t = product(circle(3), circle(3)).set();
  CHECK(simplicial_set_from_json(json::parse(to_json(t).dump())) == t);
  SimplicialSpace bar = bar_group(z2, 2, 2);
  SimplicialSpace b2 = simplicial_space_from_json(json::parse(to_json(bar).dump()));
  for (int n = 0; n <= 2; ++n) {
    CHECK(b2.level(n) == bar.level(n));
    for (int i = 0; n > 0 && i <= n; ++i) CHECK(b2.face(n, i) == bar.face(n, i));
  }
  GSpace x = GSpace::two_translations(z2, 2);
  GSpace x2 = gspace_from_json(to_json(x));
  CHECK(x2.action() == x.action());
  CHECK(x2.space() == x.space());
  SpaceMap pi = bar_action(x, 2);
  SpaceMap p2 = space_map_from_json(to_json(pi));
  for (int n = 0; n <= 2; ++n) CHECK(p2.level(n) == pi.level(n));
  SimplicialMap f = to_point(t);
  CHECK(simplicial_map_from_json(to_json(f)) == f);
  AnyObject o = object_from_json(to_json(FiniteGroup::symmetric(3)));
  CHECK(kind_of(o) == "finite_group");
  CHECK(std::get<FiniteGroup>(o) == FiniteGroup::symmetric(3));
  // Serialization is deterministic.
  CHECK(to_json(x).dump() == to_json(gspace_from_json(to_json(x))).dump());
}

TEST_CASE("an invalid action is rejected") {
  SimplicialGroup z2 = SimplicialGroup::constant(FiniteGroup::cyclic(2), 1);
  json j = to_json(GSpace::translation(z2, 1));
  j["action"][0]["0"] = json::array({"1", "0"});  // not an action: e acts as a swap
  CHECK_THROWS_AS(gspace_from_json(j), InvalidObject);
  j["action"][0]["0"] = json::array({"0", "nope"});
  auto v = violations(j);
  CHECK(mentions(v, "nope"));
}

TEST_CASE("schemas list the keys the writers emit") {
  auto schema = [](const std::string& name) {
    std::ifstream in(std::string(SEGAL_SCHEMA_DIR) + "/" + name + ".json");
    REQUIRE(in);
    return json::parse(in);
  };
  SimplicialGroup z2 = SimplicialGroup::constant(FiniteGroup::cyclic(2), 2);
  GSpace x = GSpace::translation(z2, 2);
  SpaceMap pi = bar_action(x, 2);
  std::vector<std::pair<std::string, json>> cases = {
      {"simplicial_set", to_json(circle(2))},
      {"simplicial_map", to_json(to_point(circle(2)))},
      {"simplicial_space", to_json(pi.source())},
      {"space_map", to_json(pi)},
      {"finite_group", to_json(FiniteGroup::symmetric(3))},
      {"gspace", to_json(x)}};
  for (const auto& [name, j] : cases) {
    json s = schema(name);
    CHECK(s["version"] == kSchemaVersion);
    CHECK(s["properties"]["kind"]["const"] == name);
    for (const auto& key : s["required"]) CHECK_MESSAGE(j.contains(key.get<std::string>()), name, " lacks ", key);
    for (const auto& [key, _] : j.items()) CHECK_MESSAGE(s["properties"].contains(key), name, " has extra ", key);
  }
  CHECK(schema("report")["version"] == kSchemaVersion);
}
