// JSON reading and writing for the object kinds handled by the command-line tool.
#pragma once

#include <string>
#include <variant>

#include "segal/bisimplicial.hpp"
#include "segal/group.hpp"
#include "segal/gspace.hpp"
#include "segal/verdict.hpp"

namespace segal {

inline constexpr const char* kSchemaVersion = "1.0";

/// Malformed JSON or a document of the wrong shape. Invariant violations raise InvalidObject.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const SimplicialSet& x);
json to_json(const SimplicialMap& f);  // {"source", "target", "images"}
json to_json(const SimplicialSpace& b);
json to_json(const SpaceMap& f);
json to_json(const FiniteGroup& g);
json to_json(const SimplicialGroup& g);  // a FiniteGroup document when discrete
json to_json(const GSpace& x);

SimplicialSet simplicial_set_from_json(const json& j);
/// Images only; source and target supplied.
SimplicialMap map_from_json_images(const json& images, const SimplicialSet& source, const SimplicialSet& target);
SimplicialMap simplicial_map_from_json(const json& j);
SimplicialSpace simplicial_space_from_json(const json& j);
SpaceMap space_map_from_json(const json& j);
FiniteGroup finite_group_from_json(const json& j);
/// A FiniteGroup document is read as the constant simplicial group truncated at `truncation`.
SimplicialGroup simplicial_group_from_json(const json& j, int truncation);
GSpace gspace_from_json(const json& j);

using AnyObject = std::variant<SimplicialSet, SimplicialMap, SimplicialSpace, SpaceMap, FiniteGroup, GSpace>;
/// Dispatches on "kind", or on the keys present when "kind" is absent.
AnyObject object_from_json(const json& j);
std::string kind_of(const AnyObject& o);

json read_json_file(const std::string& path);
AnyObject read_object_file(const std::string& path);

}  // namespace segal
