// Enumeration of simplicial maps K -> X by backtracking over generator images.
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "segal/sset.hpp"

namespace segal {

/// Images of all generators of K (flat generator order) as dense simplices of X.
using GeneratorImages = std::vector<int>;

/// Calls visit once per map, in a fixed deterministic order; visit returns false to stop.
/// `fixed[k] >= 0` pins the image of flat generator k.
void for_each_hom(const SimplicialSet& k, const SimplicialSet& x,
                  const std::function<bool(const GeneratorImages&)>& visit, const std::vector<int>& fixed = {});

std::vector<GeneratorImages> hom_images(const SimplicialSet& k, const SimplicialSet& x, const Budget& budget = {});
std::size_t hom_count(const SimplicialSet& k, const SimplicialSet& x);
std::vector<SimplicialMap> hom_set(const SimplicialSet& k, const SimplicialSet& x, const Budget& budget = {});

/// Dense image of a simplex of K (given in normal form) under the map with these generator images.
int image_of(const SimplicialSet& k, const SimplicialSet& x, const GeneratorImages& img, const SimplexRef& r);

/// Materializes a map; K's truncation is kept if X allows it, otherwise K is read at X's truncation.
SimplicialMap map_from_images(const SimplicialSet& k, const SimplicialSet& x, const GeneratorImages& img);

}  // namespace segal
