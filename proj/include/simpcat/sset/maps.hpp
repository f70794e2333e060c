// Enumeration of simplicial maps by backtracking over nondegenerate simplices.
#ifndef SIMPCAT_SSET_MAPS_HPP_
#define SIMPCAT_SSET_MAPS_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "simpcat/sset/simplicial_set.hpp"

namespace simpcat {

struct MapSearchOptions {
  bool pointed = false;
  // Stop with BoundExceeded after this many maps (0 = unlimited).
  std::uint64_t cap = 0;
  // forced[n][x] >= 0 pins the image of nondegenerate x in degree n.
  std::vector<std::vector<int>> forced;
};

// Calls visit(image) for every simplicial map X -> Y (image[n][x] for n up to
// X's bound). Returns the number of maps visited. Y's bound must be at least X's.
std::uint64_t for_each_map(const SimplicialSet& x, const SimplicialSet& y,
                           const MapSearchOptions& options,
                           const std::function<void(const std::vector<std::vector<int>>&)>& visit);

std::vector<SimplicialMap> enumerate_maps(SSetPtr x, SSetPtr y, bool pointed = false,
                                          std::uint64_t cap = 0);
std::uint64_t count_maps(const SimplicialSet& x, const SimplicialSet& y, bool pointed = false);

}  // namespace simpcat

#endif  // SIMPCAT_SSET_MAPS_HPP_
