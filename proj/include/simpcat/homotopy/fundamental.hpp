// Path components, edge-path presentations of the fundamental group, and
// abelianization of presented groups.
#ifndef SIMPCAT_HOMOTOPY_FUNDAMENTAL_HPP_
#define SIMPCAT_HOMOTOPY_FUNDAMENTAL_HPP_

#include <string>
#include <vector>

#include "simpcat/homotopy/homology.hpp"
#include "simpcat/sset/simplicial_set.hpp"

namespace simpcat {

// Component label of every vertex; labels numbered by least vertex.
struct Components {
  std::vector<int> label;
  int count = 0;
};
Components pi0(const SimplicialSet& x);

// The sub-simplicial set of simplices whose vertices lie in the component of v.
SimplicialSet component(const SimplicialSet& x, int v);

// Letters are ±(g + 1) for generator g; negative means inverse.
struct PresentedGroup {
  int generators = 0;
  std::vector<std::vector<int>> relators;
  std::vector<std::string> names;

  std::string to_string() const;  // "<a, b | a b a^-1 b^-1>"
};

// Spanning-tree presentation: generators are the nondegenerate edges of v's
// component off a BFS tree; one relator per nondegenerate 2-simplex t, reading
// d_2 t, then d_0 t, then the inverse of d_1 t.
PresentedGroup edge_path_group(const SimplicialSet& x, int v);

AbelianGroupDescriptor abelianization(const PresentedGroup& g);

}  // namespace simpcat

#endif  // SIMPCAT_HOMOTOPY_FUNDAMENTAL_HPP_
