// Colimits of finite diagrams of simplicial categories, computed level by
// level, and levelwise equalizers.
#ifndef SIMPCAT_SCAT_COLIMITS_HPP_
#define SIMPCAT_SCAT_COLIMITS_HPP_

#include <optional>
#include <vector>

#include "simpcat/cat/presented.hpp"
#include "simpcat/scat/simplicial_category.hpp"

namespace simpcat {

struct SCatDiagram {
  struct Arrow {
    int from = 0;
    int to = 0;
    SimplicialFunctor map;
  };
  std::vector<SCatPtr> objects;
  std::vector<Arrow> arrows;
};

struct SCatCocone {
  SCatPtr apex;
  std::vector<SimplicialFunctor> legs;  // one per diagram object
  std::vector<CatCocone> levels;        // the level-n colimit, with origins and words
};

// All diagram objects must share one bound. `basepoint_from` names the diagram
// object whose basepoint, pushed along its leg, points the apex.
SCatCocone colimit_scat(const SCatDiagram& d, int bound = 100000, std::optional<int> basepoint_from = {});
// B <- A -> C; legs index the diagram (a, b, c).
SCatCocone pushout_scat(const SimplicialFunctor& f, const SimplicialFunctor& g, int bound = 100000,
                        std::optional<int> basepoint_from = {});

struct SCatEqualizer {
  SCatPtr object;
  SimplicialFunctor inclusion;
};
// Levelwise subcategory of the common source on which F and G agree.
SCatEqualizer equalizer_scat(const SimplicialFunctor& f, const SimplicialFunctor& g);

}  // namespace simpcat

#endif  // SIMPCAT_SCAT_COLIMITS_HPP_
