// Finitely presented categories and groupoids, materialized by coset
// enumeration; the fundamental groupoid of a simplicial set; colimits of
// finite diagrams of categories.
#ifndef SIMPCAT_CAT_PRESENTED_HPP_
#define SIMPCAT_CAT_PRESENTED_HPP_

#include <functional>
#include <string>
#include <vector>

#include "simpcat/cat/category.hpp"
#include "simpcat/sset/simplicial_set.hpp"

namespace simpcat {

// Letters: g >= 0 is generator g, -(g + 1) its formal inverse (groupoids only).
// Words are read in path order: {f, g} denotes g o f.
struct Presentation {
  struct Relation {
    int source = 0;  // start object; needed when both sides are empty
    std::vector<int> lhs;
    std::vector<int> rhs;
  };

  int objects = 0;
  std::vector<int> gen_source;
  std::vector<int> gen_target;
  std::vector<Relation> relations;

  int generator_count() const { return static_cast<int>(gen_source.size()); }
  int add_generator(int source, int target);
  void relate(int source, std::vector<int> lhs, std::vector<int> rhs);
  // Endpoint of the word read from `start`; throws InputError when not a path.
  int trace_objects(int start, const std::vector<int>& word, bool allow_inverse) const;
};

struct MaterializedCategory {
  Category category;
  std::vector<int> generator_morphism;      // per generator
  std::vector<std::vector<int>> words;      // shortlex representative per morphism

  // The morphism named by a word starting at `source`.
  int evaluate(int source, const std::vector<int>& word) const;
};

// Free category on the generators modulo the relations. Throws BoundExceeded
// when more than `bound` morphisms appear (or the enumeration outgrows that).
MaterializedCategory materialize_category(const Presentation& p, int bound);
// Free groupoid on the generators modulo the relations, computed through a
// spanning forest and one vertex group per component.
MaterializedCategory materialize_groupoid(const Presentation& p, int bound);

// Generators: nondegenerate edges; one relation d_2 t . d_0 t = d_1 t per
// nondegenerate 2-simplex t (degenerate edges read as identities).
Presentation edge_presentation(const SimplicialSet& x);
// Word of a 1-simplex in edge_presentation(x): one letter, or empty if degenerate.
std::vector<int> edge_word(const SimplicialSet& x, int edge);

// π(X); objects are the vertices of X.
MaterializedCategory fundamental_groupoid(const SimplicialSet& x, int bound = 4096);
// π(f): π(X) -> π(Y) for groupoids built by fundamental_groupoid.
FunctorMap fundamental_groupoid_map(const SimplicialMap& f, const MaterializedCategory& source,
                                    const MaterializedCategory& target);

struct CatDiagram {
  struct Arrow {
    int from = 0;
    int to = 0;
    FunctorMap map;
  };
  std::vector<CategoryPtr> objects;
  std::vector<Arrow> arrows;
};

struct CatCocone {
  Category apex;
  std::vector<FunctorMap> legs;
  // A (diagram object, object) mapping to each apex object, and for each apex
  // morphism a word of (diagram object, morphism) pairs composing to it.
  std::vector<std::pair<int, int>> object_origin;
  std::vector<std::vector<std::pair<int, int>>> words;
};

// The functor out of the apex induced by a compatible family of functors on
// the diagram objects, given by their object and morphism assignments.
FunctorMap cocone_factor(const CatCocone& c, const Category& target,
                         const std::function<int(int k, int x)>& object,
                         const std::function<int(int k, int f)>& morphism);

CatCocone colimit_cat(const CatDiagram& d, int bound = 100000);
// B <- A -> C; legs are (b, c), while origins and words index the diagram (a, b, c).
CatCocone pushout_cat(CategoryPtr a, CategoryPtr b, CategoryPtr c, const FunctorMap& f,
                      const FunctorMap& g, int bound = 100000);

}  // namespace simpcat

#endif  // SIMPCAT_CAT_PRESENTED_HPP_
