// Finite categories with explicit composition tables, and functors between them.
#ifndef SIMPCAT_CAT_CATEGORY_HPP_
#define SIMPCAT_CAT_CATEGORY_HPP_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "simpcat/common.hpp"

namespace simpcat {

class Category {
 public:
  Category() = default;

  // Morphism f runs source[f] -> target[f]; identity[a] is a morphism a -> a;
  // compose(g, f) is g o f and is only called on composable pairs. Table
  // shape and composite endpoints are validated here; the category axioms
  // are checked by validate().
  static Category build(int objects, std::vector<int> source, std::vector<int> target,
                        std::vector<int> identity, const std::function<int(int g, int f)>& compose);

  int object_count() const { return objects_; }
  int morphism_count() const { return static_cast<int>(source_.size()); }
  int source(int f) const { return source_[f]; }
  int target(int f) const { return target_[f]; }
  int identity(int a) const { return identity_[a]; }
  bool is_identity(int f) const { return identity_[source_[f]] == f; }
  // g o f; requires target(f) == source(g).
  int compose(int g, int f) const { return comp_[f][pos_in_out_[g]]; }
  // Morphisms out of a, ordered by id.
  const std::vector<int>& out(int a) const { return out_[a]; }
  std::vector<int> hom(int a, int b) const;

  // Violated identity, composite-endpoint and associativity instances.
  std::vector<std::string> validate(std::size_t limit = 16) const;
  // Two-sided inverse of f, or -1.
  int inverse(int f) const;
  bool is_groupoid() const;

  friend bool operator==(const Category& a, const Category& b) {
    return a.objects_ == b.objects_ && a.source_ == b.source_ && a.target_ == b.target_ &&
           a.identity_ == b.identity_ && a.comp_ == b.comp_;
  }

 private:
  int objects_ = 0;
  std::vector<int> source_, target_, identity_;
  std::vector<std::vector<int>> out_;
  std::vector<int> pos_in_out_;
  std::vector<std::vector<int>> comp_;  // comp_[f][pos_in_out_[g]] = g o f
};

using CategoryPtr = std::shared_ptr<const Category>;

inline CategoryPtr share(Category c) { return std::make_shared<const Category>(std::move(c)); }

// Standard small categories.
Category discrete_category(int objects);
Category terminal_category();
// One morphism between every ordered pair; morphism a*n + b runs a -> b.
Category chaotic_category(int objects);
// One-object category of the cyclic group of the given order; morphism k is t^k.
Category cyclic_group(int order);
// The poset 0 < 1 < ... < n as a category; morphism (i, j) for i <= j.
Category ordinal_category(int n);
// Disjoint union.
Category coproduct_category(const std::vector<CategoryPtr>& parts);
// Product; object (a, b) is a * |B| + b, morphism (f, g) is f * |Mor B| + g.
Category product_category(const Category& a, const Category& b);

struct FunctorMap {
  std::vector<int> objects;
  std::vector<int> morphisms;
  friend bool operator==(const FunctorMap&, const FunctorMap&) = default;
  friend auto operator<=>(const FunctorMap&, const FunctorMap&) = default;
};

struct Functor {
  CategoryPtr source;
  CategoryPtr target;
  FunctorMap map;

  int object(int a) const { return map.objects[a]; }
  int morphism(int f) const { return map.morphisms[f]; }
  // Identities, endpoints and composites preserved.
  std::vector<std::string> audit(std::size_t limit = 16) const;

  static Functor identity(CategoryPtr c);
  // g o f
  static Functor compose(const Functor& g, const Functor& f);
};

FunctorMap compose_maps(const FunctorMap& g, const FunctorMap& f);
FunctorMap identity_map(const Category& c);
std::vector<std::string> audit_functor(const Category& source, const Category& target,
                                       const FunctorMap& map, std::size_t limit = 16);

// A subcategory given by object and morphism subsets, renumbered in id order;
// `objects` and `morphisms` list the original ids.
struct Subcategory {
  Category category;
  std::vector<int> objects;
  std::vector<int> morphisms;

  FunctorMap inclusion() const { return {objects, morphisms}; }
};
Subcategory subcategory(const Category& c, const std::vector<bool>& keep_objects,
                        const std::vector<bool>& keep_morphisms);

}  // namespace simpcat

#endif  // SIMPCAT_CAT_CATEGORY_HPP_
