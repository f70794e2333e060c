// Truncated simplicial categories: a finite category per level with face and
// degeneracy functors, optionally pointed by a stable basepoint object.
#ifndef SIMPCAT_SCAT_SIMPLICIAL_CATEGORY_HPP_
#define SIMPCAT_SCAT_SIMPLICIAL_CATEGORY_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "simpcat/cat/category.hpp"
#include "simpcat/sset/simplicial_set.hpp"

namespace simpcat {

class SimplicialCategory {
 public:
  SimplicialCategory() = default;

  // faces[n][i]: C_n -> C_{n-1} for 1 <= n <= bound; degeneracies[n][j]:
  // C_n -> C_{n+1} for n < bound. basepoint, when given, lists one object per
  // level. Table shapes are validated here; functor laws, simplicial
  // identities and basepoint stability by audit().
  static SimplicialCategory build(std::vector<CategoryPtr> levels,
                                  std::vector<std::vector<FunctorMap>> faces,
                                  std::vector<std::vector<FunctorMap>> degeneracies,
                                  std::optional<std::vector<int>> basepoint = {});
  // The constant simplicial category at c.
  static SimplicialCategory constant(CategoryPtr c, int bound, std::optional<int> basepoint = {});

  int bound() const { return static_cast<int>(levels_.size()) - 1; }
  const Category& level(int n) const { return *levels_.at(n); }
  CategoryPtr level_ptr(int n) const { return levels_.at(n); }
  const FunctorMap& face(int n, int i) const { return faces_[n][i]; }
  const FunctorMap& degeneracy(int n, int j) const { return degens_[n][j]; }

  bool pointed() const { return !basepoint_.empty(); }
  int basepoint(int n) const { return basepoint_.at(n); }
  const std::vector<int>& basepoints() const { return basepoint_; }
  // Points at the given level-0 object, propagated by s_0; nullopt forgets it.
  SimplicialCategory with_basepoint(std::optional<int> object) const;
  // Levels 0..bound only.
  SimplicialCategory truncate(int bound) const;

  std::vector<std::string> audit(std::size_t limit = 16) const;

  friend bool operator==(const SimplicialCategory& a, const SimplicialCategory& b);

 private:
  std::vector<CategoryPtr> levels_;
  std::vector<std::vector<FunctorMap>> faces_;
  std::vector<std::vector<FunctorMap>> degens_;
  std::vector<int> basepoint_;
};

using SCatPtr = std::shared_ptr<const SimplicialCategory>;

inline SCatPtr share(SimplicialCategory c) {
  return std::make_shared<const SimplicialCategory>(std::move(c));
}

// Levelwise functors commuting with faces and degeneracies.
struct SimplicialFunctor {
  SCatPtr source;
  SCatPtr target;
  std::vector<FunctorMap> levels;

  // Functor laws per level, commutation squares, and basepoints when both ends are pointed.
  std::vector<std::string> audit(std::size_t limit = 16) const;

  static SimplicialFunctor identity(SCatPtr c);
  static SimplicialFunctor compose(const SimplicialFunctor& g, const SimplicialFunctor& f);
};

// The constant terminal simplicial category, pointed.
SimplicialCategory terminal_scat(int bound);
// The constant discrete category on two objects, pointed at object 0.
SimplicialCategory s0_scat(int bound);
// Level n is the discrete category on X_n; pointed when X is.
SimplicialCategory discrete_scat(const SimplicialSet& x);
// Levelwise product; object (a, b) is a * |B_n| + b as in product_category.
SimplicialCategory product_scat(const SimplicialCategory& a, const SimplicialCategory& b);
// Levelwise product of two simplicial functors.
SimplicialFunctor product_functor(const SimplicialFunctor& f, const SimplicialFunctor& g, SCatPtr source,
                                  SCatPtr target);
// The unique simplicial functor to the terminal simplicial category.
SimplicialFunctor to_terminal(SCatPtr c, SCatPtr terminal);
// The simplicial functor from the terminal simplicial category picking c's basepoint.
SimplicialFunctor basepoint_functor(SCatPtr terminal, SCatPtr c);
// f x g: A x B -> A' x B', numbered as in product_category; b2 is B'.
FunctorMap product_map(const FunctorMap& f, const FunctorMap& g, const Category& a, const Category& b,
                       const Category& b2);

struct SFunctorSearch {
  bool pointed = false;  // basepoint to basepoint
  std::uint64_t cap = 1000000;
  // Extra filter on object images: object_ok(level, x, y).
  std::function<bool(int n, int x, int y)> object_ok;
};
// Every simplicial functor A -> B over levels 0..A.bound() (B's bound must be
// at least A's). Level n is searched with its images under faces and
// degeneracies already fixed by level n - 1. Throws BoundExceeded past `cap`
// candidate assignments.
std::uint64_t for_each_simplicial_functor(const SimplicialCategory& a, const SimplicialCategory& b,
                                          const SFunctorSearch& options,
                                          const std::function<void(const std::vector<FunctorMap>&)>& visit);
std::uint64_t count_simplicial_functors(const SimplicialCategory& a, const SimplicialCategory& b,
                                        const SFunctorSearch& options = {});

// Bijective on objects and on morphisms at every level.
bool levelwise_bijective(const SimplicialFunctor& f);
// Some levelwise bijective simplicial functor a -> b exists (pointed when both
// are). Throws BoundExceeded past `cap` candidate assignments.
bool isomorphic(const SimplicialCategory& a, const SimplicialCategory& b, std::uint64_t cap = 1000000);

}  // namespace simpcat

#endif  // SIMPCAT_SCAT_SIMPLICIAL_CATEGORY_HPP_
