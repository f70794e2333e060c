// Constructions on finite categories: maximal subgroupoid, nerve, equivalence
// test, functor categories and equalizers.
#ifndef SIMPCAT_CAT_OPERATIONS_HPP_
#define SIMPCAT_CAT_OPERATIONS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "simpcat/cat/category.hpp"
#include "simpcat/sset/simplicial_set.hpp"

namespace simpcat {

// Wide subcategory of invertible morphisms.
Subcategory iso_subgroupoid(const Category& c);

// Composable chains of a category up to a length, numbered lexicographically.
class NerveChains {
 public:
  NerveChains(const Category& c, int bound);

  int bound() const { return static_cast<int>(chains_.size()) - 1; }
  int size(int k) const { return static_cast<int>(chains_[k].size()); }
  const std::vector<int>& chain(int k, int id) const { return chains_[k][id]; }
  // Throws InputError for a sequence that is not a k-chain.
  int lookup(int k, const std::vector<int>& chain) const;
  std::vector<int> face(int k, int i, const std::vector<int>& chain) const;
  std::vector<int> degeneracy(int k, int j, const std::vector<int>& chain) const;
  // Image of a chain under a functor.
  static std::vector<int> map_chain(int k, const std::vector<int>& chain, const FunctorMap& f);

 private:
  const Category* c_;
  std::vector<std::vector<std::vector<int>>> chains_;
  std::vector<std::map<std::vector<int>, int>> index_;
};

// N_k = composable k-chains (f_1, ..., f_k), f_{i+1} after f_i; N_0 = objects.
// Chains are numbered lexicographically. Pointed at `basepoint` when given.
SimplicialSet nerve(const Category& c, int bound, std::optional<int> basepoint = {});
// The k-chain with the given id, as morphism ids (k = 0 gives {object}).
std::vector<int> nerve_chain(const Category& c, int k, int id);
// N(F) between nerves built with the same bound.
SimplicialMap nerve_map(const Functor& f, SSetPtr source_nerve, SSetPtr target_nerve);
// N(iso C).
SimplicialSet nerve_iso(const Category& c, int bound, std::optional<int> basepoint = {});

struct EquivalenceVerdict {
  bool fully_faithful = false;
  bool essentially_surjective = false;
  std::string witness;  // first failure found
  bool equivalence() const { return fully_faithful && essentially_surjective; }
};
EquivalenceVerdict check_equivalence(const Functor& f);

struct FunctorCategory {
  Category category;
  std::vector<FunctorMap> functors;           // object k of `category`
  std::vector<std::vector<int>> components;   // morphism m: component per source object
};
// Objects: all functors C -> D. Morphisms: all natural transformations.
// Throws BoundExceeded after `cap` candidate assignments.
FunctorCategory functor_category(const Category& c, const Category& d, std::uint64_t cap = 1000000);
struct FunctorSearch {
  // Stop with BoundExceeded after this many candidate assignments (0 = unlimited).
  std::uint64_t cap = 1000000;
  // Shared assignment counter, so nested searches can share one cap.
  std::uint64_t* counter = nullptr;
  // Optional filters on object and morphism images.
  std::function<bool(int a, int x)> object_ok;
  std::function<bool(int f, int m)> morphism_ok;
};
// Calls visit for every functor C -> D passing the filters; returns the count.
std::uint64_t for_each_functor(const Category& c, const Category& d, const FunctorSearch& search,
                               const std::function<void(const FunctorMap&)>& visit);
// Every functor C -> D, respecting optional pinned object images (-1 = free).
std::vector<FunctorMap> enumerate_functors(const Category& c, const Category& d,
                                           std::uint64_t cap = 1000000,
                                           const std::vector<int>& pinned_objects = {});

// Subcategory of the common source on which F and G agree.
Subcategory equalizer_cat(const Functor& f, const Functor& g);

}  // namespace simpcat

#endif  // SIMPCAT_CAT_OPERATIONS_HPP_
