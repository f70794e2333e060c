// Tensors of simplicial categories with simplicial sets through ρ, the
// disjoint basepoint, smash products, suspension and pointed cotensors.
#ifndef SIMPCAT_SCAT_POINTED_HPP_
#define SIMPCAT_SCAT_POINTED_HPP_

#include <cstdint>
#include <vector>

#include "simpcat/scat/colimits.hpp"
#include "simpcat/scat/levelwise.hpp"
#include "simpcat/scat/simplicial_category.hpp"
#include "simpcat/sset/simplicial_set.hpp"

namespace simpcat {

// C x ρX, on the levels both sides have.
SimplicialCategory tensor_rho(const SimplicialCategory& c, const SimplicialSet& x, RhoChoice rho,
                              int closure_bound = 4096);

// C with a disjoint terminal object added at every level, as object 0, which
// is the basepoint.
SimplicialCategory add_basepoint(const SimplicialCategory& c);

// C ∧ X: the colimit of C x ρX with ∗ x ρX and C x ρ(x0) collapsed to the
// basepoint. C and X must be pointed.
SCatCocone smash_cocone(const SimplicialCategory& c, const SimplicialSet& x, RhoChoice rho,
                        int bound = 100000, int closure_bound = 4096);
SimplicialCategory smash(const SimplicialCategory& c, const SimplicialSet& x, RhoChoice rho,
                         int bound = 100000, int closure_bound = 4096);
// C ⊙ X = C x ρX with ∗ x ρX collapsed; X unpointed. The diagram objects
// are (C x ρX, ρX, ∗); those of smash_cocone are (C x ρX, ρX, C, ∗).
SCatCocone odot_cocone(const SimplicialCategory& c, const SimplicialSet& x, RhoChoice rho,
                       int bound = 100000, int closure_bound = 4096);
SimplicialCategory odot(const SimplicialCategory& c, const SimplicialSet& x, RhoChoice rho,
                        int bound = 100000, int closure_bound = 4096);

// C ∧ S¹ with S¹ = Δ¹/∂Δ¹ at bound C.bound() + 3, so ρS¹ has C's levels.
SimplicialCategory suspend(const SimplicialCategory& c, RhoChoice rho = RhoChoice::PiDec,
                           int bound = 100000, int closure_bound = 4096);

// Level n: pointed simplicial functors ρX x Δⁿ -> C (Δⁿ as a discrete
// simplicial category, ρ(x0) x Δⁿ sent to the basepoint) and the pointed
// simplicial natural transformations between them. Faces and degeneracies
// precompose with the cosimplicial structure of Δ•. Levels stop at the
// smaller of C's and ρX's bounds. Throws BoundExceeded past `cap` candidate
// assignments in any one search.
struct Cotensor {
  SimplicialCategory category;
  // functors[n][k]: object k of level n as levelwise maps out of ρX x Δⁿ.
  std::vector<std::vector<std::vector<FunctorMap>>> functors;
};
Cotensor cotensor(const SimplicialCategory& c, const SimplicialSet& x, RhoChoice rho = RhoChoice::PiDec,
                  std::uint64_t cap = 1000000, int closure_bound = 4096);
// Cotensor by S¹ at bound C.bound() + 3.
Cotensor loop(const SimplicialCategory& c, RhoChoice rho = RhoChoice::PiDec, std::uint64_t cap = 1000000,
              int closure_bound = 4096);

}  // namespace simpcat

#endif  // SIMPCAT_SCAT_POINTED_HPP_
