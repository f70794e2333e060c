// Pointed mapping spaces into diagonal nerves and the K-theory report.
#ifndef SIMPCAT_SPECTRA_KTHEORY_HPP_
#define SIMPCAT_SPECTRA_KTHEORY_HPP_

#include <string>
#include <vector>

#include "simpcat/homotopy/fundamental.hpp"
#include "simpcat/homotopy/homology.hpp"
#include "simpcat/scat/simplicial_category.hpp"
#include "simpcat/sset/simplicial_set.hpp"

namespace simpcat {

// Map(X, diag N iso C)_n = pointed maps X x Δⁿ -> diag N iso C, i.e. maps
// sending {x0} x Δⁿ to the basepoint, for n <= n_max. Needs C's bound at least
// dim X + n_max. Faces and degeneracies precompose with id x δⁱ and id x σʲ.
struct MappingSpace {
  SimplicialSet space;
  SSetPtr domain;                                      // X truncated to dim X + n_max
  SSetPtr target;                                      // diag N iso C
  std::vector<std::vector<std::vector<std::vector<int>>>> maps;  // maps[n][k]: image table
};
MappingSpace mapping_space(const SimplicialSet& x, const SimplicialCategory& c, int n_max,
                           std::uint64_t cap = 1000000);
// For X = S⁰ (two points, pointed at 0): evaluation at (x1, ι_n), a simplicial
// map from the mapping space into diag N iso C.
SimplicialMap evaluate_s0(const MappingSpace& m);

struct KReport {
  int components = 0;                  // K₀ = π₀
  int basepoint_class = 0;             // label of the basepoint component
  PresentedGroup pi1;                  // K₁ at the basepoint
  AbelianGroupDescriptor pi1_abelian;
  AbelianGroupDescriptor h1_basepoint; // H₁ of the basepoint component
  // H_i of the diagonal nerve for 2 <= i <= k; homology approximation, not K_i.
  std::vector<AbelianGroupDescriptor> higher_homology;
  std::string caveat;

  bool consistent() const { return pi1_abelian == h1_basepoint; }
};
// Computed on diag N iso C up to degree min(k + 1, C's bound).
KReport k_groups(const SimplicialCategory& c, int k);

}  // namespace simpcat

#endif  // SIMPCAT_SPECTRA_KTHEORY_HPP_
