// Order-preserving maps between finite ordinals [n] = {0 < 1 < ... < n}.
//
// A map theta: [n] -> [m] is stored as the nondecreasing sequence
// (theta(0), ..., theta(n)). These are the simplices of the standard simplex
// and the arrows of the simplex category acting on simplicial sets.
#ifndef SIMPCAT_SSET_ORDINAL_HPP_
#define SIMPCAT_SSET_ORDINAL_HPP_

#include <cstdint>
#include <vector>

namespace simpcat::ordinal {

using Map = std::vector<int>;

inline int dim(const Map& theta) { return static_cast<int>(theta.size()) - 1; }

Map identity(int n);
// delta_i: [n-1] -> [n], misses i.
Map coface(int n, int i);
// sigma_j: [n+1] -> [n], hits j twice.
Map codegeneracy(int n, int j);
// after o before.
Map compose(const Map& after, const Map& before);

bool is_nondecreasing(const Map& theta, int codomain);
bool is_injective(const Map& theta);
bool is_surjective(const Map& theta, int codomain);

// theta = mono o epi, epi: [n] -> [k] surjective, mono: [k] -> [m] injective.
struct EpiMono {
  Map epi;
  Map mono;
};
EpiMono factor(const Map& theta);

// Domain positions j with epi(j) == epi(j+1), ascending; epi equals
// sigma_{j1} o sigma_{j2} o ... for this list.
std::vector<int> repeat_positions(const Map& epi);
// Indices of [m] missed by an injective map, descending.
std::vector<int> missed_descending(const Map& mono, int codomain);

// All maps [n] -> [m] in lexicographic order.
std::vector<Map> all_maps(int n, int m);
std::int64_t count_maps(int n, int m);

}  // namespace simpcat::ordinal

#endif  // SIMPCAT_SSET_ORDINAL_HPP_
