// Normalized chains, integral homology and the mapping cone of a simplicial map.
#ifndef SIMPCAT_HOMOTOPY_HOMOLOGY_HPP_
#define SIMPCAT_HOMOTOPY_HOMOLOGY_HPP_

#include <string>
#include <vector>

#include "simpcat/homotopy/smith.hpp"
#include "simpcat/sset/simplicial_set.hpp"

namespace simpcat {

struct AbelianGroupDescriptor {
  int free_rank = 0;
  std::vector<Integer> torsion;  // each > 1, each dividing the next

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;  // "0", "Z", "Z^2 + Z/2", ...
  friend bool operator==(const AbelianGroupDescriptor&, const AbelianGroupDescriptor&) = default;

  static AbelianGroupDescriptor free(int rank) { return {rank, {}}; }
  static AbelianGroupDescriptor cyclic(int order) { return {0, {Integer(order)}}; }
};

// Cokernel of a relation matrix with `generators` columns, given its invariants.
AbelianGroupDescriptor cokernel(int generators, const std::vector<Integer>& invariants);

struct ChainComplex {
  std::vector<int> ranks;               // C_0 .. C_top
  std::vector<SparseMatrix> boundary;   // boundary[n]: C_n -> C_{n-1}; boundary[0] empty

  int top() const { return static_cast<int>(ranks.size()) - 1; }
  // ∂∂ = 0, checked exactly.
  bool is_complex() const;
  // H_0 .. H_max_degree; needs max_degree < top().
  std::vector<AbelianGroupDescriptor> homology(int max_degree) const;
};

// Degree n basis: the nondegenerate n-simplices of X in id order.
ChainComplex normalized_chains(const SimplicialSet& x);
// The chain map f_# on normalized chains, degree n, as a sparse matrix.
SparseMatrix chain_map(const SimplicialMap& f, int n);
// Cone(f)_n = C_{n-1}(X) + C_n(Y), up to degree `top`.
ChainComplex mapping_cone(const SimplicialMap& f, int top);

// H_i(X) for i <= bound - 1.
AbelianGroupDescriptor homology(const SimplicialSet& x, int i);
// H_0 .. H_max_degree, max_degree <= bound - 1.
std::vector<AbelianGroupDescriptor> homology_up_to(const SimplicialSet& x, int max_degree);
// Reduced homology (H_0 loses one free summand when X is non-empty).
std::vector<AbelianGroupDescriptor> reduced_homology_up_to(const SimplicialSet& x, int max_degree);

}  // namespace simpcat

#endif  // SIMPCAT_HOMOTOPY_HOMOLOGY_HPP_
