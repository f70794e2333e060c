// A decidable surrogate for weak equivalence on truncated data: π₀, integral
// homology through a degree, and abelianized edge-path groups.
#ifndef SIMPCAT_HOMOTOPY_PROBE_HPP_
#define SIMPCAT_HOMOTOPY_PROBE_HPP_

#include <string>

#include "simpcat/sset/simplicial_set.hpp"

namespace simpcat {

struct ProbeVerdict {
  enum class Kind { ConfirmedUpTo, Refuted, Inconclusive };
  Kind kind = Kind::Inconclusive;
  int degree = 0;          // k for ConfirmedUpTo, the witness degree for Refuted
  std::string invariant;   // for Refuted: which invariant mismatched
  std::string detail;

  bool confirmed() const { return kind == Kind::ConfirmedUpTo; }
  std::string to_string() const;
};

// ConfirmedUpTo(k) when f is a bijection on π₀, H_i(X) ≅ H_i(Y) and
// H_i(Cone f) = 0 for i <= k (so f_* is onto between isomorphic finitely
// generated groups, hence an isomorphism), and abelianized π₁ agrees on every
// component when both sides have 2-simplices. Never claims more than that.
ProbeVerdict weak_equivalence_probe(const SimplicialMap& f, int k);

}  // namespace simpcat

#endif  // SIMPCAT_HOMOTOPY_PROBE_HPP_
