// The levelwise functors between bisimplicial sets and simplicial categories:
// π• (fundamental groupoid of each row) and N•iso (nerve of the maximal
// subgroupoid of each level), their diagonal and W-bar composites, and the
// two choices of ρ: sSet -> sCat.
#ifndef SIMPCAT_SCAT_LEVELWISE_HPP_
#define SIMPCAT_SCAT_LEVELWISE_HPP_

#include <string>

#include "simpcat/scat/simplicial_category.hpp"
#include "simpcat/sset/bisimplicial.hpp"
#include "simpcat/sset/simplicial_set.hpp"

namespace simpcat {

// Level n of π•B is π of row n (second index fixed). Only rows holding
// 2-simplices give the right groupoid, so the levels stop at the last row of
// horizontal length >= 2. Throws BoundExceeded naming the row that failed to
// close within closure_bound.
SimplicialCategory pi_levelwise(const BisimplicialSet& b, int closure_bound = 4096);
// π•(f) between the outputs of pi_levelwise on f's source and target.
SimplicialFunctor pi_levelwise_map(const BisimplicialMap& f, SCatPtr source, SCatPtr target,
                                   int closure_bound = 4096);

// Bidegree (p, n) holds the p-chains of iso(C_n); horizontal operators are
// the nerve's, vertical ones come from C's structure functors. Rows past C's
// bound are dropped from the shape.
BisimplicialSet nerve_iso_levelwise(const SimplicialCategory& c, const BidegreeShape& shape);
// On the staircase {p + n + 1 <= d}.
BisimplicialSet nerve_iso_levelwise(const SimplicialCategory& c, int d);
BisimplicialMap nerve_iso_levelwise_map(const SimplicialFunctor& f, BisetPtr source, BisetPtr target);

// diag N•iso C up to degree n (default: C's bound).
SimplicialSet diag_nerve_iso(const SimplicialCategory& c, int n = -1);
SimplicialMap diag_nerve_iso_map(const SimplicialFunctor& f, SSetPtr source, SSetPtr target);
// W-bar N•iso C up to degree n (default: C's bound).
SimplicialSet wbar_nerve_iso(const SimplicialCategory& c, int n = -1);

enum class RhoChoice { PiDStar, PiDec };
RhoChoice parse_rho(const std::string& name);  // "dstar" or "dec"
std::string to_string(RhoChoice rho);

// ρX = π•d⁎X or π•Dec X, with levels 0 .. bound(X) - 3.
SimplicialCategory rho(const SimplicialSet& x, RhoChoice choice, int closure_bound = 4096);
SimplicialFunctor rho_map(const SimplicialMap& f, RhoChoice choice, SCatPtr source, SCatPtr target,
                          int closure_bound = 4096);

}  // namespace simpcat

#endif  // SIMPCAT_SCAT_LEVELWISE_HPP_
